use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use super::word::{Alphabet, Letter, Word};
use crate::scalars::Coeff;

/// Finite linear combination of words. No zero coefficient is stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NCPoly<C> {
    terms: BTreeMap<Word, C>,
}

impl<C: Coeff> Default for NCPoly<C> {
    fn default() -> Self {
        NCPoly::zero()
    }
}

impl<C: Coeff> NCPoly<C> {
    pub fn zero() -> Self {
        NCPoly { terms: BTreeMap::new() }
    }

    pub fn term(w: Word, c: C) -> Self {
        let mut out = NCPoly::zero();
        out.add_term(w, c);
        out
    }

    pub fn constant(c: C) -> Self {
        NCPoly::term(Word::empty(), c)
    }

    pub fn word(w: Word, one: &C) -> Self {
        NCPoly::term(w, one.one_like())
    }

    pub fn letter(alph: &Alphabet, l: Letter, one: &C) -> Self {
        NCPoly::word(alph.single(l), one)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Word, &C)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> BTreeMap<Word, C> {
        self.terms
    }

    pub fn coeff(&self, w: &Word) -> Option<&C> {
        self.terms.get(w)
    }

    /// Largest word in the monomial order with its coefficient.
    pub fn leading(&self) -> Option<(&Word, &C)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, w: Word, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = o.get().c_add(&c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add_scaled(&mut self, o: &NCPoly<C>, c: &C) {
        for (w, d) in &o.terms {
            self.add_term(w.clone(), d.c_mul(c));
        }
    }

    pub fn add(&self, o: &NCPoly<C>) -> NCPoly<C> {
        let mut out = self.clone();
        for (w, c) in &o.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, o: &NCPoly<C>) -> NCPoly<C> {
        let mut out = self.clone();
        for (w, c) in &o.terms {
            out.add_term(w.clone(), c.c_neg());
        }
        out
    }

    pub fn neg(&self) -> NCPoly<C> {
        NCPoly { terms: self.terms.iter().map(|(w, c)| (w.clone(), c.c_neg())).collect() }
    }

    pub fn scale(&self, c: &C) -> NCPoly<C> {
        let mut out = NCPoly::zero();
        for (w, d) in &self.terms {
            out.add_term(w.clone(), d.c_mul(c));
        }
        out
    }

    pub fn mul(&self, o: &NCPoly<C>) -> NCPoly<C> {
        let mut out = NCPoly::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &o.terms {
                out.add_term(a.concat(b), ca.c_mul(cb));
            }
        }
        out
    }

    pub fn left_mul_word(&self, w: &Word) -> NCPoly<C> {
        NCPoly { terms: self.terms.iter().map(|(b, c)| (w.concat(b), c.clone())).collect() }
    }

    pub fn right_mul_word(&self, w: &Word) -> NCPoly<C> {
        NCPoly { terms: self.terms.iter().map(|(a, c)| (a.concat(w), c.clone())).collect() }
    }

    pub fn pow(&self, n: usize, one: &C) -> NCPoly<C> {
        let mut acc = NCPoly::constant(one.one_like());
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// `ab − ba`.
    pub fn commutator(&self, o: &NCPoly<C>) -> NCPoly<C> {
        self.mul(o).sub(&o.mul(self))
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> NCPoly<D> {
        let mut out = NCPoly::zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), f(c));
        }
        out
    }

    pub fn max_len(&self) -> usize {
        self.terms.keys().map(|w| w.len()).max().unwrap_or(0)
    }

    /// Canonical text, largest word first, e.g. `2*x.y.g + g.g`.
    pub fn render(&self, alph: &Alphabet) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        self.terms
            .iter()
            .rev()
            .map(|(w, c)| render_term(alph, std::slice::from_ref(w), c))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// `coef*w1 ⊗ w2 ...` with unit coefficients and unit words elided where unambiguous.
pub(crate) fn render_term<C: Coeff>(alph: &Alphabet, words: &[Word], c: &C) -> String {
    let body = words.iter().map(|w| alph.render_word(w)).collect::<Vec<_>>().join(" ⊗ ");
    let all_unit = words.len() == 1 && words[0].is_empty();
    if c.is_one() {
        return body;
    }
    let cs = if c.is_compound() { format!("({})", c.render()) } else { c.render() };
    if all_unit {
        cs
    } else {
        format!("{}*{}", cs, body)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::Fp;

    #[test]
    fn product_examples() {
        let a = Alphabet::new(&["x", "y"], &[]).unwrap();
        let one = Fp::one(3);
        let x = NCPoly::letter(&a, a.letter("x").unwrap(), &one);
        let y = NCPoly::letter(&a, a.letter("y").unwrap(), &one);
        let f = x.add(&y).mul(&x.sub(&y));
        assert_eq!(f.render(&a), "x.x + 2*x.y + y.x + 2*y.y");
        let unit = NCPoly::constant(one);
        assert_eq!(unit.mul(&x), x);
    }
}
