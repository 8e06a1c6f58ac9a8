use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use super::poly::{render_term, NCPoly};
use super::word::{Alphabet, Word};
use crate::error::{Error, Result};
use crate::scalars::Coeff;

/// Element of a tensor power of the free algebra. No zero coefficient is stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tensor<C> {
    arity: usize,
    terms: BTreeMap<Vec<Word>, C>,
}

impl<C: Coeff> Tensor<C> {
    pub fn zero(arity: usize) -> Self {
        Tensor { arity, terms: BTreeMap::new() }
    }

    pub fn basic(words: Vec<Word>, c: C) -> Self {
        let mut out = Tensor::zero(words.len());
        out.add_term(words, c);
        out
    }

    /// `f1 ⊗ f2 ⊗ ...`, expanded bilinearly.
    pub fn pure(factors: &[&NCPoly<C>]) -> Self {
        if factors.iter().any(|f| f.is_zero()) {
            return Tensor::zero(factors.len());
        }
        let unit = factors[0].terms().next().map(|(_, c)| c.one_like()).expect("nonzero factor");
        let mut acc: Vec<(Vec<Word>, C)> = vec![(Vec::new(), unit)];
        for f in factors {
            let mut next = Vec::with_capacity(acc.len() * f.len());
            for (ws, c) in &acc {
                for (w, d) in f.terms() {
                    let mut v = ws.clone();
                    v.push(w.clone());
                    next.push((v, c.c_mul(d)));
                }
            }
            acc = next;
        }
        let mut out = Tensor::zero(factors.len());
        for (ws, c) in acc {
            out.add_term(ws, c);
        }
        out
    }

    pub fn arity(&self) -> usize {
        self.arity
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

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Word>, &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, ws: &[Word]) -> Option<&C> {
        self.terms.get(ws)
    }

    pub fn add_term(&mut self, ws: Vec<Word>, c: C) {
        debug_assert_eq!(ws.len(), self.arity);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(ws) {
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

    pub fn add_scaled(&mut self, o: &Tensor<C>, c: &C) {
        for (ws, d) in &o.terms {
            self.add_term(ws.clone(), d.c_mul(c));
        }
    }

    pub fn add(&self, o: &Tensor<C>) -> Result<Tensor<C>> {
        self.check(o)?;
        let mut out = self.clone();
        for (ws, c) in &o.terms {
            out.add_term(ws.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, o: &Tensor<C>) -> Result<Tensor<C>> {
        self.check(o)?;
        let mut out = self.clone();
        for (ws, c) in &o.terms {
            out.add_term(ws.clone(), c.c_neg());
        }
        Ok(out)
    }

    pub fn neg(&self) -> Tensor<C> {
        Tensor { arity: self.arity, terms: self.terms.iter().map(|(w, c)| (w.clone(), c.c_neg())).collect() }
    }

    pub fn scale(&self, c: &C) -> Tensor<C> {
        let mut out = Tensor::zero(self.arity);
        out.add_scaled(self, c);
        out
    }

    /// Componentwise product `(a⊗b)(a'⊗b') = aa'⊗bb'`.
    pub fn mul(&self, o: &Tensor<C>) -> Result<Tensor<C>> {
        self.check(o)?;
        let mut out = Tensor::zero(self.arity);
        for (a, ca) in &self.terms {
            for (b, cb) in &o.terms {
                let ws = a.iter().zip(b.iter()).map(|(u, v)| u.concat(v)).collect();
                out.add_term(ws, ca.c_mul(cb));
            }
        }
        Ok(out)
    }

    fn check(&self, o: &Tensor<C>) -> Result<()> {
        if self.arity != o.arity && !self.is_zero() && !o.is_zero() {
            return Err(Error::ArityMismatch { expected: self.arity, got: o.arity });
        }
        Ok(())
    }

    /// Replaces factor `i` of each term by `f(word)`, a tensor of arity `k`.
    pub fn expand_factor(&self, i: usize, k: usize, mut f: impl FnMut(&Word) -> Tensor<C>) -> Tensor<C> {
        let mut out = Tensor::zero(self.arity - 1 + k);
        for (ws, c) in &self.terms {
            let img = f(&ws[i]);
            for (iw, d) in img.terms() {
                let mut v: Vec<Word> = Vec::with_capacity(out.arity);
                v.extend_from_slice(&ws[..i]);
                v.extend(iw.iter().cloned());
                v.extend_from_slice(&ws[i + 1..]);
                out.add_term(v, c.c_mul(d));
            }
        }
        out
    }

    /// Replaces factor `i` of each term by the polynomial `f(word)`.
    pub fn map_factor(&self, i: usize, mut f: impl FnMut(&Word) -> NCPoly<C>) -> Tensor<C> {
        self.expand_factor(i, 1, |w| {
            let p = f(w);
            let mut t = Tensor::zero(1);
            for (u, c) in p.terms() {
                t.add_term(vec![u.clone()], c.clone());
            }
            t
        })
    }

    /// Multiplies the factors of each term together.
    pub fn multiply_out(&self) -> NCPoly<C> {
        let mut out = NCPoly::zero();
        for (ws, c) in &self.terms {
            let mut w = Word::empty();
            for u in ws {
                w = w.concat(u);
            }
            out.add_term(w, c.clone());
        }
        out
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> Tensor<D> {
        let mut out = Tensor::zero(self.arity);
        for (ws, c) in &self.terms {
            out.add_term(ws.clone(), f(c));
        }
        out
    }

    pub fn render(&self, alph: &Alphabet) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        self.terms.iter().rev().map(|(ws, c)| render_term(alph, ws, c)).collect::<Vec<_>>().join(" + ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::Fp;

    #[test]
    fn tensor_square_expansion() {
        let a = Alphabet::new(&["g", "x"], &["g"]).unwrap();
        let one = Fp::one(2);
        let x = NCPoly::letter(&a, a.letter("x").unwrap(), &one);
        let g = NCPoly::letter(&a, a.letter("g").unwrap(), &one);
        let u = NCPoly::constant(one);
        let d = Tensor::pure(&[&x, &u]).add(&Tensor::pure(&[&g, &x])).unwrap();
        let sq = d.mul(&d).unwrap();
        assert_eq!(sq.render(&a), "x.x ⊗ 1 + g.x ⊗ x + x.g ⊗ x + g.g ⊗ x.x");
        let xx = Tensor::pure(&[&x, &u]).mul(&Tensor::pure(&[&u, &x])).unwrap();
        assert_eq!(xx, Tensor::pure(&[&x, &x]));
    }
}
