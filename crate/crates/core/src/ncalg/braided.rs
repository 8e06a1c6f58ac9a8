use super::poly::NCPoly;
use super::tensor::Tensor;
use super::word::{Alphabet, Word};
use crate::error::{Error, Result};
use crate::scalars::Coeff;

/// Exponent tuple of an element of a finite abelian group.
pub type GroupElt = Vec<u32>;

/// Grading and action of an abelian group on the generators of a free algebra.
///
/// `action[k][l]` is the image of letter `l` under group generator `k`; the
/// action extends to words multiplicatively.
#[derive(Debug, Clone)]
pub struct BraidingData<C> {
    orders: Vec<u32>,
    grading: Vec<Option<GroupElt>>,
    action: Vec<Vec<NCPoly<C>>>,
}

impl<C: Coeff> BraidingData<C> {
    pub fn new(orders: Vec<u32>, grading: Vec<Option<GroupElt>>, action: Vec<Vec<NCPoly<C>>>) -> Self {
        BraidingData { orders, grading, action }
    }

    /// Every letter graded by the identity and fixed by the group.
    pub fn trivial(alph: &Alphabet, orders: Vec<u32>, one: &C) -> Self {
        let n = orders.len();
        let grading = alph.letters().map(|_| Some(vec![0; n])).collect();
        let action = (0..n).map(|_| alph.letters().map(|l| NCPoly::letter(alph, l, one)).collect()).collect();
        BraidingData { orders, grading, action }
    }

    pub fn orders(&self) -> &[u32] {
        &self.orders
    }

    pub fn identity(&self) -> GroupElt {
        vec![0; self.orders.len()]
    }

    pub fn compose(&self, a: &GroupElt, b: &GroupElt) -> GroupElt {
        a.iter().zip(b).zip(&self.orders).map(|((x, y), n)| (x + y) % n).collect()
    }

    pub fn word_grading(&self, alph: &Alphabet, w: &Word) -> Result<GroupElt> {
        let mut acc = self.identity();
        for &l in w.letters() {
            let g = self.grading[l as usize].as_ref().ok_or_else(|| Error::InhomogeneousWord(alph.render_word(w)))?;
            acc = self.compose(&acc, g);
        }
        Ok(acc)
    }

    fn act_gen_word(&self, k: usize, w: &Word, one: &C) -> NCPoly<C> {
        let mut acc = NCPoly::constant(one.one_like());
        for &l in w.letters() {
            acc = acc.mul(&self.action[k][l as usize]);
        }
        acc
    }

    fn act_gen(&self, k: usize, f: &NCPoly<C>) -> NCPoly<C> {
        let mut out = NCPoly::zero();
        for (w, c) in f.terms() {
            out.add_scaled(&self.act_gen_word(k, w, c), c);
        }
        out
    }

    /// Action of the group element `e` on `f`.
    pub fn act(&self, e: &GroupElt, f: &NCPoly<C>) -> NCPoly<C> {
        let mut cur = f.clone();
        for (k, &n) in e.iter().enumerate() {
            for _ in 0..n {
                cur = self.act_gen(k, &cur);
            }
        }
        cur
    }

    /// `(a⊗b)(a'⊗b') = a(b₋₁·a')⊗b₀b'` on homogeneous words, extended bilinearly.
    pub fn braided_mul(&self, alph: &Alphabet, s: &Tensor<C>, t: &Tensor<C>) -> Result<Tensor<C>> {
        if s.arity() != 2 && !s.is_zero() {
            return Err(Error::ArityMismatch { expected: 2, got: s.arity() });
        }
        if t.arity() != 2 && !t.is_zero() {
            return Err(Error::ArityMismatch { expected: 2, got: t.arity() });
        }
        let mut out = Tensor::zero(2);
        for (ab, c) in s.terms() {
            let gamma = self.word_grading(alph, &ab[1])?;
            for (ab2, d) in t.terms() {
                let moved = self.act(&gamma, &NCPoly::word(ab2[0].clone(), c));
                let right = ab[1].concat(&ab2[1]);
                let cd = c.c_mul(d);
                for (w, e) in moved.terms() {
                    out.add_term(vec![ab[0].concat(w), right.clone()], cd.c_mul(e));
                }
            }
        }
        Ok(out)
    }

    pub fn braided_pow(&self, alph: &Alphabet, s: &Tensor<C>, n: usize, one: &C) -> Result<Tensor<C>> {
        let mut acc = Tensor::basic(vec![Word::empty(), Word::empty()], one.one_like());
        for _ in 0..n {
            acc = self.braided_mul(alph, &acc, s)?;
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::Fp;

    #[test]
    fn trivial_data_matches_plain_product() {
        let a = Alphabet::new(&["x", "y"], &[]).unwrap();
        let one = Fp::one(2);
        let bd = BraidingData::trivial(&a, vec![2], &one);
        let x = NCPoly::letter(&a, 1, &one);
        let y = NCPoly::letter(&a, 0, &one);
        let u = NCPoly::constant(one);
        let s = Tensor::pure(&[&x, &y]).add(&Tensor::pure(&[&u, &x])).unwrap();
        let t = Tensor::pure(&[&y, &x.mul(&y)]);
        assert_eq!(bd.braided_mul(&a, &s, &t).unwrap(), s.mul(&t).unwrap());
    }
}
