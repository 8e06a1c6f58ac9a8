//! Cobar complexes of finite-dimensional augmented coalgebras over F_p.
//!
//! `B⁺` has basis `b_w = w − ε(w)·1` for the non-unit basis words `w`, and
//! `Δ̄(b_w)` is the part of `Δ(w)` with both factors non-unit. Degree-`n`
//! cochains are indexed by `n`-tuples of `B⁺` indices, lexicographically.

mod checks;

use std::collections::HashMap;
use std::sync::Arc;

pub use checks::{
    cobar_report, ext_nichols_check, hopf_subalgebra, hopf_subalgebra_h2, hsmash_check, omega_tensor,
    truncated_polynomial, CobarReport, CohomologyDims, ExtNicholsCheck, HsmashCheck,
};

use crate::error::{Error, Result};
use crate::hopf::{HopfContext, HopfPresentation};
use crate::linalg::Matrix;
use crate::ncalg::{Alphabet, GroupElt, Tensor, Word};
use crate::scalars::{Coeff, Fp};
use crate::ydnichols::{braided_delta_with, BraidedHopf};

/// Default bound on `(dim B⁺)^(n+1)` for a degree-`n` computation.
pub const DEFAULT_CAP: u64 = 50_000;

type Sparse2 = Vec<(usize, usize, Fp)>;

#[derive(Debug, Clone)]
pub struct FiniteCoalgebra {
    pub p: u32,
    pub alphabet: Arc<Alphabet>,
    pub basis: Vec<Word>,
    pub unit_index: usize,
    /// `delta[i]` lists `(j, k, c)` with `Δ(basis[i]) = Σ c·basis[j]⊗basis[k]`.
    pub delta: Vec<Sparse2>,
    pub counit: Vec<Fp>,
    pub adams: Option<Vec<u32>>,
    /// Group orders and the grading of each basis word.
    pub grading: Option<(Vec<u32>, Vec<GroupElt>)>,
    index: HashMap<Word, usize>,
    plus_of: Vec<Option<usize>>,
    plus_words: Vec<usize>,
    delta_bar: Vec<Sparse2>,
}

/// The differential `∂^n : (B⁺)^{⊗n} → (B⁺)^{⊗(n+1)}`.
#[derive(Debug, Clone)]
pub struct CobarDiff {
    pub n: usize,
    pub matrix: Matrix,
}

fn word_degree(w: &Word, letter_deg: &[u32]) -> u32 {
    w.letters().iter().map(|&l| letter_deg[l as usize]).sum()
}

fn letter_degrees(alph: &Alphabet, degrees: &[(&str, u32)]) -> Result<Vec<u32>> {
    let mut out = vec![0; alph.len()];
    let mut seen = vec![false; alph.len()];
    for (n, d) in degrees {
        let l = alph.letter(n)?;
        out[l as usize] = *d;
        seen[l as usize] = true;
    }
    for l in alph.letters() {
        if !seen[l as usize] && !alph.is_grouplike(l) {
            return Err(Error::UnknownName(format!("no Adams degree for {}", alph.name(l))));
        }
    }
    Ok(out)
}

impl FiniteCoalgebra {
    /// Validates counit, coassociativity and Adams homogeneity of `Δ`.
    pub fn new(
        alphabet: Arc<Alphabet>,
        basis: Vec<Word>,
        deltas: &[Tensor<Fp>],
        counit: Vec<Fp>,
        adams: Option<Vec<u32>>,
        grading: Option<(Vec<u32>, Vec<GroupElt>)>,
    ) -> Result<Self> {
        let n = basis.len();
        if deltas.len() != n || counit.len() != n {
            return Err(Error::ArityMismatch { expected: n, got: deltas.len().min(counit.len()) });
        }
        let p = counit.first().map(|c| c.p()).ok_or_else(|| Error::IncompatibleData("empty coalgebra".into()))?;
        let index: HashMap<Word, usize> = basis.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();
        let unit_index =
            *index.get(&Word::empty()).ok_or_else(|| Error::IncompatibleData("basis lacks the unit".into()))?;
        let lookup = |w: &Word| {
            index.get(w).copied().ok_or_else(|| Error::IncompatibleData(format!("{} is not a basis word", alphabet.render_word(w))))
        };
        let mut delta = Vec::with_capacity(n);
        for t in deltas {
            if t.arity() != 2 {
                return Err(Error::ArityMismatch { expected: 2, got: t.arity() });
            }
            let mut d = Vec::new();
            for (ws, c) in t.terms() {
                d.push((lookup(&ws[0])?, lookup(&ws[1])?, *c));
            }
            delta.push(d);
        }
        let mut plus_of = vec![None; n];
        let mut plus_words = Vec::with_capacity(n.saturating_sub(1));
        for i in 0..n {
            if i != unit_index {
                plus_of[i] = Some(plus_words.len());
                plus_words.push(i);
            }
        }
        let delta_bar = plus_words
            .iter()
            .map(|&i| {
                delta[i]
                    .iter()
                    .filter_map(|&(j, k, c)| Some((plus_of[j]?, plus_of[k]?, c)))
                    .collect()
            })
            .collect();
        let b = FiniteCoalgebra { p, alphabet, basis, unit_index, delta, counit, adams, grading, index, plus_of, plus_words, delta_bar };
        b.validate()?;
        Ok(b)
    }

    fn validate(&self) -> Result<()> {
        let n = self.basis.len();
        let zero = Fp::zero(self.p);
        let render = |i: usize| self.alphabet.render_word(&self.basis[i]);
        for i in 0..n {
            let mut left = vec![zero; n];
            let mut right = vec![zero; n];
            for &(j, k, c) in &self.delta[i] {
                left[k] = left[k] + c * self.counit[j];
                right[j] = right[j] + c * self.counit[k];
            }
            for (m, v) in [left, right].iter().enumerate() {
                for (j, c) in v.iter().enumerate() {
                    let want = if j == i { Fp::one(self.p) } else { zero };
                    if *c != want {
                        let side = if m == 0 { "left" } else { "right" };
                        return Err(Error::IncompatibleData(format!("{} counit fails on {}", side, render(i))));
                    }
                }
            }
            let mut acc: HashMap<(usize, usize, usize), Fp> = HashMap::new();
            for &(j, k, c) in &self.delta[i] {
                for &(a, b, d) in &self.delta[j] {
                    let e = acc.entry((a, b, k)).or_insert(zero);
                    *e = *e + c * d;
                }
                for &(a, b, d) in &self.delta[k] {
                    let e = acc.entry((j, a, b)).or_insert(zero);
                    *e = *e - c * d;
                }
            }
            if acc.values().any(|c| !c.is_zero()) {
                return Err(Error::IncompatibleData(format!("Δ is not coassociative on {}", render(i))));
            }
            if let Some(ad) = &self.adams {
                if self.delta[i].iter().any(|&(j, k, _)| ad[j] + ad[k] != ad[i]) {
                    return Err(Error::IncompatibleData(format!("Δ breaks the Adams grading on {}", render(i))));
                }
            }
            if let Some((orders, gr)) = &self.grading {
                let ok = self.delta[i].iter().all(|&(j, k, _)| {
                    gr[j].iter().zip(&gr[k]).zip(orders).map(|((a, b), o)| (a + b) % o).eq(gr[i].iter().copied())
                });
                if !ok {
                    return Err(Error::IncompatibleData(format!("Δ breaks the group grading on {}", render(i))));
                }
            }
        }
        Ok(())
    }

    /// The coalgebra underlying a confluent Hopf presentation, on its normal-form basis.
    pub fn from_hopf(h: &HopfPresentation<Fp>, degrees: Option<&[(&str, u32)]>) -> Result<Self> {
        h.rs.require_confluent()?;
        let alph = h.rs.alphabet().clone();
        let basis = h.rs.enumerate_basis()?;
        let mut ctx = HopfContext::new(h);
        let deltas: Vec<Tensor<Fp>> = basis.iter().map(|w| ctx.delta_word(w)).collect();
        let counit = basis.iter().map(|w| h.counit_word(w)).collect();
        let adams = match degrees {
            Some(d) => {
                let ld = letter_degrees(&alph, d)?;
                Some(basis.iter().map(|w| word_degree(w, &ld)).collect())
            }
            None => None,
        };
        FiniteCoalgebra::new(alph, basis, &deltas, counit, adams, None)
    }

    /// The braided coalgebra of `r`, graded by its group.
    pub fn from_braided(r: &BraidedHopf<Fp>, degrees: Option<&[(&str, u32)]>) -> Result<Self> {
        r.rs.require_confluent()?;
        let alph = r.rs.alphabet().clone();
        let one = *r.rs.one();
        let basis = r.rs.enumerate_basis()?;
        let deltas = basis
            .iter()
            .map(|w| braided_delta_with(&crate::ncalg::NCPoly::word(w.clone(), &one), &r.rs, &r.braiding, &r.coproduct))
            .collect::<Result<Vec<_>>>()?;
        let counit = basis.iter().map(|w| if w.is_empty() { one } else { Fp::zero(one.p()) }).collect();
        let adams = match degrees {
            Some(d) => {
                let ld = letter_degrees(&alph, d)?;
                Some(basis.iter().map(|w| word_degree(w, &ld)).collect())
            }
            None => None,
        };
        let gr = basis.iter().map(|w| r.braiding.word_grading(&alph, w)).collect::<Result<Vec<_>>>()?;
        FiniteCoalgebra::new(alph, basis, &deltas, counit, adams, Some((r.braiding.orders().to_vec(), gr)))
    }

    /// The subcoalgebra on the basis words accepted by `keep`.
    pub fn subcoalgebra(&self, keep: impl Fn(&Word) -> bool) -> Result<Self> {
        let kept: Vec<usize> = (0..self.basis.len()).filter(|&i| keep(&self.basis[i])).collect();
        let mut deltas = Vec::with_capacity(kept.len());
        for &i in &kept {
            let mut t = Tensor::zero(2);
            for &(j, k, c) in &self.delta[i] {
                if !keep(&self.basis[j]) || !keep(&self.basis[k]) {
                    return Err(Error::IncompatibleData(format!(
                        "Δ({}) leaves the subcoalgebra",
                        self.alphabet.render_word(&self.basis[i])
                    )));
                }
                t.add_term(vec![self.basis[j].clone(), self.basis[k].clone()], c);
            }
            deltas.push(t);
        }
        let pick = |v: &Vec<u32>| kept.iter().map(|&i| v[i]).collect::<Vec<_>>();
        FiniteCoalgebra::new(
            self.alphabet.clone(),
            kept.iter().map(|&i| self.basis[i].clone()).collect(),
            &deltas,
            kept.iter().map(|&i| self.counit[i]).collect(),
            self.adams.as_ref().map(pick),
            self.grading.as_ref().map(|(o, g)| (o.clone(), kept.iter().map(|&i| g[i].clone()).collect())),
        )
    }

    pub fn plus_dim(&self) -> usize {
        self.plus_words.len()
    }

    fn tuple(&self, n: usize, mut t: usize) -> Vec<usize> {
        let d = self.plus_dim();
        let mut out = vec![0; n];
        for k in (0..n).rev() {
            out[k] = t % d;
            t /= d;
        }
        out
    }

    fn untuple(&self, idx: &[usize]) -> usize {
        idx.iter().fold(0, |acc, &i| acc * self.plus_dim() + i)
    }

    fn cochain_count(&self, n: usize, cap: u64) -> Result<usize> {
        let dim = (self.plus_dim() as u64).checked_pow(n as u32).unwrap_or(u64::MAX);
        if dim > cap {
            return Err(Error::DimensionBlowup { dim, cap });
        }
        Ok(dim as usize)
    }

    /// `∂^n` applied to the basis cochain with tuple index `t`.
    pub fn diff_column(&self, n: usize, t: usize) -> Vec<(usize, Fp)> {
        let idx = self.tuple(n, t);
        let mut out = Vec::new();
        for i in 0..n {
            let negate = n >= 2 && i % 2 == 0;
            for &(a, b, c) in &self.delta_bar[idx[i]] {
                let mut v = Vec::with_capacity(n + 1);
                v.extend_from_slice(&idx[..i]);
                v.push(a);
                v.push(b);
                v.extend_from_slice(&idx[i + 1..]);
                out.push((self.untuple(&v), if negate { -c } else { c }));
            }
        }
        out
    }

    fn apply(&self, n: usize, v: &[Fp]) -> Vec<Fp> {
        let mut out = vec![Fp::zero(self.p); v.len() * self.plus_dim()];
        for (t, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (r, d) in self.diff_column(n, t) {
                out[r] = out[r] + *c * d;
            }
        }
        out
    }

    /// `∂¹, …, ∂^max_degree` as dense matrices.
    pub fn build_complex(&self, max_degree: usize, cap: u64) -> Result<Vec<CobarDiff>> {
        if max_degree > 3 {
            return Err(Error::Inadmissible(format!("cobar degree {} exceeds 3", max_degree)));
        }
        self.cochain_count(max_degree + 1, cap)?;
        Ok((1..=max_degree)
            .map(|n| {
                let cols = self.plus_dim().pow(n as u32);
                let mut m = Matrix::zeros(cols * self.plus_dim(), cols, self.p);
                for t in 0..cols {
                    for (r, c) in self.diff_column(n, t) {
                        m.add_at(r, t, c.value());
                    }
                }
                CobarDiff { n, matrix: m }
            })
            .collect())
    }

    fn tuple_adams(&self, n: usize, t: usize) -> Option<u32> {
        let ad = self.adams.as_ref()?;
        Some(self.tuple(n, t).iter().map(|&i| ad[self.plus_words[i]]).sum())
    }

    fn tuple_coinvariant(&self, n: usize, t: usize) -> Option<bool> {
        let (orders, gr) = self.grading.as_ref()?;
        let mut acc = vec![0u32; orders.len()];
        for i in self.tuple(n, t) {
            for (k, e) in gr[self.plus_words[i]].iter().enumerate() {
                acc[k] = (acc[k] + e) % orders[k];
            }
        }
        Some(acc.iter().all(|&e| e == 0))
    }

    /// Rank of `∂^n` on the cochains selected by `keep`, which must be a union of
    /// homogeneous components of a grading preserved by `∂`.
    fn restricted_rank(&self, n: usize, keep: &dyn Fn(usize, usize) -> bool, cap: u64) -> Result<usize> {
        if n == 0 {
            return Ok(0);
        }
        let rows_total = self.cochain_count(n + 1, cap)?;
        let cols: Vec<usize> = (0..self.plus_dim().pow(n as u32)).filter(|&t| keep(n, t)).collect();
        let rows: HashMap<usize, usize> =
            (0..rows_total).filter(|&t| keep(n + 1, t)).enumerate().map(|(i, t)| (t, i)).collect();
        let mut m = Matrix::zeros(rows.len(), cols.len(), self.p);
        for (j, &t) in cols.iter().enumerate() {
            for (r, c) in self.diff_column(n, t) {
                let i = rows.get(&r).ok_or_else(|| Error::IncompatibleData("∂ leaves the graded piece".into()))?;
                m.add_at(*i, j, c.value());
            }
        }
        Ok(m.rank())
    }

    fn restricted_h(&self, n: usize, keep: &dyn Fn(usize, usize) -> bool, cap: u64) -> Result<usize> {
        if n == 0 {
            return Ok(keep(0, 0) as usize);
        }
        let size = (0..self.cochain_count(n, cap)?).filter(|&t| keep(n, t)).count();
        Ok(size - self.restricted_rank(n, keep, cap)? - self.restricted_rank(n - 1, keep, cap)?)
    }

    /// `dim H^n(ΩB)`.
    pub fn cohomology_dim(&self, n: usize, cap: u64) -> Result<usize> {
        self.restricted_h(n, &|_, _| true, cap)
    }

    /// `dim H^{n,j}(ΩB)`, the Adams-degree-`j` part.
    pub fn graded_cohomology_dim(&self, n: usize, j: u32, cap: u64) -> Result<usize> {
        if self.adams.is_none() {
            return Err(Error::IncompatibleData("coalgebra carries no Adams grading".into()));
        }
        self.restricted_h(n, &|m, t| self.tuple_adams(m, t) == Some(j), cap)
    }

    /// `dim H^n(ΩB)^{coG}`: the part of trivial total group degree.
    pub fn coinvariant_cohomology_dim(&self, n: usize, cap: u64) -> Result<usize> {
        if self.grading.is_none() {
            return Err(Error::IncompatibleData("coalgebra carries no group grading".into()));
        }
        self.restricted_h(n, &|m, t| self.tuple_coinvariant(m, t) == Some(true), cap)
    }

    /// Adams degrees occurring among degree-`n` cochains.
    pub fn adams_range(&self, n: usize) -> Option<(u32, u32)> {
        let ad = self.adams.as_ref()?;
        let degs = self.plus_words.iter().map(|&i| ad[i]);
        let lo = degs.clone().min()?;
        let hi = degs.max()?;
        Some((lo * n as u32, hi * n as u32))
    }

    /// Coordinates of a tensor of basis words in `(B⁺)^{⊗n}`, using `w = b_w + ε(w)·1`.
    pub fn coords(&self, t: &Tensor<Fp>) -> Result<Vec<Fp>> {
        let n = t.arity();
        let d = self.plus_dim();
        let zero = Fp::zero(self.p);
        // Slot `d` stands for the unit; its total mass must vanish.
        let mut full: HashMap<Vec<usize>, Fp> = HashMap::new();
        for (ws, c) in t.terms() {
            let mut parts: Vec<(Vec<usize>, Fp)> = vec![(Vec::new(), *c)];
            for w in ws {
                let i = *self.index.get(w).ok_or_else(|| {
                    Error::IncompatibleData(format!("{} is not a basis word", self.alphabet.render_word(w)))
                })?;
                let mut next = Vec::new();
                for (v, c) in parts {
                    if let Some(pi) = self.plus_of[i] {
                        let mut v2 = v.clone();
                        v2.push(pi);
                        next.push((v2, c));
                    }
                    if !self.counit[i].is_zero() {
                        let mut v2 = v;
                        v2.push(d);
                        next.push((v2, c * self.counit[i]));
                    }
                }
                parts = next;
            }
            for (v, c) in parts {
                let e = full.entry(v).or_insert(zero);
                *e = *e + c;
            }
        }
        let mut out = vec![zero; d.pow(n as u32)];
        for (v, c) in full {
            if c.is_zero() {
                continue;
            }
            if v.contains(&d) {
                return Err(Error::IncompatibleData("tensor is not in (B⁺)^⊗n".into()));
            }
            out[self.untuple(&v)] = c;
        }
        Ok(out)
    }

    /// The element with coordinates `v`, expanded back into basis words.
    pub fn plus_tensor(&self, n: usize, v: &[Fp]) -> Tensor<Fp> {
        let mut out = Tensor::zero(n);
        for (t, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut parts: Vec<(Vec<Word>, Fp)> = vec![(Vec::new(), *c)];
            for i in self.tuple(n, t) {
                let b = self.plus_words[i];
                let mut next = Vec::new();
                for (ws, c) in parts {
                    let mut w1 = ws.clone();
                    w1.push(self.basis[b].clone());
                    next.push((w1, c));
                    if !self.counit[b].is_zero() {
                        let mut w2 = ws;
                        w2.push(Word::empty());
                        next.push((w2, -(c * self.counit[b])));
                    }
                }
                parts = next;
            }
            for (ws, c) in parts {
                out.add_term(ws, c);
            }
        }
        out
    }

    /// `∂^n` of a cochain given as a tensor, returned as a tensor of arity `n+1`.
    pub fn differential(&self, t: &Tensor<Fp>) -> Result<Tensor<Fp>> {
        let v = self.coords(t)?;
        Ok(self.plus_tensor(t.arity() + 1, &self.apply(t.arity(), &v)))
    }

    pub fn is_cocycle(&self, t: &Tensor<Fp>) -> Result<bool> {
        let v = self.coords(t)?;
        Ok(self.apply(t.arity(), &v).iter().all(|c| c.is_zero()))
    }

    pub fn is_coboundary(&self, t: &Tensor<Fp>, cap: u64) -> Result<bool> {
        let n = t.arity();
        let v = self.coords(t)?;
        if n <= 1 {
            return Ok(v.iter().all(|c| c.is_zero()));
        }
        self.cochain_count(n, cap)?;
        let cols = self.plus_dim().pow(n as u32 - 1);
        let mut m = Matrix::zeros(v.len(), cols, self.p);
        for j in 0..cols {
            for (r, c) in self.diff_column(n - 1, j) {
                m.add_at(r, j, c.value());
            }
        }
        Ok(m.spans(&v.iter().map(|c| c.value()).collect::<Vec<_>>()))
    }
}

/// Every consecutive product `∂^{n+1}∘∂^n` is the zero matrix.
pub fn audit_d_squared(diffs: &[CobarDiff]) -> bool {
    diffs.windows(2).all(|w| w[1].matrix.mul(&w[0].matrix).is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r_pow(b: &FiniteCoalgebra, i: usize) -> Word {
        let r = b.alphabet.letter("r").unwrap();
        b.alphabet.power(r, i)
    }

    #[test]
    fn truncated_low_degree_differentials() {
        let b = truncated_polynomial(3).unwrap();
        let one = Fp::one(3);
        let r = Tensor::basic(vec![r_pow(&b, 1)], one);
        assert!(b.differential(&r).unwrap().is_zero());
        let r2 = Tensor::basic(vec![r_pow(&b, 2)], one);
        let rr = Tensor::basic(vec![r_pow(&b, 1), r_pow(&b, 1)], Fp::new(2, 3));
        assert_eq!(b.differential(&r2).unwrap(), rr);
        assert!(b.is_cocycle(&rr).unwrap());
        assert!(b.is_coboundary(&rr, DEFAULT_CAP).unwrap());
    }

    #[test]
    fn unit_terms_are_rejected() {
        let b = truncated_polynomial(2).unwrap();
        let t = Tensor::basic(vec![Word::empty(), r_pow(&b, 1)], Fp::one(2));
        assert!(b.coords(&t).is_err());
    }

    #[test]
    fn blowup_is_reported() {
        let b = truncated_polynomial(5).unwrap();
        assert!(matches!(b.build_complex(3, 100), Err(Error::DimensionBlowup { dim: 256, cap: 100 })));
    }
}
