//! Characteristic-p power identities: Jacobson's formula, adjoint powers,
//! derivations of modular group algebras, and the tensor p-th power.

mod suite;

pub use suite::{lemma_suite, LemmaReport};

use serde::Serialize;

use crate::catalog::{build_family_at, omega_coefficient, FamilyId, Tag};
use crate::error::{Error, Result};
use crate::hopf::{HopfContext, HopfPresentation};
use crate::linalg::Matrix;
use crate::ncalg::{Alphabet, GroupElt, NCPoly, Tensor, Word};
use crate::rewrite::RewriteSystem;
use crate::scalars::{Coeff, Fp};

fn reduce_opt<C: Coeff>(f: NCPoly<C>, rs: Option<&RewriteSystem<C>>) -> NCPoly<C> {
    match rs {
        Some(rs) => rs.reduce(&f),
        None => f,
    }
}

/// `[a, b]`, reduced when a system is given.
fn bracket<C: Coeff>(a: &NCPoly<C>, b: &NCPoly<C>, rs: Option<&RewriteSystem<C>>) -> NCPoly<C> {
    reduce_opt(a.commutator(b), rs)
}

/// `(a)(ad b)^n = [[…[a,b],…],b]`.
pub fn ad_power<C: Coeff>(a: &NCPoly<C>, b: &NCPoly<C>, n: usize, rs: Option<&RewriteSystem<C>>) -> NCPoly<C> {
    let mut cur = reduce_opt(a.clone(), rs);
    for _ in 0..n {
        cur = bracket(&cur, b, rs);
    }
    cur
}

/// `Σ_{i=1}^{p−1} s_i(x,y)` with `i·s_i` the `λ^{i−1}` coefficient of `x(ad(λx+y))^{p−1}`.
///
/// The `λ`-graded pieces are tracked directly: `T_{k+1,j} = [T_{k,j}, y] + [T_{k,j−1}, x]`.
pub fn jacobson_correction(x: &NCPoly<Fp>, y: &NCPoly<Fp>, p: u32, rs: Option<&RewriteSystem<Fp>>) -> NCPoly<Fp> {
    let p = p as usize;
    let mut t: Vec<NCPoly<Fp>> = vec![reduce_opt(x.clone(), rs)];
    for _ in 0..p - 1 {
        let mut next = vec![NCPoly::zero(); t.len() + 1];
        for (j, tj) in t.iter().enumerate() {
            next[j] = next[j].add(&bracket(tj, y, rs));
            next[j + 1] = next[j + 1].add(&bracket(tj, x, rs));
        }
        t = next;
    }
    let mut out = NCPoly::zero();
    for i in 1..p {
        let inv = Fp::new(i as i64, p as u32).inv().expect("0 < i < p");
        out = out.add(&t[i - 1].scale(&inv));
    }
    out
}

/// `(x+y)^p − x^p − y^p`, computed by expansion.
pub fn pth_power_defect(x: &NCPoly<Fp>, y: &NCPoly<Fp>, p: u32, rs: Option<&RewriteSystem<Fp>>) -> NCPoly<Fp> {
    let one = Fp::one(p);
    let pow = |f: &NCPoly<Fp>| {
        let mut acc = NCPoly::constant(one);
        for _ in 0..p {
            acc = reduce_opt(acc.mul(f), rs);
        }
        acc
    };
    pow(&x.add(y)).sub(&pow(x)).sub(&pow(y))
}

/// A derivation of the group algebra of a finite abelian p-group, given on generators.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DerivationSpec {
    pub p: u32,
    pub orders: Vec<u32>,
    /// `images[k]` is `δ(g_k)` as `(exponent tuple, coefficient)` pairs.
    pub images: Vec<Vec<(GroupElt, i64)>>,
}

impl DerivationSpec {
    pub fn new(p: u32, orders: Vec<u32>, images: Vec<Vec<(GroupElt, i64)>>) -> Result<Self> {
        if images.len() != orders.len() {
            return Err(Error::ArityMismatch { expected: orders.len(), got: images.len() });
        }
        for &o in &orders {
            let mut q = o;
            while q > 1 && q % p == 0 {
                q /= p;
            }
            if o < 2 || q != 1 {
                return Err(Error::IncompatibleData(format!("order {} is not a power of {}", o, p)));
            }
        }
        for im in &images {
            if im.iter().any(|(e, _)| e.len() != orders.len()) {
                return Err(Error::ArityMismatch { expected: orders.len(), got: im.first().map_or(0, |(e, _)| e.len()) });
            }
        }
        Ok(DerivationSpec { p, orders, images })
    }

    /// `δ(g) = g − g^{u+1}` on `C_q`.
    pub fn cyclic(p: u32, q: u32, u: u32) -> Result<Self> {
        DerivationSpec::new(p, vec![q], vec![vec![(vec![1], 1), (vec![(u + 1) % q], -1)]])
    }

    pub fn group_size(&self) -> usize {
        self.orders.iter().map(|&o| o as usize).product()
    }

    /// Exponent tuple of basis index `i`; the last generator varies fastest.
    pub fn element(&self, mut i: usize) -> GroupElt {
        let mut e = vec![0; self.orders.len()];
        for k in (0..self.orders.len()).rev() {
            e[k] = (i % self.orders[k] as usize) as u32;
            i /= self.orders[k] as usize;
        }
        e
    }

    pub fn index(&self, e: &[u32]) -> usize {
        e.iter().zip(&self.orders).fold(0, |acc, (&x, &o)| acc * o as usize + (x % o) as usize)
    }

    /// Matrix of `δ` on the group basis, by the Leibniz rule
    /// `δ(Π g_k^{a_k}) = Σ_k a_k g^{a − e_k} δ(g_k)`.
    pub fn matrix(&self) -> Matrix {
        let n = self.group_size();
        let mut m = Matrix::zeros(n, n, self.p);
        for col in 0..n {
            let a = self.element(col);
            for (k, im) in self.images.iter().enumerate() {
                if a[k].is_multiple_of(self.p) {
                    continue;
                }
                let mut base = a.clone();
                base[k] = (base[k] + self.orders[k] - 1) % self.orders[k];
                for (e, c) in im {
                    let prod: Vec<u32> = base.iter().zip(e).zip(&self.orders).map(|((x, y), o)| (x + y) % o).collect();
                    let v = Fp::new(*c * a[k] as i64, self.p);
                    m.add_at(self.index(&prod), col, v.value());
                }
            }
        }
        m
    }

    /// `δ(g^{order}) = 0` by Leibniz, so `δ` is well defined on `kG`.
    pub fn well_defined(&self) -> bool {
        self.orders.iter().all(|&o| o % self.p == 0)
    }
}

/// `δ^m(g_k)` for every generator, as coordinate vectors on the group basis.
pub fn derivation_power(spec: &DerivationSpec, m: u32) -> Vec<Vec<u32>> {
    let mm = spec.matrix().pow(m);
    (0..spec.orders.len())
        .map(|k| {
            let mut e = vec![0; spec.orders.len()];
            e[k] = 1;
            mm.column(spec.index(&e))
        })
        .collect()
}

/// `δ^p = δ` as matrices.
pub fn derivation_is_p_idempotent(spec: &DerivationSpec) -> bool {
    let m = spec.matrix();
    m.pow(spec.p) == m
}

fn binom(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn pow_mod(b: u64, e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    for _ in 0..e {
        r = r * (b % p) % p;
    }
    r
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoeffTable {
    pub m: u32,
    pub coefficients: Vec<u32>,
}

/// Closed-form coefficients `a^m_i` of `δ^m(g)` for `δ(g) = g − g²` on `C_q`.
pub fn coeff_table(p: u32, q: u32, m: u32) -> CoeffTable {
    let pm = p as u64;
    let (q64, m64) = (q as u64, m as u64);
    let term = |j: u64, n: u64, base: u64| {
        let v = binom(n, j) % pm * pow_mod(base, m64, pm) % pm;
        if j.is_multiple_of(2) { v } else { (pm - v) % pm }
    };
    let mut coefficients = vec![0u32; q as usize];
    coefficients[0] = ((1..q64).map(|j| term(j, q64 - 1, j)).sum::<u64>() % pm) as u32;
    for i in 1..q64 {
        coefficients[i as usize] = ((0..i).map(|j| term(j, i - 1, j + 1)).sum::<u64>() % pm) as u32;
    }
    CoeffTable { m, coefficients }
}

/// The closed form agrees with `δ^m(g)` computed by iteration.
pub fn verify_coeff_table(p: u32, n: u32, m: u32) -> Result<bool> {
    let q = p.checked_pow(n).filter(|&q| q <= 25).ok_or(Error::TooLarge { points: u64::MAX, cap: 25 })?;
    let spec = DerivationSpec::cyclic(p, q, 1)?;
    let iterated = derivation_power(&spec, m).remove(0);
    Ok(coeff_table(p, q, m).coefficients == iterated)
}

/// `(δ/u + δ²/u² + ⋯ + δ^{p−1}/u^{p−1})(g^{1+u}) = 0` for `δ(g) = g − g²` on `C_p`.
pub fn annihilation_check(p: u32, u: u32) -> Result<bool> {
    if u == 0 || u >= p {
        return Err(Error::Inadmissible(format!("u = {} outside 1..p−1", u)));
    }
    let spec = DerivationSpec::cyclic(p, p, 1)?;
    let m = spec.matrix();
    let uinv = Fp::new(u as i64, p).inv()?;
    let mut v = vec![0u32; p as usize];
    v[((1 + u) % p) as usize] = 1;
    let mut acc = vec![Fp::zero(p); p as usize];
    let mut scale = Fp::one(p);
    for _ in 1..p {
        v = m.mul_vec(&v);
        scale = scale * uinv;
        for (a, &c) in acc.iter_mut().zip(&v) {
            *a = *a + scale * Fp::new(c as i64, p);
        }
    }
    Ok(acc.iter().all(|c| c.is_zero()))
}

/// `k⟨g,x⟩/(g^q − 1, gx − xg − μ(g − g²))` with `x` free.
pub fn skew_pair(p: u32, q: u32, mu: u32) -> Result<RewriteSystem<Fp>> {
    let alph = Alphabet::new(&["g", "x"], &["g"])?;
    let m = Fp::new(mu as i64, p);
    let scalar = move |n: &str| if n == "m" { Some(m) } else { None };
    let rels = [format!("g^{} = 1", q), "g.x - x.g = m*(g - g^2)".to_string()];
    RewriteSystem::from_text(alph, Fp::one(p), &[&rels[0], &rels[1]], &scalar)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct TensorPowerCheck {
    pub p: u32,
    pub q: u32,
    pub mu: u32,
    /// `(g)(ad x)^{p−1} = μ^{p−1}(g − g^p)`.
    pub adjoint: bool,
    /// `(x⊗1 + g⊗x)^p = x^p⊗1 + g^p⊗x^p + μ^{p−1}(g − g^p)⊗x`.
    pub tensor: bool,
}

impl TensorPowerCheck {
    pub fn holds(&self) -> bool {
        self.adjoint && self.tensor
    }
}

pub fn tensor_pth_power_check(p: u32, q: u32, mu: u32) -> Result<TensorPowerCheck> {
    let rs = skew_pair(p, q, mu)?;
    let alph = rs.alphabet().clone();
    let one = Fp::one(p);
    let g = NCPoly::letter(&alph, alph.letter("g")?, &one);
    let x = NCPoly::letter(&alph, alph.letter("x")?, &one);
    let u = NCPoly::constant(one);
    let mup = Fp::new(mu as i64, p).pow((p - 1) as u64);
    let gp = g.pow(p as usize, &one);
    let corr = rs.reduce(&g.sub(&gp).scale(&mup));
    let adjoint = ad_power(&g, &x, (p - 1) as usize, Some(&rs)) == corr;
    let mut nf = rs.normal_forms();
    let base = Tensor::pure(&[&x, &u]).add(&Tensor::pure(&[&g, &x]))?;
    let mut lhs = Tensor::basic(vec![Word::empty(), Word::empty()], one);
    for _ in 0..p {
        lhs = nf.reduce_tensor(&lhs.mul(&base)?);
    }
    let xp = x.pow(p as usize, &one);
    let rhs = Tensor::pure(&[&xp, &u]).add(&Tensor::pure(&[&gp, &xp]))?.add(&Tensor::pure(&[&corr, &x]))?;
    let tensor = lhs == nf.reduce_tensor(&rhs);
    Ok(TensorPowerCheck { p, q, mu, adjoint, tensor })
}

/// Case (D1c) at `p`, `ε₁`: `(g)(ad x)^n` against `ε₁^{n−1}(1 − g^p)^{n−1}[g,x]`.
pub fn d1c_ad_power(p: u32, e1: u32, n: usize) -> Result<bool> {
    let h = build_family_at(&FamilyId::new(Tag::D1c, p, 0)?, &[e1])?;
    let rs = &h.rs;
    let alph = rs.alphabet().clone();
    let one = Fp::one(p);
    let g = NCPoly::letter(&alph, alph.letter("g")?, &one);
    let x = NCPoly::letter(&alph, alph.letter("x")?, &one);
    let lhs = ad_power(&g, &x, n, Some(rs));
    let factor = NCPoly::constant(one).sub(&g.pow(p as usize, &one)).pow(n - 1, &one);
    let scal = Fp::new(e1 as i64, p).pow((n - 1) as u64);
    let rhs = rs.reduce(&factor.mul(&g.commutator(&x)).scale(&scal));
    Ok(lhs == rhs)
}

/// Both sides of `ρ_y^{p−1}(ω(x)) = ∂¹(Z)` in case (Ca) at a numeric point.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct RhoPowerOmega {
    pub p: u32,
    /// `(ε₃, σ, τ)`.
    pub point: Vec<u32>,
    pub lhs: String,
    pub rhs: String,
    pub equal: bool,
    /// The multinomial sum `Z` reduces to `½σ^{p−1}ε₃x`.
    pub z_closed_form: bool,
}

fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 1 {
        return vec![vec![total]];
    }
    let mut out = Vec::new();
    for first in 0..=total {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn factorial_mod(n: usize, p: u32) -> Fp {
    (1..=n).fold(Fp::one(p), |acc, k| acc * Fp::new(k as i64, p))
}

/// `ρ_y(T) = [T, y⊗1 + 1⊗y]` iterated `p−1` times on `ω(x)`, against `∂¹(Z)` with
/// `Z = −Σ_{i₁+…+i_p=p−2} ((p−2)!/(i₁!⋯i_p!)) ρ_y^{i₁}(x)⋯ρ_y^{i_{p−1}}(x) ρ_y^{1+i_p}(x)`.
pub fn rho_power_omega(p: u32, point: &[u32]) -> Result<RhoPowerOmega> {
    if !(p == 3 || p == 5) {
        return Err(Error::Inadmissible(format!("rhoPowerOmega needs p ∈ {{3,5}}, got {}", p)));
    }
    let h: HopfPresentation<Fp> = build_family_at(&FamilyId::new(Tag::Ca, p, 0)?, point)?;
    let rs = &h.rs;
    let alph = rs.alphabet().clone();
    let one = Fp::one(p);
    let x = NCPoly::letter(&alph, alph.letter("x")?, &one);
    let y = NCPoly::letter(&alph, alph.letter("y")?, &one);
    let u = NCPoly::constant(one);
    let mut nf = rs.normal_forms();
    let mut omega = Tensor::zero(2);
    for i in 1..p {
        let c = Fp::new(omega_coefficient(p, i) as i64, p);
        omega = omega.add(&Tensor::pure(&[&x.pow(i as usize, &one), &x.pow((p - i) as usize, &one)]).scale(&c))?;
    }
    let yy = Tensor::pure(&[&y, &u]).add(&Tensor::pure(&[&u, &y]))?;
    let mut lhs = nf.reduce_tensor(&omega);
    for _ in 0..p - 1 {
        lhs = nf.reduce_tensor(&lhs.mul(&yy)?.sub(&yy.mul(&lhs)?)?);
    }
    drop(nf);
    let rho: Vec<NCPoly<Fp>> = (0..p as usize).map(|s| ad_power(&x, &y, s, Some(rs))).collect();
    let mut z = NCPoly::zero();
    let top = factorial_mod(p as usize - 2, p);
    for comp in compositions(p as usize - 2, p as usize) {
        let denom = comp.iter().fold(one, |acc, &i| acc * factorial_mod(i, p));
        let mut term = NCPoly::constant(one);
        for (k, &i) in comp.iter().enumerate() {
            let s = if k + 1 == comp.len() { i + 1 } else { i };
            term = rs.reduce(&term.mul(&rho[s]));
        }
        z = z.sub(&term.scale(&(top * denom.inv()?)));
    }
    let (e3, s) = (Fp::new(point[0] as i64, p), Fp::new(point[1] as i64, p));
    let half = Fp::new(2, p).inv()?;
    let closed = x.scale(&(half * s.pow((p - 1) as u64) * e3));
    let z_closed_form = rs.reduce(&z) == rs.reduce(&closed);
    let mut ctx = HopfContext::new(&h);
    let rhs = ctx.delta(&z).sub(&Tensor::pure(&[&z, &u]))?.sub(&Tensor::pure(&[&u, &z]))?;
    let rhs = ctx.nf.reduce_tensor(&rhs);
    Ok(RhoPowerOmega {
        p,
        point: point.to_vec(),
        lhs: lhs.render(&alph),
        rhs: rhs.render(&alph),
        equal: lhs == rhs,
        z_closed_form,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn delta_square_at_p3() {
        // δ(g) = g − g², q = 3: δ²(g) = g − g³ = g − 1.
        let d = derivation_power(&DerivationSpec::cyclic(3, 3, 1).unwrap(), 2);
        assert_eq!(d[0], vec![2, 1, 0]);
    }

    #[test]
    fn first_power_table_is_delta() {
        assert_eq!(coeff_table(5, 5, 1).coefficients, vec![0, 1, 4, 0, 0]);
    }

    #[test]
    fn jacobson_in_char_two_is_anticommutator() {
        let alph = Alphabet::new(&["x", "y"], &[]).unwrap();
        let one = Fp::one(2);
        let x = NCPoly::letter(&alph, alph.letter("x").unwrap(), &one);
        let y = NCPoly::letter(&alph, alph.letter("y").unwrap(), &one);
        let s = jacobson_correction(&x, &y, 2, None);
        assert_eq!(s, x.mul(&y).add(&y.mul(&x)));
    }

    #[test]
    fn compositions_count() {
        assert_eq!(compositions(3, 5).len(), 35);
    }

    #[test]
    fn multinomial_sum_is_divisible_by_p() {
        // Σ (p−2)!/(i₁!⋯i_p!) over compositions of p−2 into p parts is p^{p−2}.
        for p in [3u32, 5] {
            let total = compositions(p as usize - 2, p as usize)
                .iter()
                .map(|c| (1..=p as u64 - 2).product::<u64>() / c.iter().map(|&i| (1..=i as u64).product::<u64>()).product::<u64>())
                .sum::<u64>();
            assert_eq!(total, (p as u64).pow(p - 2));
        }
        let r = rho_power_omega(3, &[1, 1, 0]).unwrap();
        assert!(r.equal && !r.z_closed_form);
    }
}
