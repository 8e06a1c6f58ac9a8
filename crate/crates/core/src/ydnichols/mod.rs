//! Yetter–Drinfeld modules of rank ≤ 2 over small abelian p-groups, their
//! Nichols algebras, braided primitivity and bosonization.

mod bosonize;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::ncalg::{Alphabet, BraidingData, GroupElt, NCPoly, Tensor, Word};
use crate::rewrite::RewriteSystem;
use crate::scalars::{Coeff, Fp, ParamPoly, ParamSpace};

pub use bosonize::{bosonize, compare_presentations, BraidedHopf, PresentationDiff};

/// Finite abelian group `∏ C_{orders[k]}`; elements are exponent tuples.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupData {
    pub orders: Vec<u32>,
}

impl GroupData {
    pub fn new(orders: Vec<u32>) -> GroupData {
        GroupData { orders }
    }

    pub fn reduce(&self, e: &[u32]) -> GroupElt {
        e.iter().zip(&self.orders).map(|(x, n)| x % n).collect()
    }
}

/// `action[k]` has column `j` equal to the image of basis vector `j` under generator `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct YDModule {
    pub p: u32,
    pub names: Vec<String>,
    pub grading: Vec<GroupElt>,
    pub action: Vec<Matrix>,
}

/// External form: `{group:{orders}, dim, grading, action:{gen: matrix}}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct YDData {
    pub p: u32,
    pub group: GroupData,
    pub dim: usize,
    #[serde(default)]
    pub names: Option<Vec<String>>,
    pub grading: Vec<Vec<u32>>,
    /// Keyed by generator index; rows of each matrix as integers.
    pub action: BTreeMap<String, Vec<Vec<i64>>>,
}

impl YDData {
    pub fn into_module(self) -> Result<(YDModule, GroupData)> {
        if self.grading.len() != self.dim {
            return Err(Error::ArityMismatch { expected: self.dim, got: self.grading.len() });
        }
        let mut action = Vec::new();
        for k in 0..self.group.orders.len() {
            let rows = self.action.get(&k.to_string()).ok_or_else(|| Error::IncompatibleData(format!("no action for generator {}", k)))?;
            if rows.len() != self.dim || rows.iter().any(|r| r.len() != self.dim) {
                return Err(Error::IncompatibleData(format!("action of generator {} is not {}×{}", k, self.dim, self.dim)));
            }
            action.push(Matrix::from_rows(rows, self.p));
        }
        let names = self.names.unwrap_or_else(|| (1..=self.dim).map(|i| format!("x{}", i)).collect());
        Ok((YDModule { p: self.p, names, grading: self.grading, action }, self.group))
    }
}

impl YDModule {
    pub fn dim(&self) -> usize {
        self.names.len()
    }

    /// Matrix of the group element with exponent tuple `e`.
    pub fn element_action(&self, e: &[u32]) -> Matrix {
        let mut m = Matrix::identity(self.dim(), self.p);
        for (k, &n) in e.iter().enumerate() {
            m = m.mul(&self.action[k].pow(n));
        }
        m
    }
}

/// Group relations hold for the action and each grading component is stable.
pub fn verify_yd(v: &YDModule, g: &GroupData) -> bool {
    let n = v.dim();
    if v.action.len() != g.orders.len() || v.grading.len() != n {
        return false;
    }
    let id = Matrix::identity(n, v.p);
    for (k, a) in v.action.iter().enumerate() {
        if a.rows() != n || a.cols() != n || a.pow(g.orders[k]) != id {
            return false;
        }
        for b in &v.action {
            if a.mul(b) != b.mul(a) {
                return false;
            }
        }
    }
    for gr in &v.grading {
        if gr.len() != g.orders.len() {
            return false;
        }
    }
    for a in &v.action {
        for i in 0..n {
            for j in 0..n {
                if a.get(i, j) != 0 && g.reduce(&v.grading[i]) != g.reduce(&v.grading[j]) {
                    return false;
                }
            }
        }
    }
    true
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum BraidingClass {
    /// `q[i][j] = χ_j(g_i)` in an eigenbasis respecting the grading.
    Diagonal { q: Vec<Vec<u32>> },
    /// The common grading element acts with minimal polynomial `(X − t)²`.
    Jordan { t: u32 },
}

fn is_diagonal(m: &Matrix) -> bool {
    (0..m.rows()).all(|i| (0..m.cols()).all(|j| i == j || m.get(i, j) == 0))
}

fn shifted(m: &Matrix, t: u32) -> Matrix {
    let mut s = m.clone();
    for i in 0..m.rows() {
        let p = m.p();
        s.set(i, i, (m.get(i, i) + p - t % p) % p);
    }
    s
}

/// Eigenbasis of a 2×2 matrix over F_p, if it has two independent eigenvectors.
fn eigenbasis(m: &Matrix) -> Option<Vec<(u32, Vec<u32>)>> {
    let p = m.p();
    let mut out: Vec<(u32, Vec<u32>)> = Vec::new();
    for t in 0..p {
        for v in shifted(m, t).nullspace() {
            let mut probe: Vec<Vec<i64>> = out.iter().map(|(_, w)| w.iter().map(|&x| x as i64).collect()).collect();
            probe.push(v.iter().map(|&x| x as i64).collect());
            if Matrix::from_rows(&probe, p).rank() == probe.len() {
                out.push((t, v));
            }
        }
    }
    (out.len() == m.rows()).then_some(out)
}

pub fn classify_braiding(v: &YDModule) -> Result<BraidingClass> {
    let n = v.dim();
    if n == 0 || n > 2 {
        return Err(Error::Unclassifiable);
    }
    let acts: Vec<Matrix> = v.grading.iter().map(|g| v.element_action(g)).collect();
    if acts.iter().all(is_diagonal) {
        let q = (0..n).map(|i| (0..n).map(|j| acts[i].get(j, j)).collect()).collect();
        return Ok(BraidingClass::Diagonal { q });
    }
    if v.grading.iter().any(|g| *g != v.grading[0]) {
        return Err(Error::Unclassifiable);
    }
    let m = &acts[0];
    if let Some(eb) = eigenbasis(m) {
        let q = (0..n).map(|_| eb.iter().map(|(t, _)| *t).collect()).collect();
        return Ok(BraidingClass::Diagonal { q });
    }
    for t in 0..v.p {
        let s = shifted(m, t);
        if !s.is_zero() && s.mul(&s).is_zero() {
            return Ok(BraidingClass::Jordan { t });
        }
    }
    Err(Error::Unclassifiable)
}

/// One defining relation and whether it was shown braided-primitive modulo the
/// relations before it.
#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CertificateEntry {
    pub relation: String,
    pub primitive: bool,
    /// Whether the quotient by the preceding relations is confluent, so that a
    /// nonzero residue is conclusive.
    pub quotient_confluent: bool,
}

#[derive(Debug, Clone)]
pub struct NicholsPresentation {
    pub class: BraidingClass,
    pub rs: RewriteSystem<Fp>,
    pub braiding: BraidingData<Fp>,
    pub relations: Vec<NCPoly<Fp>>,
    pub certificate: Vec<CertificateEntry>,
}

impl NicholsPresentation {
    pub fn basis(&self) -> Result<Vec<Word>> {
        self.rs.enumerate_basis()
    }

    pub fn certified(&self) -> bool {
        self.certificate.iter().all(|c| c.primitive)
    }

    /// The p² dimension count holds for every rank-2 module except Jordan type at p = 2.
    pub fn require_p_squared(&self) -> Result<()> {
        if matches!(self.class, BraidingClass::Jordan { .. }) && self.rs.one().p() == 2 {
            return Err(Error::JordanP2Dim);
        }
        Ok(())
    }
}

fn inverse2(m: &Matrix) -> Result<Matrix> {
    let p = m.p() as i64;
    let (a, b, c, d) = (m.get(0, 0) as i64, m.get(0, 1) as i64, m.get(1, 0) as i64, m.get(1, 1) as i64);
    let det = Fp::new(a * d - b * c, p as u32).inv()?.value() as i64;
    Ok(Matrix::from_rows(&[vec![d * det, -b * det], vec![-c * det, a * det]], p as u32))
}

/// Letter images of each group generator acting on the alphabet.
fn braiding_from_matrices(alph: &Alphabet, names: &[String], grading: &[GroupElt], mats: &[Matrix], orders: &[u32]) -> Result<BraidingData<Fp>> {
    let p = mats.first().map(|m| m.p()).unwrap_or(2);
    let one = Fp::one(p);
    let mut gr = vec![None; alph.len()];
    for (j, n) in names.iter().enumerate() {
        gr[alph.letter(n)? as usize] = Some(grading[j].clone());
    }
    let mut action = Vec::new();
    for m in mats {
        let mut row = vec![NCPoly::zero(); alph.len()];
        for (j, n) in names.iter().enumerate() {
            let mut img = NCPoly::zero();
            for (i, ni) in names.iter().enumerate() {
                let c = m.get(i, j);
                if c != 0 {
                    img.add_term(alph.single(alph.letter(ni)?), Fp::new(c as i64, p));
                }
            }
            row[alph.letter(n)? as usize] = img;
        }
        action.push(row);
    }
    let _ = one;
    Ok(BraidingData::new(orders.to_vec(), gr, action))
}

/// Relations of `B(V)` with a braided-primitivity certificate for each.
pub fn nichols_presentation(v: &YDModule, g: &GroupData) -> Result<NicholsPresentation> {
    if !verify_yd(v, g) {
        return Err(Error::IncompatibleData("not a Yetter–Drinfeld module".into()));
    }
    let class = classify_braiding(v)?;
    let p = v.p;
    let one = Fp::one(p);
    let half = Fp::new(2, p).inv().ok();
    let (names, mats, texts): (Vec<String>, Vec<Matrix>, Vec<String>) = match (&class, v.dim()) {
        (BraidingClass::Diagonal { q }, 1) => {
            let q = Fp::new(q[0][0] as i64, p);
            let mut n = 1u64;
            while q.pow(n) != one {
                n += 1;
            }
            let n = if n == 1 { p as u64 } else { n };
            (v.names.clone(), v.action.clone(), vec![format!("{}^{}", v.names[0], n)])
        }
        (BraidingClass::Diagonal { q }, _) => {
            if q.iter().flatten().any(|&x| x != 1) {
                return Err(Error::IncompatibleData("rank-2 diagonal braiding must be trivial in characteristic p".into()));
            }
            let (x1, x2) = (&v.names[0], &v.names[1]);
            let acts: Vec<Matrix> = v.grading.iter().map(|e| v.element_action(e)).collect();
            let (names, mats) = if acts.iter().all(is_diagonal) {
                (v.names.clone(), v.action.clone())
            } else {
                let eb = eigenbasis(&acts[0]).ok_or(Error::Unclassifiable)?;
                let pm = Matrix::from_rows(
                    &[
                        vec![eb[0].1[0] as i64, eb[1].1[0] as i64],
                        vec![eb[0].1[1] as i64, eb[1].1[1] as i64],
                    ],
                    p,
                );
                let pinv = inverse2(&pm)?;
                (v.names.clone(), v.action.iter().map(|a| pinv.mul(a).mul(&pm)).collect())
            };
            (names, mats, vec![format!("{x1}.{x2} - {x2}.{x1}"), format!("{x1}^{p}"), format!("{x2}^{p}")])
        }
        (BraidingClass::Jordan { t }, _) => {
            if *t != 1 {
                return Err(Error::Unclassifiable);
            }
            let m = v.element_action(&v.grading[0]);
            let s = shifted(&m, 1);
            let j = (0..2).find(|&j| s.column(j).iter().any(|&c| c != 0)).expect("nonzero shift");
            let x2v: Vec<u32> = (0..2).map(|i| u32::from(i == j)).collect();
            let x1v = s.mul_vec(&x2v);
            let pm = Matrix::from_rows(&[vec![x1v[0] as i64, x2v[0] as i64], vec![x1v[1] as i64, x2v[1] as i64]], p);
            let pinv = inverse2(&pm)?;
            let mats = v.action.iter().map(|a| pinv.mul(a).mul(&pm)).collect();
            let texts = if p == 2 {
                vec!["x1^2".into(), "x2^2.x1 + x1.x2^2 + x1.x2.x1".into(), "x1.x2.x1.x2 + x2.x1.x2.x1".into(), "x2^4".into()]
            } else {
                vec!["x1.x2 - x2.x1 - half*x1^2".into(), format!("x1^{}", p), format!("x2^{}", p)]
            };
            (vec!["x1".into(), "x2".into()], mats, texts)
        }
    };
    let prec: Vec<&str> = names.iter().rev().map(|s| s.as_str()).collect();
    let alph = Alphabet::new(&prec, &[])?;
    let scalar = move |n: &str| if n == "half" { half } else { None };
    let relations: Vec<NCPoly<Fp>> =
        texts.iter().map(|t| crate::ncalg::text::parse_poly(t, &alph, &one, &scalar)).collect::<Result<_>>()?;
    let grading = if names == v.names { v.grading.clone() } else { vec![v.grading[0].clone(); 2] };
    let braiding = braiding_from_matrices(&alph, &names, &grading, &mats, &g.orders)?;
    let mut certificate = Vec::new();
    for (k, z) in relations.iter().enumerate() {
        let partial = RewriteSystem::from_relations(alph.clone(), one, &relations[..k])?;
        let confluent = partial.is_confluent(crate::par::Parallelism::Sequential);
        let residue = braided_residue(z, &partial, &braiding)?;
        certificate.push(CertificateEntry {
            relation: z.render(&alph),
            primitive: residue.is_zero(),
            quotient_confluent: confluent,
        });
    }
    let rs = RewriteSystem::from_relations(alph, one, &relations)?;
    Ok(NicholsPresentation { class, rs, braiding, relations, certificate })
}

/// Coproducts `x⊗1 + 1⊗x` for every letter.
pub fn primitive_coproducts<C: Coeff>(rs: &RewriteSystem<C>) -> Vec<Tensor<C>> {
    let alph = rs.alphabet();
    let one = rs.one();
    let u = NCPoly::constant(one.one_like());
    alph.letters()
        .map(|l| {
            let x = NCPoly::letter(alph, l, one);
            Tensor::pure(&[&x, &u]).add(&Tensor::pure(&[&u, &x])).expect("arity 2")
        })
        .collect()
}

/// Braided coproduct of `f` with every generator primitive, factors reduced in `rs`.
pub fn braided_delta<C: Coeff>(f: &NCPoly<C>, rs: &RewriteSystem<C>, bd: &BraidingData<C>) -> Result<Tensor<C>> {
    braided_delta_with(f, rs, bd, &primitive_coproducts(rs))
}

/// Multiplicative extension of generator coproducts into the braided tensor square.
pub fn braided_delta_with<C: Coeff>(
    f: &NCPoly<C>,
    rs: &RewriteSystem<C>,
    bd: &BraidingData<C>,
    gens: &[Tensor<C>],
) -> Result<Tensor<C>> {
    let alph = rs.alphabet().clone();
    let one = rs.one().clone();
    let mut nf = rs.normal_forms();
    let mut out = Tensor::zero(2);
    let mut cache: BTreeMap<Word, Tensor<C>> = BTreeMap::new();
    for (w, c) in f.terms() {
        let mut acc = Tensor::basic(vec![Word::empty(), Word::empty()], one.one_like());
        let mut prefix = Word::empty();
        for &l in w.letters() {
            prefix = prefix.concat(&alph.single(l));
            if let Some(t) = cache.get(&prefix) {
                acc = t.clone();
                continue;
            }
            acc = nf.reduce_tensor(&bd.braided_mul(&alph, &acc, &gens[l as usize])?);
            cache.insert(prefix.clone(), acc.clone());
        }
        out.add_scaled(&acc, c);
    }
    Ok(nf.reduce_tensor(&out))
}

fn braided_residue<C: Coeff>(z: &NCPoly<C>, rs: &RewriteSystem<C>, bd: &BraidingData<C>) -> Result<Tensor<C>> {
    let one = rs.one().clone();
    let zr = rs.reduce(z);
    let u = NCPoly::constant(one.one_like());
    let d = braided_delta(z, rs, bd)?;
    d.sub(&Tensor::pure(&[&zr, &u]))?.sub(&Tensor::pure(&[&u, &zr]))
}

/// `Δ(z) = z⊗1 + 1⊗z` in the braided tensor square of the quotient by `rs`.
pub fn braided_primitive<C: Coeff>(z: &NCPoly<C>, rs: &RewriteSystem<C>, bd: &BraidingData<C>) -> Result<bool> {
    rs.require_confluent()?;
    Ok(braided_residue(z, rs, bd)?.is_zero())
}

/// Jordan-plane data `g·x₁ = x₁`, `g·x₂ = x₂ + x₁` over `C_p`, both graded by `g`.
pub fn jordan_module(p: u32) -> (YDModule, GroupData) {
    let v = YDModule {
        p,
        names: vec!["x1".into(), "x2".into()],
        grading: vec![vec![1], vec![1]],
        action: vec![Matrix::from_rows(&[vec![1, 1], vec![0, 1]], p)],
    };
    (v, GroupData::new(vec![p]))
}

/// Both generators graded trivially and fixed.
pub fn trivial_module(p: u32) -> (YDModule, GroupData) {
    let v = YDModule {
        p,
        names: vec!["x1".into(), "x2".into()],
        grading: vec![vec![0], vec![0]],
        action: vec![Matrix::identity(2, p)],
    };
    (v, GroupData::new(vec![p]))
}

/// One check of `(x₂⊗1)(ad(λx₂⊗1 + 1⊗x₂))^n = −((n+1)!/2ⁿ) λ^(n−1) x₁ⁿ⊗x₂`.
#[derive(Debug, Clone, Serialize)]
pub struct AdjointCheck {
    pub n: u32,
    pub holds: bool,
    pub lhs: String,
}

/// The adjoint identity for `n = 1..=p−1` in the quotient by `x₁^p` and the
/// Jordan commutation relation, with λ symbolic. Requires `p > 2`.
pub fn jordan_adjoint_identity(p: u32) -> Result<Vec<AdjointCheck>> {
    if p == 2 {
        return Err(Error::Inadmissible("the adjoint identity needs p > 2".into()));
    }
    let space = ParamSpace::new(p, &["l"], &[]);
    let one = ParamPoly::constant(&space, 1);
    let alph = Alphabet::new(&["x2", "x1"], &[])?;
    let inv2 = Fp::new(2, p).inv()?.value() as i64;
    let sp = space.clone();
    let scalar = move |n: &str| match n {
        "half" => Some(ParamPoly::constant(&sp, inv2)),
        "l" => Some(ParamPoly::var(&sp, 0)),
        _ => None,
    };
    let rels = ["x1.x2 - x2.x1 - half*x1^2".to_string(), format!("x1^{}", p)];
    let rels: Vec<&str> = rels.iter().map(|s| s.as_str()).collect();
    let rs = RewriteSystem::from_text(alph.clone(), one.clone(), &rels, &scalar)?;
    let x1 = NCPoly::letter(&alph, alph.letter("x1")?, &one);
    let x2 = NCPoly::letter(&alph, alph.letter("x2")?, &one);
    let mut gr = vec![None; 2];
    gr[alph.letter("x1")? as usize] = Some(vec![1]);
    gr[alph.letter("x2")? as usize] = Some(vec![1]);
    let mut act = vec![NCPoly::zero(); 2];
    act[alph.letter("x1")? as usize] = x1.clone();
    act[alph.letter("x2")? as usize] = x2.add(&x1);
    let bd = BraidingData::new(vec![p], gr, vec![act]);
    let u = NCPoly::constant(one.clone());
    let lam = ParamPoly::var(&space, 0);
    let right = Tensor::pure(&[&x2.scale(&lam), &u]).add(&Tensor::pure(&[&u, &x2]))?;
    let mut nf = rs.normal_forms();
    let mut cur = Tensor::pure(&[&x2, &u]);
    let mut out = Vec::new();
    let mut fact = Fp::one(p);
    let mut pow2 = Fp::one(p);
    for n in 1..p {
        let a = bd.braided_mul(&alph, &cur, &right)?;
        let b = bd.braided_mul(&alph, &right, &cur)?;
        cur = nf.reduce_tensor(&a.sub(&b)?);
        fact = fact * Fp::new(n as i64 + 1, p);
        pow2 = pow2 * Fp::new(2, p);
        let c = (fact * pow2.inv()?).value() as i64;
        let coeff = ParamPoly::constant(&space, -c).c_mul(&lam.pow(n - 1));
        let expected = Tensor::pure(&[&x1.pow(n as usize, &one), &x2]).scale(&coeff);
        let expected = nf.reduce_tensor(&expected);
        out.push(AdjointCheck { n, holds: cur == expected, lhs: cur.render(&alph) });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn jordan_classifies_with_t_one() {
        let (v, g) = jordan_module(3);
        assert!(verify_yd(&v, &g));
        assert_eq!(classify_braiding(&v).unwrap(), BraidingClass::Jordan { t: 1 });
    }

    #[test]
    fn swap_action_is_diagonal_trivial() {
        let v = YDModule {
            p: 2,
            names: vec!["x1".into(), "x2".into()],
            grading: vec![vec![0], vec![0]],
            action: vec![Matrix::from_rows(&[vec![0, 1], vec![1, 0]], 2)],
        };
        let g = GroupData::new(vec![2]);
        assert!(verify_yd(&v, &g));
        assert_eq!(classify_braiding(&v).unwrap(), BraidingClass::Diagonal { q: vec![vec![1, 1], vec![1, 1]] });
    }

    #[test]
    fn grading_violation_is_rejected() {
        let v = YDModule {
            p: 3,
            names: vec!["x1".into(), "x2".into()],
            grading: vec![vec![1, 0], vec![0, 1]],
            action: vec![Matrix::from_rows(&[vec![1, 0], vec![1, 1]], 3), Matrix::identity(2, 3)],
        };
        assert!(!verify_yd(&v, &GroupData::new(vec![3, 3])));
    }

    #[test]
    fn diagonal_nichols_has_dimension_p_squared() {
        let (v, g) = trivial_module(3);
        let n = nichols_presentation(&v, &g).unwrap();
        assert!(n.certified());
        assert_eq!(n.basis().unwrap().len(), 9);
        let x1x2 = n.rs.parse("x1.x2", &|_| None).unwrap();
        assert!(!braided_primitive(&x1x2, &n.rs, &n.braiding).unwrap());
    }

    #[test]
    fn jordan_p3_basis_is_ordered_monomials() {
        let (v, g) = jordan_module(3);
        let n = nichols_presentation(&v, &g).unwrap();
        assert!(n.certified(), "{:?}", n.certificate);
        let basis: Vec<String> = n.basis().unwrap().iter().map(|w| n.rs.alphabet().render_word(w)).collect();
        assert_eq!(basis.len(), 9);
        for w in &basis {
            assert!(!w.contains("x2.x1"), "{}", w);
        }
    }
}
