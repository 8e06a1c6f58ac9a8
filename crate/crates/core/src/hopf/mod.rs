//! Hopf structures on rewriting presentations.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::ncalg::{Letter, NCPoly, Tensor, Word};
use crate::rewrite::{NormalForms, RewriteSystem};
use crate::scalars::{Coeff, Fp};

/// Coproduct, counit and antipode on the generators of a presented algebra.
///
/// Grouplike letters of the alphabet are exactly the generators with `Δg = g⊗g`.
#[derive(Debug, Clone)]
pub struct HopfPresentation<C> {
    pub rs: RewriteSystem<C>,
    pub coproduct: Vec<Tensor<C>>,
    pub counit: Vec<C>,
    pub antipode: Vec<NCPoly<C>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct AxiomReport {
    pub delta_is_algebra_map: bool,
    pub coassociative: bool,
    pub counit_axiom: bool,
    pub antipode_axiom: bool,
    pub antipode_kills_relations: bool,
    pub witnesses: Vec<String>,
}

impl AxiomReport {
    pub fn all_pass(&self) -> bool {
        self.delta_is_algebra_map
            && self.coassociative
            && self.counit_axiom
            && self.antipode_axiom
            && self.antipode_kills_relations
            && self.witnesses.is_empty()
    }
}

impl<C: Coeff> HopfPresentation<C> {
    pub fn new(rs: RewriteSystem<C>, coproduct: Vec<Tensor<C>>, counit: Vec<C>, antipode: Vec<NCPoly<C>>) -> Result<Self> {
        let n = rs.alphabet().len();
        if coproduct.len() != n || counit.len() != n || antipode.len() != n {
            return Err(Error::ArityMismatch { expected: n, got: coproduct.len().min(counit.len()).min(antipode.len()) });
        }
        let one = rs.one().clone();
        for l in rs.alphabet().letters() {
            if coproduct[l as usize].arity() != 2 && !coproduct[l as usize].is_zero() {
                return Err(Error::ArityMismatch { expected: 2, got: coproduct[l as usize].arity() });
            }
            if rs.alphabet().is_grouplike(l) {
                let w = rs.alphabet().single(l);
                if coproduct[l as usize] != Tensor::basic(vec![w.clone(), w], one.one_like()) || !counit[l as usize].is_one() {
                    return Err(Error::IncompatibleData(format!("{} is not grouplike", rs.alphabet().name(l))));
                }
            }
        }
        Ok(HopfPresentation { rs, coproduct, counit, antipode })
    }

    /// Counit 1 on grouplikes and 0 elsewhere; antipode solved from the coproduct.
    pub fn from_coproduct(rs: RewriteSystem<C>, coproduct: Vec<Tensor<C>>) -> Result<Self> {
        let one = rs.one().clone();
        let counit: Vec<C> =
            rs.alphabet().letters().map(|l| if rs.alphabet().is_grouplike(l) { one.one_like() } else { one.zero_like() }).collect();
        let antipode = derive_antipode(&rs, &coproduct)?;
        HopfPresentation::new(rs, coproduct, counit, antipode)
    }

    pub fn alphabet(&self) -> &crate::ncalg::Alphabet {
        self.rs.alphabet()
    }

    pub fn counit_word(&self, w: &Word) -> C {
        let mut acc = self.rs.one().one_like();
        for &l in w.letters() {
            acc = acc.c_mul(&self.counit[l as usize]);
        }
        acc
    }

    pub fn counit_poly(&self, f: &NCPoly<C>) -> C {
        let mut acc = self.rs.one().zero_like();
        for (w, c) in f.terms() {
            acc = acc.c_add(&c.c_mul(&self.counit_word(w)));
        }
        acc
    }

    /// Multiplicative extension of the generator coproducts, factors reduced.
    pub fn extend_coproduct(&self, f: &NCPoly<C>) -> Tensor<C> {
        let mut ctx = HopfContext::new(self);
        ctx.delta(f)
    }

    /// Anti-multiplicative extension of the generator antipodes, reduced.
    pub fn apply_antipode(&self, f: &NCPoly<C>) -> NCPoly<C> {
        let mut ctx = HopfContext::new(self);
        ctx.antipode(f)
    }

    pub fn verify_axioms(&self) -> Result<AxiomReport> {
        self.rs.require_confluent()?;
        Ok(self.audit())
    }

    /// The five axiom checks without the confluence precondition.
    pub fn audit(&self) -> AxiomReport {
        let alph = self.rs.alphabet().clone();
        let one = self.rs.one().clone();
        let mut ctx = HopfContext::new(self);
        let mut rep = AxiomReport {
            delta_is_algebra_map: true,
            coassociative: true,
            counit_axiom: true,
            antipode_axiom: true,
            antipode_kills_relations: true,
            witnesses: Vec::new(),
        };
        for rule in self.rs.rules() {
            let rel = NCPoly::word(rule.lhs.clone(), &one).sub(&rule.rhs);
            let name = format!("{} - ({})", alph.render_word(&rule.lhs), rule.rhs.render(&alph));
            if !ctx.delta(&rel).is_zero() {
                rep.delta_is_algebra_map = false;
                rep.witnesses.push(format!("delta: {}", name));
            }
            if !self.counit_poly(&rel).is_zero() {
                rep.counit_axiom = false;
                rep.witnesses.push(format!("counit: {}", name));
            }
            if !ctx.antipode(&rel).is_zero() {
                rep.antipode_kills_relations = false;
                rep.witnesses.push(format!("antipode: {}", name));
            }
        }
        for l in alph.letters() {
            let v = NCPoly::letter(&alph, l, &one);
            let name = alph.name(l).to_string();
            let d = self.coproduct[l as usize].clone();
            let left = d.expand_factor(0, 2, |w| ctx.delta_word(w));
            let right = d.expand_factor(1, 2, |w| ctx.delta_word(w));
            let diff = ctx.nf.reduce_tensor(&left.sub(&right).expect("arity 3"));
            if !diff.is_zero() {
                rep.coassociative = false;
                rep.witnesses.push(format!("coassociativity: {}", name));
            }
            let ec = self.counit.clone();
            let eps = |w: &Word| w.letters().iter().fold(one.one_like(), |a, &k| a.c_mul(&ec[k as usize]));
            let mut el = NCPoly::zero();
            let mut er = NCPoly::zero();
            for (ws, c) in d.terms() {
                el.add_scaled(&NCPoly::word(ws[1].clone(), &one), &c.c_mul(&eps(&ws[0])));
                er.add_scaled(&NCPoly::word(ws[0].clone(), &one), &c.c_mul(&eps(&ws[1])));
            }
            if ctx.nf.reduce(&el) != v || ctx.nf.reduce(&er) != v {
                rep.counit_axiom = false;
                rep.witnesses.push(format!("counit: {}", name));
            }
            let target = NCPoly::constant(self.counit[l as usize].clone());
            let mut sl = NCPoly::zero();
            let mut sr = NCPoly::zero();
            for (ws, c) in d.terms() {
                let a = NCPoly::word(ws[0].clone(), &one);
                let b = NCPoly::word(ws[1].clone(), &one);
                let sa = ctx.antipode(&a);
                let sb = ctx.antipode(&b);
                sl.add_scaled(&sa.mul(&b), c);
                sr.add_scaled(&a.mul(&sb), c);
            }
            if ctx.nf.reduce(&sl) != target || ctx.nf.reduce(&sr) != target {
                rep.antipode_axiom = false;
                rep.witnesses.push(format!("antipode: {}", name));
            }
        }
        rep
    }
}

/// Memo tables for repeated Δ and S evaluation against one presentation.
pub struct HopfContext<'a, C> {
    h: &'a HopfPresentation<C>,
    pub nf: NormalForms<'a, C>,
    delta_cache: HashMap<Word, Tensor<C>>,
}

impl<'a, C: Coeff> HopfContext<'a, C> {
    pub fn new(h: &'a HopfPresentation<C>) -> Self {
        HopfContext { h, nf: h.rs.normal_forms(), delta_cache: HashMap::new() }
    }

    pub fn delta_word(&mut self, w: &Word) -> Tensor<C> {
        if let Some(t) = self.delta_cache.get(w) {
            return t.clone();
        }
        let alph = self.h.rs.alphabet().clone();
        let t = if w.is_empty() {
            Tensor::basic(vec![Word::empty(), Word::empty()], self.h.rs.one().one_like())
        } else {
            let (head, last) = w.split_at(w.len() - 1, &alph);
            let dh = self.delta_word(&head);
            let dl = self.h.coproduct[last.letters()[0] as usize].clone();
            let prod = dh.mul(&dl).expect("arity 2");
            self.nf.reduce_tensor(&prod)
        };
        self.delta_cache.insert(w.clone(), t.clone());
        t
    }

    pub fn delta(&mut self, f: &NCPoly<C>) -> Tensor<C> {
        let mut out = Tensor::zero(2);
        for (w, c) in f.terms() {
            let d = self.delta_word(w);
            out.add_scaled(&d, c);
        }
        out
    }

    pub fn antipode_word(&mut self, w: &Word) -> NCPoly<C> {
        let mut acc = NCPoly::constant(self.h.rs.one().one_like());
        for &l in w.letters().iter().rev() {
            acc = self.nf.mul(&acc, &self.h.antipode[l as usize]);
        }
        acc
    }

    pub fn antipode(&mut self, f: &NCPoly<C>) -> NCPoly<C> {
        let mut out = NCPoly::zero();
        for (w, c) in f.terms() {
            let s = self.antipode_word(w);
            out.add_scaled(&s, c);
        }
        out
    }
}

/// Antipode on generators from `m(S⊗id)Δ = ε`.
///
/// Grouplike `g` of order `n` gets `g^(n-1)`. Any other generator `v` must have a
/// `v⊗1` term; then `S(v) = −Σ S(a)b` over the remaining terms `a⊗b`, whose left
/// factors may only use generators already solved.
pub fn derive_antipode<C: Coeff>(rs: &RewriteSystem<C>, coproduct: &[Tensor<C>]) -> Result<Vec<NCPoly<C>>> {
    let alph = rs.alphabet().clone();
    let one = rs.one().clone();
    let mut solved: Vec<Option<NCPoly<C>>> = vec![None; alph.len()];
    for l in alph.letters() {
        if alph.is_grouplike(l) {
            let n = rs
                .group_order(l)
                .ok_or_else(|| Error::IncompatibleData(format!("no order relation for {}", alph.name(l))))?;
            solved[l as usize] = Some(NCPoly::word(alph.power(l, n as usize - 1), &one));
        }
    }
    let mut nf = rs.normal_forms();
    loop {
        let mut progress = false;
        for l in alph.letters() {
            if solved[l as usize].is_some() {
                continue;
            }
            let v = alph.single(l);
            let d = &coproduct[l as usize];
            if d.coeff(&[v.clone(), Word::empty()]).map(|c| c.is_one()) != Some(true) {
                return Err(Error::IncompatibleData(format!("Δ({}) lacks a {}⊗1 term", alph.name(l), alph.name(l))));
            }
            let ready = d
                .terms()
                .filter(|(ws, _)| ws[0] != v || !ws[1].is_empty())
                .all(|(ws, _)| ws[0].letters().iter().all(|&k| solved[k as usize].is_some()));
            if !ready {
                continue;
            }
            let mut acc = NCPoly::zero();
            for (ws, c) in d.terms() {
                if ws[0] == v && ws[1].is_empty() {
                    continue;
                }
                let mut sa = NCPoly::constant(one.one_like());
                for &k in ws[0].letters().iter().rev() {
                    sa = sa.mul(solved[k as usize].as_ref().unwrap());
                }
                acc.add_scaled(&sa.right_mul_word(&ws[1]), &c.c_neg());
            }
            solved[l as usize] = Some(nf.reduce(&acc));
            progress = true;
        }
        if solved.iter().all(|s| s.is_some()) {
            return Ok(solved.into_iter().map(|s| s.unwrap()).collect());
        }
        if !progress {
            return Err(Error::IncompatibleData("antipode recursion does not terminate".into()));
        }
    }
}

impl HopfPresentation<Fp> {
    /// Basis of `{v : Δ(v) = v⊗g + h⊗v}` over the normal-form basis, in echelon form.
    pub fn skew_primitives(&self, g: &Word, h: &Word) -> Result<Vec<NCPoly<Fp>>> {
        let basis = self.rs.enumerate_basis()?;
        let idx: HashMap<&Word, usize> = basis.iter().enumerate().map(|(i, w)| (w, i)).collect();
        let one = *self.rs.one();
        let p = one.p();
        let mut ctx = HopfContext::new(self);
        let gn = ctx.nf.word(g);
        let hn = ctx.nf.word(h);
        let mut rows: HashMap<(usize, usize), usize> = HashMap::new();
        let mut entries: Vec<(usize, usize, u32)> = Vec::new();
        for (j, w) in basis.iter().enumerate() {
            let wp = NCPoly::word(w.clone(), &one);
            let t = ctx
                .delta_word(w)
                .sub(&Tensor::pure(&[&wp, &gn]))
                .and_then(|t| t.sub(&Tensor::pure(&[&hn, &wp])))
                .expect("arity 2");
            for (ws, c) in t.terms() {
                let key = (idx[&ws[0]], idx[&ws[1]]);
                let n = rows.len();
                let r = *rows.entry(key).or_insert(n);
                entries.push((r, j, c.value()));
            }
        }
        let mut m = Matrix::zeros(rows.len(), basis.len(), p);
        for (r, j, v) in entries {
            m.add_at(r, j, v);
        }
        let mut out: Vec<NCPoly<Fp>> = m
            .nullspace()
            .into_iter()
            .map(|v| {
                let mut f = NCPoly::zero();
                for (j, &c) in v.iter().enumerate() {
                    f.add_term(basis[j].clone(), Fp::new(c as i64, p));
                }
                f
            })
            .collect();
        out.sort();
        Ok(out)
    }

    pub fn primitive_dim(&self) -> Result<usize> {
        Ok(self.skew_primitives(&Word::empty(), &Word::empty())?.len())
    }
}

/// Generator letter by name, for callers holding only a presentation.
pub fn letter_of<C: Coeff>(h: &HopfPresentation<C>, name: &str) -> Result<Letter> {
    h.rs.alphabet().letter(name)
}
