//! Braided Hopf algebras in `ᵏΓ_Γ YD` and their Radford biproducts `R # kΓ`.

use std::sync::Arc;

use serde::Serialize;

use super::{braided_delta_with, GroupData, YDModule};
use crate::error::{Error, Result};
use crate::hopf::{HopfContext, HopfPresentation};
use crate::linalg::Matrix;
use crate::ncalg::{Alphabet, BraidingData, NCPoly, Tensor, Word};
use crate::rewrite::RewriteSystem;
use crate::scalars::{Coeff, Fp};

/// A presented algebra with a Yetter–Drinfeld structure and a braided coproduct.
///
/// Every generator is homogeneous; `coproduct[l]` lives in the braided square.
#[derive(Debug, Clone)]
pub struct BraidedHopf<C> {
    pub rs: RewriteSystem<C>,
    pub coproduct: Vec<Tensor<C>>,
    pub group_names: Vec<String>,
    pub braiding: BraidingData<C>,
}

impl<C: Coeff> BraidedHopf<C> {
    pub fn new(rs: RewriteSystem<C>, coproduct: Vec<Tensor<C>>, group_names: Vec<String>, braiding: BraidingData<C>) -> Result<Self> {
        let alph = rs.alphabet().clone();
        if coproduct.len() != alph.len() {
            return Err(Error::ArityMismatch { expected: alph.len(), got: coproduct.len() });
        }
        if group_names.len() != braiding.orders().len() {
            return Err(Error::ArityMismatch { expected: braiding.orders().len(), got: group_names.len() });
        }
        for l in alph.letters() {
            braiding.word_grading(&alph, &alph.single(l))?;
            if alph.is_grouplike(l) {
                return Err(Error::IncompatibleData(format!("{} is grouplike in a braided algebra", alph.name(l))));
            }
        }
        for n in &group_names {
            if alph.index_of(n).is_some() {
                return Err(Error::IncompatibleData(format!("group generator {} clashes with a letter", n)));
            }
        }
        Ok(BraidedHopf { rs, coproduct, group_names, braiding })
    }

    /// Names of the generators whose coproduct is `x⊗1 + 1⊗x`.
    pub fn primitive_generators(&self) -> Vec<String> {
        let alph = self.rs.alphabet();
        let one = self.rs.one();
        let u = NCPoly::constant(one.one_like());
        alph.letters()
            .filter(|&l| {
                let x = NCPoly::letter(alph, l, one);
                Tensor::pure(&[&x, &u]).add(&Tensor::pure(&[&u, &x])).ok().as_ref() == Some(&self.coproduct[l as usize])
            })
            .map(|l| alph.name(l).to_string())
            .collect()
    }

    /// `Δ` is an algebra map into the braided square on every relation.
    pub fn relations_respected(&self) -> Result<Vec<(String, bool)>> {
        let alph = self.rs.alphabet();
        let one = self.rs.one();
        let mut out = Vec::new();
        for r in self.rs.rules() {
            let rel = NCPoly::word(r.lhs.clone(), one).sub(&r.rhs);
            let d = braided_delta_with(&rel, &self.rs, &self.braiding, &self.coproduct)?;
            out.push((format!("{} -> {}", alph.render_word(&r.lhs), r.rhs.render(alph)), d.is_zero()));
        }
        Ok(out)
    }
}

impl BraidedHopf<Fp> {
    /// The Yetter–Drinfeld module spanned by the primitive generators.
    pub fn yd_module(&self) -> Result<(YDModule, GroupData)> {
        let alph = self.rs.alphabet();
        let one = *self.rs.one();
        let names = self.primitive_generators();
        let letters: Vec<u8> = names.iter().map(|n| alph.letter(n)).collect::<Result<_>>()?;
        let p = one.p();
        let k = self.group_names.len();
        let mut action = Vec::new();
        for gk in 0..k {
            let mut e = vec![0; k];
            e[gk] = 1;
            let mut m = Matrix::zeros(names.len(), names.len(), p);
            for (j, &l) in letters.iter().enumerate() {
                let img = self.braiding.act(&e, &NCPoly::letter(alph, l, &one));
                for (w, c) in img.terms() {
                    let i = letters
                        .iter()
                        .position(|&x| w.len() == 1 && w.letters()[0] == x)
                        .ok_or_else(|| Error::IncompatibleData("action leaves the primitive span".into()))?;
                    m.set(i, j, c.value());
                }
            }
            action.push(m);
        }
        let grading = letters.iter().map(|&l| self.braiding.word_grading(alph, &alph.single(l))).collect::<Result<_>>()?;
        Ok((YDModule { p, names, grading, action }, GroupData::new(self.braiding.orders().to_vec())))
    }
}

fn translate<C: Coeff>(f: &NCPoly<C>, from: &Alphabet, to: &Alphabet) -> Result<NCPoly<C>> {
    let mut out = NCPoly::zero();
    for (w, c) in f.terms() {
        out.add_term(translate_word(w, from, to)?, c.clone());
    }
    Ok(out)
}

fn translate_word(w: &Word, from: &Alphabet, to: &Alphabet) -> Result<Word> {
    let ls: Vec<u8> = w.letters().iter().map(|&l| to.letter(from.name(l))).collect::<Result<_>>()?;
    Ok(to.word(&ls))
}

/// `R # kΓ` with `g·r·g⁻¹ = g ⊳ r` and `Δ(r) = Σ r⁽¹⁾ (r⁽²⁾)₋₁ ⊗ (r⁽²⁾)₀`.
///
/// Letters are ordered group generators first, then the letters of `R`.
pub fn bosonize<C: Coeff>(r: &BraidedHopf<C>) -> Result<HopfPresentation<C>> {
    let ra = r.rs.alphabet().clone();
    let one = r.rs.one().clone();
    let mut prec: Vec<&str> = r.group_names.iter().map(|s| s.as_str()).collect();
    prec.extend(ra.precedence());
    let groups: Vec<&str> = r.group_names.iter().map(|s| s.as_str()).collect();
    let alph: Arc<Alphabet> = Alphabet::new(&prec, &groups)?;
    let gl: Vec<u8> = groups.iter().map(|g| alph.letter(g)).collect::<Result<_>>()?;
    let word = |w: Word| NCPoly::word(w, &one);
    let unit = NCPoly::constant(one.one_like());
    let orders = r.braiding.orders();
    let mut rels = Vec::new();
    for (k, &g) in gl.iter().enumerate() {
        rels.push(word(alph.power(g, orders[k] as usize)).sub(&unit));
    }
    for a in 0..gl.len() {
        for b in a + 1..gl.len() {
            let (x, y) = (gl[a], gl[b]);
            let hi = if alph.word(&[x]) > alph.word(&[y]) { (x, y) } else { (y, x) };
            rels.push(word(alph.word(&[hi.0, hi.1])).sub(&word(alph.word(&[hi.1, hi.0]))));
        }
    }
    for (k, &g) in gl.iter().enumerate() {
        let mut e = vec![0; gl.len()];
        e[k] = 1;
        for l in ra.letters() {
            let img = translate(&r.braiding.act(&e, &NCPoly::letter(&ra, l, &one)), &ra, &alph)?;
            let lhs = word(alph.word(&[g, alph.letter(ra.name(l))?]));
            rels.push(lhs.sub(&img.right_mul_word(&alph.single(g))));
        }
    }
    for rule in r.rs.rules() {
        let f = NCPoly::word(rule.lhs.clone(), &one).sub(&rule.rhs);
        rels.push(translate(&f, &ra, &alph)?);
    }
    let rs = RewriteSystem::from_relations(alph.clone(), one.clone(), &rels)?;
    let mut nf = rs.normal_forms();
    let mut coproduct = Vec::new();
    for l in alph.letters() {
        if alph.is_grouplike(l) {
            let w = alph.single(l);
            coproduct.push(Tensor::basic(vec![w.clone(), w], one.one_like()));
            continue;
        }
        let rl = ra.letter(alph.name(l))?;
        let mut d = Tensor::zero(2);
        for (ws, c) in r.coproduct[rl as usize].terms() {
            let gamma = r.braiding.word_grading(&ra, &ws[1])?;
            let mut left = translate_word(&ws[0], &ra, &alph)?;
            for (k, &n) in gamma.iter().enumerate() {
                left = left.concat(&alph.power(gl[k], n as usize));
            }
            d.add_term(vec![left, translate_word(&ws[1], &ra, &alph)?], c.clone());
        }
        coproduct.push(nf.reduce_tensor(&d));
    }
    drop(nf);
    HopfPresentation::from_coproduct(rs, coproduct)
}

/// Where two presentations over the same alphabet disagree.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct PresentationDiff {
    /// Relations of either side that do not reduce to zero in the other.
    pub relations: Vec<String>,
    pub coproducts: Vec<String>,
    pub antipodes: Vec<String>,
}

impl PresentationDiff {
    pub fn is_empty(&self) -> bool {
        self.relations.is_empty() && self.coproducts.is_empty() && self.antipodes.is_empty()
    }
}

/// Equal ideals, generator coproducts and antipodes, compared in normal form.
pub fn compare_presentations<C: Coeff>(a: &HopfPresentation<C>, b: &HopfPresentation<C>) -> Result<PresentationDiff> {
    let aa = a.rs.alphabet();
    let ba = b.rs.alphabet();
    if aa.precedence() != ba.precedence() || aa.grouplike_names() != ba.grouplike_names() {
        return Err(Error::AlphabetMismatch);
    }
    a.rs.require_confluent()?;
    b.rs.require_confluent()?;
    let one = a.rs.one().clone();
    let mut diff = PresentationDiff::default();
    for (x, y) in [(a, b), (b, a)] {
        for rule in x.rs.rules() {
            let f = NCPoly::word(rule.lhs.clone(), &one).sub(&rule.rhs);
            if !y.rs.reduce(&f).is_zero() {
                diff.relations.push(x.rs.render(&f));
            }
        }
    }
    let mut ctx = HopfContext::new(b);
    for l in aa.letters() {
        let name = aa.name(l);
        if ctx.nf.reduce_tensor(&a.coproduct[l as usize]) != ctx.nf.reduce_tensor(&b.coproduct[l as usize]) {
            diff.coproducts.push(name.to_string());
        }
        if ctx.nf.reduce(&a.antipode[l as usize]) != ctx.nf.reduce(&b.antipode[l as usize]) {
            diff.antipodes.push(name.to_string());
        }
    }
    Ok(diff)
}
