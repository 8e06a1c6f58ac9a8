//! Bergman diamond-lemma engine over an arbitrary coefficient ring.

mod basis;

use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ncalg::{text, Alphabet, Letter, NCPoly, Tensor, Word};
use crate::par::Parallelism;
use crate::scalars::Coeff;

pub use basis::BasisAutomaton;

/// Which redex of a word is rewritten first.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    Leftmost,
    Rightmost,
}

/// Monic rule `lhs → rhs`; every word of `rhs` is smaller than `lhs`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rule<C> {
    pub lhs: Word,
    pub rhs: NCPoly<C>,
}

/// An overlap `lhs_a = u·v`, `lhs_b = v·w` with `v` nonempty and proper in both.
#[derive(Debug, Clone)]
pub struct Ambiguity<C> {
    pub overlap: Word,
    pub rule_a: usize,
    pub rule_b: usize,
    /// Difference of the two one-step reductions of `overlap`.
    pub spoly: NCPoly<C>,
}

/// Inter-reduced rewriting presentation of an algebra.
#[derive(Debug, Clone)]
pub struct RewriteSystem<C> {
    alphabet: Arc<Alphabet>,
    rules: Vec<Rule<C>>,
    one: C,
    by_first: Vec<Vec<usize>>,
    group_orders: Vec<(Letter, u32)>,
}

impl<C: Coeff> RewriteSystem<C> {
    /// Validates the order condition and inter-reduction.
    pub fn new(alphabet: Arc<Alphabet>, one: C, rules: Vec<Rule<C>>) -> Result<Self> {
        for r in &rules {
            if r.lhs.is_empty() {
                return Err(Error::IncompatibleData("empty left side".into()));
            }
            if let Some((w, _)) = r.rhs.leading() {
                if *w >= r.lhs {
                    return Err(Error::OrderViolation {
                        lhs: alphabet.render_word(&r.lhs),
                        word: alphabet.render_word(w),
                    });
                }
            }
        }
        for (i, a) in rules.iter().enumerate() {
            for (j, b) in rules.iter().enumerate() {
                if i != j && b.lhs.contains(&a.lhs) {
                    return Err(Error::NotInterReduced {
                        inner: alphabet.render_word(&a.lhs),
                        outer: alphabet.render_word(&b.lhs),
                    });
                }
            }
        }
        let mut by_first = vec![Vec::new(); alphabet.len()];
        for (i, r) in rules.iter().enumerate() {
            by_first[r.lhs.letters()[0] as usize].push(i);
        }
        let mut group_orders = Vec::new();
        for r in &rules {
            let ls = r.lhs.letters();
            if alphabet.is_grouplike(ls[0]) && ls.iter().all(|&l| l == ls[0]) && r.rhs == NCPoly::constant(one.one_like()) {
                group_orders.push((ls[0], ls.len() as u32));
            }
        }
        Ok(RewriteSystem { alphabet, rules, one, by_first, group_orders })
    }

    /// Each relation `f = 0` becomes `LT(f) → LT(f) − f/lc(f)`.
    pub fn from_relations(alphabet: Arc<Alphabet>, one: C, relations: &[NCPoly<C>]) -> Result<Self> {
        let mut rules = Vec::with_capacity(relations.len());
        for f in relations {
            let (w, c) = match f.leading() {
                Some(x) => x,
                None => continue,
            };
            let inv = c.const_inverse().ok_or_else(|| Error::NotMonic(f.render(&alphabet)))?;
            let w = w.clone();
            let mut rhs = f.scale(&inv.c_neg());
            rhs.add_term(w.clone(), one.one_like());
            rules.push(Rule { lhs: w, rhs });
        }
        RewriteSystem::new(alphabet, one, rules)
    }

    /// Parses relations written as `lhs = rhs` or a single expression equal to zero.
    pub fn from_text(
        alphabet: Arc<Alphabet>,
        one: C,
        relations: &[&str],
        scalar: &dyn Fn(&str) -> Option<C>,
    ) -> Result<Self> {
        let mut polys = Vec::with_capacity(relations.len());
        for r in relations {
            let f = match r.split_once('=') {
                Some((l, rr)) => text::parse_poly(l, &alphabet, &one, scalar)?
                    .sub(&text::parse_poly(rr, &alphabet, &one, scalar)?),
                None => text::parse_poly(r, &alphabet, &one, scalar)?,
            };
            polys.push(f);
        }
        RewriteSystem::from_relations(alphabet, one, &polys)
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn rules(&self) -> &[Rule<C>] {
        &self.rules
    }

    pub fn one(&self) -> &C {
        &self.one
    }

    /// Orders of grouplike letters read off from rules `g^n → 1`.
    pub fn group_order(&self, l: Letter) -> Option<u32> {
        self.group_orders.iter().find(|(g, _)| *g == l).map(|(_, n)| *n)
    }

    pub fn letter_poly(&self, name: &str) -> Result<NCPoly<C>> {
        Ok(NCPoly::letter(&self.alphabet, self.alphabet.letter(name)?, &self.one))
    }

    pub fn parse(&self, s: &str, scalar: &dyn Fn(&str) -> Option<C>) -> Result<NCPoly<C>> {
        text::parse_poly(s, &self.alphabet, &self.one, scalar)
    }

    pub fn constant(&self, n: i64) -> NCPoly<C> {
        NCPoly::constant(self.one.int_like(n))
    }

    pub fn render(&self, f: &NCPoly<C>) -> String {
        f.render(&self.alphabet)
    }

    /// Position and rule index of the redex chosen by `strat`.
    pub fn find_redex(&self, w: &Word, strat: Strategy) -> Option<(usize, usize)> {
        let ls = w.letters();
        let test = |pos: usize| {
            self.by_first[ls[pos] as usize].iter().find(|&&ri| w.occurs_at(pos, &self.rules[ri].lhs)).map(|&ri| (pos, ri))
        };
        match strat {
            Strategy::Leftmost => (0..ls.len()).find_map(test),
            Strategy::Rightmost => (0..ls.len()).rev().find_map(test),
        }
    }

    pub fn is_irreducible(&self, w: &Word) -> bool {
        self.find_redex(w, Strategy::Leftmost).is_none()
    }

    pub fn reduce(&self, f: &NCPoly<C>) -> NCPoly<C> {
        self.reduce_with(f, Strategy::Leftmost)
    }

    /// Linear normal form: each word is rewritten at the redex `strat` picks,
    /// largest words first, until no redex remains.
    pub fn reduce_with(&self, f: &NCPoly<C>, strat: Strategy) -> NCPoly<C> {
        let mut work = f.clone();
        let mut out = NCPoly::zero();
        loop {
            let (w, c) = match work.leading() {
                Some((w, c)) => (w.clone(), c.clone()),
                None => return out,
            };
            work.add_term(w.clone(), c.c_neg());
            match self.find_redex(&w, strat) {
                None => out.add_term(w, c),
                Some((pos, ri)) => {
                    let rule = &self.rules[ri];
                    for (rw, rc) in rule.rhs.terms() {
                        work.add_term(w.splice(pos, &rule.lhs, rw), c.c_mul(rc));
                    }
                }
            }
        }
    }

    /// All overlap ambiguities with their S-polynomials.
    pub fn overlaps(&self) -> Vec<Ambiguity<C>> {
        let mut out = Vec::new();
        for (i, a) in self.rules.iter().enumerate() {
            let al = a.lhs.letters();
            for (j, b) in self.rules.iter().enumerate() {
                let bl = b.lhs.letters();
                for k in 1..al.len().min(bl.len()) {
                    if al[al.len() - k..] != bl[..k] {
                        continue;
                    }
                    let (_, tail) = b.lhs.split_at(k, &self.alphabet);
                    let (head, _) = a.lhs.split_at(al.len() - k, &self.alphabet);
                    let overlap = a.lhs.concat(&tail);
                    let spoly = a.rhs.right_mul_word(&tail).sub(&b.rhs.left_mul_word(&head));
                    out.push(Ambiguity { overlap, rule_a: i, rule_b: j, spoly });
                }
            }
        }
        out
    }

    /// Reduced S-polynomials, one per ambiguity, in overlap order.
    pub fn residues(&self, par: Parallelism) -> Vec<(Ambiguity<C>, NCPoly<C>)> {
        let ambs = self.overlaps();
        let red = par.map(&ambs, |a| self.reduce(&a.spoly));
        ambs.into_iter().zip(red).collect()
    }

    /// Every coefficient of every reduced S-polynomial, deduplicated and sorted.
    pub fn confluence_constraints(&self, par: Parallelism) -> Vec<C> {
        let mut set = BTreeSet::new();
        for (_, r) in self.residues(par) {
            for (_, c) in r.terms() {
                set.insert(c.clone());
            }
        }
        set.into_iter().collect()
    }

    pub fn unresolved_count(&self, par: Parallelism) -> usize {
        self.residues(par).iter().filter(|(_, r)| !r.is_zero()).count()
    }

    pub fn is_confluent(&self, par: Parallelism) -> bool {
        self.unresolved_count(par) == 0
    }

    pub fn require_confluent(&self) -> Result<()> {
        match self.unresolved_count(Parallelism::Sequential) {
            0 => Ok(()),
            n => Err(Error::NotConfluent(n)),
        }
    }

    /// Buchberger-style completion: nonzero residues become new rules until the
    /// system is confluent. Leading coefficients must be invertible constants.
    pub fn complete(&self, max_rounds: usize, par: Parallelism) -> Result<RewriteSystem<C>> {
        let mut cur = self.clone();
        for _ in 0..max_rounds {
            let pending: Vec<NCPoly<C>> = cur.residues(par).into_iter().map(|(_, r)| r).filter(|r| !r.is_zero()).collect();
            if pending.is_empty() {
                return Ok(cur);
            }
            for f in pending {
                cur = cur.adjoin(f)?;
            }
        }
        if cur.is_confluent(par) {
            Ok(cur)
        } else {
            Err(Error::NotConfluent(cur.unresolved_count(par)))
        }
    }

    /// Adds `f = 0`, re-queueing every rule whose left side the new one divides.
    fn adjoin(&self, f: NCPoly<C>) -> Result<RewriteSystem<C>> {
        let mut rules = self.rules.clone();
        let mut queue = vec![f];
        while let Some(f) = queue.pop() {
            let sys = RewriteSystem::new(self.alphabet.clone(), self.one.clone(), rules.clone())?;
            let f = sys.reduce(&f);
            let (w, c) = match f.leading() {
                Some((w, c)) => (w.clone(), c.clone()),
                None => continue,
            };
            let inv = c.const_inverse().ok_or_else(|| Error::NotMonic(f.render(&self.alphabet)))?;
            let mut rhs = f.scale(&inv.c_neg());
            rhs.add_term(w.clone(), self.one.one_like());
            let (keep, requeue): (Vec<Rule<C>>, Vec<Rule<C>>) = rules.into_iter().partition(|r| !r.lhs.contains(&w));
            rules = keep;
            for r in requeue {
                queue.push(NCPoly::word(r.lhs, &self.one).sub(&r.rhs));
            }
            rules.push(Rule { lhs: w, rhs });
        }
        let sys = RewriteSystem::new(self.alphabet.clone(), self.one.clone(), rules)?;
        let rules = sys.rules.iter().map(|r| Rule { lhs: r.lhs.clone(), rhs: sys.reduce(&r.rhs) }).collect();
        RewriteSystem::new(self.alphabet.clone(), self.one.clone(), rules)
    }

    /// Irreducible words, smallest first; the system must be confluent.
    pub fn enumerate_basis(&self) -> Result<Vec<Word>> {
        self.require_confluent()?;
        self.irreducible_words()
    }

    /// Irreducible words without the confluence precondition.
    pub fn irreducible_words(&self) -> Result<Vec<Word>> {
        let auto = BasisAutomaton::new(&self.alphabet, self.rules.iter().map(|r| &r.lhs));
        auto.enumerate(&self.alphabet)
    }

    pub fn map_coeffs<D: Coeff>(&self, one: D, f: impl Fn(&C) -> D) -> Result<RewriteSystem<D>> {
        let rules = self.rules.iter().map(|r| Rule { lhs: r.lhs.clone(), rhs: r.rhs.map_coeffs(&f) }).collect();
        RewriteSystem::new(self.alphabet.clone(), one, rules)
    }

    /// Rules rendered as `lhs -> rhs`, sorted by left side.
    pub fn rule_strings(&self) -> Vec<String> {
        let mut rs: Vec<&Rule<C>> = self.rules.iter().collect();
        rs.sort_by(|a, b| a.lhs.cmp(&b.lhs));
        rs.iter()
            .map(|r| format!("{} -> {}", self.alphabet.render_word(&r.lhs), r.rhs.render(&self.alphabet)))
            .collect()
    }

    /// Rules with fully reduced right sides, as a set keyed by left side.
    pub fn normalized_rules(&self) -> Vec<(Word, NCPoly<C>)> {
        let mut v: Vec<(Word, NCPoly<C>)> =
            self.rules.iter().map(|r| (r.lhs.clone(), self.reduce(&r.rhs))).collect();
        v.sort_by(|a, b| a.0.cmp(&b.0));
        v
    }

    pub fn normal_forms(&self) -> NormalForms<'_, C> {
        NormalForms { rs: self, cache: HashMap::new() }
    }
}

/// Memoized word normal forms for repeated reductions against one system.
pub struct NormalForms<'a, C> {
    rs: &'a RewriteSystem<C>,
    cache: HashMap<Word, NCPoly<C>>,
}

impl<C: Coeff> NormalForms<'_, C> {
    pub fn system(&self) -> &RewriteSystem<C> {
        self.rs
    }

    pub fn word(&mut self, w: &Word) -> NCPoly<C> {
        if let Some(f) = self.cache.get(w) {
            return f.clone();
        }
        let f = self.rs.reduce(&NCPoly::word(w.clone(), &self.rs.one));
        self.cache.insert(w.clone(), f.clone());
        f
    }

    pub fn reduce(&mut self, f: &NCPoly<C>) -> NCPoly<C> {
        let mut out = NCPoly::zero();
        for (w, c) in f.terms() {
            let nf = self.word(w);
            out.add_scaled(&nf, c);
        }
        out
    }

    /// Reduces every tensor factor.
    pub fn reduce_tensor(&mut self, t: &Tensor<C>) -> Tensor<C> {
        let mut out = Tensor::zero(t.arity());
        for (ws, c) in t.terms() {
            let nfs: Vec<NCPoly<C>> = ws.iter().map(|w| self.word(w)).collect();
            let refs: Vec<&NCPoly<C>> = nfs.iter().collect();
            out.add_scaled(&Tensor::pure(&refs), c);
        }
        out
    }

    /// Product of two elements, reduced.
    pub fn mul(&mut self, a: &NCPoly<C>, b: &NCPoly<C>) -> NCPoly<C> {
        let prod = a.mul(b);
        self.reduce(&prod)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::Fp;

    fn sys(p: u32, prec: &[&str], group: &[&str], rels: &[&str]) -> RewriteSystem<Fp> {
        let a = Alphabet::new(prec, group).unwrap();
        RewriteSystem::from_text(a, Fp::one(p), rels, &|_| None).unwrap()
    }

    #[test]
    fn single_self_overlap() {
        let rs = sys(2, &["x"], &[], &["x^2"]);
        let ov = rs.overlaps();
        assert_eq!(ov.len(), 1);
        assert_eq!(rs.alphabet().render_word(&ov[0].overlap), "x.x.x");
        let basis = rs.enumerate_basis().unwrap();
        assert_eq!(basis.len(), 2);
    }

    #[test]
    fn grouplike_tail_reduction() {
        let rs = sys(3, &["g", "x"], &["g"], &["g^3 = 1", "g.x - x.g = g - g^2", "x^3 = x"]);
        let gx = rs.parse("g.x", &|_| None).unwrap();
        assert_eq!(rs.render(&rs.reduce(&gx)), "x.g + 2*g.g + g");
        assert_eq!(rs.render(&rs.reduce(&rs.parse("g^3", &|_| None).unwrap())), "1");
        assert!(rs.is_confluent(Parallelism::Sequential));
        assert_eq!(rs.enumerate_basis().unwrap().len(), 9);
        assert_eq!(rs.group_order(rs.alphabet().letter("g").unwrap()), Some(3));
    }

    #[test]
    fn rejects_bad_systems() {
        let a = Alphabet::new(&["x", "y"], &[]).unwrap();
        let one = Fp::one(3);
        let r = RewriteSystem::from_text(a.clone(), one, &["x^2", "x^3"], &|_| None);
        assert!(matches!(r, Err(Error::NotInterReduced { .. })));
        let bad = Rule { lhs: a.parse_word("y").unwrap(), rhs: NCPoly::word(a.parse_word("x").unwrap(), &one) };
        assert!(matches!(RewriteSystem::new(a, one, vec![bad]), Err(Error::OrderViolation { .. })));
    }

    #[test]
    fn non_confluent_detected() {
        let rs = sys(3, &["x", "y"], &[], &["x.y = y.x + x", "x^3", "y^3"]);
        assert!(!rs.is_confluent(Parallelism::Sequential));
        assert!(matches!(rs.enumerate_basis(), Err(Error::NotConfluent(_))));
    }

    #[test]
    fn completion_collapses_inconsistent_swap() {
        // Conjugating x² = x by g forces y² = y, so y = 0 and then x = 0.
        let rs = sys(2, &["g", "x", "y"], &["g"], &["g^2 = 1", "g.x = y.g", "g.y = x.g", "x^2 = x", "y^2", "x.y = y.x"]);
        let done = rs.complete(20, Parallelism::Sequential).unwrap();
        assert_eq!(done.enumerate_basis().unwrap().len(), 2);
        let ok = sys(2, &["g", "x", "y"], &["g"], &["g^2 = 1", "g.x = y.g", "g.y = x.g", "x^2 = x", "y^2 = y", "x.y = y.x"]);
        assert_eq!(ok.complete(20, Parallelism::Sequential).unwrap().enumerate_basis().unwrap().len(), 8);
    }

    #[test]
    fn infinite_language() {
        let rs = sys(3, &["x", "y"], &[], &["x.y = y.x"]);
        assert_eq!(rs.irreducible_words(), Err(Error::InfiniteBasis));
    }
}
