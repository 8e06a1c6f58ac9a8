//! Acceptance criteria 1–10, one PASS/FAIL line each.
//!
//! Runs without the libtest harness so the lines always reach stdout. A
//! criterion that fails only on the rows pinned below is reported as FAIL and
//! does not fail the target; any other failure does.

use std::collections::{BTreeMap, BTreeSet};
use std::process::ExitCode;

use pointed_hopf::catalog::{
    all_ids, b3_identity_suite, build_family_at, derived_constraints, list_representatives, stated_primitive_dim,
    sweep_family, CaseGroup, FamilyId, Tag,
};
use pointed_hopf::charp::lemma_suite;
use pointed_hopf::cobar::{hopf_subalgebra_h2, omega_tensor, truncated_polynomial, cobar_report, DEFAULT_CAP};
use pointed_hopf::hopf::HopfPresentation;
use pointed_hopf::ncalg::NCPoly;
use pointed_hopf::par::{with_threads, Parallelism};
use pointed_hopf::report::{
    axiom_rows, bosonization_rows, canonical_json, nichols_reports, report_all, sweep_targets, ReportConfig,
};
use pointed_hopf::scalars::{vanishing_locus_capped, Fp, DEFAULT_ENUM_CAP};

/// Rows inconsistent as printed: conjugation by g swaps x and y and collapses
/// the algebra. Criteria 1, 2 and 5 fail on exactly these.
const PINNED: [&str; 3] = ["A3b@p=2", "A3c@p=2", "A3e@p=2"];

struct Verdict {
    pass: bool,
    findings: Vec<String>,
    /// Families the criterion failed on; must lie inside `PINNED`.
    failed_families: BTreeSet<String>,
}

impl Verdict {
    fn new() -> Self {
        Verdict { pass: true, findings: Vec::new(), failed_families: BTreeSet::new() }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.pass = false;
            self.findings.push(what());
        }
    }

    fn check_family(&mut self, ok: bool, family: &FamilyId, what: impl FnOnce() -> String) {
        if !ok {
            self.failed_families.insert(family.to_string());
            self.check(false, what);
        }
    }

    /// Either passes, or fails on exactly the pinned rows and nothing else.
    fn acceptable(&self, pinned: &[&str]) -> bool {
        let pinned: BTreeSet<String> = pinned.iter().map(|s| s.to_string()).collect();
        self.pass || (self.failed_families == pinned && self.findings.len() == self.failed_families_findings())
    }

    fn failed_families_findings(&self) -> usize {
        self.findings.iter().filter(|f| self.failed_families.iter().any(|id| f.starts_with(id.as_str()))).count()
    }
}

/// `(a·b)·c = a·(b·c)` on normal forms for basis words `a, b` and letters `c`.
fn normal_forms_associative(h: &HopfPresentation<Fp>) -> bool {
    let one = *h.rs.one();
    let alph = h.rs.alphabet();
    let basis = h.rs.enumerate_basis().expect("confluent");
    let letters: Vec<NCPoly<Fp>> = alph.letters().map(|l| NCPoly::letter(alph, l, &one)).collect();
    let words: Vec<NCPoly<Fp>> = basis.iter().map(|w| NCPoly::word(w.clone(), &one)).collect();
    for a in &words {
        for b in &words {
            let ab = h.rs.reduce(&a.mul(b));
            for c in &letters {
                let left = h.rs.reduce(&ab.mul(c));
                let right = h.rs.reduce(&a.mul(&h.rs.reduce(&b.mul(c))));
                if left != right {
                    return false;
                }
            }
        }
    }
    true
}

fn criterion_1(par: Parallelism) -> Verdict {
    let mut v = Verdict::new();
    for p in [2, 3, 5] {
        for id in sweep_targets(p) {
            let s = sweep_family(&id, DEFAULT_ENUM_CAP, 1, par).unwrap();
            v.check_family(s.passed(), &id, || format!("{}: locus {} of {}, {} failures", id, s.locus_size, s.box_size, s.failures.len()));
            v.check(s.checked == s.box_size, || format!("{}: sweep not exhaustive", id));
            if s.passed() {
                let space = id.param_space();
                let locus = vanishing_locus_capped(&derived_constraints(&id, par).unwrap(), &space, DEFAULT_ENUM_CAP, par).unwrap();
                let h = build_family_at(&id, locus.points.iter().next().unwrap()).unwrap();
                v.check(normal_forms_associative(&h), || format!("{}: normal-form product not associative", id));
            }
        }
    }
    v
}

fn pow(x: u32, n: u32, p: u32) -> u32 {
    (0..n).fold(1, |acc, _| acc * x % p)
}

/// The printed constraint sets, evaluated pointwise in plain integers.
fn printed_locus_oracle(tag: Tag, p: u32, x: &[u32]) -> bool {
    let z = |e: u32| e.is_multiple_of(p);
    let sub = |a: u32, b: u32| (a + p - b % p) % p;
    match tag {
        Tag::A1a => {
            let (e1, e2, l, s, t) = (x[0], x[1], x[2], x[3], x[4]);
            let w = sub(e2, pow(s, p - 1, p));
            z(e1 * s) && z(l * s) && z(l * t) && z(w * s) && z(w * t)
        }
        Tag::Ca => {
            let (e3, s, t) = (x[0], x[1], x[2]);
            if p == 2 {
                z(e3 * s) && z(sub(e3, s) * s) && z(t * s)
            } else {
                let half = p.div_ceil(2);
                let third = (t + half * pow(s, p - 1, p) % p * e3) % p;
                z(e3 * s) && z(sub(e3, pow(s, p - 1, p)) * s) && z(third * s)
            }
        }
        Tag::Cb2 => {
            let (e1, s, t) = (x[0], x[1], x[2]);
            z(s * t) && z(sub(s * s, e1 * s)) && z(e1 * s)
        }
        _ => true,
    }
}

fn criterion_2(par: Parallelism) -> Verdict {
    let mut v = Verdict::new();
    for p in [2, 3] {
        for id in sweep_targets(p) {
            let space = id.param_space();
            let derived = vanishing_locus_capped(&derived_constraints(&id, par).unwrap(), &space, DEFAULT_ENUM_CAP, par).unwrap();
            let full = vanishing_locus_capped(&[], &space, DEFAULT_ENUM_CAP, par).unwrap();
            let oracle: BTreeSet<Vec<u32>> = full.points.iter().filter(|x| printed_locus_oracle(id.tag, p, x)).cloned().collect();
            v.check_family(derived.points == oracle, &id, || {
                format!("{}: derived locus {} points, printed {}", id, derived.len(), oracle.len())
            });
        }
    }
    v
}

fn criterion_3() -> Verdict {
    let mut v = Verdict::new();
    let jordan_p2: BTreeSet<&str> = [
        "1", "x1", "x2", "x1.x2", "x2.x1", "x2.x2", "x1.x2.x1", "x1.x2.x2", "x2.x1.x2", "x2.x2.x2", "x1.x2.x1.x2",
        "x1.x2.x2.x2", "x2.x1.x2.x2", "x1.x2.x1.x2.x2", "x2.x1.x2.x2.x2", "x1.x2.x1.x2.x2.x2",
    ]
    .into_iter()
    .collect();
    assert_eq!(jordan_p2.len(), 16);
    for r in nichols_reports(&[2, 3, 5]).unwrap() {
        let expected = if r.module == "jordan" && r.p == 2 { 16 } else { (r.p * r.p) as usize };
        v.check(r.dim == expected, || format!("{} at p={}: dim {} ≠ {}", r.module, r.p, r.dim, expected));
        v.check(r.holds(), || format!("{} at p={}: certificate or basis fails", r.module, r.p));
        if r.module == "jordan" {
            v.check(r.basis_matches == Some(true), || format!("jordan at p={}: basis differs from the listed monomials", r.p));
            if r.p > 2 {
                let ns: Vec<u32> = r.adjoint.iter().map(|a| a.n).collect();
                v.check(ns == (1..r.p).collect::<Vec<_>>(), || format!("jordan at p={}: adjoint identity not checked for every n < p", r.p));
            }
        }
    }
    let (m, g) = pointed_hopf::ydnichols::jordan_module(2);
    let n = pointed_hopf::ydnichols::nichols_presentation(&m, &g).unwrap();
    let got: BTreeSet<String> = n.basis().unwrap().iter().map(|w| n.rs.alphabet().render_word(w)).collect();
    v.check(got == jordan_p2.iter().map(|s| s.to_string()).collect(), || "jordan p=2 normal forms".into());
    v
}

fn criterion_4(par: Parallelism) -> Verdict {
    let mut v = Verdict::new();
    let rows = bosonization_rows(&[2, 3], par).unwrap();
    let at_three: BTreeSet<Tag> = rows.iter().filter(|r| r.row.p == 3).map(|r| r.row.tag).collect();
    let a3 = rows.iter().any(|r| r.row.p == 2 && r.row.tag == Tag::RA3);
    v.check(at_three.len() == 6 && a3, || format!("only {} row types at p=3", at_three.len()));
    for r in rows.iter().filter(|r| r.row.p == 3 || r.row.tag == Tag::RA3) {
        v.check(r.holds(), || format!("{} vs {}: {:?}", r.row, r.partner, r.diff));
    }
    v
}

fn stated_primitive_oracle(tag: Tag) -> Option<usize> {
    match tag {
        Tag::A1a | Tag::Ca | Tag::D1a | Tag::D2a => Some(1),
        Tag::A2(_) | Tag::A3(_) => Some(2),
        Tag::A1b | Tag::B3 | Tag::Cb2 | Tag::CbP | Tag::D1c | Tag::D2b => Some(0),
        _ => None,
    }
}

fn criterion_5(par: Parallelism) -> Verdict {
    let mut v = Verdict::new();
    let rows = axiom_rows(&[2, 3], par).unwrap();
    let graded = all_ids(&[2, 3]).into_iter().filter(|id| id.tag.is_graded()).count();
    v.check(rows.iter().filter(|r| r.family.tag.is_graded()).count() == graded, || "some graded row missing".into());
    for r in &rows {
        v.check_family(r.holds(), &r.family, || format!("{} {:?}: confluent={} axioms={}", r.family, r.values, r.confluent, r.axioms));
        if r.family.tag.is_lifted() {
            v.check(stated_primitive_dim(r.family.tag) == stated_primitive_oracle(r.family.tag), || format!("{}: stated P(H) table", r.family));
        }
    }
    v
}

/// `(Δ̄⊗1)ω = (1⊗Δ̄)ω` in `k[r]/(r^p)` with `Δ̄(r^n) = Σ_{0<k<n} C(n,k) r^k⊗r^{n−k}`.
fn omega_cocycle_oracle(p: u32) -> bool {
    let binom = |n: u32, k: u32| -> u64 { (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64) };
    let omega: Vec<(u32, u64)> = (1..p).map(|i| (i, binom(p, i) / p as u64)).collect();
    let mut left = BTreeMap::new();
    let mut right = BTreeMap::new();
    for &(i, c) in &omega {
        for k in 1..i {
            *left.entry((k, i - k, p - i)).or_insert(0) += c * binom(i, k);
        }
        for k in 1..p - i {
            *right.entry((i, k, p - i - k)).or_insert(0) += c * binom(p - i, k);
        }
    }
    let reduce = |m: BTreeMap<(u32, u32, u32), u64>| -> BTreeMap<(u32, u32, u32), u64> {
        m.into_iter().map(|(k, c)| (k, c % p as u64)).filter(|&(_, c)| c != 0).collect()
    };
    omega.iter().all(|&(_, c)| c % p as u64 != 0) && reduce(left) == reduce(right)
}

fn criterion_6() -> Verdict {
    let mut v = Verdict::new();
    for p in [2, 3, 5] {
        let b = truncated_polynomial(p).unwrap();
        let w = omega_tensor(&b, "r", None).unwrap();
        let r = cobar_report("k[r]/(r^p)", &b, Some(&w), DEFAULT_CAP).unwrap();
        v.check(r.dims.h2 == 1, || format!("H²(Ωk[r]/(r^{})) = {}", p, r.dims.h2));
        let graded: Vec<(String, usize)> = r.graded.clone().into_iter().collect();
        v.check(graded == vec![(format!("(2,{})", p), 1)], || format!("p={}: H² not concentrated in Adams degree p: {:?}", p, graded));
        v.check(r.omega_cocycle == Some(true) && omega_cocycle_oracle(p), || format!("p={}: ω not a cocycle", p));
        // B⁺ has no element of Adams degree p, so a nonzero ω there is never a coboundary.
        v.check(r.omega_coboundary == Some(false), || format!("p={}: ω is a coboundary", p));
        v.check(r.d_squared_zero, || format!("p={}: ∂∂ ≠ 0", p));
    }
    for p in [2, 3] {
        for eps in [0, 1] {
            let d = hopf_subalgebra_h2(p, eps, DEFAULT_CAP).unwrap();
            v.check(d == 1, || format!("H²(ΩA) = {} at p={} ε={}", d, p, eps));
        }
    }
    v
}

/// `δ(g^k) = k(g^k − g^{k+1})` on `C_q`, iterated in plain integers: returns
/// whether `δ^p = δ` and whether `δ^{p−1}(g) = g − g^p`.
fn derivation_oracle(p: u32, q: u32) -> (bool, bool) {
    let (pp, q) = (p as u64, q as usize);
    let apply = |v: &[u64]| -> Vec<u64> {
        let mut out = vec![0u64; q];
        for (k, &c) in v.iter().enumerate() {
            let kc = c * (k as u64 % pp) % pp;
            out[k] = (out[k] + kc) % pp;
            out[(k + 1) % q] = (out[(k + 1) % q] + pp - kc) % pp;
        }
        out
    };
    let power = |v: &[u64], m: u32| (0..m).fold(v.to_vec(), |acc, _| apply(&acc));
    let idempotent = (0..q).all(|k| {
        let mut e = vec![0u64; q];
        e[k] = 1;
        power(&e, p) == apply(&e)
    });
    let mut g = vec![0u64; q];
    g[1] = 1;
    let mut want = g.clone();
    want[p as usize % q] = (want[p as usize % q] + pp - 1) % pp;
    (idempotent, power(&g, p - 1) == want)
}

fn criterion_7(par: Parallelism) -> Verdict {
    let mut v = Verdict::new();
    let lemmas = lemma_suite(&[2, 3, 5], par).unwrap();
    for name in ["jacobson-free", "pthpower-1", "pthpower-2", "pthpower-3", "pthpower-4", "pthcoproduct"] {
        let ps: BTreeSet<u32> = lemmas.iter().filter(|l| l.lemma == name).map(|l| l.p).collect();
        v.check(ps == BTreeSet::from([2, 3, 5]), || format!("{} not run at every prime", name));
    }
    for l in &lemmas {
        v.check(l.pass, || format!("{} at p={}: {:?}", l.lemma, l.p, l.counterexample));
    }
    for p in [2, 3, 5] {
        for q in [p, p * p] {
            let (idem, gp) = derivation_oracle(p, q);
            v.check(idem && gp, || format!("derivation oracle on C_{} at p={}", q, p));
        }
    }
    v
}

fn criterion_8(par: Parallelism) -> Verdict {
    let mut v = Verdict::new();
    let checks = b3_identity_suite().unwrap();
    let displays = checks.iter().filter(|c| !c.name.contains(" = ")).count();
    v.check(displays == 10, || format!("{} displayed identities, not 10", displays));
    for c in &checks {
        v.check(c.holds(), || format!("{}: {}", c.name, c.residual));
    }
    let id = FamilyId::new(Tag::B3, 3, 0).unwrap();
    let s = sweep_family(&id, DEFAULT_ENUM_CAP, 1, par).unwrap();
    v.check(s.passed() && s.checked == s.box_size, || "B3 dimension sweep".into());
    for r in axiom_rows(&[3], par).unwrap().iter().filter(|r| r.family.tag == Tag::B3) {
        v.check(r.holds(), || format!("B3 {:?}: axioms", r.values));
    }
    v
}

fn criterion_9() -> Verdict {
    let mut v = Verdict::new();
    let stated: [(CaseGroup, u32, (usize, usize)); 12] = [
        (CaseGroup::A1Trivial, 2, (10, 1)),
        (CaseGroup::A1Trivial, 3, (10, 1)),
        (CaseGroup::A1Twisted, 3, (12, 2)),
        (CaseGroup::A2, 2, (5, 0)),
        (CaseGroup::A2, 3, (5, 0)),
        (CaseGroup::A3, 2, (5, 0)),
        (CaseGroup::Ca, 2, (2, 1)),
        (CaseGroup::Ca, 3, (2, 1)),
        (CaseGroup::D1, 2, (6, 1)),
        (CaseGroup::D1, 3, (6, 1)),
        (CaseGroup::D2, 2, (4, 1)),
        (CaseGroup::D2, 3, (4, 1)),
    ];
    for (g, p, want) in stated {
        let got = list_representatives(g, p).unwrap().counts();
        v.check(got == want, || format!("{} at p={}: listed {:?}, stated {:?}", g, p, got, want));
    }
    for p in [2, 3, 5] {
        for g in CaseGroup::all().into_iter().filter(|g| g.admissible(p)) {
            let got = list_representatives(g, p).unwrap().counts();
            v.check(got == g.stated_counts(p), || format!("{} at p={}: listed {:?}, case text {:?}", g, p, got, g.stated_counts(p)));
        }
    }
    let fams = list_representatives(CaseGroup::A1Twisted, 3).unwrap().counts().1;
    v.findings.push(format!("note: A1 u≠0 at p=3 has {} families by case analysis; the summary count 2(p−1) is 4", fams));
    v
}

fn criterion_10() -> Verdict {
    let mut v = Verdict::new();
    let cfg = ReportConfig::default();
    let primes = [2, 3, 5];
    let a = canonical_json(&report_all(&primes, &cfg, Parallelism::Parallel).unwrap());
    let b = canonical_json(&report_all(&primes, &cfg, Parallelism::Parallel).unwrap());
    let c = canonical_json(&report_all(&primes, &cfg, Parallelism::Sequential).unwrap());
    let d = with_threads(4, || canonical_json(&report_all(&primes, &cfg, Parallelism::Parallel).unwrap()));
    v.check(a == b, || "two parallel runs differ".into());
    v.check(a == c, || "parallel and sequential runs differ".into());
    v.check(a == d, || "4-thread run differs".into());
    v
}

fn main() -> ExitCode {
    let par = Parallelism::Parallel;
    let all: Vec<(u8, &str, Verdict, &[&str])> = vec![
        (1, "dimension claims", criterion_1(par), &PINNED),
        (2, "constraint loci", criterion_2(par), &PINNED),
        (3, "Nichols dimensions", criterion_3(), &[]),
        (4, "bosonization fidelity", criterion_4(par), &[]),
        (5, "Hopf axioms and P(H)", criterion_5(par), &PINNED),
        (6, "cohomology", criterion_6(), &[]),
        (7, "characteristic-p lemmas", criterion_7(par), &[]),
        (8, "case B3 identities", criterion_8(par), &[]),
        (9, "class counts", criterion_9(), &[]),
        (10, "determinism", criterion_10(), &[]),
    ];
    let mut ok = true;
    for (n, title, v, pinned) in &all {
        let status = if v.pass { "PASS" } else { "FAIL" };
        println!("criterion {:>2} {:<26} {}", n, title, status);
        for f in &v.findings {
            println!("    {}", f);
        }
        if !v.acceptable(pinned) {
            ok = false;
            println!("    unexpected failure set");
        } else if !v.pass {
            println!("    fails only on the pinned inconsistent rows: {}", pinned.join(", "));
        }
    }
    if ok {
        println!("acceptance: every criterion passes or fails only on the pinned rows");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: unexpected failures");
        ExitCode::FAILURE
    }
}
