//! The full verification report, one section per acceptance criterion.
//!
//! Output is canonical: sections are built in a fixed order, parallel maps
//! preserve order, and JSON objects are emitted with sorted keys.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::catalog::{
    all_ids, b3_identity_suite, build_braided, build_family, build_family_at, cross_check_constraints, graded_partner,
    lifted_families, list_representatives, stated_primitive_dim, sweep_family, CaseGroup, ConstraintVerdict, FamilyId,
    FamilySweep, IdentityCheck, Tag,
};
use crate::charp::{lemma_suite, LemmaReport};
use crate::cobar::{
    cobar_report, ext_nichols_check, hopf_subalgebra_h2, hsmash_check, omega_tensor, truncated_polynomial, CobarReport,
    ExtNicholsCheck, HsmashCheck,
};
use crate::cobar::DEFAULT_CAP;
use crate::error::{Error, Result};
use crate::par::Parallelism;
use crate::scalars::DEFAULT_ENUM_CAP;
use crate::ydnichols::{
    bosonize, classify_braiding, compare_presentations, jordan_adjoint_identity, jordan_module, nichols_presentation,
    trivial_module, verify_yd, AdjointCheck, BraidingClass, CertificateEntry, GroupData, PresentationDiff, YDModule,
};

pub const SCHEMA_VERSION: u32 = 1;

/// Normal-form basis of the Jordan Nichols algebra at p = 2, as listed.
pub const JORDAN_P2_BASIS: [&str; 16] = [
    "1",
    "x1",
    "x2",
    "x1.x2",
    "x2.x1",
    "x2.x2",
    "x1.x2.x1",
    "x1.x2.x2",
    "x2.x1.x2",
    "x2.x2.x2",
    "x1.x2.x1.x2",
    "x1.x2.x2.x2",
    "x2.x1.x2.x2",
    "x1.x2.x1.x2.x2",
    "x2.x1.x2.x2.x2",
    "x1.x2.x1.x2.x2.x2",
];

/// Families sampled at p = 5 for the dimension sweep.
pub const P5_SWEEP_TAGS: [Tag; 7] = [Tag::A1a, Tag::Ca, Tag::D1a, Tag::D1b, Tag::D1c, Tag::D2a, Tag::D2b];

/// Families with a printed constraint set.
pub const PRINTED_CONSTRAINT_TAGS: [Tag; 3] = [Tag::A1a, Tag::Ca, Tag::Cb2];

#[derive(Debug, Clone, Copy)]
pub struct ReportConfig {
    pub enum_cap: u64,
    pub cobar_cap: u64,
    /// Stride through the parameter box at p ≥ 5.
    pub p5_stride: usize,
}

impl Default for ReportConfig {
    fn default() -> Self {
        ReportConfig { enum_cap: DEFAULT_ENUM_CAP, cobar_cap: DEFAULT_CAP, p5_stride: 1 }
    }
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct NicholsReport {
    pub module: String,
    pub p: u32,
    pub class: String,
    pub dim: usize,
    pub expected_dim: usize,
    /// Normal-form basis equals the listed monomials (Jordan type only).
    pub basis_matches: Option<bool>,
    pub certificate: Vec<CertificateEntry>,
    pub adjoint: Vec<AdjointCheck>,
}

impl NicholsReport {
    pub fn holds(&self) -> bool {
        self.dim == self.expected_dim
            && self.basis_matches != Some(false)
            && self.certificate.iter().all(|c| c.primitive && c.quotient_confluent)
            && self.adjoint.iter().all(|a| a.holds)
    }
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct BosonizationRow {
    pub row: FamilyId,
    pub partner: FamilyId,
    pub yetter_drinfeld: bool,
    pub braiding: String,
    pub diff: PresentationDiff,
}

impl BosonizationRow {
    pub fn holds(&self) -> bool {
        self.yetter_drinfeld && self.diff.is_empty()
    }
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct AxiomRow {
    pub family: FamilyId,
    pub values: BTreeMap<String, u32>,
    pub confluent: bool,
    pub basis_count: Option<usize>,
    pub axioms: bool,
    pub primitive_dim: Option<usize>,
    pub stated_primitive_dim: Option<usize>,
}

impl AxiomRow {
    pub fn holds(&self) -> bool {
        self.confluent
            && self.axioms
            && self.basis_count == Some((self.family.p as usize).pow(3))
            && (self.stated_primitive_dim.is_none() || self.primitive_dim == self.stated_primitive_dim)
    }
}

/// Hopf axioms, dimension and primitive space of one numeric point.
pub fn axiom_row(id: &FamilyId, values: &BTreeMap<String, u32>) -> Result<AxiomRow> {
    let h = build_family(id, values)?;
    let confluent = h.rs.is_confluent(Parallelism::Sequential);
    let (basis_count, axioms, primitive_dim) = if confluent {
        (Some(h.rs.enumerate_basis()?.len()), h.audit().all_pass(), Some(h.primitive_dim()?))
    } else {
        (None, false, None)
    };
    Ok(AxiomRow {
        family: *id,
        values: values.clone(),
        confluent,
        basis_count,
        axioms,
        primitive_dim,
        stated_primitive_dim: if id.tag.is_lifted() { stated_primitive_dim(id.tag) } else { None },
    })
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CohomologySection {
    pub truncated: Vec<CobarReport>,
    /// `dim H²(ΩA)` keyed `p=…,eps=…`.
    pub subalgebra_h2: BTreeMap<String, usize>,
    pub ext_nichols: Vec<ExtNicholsCheck>,
    pub hsmash: Vec<HsmashCheck>,
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ClassCountRow {
    pub group: CaseGroup,
    pub p: u32,
    pub listed: (usize, usize),
    pub stated: (usize, usize),
    pub distinct: bool,
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CriterionLine {
    pub criterion: u8,
    pub title: String,
    pub pass: bool,
    pub findings: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct FullReport {
    pub schema_version: u32,
    pub primes: Vec<u32>,
    pub sweeps: Vec<FamilySweep>,
    pub constraints: Vec<ConstraintVerdict>,
    pub nichols: Vec<NicholsReport>,
    pub bosonization: Vec<BosonizationRow>,
    pub axioms: Vec<AxiomRow>,
    pub cohomology: CohomologySection,
    pub lemmas: Vec<LemmaReport>,
    pub b3_identities: Vec<IdentityCheck>,
    pub classes: Vec<ClassCountRow>,
    pub criteria: Vec<CriterionLine>,
}

impl FullReport {
    pub fn pass(&self) -> bool {
        self.criteria.iter().all(|c| c.pass)
    }
}

/// Sweep targets: every lifted family at p ≤ 3, the sampled list above.
pub fn sweep_targets(p: u32) -> Vec<FamilyId> {
    lifted_families(p).into_iter().filter(|id| p <= 3 || P5_SWEEP_TAGS.contains(&id.tag)).collect()
}

pub fn sweeps(primes: &[u32], cfg: &ReportConfig, par: Parallelism) -> Result<Vec<FamilySweep>> {
    let mut out = Vec::new();
    for &p in primes {
        let stride = if p <= 3 { 1 } else { cfg.p5_stride };
        for id in sweep_targets(p) {
            out.push(sweep_family(&id, cfg.enum_cap, stride, par)?);
        }
    }
    Ok(out)
}

/// Printed-set families plus every constraint-free family, at p ≤ 3.
pub fn constraint_checks(primes: &[u32], cfg: &ReportConfig, par: Parallelism) -> Result<Vec<ConstraintVerdict>> {
    let mut out = Vec::new();
    for &p in primes.iter().filter(|&&p| p <= 3) {
        for id in lifted_families(p) {
            out.push(cross_check_constraints(&id, cfg.enum_cap, par)?);
        }
    }
    Ok(out)
}

/// Nichols algebra of a rank-one or rank-two module with its certificate.
pub fn nichols_report(module: &str, v: &YDModule, g: &GroupData) -> Result<NicholsReport> {
    let p = v.p;
    let n = nichols_presentation(v, g)?;
    let alph = n.rs.alphabet().clone();
    let basis: BTreeSet<String> = n.basis()?.iter().map(|w| alph.render_word(w)).collect();
    let jordan = matches!(n.class, BraidingClass::Jordan { .. });
    let basis_matches = jordan.then(|| {
        if p == 2 {
            basis == JORDAN_P2_BASIS.iter().map(|s| s.to_string()).collect()
        } else {
            basis.iter().all(|w| !w.contains("x2.x1"))
        }
    });
    let adjoint = if jordan && p > 2 { jordan_adjoint_identity(p)? } else { vec![] };
    Ok(NicholsReport {
        module: module.to_string(),
        p,
        class: format!("{:?}", n.class),
        dim: basis.len(),
        expected_dim: if jordan && p == 2 { 16 } else { (p as usize).pow(v.dim() as u32) },
        basis_matches,
        certificate: n.certificate.clone(),
        adjoint,
    })
}

pub fn nichols_reports(primes: &[u32]) -> Result<Vec<NicholsReport>> {
    let mut out = Vec::new();
    for &p in primes {
        for (name, (v, g)) in [("diagonal", trivial_module(p)), ("jordan", jordan_module(p))] {
            out.push(nichols_report(name, &v, &g)?);
        }
    }
    Ok(out)
}

/// Bosonization of one braided row against its tabulated partner.
pub fn bosonization_row(id: &FamilyId) -> Result<BosonizationRow> {
    let r = build_braided(id)?;
    let partner = graded_partner(id).ok_or_else(|| Error::Inadmissible(format!("{} is not a braided row", id)))?;
    let (v, g) = r.yd_module()?;
    let braiding = match classify_braiding(&v) {
        Ok(c) => format!("{:?}", c),
        Err(e) => e.to_string(),
    };
    let diff = compare_presentations(&bosonize(&r)?, &build_family_at(&partner, &[])?)?;
    Ok(BosonizationRow { row: *id, partner, yetter_drinfeld: verify_yd(&v, &g), braiding, diff })
}

pub fn bosonization_rows(primes: &[u32], par: Parallelism) -> Result<Vec<BosonizationRow>> {
    let rows: Vec<FamilyId> = all_ids(primes).into_iter().filter(|id| id.tag.is_braided()).collect();
    par.map(&rows, bosonization_row).into_iter().collect()
}

/// Graded rows and every listed representative (families at free = 1), at p ≤ 3.
pub fn axiom_rows(primes: &[u32], par: Parallelism) -> Result<Vec<AxiomRow>> {
    let mut jobs: Vec<(FamilyId, BTreeMap<String, u32>)> = Vec::new();
    for &p in primes.iter().filter(|&&p| p <= 3) {
        for id in all_ids(&[p]).into_iter().filter(|id| id.tag.is_graded()) {
            jobs.push((id, BTreeMap::new()));
        }
        for g in CaseGroup::all().into_iter().filter(|g| g.admissible(p)) {
            let cl = list_representatives(g, p)?;
            jobs.extend(cl.representatives.into_iter().map(|r| (r.id, r.values)));
            for f in cl.infinite_families {
                let mut v = f.fixed;
                v.extend(f.free.into_iter().map(|n| (n, 1)));
                jobs.push((f.id, v));
            }
        }
    }
    par.map(&jobs, |(id, v)| axiom_row(id, v)).into_iter().collect()
}

pub fn cohomology_section(primes: &[u32], cfg: &ReportConfig) -> Result<CohomologySection> {
    let mut truncated = Vec::new();
    let mut subalgebra_h2 = BTreeMap::new();
    let mut ext_nichols = Vec::new();
    let mut hsmash = Vec::new();
    for &p in primes {
        let b = truncated_polynomial(p)?;
        let w = omega_tensor(&b, "r", None)?;
        truncated.push(cobar_report("k[r]/(r^p)", &b, Some(&w), cfg.cobar_cap)?);
        for eps in [0, 1] {
            ext_nichols.push(ext_nichols_check(p, eps)?);
            if p <= 3 {
                subalgebra_h2.insert(format!("p={},eps={}", p, eps), hopf_subalgebra_h2(p, eps, cfg.cobar_cap)?);
                hsmash.push(hsmash_check(p, eps, cfg.cobar_cap)?);
            }
        }
    }
    Ok(CohomologySection { truncated, subalgebra_h2, ext_nichols, hsmash })
}

pub fn class_counts(primes: &[u32]) -> Result<Vec<ClassCountRow>> {
    let mut out = Vec::new();
    for &p in primes {
        for g in CaseGroup::all().into_iter().filter(|g| g.admissible(p)) {
            let cl = list_representatives(g, p)?;
            let keys: BTreeSet<String> = cl.representatives.iter().map(|r| format!("{}{:?}", r.id, r.values)).collect();
            out.push(ClassCountRow {
                group: g,
                p,
                listed: cl.counts(),
                stated: g.stated_counts(p),
                distinct: keys.len() == cl.representatives.len(),
            });
        }
    }
    Ok(out)
}

fn line(criterion: u8, title: &str, findings: Vec<String>, fail: bool) -> CriterionLine {
    CriterionLine { criterion, title: title.to_string(), pass: !fail, findings }
}

/// Every section at the given primes, then one verdict per criterion 1–9.
pub fn report_all(primes: &[u32], cfg: &ReportConfig, par: Parallelism) -> Result<FullReport> {
    let mut primes = primes.to_vec();
    primes.sort_unstable();
    primes.dedup();
    let sweeps = sweeps(&primes, cfg, par)?;
    let constraints = constraint_checks(&primes, cfg, par)?;
    let nichols = nichols_reports(&primes)?;
    let bosonization = bosonization_rows(&primes, par)?;
    let axioms = axiom_rows(&primes, par)?;
    let cohomology = cohomology_section(&primes, cfg)?;
    let lemmas = lemma_suite(&primes, par)?;
    let b3_identities = if primes.contains(&3) { b3_identity_suite()? } else { vec![] };
    let classes = class_counts(&primes)?;

    let mut criteria = Vec::new();

    let bad: Vec<String> = sweeps.iter().filter(|s| !s.passed()).map(|s| format!("{} fails the dimension sweep", s.family)).collect();
    criteria.push(line(1, "dimension claims", bad.clone(), !bad.is_empty()));

    let bad: Vec<String> = constraints
        .iter()
        .filter(|v| {
            let constraint_free = v.printed.is_none() && v.derived_locus_size == v.full_space_size;
            !(v.matches || constraint_free)
        })
        .map(|v| format!("{}: derived locus {} points, printed {}", v.family, v.derived_locus_size, v.printed_locus_size))
        .collect();
    criteria.push(line(2, "constraint loci", bad.clone(), !bad.is_empty()));

    let bad: Vec<String> = nichols.iter().filter(|n| !n.holds()).map(|n| format!("{} at p={}", n.module, n.p)).collect();
    criteria.push(line(3, "Nichols dimensions", bad.clone(), !bad.is_empty()));

    let bad: Vec<String> = bosonization.iter().filter(|b| !b.holds()).map(|b| format!("{} vs {}", b.row, b.partner)).collect();
    criteria.push(line(4, "bosonization fidelity", bad.clone(), !bad.is_empty()));

    let bad: Vec<String> = axioms
        .iter()
        .filter(|a| !a.holds())
        .map(|a| format!("{} {:?}: confluent={} axioms={} P(H)={:?}", a.family, a.values, a.confluent, a.axioms, a.primitive_dim))
        .collect();
    criteria.push(line(5, "Hopf axioms and primitive spaces", bad.clone(), !bad.is_empty()));

    let mut bad = Vec::new();
    for r in &cohomology.truncated {
        let graded_ok = r.graded.len() == 1 && r.graded.get(&format!("(2,{})", r.p)) == Some(&1);
        if r.dims.h2 != 1 || !graded_ok || r.omega_cocycle != Some(true) || r.omega_coboundary != Some(false) || !r.d_squared_zero {
            bad.push(format!("k[r]/(r^p) at p={}", r.p));
        }
    }
    bad.extend(cohomology.subalgebra_h2.iter().filter(|(_, &d)| d != 1).map(|(k, d)| format!("H²(ΩA) = {} at {}", d, k)));
    bad.extend(cohomology.ext_nichols.iter().filter(|c| !c.holds()).map(|c| format!("ω(r) = ∂¹(b) fails at p={} eps={}", c.p, c.eps)));
    bad.extend(cohomology.hsmash.iter().filter(|c| !c.holds()).map(|c| format!("coinvariant H² differs at p={} eps={}", c.p, c.eps)));
    criteria.push(line(6, "cohomology", bad.clone(), !bad.is_empty()));

    let bad: Vec<String> = lemmas
        .iter()
        .filter(|l| !l.pass)
        .map(|l| format!("{} at p={}: {}", l.lemma, l.p, l.counterexample.clone().unwrap_or_default()))
        .collect();
    criteria.push(line(7, "characteristic-p lemmas", bad.clone(), !bad.is_empty()));

    if primes.contains(&3) {
        let mut bad: Vec<String> = b3_identities.iter().filter(|c| !c.holds()).map(|c| format!("{}: {}", c.name, c.residual)).collect();
        bad.extend(sweeps.iter().filter(|s| s.family.tag == Tag::B3 && !s.passed()).map(|s| format!("{} sweep", s.family)));
        bad.extend(axioms.iter().filter(|a| a.family.tag == Tag::B3 && !a.holds()).map(|a| format!("{} {:?} axioms", a.family, a.values)));
        criteria.push(line(8, "case B3 identities", bad.clone(), !bad.is_empty()));
    }

    let mut findings: Vec<String> =
        classes.iter().filter(|c| c.listed != c.stated || !c.distinct).map(|c| format!("{} at p={}: listed {:?}, stated {:?}", c.group, c.p, c.listed, c.stated)).collect();
    let fail = !findings.is_empty();
    for c in classes.iter().filter(|c| c.group == CaseGroup::A1Twisted) {
        findings.push(format!(
            "A1 u≠0 at p={}: case analysis gives {} families, the summary count 2(p−1) is = {}",
            c.p,
            c.listed.1,
            2 * (c.p - 1)
        ));
    }
    criteria.push(line(9, "class counts", findings, fail));

    Ok(FullReport {
        schema_version: SCHEMA_VERSION,
        primes,
        sweeps,
        constraints,
        nichols,
        bosonization,
        axioms,
        cohomology,
        lemmas,
        b3_identities,
        classes,
        criteria,
    })
}

/// Pretty JSON with every object's keys sorted.
pub fn canonical_json<T: Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("report types serialize");
    serde_json::to_string_pretty(&v).expect("values serialize")
}
