//! Constructors for the tabulated braided Hopf algebras, their bosonizations and
//! every lifted family, with printed constraint sets and class lists.

mod b3;
mod classes;
mod families;
mod sweep;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hopf::HopfPresentation;
use crate::ncalg::{text, Alphabet, NCPoly, Tensor, Word};
use crate::par::Parallelism;
use crate::rewrite::RewriteSystem;
use crate::scalars::{vanishing_locus_capped, Coeff, Fp, Locus, ParamPoly, ParamSpace};
use crate::ydnichols::BraidedHopf;

pub use b3::{b3_identity_suite, IdentityCheck};
pub use classes::{list_representatives, CaseGroup, ClassList, ParamFamily, Representative};
pub use families::omega_coefficient;
pub use sweep::{sweep_family, sweep_subbox, FamilySweep, PointCheck};

/// Case tag of a catalogued object.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Tag {
    RA1,
    RA2,
    RA3,
    RB,
    RC,
    RD1,
    RD2,
    GrA1,
    GrA2,
    GrA3,
    GrB,
    GrC,
    GrD1,
    GrD2,
    A1a,
    A1b,
    A2(char),
    A2Gen,
    A3(char),
    A3Gen,
    B3,
    BGen,
    Ca,
    Cb2,
    CbP,
    D1a,
    D1b,
    D1c,
    D2a,
    D2b,
}

impl Tag {
    pub fn all() -> Vec<Tag> {
        let mut v = vec![
            Tag::RA1,
            Tag::RA2,
            Tag::RA3,
            Tag::RB,
            Tag::RC,
            Tag::RD1,
            Tag::RD2,
            Tag::GrA1,
            Tag::GrA2,
            Tag::GrA3,
            Tag::GrB,
            Tag::GrC,
            Tag::GrD1,
            Tag::GrD2,
            Tag::A1a,
            Tag::A1b,
        ];
        v.extend("abcde".chars().map(Tag::A2));
        v.push(Tag::A2Gen);
        v.extend("abcde".chars().map(Tag::A3));
        v.extend([Tag::A3Gen, Tag::B3, Tag::BGen, Tag::Ca, Tag::Cb2, Tag::CbP, Tag::D1a, Tag::D1b, Tag::D1c, Tag::D2a, Tag::D2b]);
        v
    }

    pub fn name(self) -> String {
        match self {
            Tag::RA1 => "R-A1".into(),
            Tag::RA2 => "R-A2".into(),
            Tag::RA3 => "R-A3".into(),
            Tag::RB => "R-B".into(),
            Tag::RC => "R-C".into(),
            Tag::RD1 => "R-D1".into(),
            Tag::RD2 => "R-D2".into(),
            Tag::GrA1 => "GR-A1".into(),
            Tag::GrA2 => "GR-A2".into(),
            Tag::GrA3 => "GR-A3".into(),
            Tag::GrB => "GR-B".into(),
            Tag::GrC => "GR-C".into(),
            Tag::GrD1 => "GR-D1".into(),
            Tag::GrD2 => "GR-D2".into(),
            Tag::A1a => "A1a".into(),
            Tag::A1b => "A1b".into(),
            Tag::A2(c) => format!("A2{}", c),
            Tag::A2Gen => "A2".into(),
            Tag::A3(c) => format!("A3{}", c),
            Tag::A3Gen => "A3".into(),
            Tag::B3 => "B3".into(),
            Tag::BGen => "B".into(),
            Tag::Ca => "Ca".into(),
            Tag::Cb2 => "Cb2".into(),
            Tag::CbP => "CbP".into(),
            Tag::D1a => "D1a".into(),
            Tag::D1b => "D1b".into(),
            Tag::D1c => "D1c".into(),
            Tag::D2a => "D2a".into(),
            Tag::D2b => "D2b".into(),
        }
    }

    pub fn is_braided(self) -> bool {
        matches!(self, Tag::RA1 | Tag::RA2 | Tag::RA3 | Tag::RB | Tag::RC | Tag::RD1 | Tag::RD2)
    }

    pub fn is_graded(self) -> bool {
        matches!(self, Tag::GrA1 | Tag::GrA2 | Tag::GrA3 | Tag::GrB | Tag::GrC | Tag::GrD1 | Tag::GrD2)
    }

    pub fn is_lifted(self) -> bool {
        !self.is_braided() && !self.is_graded()
    }

    /// Meaning of the discrete index carried by a `FamilyId`, if any.
    pub fn discrete(self) -> Option<&'static str> {
        match self {
            Tag::RA1 | Tag::GrA1 | Tag::A1b => Some("u"),
            Tag::RC | Tag::GrC | Tag::RD1 | Tag::GrD1 | Tag::RD2 | Tag::GrD2 => Some("eps"),
            _ => None,
        }
    }

    /// Parameter names and the subset ranging over {0,1}.
    pub fn schema(self, p: u32) -> (Vec<String>, Vec<String>) {
        let v = |xs: &[&str]| xs.iter().map(|x| x.to_string()).collect::<Vec<_>>();
        match self {
            Tag::A1a => (v(&["e1", "e2", "l", "s", "t"]), v(&["e1", "e2"])),
            Tag::A1b => (v(&["e1", "e2", "t"]), v(&["e1", "e2"])),
            Tag::A2Gen | Tag::A3Gen => (v(&["l", "m", "s", "t", "al", "be"]), vec![]),
            Tag::B3 => (v(&["e", "m", "t"]), v(&["e"])),
            Tag::BGen => {
                let mut names = v(&["e", "m", "t"]);
                names.extend((1..p).map(|i| format!("f{}", i)));
                (names, v(&["e"]))
            }
            Tag::Ca => (v(&["e3", "s", "t"]), v(&["e3"])),
            Tag::Cb2 => (v(&["e1", "s", "t"]), v(&["e1"])),
            Tag::CbP => (v(&["t"]), vec![]),
            Tag::D1a | Tag::D2a => (v(&["l"]), vec![]),
            Tag::D1b => (v(&["e1", "l"]), v(&["e1"])),
            Tag::D1c => (v(&["e1"]), v(&["e1"])),
            Tag::D2b => (v(&["e1", "t"]), v(&["e1"])),
            _ => (vec![], vec![]),
        }
    }

    /// Heading of the case this object is classified under.
    pub fn anchor(self) -> String {
        match self {
            t if t.is_braided() => format!("Structure of R, type ({})", &t.name()[2..]),
            t if t.is_graded() => format!("Structure of gr H, type ({})", &t.name()[3..]),
            Tag::A1a => "Case (A1), u = 0".into(),
            Tag::A1b => "Case (A1), u ≠ 0".into(),
            Tag::A2(c) => format!("Case (A2), class (A2-{})", c),
            Tag::A2Gen => "Case (A2), general relations".into(),
            Tag::A3(c) => format!("Case (A3), p = 2, class (A3-{})", c),
            Tag::A3Gen => "Case (A3), general relations".into(),
            Tag::B3 => "Case (B) for p = 3".into(),
            Tag::BGen => "Case (B), conjectured lifting for p > 3".into(),
            Tag::Ca => "Case (Ca)".into(),
            Tag::Cb2 => "Case (Cb) for p = 2".into(),
            Tag::CbP => "Case (Cb) for p > 2 with gx = xg".into(),
            Tag::D1a => "Case (D1a)".into(),
            Tag::D1b => "Case (D1b)".into(),
            Tag::D1c => "Case (D1c)".into(),
            Tag::D2a => "Case (D2a)".into(),
            _ => "Case (D2b)".into(),
        }
    }
}

impl fmt::Display for Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl FromStr for Tag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Tag> {
        let norm = s.replace('_', "-");
        let norm = norm.trim();
        for t in Tag::all() {
            let n = t.name();
            if n.eq_ignore_ascii_case(norm) || n.replace('-', "").eq_ignore_ascii_case(&norm.replace('-', "")) {
                return Ok(t);
            }
        }
        Err(Error::UnknownName(s.to_string()))
    }
}

/// A catalogued object: case tag, characteristic and discrete index (`u` or `ε`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FamilyId {
    pub tag: Tag,
    pub p: u32,
    pub disc: u32,
}

impl FamilyId {
    pub fn new(tag: Tag, p: u32, disc: u32) -> Result<FamilyId> {
        let id = FamilyId { tag, p, disc };
        id.check_admissible()?;
        Ok(id)
    }

    pub fn check_admissible(&self) -> Result<()> {
        let p = self.p;
        let bad = |why: &str| Err(Error::Inadmissible(format!("{} at p={}: {}", self.tag, p, why)));
        if ![2, 3, 5, 7].contains(&p) {
            return bad("p must be one of 2, 3, 5, 7");
        }
        match self.tag {
            Tag::RA3 | Tag::GrA3 | Tag::A3(_) | Tag::A3Gen | Tag::Cb2 if p != 2 => return bad("requires p = 2"),
            Tag::RB | Tag::GrB | Tag::CbP if p == 2 => return bad("requires p > 2"),
            Tag::B3 if p != 3 => return bad("requires p = 3"),
            Tag::BGen if p <= 3 => return bad("requires p > 3"),
            _ => {}
        }
        if let Tag::A2(c) | Tag::A3(c) = self.tag {
            if !"abcde".contains(c) {
                return bad("class must be a..e");
            }
        }
        let ok = match self.tag {
            Tag::RA1 | Tag::GrA1 => self.disc < p,
            Tag::A1b => (1..p).contains(&self.disc),
            Tag::RC | Tag::GrC | Tag::RD2 | Tag::GrD2 => self.disc <= 1,
            Tag::RD1 | Tag::GrD1 => self.disc <= 1 || self.disc == p,
            _ => self.disc == 0,
        };
        if !ok {
            return bad(&format!("discrete index {} out of range", self.disc));
        }
        Ok(())
    }

    pub fn params(&self) -> (Vec<String>, Vec<String>) {
        self.tag.schema(self.p)
    }

    pub fn param_space(&self) -> Arc<ParamSpace> {
        let (names, eps) = self.params();
        let n: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
        let e: Vec<&str> = eps.iter().map(|s| s.as_str()).collect();
        ParamSpace::new(self.p, &n, &e)
    }

    /// Parses `TAG`, `TAG:u=2` or `TAG:eps=1` with an explicit `p`.
    pub fn parse(s: &str, p: u32) -> Result<FamilyId> {
        let (tag, disc) = match s.split_once(':') {
            Some((t, d)) => {
                let v = d.split_once('=').map(|(_, v)| v).unwrap_or(d);
                (t, v.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad discrete index in {:?}", s)))?)
            }
            None => (s, 0),
        };
        FamilyId::new(tag.parse()?, p, disc)
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.tag.discrete() {
            Some(k) => write!(f, "{}:{}={}@p={}", self.tag, k, self.disc, self.p),
            None => write!(f, "{}@p={}", self.tag, self.p),
        }
    }
}

impl Serialize for FamilyId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

fn half(p: u32) -> Option<Fp> {
    Fp::new(2, p).inv().ok()
}

fn assemble<C: Coeff>(bp: &families::Blueprint, one: &C, scalar: &dyn Fn(&str) -> Option<C>) -> Result<HopfPresentation<C>> {
    let prec: Vec<&str> = bp.precedence.iter().map(|s| s.as_str()).collect();
    let group: Vec<&str> = bp.grouplike.iter().map(|s| s.as_str()).collect();
    let alph = Alphabet::new(&prec, &group)?;
    let rels: Vec<&str> = bp.relations.iter().map(|s| s.as_str()).collect();
    let rs = RewriteSystem::from_text(alph.clone(), one.clone(), &rels, scalar)?;
    let mut coproduct = Vec::with_capacity(alph.len());
    for l in alph.letters() {
        let name = alph.name(l);
        if alph.is_grouplike(l) {
            let w = alph.single(l);
            coproduct.push(Tensor::basic(vec![w.clone(), w], one.one_like()));
        } else {
            let (_, t) = bp
                .coproduct
                .iter()
                .find(|(n, _)| n == name)
                .ok_or_else(|| Error::IncompatibleData(format!("no coproduct for {}", name)))?;
            coproduct.push(text::parse_tensor(t, &alph, one, scalar, 2)?);
        }
    }
    if bp.antipode.is_empty() {
        return HopfPresentation::from_coproduct(rs, coproduct);
    }
    let mut antipode = Vec::with_capacity(alph.len());
    let mut counit = Vec::with_capacity(alph.len());
    for l in alph.letters() {
        let name = alph.name(l);
        if alph.is_grouplike(l) {
            let n = rs.group_order(l).ok_or_else(|| Error::IncompatibleData(format!("no order for {}", name)))?;
            antipode.push(NCPoly::word(alph.power(l, n as usize - 1), one));
            counit.push(one.one_like());
        } else {
            let (_, t) = bp
                .antipode
                .iter()
                .find(|(n, _)| n == name)
                .ok_or_else(|| Error::IncompatibleData(format!("no antipode for {}", name)))?;
            antipode.push(rs.reduce(&text::parse_poly(t, &alph, one, scalar)?));
            counit.push(one.zero_like());
        }
    }
    HopfPresentation::new(rs, coproduct, counit, antipode)
}

/// Resolves every schema parameter; missing names default to 0.
fn numeric_resolver(id: &FamilyId, values: &BTreeMap<String, u32>) -> Result<impl Fn(&str) -> Option<Fp>> {
    let (names, eps) = id.params();
    for k in values.keys() {
        if !names.contains(k) {
            return Err(Error::UnknownName(format!("{} has no parameter {}", id.tag, k)));
        }
    }
    for e in &eps {
        if values.get(e).copied().unwrap_or(0) > 1 {
            return Err(Error::Inadmissible(format!("{} must be 0 or 1", e)));
        }
    }
    let p = id.p;
    let vals: BTreeMap<String, Fp> = names.iter().map(|n| (n.clone(), Fp::new(values.get(n).copied().unwrap_or(0) as i64, p))).collect();
    Ok(move |name: &str| if name == "half" { half(p) } else { vals.get(name).copied() })
}

/// The presentation at a numeric parameter point.
pub fn build_family(id: &FamilyId, values: &BTreeMap<String, u32>) -> Result<HopfPresentation<Fp>> {
    let bp = families::blueprint(id)?;
    let resolve = numeric_resolver(id, values)?;
    assemble(&bp, &Fp::one(id.p), &resolve)
}

/// The presentation at a point given positionally in schema order.
pub fn build_family_at(id: &FamilyId, point: &[u32]) -> Result<HopfPresentation<Fp>> {
    let (names, _) = id.params();
    if point.len() != names.len() {
        return Err(Error::ArityMismatch { expected: names.len(), got: point.len() });
    }
    build_family(id, &names.into_iter().zip(point.iter().copied()).collect())
}

/// The presentation with every parameter kept symbolic.
pub fn build_parametric(id: &FamilyId) -> Result<HopfPresentation<ParamPoly>> {
    let bp = families::blueprint(id)?;
    let space = id.param_space();
    let one = ParamPoly::constant(&space, 1);
    let sp = space.clone();
    let h = half(id.p);
    let resolve = move |name: &str| -> Option<ParamPoly> {
        if name == "half" {
            h.map(|v| ParamPoly::constant(&sp, v.value() as i64))
        } else {
            sp.index_of(name).map(|i| ParamPoly::var(&sp, i))
        }
    };
    assemble(&bp, &one, &resolve)
}

/// A tabulated braided Hopf algebra with its Yetter–Drinfeld data.
pub fn build_braided(id: &FamilyId) -> Result<BraidedHopf<Fp>> {
    let bp = families::braided_blueprint(id)?;
    let p = id.p;
    let one = Fp::one(p);
    let scalar = move |n: &str| if n == "half" { half(p) } else { None };
    let prec: Vec<&str> = bp.precedence.iter().map(|s| s.as_str()).collect();
    let alph = Alphabet::new(&prec, &[])?;
    let rels: Vec<&str> = bp.relations.iter().map(|s| s.as_str()).collect();
    let rs = RewriteSystem::from_text(alph.clone(), one, &rels, &scalar)?;
    let mut coproduct = Vec::new();
    for l in alph.letters() {
        let (_, t) = bp.coproduct.iter().find(|(n, _)| n == alph.name(l)).expect("coproduct per generator");
        coproduct.push(text::parse_tensor(t, &alph, &one, &scalar, 2)?);
    }
    // Blueprint lists follow `precedence`; letter indices run the other way.
    let mut action = Vec::new();
    for images in &bp.action {
        let mut row = vec![NCPoly::zero(); alph.len()];
        for (name, t) in bp.precedence.iter().zip(images) {
            row[alph.letter(name)? as usize] = text::parse_poly(t, &alph, &one, &scalar)?;
        }
        action.push(row);
    }
    let mut grading = vec![None; alph.len()];
    for (name, g) in bp.precedence.iter().zip(&bp.grading) {
        grading[alph.letter(name)? as usize] = Some(g.clone());
    }
    BraidedHopf::new(rs, coproduct, bp.group_names.clone(), crate::ncalg::BraidingData::new(bp.orders.clone(), grading, action))
}

/// The tabulated bosonization matching a braided row.
pub fn graded_partner(id: &FamilyId) -> Option<FamilyId> {
    let tag = match id.tag {
        Tag::RA1 => Tag::GrA1,
        Tag::RA2 => Tag::GrA2,
        Tag::RA3 => Tag::GrA3,
        Tag::RB => Tag::GrB,
        Tag::RC => Tag::GrC,
        Tag::RD1 => Tag::GrD1,
        Tag::RD2 => Tag::GrD2,
        _ => return None,
    };
    Some(FamilyId { tag, ..*id })
}

/// The graded row a lifted family degenerates to when every parameter vanishes.
pub fn degeneration_target(id: &FamilyId) -> Option<FamilyId> {
    let p = id.p;
    let (tag, disc) = match id.tag {
        Tag::A1a => (Tag::GrA1, 0),
        Tag::A1b => (Tag::GrA1, id.disc),
        Tag::A2(_) | Tag::A2Gen => (Tag::GrA2, 0),
        Tag::A3(_) | Tag::A3Gen => (Tag::GrA3, 0),
        Tag::B3 | Tag::BGen => (Tag::GrB, 0),
        Tag::Ca => (Tag::GrC, 0),
        Tag::Cb2 | Tag::CbP => (Tag::GrC, 1),
        Tag::D1a => (Tag::GrD1, 0),
        Tag::D1b => (Tag::GrD1, 1),
        Tag::D1c => (Tag::GrD1, p),
        Tag::D2a => (Tag::GrD2, 0),
        Tag::D2b => (Tag::GrD2, 1),
        _ => return None,
    };
    Some(FamilyId { tag, p, disc })
}

/// `dim P(H)` where the case text states the primitive space; `None` where it is silent.
pub fn stated_primitive_dim(tag: Tag) -> Option<usize> {
    match tag {
        Tag::A1a | Tag::Ca | Tag::D1a | Tag::D2a => Some(1),
        Tag::A2(_) | Tag::A2Gen | Tag::A3(_) | Tag::A3Gen => Some(2),
        Tag::A1b | Tag::B3 | Tag::BGen | Tag::Cb2 | Tag::CbP | Tag::D1c | Tag::D2b => Some(0),
        _ => None,
    }
}

/// Printed constraint set; `None` when the case states that no condition arises.
pub fn printed_constraints(id: &FamilyId) -> Result<Option<Vec<ParamPoly>>> {
    id.check_admissible()?;
    let p = id.p;
    let texts: Vec<String> = match id.tag {
        Tag::A1a => vec![
            "e1*s".into(),
            "l*s".into(),
            "l*t".into(),
            format!("(e2 - s^{})*s", p - 1),
            format!("(e2 - s^{})*t", p - 1),
        ],
        Tag::Ca if p == 2 => vec!["e3*s".into(), "(e3 - s)*s".into(), "t*s".into()],
        Tag::Ca => vec!["e3*s".into(), format!("(e3 - s^{})*s", p - 1), format!("(t + half*s^{}*e3)*s", p - 1)],
        Tag::Cb2 => vec!["s*t".into(), "s^2 - e1*s".into(), "e1*s".into()],
        _ => return Ok(None),
    };
    let space = id.param_space();
    let empty = Alphabet::new(&[], &[])?;
    let one = ParamPoly::constant(&space, 1);
    let sp = space.clone();
    let h = half(p);
    let resolve = move |name: &str| -> Option<ParamPoly> {
        if name == "half" {
            h.map(|v| ParamPoly::constant(&sp, v.value() as i64))
        } else {
            sp.index_of(name).map(|i| ParamPoly::var(&sp, i))
        }
    };
    let mut out = Vec::new();
    for t in texts {
        let f = text::parse_poly(&t, &empty, &one, &resolve)?;
        out.push(f.coeff(&Word::empty()).cloned().unwrap_or_else(|| ParamPoly::zero(&space)));
    }
    Ok(Some(out))
}

/// Derived against printed constraint loci.
#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ConstraintVerdict {
    pub family: FamilyId,
    pub params: Vec<String>,
    pub printed: Option<Vec<String>>,
    pub derived: Vec<String>,
    pub derived_locus_size: usize,
    pub printed_locus_size: usize,
    pub full_space_size: usize,
    pub matches: bool,
    /// Points in exactly one of the two loci, capped for reporting.
    pub disagreements: Vec<Vec<u32>>,
}

/// Derived confluence constraints of the symbolic presentation.
pub fn derived_constraints(id: &FamilyId, par: Parallelism) -> Result<Vec<ParamPoly>> {
    let h = build_parametric(id)?;
    Ok(h.rs.confluence_constraints(par))
}

pub fn cross_check_constraints(id: &FamilyId, cap: u64, par: Parallelism) -> Result<ConstraintVerdict> {
    let space = id.param_space();
    let derived = derived_constraints(id, par)?;
    let printed = printed_constraints(id)?;
    let dl: Locus = vanishing_locus_capped(&derived, &space, cap, par)?;
    let pl: Locus = vanishing_locus_capped(printed.as_deref().unwrap_or(&[]), &space, cap, par)?;
    let full = vanishing_locus_capped(&[], &space, cap, par)?;
    let disagreements: Vec<Vec<u32>> = dl.points.symmetric_difference(&pl.points).take(16).cloned().collect();
    Ok(ConstraintVerdict {
        family: *id,
        params: space.names().to_vec(),
        printed: printed.as_ref().map(|v| v.iter().map(|f| f.to_string()).collect()),
        derived: derived.iter().map(|f| f.to_string()).collect(),
        derived_locus_size: dl.len(),
        printed_locus_size: pl.len(),
        full_space_size: full.len(),
        matches: dl.points == pl.points,
        disagreements,
    })
}

/// One entry of `catalog.json`.
#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ManifestEntry {
    pub id: FamilyId,
    pub tag: String,
    pub p: u32,
    pub discrete: Option<BTreeMap<String, u32>>,
    pub anchor: String,
    pub params: Vec<String>,
    pub eps_params: Vec<String>,
    pub kind: &'static str,
}

/// Every admissible catalogued object for the given primes.
pub fn all_ids(primes: &[u32]) -> Vec<FamilyId> {
    let mut out = Vec::new();
    for &p in primes {
        for tag in Tag::all() {
            let discs: Vec<u32> = match tag {
                Tag::RA1 | Tag::GrA1 => (0..p).collect(),
                Tag::A1b => (1..p).collect(),
                Tag::RC | Tag::GrC | Tag::RD2 | Tag::GrD2 => vec![0, 1],
                Tag::RD1 | Tag::GrD1 => vec![0, 1, p],
                _ => vec![0],
            };
            for d in discs {
                if let Ok(id) = FamilyId::new(tag, p, d) {
                    out.push(id);
                }
            }
        }
    }
    out
}

pub fn manifest(primes: &[u32]) -> Vec<ManifestEntry> {
    all_ids(primes)
        .into_iter()
        .map(|id| {
            let (params, eps) = id.params();
            ManifestEntry {
                id,
                tag: id.tag.name(),
                p: id.p,
                discrete: id.tag.discrete().map(|k| BTreeMap::from([(k.to_string(), id.disc)])),
                anchor: id.tag.anchor(),
                params,
                eps_params: eps,
                kind: if id.tag.is_braided() {
                    "braided"
                } else if id.tag.is_graded() {
                    "graded"
                } else if matches!(id.tag, Tag::BGen) {
                    "experimental"
                } else {
                    "lifted"
                },
            }
        })
        .collect()
}

/// The lifted families entering the dimension sweep at `p`.
pub fn lifted_families(p: u32) -> Vec<FamilyId> {
    all_ids(&[p])
        .into_iter()
        .filter(|id| id.tag.is_lifted() && !matches!(id.tag, Tag::A2Gen | Tag::A3Gen | Tag::BGen))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vals(kv: &[(&str, u32)]) -> BTreeMap<String, u32> {
        kv.iter().map(|(k, v)| (k.to_string(), *v)).collect()
    }

    #[test]
    fn tags_round_trip() {
        for t in Tag::all() {
            assert_eq!(t.name().parse::<Tag>().unwrap(), t);
        }
        assert_eq!("gr_a1".parse::<Tag>().unwrap(), Tag::GrA1);
    }

    #[test]
    fn admissibility() {
        assert!(FamilyId::new(Tag::B3, 5, 0).is_err());
        assert!(FamilyId::new(Tag::A3('a'), 3, 0).is_err());
        assert!(FamilyId::new(Tag::A1b, 3, 0).is_err());
        assert!(FamilyId::new(Tag::GrD1, 3, 3).is_ok());
        assert!(FamilyId::new(Tag::GrD1, 3, 2).is_err());
    }

    #[test]
    fn b3_display_relations() {
        let id = FamilyId::new(Tag::B3, 3, 0).unwrap();
        let h = build_family(&id, &vals(&[("e", 1)])).unwrap();
        let rules = h.rs.rule_strings();
        assert!(rules.contains(&"y.y.y -> y.y".to_string()), "{:?}", rules);
        assert!(rules.iter().any(|r| r.starts_with("y.x -> ")), "{:?}", rules);
    }

    #[test]
    fn cb2_cross_relation() {
        let id = FamilyId::new(Tag::Cb2, 2, 0).unwrap();
        let h = build_family(&id, &vals(&[("e1", 1)])).unwrap();
        let a = h.rs.alphabet().clone();
        let one = Fp::one(2);
        let lhs = h.rs.parse("g.y - y.g", &|_| None).unwrap();
        let rhs = text::parse_poly("1 + g + x + x.g", &a, &one, &|_| None).unwrap();
        assert_eq!(h.rs.reduce(&lhs), h.rs.reduce(&rhs));
    }

    #[test]
    fn d1a_is_commutative_of_full_dimension() {
        let id = FamilyId::new(Tag::D1a, 3, 0).unwrap();
        let h = build_family(&id, &vals(&[])).unwrap();
        assert!(h.rs.is_confluent(Parallelism::Sequential));
        assert_eq!(h.rs.enumerate_basis().unwrap().len(), 27);
    }

    #[test]
    fn printed_sets() {
        let a1a = printed_constraints(&FamilyId::new(Tag::A1a, 3, 0).unwrap()).unwrap().unwrap();
        assert_eq!(a1a.len(), 5);
        assert!(printed_constraints(&FamilyId::new(Tag::A1b, 3, 1).unwrap()).unwrap().is_none());
        let ca = printed_constraints(&FamilyId::new(Tag::Ca, 2, 0).unwrap()).unwrap().unwrap();
        let rendered: Vec<String> = ca.iter().map(|f| f.to_string()).collect();
        assert_eq!(rendered, vec!["e3*s", "e3*s + s^2", "s*t"]);
    }
}
