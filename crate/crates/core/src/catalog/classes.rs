//! Isomorphism-class representatives as chosen after rescaling.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::{FamilyId, Tag};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CaseGroup {
    A1Trivial,
    A1Twisted,
    A2,
    A3,
    B3,
    Ca,
    Cb,
    D1,
    D2,
}

impl CaseGroup {
    pub fn all() -> [CaseGroup; 9] {
        use CaseGroup::*;
        [A1Trivial, A1Twisted, A2, A3, B3, Ca, Cb, D1, D2]
    }

    pub fn name(self) -> &'static str {
        match self {
            CaseGroup::A1Trivial => "A1u0",
            CaseGroup::A1Twisted => "A1u",
            CaseGroup::A2 => "A2",
            CaseGroup::A3 => "A3",
            CaseGroup::B3 => "B3",
            CaseGroup::Ca => "Ca",
            CaseGroup::Cb => "Cb",
            CaseGroup::D1 => "D1",
            CaseGroup::D2 => "D2",
        }
    }

    pub fn admissible(self, p: u32) -> bool {
        match self {
            CaseGroup::A3 => p == 2,
            CaseGroup::B3 => p == 3,
            _ => true,
        }
    }

    /// Counts stated in the case summaries: (finite classes, infinite families).
    pub fn stated_counts(self, p: u32) -> (usize, usize) {
        let q = p as usize - 1;
        match self {
            CaseGroup::A1Trivial => (10, 1),
            CaseGroup::A1Twisted => (6 * q, q),
            CaseGroup::A2 | CaseGroup::A3 => (5, 0),
            CaseGroup::B3 => (2, 2),
            CaseGroup::Ca => (2, 1),
            CaseGroup::Cb if p == 2 => (2, 1),
            CaseGroup::Cb => (2, 0),
            CaseGroup::D1 => (6, 1),
            CaseGroup::D2 => (4, 1),
        }
    }
}

impl fmt::Display for CaseGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CaseGroup {
    type Err = Error;

    fn from_str(s: &str) -> Result<CaseGroup> {
        CaseGroup::all()
            .into_iter()
            .find(|g| g.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::UnknownName(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Representative {
    pub id: FamilyId,
    pub values: BTreeMap<String, u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ParamFamily {
    pub id: FamilyId,
    pub fixed: BTreeMap<String, u32>,
    pub free: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ClassList {
    pub group: CaseGroup,
    pub p: u32,
    pub representatives: Vec<Representative>,
    pub infinite_families: Vec<ParamFamily>,
}

impl ClassList {
    pub fn counts(&self) -> (usize, usize) {
        (self.representatives.len(), self.infinite_families.len())
    }
}

fn kv(pairs: &[(&str, u32)]) -> BTreeMap<String, u32> {
    pairs.iter().map(|(k, v)| (k.to_string(), *v)).collect()
}

struct Builder {
    reps: Vec<Representative>,
    fams: Vec<ParamFamily>,
}

impl Builder {
    fn rep(&mut self, id: FamilyId, pairs: &[(&str, u32)]) {
        self.reps.push(Representative { id, values: kv(pairs) });
    }

    fn fam(&mut self, id: FamilyId, pairs: &[(&str, u32)], free: &[&str]) {
        self.fams.push(ParamFamily { id, fixed: kv(pairs), free: free.iter().map(|s| s.to_string()).collect() });
    }
}

/// Representatives in the rescaled normal forms, case by case.
pub fn list_representatives(group: CaseGroup, p: u32) -> Result<ClassList> {
    if !group.admissible(p) {
        return Err(Error::Inadmissible(format!("{} at p={}", group, p)));
    }
    let id = |tag: Tag, disc: u32| FamilyId::new(tag, p, disc);
    let mut b = Builder { reps: Vec::new(), fams: Vec::new() };
    match group {
        CaseGroup::A1Trivial => {
            let f = id(Tag::A1a, 0)?;
            for (e1, lt) in [(0, [(0, 0), (1, 0), (0, 1)]), (1, [(0, 0), (1, 0), (0, 1)])] {
                for (l, t) in lt {
                    b.rep(f, &[("e1", e1), ("e2", 0), ("l", l), ("s", 0), ("t", t)]);
                }
            }
            // λσ = τ(1−σ) = 0 with σ, λ, τ ∈ {0,1}.
            for (s, l, t) in [(0, 0, 0), (0, 1, 0), (1, 0, 0), (1, 0, 1)] {
                b.rep(f, &[("e1", 0), ("e2", 1), ("l", l), ("s", s), ("t", t)]);
            }
            b.fam(f, &[("e1", 1), ("e2", 1), ("s", 0), ("t", 0)], &["l"]);
        }
        CaseGroup::A1Twisted => {
            for u in 1..p {
                let f = id(Tag::A1b, u)?;
                for (e1, e2) in [(0, 0), (0, 1), (1, 0)] {
                    for t in 0..2 {
                        b.rep(f, &[("e1", e1), ("e2", e2), ("t", t)]);
                    }
                }
                b.fam(f, &[("e1", 1), ("e2", 1)], &["t"]);
            }
        }
        CaseGroup::A2 | CaseGroup::A3 => {
            for c in "abcde".chars() {
                let tag = if group == CaseGroup::A2 { Tag::A2(c) } else { Tag::A3(c) };
                b.rep(id(tag, 0)?, &[]);
            }
        }
        CaseGroup::B3 => {
            let f = id(Tag::B3, 0)?;
            b.rep(f, &[("e", 0), ("m", 0), ("t", 0)]);
            b.rep(f, &[("e", 0), ("m", 0), ("t", 1)]);
            b.fam(f, &[("e", 0), ("m", 1)], &["t"]);
            b.fam(f, &[("e", 1)], &["m", "t"]);
        }
        CaseGroup::Ca => {
            let f = id(Tag::Ca, 0)?;
            b.rep(f, &[("e3", 0), ("s", 0), ("t", 0)]);
            b.rep(f, &[("e3", 0), ("s", 0), ("t", 1)]);
            b.fam(f, &[("e3", 1), ("s", 0)], &["t"]);
        }
        CaseGroup::Cb if p == 2 => {
            let f = id(Tag::Cb2, 0)?;
            b.rep(f, &[("e1", 0), ("s", 0), ("t", 0)]);
            b.rep(f, &[("e1", 0), ("s", 0), ("t", 1)]);
            b.fam(f, &[("e1", 1), ("s", 0)], &["t"]);
        }
        CaseGroup::Cb => {
            let f = id(Tag::CbP, 0)?;
            b.rep(f, &[("t", 0)]);
            b.rep(f, &[("t", 1)]);
        }
        CaseGroup::D1 => {
            for l in 0..2 {
                b.rep(id(Tag::D1a, 0)?, &[("l", l)]);
            }
            for l in 0..2 {
                b.rep(id(Tag::D1b, 0)?, &[("e1", 0), ("l", l)]);
            }
            b.fam(id(Tag::D1b, 0)?, &[("e1", 1)], &["l"]);
            for e1 in 0..2 {
                b.rep(id(Tag::D1c, 0)?, &[("e1", e1)]);
            }
        }
        CaseGroup::D2 => {
            for l in 0..2 {
                b.rep(id(Tag::D2a, 0)?, &[("l", l)]);
            }
            for t in 0..2 {
                b.rep(id(Tag::D2b, 0)?, &[("e1", 0), ("t", t)]);
            }
            b.fam(id(Tag::D2b, 0)?, &[("e1", 1)], &["t"]);
        }
    }
    Ok(ClassList { group, p, representatives: b.reps, infinite_families: b.fams })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a2_lists_five_classes() {
        let c = list_representatives(CaseGroup::A2, 3).unwrap();
        assert_eq!(c.counts(), (5, 0));
        let names: Vec<String> = c.representatives.iter().map(|r| r.id.tag.name()).collect();
        assert_eq!(names, vec!["A2a", "A2b", "A2c", "A2d", "A2e"]);
    }

    #[test]
    fn representatives_are_distinct() {
        for p in [2, 3, 5] {
            for g in CaseGroup::all() {
                if let Ok(c) = list_representatives(g, p) {
                    let mut seen = std::collections::BTreeSet::new();
                    for r in &c.representatives {
                        assert!(seen.insert((r.id, r.values.clone())), "{} duplicated", g);
                    }
                }
            }
        }
    }
}
