use std::collections::BTreeSet;
use std::sync::Arc;

use super::{ParamPoly, ParamSpace};
use crate::error::{Error, Result};
use crate::par::Parallelism;

/// Largest point count enumerated by default (5^6).
pub const DEFAULT_ENUM_CAP: u64 = 15_625;

/// A finite subset of F_p^k, switch parameters ranging over {0, 1} only.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Locus {
    pub p: u32,
    pub params: Vec<String>,
    pub points: BTreeSet<Vec<u32>>,
}

impl Locus {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, point: &[u32]) -> bool {
        self.points.contains(point)
    }
}

fn ranges(space: &ParamSpace) -> Vec<u32> {
    (0..space.len()).map(|i| if space.is_eps(i) { 2 } else { space.p() }).collect()
}

/// Every point of the ambient box, in lexicographic order.
pub fn all_points(space: &ParamSpace, cap: u64) -> Result<Vec<Vec<u32>>> {
    let r = ranges(space);
    let total: u64 = r.iter().map(|&x| x as u64).product();
    if total > cap {
        return Err(Error::TooLarge { points: total, cap });
    }
    let mut out = Vec::with_capacity(total as usize);
    let mut cur = vec![0u32; r.len()];
    loop {
        out.push(cur.clone());
        let mut i = r.len();
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            cur[i] += 1;
            if cur[i] < r[i] {
                break;
            }
            cur[i] = 0;
        }
    }
}

pub fn full_locus(space: &Arc<ParamSpace>) -> Result<Locus> {
    vanishing_locus(&[], space)
}

pub fn vanishing_locus(fs: &[ParamPoly], space: &Arc<ParamSpace>) -> Result<Locus> {
    vanishing_locus_capped(fs, space, DEFAULT_ENUM_CAP, Parallelism::Sequential)
}

/// Points of the box at which every polynomial of `fs` vanishes.
pub fn vanishing_locus_capped(
    fs: &[ParamPoly],
    space: &Arc<ParamSpace>,
    cap: u64,
    par: Parallelism,
) -> Result<Locus> {
    for f in fs {
        if f.space().names() != space.names() {
            return Err(Error::AlphabetMismatch);
        }
    }
    let pts = all_points(space, cap)?;
    let keep = par.map(&pts, |pt| fs.iter().all(|f| f.eval_raw(pt) == 0));
    let points = pts.into_iter().zip(keep).filter(|(_, k)| *k).map(|(pt, _)| pt).collect();
    Ok(Locus { p: space.p(), params: space.names().to_vec(), points })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::Coeff;

    #[test]
    fn simple_loci() {
        let sp = ParamSpace::new(2, &["s", "t"], &[]);
        let s = ParamPoly::named(&sp, "s").unwrap();
        let loc = vanishing_locus(&[s], &sp).unwrap();
        let want: BTreeSet<Vec<u32>> = [vec![0, 0], vec![0, 1]].into_iter().collect();
        assert_eq!(loc.points, want);

        let sp = ParamSpace::new(3, &["t"], &[]);
        assert_eq!(full_locus(&sp).unwrap().len(), 3);
    }

    #[test]
    fn eps_params_are_switches() {
        let sp = ParamSpace::new(5, &["e", "t"], &["e"]);
        assert_eq!(full_locus(&sp).unwrap().len(), 10);
        let e = ParamPoly::named(&sp, "e").unwrap();
        let one = e.one_like();
        let loc = vanishing_locus(&[e.c_sub(&one)], &sp).unwrap();
        assert!(loc.points.iter().all(|pt| pt[0] == 1));
        assert_eq!(loc.len(), 5);
    }

    #[test]
    fn cap_enforced() {
        let sp = ParamSpace::new(5, &["a", "b", "c", "d", "e", "f", "g"], &[]);
        assert!(matches!(full_locus(&sp), Err(Error::TooLarge { .. })));
    }
}
