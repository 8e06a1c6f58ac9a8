//! Pointwise dimension sweeps over parameter boxes.

use serde::Serialize;

use super::{build_family_at, derived_constraints, FamilyId};
use crate::error::{Error, Result};
use crate::par::Parallelism;
use crate::scalars::{all_points, vanishing_locus_capped};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct PointCheck {
    pub point: Vec<u32>,
    pub in_locus: bool,
    pub confluent: bool,
    pub dim: Option<usize>,
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct FamilySweep {
    pub family: FamilyId,
    pub params: Vec<String>,
    pub expected_dim: usize,
    pub box_size: usize,
    pub locus_size: usize,
    pub checked: usize,
    /// Points where locus membership and numeric confluence disagree, or where
    /// a confluent point has the wrong dimension.
    pub failures: Vec<PointCheck>,
}

impl FamilySweep {
    /// Some point is admissible and every admissible point has full dimension.
    pub fn passed(&self) -> bool {
        self.locus_size > 0 && self.failures.is_empty()
    }
}

fn check_point(id: &FamilyId, point: &[u32], in_locus: bool) -> Result<PointCheck> {
    let h = build_family_at(id, point)?;
    let confluent = h.rs.is_confluent(Parallelism::Sequential);
    let dim = if confluent { Some(h.rs.enumerate_basis()?.len()) } else { None };
    Ok(PointCheck { point: point.to_vec(), in_locus, confluent, dim })
}

/// Every `stride`-th box point, each built numerically and checked against the
/// symbolic constraint locus.
pub fn sweep_family(id: &FamilyId, cap: u64, stride: usize, par: Parallelism) -> Result<FamilySweep> {
    let fixed = vec![None; id.params().0.len()];
    sweep_subbox(id, &fixed, cap, stride, par)
}

/// As `sweep_family`, restricted to points agreeing with every `Some` entry of `fixed`.
pub fn sweep_subbox(id: &FamilyId, fixed: &[Option<u32>], cap: u64, stride: usize, par: Parallelism) -> Result<FamilySweep> {
    let space = id.param_space();
    if fixed.len() != space.names().len() {
        return Err(Error::ArityMismatch { expected: space.names().len(), got: fixed.len() });
    }
    let locus = vanishing_locus_capped(&derived_constraints(id, par)?, &space, cap, par)?;
    let in_box = |pt: &Vec<u32>| pt.iter().zip(fixed).all(|(v, f)| f.is_none_or(|f| f == *v));
    let sub: Vec<Vec<u32>> = all_points(&space, cap)?.into_iter().filter(in_box).collect();
    let box_size = sub.len();
    let locus_size = sub.iter().filter(|pt| locus.contains(pt)).count();
    let pts: Vec<Vec<u32>> = sub.into_iter().step_by(stride.max(1)).collect();
    let results = par.map(&pts, |pt| check_point(id, pt, locus.contains(pt)));
    let expected_dim = (id.p as usize).pow(3);
    let mut failures = Vec::new();
    for r in results {
        let r = r?;
        let good = r.in_locus == r.confluent && (!r.confluent || r.dim == Some(expected_dim));
        if !good {
            failures.push(r);
        }
    }
    Ok(FamilySweep { family: *id, params: space.names().to_vec(), expected_dim, box_size, locus_size, checked: pts.len(), failures })
}
