//! Bracket identities displayed for the p = 3 lifting of case (B).

use serde::Serialize;

use super::{build_parametric, FamilyId, Tag};
use crate::error::Result;
use crate::ncalg::NCPoly;
use crate::rewrite::RewriteSystem;
use crate::scalars::{all_points, Coeff, ParamPoly};

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct IdentityCheck {
    pub name: String,
    /// Difference vanishes as a polynomial in μ, τ for each ε ∈ {0,1}.
    pub polynomial: bool,
    /// Difference vanishes at every point of {0,1} × F₃ × F₃.
    pub pointwise: bool,
    pub residual: String,
}

impl IdentityCheck {
    pub fn holds(&self) -> bool {
        self.polynomial && self.pointwise
    }
}

/// `(name, left, right)`; the left side is a bracket computed by reduction.
const DISPLAYS: [(&str, &str, &str); 10] = [
    ("[g,x]", "g.x - x.g", "e*(g - g^2)"),
    ("[g,x^2]", "g.x^2 - x^2.g", "-e*x.g + e*x.g^2 + e*(g - 1)"),
    ("[g^2,x]", "g^2.x - x.g^2", "e*(1 - g^2)"),
    ("[g,y]", "g.y - y.g", "x.g + m*(g - g^2)"),
    ("[g^2,y]", "g^2.y - y.g^2", "-x.g^2 + (e - m)*(g^2 - 1)"),
    (
        "[g,y^2]",
        "g.y^2 - y^2.g",
        "-y.x.g + e*x.g - (m + e)*y.g + m*y.g^2 + (m*e - m^2 - t) + (t + m^2)*g - m*e*g^2",
    ),
    (
        "[x^2,y]",
        "x^2.y - y.x^2",
        "-(t + m*e)*x - m*x^2 + t*x.g^2 + e*y.x + e*y + e*t*(1 - g^2)",
    ),
    (
        "[x,y^2]",
        "x.y^2 - y^2.x",
        "y.x^2 + (e - m)*y.x + e*y^2 + (e - t - e*m)*y + (t + e + m^2)*x - e*x^2 + t*y.g^2 + t*e - t*e*g^2",
    ),
    (
        "[g,y^3]",
        "g.y^3 - y^3.g",
        "-e*y.x.g + (t + m^2 - m*e + e)*x.g - (e*m + e)*y.g + m*e*y.g^2 + (m*e - e*t - m^2*e) \
         + (e*t + t*m + m^3)*g + (m^2*e - m*e - t*m - m^3)*g^2",
    ),
    (
        "[x,y^3]",
        "x.y^3 - y^3.x",
        "e*y.x^2 + (e - e*m)*y.x + e*y^2 + (e + t*e - m^2*e)*y + (e*m^2 + t*m + e + m^3 - t*e - e*m)*x \
         + (m*e - t - m^2 - e)*x^2 + t*e*y.g^2 + (t*e + t^2 + t*m^2 - t*m*e)*(1 - g^2)",
    ),
];

fn check(rs: &RewriteSystem<ParamPoly>, name: &str, diff: &NCPoly<ParamPoly>) -> Result<IdentityCheck> {
    let space = rs.one().space().clone();
    let diff = rs.reduce(diff);
    let e = space.index_of("e").expect("B3 schema has e");
    let polynomial = (0..2).all(|v| diff.terms().all(|(_, c)| c.substitute(e, v).is_zero()));
    let mut pointwise = true;
    for pt in all_points(&space, u64::MAX)? {
        for (_, c) in diff.terms() {
            if !c.eval(&pt)?.is_zero() {
                pointwise = false;
            }
        }
    }
    Ok(IdentityCheck { name: name.to_string(), polynomial, pointwise, residual: diff.render(rs.alphabet()) })
}

/// Each display as an equality after reduction, plus the two nested-bracket
/// forms `[g,y³] = [[[g,y],y],y]` and `[x,y³] = [[[x,y],y],y]`.
pub fn b3_identity_suite() -> Result<Vec<IdentityCheck>> {
    let id = FamilyId::new(Tag::B3, 3, 0)?;
    let h = build_parametric(&id)?;
    let rs = &h.rs;
    let space = rs.one().space().clone();
    let sp = space.clone();
    let resolve = move |n: &str| sp.index_of(n).map(|i| ParamPoly::var(&sp, i));
    let mut out = Vec::new();
    for (name, lhs, rhs) in DISPLAYS {
        let diff = rs.parse(lhs, &resolve)?.sub(&rs.parse(rhs, &resolve)?);
        out.push(check(rs, name, &diff)?);
    }
    let y = rs.parse("y", &resolve)?;
    for a in ["g", "x"] {
        let mut nested = rs.parse(a, &resolve)?;
        for _ in 0..3 {
            nested = rs.reduce(&nested.commutator(&y));
        }
        let direct = rs.parse(&format!("{}.y^3 - y^3.{}", a, a), &resolve)?;
        out.push(check(rs, &format!("[{},y^3] = [[[{},y],y],y]", a, a), &direct.sub(&nested))?);
    }
    Ok(out)
}
