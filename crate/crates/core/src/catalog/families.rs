//! Relation, coproduct and antipode transcriptions for every catalogued row.
//!
//! Everything is text in the grammar of `ncalg::text`. Parameter names are
//! resolved by the caller; `half` always denotes the inverse of 2.

use super::{FamilyId, Tag};
use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub(crate) struct Blueprint {
    pub precedence: Vec<String>,
    pub grouplike: Vec<String>,
    pub relations: Vec<String>,
    /// Coproducts of the non-grouplike generators.
    pub coproduct: Vec<(String, String)>,
    /// Printed antipodes; empty means "derive from the coproduct".
    pub antipode: Vec<(String, String)>,
}

/// `(p−1)!/(i!(p−i)!)` reduced mod `p`, for `1 ≤ i ≤ p−1`.
pub fn omega_coefficient(p: u32, i: u32) -> u32 {
    let mut binom: u64 = 1;
    for k in 0..i as u64 {
        binom = binom * (p as u64 - k) / (k + 1);
    }
    ((binom / p as u64) % p as u64) as u32
}

/// `Σ c_i a^i·tail(i) ⊗ a^(p−i)` with the omega coefficients.
pub(crate) fn omega_text(p: u32, a: &str, tail: impl Fn(u32) -> String) -> String {
    (1..p)
        .map(|i| format!("{}*{}^{}{} ⊗ {}^{}", omega_coefficient(p, i), a, i, tail(i), a, p - i))
        .collect::<Vec<_>>()
        .join(" + ")
}

fn s(v: &[&str]) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}

fn pairs(v: &[(&str, String)]) -> Vec<(String, String)> {
    v.iter().map(|(a, b)| (a.to_string(), b.clone())).collect()
}

fn a_group(p: u32, rels: &[String]) -> Blueprint {
    let mut relations = vec![format!("g^{} = 1", p)];
    relations.extend(rels.iter().cloned());
    Blueprint {
        precedence: s(&["g", "x", "y"]),
        grouplike: s(&["g"]),
        relations,
        coproduct: pairs(&[("x", "x ⊗ 1 + 1 ⊗ x".into()), ("y", "y ⊗ 1 + 1 ⊗ y".into())]),
        antipode: Vec::new(),
    }
}

/// Restricted-Lie relations of the five primitively generated classes.
fn a_class(p: u32, sub: char) -> [String; 3] {
    match sub {
        'a' => [format!("x^{}", p), format!("y^{}", p), "x.y - y.x".into()],
        'b' => [format!("x^{} = x", p), format!("y^{}", p), "x.y - y.x".into()],
        'c' => [format!("x^{} = y", p), format!("y^{}", p), "x.y - y.x".into()],
        'd' => [format!("x^{} = x", p), format!("y^{} = y", p), "x.y - y.x".into()],
        _ => [format!("x^{} = x", p), format!("y^{}", p), "x.y - y.x = y".into()],
    }
}

pub(crate) fn blueprint(id: &FamilyId) -> Result<Blueprint> {
    id.check_admissible()?;
    let p = id.p;
    let d = id.disc;
    let bp = match id.tag {
        Tag::A1a => Blueprint {
            precedence: s(&["g", "x", "y"]),
            grouplike: s(&["g"]),
            relations: vec![
                format!("g^{} = 1", p),
                "g.x - x.g = e1*(g - g^2)".into(),
                "g.y = y.g".into(),
                format!("x^{} = e1*x + l*y", p),
                format!("y^{} = e2*y", p),
                "x.y - y.x = s*x + t*(1 - g)".into(),
            ],
            coproduct: pairs(&[("x", "x ⊗ 1 + g ⊗ x".into()), ("y", "y ⊗ 1 + 1 ⊗ y".into())]),
            antipode: Vec::new(),
        },
        // Printed as xy − yx + uε₁y − ε₂x = τ(1 − g^(u+1)).
        Tag::A1b => Blueprint {
            precedence: s(&["g", "x", "y"]),
            grouplike: s(&["g"]),
            relations: vec![
                format!("g^{} = 1", p),
                "g.x - x.g = e1*(g - g^2)".into(),
                format!("g.y - y.g = e2*(g - g^{})", d + 1),
                format!("x^{} = e1*x", p),
                format!("y^{} = e2*y", p),
                format!("x.y - y.x = -{}*e1*y + e2*x + t*(1 - g^{})", d, d + 1),
            ],
            coproduct: pairs(&[("x", "x ⊗ 1 + g ⊗ x".into()), ("y", format!("y ⊗ 1 + g^{} ⊗ y", d))]),
            antipode: Vec::new(),
        },
        Tag::A2(sub) => a_group(p, &[&["g.x = x.g".to_string(), "g.y = y.g".to_string()][..], &a_class(p, sub)[..]].concat()),
        Tag::A3(sub) => a_group(p, &[&["g.x = y.g".to_string(), "g.y = x.g".to_string()][..], &a_class(p, sub)[..]].concat()),
        Tag::A2Gen | Tag::A3Gen => {
            let cross = if id.tag == Tag::A2Gen { ["g.x = x.g", "g.y = y.g"] } else { ["g.x = y.g", "g.y = x.g"] };
            a_group(
                p,
                &[
                    cross[0].into(),
                    cross[1].into(),
                    format!("x^{} = l*x + m*y", p),
                    format!("y^{} = s*x + t*y", p),
                    "x.y - y.x = al*x + be*y".into(),
                ],
            )
        }
        Tag::B3 => Blueprint {
            precedence: s(&["g", "y", "x"]),
            grouplike: s(&["g"]),
            relations: s(&[
                "g^3 = 1",
                "g.x - x.g = e*(g - g^2)",
                "g.y - y.g = x.g + m*(g - g^2)",
                "x^3 = e*x",
                "y^3 = e*y^2 - (m*e - t - m^2)*y",
                "x.y - y.x = -x^2 + (e + m)*x - e*y + t*(1 - g^2)",
            ]),
            coproduct: pairs(&[("x", "x ⊗ 1 + g ⊗ x".into()), ("y", "y ⊗ 1 + g ⊗ y".into())]),
            antipode: Vec::new(),
        },
        Tag::BGen => {
            let tail: Vec<String> = (1..p).rev().map(|i| format!("f{}*y^{}", i, i)).collect();
            Blueprint {
                precedence: s(&["g", "y", "x"]),
                grouplike: s(&["g"]),
                relations: vec![
                    format!("g^{} = 1", p),
                    "g.x - x.g = e*(g - g^2)".into(),
                    "g.y - y.g = x.g + m*(g - g^2)".into(),
                    format!("x^{} = e*x", p),
                    format!("y^{} = {}", p, tail.join(" + ")),
                    "x.y - y.x = half*x^2 + (m - half*e)*x - e*y + t*(1 - g^2)".into(),
                ],
                coproduct: pairs(&[("x", "x ⊗ 1 + g ⊗ x".into()), ("y", "y ⊗ 1 + g ⊗ y".into())]),
                antipode: Vec::new(),
            }
        }
        Tag::Ca => {
            let yp = if p == 2 {
                "y^2 = t*x + e3*y".to_string()
            } else {
                format!("y^{} = (t + half*s^{}*e3)*x + e3*y", p, p - 1)
            };
            Blueprint {
                precedence: s(&["g", "x", "y"]),
                grouplike: s(&["g"]),
                relations: vec![
                    format!("g^{} = 1", p),
                    "g.x = x.g".into(),
                    "g.y = y.g".into(),
                    format!("x^{} = e3*x", p),
                    yp,
                    "x.y - y.x = s*x".into(),
                ],
                coproduct: pairs(&[
                    ("x", "x ⊗ 1 + 1 ⊗ x".into()),
                    ("y", format!("y ⊗ 1 + 1 ⊗ y + {}", omega_text(p, "x", |_| String::new()))),
                ]),
                antipode: Vec::new(),
            }
        }
        Tag::Cb2 => Blueprint {
            precedence: s(&["g", "x", "y"]),
            grouplike: s(&["g"]),
            relations: s(&[
                "g^2 = 1",
                "g.x - x.g = e1*(g - 1)",
                "x^2 = e1*x",
                "g.y - y.g = e1*(1 + g + x + x.g)",
                "x.y - y.x = s*x + t*(1 - g)",
                "y^2 = e1*y + t*(x + x.g)",
            ]),
            coproduct: pairs(&[("x", "x ⊗ 1 + g ⊗ x".into()), ("y", "y ⊗ 1 + 1 ⊗ y + x.g ⊗ x".into())]),
            antipode: Vec::new(),
        },
        Tag::CbP => Blueprint {
            precedence: s(&["g", "x", "y"]),
            grouplike: s(&["g"]),
            relations: vec![
                format!("g^{} = 1", p),
                "g.x = x.g".into(),
                "g.y = y.g".into(),
                "x.y - y.x = t*(1 - g)".into(),
                format!("x^{}", p),
                format!("y^{} = -t^{}*(1 - g)^{}*x", p, p - 1, p - 1),
            ],
            coproduct: pairs(&[
                ("x", "x ⊗ 1 + g ⊗ x".into()),
                ("y", format!("y ⊗ 1 + 1 ⊗ y + {}", omega_text(p, "x", |i| format!(".g^{}", p - i)))),
            ]),
            antipode: Vec::new(),
        },
        Tag::D1a | Tag::D1b | Tag::D1c => {
            let (cross, xp, dx) = match id.tag {
                Tag::D1a => ("g.x = x.g".to_string(), format!("x^{} = l*x", p), "x ⊗ 1 + 1 ⊗ x".to_string()),
                Tag::D1b => (
                    "g.x - x.g = e1*(g - g^2)".to_string(),
                    format!("x^{} = e1*x + l*(1 - g^{})", p, p),
                    "x ⊗ 1 + g ⊗ x".to_string(),
                ),
                _ => (format!("g.x - x.g = e1*(g - g^{})", p + 1), format!("x^{}", p), format!("x ⊗ 1 + g^{} ⊗ x", p)),
            };
            Blueprint {
                precedence: s(&["g", "x"]),
                grouplike: s(&["g"]),
                relations: vec![format!("g^{} = 1", p * p), cross, xp],
                coproduct: vec![("x".into(), dx)],
                antipode: Vec::new(),
            }
        }
        Tag::D2a | Tag::D2b => {
            let (c1, c2, xp, dx) = if id.tag == Tag::D2a {
                ("g1.x = x.g1", "g2.x = x.g2", format!("x^{} = l*x", p), "x ⊗ 1 + 1 ⊗ x")
            } else {
                ("g1.x - x.g1 = e1*g1*(1 - g1)", "g2.x - x.g2 = t*g2*(1 - g1)", format!("x^{} = e1*x", p), "x ⊗ 1 + g1 ⊗ x")
            };
            Blueprint {
                precedence: s(&["g1", "g2", "x"]),
                grouplike: s(&["g1", "g2"]),
                relations: vec![format!("g1^{} = 1", p), format!("g2^{} = 1", p), "g1.g2 = g2.g1".into(), c1.into(), c2.into(), xp],
                coproduct: vec![("x".into(), dx.into())],
                antipode: Vec::new(),
            }
        }
        Tag::GrA1 | Tag::GrA2 | Tag::GrA3 | Tag::GrB | Tag::GrC => gr_rank2(id),
        Tag::GrD1 => Blueprint {
            precedence: s(&["g", "a"]),
            grouplike: s(&["g"]),
            relations: vec![format!("a^{}", p), format!("g^{} = 1", p * p), "g.a = a.g".into()],
            coproduct: vec![("a".into(), format!("a ⊗ 1 + g^{} ⊗ a", d))],
            antipode: vec![("a".into(), format!("-a.g^{}", (p * p - d) % (p * p)))],
        },
        Tag::GrD2 => Blueprint {
            precedence: s(&["g1", "g2", "a"]),
            grouplike: s(&["g1", "g2"]),
            relations: vec![
                format!("a^{}", p),
                format!("g1^{} = 1", p),
                format!("g2^{} = 1", p),
                "g1.g2 = g2.g1".into(),
                "g1.a = a.g1".into(),
                "g2.a = a.g2".into(),
            ],
            coproduct: vec![("a".into(), format!("a ⊗ 1 + g1^{} ⊗ a", d))],
            antipode: vec![("a".into(), format!("-a.g1^{}", (p - d) % p))],
        },
        t => return Err(Error::Inadmissible(format!("{} has no ordinary Hopf presentation", t.name()))),
    };
    Ok(bp)
}

fn gr_rank2(id: &FamilyId) -> Blueprint {
    let p = id.p;
    let d = id.disc;
    let inv = |k: u32| (p - k % p) % p;
    let base = vec![format!("a^{}", p), format!("b^{}", p), format!("g^{} = 1", p)];
    let (prec, extra, da, db, sa, sb): (Vec<String>, Vec<String>, String, String, String, String) = match id.tag {
        Tag::GrA1 => (
            s(&["g", "a", "b"]),
            s(&["a.b = b.a", "g.a = a.g", "g.b = b.g"]),
            "a ⊗ 1 + g ⊗ a".into(),
            format!("b ⊗ 1 + g^{} ⊗ b", d),
            format!("-a.g^{}", inv(1)),
            format!("-b.g^{}", inv(d)),
        ),
        Tag::GrA2 | Tag::GrA3 => (
            s(&["g", "a", "b"]),
            if id.tag == Tag::GrA2 {
                s(&["a.b = b.a", "g.a = a.g", "g.b = b.g"])
            } else {
                s(&["a.b = b.a", "g.a = b.g", "g.b = a.g"])
            },
            "a ⊗ 1 + 1 ⊗ a".into(),
            "b ⊗ 1 + 1 ⊗ b".into(),
            "-a".into(),
            "-b".into(),
        ),
        Tag::GrB => (
            s(&["g", "b", "a"]),
            s(&["a.b - b.a = half*a^2", "g.a = a.g", "g.b = (a + b).g"]),
            "a ⊗ 1 + g ⊗ a".into(),
            "b ⊗ 1 + g ⊗ b".into(),
            format!("-a.g^{}", inv(1)),
            format!("(a - b).g^{}", inv(1)),
        ),
        _ => (
            s(&["g", "a", "b"]),
            s(&["a.b = b.a", "g.a = a.g", "g.b = b.g"]),
            format!("a ⊗ 1 + g^{} ⊗ a", d),
            format!("b ⊗ 1 + 1 ⊗ b + {}", omega_text(p, "a", |i| format!(".g^{}", d * (p - i)))),
            format!("-a.g^{}", inv(d)),
            "-b".into(),
        ),
    };
    let mut relations = base;
    relations.extend(extra);
    Blueprint {
        precedence: prec,
        grouplike: s(&["g"]),
        relations,
        coproduct: vec![("a".into(), da), ("b".into(), db)],
        antipode: vec![("a".into(), sa), ("b".into(), sb)],
    }
}

/// Braided Hopf algebra in the Yetter–Drinfeld category, as tabulated.
#[derive(Debug, Clone)]
pub(crate) struct BraidedBlueprint {
    pub precedence: Vec<String>,
    pub relations: Vec<String>,
    pub coproduct: Vec<(String, String)>,
    pub group_names: Vec<String>,
    pub orders: Vec<u32>,
    /// Exponent tuple per generator, in `precedence` order.
    pub grading: Vec<Vec<u32>>,
    /// `action[k][i]`: image of generator `i` under group generator `k`.
    pub action: Vec<Vec<String>>,
}

pub(crate) fn braided_blueprint(id: &FamilyId) -> Result<BraidedBlueprint> {
    id.check_admissible()?;
    let p = id.p;
    let d = id.disc;
    let prim = |v: &str| (v.to_string(), format!("{} ⊗ 1 + 1 ⊗ {}", v, v));
    let comm = vec![format!("a^{}", p), format!("b^{}", p), "a.b = b.a".to_string()];
    let fixed = vec![vec!["a".to_string(), "b".to_string()]];
    let bp = match id.tag {
        Tag::RA1 | Tag::RA2 | Tag::RA3 => BraidedBlueprint {
            precedence: s(&["a", "b"]),
            relations: comm,
            coproduct: vec![prim("a"), prim("b")],
            group_names: s(&["g"]),
            orders: vec![p],
            grading: match id.tag {
                Tag::RA1 => vec![vec![1], vec![d % p]],
                _ => vec![vec![0], vec![0]],
            },
            action: if id.tag == Tag::RA3 { vec![s(&["b", "a"])] } else { fixed },
        },
        Tag::RB => BraidedBlueprint {
            precedence: s(&["b", "a"]),
            relations: vec![format!("a^{}", p), format!("b^{}", p), "a.b - b.a = half*a^2".into()],
            coproduct: vec![prim("b"), prim("a")],
            group_names: s(&["g"]),
            orders: vec![p],
            grading: vec![vec![1], vec![1]],
            action: vec![s(&["a + b", "a"])],
        },
        Tag::RC => BraidedBlueprint {
            precedence: s(&["a", "b"]),
            relations: comm,
            coproduct: vec![prim("a"), ("b".into(), format!("b ⊗ 1 + 1 ⊗ b + {}", omega_text(p, "a", |_| String::new())))],
            group_names: s(&["g"]),
            orders: vec![p],
            grading: vec![vec![d], vec![0]],
            action: fixed,
        },
        Tag::RD1 => BraidedBlueprint {
            precedence: s(&["a"]),
            relations: vec![format!("a^{}", p)],
            coproduct: vec![prim("a")],
            group_names: s(&["g"]),
            orders: vec![p * p],
            grading: vec![vec![d]],
            action: vec![s(&["a"])],
        },
        Tag::RD2 => BraidedBlueprint {
            precedence: s(&["a"]),
            relations: vec![format!("a^{}", p)],
            coproduct: vec![prim("a")],
            group_names: s(&["g1", "g2"]),
            orders: vec![p, p],
            grading: vec![vec![d, 0]],
            action: vec![s(&["a"]), s(&["a"])],
        },
        t => return Err(Error::Inadmissible(format!("{} is not a braided row", t.name()))),
    };
    Ok(bp)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn omega_coefficients_match_factorials() {
        for p in [2u32, 3, 5, 7] {
            for i in 1..p {
                let fact = |n: u32| (1..=n as u64).product::<u64>();
                let direct = fact(p - 1) / (fact(i) * fact(p - i));
                assert_eq!(omega_coefficient(p, i) as u64, direct % p as u64);
            }
        }
        assert_eq!(omega_coefficient(3, 1), 1);
        assert_eq!(omega_coefficient(5, 2), 2);
    }
}
