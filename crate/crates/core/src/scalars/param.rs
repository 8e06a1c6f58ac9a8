use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use smallvec::SmallVec;

use super::{Coeff, Fp};
use crate::error::{Error, Result};

/// Names of the parameters of a coefficient ring, and which of them are 0/1 switches.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParamSpace {
    p: u32,
    names: Vec<String>,
    eps: Vec<bool>,
}

impl ParamSpace {
    pub fn new(p: u32, names: &[&str], eps: &[&str]) -> Arc<ParamSpace> {
        Arc::new(ParamSpace {
            p,
            names: names.iter().map(|s| s.to_string()).collect(),
            eps: names.iter().map(|n| eps.contains(n)).collect(),
        })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn is_eps(&self, i: usize) -> bool {
        self.eps[i]
    }

    pub fn eps_mask(&self) -> &[bool] {
        &self.eps
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

type Mono = SmallVec<[u16; 8]>;

/// Sparse polynomial over F_p in the parameters of a [`ParamSpace`].
///
/// No zero coefficient is ever stored.
#[derive(Clone)]
pub struct ParamPoly {
    space: Arc<ParamSpace>,
    terms: BTreeMap<Mono, u32>,
}

impl ParamPoly {
    pub fn zero(space: &Arc<ParamSpace>) -> ParamPoly {
        ParamPoly { space: space.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(space: &Arc<ParamSpace>, n: i64) -> ParamPoly {
        let mut out = ParamPoly::zero(space);
        let v = n.rem_euclid(space.p as i64) as u32;
        if v != 0 {
            out.terms.insert(SmallVec::from_elem(0, space.len()), v);
        }
        out
    }

    pub fn var(space: &Arc<ParamSpace>, i: usize) -> ParamPoly {
        let mut mono: Mono = SmallVec::from_elem(0, space.len());
        mono[i] = 1;
        let mut out = ParamPoly::zero(space);
        out.terms.insert(mono, 1);
        out
    }

    pub fn named(space: &Arc<ParamSpace>, name: &str) -> Result<ParamPoly> {
        let i = space.index_of(name).ok_or_else(|| Error::UnknownName(name.to_string()))?;
        Ok(ParamPoly::var(space, i))
    }

    pub fn space(&self) -> &Arc<ParamSpace> {
        &self.space
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.iter().all(|&e| e == 0))
    }

    pub fn pow(&self, e: u32) -> ParamPoly {
        let mut acc = ParamPoly::constant(&self.space, 1);
        for _ in 0..e {
            acc = acc.c_mul(self);
        }
        acc
    }

    /// Substitutes every parameter; `point[i]` is the value of parameter `i`.
    pub fn eval(&self, point: &[u32]) -> Result<Fp> {
        if point.len() != self.space.len() {
            return Err(Error::ArityMismatch { expected: self.space.len(), got: point.len() });
        }
        Ok(Fp::new(self.eval_raw(point) as i64, self.space.p))
    }

    pub(crate) fn eval_raw(&self, point: &[u32]) -> u32 {
        let p = self.space.p;
        let mut acc = 0u32;
        for (mono, &c) in &self.terms {
            let mut t = c;
            for (i, &e) in mono.iter().enumerate() {
                for _ in 0..e {
                    t = t * point[i] % p;
                }
            }
            acc = (acc + t) % p;
        }
        acc
    }

    /// Substitutes parameter `i` by `value`, keeping the ring.
    pub fn substitute(&self, i: usize, value: u32) -> ParamPoly {
        let p = self.space.p;
        let mut out = ParamPoly::zero(&self.space);
        for (mono, &c) in &self.terms {
            let mut t = c;
            for _ in 0..mono[i] {
                t = t * (value % p) % p;
            }
            let mut m = mono.clone();
            m[i] = 0;
            out.add_raw(m, t);
        }
        out
    }

    /// Coefficients of the powers of parameter `i`: `self = Σ_k out[k] * param_i^k`.
    pub fn coefficients_in(&self, i: usize) -> Vec<ParamPoly> {
        let mut out: Vec<ParamPoly> = Vec::new();
        for (mono, &c) in &self.terms {
            let k = mono[i] as usize;
            while out.len() <= k {
                out.push(ParamPoly::zero(&self.space));
            }
            let mut m = mono.clone();
            m[i] = 0;
            out[k].add_raw(m, c);
        }
        out
    }

    /// Re-expresses the polynomial in a larger space whose names contain ours.
    pub fn embed(&self, target: &Arc<ParamSpace>) -> Result<ParamPoly> {
        let map: Vec<usize> = self
            .space
            .names
            .iter()
            .map(|n| target.index_of(n).ok_or_else(|| Error::UnknownName(n.clone())))
            .collect::<Result<_>>()?;
        let mut out = ParamPoly::zero(target);
        for (mono, &c) in &self.terms {
            let mut m: Mono = SmallVec::from_elem(0, target.len());
            for (i, &e) in mono.iter().enumerate() {
                m[map[i]] = e;
            }
            out.add_raw(m, c);
        }
        Ok(out)
    }

    fn add_raw(&mut self, mono: Mono, c: u32) {
        let p = self.space.p;
        let c = c % p;
        if c == 0 {
            return;
        }
        let entry = self.terms.entry(mono);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let v = (*o.get() + c) % p;
                if v == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = v;
                }
            }
        }
    }

    fn render_mono(&self, mono: &Mono) -> String {
        let mut parts = Vec::new();
        for (i, &e) in mono.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(self.space.names[i].clone()),
                _ => parts.push(format!("{}^{}", self.space.names[i], e)),
            }
        }
        parts.join("*")
    }

    /// Terms in canonical order: higher total degree first, then larger exponent vector.
    fn sorted_terms(&self) -> Vec<(&Mono, u32)> {
        let mut v: Vec<(&Mono, u32)> = self.terms.iter().map(|(m, &c)| (m, c)).collect();
        v.sort_by(|a, b| {
            let da: u32 = a.0.iter().map(|&e| e as u32).sum();
            let db: u32 = b.0.iter().map(|&e| e as u32).sum();
            db.cmp(&da).then_with(|| b.0.cmp(a.0))
        });
        v
    }
}

impl PartialEq for ParamPoly {
    fn eq(&self, o: &Self) -> bool {
        self.space.p == o.space.p && self.terms == o.terms
    }
}

impl Eq for ParamPoly {}

impl PartialOrd for ParamPoly {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl Ord for ParamPoly {
    fn cmp(&self, o: &Self) -> Ordering {
        self.terms.cmp(&o.terms)
    }
}

impl Hash for ParamPoly {
    fn hash<H: Hasher>(&self, h: &mut H) {
        self.terms.hash(h);
    }
}

impl fmt::Debug for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Display for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl Coeff for ParamPoly {
    fn modulus(&self) -> u32 {
        self.space.p
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn int_like(&self, n: i64) -> Self {
        ParamPoly::constant(&self.space, n)
    }

    fn c_add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (m, &c) in &o.terms {
            out.add_raw(m.clone(), c);
        }
        out
    }

    fn c_sub(&self, o: &Self) -> Self {
        self.c_add(&o.c_neg())
    }

    fn c_mul(&self, o: &Self) -> Self {
        let p = self.space.p;
        let mut out = ParamPoly::zero(&self.space);
        for (ma, &ca) in &self.terms {
            for (mb, &cb) in &o.terms {
                let m: Mono = ma.iter().zip(mb.iter()).map(|(a, b)| a + b).collect();
                out.add_raw(m, ca * cb % p);
            }
        }
        out
    }

    fn c_neg(&self) -> Self {
        let p = self.space.p;
        ParamPoly {
            space: self.space.clone(),
            terms: self.terms.iter().map(|(m, &c)| (m.clone(), p - c)).collect(),
        }
    }

    fn as_constant(&self) -> Option<Fp> {
        if self.terms.is_empty() {
            return Some(Fp::zero(self.space.p));
        }
        if self.is_constant() {
            let c = *self.terms.values().next().unwrap();
            return Some(Fp::new(c as i64, self.space.p));
        }
        None
    }

    fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let parts: Vec<String> = self
            .sorted_terms()
            .into_iter()
            .map(|(m, c)| {
                let mono = self.render_mono(m);
                match (mono.is_empty(), c) {
                    (true, _) => c.to_string(),
                    (false, 1) => mono,
                    (false, _) => format!("{}*{}", c, mono),
                }
            })
            .collect();
        parts.join(" + ")
    }

    fn is_compound(&self) -> bool {
        self.terms.len() > 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn space3() -> Arc<ParamSpace> {
        ParamSpace::new(3, &["l", "s", "t"], &[])
    }

    #[test]
    fn eval_examples() {
        let sp = space3();
        let l = ParamPoly::named(&sp, "l").unwrap();
        let s = ParamPoly::named(&sp, "s").unwrap();
        let t = ParamPoly::named(&sp, "t").unwrap();
        let f = l.c_mul(&s).c_add(&t);
        assert_eq!(f.eval(&[1, 2, 1]).unwrap().value(), 0);
        assert!(matches!(f.eval(&[1, 2]), Err(Error::ArityMismatch { .. })));

        let sp = ParamSpace::new(3, &["s", "e2"], &["e2"]);
        let s = ParamPoly::named(&sp, "s").unwrap();
        let e2 = ParamPoly::named(&sp, "e2").unwrap();
        let g = s.pow(2).c_sub(&e2);
        assert_eq!(g.eval(&[0, 0]).unwrap().value(), 0);
        assert_eq!(g.eval(&[2, 1]).unwrap().value(), 0);
    }

    #[test]
    fn canonical_text() {
        let sp = ParamSpace::new(5, &["e1", "l", "s", "t"], &["e1"]);
        let e1 = ParamPoly::named(&sp, "e1").unwrap();
        let l = ParamPoly::named(&sp, "l").unwrap();
        let s = ParamPoly::named(&sp, "s").unwrap();
        let t = ParamPoly::named(&sp, "t").unwrap();
        let f = e1.c_mul(&s).c_add(&l.c_mul(&t).c_mul(&ParamPoly::constant(&sp, 2)));
        assert_eq!(f.render(), "e1*s + 2*l*t");
        assert_eq!(s.pow(2).c_add(&ParamPoly::constant(&sp, 4)).render(), "s^2 + 4");
        assert_eq!(ParamPoly::zero(&sp).render(), "0");
    }

    #[test]
    fn coefficient_extraction() {
        let sp = space3();
        let l = ParamPoly::var(&sp, 0);
        let s = ParamPoly::var(&sp, 1);
        let f = l.pow(2).c_mul(&s).c_add(&s).c_add(&ParamPoly::constant(&sp, 2));
        let cs = f.coefficients_in(0);
        assert_eq!(cs.len(), 3);
        assert_eq!(cs[0], s.c_add(&ParamPoly::constant(&sp, 2)));
        assert!(cs[1].is_zero());
        assert_eq!(cs[2], s);
        assert_eq!(f.substitute(0, 1), s.c_add(&s).c_add(&ParamPoly::constant(&sp, 2)));
    }
}
