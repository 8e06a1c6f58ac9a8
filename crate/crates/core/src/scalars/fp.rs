use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// Residue modulo a small prime `p`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fp {
    value: u32,
    p: u32,
}

impl Fp {
    pub fn new(n: i64, p: u32) -> Fp {
        debug_assert!((2..=7).contains(&p));
        Fp { value: n.rem_euclid(p as i64) as u32, p }
    }

    pub fn zero(p: u32) -> Fp {
        Fp { value: 0, p }
    }

    pub fn one(p: u32) -> Fp {
        Fp { value: 1, p }
    }

    pub fn value(self) -> u32 {
        self.value
    }

    pub fn p(self) -> u32 {
        self.p
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    pub fn pow(self, mut e: u64) -> Fp {
        let mut base = self;
        let mut acc = Fp::one(self.p);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    pub fn inv(self) -> Result<Fp> {
        ff_inv(self)
    }
}

/// Multiplicative inverse by Fermat: a^(p-2).
pub fn ff_inv(a: Fp) -> Result<Fp> {
    if a.is_zero() {
        return Err(Error::ZeroInverse);
    }
    Ok(a.pow(a.p as u64 - 2))
}

impl Add for Fp {
    type Output = Fp;
    fn add(self, o: Fp) -> Fp {
        debug_assert_eq!(self.p, o.p);
        Fp { value: (self.value + o.value) % self.p, p: self.p }
    }
}

impl Sub for Fp {
    type Output = Fp;
    fn sub(self, o: Fp) -> Fp {
        debug_assert_eq!(self.p, o.p);
        Fp { value: (self.value + self.p - o.value) % self.p, p: self.p }
    }
}

impl Mul for Fp {
    type Output = Fp;
    fn mul(self, o: Fp) -> Fp {
        debug_assert_eq!(self.p, o.p);
        Fp { value: (self.value * o.value) % self.p, p: self.p }
    }
}

impl Neg for Fp {
    type Output = Fp;
    fn neg(self) -> Fp {
        Fp { value: (self.p - self.value) % self.p, p: self.p }
    }
}

impl fmt::Debug for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}", self.value, self.p)
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverses() {
        assert_eq!(ff_inv(Fp::new(2, 3)).unwrap(), Fp::new(2, 3));
        assert_eq!(ff_inv(Fp::new(1, 5)).unwrap(), Fp::new(1, 5));
        assert_eq!(ff_inv(Fp::new(3, 5)).unwrap(), Fp::new(2, 5));
        assert_eq!(ff_inv(Fp::new(0, 5)), Err(Error::ZeroInverse));
    }

    #[test]
    fn field_axioms_exhaustive() {
        for p in [2u32, 3, 5, 7] {
            let all: Vec<Fp> = (0..p as i64).map(|v| Fp::new(v, p)).collect();
            for &a in &all {
                assert_eq!(a + Fp::zero(p), a);
                assert_eq!(a * Fp::one(p), a);
                assert_eq!(a + (-a), Fp::zero(p));
                if !a.is_zero() {
                    assert_eq!(a * a.inv().unwrap(), Fp::one(p));
                }
                for &b in &all {
                    assert_eq!(a + b, b + a);
                    assert_eq!(a * b, b * a);
                    assert_eq!((a - b) + b, a);
                    for &c in &all {
                        assert_eq!((a + b) + c, a + (b + c));
                        assert_eq!((a * b) * c, a * (b * c));
                        assert_eq!(a * (b + c), a * b + a * c);
                    }
                }
            }
        }
    }
}
