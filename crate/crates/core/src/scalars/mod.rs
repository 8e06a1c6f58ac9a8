//! Coefficient rings: the prime field and polynomials over it in named parameters.

mod fp;
mod locus;
mod param;

use std::fmt::Debug;
use std::hash::Hash;

pub use fp::{ff_inv, Fp};
pub use locus::{all_points, full_locus, vanishing_locus, vanishing_locus_capped, Locus, DEFAULT_ENUM_CAP};
pub use param::{ParamPoly, ParamSpace};

/// Exact commutative coefficient ring carried by every algebra element.
///
/// Elements know their own ring, so constants are made from an existing element.
pub trait Coeff: Clone + PartialEq + Eq + Ord + Hash + Debug + Send + Sync + 'static {
    fn modulus(&self) -> u32;
    fn is_zero(&self) -> bool;
    fn int_like(&self, n: i64) -> Self;
    fn c_add(&self, o: &Self) -> Self;
    fn c_sub(&self, o: &Self) -> Self;
    fn c_mul(&self, o: &Self) -> Self;
    fn c_neg(&self) -> Self;
    /// The value when the element is parameter-free.
    fn as_constant(&self) -> Option<Fp>;
    fn render(&self) -> String;
    /// True when rendering as a factor needs parentheses.
    fn is_compound(&self) -> bool {
        false
    }

    fn zero_like(&self) -> Self {
        self.int_like(0)
    }
    fn one_like(&self) -> Self {
        self.int_like(1)
    }
    fn is_one(&self) -> bool {
        self.as_constant().map(|c| c.value() == 1).unwrap_or(false)
    }
    /// Inverse of a nonzero constant; `None` for parametric or zero elements.
    fn const_inverse(&self) -> Option<Self> {
        let c = self.as_constant()?;
        let inv = c.inv().ok()?;
        Some(self.int_like(inv.value() as i64))
    }
}

impl Coeff for Fp {
    fn modulus(&self) -> u32 {
        self.p()
    }
    fn is_zero(&self) -> bool {
        Fp::is_zero(*self)
    }
    fn int_like(&self, n: i64) -> Self {
        Fp::new(n, self.p())
    }
    fn c_add(&self, o: &Self) -> Self {
        *self + *o
    }
    fn c_sub(&self, o: &Self) -> Self {
        *self - *o
    }
    fn c_mul(&self, o: &Self) -> Self {
        *self * *o
    }
    fn c_neg(&self) -> Self {
        -*self
    }
    fn as_constant(&self) -> Option<Fp> {
        Some(*self)
    }
    fn render(&self) -> String {
        self.value().to_string()
    }
}
