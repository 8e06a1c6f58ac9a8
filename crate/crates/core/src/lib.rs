//! Exact verification of pointed Hopf algebras of dimension p³ over F_p.
//!
//! The crate is layered: [`scalars`] supplies F_p and parametric coefficients,
//! [`ncalg`] free algebras and tensors, [`rewrite`] the diamond-lemma engine,
//! and the remaining modules build Hopf-theoretic checks on top.

pub mod catalog;
pub mod charp;
pub mod cobar;
pub mod error;
pub mod hopf;
pub mod linalg;
pub mod ncalg;
pub mod par;
pub mod report;
pub mod rewrite;
pub mod scalars;
pub mod ydnichols;

pub use error::{Error, Result};
