//! Free noncommutative polynomials, tensor powers, and braided tensor products.

mod braided;
mod poly;
mod tensor;
pub mod text;
mod word;

pub use braided::{BraidingData, GroupElt};
pub use poly::NCPoly;
pub use tensor::Tensor;
pub use word::{Alphabet, Letter, Word};
