//! Exact lattice arithmetic: vectors and matrices over `ℤ`, Laurent
//! polynomials in `q`, and sparse group-algebra elements.

mod algebra;
mod laurent;
mod matrix;
pub mod smith;
mod vector;

pub use algebra::GroupAlg;
pub(crate) use laurent::pow_rational;
pub use laurent::Laurent;
pub use matrix::IntMatrix;
pub use smith::{smith_normal_form, solve_integer, Smith};
pub use vector::IntVec;
