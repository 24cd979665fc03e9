#![doc = include_str!("../../../book/src/introduction.md")]

pub mod dualdata;
pub mod error;
pub mod field;
pub mod lattice;
pub mod rfunc;
pub mod rootdatum;
pub mod satake;

pub use error::{Error, Result};

// The guide's code listings run as doctests, one module per chapter so a
// failure names its chapter.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/root-data.md")]
    mod root_data {}
    #[doc = include_str!("../../../book/src/dual-data.md")]
    mod dual_data {}
    #[doc = include_str!("../../../book/src/satake.md")]
    mod satake {}
    #[doc = include_str!("../../../book/src/r-factors.md")]
    mod r_factors {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
    #[doc = include_str!("../../../README.md")]
    mod readme {}
}
