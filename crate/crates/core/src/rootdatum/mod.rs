//! Based root data, duality, positive roots, Weyl groups, dominance and
//! isomorphism testing.

mod datum;
mod dominance;
mod iso;
mod roots;
mod weyl;

pub use datum::{RootDatum, Violation, BUILTIN_NAMES};
pub use iso::{datum_isomorphic, datum_isomorphisms, transport_x, ISO_SEARCH_RADIUS};
pub use roots::{root_system, PositiveRoot, RootSystem, DEFAULT_ROOT_CAP};
pub(crate) use weyl::stabilizer_poincare_in;
pub use weyl::{inversion_count, WeylElement, WeylGroup, DEFAULT_WEYL_CAP};
