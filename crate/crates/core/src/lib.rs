//! Exact trace polynomials of simple closed curves on pants-decomposed
//! surfaces under the plumbing construction, with checks of their top terms.
//!
//! Pipeline: [`surface`] -> [`coords`] -> [`position`] -> [`word`] ->
//! [`holonomy`] -> [`verify`]. [`fuzz`] samples coordinates and holds the
//! independent embedding oracle.

pub mod coords;
pub mod error;
pub mod fuzz;
pub mod gauss;
pub mod holonomy;
pub mod mat2;
pub mod poly;
pub mod position;
pub mod surface;
pub mod verify;
pub mod word;

pub use coords::{DtCoordinates, FlpTriple, PennerTwists};
pub use error::{Error, Result};
pub use gauss::GaussInt;
pub use mat2::Mat2;
pub use poly::{GaussPoly, Monomial};
pub use surface::{PantsDecomposition, SlotLabel};
pub use word::HolonomyWord;
