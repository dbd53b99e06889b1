//! Module categories of duplicated algebras and the fundamental domain of the
//! cluster category they contain.

pub mod algebra;
pub mod artheory;
pub mod cli;
pub mod ctquiver;
pub mod error;
pub mod exactlin;
pub mod hmod;
pub mod quiver;
pub mod tilting;
pub mod triplecat;
pub mod verify;

pub use algebra::{Algebra, Rep, RepMap};
pub use error::{Error, Result};
pub use exactlin::{Field, Mat};
pub use hmod::PathAlgebra;
pub use quiver::{parse_quiver, DynkinType, Quiver};
