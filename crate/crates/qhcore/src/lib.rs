//! Quasi-homogeneous planar polynomial systems: weight vectors, the graded
//! block structure, and the catalog of quintic families.

pub mod catalog;
pub mod decompose;
pub mod error;
pub mod sample;
pub mod weights;

pub use catalog::{catalog, quintic_catalog, Coef, Component, Family};
pub use decompose::{decompose, Block, BlockRole, Decomposition, DegreeOneForm, QhStructure};
pub use error::QhError;
pub use weights::{minimality_audit, satisfies, weight_vectors, WeightFamily, WeightSet, WeightVector};
