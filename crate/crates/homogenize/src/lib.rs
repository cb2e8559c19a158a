//! Reduction of quasi-homogeneous systems to homogeneous ones.
//!
//! [`homogenize_min`] substitutes `x̃ = x^s2`, `ỹ = y^s1`; [`homogenize_lcm`]
//! uses `x̃ = x^(s2/β)`, `ỹ = y^(s1/β)` with `β = lcm(s1, s2)`. Both rescale
//! time by the monomial that clears negative exponents and record the chart
//! where the map is injective together with the source's reflection symmetry.

pub mod error;
pub mod pullback;
pub mod symmetry;
pub mod target;
pub mod transform;

pub use error::{HomogError, PullbackError};
pub use pullback::{pullback_point, ExactCoord};
pub use symmetry::{reflect_system, symmetry_type, Symmetry, SymmetryKind};
pub use target::{target_class, ClassReport, TargetClass, TargetError};
pub use transform::{
    homogenize_lcm, homogenize_min, Chart, HomogSystem, TimeFactor, TransformPath, TransformRecord,
};
