//! Local and infinite structure of homogeneous planar polynomial systems.
//!
//! For `x' = P(x, y)`, `y' = Q(x, y)` homogeneous of degree `n`, the real
//! roots of `G(1, u)` with `G = xQ - yP` (and `v = 0` for `G(v, 1)`) are the
//! characteristic directions at the origin and the singular points at
//! infinity. [`characteristic_directions`] classifies each one and
//! [`center_test`] decides whether the origin is a global center.

pub mod center;
pub mod charpoly;
pub mod direction;
pub mod error;
pub mod roots;

pub use center::{center_test, CenterVerdict};
pub use charpoly::{char_polys, CharPolys};
pub use direction::{
    characteristic_directions, classify_direction, classify_vertical, Direction, DirectionReport,
    FlowSign, LocalType, OrbitCount, Stability,
};
pub use error::AnalysisError;
pub use roots::{real_roots, AlgebraicRoot, Sturm};
