//! Numerical cross-checks for planar polynomial systems.
//!
//! Everything here is floating point and advisory: an adaptive Dormand–Prince
//! 5(4) integrator, sector probes that sample the behaviour of orbits near a
//! ray from the origin, and streamline sets for plotting. The exact
//! classification lives elsewhere; disagreements with it are review flags.
//!
//! With the default `parallel` feature, streamline sets and batches of probes
//! run on rayon; results are collected in input order either way.

mod error;
pub mod field;
pub mod geometry;
pub mod integrate;
pub mod probe;
pub mod stream;
pub mod window;

pub use error::OracleError;
pub use field::FloatField;
pub use geometry::{directed_hausdorff, hausdorff, point_to_polyline};
pub use integrate::{integrate, integrate_with_max_step, Sample, Termination, Trajectory, ORIGIN_CUTOFF};
pub use probe::{direction_angle, probe_all, probe_direction, sector_probe, ProbeVerdict, SectorProbe, SideBehavior};
pub use stream::{seed_grid, streamlines, streamlines_sequential, to_csv, to_svg};
pub use window::Window;
