//! Global phase portraits.
//!
//! [`assemble_portrait`] turns the characteristic directions of a homogeneous
//! system into a cyclic code of rays and sectors, and [`pull_back`] carries
//! it to the quasi-homogeneous plane. [`x111`] matches the cubic target of
//! `X_111` against the figure tables; [`h2`] handles the quadratic targets
//! and [`linear`] the degree-one and constant ones.

pub mod code;
pub mod error;
pub mod h2;
pub mod linear;
pub mod x111;

pub use code::{
    assemble_portrait, homogeneous_portrait, pull_back, InfinityKind, InfinityPoint, InfinityRing,
    Plane, PortraitCode, Ray, Rotation, Sector, SectorType,
};
pub use error::PortraitError;
pub use h2::{h2_case, H2Case, H2Infinity, H2RootCase};
pub use linear::{classify_linear, constant_direction, LinearClass};
pub use x111::{
    h3_signature, x111_census, x111_label, x111_portrait, x111_signature, x111_target, A14Regime,
    H3Coeffs, H3Signature, RootCase, X111Census, X111Label, X111Report,
};
