//! Exact bivariate polynomial algebra for planar polynomial systems.
//!
//! Coefficients are arbitrary-precision rationals ([`Rat`]). A [`PolySystem`]
//! pairs the right-hand sides `P` and `Q` of `x' = P(x, y)`, `y' = Q(x, y)`.
//! Systems are read from and printed to a small text format:
//!
//! ```text
//! # comment
//! dx/dt = y^5 + 3/2*x*y^3 - x^2*y
//! dy/dt = y^4 + x*y^2 + x^2
//! ```
//!
//! Printing uses graded lexicographic order with `x > y`, and parsing the
//! printed form gives back the same system.

pub mod bipoly;
pub mod error;
pub mod gcd;
pub mod parse;
mod print;
pub mod rat;
pub mod system;
pub mod upoly;

pub use bipoly::{BiPoly, Mono};
pub use error::ParseError;
pub use gcd::{coprime_check, gcd, Coprimality};
pub use parse::{parse_poly, parse_system};
pub use rat::{int, rat, Rat};
pub use system::PolySystem;
pub use upoly::UPoly;

/// Exact value of `f` at `(x, y)`.
pub fn eval_poly(f: &BiPoly, x: &Rat, y: &Rat) -> Rat {
    f.eval(x, y)
}

/// Canonical text form of a system; `parse_system(&print_system(s)) == s`.
pub fn print_system(s: &PolySystem) -> String {
    s.to_string()
}
