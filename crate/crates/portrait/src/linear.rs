//! Degree-one and constant targets.

use num_traits::{Signed, Zero};
use polyparse::{int, PolySystem, Rat};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LinearClass {
    Saddle,
    Node { stable: bool },
    /// Repeated eigenvalue with a full eigenspace.
    StarNode { stable: bool },
    /// Repeated eigenvalue with a single eigenvector.
    DegenerateNode { stable: bool },
    Focus { stable: bool },
    Center,
    /// Zero determinant: the origin is not isolated.
    NonIsolated,
}

impl LinearClass {
    pub fn as_str(&self) -> &'static str {
        match self {
            LinearClass::Saddle => "saddle",
            LinearClass::Node { .. } => "node",
            LinearClass::StarNode { .. } => "star node",
            LinearClass::DegenerateNode { .. } => "degenerate node",
            LinearClass::Focus { .. } => "focus",
            LinearClass::Center => "center",
            LinearClass::NonIsolated => "non-isolated",
        }
    }
}

/// Classifies `ẋ = c10 x + c01 y`, `ẏ = d10 x + d01 y` by trace and determinant.
pub fn classify_linear(s: &PolySystem) -> LinearClass {
    let (a, b) = (s.p().coeff(1, 0), s.p().coeff(0, 1));
    let (c, d) = (s.q().coeff(1, 0), s.q().coeff(0, 1));
    let tr = &a + &d;
    let det = &a * &d - &b * &c;
    let disc = &tr * &tr - int(4) * &det;
    let stable = tr.is_negative();
    if det.is_zero() {
        LinearClass::NonIsolated
    } else if det.is_negative() {
        LinearClass::Saddle
    } else if tr.is_zero() {
        LinearClass::Center
    } else if disc.is_negative() {
        LinearClass::Focus { stable }
    } else if disc.is_zero() {
        if b.is_zero() && c.is_zero() {
            LinearClass::StarNode { stable }
        } else {
            LinearClass::DegenerateNode { stable }
        }
    } else {
        LinearClass::Node { stable }
    }
}

/// Direction `(c, d)` of a constant field; every orbit is a parallel line.
pub fn constant_direction(s: &PolySystem) -> (Rat, Rat) {
    (s.p().coeff(0, 0), s.q().coeff(0, 0))
}
