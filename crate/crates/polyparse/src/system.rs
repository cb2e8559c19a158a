use crate::bipoly::BiPoly;
use crate::error::ParseError;
use crate::rat::Rat;
use std::fmt;

/// Planar polynomial system `x' = P(x, y)`, `y' = Q(x, y)` with `P·Q ≢ 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolySystem {
    p: BiPoly,
    q: BiPoly,
}

impl PolySystem {
    pub fn new(p: BiPoly, q: BiPoly) -> Result<Self, ParseError> {
        if p.is_zero() || q.is_zero() {
            return Err(ParseError::ZeroSystem);
        }
        Ok(PolySystem { p, q })
    }

    pub fn p(&self) -> &BiPoly {
        &self.p
    }

    pub fn q(&self) -> &BiPoly {
        &self.q
    }

    /// `n = max(deg P, deg Q)`.
    pub fn degree(&self) -> u32 {
        self.p.degree().max(self.q.degree())
    }

    /// Both components homogeneous of the same degree.
    pub fn is_homogeneous(&self) -> bool {
        self.p.is_homogeneous()
            && self.q.is_homogeneous()
            && self.p.degree() == self.q.degree()
    }

    pub fn eval(&self, x: &Rat, y: &Rat) -> (Rat, Rat) {
        (self.p.eval(x, y), self.q.eval(x, y))
    }

    pub fn eval_f64(&self, x: f64, y: f64) -> (f64, f64) {
        (self.p.eval_f64(x, y), self.q.eval_f64(x, y))
    }

    /// The system in swapped coordinates `(x, y) -> (y, x)`.
    pub fn swap_xy(&self) -> PolySystem {
        PolySystem {
            p: self.q.swap_xy(),
            q: self.p.swap_xy(),
        }
    }

    /// Multiplies both components by a nonzero constant.
    pub fn scale(&self, c: &Rat) -> PolySystem {
        assert!(!num_traits::Zero::is_zero(c), "scaling a system by zero");
        PolySystem {
            p: self.p.scale(c),
            q: self.q.scale(c),
        }
    }
}

/// Prints `dx/dt = ...` and `dy/dt = ...` lines in the parser's grammar.
impl fmt::Display for PolySystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "dx/dt = {}", self.p)?;
        writeln!(f, "dy/dt = {}", self.q)
    }
}
