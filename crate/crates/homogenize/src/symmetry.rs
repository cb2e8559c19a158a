use crate::error::HomogError;
use polyparse::PolySystem;
use qhcore::WeightVector;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SymmetryKind {
    /// `(x, y) -> (x, -y)`.
    XAxis,
    /// `(x, y) -> (-x, y)`.
    YAxis,
    /// `(x, y) -> (-x, -y)`.
    Origin,
}

impl SymmetryKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            SymmetryKind::XAxis => "x-axis",
            SymmetryKind::YAxis => "y-axis",
            SymmetryKind::Origin => "origin",
        }
    }

    /// Sign flips `(sx, sy)` applied to the coordinates.
    pub fn flips(&self) -> (bool, bool) {
        match self {
            SymmetryKind::XAxis => (false, true),
            SymmetryKind::YAxis => (true, false),
            SymmetryKind::Origin => (true, true),
        }
    }

    pub fn apply(&self, x: f64, y: f64) -> (f64, f64) {
        let (fx, fy) = self.flips();
        (if fx { -x } else { x }, if fy { -y } else { y })
    }
}

/// A reflection leaving the phase portrait invariant; `time_reversed` tells
/// whether orbits are mapped onto orbits with opposite orientation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Symmetry {
    pub kind: SymmetryKind,
    pub time_reversed: bool,
}

/// Parity rule: `s1` even gives the `x`-axis mirror, `s2` even the `y`-axis
/// mirror, both odd the point reflection. Every monomial vector satisfies
/// `v · (s1, s2) = d - 1`, so the reflected field is `(-1)^(d-1)` times the
/// original and time reverses exactly when `d` is even.
pub fn symmetry_type(w: &WeightVector) -> Result<Symmetry, HomogError> {
    let kind = match (w.s1.is_multiple_of(2), w.s2.is_multiple_of(2)) {
        (true, false) => SymmetryKind::XAxis,
        (false, true) => SymmetryKind::YAxis,
        (false, false) => SymmetryKind::Origin,
        (true, true) => return Err(HomogError::BothEven),
    };
    Ok(Symmetry {
        kind,
        time_reversed: w.d.is_multiple_of(2),
    })
}

/// The system pulled back through the reflection: `F'(z) = R F(R z)`.
pub fn reflect_system(s: &PolySystem, kind: SymmetryKind) -> PolySystem {
    let (fx, fy) = kind.flips();
    let p = s.p().reflect(fx, fy);
    let q = s.q().reflect(fx, fy);
    let p = if fx { -&p } else { p };
    let q = if fy { -&q } else { q };
    PolySystem::new(p, q).expect("reflection keeps components nonzero")
}

#[cfg(test)]
mod tests {
    use super::*;
    use polyparse::parse_system;

    #[test]
    fn parity_rule() {
        let s = symmetry_type(&WeightVector::new(2, 1, 4)).unwrap();
        assert_eq!(s.kind, SymmetryKind::XAxis);
        assert!(s.time_reversed);
        assert_eq!(symmetry_type(&WeightVector::new(5, 3, 11)).unwrap().kind, SymmetryKind::Origin);
        assert_eq!(symmetry_type(&WeightVector::new(5, 4, 17)).unwrap().kind, SymmetryKind::YAxis);
        assert_eq!(symmetry_type(&WeightVector::new(4, 2, 7)), Err(HomogError::BothEven));
    }

    #[test]
    fn reflected_field_is_signed_copy() {
        let s = parse_system("dx/dt = y^5 + x*y^3 + x^2*y\ndy/dt = y^4 + x*y^2 + x^2").unwrap();
        let r = reflect_system(&s, SymmetryKind::XAxis);
        assert_eq!(r, s.scale(&polyparse::int(-1)));
        let x023 = parse_system("dx/dt = y^5 + x^3\ndy/dt = x^2*y").unwrap();
        assert_eq!(reflect_system(&x023, SymmetryKind::Origin), x023);
    }
}
