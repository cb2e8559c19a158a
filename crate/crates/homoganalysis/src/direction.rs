//! Local type of the origin along each characteristic direction, and of the
//! matching infinite singularity.
//!
//! Along `y = u0 x` the blow-up `y = ux` gives `x' = x P(1,u)`, `u' = G(1,u)`;
//! at infinity the chart `x = 1/z`, `y = u/z` gives `u' = G(1,u)`,
//! `z' = -z P(1,u)`. With `m` the multiplicity of `u0` and `g` the sign of
//! `G^(m)(1,u0)`, the two points have diagonal linear parts `(P, g)` and
//! `(g, -P)`, so for odd `m` a saddle at the origin pairs with a node at
//! infinity and vice versa. The `y`-axis uses `x = vy` with `v' = -G(v,1)`,
//! `y' = y Q(v,1)` and `v' = -G(v,1)`, `z' = -z Q(v,1)`.
//!
//! Signs of derivatives are read off the sign of the polynomial beside the
//! root, which is exact at algebraic roots.

use crate::charpoly::CharPolys;
use crate::error::AnalysisError;
use crate::roots::{real_roots, side_sign, AlgebraicRoot};
use polyparse::rat::sign;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LocalType {
    Saddle,
    Node,
    SaddleNode,
}

impl LocalType {
    pub fn as_str(&self) -> &'static str {
        match self {
            LocalType::Saddle => "saddle",
            LocalType::Node => "node",
            LocalType::SaddleNode => "saddle-node",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrbitCount {
    One,
    Infinite,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FlowSign {
    Outgoing,
    Incoming,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Stability {
    Stable,
    Unstable,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Direction {
    /// The line `y = u0 x`.
    Slope(AlgebraicRoot),
    /// The `y`-axis.
    Vertical,
}

/// Classification along one characteristic direction. Flow sign and
/// stability refer to the ray with `x > 0` (the positive `y`-axis for
/// [`Direction::Vertical`]) and its endpoint at infinity; for even degree the
/// opposite ray has reversed orientation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DirectionReport {
    pub direction: Direction,
    pub multiplicity: usize,
    pub local_type_blowup: LocalType,
    pub orbit_count_origin: OrbitCount,
    pub flow_sign: FlowSign,
    pub infinity_type: LocalType,
    /// Set for nodes at infinity.
    pub infinity_stability: Option<Stability>,
    /// For saddle-nodes: sign of `u - u0` (or of `v = x/y`) on the side of
    /// the parabolic sectors, at the origin and at infinity.
    pub origin_parabolic_side: Option<i8>,
    pub infinity_parabolic_side: Option<i8>,
}

/// `origin` and `infinity` hold, for the blown-up point, the sign of the
/// hyperbolic eigenvalue and the sign of the leading coefficient of the
/// flow along the exceptional line.
fn report(
    direction: Direction,
    m: usize,
    flow: i8,
    origin: (i8, i8),
    infinity: (i8, i8),
) -> DirectionReport {
    let classify = |(h, c): (i8, i8)| -> (LocalType, Option<i8>) {
        if m.is_multiple_of(2) {
            // Parabolic sectors lie where c·s^m has the stability of h.
            (LocalType::SaddleNode, Some(h * c))
        } else if h * c < 0 {
            (LocalType::Saddle, None)
        } else {
            (LocalType::Node, None)
        }
    };
    let (local, origin_side) = classify(origin);
    let (inf, inf_side) = classify(infinity);
    let infinity_stability = match inf {
        LocalType::Node if infinity.0 < 0 => Some(Stability::Stable),
        LocalType::Node => Some(Stability::Unstable),
        _ => None,
    };
    DirectionReport {
        direction,
        multiplicity: m,
        local_type_blowup: local,
        orbit_count_origin: if local == LocalType::Saddle {
            OrbitCount::One
        } else {
            OrbitCount::Infinite
        },
        flow_sign: if flow > 0 {
            FlowSign::Outgoing
        } else {
            FlowSign::Incoming
        },
        infinity_type: inf,
        infinity_stability,
        origin_parabolic_side: origin_side,
        infinity_parabolic_side: inf_side,
    }
}

/// Classifies the direction `y = u0 x` for a root `u0` of `G(1, u)`.
pub fn classify_direction(cp: &CharPolys, u0: &AlgebraicRoot) -> Result<DirectionReport, AnalysisError> {
    if u0.sign_of(&cp.g_u)? != 0 {
        return Err(AnalysisError::NotARoot);
    }
    let m = u0.multiplicity;
    let p = u0.sign_of(&cp.p_u)?;
    debug_assert_ne!(p, 0, "coprime components");
    let g = side_sign(&cp.g_u, u0, 1)?;
    Ok(report(Direction::Slope(u0.clone()), m, p, (p, g), (-p, g)))
}

/// Classifies the `y`-axis, or `None` if it is not a characteristic direction.
pub fn classify_vertical(cp: &CharPolys) -> Option<DirectionReport> {
    let m = cp.g_v.zero_multiplicity().expect("G is nonzero");
    if m == 0 {
        return None;
    }
    let g = sign(&cp.g_v.coeff(m));
    let q = sign(&cp.q_v.coeff(0));
    Some(report(Direction::Vertical, m, q, (q, -g), (-q, -g)))
}

/// All characteristic directions ordered by angle in `(-π/2, π/2]`.
pub fn characteristic_directions(cp: &CharPolys) -> Result<Vec<DirectionReport>, AnalysisError> {
    let mut out = real_roots(&cp.g_u)
        .iter()
        .map(|r| classify_direction(cp, r))
        .collect::<Result<Vec<_>, _>>()?;
    out.extend(classify_vertical(cp));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charpoly::char_polys;
    use polyparse::{int, parse_system};

    fn dirs(t: &str) -> Vec<DirectionReport> {
        characteristic_directions(&char_polys(&parse_system(t).unwrap()).unwrap()).unwrap()
    }

    #[test]
    fn diagonal_cubic() {
        let d = dirs("dx/dt = x^3\ndy/dt = y^3");
        assert_eq!(d.len(), 4);
        // u0 = 0: P = 1, G' = -1.
        assert!(matches!(&d[1].direction, Direction::Slope(r) if r.exact == Some(int(0))));
        assert_eq!(d[1].local_type_blowup, LocalType::Saddle);
        assert_eq!(d[1].infinity_type, LocalType::Node);
        assert_eq!(d[1].orbit_count_origin, OrbitCount::One);
        // u0 = 1: G' = 2.
        assert_eq!(d[2].local_type_blowup, LocalType::Node);
        assert_eq!(d[2].infinity_type, LocalType::Saddle);
        assert_eq!(d[2].flow_sign, FlowSign::Outgoing);
        assert_eq!(d[3].direction, Direction::Vertical);
        assert_eq!(d[3].local_type_blowup, LocalType::Saddle);
    }

    #[test]
    fn even_multiplicity_is_saddle_node() {
        // G = -x^2 y: the y-axis has multiplicity 2.
        let d = dirs("dx/dt = x^2 - x*y\ndy/dt = -y^2");
        let sn: Vec<_> = d.iter().filter(|r| r.multiplicity % 2 == 0).collect();
        assert!(!sn.is_empty());
        for r in sn {
            assert_eq!(r.local_type_blowup, LocalType::SaddleNode);
            assert_eq!(r.infinity_type, LocalType::SaddleNode);
            assert!(r.origin_parabolic_side.is_some());
        }
    }

    #[test]
    fn h3_vertical_end() {
        // H3 normal form with c12 < 1: stable node at the end of the y-axis.
        let d = dirs("dx/dt = x*(1/2*y^2 + x^2)\ndy/dt = y*(y^2 - x^2)");
        let v = d.last().unwrap();
        assert_eq!(v.direction, Direction::Vertical);
        assert_eq!(v.infinity_type, LocalType::Node);
        assert_eq!(v.infinity_stability, Some(Stability::Stable));
        // c12 = 1, d12 ≠ c21: saddle-node.
        let d = dirs("dx/dt = x*(y^2 + x^2)\ndy/dt = y*(y^2 + x*y - x^2)");
        assert_eq!(d.last().unwrap().infinity_type, LocalType::SaddleNode);
        // c12 > 1: saddle.
        let d = dirs("dx/dt = x*(2*y^2 + x^2)\ndy/dt = y*(y^2 - x^2)");
        assert_eq!(d.last().unwrap().infinity_type, LocalType::Saddle);
    }
}
