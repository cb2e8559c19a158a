//! Numerical sector sampling along a ray from the origin.
//!
//! Two seeds at angle `θ0 ± δ` on the circle of the given radius are
//! integrated in the time direction that brings the ray itself toward the
//! origin, using the field divided by `r^(n-1)` (`n` the lowest degree), so
//! that degenerate equilibria are approached at an exponential rate. A seed
//! whose angular deviation from `θ0` shrinks while `r` drops by four decades
//! approaches along the ray; one whose deviation grows departs; one that
//! crosses the ray is passing by. Both seeds approaching is a node, neither a
//! saddle, exactly one a saddle-node.

use crate::error::OracleError;
use crate::field::FloatField;
use crate::integrate::{check_tol, run, Control, RunOptions, Termination, Trajectory, ORIGIN_CUTOFF};
use homoganalysis::{Direction, DirectionReport, FlowSign, LocalType};
use polyparse::PolySystem;
use std::f64::consts::{PI, TAU};

/// Angular offset of the seeds.
pub const PROBE_OFFSET: f64 = 1e-3;

/// Radius reduction factor that ends a probe.
const SHRINK: f64 = 1e-4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SideBehavior {
    Approaches,
    Departs,
    Crosses,
    Inconclusive,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ProbeVerdict {
    Node,
    Saddle,
    SaddleNode,
    PassBy,
    Inconclusive,
}

impl ProbeVerdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            ProbeVerdict::Node => "node",
            ProbeVerdict::Saddle => "saddle",
            ProbeVerdict::SaddleNode => "saddle-node",
            ProbeVerdict::PassBy => "pass-by",
            ProbeVerdict::Inconclusive => "inconclusive",
        }
    }

    pub fn local_type(&self) -> Option<LocalType> {
        match self {
            ProbeVerdict::Node => Some(LocalType::Node),
            ProbeVerdict::Saddle => Some(LocalType::Saddle),
            ProbeVerdict::SaddleNode => Some(LocalType::SaddleNode),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SectorProbe {
    pub angle: f64,
    pub radius: f64,
    /// Orientation of the flow along the ray, `None` if not resolved.
    pub radial: Option<FlowSign>,
    /// Seeds at `angle - δ` and `angle + δ`.
    pub sides: [SideBehavior; 2],
    pub verdict: ProbeVerdict,
    pub seeds: [Trajectory; 2],
}

impl SectorProbe {
    pub fn conclusive(&self) -> bool {
        !matches!(self.verdict, ProbeVerdict::Inconclusive)
    }

    /// Whether the probe agrees with `rep` on the local type and on the flow
    /// along the ray; `None` if inconclusive.
    pub fn agrees_with(&self, rep: &DirectionReport) -> Option<bool> {
        let t = self.verdict.local_type();
        if !self.conclusive() {
            return None;
        }
        Some(t == Some(rep.local_type_blowup) && self.radial == Some(rep.flow_sign))
    }
}

/// Angle of the ray a report refers to: `y = u0 x` with `x > 0`, or the
/// positive `y`-axis.
pub fn direction_angle(d: &Direction) -> f64 {
    match d {
        Direction::Slope(r) => r.to_f64().atan(),
        Direction::Vertical => PI / 2.0,
    }
}

fn wrap(a: f64) -> f64 {
    let w = a.rem_euclid(TAU);
    if w > PI {
        w - TAU
    } else {
        w
    }
}

pub fn sector_probe(s: &PolySystem, angle: f64, radius: f64, tol: f64) -> Result<SectorProbe, OracleError> {
    check_tol(tol)?;
    if !(radius.is_finite() && radius > ORIGIN_CUTOFF) {
        return Err(OracleError::BadRadius(radius));
    }
    let field = FloatField::new(s);
    let (c, sn) = (angle.cos(), angle.sin());
    let f = field.eval_rescaled([radius * c, radius * sn]);
    let radial = f[0] * c + f[1] * sn;
    let speed = f[0].hypot(f[1]);
    let radial_sign = (radial.abs() > 1e-9 * speed).then_some({
        if radial > 0.0 {
            FlowSign::Outgoing
        } else {
            FlowSign::Incoming
        }
    });
    let dir = if radial > 0.0 { -1.0 } else { 1.0 };
    let opts = RunOptions { tol, tmax: dir * 1e5, max_step: f64::INFINITY };
    let seed = |side: f64| -> (SideBehavior, Trajectory) {
        let a = angle + side * PROBE_OFFSET;
        let mut outcome = SideBehavior::Inconclusive;
        let tr = run(
            |z| field.eval_rescaled(z),
            [radius * a.cos(), radius * a.sin()],
            opts,
            |st| {
                let [x, y] = st.y1;
                let r = x.hypot(y);
                let dev = wrap(y.atan2(x) - angle);
                outcome = if dev * side < -1e-3 * PROBE_OFFSET {
                    SideBehavior::Crosses
                } else if dev.abs() < 1e-6 * PROBE_OFFSET && r < radius {
                    SideBehavior::Approaches
                } else if dev.abs() > 4.0 * PROBE_OFFSET || r > 4.0 * radius {
                    SideBehavior::Departs
                } else if r < radius * SHRINK {
                    if dev.abs() < PROBE_OFFSET {
                        SideBehavior::Approaches
                    } else {
                        SideBehavior::Departs
                    }
                } else {
                    return Control::Continue;
                };
                Control::Stop(Termination::MaxTime)
            },
        );
        (outcome, tr)
    };
    let (lo, tlo) = seed(-1.0);
    let (hi, thi) = seed(1.0);
    use SideBehavior::*;
    let verdict = match (lo, hi) {
        (Inconclusive, _) | (_, Inconclusive) => ProbeVerdict::Inconclusive,
        (Crosses, _) | (_, Crosses) => ProbeVerdict::PassBy,
        (Approaches, Approaches) => ProbeVerdict::Node,
        (Departs, Departs) => ProbeVerdict::Saddle,
        _ => ProbeVerdict::SaddleNode,
    };
    Ok(SectorProbe {
        angle,
        radius,
        radial: radial_sign,
        sides: [lo, hi],
        verdict,
        seeds: [tlo, thi],
    })
}

/// Probes the ray of `rep` at each radius in turn until one is conclusive.
pub fn probe_direction(
    s: &PolySystem,
    rep: &DirectionReport,
    radii: &[f64],
    tol: f64,
) -> Result<SectorProbe, OracleError> {
    let angle = direction_angle(&rep.direction);
    let mut last = None;
    for &r in radii {
        let p = sector_probe(s, angle, r, tol)?;
        if p.conclusive() {
            return Ok(p);
        }
        last = Some(p);
    }
    last.ok_or(OracleError::BadRadius(f64::NAN))
}

/// [`probe_direction`] for every report, in report order.
pub fn probe_all(
    s: &PolySystem,
    reports: &[DirectionReport],
    radii: &[f64],
    tol: f64,
) -> Result<Vec<SectorProbe>, OracleError> {
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        reports.par_iter().map(|r| probe_direction(s, r, radii, tol)).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        reports.iter().map(|r| probe_direction(s, r, radii, tol)).collect()
    }
}
