//! Dormand–Prince 5(4) with step-size control and stop hooks.

use crate::error::OracleError;
use crate::field::FloatField;
use crate::window::Window;
use polyparse::PolySystem;

/// Radius below which a trajectory counts as having reached the origin.
pub const ORIGIN_CUTOFF: f64 = 1e-8;

/// Accepted-step budget per integration.
pub const MAX_STEPS: usize = 2_000_000;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Sample {
    pub t: f64,
    pub x: f64,
    pub y: f64,
}

impl Sample {
    pub fn point(&self) -> [f64; 2] {
        [self.x, self.y]
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Termination {
    MaxTime,
    EscapedWindow,
    ApproachedOrigin,
    StepUnderflow,
    /// Returned to the seed (streamlines only).
    Closed,
    /// [`MAX_STEPS`] accepted steps without another stop.
    StepBudget,
}

impl Termination {
    pub fn as_str(&self) -> &'static str {
        match self {
            Termination::MaxTime => "max-time",
            Termination::EscapedWindow => "escaped-window",
            Termination::ApproachedOrigin => "approached-origin",
            Termination::StepUnderflow => "step-underflow",
            Termination::Closed => "closed",
            Termination::StepBudget => "step-budget",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Trajectory {
    /// Ordered by `t`: increasing for forward runs, decreasing for backward ones.
    pub samples: Vec<Sample>,
    pub termination: Termination,
}

impl Trajectory {
    pub fn first(&self) -> Sample {
        self.samples[0]
    }

    pub fn last(&self) -> Sample {
        *self.samples.last().expect("nonempty")
    }

    pub fn points(&self) -> impl Iterator<Item = [f64; 2]> + '_ {
        self.samples.iter().map(Sample::point)
    }
}

pub fn check_tol(tol: f64) -> Result<(), OracleError> {
    if (1e-12..=1e-3).contains(&tol) {
        Ok(())
    } else {
        Err(OracleError::BadTolerance(tol))
    }
}

/// One accepted step with the end derivatives, enough for cubic Hermite
/// interpolation inside it.
#[derive(Clone, Copy, Debug)]
pub struct Step {
    pub t0: f64,
    pub y0: [f64; 2],
    pub f0: [f64; 2],
    pub t1: f64,
    pub y1: [f64; 2],
    pub f1: [f64; 2],
}

impl Step {
    pub fn interpolate(&self, t: f64) -> [f64; 2] {
        let h = self.t1 - self.t0;
        let s = (t - self.t0) / h;
        let (s2, s3) = (s * s, s * s * s);
        let h00 = 2.0 * s3 - 3.0 * s2 + 1.0;
        let h10 = s3 - 2.0 * s2 + s;
        let h01 = -2.0 * s3 + 3.0 * s2;
        let h11 = s3 - s2;
        [0, 1].map(|i| h00 * self.y0[i] + h10 * h * self.f0[i] + h01 * self.y1[i] + h11 * h * self.f1[i])
    }
}

pub enum Control {
    Continue,
    Stop(Termination),
    /// Stop and replace the step's end point.
    StopAt(Termination, Sample),
}

#[derive(Clone, Copy, Debug)]
pub struct RunOptions {
    pub tol: f64,
    /// Signed; a negative value integrates backward.
    pub tmax: f64,
    pub max_step: f64,
}

const A: [[f64; 6]; 7] = [
    [0.0; 6],
    [1.0 / 5.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    [3.0 / 40.0, 9.0 / 40.0, 0.0, 0.0, 0.0, 0.0],
    [44.0 / 45.0, -56.0 / 15.0, 32.0 / 9.0, 0.0, 0.0, 0.0],
    [19372.0 / 6561.0, -25360.0 / 2187.0, 64448.0 / 6561.0, -212.0 / 729.0, 0.0, 0.0],
    [9017.0 / 3168.0, -355.0 / 33.0, 46732.0 / 5247.0, 49.0 / 176.0, -5103.0 / 18656.0, 0.0],
    [35.0 / 384.0, 0.0, 500.0 / 1113.0, 125.0 / 192.0, -2187.0 / 6784.0, 11.0 / 84.0],
];
/// Fifth-order minus embedded fourth-order weights.
const E: [f64; 7] = [
    71.0 / 57600.0,
    0.0,
    -71.0 / 16695.0,
    71.0 / 1920.0,
    -17253.0 / 339200.0,
    22.0 / 525.0,
    -1.0 / 40.0,
];

fn err_norm(e: [f64; 2], y0: [f64; 2], y1: [f64; 2], tol: f64) -> f64 {
    let s: f64 = (0..2)
        .map(|i| {
            let sc = tol + tol * y0[i].abs().max(y1[i].abs());
            (e[i] / sc).powi(2)
        })
        .sum();
    (s / 2.0).sqrt()
}

/// Integrates `y' = f(y)` from `start`, calling `stop` after every accepted
/// step. Deterministic in its inputs.
pub fn run<F, S>(f: F, start: [f64; 2], opts: RunOptions, mut stop: S) -> Trajectory
where
    F: Fn([f64; 2]) -> [f64; 2],
    S: FnMut(&Step) -> Control,
{
    let mut samples = vec![Sample { t: 0.0, x: start[0], y: start[1] }];
    let dir = opts.tmax.signum();
    let tend = opts.tmax.abs();
    let finish = |samples: Vec<Sample>, termination| Trajectory { samples, termination };
    if tend == 0.0 {
        return finish(samples, Termination::MaxTime);
    }
    let mut y = start;
    let mut fy = f(y);
    if fy == [0.0, 0.0] {
        let term = if start[0].hypot(start[1]) < ORIGIN_CUTOFF {
            Termination::ApproachedOrigin
        } else {
            Termination::MaxTime
        };
        return finish(samples, term);
    }
    // Initial step from the scale of the state and the field.
    let d0 = y[0].hypot(y[1]);
    let d1 = fy[0].hypot(fy[1]);
    let mut h = if d0 < 1e-5 || d1 < 1e-5 { 1e-6 } else { 0.01 * d0 / d1 };
    h = h.min(opts.max_step).min(tend);
    let mut t = 0.0f64;
    let mut accepted = 0usize;
    loop {
        if h < 1e-14 * t.abs().max(1.0) {
            return finish(samples, Termination::StepUnderflow);
        }
        let last = tend - t <= h;
        if last {
            h = tend - t;
        }
        let hs = dir * h;
        let mut k = [[0.0f64; 2]; 7];
        k[0] = fy;
        for s in 1..7 {
            let mut z = y;
            for (j, kj) in k.iter().enumerate().take(s) {
                z[0] += hs * A[s][j] * kj[0];
                z[1] += hs * A[s][j] * kj[1];
            }
            k[s] = f(z);
        }
        // Stage 7 is evaluated at the fifth-order solution (FSAL).
        let mut y1 = y;
        for j in 0..6 {
            y1[0] += hs * A[6][j] * k[j][0];
            y1[1] += hs * A[6][j] * k[j][1];
        }
        let mut e = [0.0; 2];
        for j in 0..7 {
            e[0] += hs * E[j] * k[j][0];
            e[1] += hs * E[j] * k[j][1];
        }
        let err = err_norm(e, y, y1, opts.tol);
        let finite = y1[0].is_finite() && y1[1].is_finite() && err.is_finite();
        if !finite || err > 1.0 {
            let fac = if finite { (0.9 * err.powf(-0.2)).max(0.2) } else { 0.2 };
            h *= fac;
            continue;
        }
        let t1 = t + h;
        let f1 = k[6];
        let step = Step {
            t0: dir * t,
            y0: y,
            f0: fy,
            t1: dir * t1,
            y1,
            f1,
        };
        let sample = Sample { t: dir * t1, x: y1[0], y: y1[1] };
        accepted += 1;
        match stop(&step) {
            Control::Continue => samples.push(sample),
            Control::Stop(term) => {
                samples.push(sample);
                return finish(samples, term);
            }
            Control::StopAt(term, s) => {
                samples.push(s);
                return finish(samples, term);
            }
        }
        if last {
            return finish(samples, Termination::MaxTime);
        }
        if accepted >= MAX_STEPS {
            return finish(samples, Termination::StepBudget);
        }
        t = t1;
        y = y1;
        fy = f1;
        let fac = if err == 0.0 { 5.0 } else { (0.9 * err.powf(-0.2)).clamp(0.2, 5.0) };
        h = (h * fac).min(opts.max_step);
    }
}

/// Stops on leaving `window` (clipping the last segment to its boundary) or
/// on coming within [`ORIGIN_CUTOFF`] of the origin.
pub fn window_stop(window: &Window) -> impl Fn(&Step) -> Control + '_ {
    move |st: &Step| {
        if st.y1[0].hypot(st.y1[1]) < ORIGIN_CUTOFF {
            return Control::Stop(Termination::ApproachedOrigin);
        }
        if !window.contains(st.y1) {
            let s = window.exit_fraction(st.y0, st.y1);
            let clip = Sample {
                t: st.t0 + s * (st.t1 - st.t0),
                x: st.y0[0] + s * (st.y1[0] - st.y0[0]),
                y: st.y0[1] + s * (st.y1[1] - st.y0[1]),
            };
            return Control::StopAt(Termination::EscapedWindow, clip);
        }
        Control::Continue
    }
}

/// Trajectory of `s` from `start`, forward for `tmax > 0` and backward for
/// `tmax < 0`, until it leaves `window`, reaches the origin or runs `|tmax|`.
pub fn integrate(
    s: &PolySystem,
    start: [f64; 2],
    window: &Window,
    tol: f64,
    tmax: f64,
) -> Result<Trajectory, OracleError> {
    integrate_with_max_step(s, start, window, tol, tmax, f64::INFINITY)
}

/// As [`integrate`], with a cap on the step length (denser samples).
pub fn integrate_with_max_step(
    s: &PolySystem,
    start: [f64; 2],
    window: &Window,
    tol: f64,
    tmax: f64,
    max_step: f64,
) -> Result<Trajectory, OracleError> {
    check_tol(tol)?;
    let field = FloatField::new(s);
    let opts = RunOptions { tol, tmax, max_step };
    Ok(run(|z| field.eval(z), start, opts, window_stop(window)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use polyparse::parse_system;

    fn sys(t: &str) -> PolySystem {
        parse_system(t).unwrap()
    }

    #[test]
    fn exponential_growth() {
        let s = sys("dx/dt = x\ndy/dt = -y");
        let w = Window::new(-10.0, 10.0, -10.0, 10.0).unwrap();
        let tr = integrate(&s, [1.0, 1.0], &w, 1e-10, 1.0).unwrap();
        let end = tr.last();
        assert_eq!(tr.termination, Termination::MaxTime);
        assert!((end.x - 1f64.exp()).abs() < 1e-8, "{end:?}");
        assert!((end.y - (-1f64).exp()).abs() < 1e-8);
        let back = integrate(&s, [1.0, 1.0], &w, 1e-10, -1.0).unwrap();
        assert!((back.last().x - (-1f64).exp()).abs() < 1e-8);
        assert!(back.samples.windows(2).all(|p| p[1].t < p[0].t));
    }

    #[test]
    fn origin_is_fixed() {
        let s = sys("dx/dt = x^3\ndy/dt = y^3");
        let w = Window::new(-1.0, 1.0, -1.0, 1.0).unwrap();
        let tr = integrate(&s, [0.0, 0.0], &w, 1e-8, 10.0).unwrap();
        assert_eq!(tr.samples.len(), 1);
        assert_eq!(tr.termination, Termination::ApproachedOrigin);
    }

    #[test]
    fn tolerance_range() {
        let s = sys("dx/dt = x\ndy/dt = y");
        let w = Window::new(-1.0, 1.0, -1.0, 1.0).unwrap();
        assert!(integrate(&s, [0.5, 0.5], &w, 1e-2, 1.0).is_err());
        assert!(integrate(&s, [0.5, 0.5], &w, 1e-13, 1.0).is_err());
    }

    #[test]
    fn hermite_reproduces_cubics() {
        // y = t³ has y' = 3t².
        let st = Step {
            t0: 1.0,
            y0: [1.0, 0.0],
            f0: [3.0, 0.0],
            t1: 2.0,
            y1: [8.0, 0.0],
            f1: [12.0, 0.0],
        };
        assert!((st.interpolate(1.5)[0] - 3.375).abs() < 1e-12);
    }
}
