//! Streamlines on a seed grid, and their CSV and SVG export.
//!
//! Streamlines follow the field scaled to speed below 1, so `t` is close to
//! arc length where the field is strong; orbits are unchanged.

use crate::error::OracleError;
use crate::field::FloatField;
use crate::integrate::{check_tol, run, window_stop, Control, RunOptions, Sample, Step, Termination, Trajectory};
use crate::window::Window;
use polyparse::PolySystem;
use std::fmt::Write;

pub const MAX_SEEDS: usize = 10_000;

/// `n` seeds at the cell centers of a near-square grid over `window`,
/// row-major from the bottom-left.
pub fn seed_grid(window: &Window, n: usize) -> Vec<[f64; 2]> {
    if n == 0 {
        return Vec::new();
    }
    let cols = (n as f64).sqrt().ceil() as usize;
    let rows = n.div_ceil(cols);
    let (dx, dy) = (window.width() / cols as f64, window.height() / rows as f64);
    (0..rows)
        .flat_map(|r| (0..cols).map(move |c| (r, c)))
        .take(n)
        .map(|(r, c)| [window.xmin + (c as f64 + 0.5) * dx, window.ymin + (r as f64 + 0.5) * dy])
        .collect()
}

/// Minimizes the distance from `seed` over the step by golden sections.
fn closest_in_step(st: &Step, seed: [f64; 2]) -> Sample {
    let d2 = |t: f64| {
        let z = st.interpolate(t);
        (z[0] - seed[0]).powi(2) + (z[1] - seed[1]).powi(2)
    };
    let g = (5f64.sqrt() - 1.0) / 2.0;
    let (mut a, mut b) = (st.t0, st.t1);
    for _ in 0..80 {
        let (m1, m2) = (b - g * (b - a), a + g * (b - a));
        if d2(m1) < d2(m2) {
            b = m2;
        } else {
            a = m1;
        }
    }
    let t = (a + b) / 2.0;
    let z = st.interpolate(t);
    Sample { t, x: z[0], y: z[1] }
}

fn streamline(field: &FloatField, window: &Window, seed: [f64; 2], tol: f64) -> Trajectory {
    let span = 10.0 * (window.width() + window.height());
    let close = 1e-3 * (window.width() + window.height());
    let f = |z: [f64; 2]| field.eval_bounded(z);
    let edge = window_stop(window);
    let mut left = false;
    let forward = run(f, seed, RunOptions { tol, tmax: span, max_step: span / 200.0 }, |st| {
        if let c @ (Control::Stop(_) | Control::StopAt(..)) = edge(st) {
            return c;
        }
        let rel = |z: [f64; 2]| [z[0] - seed[0], z[1] - seed[1]];
        let (r0, r1) = (rel(st.y0), rel(st.y1));
        left |= r1[0].hypot(r1[1]) > 2.0 * close;
        let g0 = r0[0] * st.f0[0] + r0[1] * st.f0[1];
        let g1 = r1[0] * st.f1[0] + r1[1] * st.f1[1];
        if left && g0 < 0.0 && g1 >= 0.0 {
            let s = closest_in_step(st, seed);
            if (s.x - seed[0]).hypot(s.y - seed[1]) < close {
                return Control::StopAt(Termination::Closed, s);
            }
        }
        Control::Continue
    });
    if forward.termination == Termination::Closed {
        return forward;
    }
    let backward = run(f, seed, RunOptions { tol, tmax: -span, max_step: span / 200.0 }, window_stop(window));
    let mut samples: Vec<Sample> = backward.samples.into_iter().rev().collect();
    samples.extend(forward.samples.into_iter().skip(1));
    Trajectory { samples, termination: forward.termination }
}

fn check(window: &Window, n: usize, tol: f64) -> Result<(), OracleError> {
    check_tol(tol)?;
    if n > MAX_SEEDS {
        return Err(OracleError::TooManySeeds(n));
    }
    Window::new(window.xmin, window.xmax, window.ymin, window.ymax).map(|_| ())
}

/// One streamline per grid seed, integrated both ways until it leaves the
/// window, reaches the origin, closes up, or runs ten window perimeters.
/// The output is in seed order and independent of the thread count.
pub fn streamlines(s: &PolySystem, window: &Window, n: usize, tol: f64) -> Result<Vec<Trajectory>, OracleError> {
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        check(window, n, tol)?;
        let field = FloatField::new(s);
        Ok(seed_grid(window, n)
            .into_par_iter()
            .map(|z| streamline(&field, window, z, tol))
            .collect())
    }
    #[cfg(not(feature = "parallel"))]
    streamlines_sequential(s, window, n, tol)
}

/// [`streamlines`] on the calling thread.
pub fn streamlines_sequential(
    s: &PolySystem,
    window: &Window,
    n: usize,
    tol: f64,
) -> Result<Vec<Trajectory>, OracleError> {
    check(window, n, tol)?;
    let field = FloatField::new(s);
    Ok(seed_grid(window, n)
        .into_iter()
        .map(|z| streamline(&field, window, z, tol))
        .collect())
}

/// `t,x,y` rows, one blank line between trajectories.
pub fn to_csv(trajectories: &[Trajectory]) -> String {
    let mut out = String::from("t,x,y\n");
    for (k, tr) in trajectories.iter().enumerate() {
        if k > 0 {
            out.push('\n');
        }
        for s in &tr.samples {
            writeln!(out, "{},{},{}", s.t, s.x, s.y).expect("write to String");
        }
    }
    out
}

const PALETTE: [&str; 6] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf"];

/// Polylines in a `viewBox` equal to the window, with `y` pointing up.
pub fn to_svg(trajectories: &[Trajectory], window: &Window) -> String {
    let mut out = String::new();
    let w = window;
    let stroke = 0.002 * w.width().max(w.height());
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{} {} {} {}">"#,
        w.xmin,
        w.ymin,
        w.width(),
        w.height()
    )
    .expect("write to String");
    writeln!(out, r#"<g fill="none" stroke-width="{stroke}">"#).expect("write to String");
    for (k, tr) in trajectories.iter().enumerate() {
        let pts: Vec<String> = tr
            .samples
            .iter()
            .map(|s| format!("{},{}", s.x, w.ymin + w.ymax - s.y))
            .collect();
        writeln!(
            out,
            r#"<polyline stroke="{}" points="{}"/>"#,
            PALETTE[k % PALETTE.len()],
            pts.join(" ")
        )
        .expect("write to String");
    }
    out.push_str("</g>\n</svg>\n");
    out
}
