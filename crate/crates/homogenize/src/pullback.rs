//! Exact inversion of the substitution on a chart.

use crate::error::PullbackError;
use crate::transform::TransformRecord;
use num_traits::{One, Signed, Zero};
use polyparse::rat::{exact_root, powi, to_f64};
use polyparse::Rat;
use std::fmt;

/// A real number `r` or `±radicand^(1/k)` when no rational `k`-th root exists.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ExactCoord {
    Rational(Rat),
    Root { k: u32, radicand: Rat, negative: bool },
}

impl ExactCoord {
    /// Real `k`-th root of `v` (odd root for negative `v`); `None` if `k` is
    /// even and `v < 0`.
    pub fn real_root(v: &Rat, k: u32) -> Option<Self> {
        let negative = v.is_negative();
        if negative && k.is_multiple_of(2) {
            return None;
        }
        let mag = v.abs();
        Some(match exact_root(&mag, k) {
            Some(r) => ExactCoord::Rational(if negative { -r } else { r }),
            None => ExactCoord::Root {
                k,
                radicand: mag,
                negative,
            },
        })
    }

    pub fn neg(&self) -> Self {
        match self {
            ExactCoord::Rational(r) => ExactCoord::Rational(-r),
            ExactCoord::Root { k, radicand, negative } => ExactCoord::Root {
                k: *k,
                radicand: radicand.clone(),
                negative: !negative,
            },
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            ExactCoord::Rational(r) => to_f64(r),
            ExactCoord::Root { k, radicand, negative } => {
                let m = to_f64(radicand).powf(1.0 / *k as f64);
                if *negative {
                    -m
                } else {
                    m
                }
            }
        }
    }
}

impl fmt::Display for ExactCoord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExactCoord::Rational(r) => write!(f, "{r}"),
            ExactCoord::Root { k, radicand, negative } => {
                let sign = if *negative { "-" } else { "" };
                if *k == 2 {
                    write!(f, "{sign}sqrt({radicand})")
                } else {
                    write!(f, "{sign}({radicand})^(1/{k})")
                }
            }
        }
    }
}

/// Inverts `t̃ = t^e` for one coordinate: `t = t̃^(den/num)` with `e = num/den`.
fn invert(v: &Rat, e: &Rat) -> Result<ExactCoord, PullbackError> {
    if e.is_one() {
        return Ok(ExactCoord::Rational(v.clone()));
    }
    if v.is_zero() {
        return Err(PullbackError::NonInvertible);
    }
    let num: u32 = e.numer().try_into().expect("positive exponent");
    let den: i32 = e.denom().try_into().expect("small exponent");
    ExactCoord::real_root(&powi(v, den), num).ok_or(PullbackError::NonInvertible)
}

/// Preimages in the original plane of a point given in the homogeneous chart,
/// followed by their images under the system's symmetry.
pub fn pullback_point(
    t: &TransformRecord,
    pt: (&Rat, &Rat),
) -> Result<Vec<(ExactCoord, ExactCoord)>, PullbackError> {
    let (xt, yt) = pt;
    let inside = match t.chart {
        crate::Chart::XPositive => xt.is_positive(),
        crate::Chart::YPositive => yt.is_positive(),
        crate::Chart::Full => true,
    };
    if !inside {
        return Err(PullbackError::OutsideChart(t.chart.as_str()));
    }
    let x = invert(xt, &t.expo_x)?;
    let y = invert(yt, &t.expo_y)?;
    let base = if t.swap_xy { (y, x) } else { (x, y) };
    let (fx, fy) = t.symmetry.kind.flips();
    let mirror = (
        if fx { base.0.neg() } else { base.0.clone() },
        if fy { base.1.neg() } else { base.1.clone() },
    );
    let mut out = vec![base];
    if mirror != out[0] {
        out.push(mirror);
    }
    Ok(out)
}
