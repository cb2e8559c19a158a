use crate::error::HomogError;
use crate::symmetry::{symmetry_type, Symmetry};
use crate::target::{target_class, TargetClass};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use polyparse::{int, BiPoly, PolySystem, Rat};
use qhcore::{minimality_audit, satisfies, WeightVector};
use std::collections::BTreeMap;

/// Which substitution is used.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TransformPath {
    /// `x̃ = x^(s2/β)`, `ỹ = y^(s1/β)` with `β = lcm(s1, s2)`.
    Lcm,
    /// `x̃ = x^s2`, `ỹ = y^s1`.
    Min,
}

/// Domain on which the substitution is a bijection onto its image.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Chart {
    XPositive,
    YPositive,
    Full,
}

impl Chart {
    pub fn as_str(&self) -> &'static str {
        match self {
            Chart::XPositive => "x>0",
            Chart::YPositive => "y>0",
            Chart::Full => "full",
        }
    }

    pub fn contains(&self, x: f64, y: f64) -> bool {
        match self {
            Chart::XPositive => x > 0.0,
            Chart::YPositive => y > 0.0,
            Chart::Full => true,
        }
    }
}

/// `dt = x̃^x ỹ^y dt₁`, exponents in the homogeneous chart variables.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TimeFactor {
    pub x: Rat,
    pub y: Rat,
}

impl TimeFactor {
    pub fn is_trivial(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransformRecord {
    pub path: TransformPath,
    pub beta: u32,
    /// `x̃ = x^expo_x`.
    pub expo_x: Rat,
    /// `ỹ = y^expo_y`.
    pub expo_y: Rat,
    pub time_factor: TimeFactor,
    pub chart: Chart,
    /// The substitution acts on the system with `x` and `y` exchanged.
    pub swap_xy: bool,
    /// Symmetry of the source system, in the original frame.
    pub symmetry: Symmetry,
    /// Weights in the (possibly swapped) working frame, `s1 >= s2`.
    pub weights: WeightVector,
}

impl TransformRecord {
    /// Sign of `dt/dt₁` on the open quadrants I, II, III, IV of the working
    /// frame; `None` for quadrants outside the chart.
    pub fn quadrant_time_signs(&self) -> [Option<i8>; 4] {
        let quadrants = [(1, 1), (-1, 1), (-1, -1), (1, -1)];
        quadrants.map(|(sx, sy)| {
            let inside = match self.chart {
                Chart::XPositive => sx > 0,
                Chart::YPositive => sy > 0,
                Chart::Full => true,
            };
            if !inside {
                return None;
            }
            let tx = image_sign(sx, &self.expo_x);
            let ty = image_sign(sy, &self.expo_y);
            Some(power_sign(tx, &self.time_factor.x) * power_sign(ty, &self.time_factor.y))
        })
    }

    /// Forward map of a point in the working frame, using real odd roots for
    /// negative coordinates.
    pub fn forward_f64(&self, x: f64, y: f64) -> Option<(f64, f64)> {
        if !self.chart.contains(x, y) {
            return None;
        }
        Some((real_power(x, &self.expo_x)?, real_power(y, &self.expo_y)?))
    }

    /// Applies the substitution and time rescaling to `s` given in the working frame.
    pub fn apply(&self, s: &PolySystem) -> Result<PolySystem, HomogError> {
        let (p, q, _) = substitute(s, &self.expo_x, &self.expo_y, Some(&self.time_factor))?;
        PolySystem::new(p, q).map_err(|_| HomogError::Degenerate)
    }
}

/// Sign of `x̃ = x^e` for `x` of sign `s` under the real-odd-root convention.
fn image_sign(s: i8, e: &Rat) -> i8 {
    if s > 0 {
        1
    } else {
        power_sign(s, e)
    }
}

fn power_sign(s: i8, e: &Rat) -> i8 {
    if s > 0 || e.numer().is_even() {
        1
    } else {
        -1
    }
}

fn real_power(v: f64, e: &Rat) -> Option<f64> {
    let num = polyparse::rat::to_f64(&Rat::from_integer(e.numer().clone()));
    let den = polyparse::rat::to_f64(&Rat::from_integer(e.denom().clone()));
    if v >= 0.0 {
        return Some(v.powf(num / den));
    }
    if e.denom().is_even() {
        return None;
    }
    let mag = (-v).powf(num / den);
    Some(if e.numer().is_odd() { -mag } else { mag })
}

/// Transformed terms of `s` under `x̃ = x^ex`, `ỹ = y^ey`. Without a given
/// time factor, divides by the largest common monomial `x̃^a ỹ^b` (rational
/// exponents) and returns the factor that was used.
fn substitute(
    s: &PolySystem,
    ex: &Rat,
    ey: &Rat,
    given: Option<&TimeFactor>,
) -> Result<(BiPoly, BiPoly, TimeFactor), HomogError> {
    let one = Rat::one();
    let mut terms: Vec<(bool, Rat, Rat, Rat)> = Vec::new();
    for ((i, j), c) in s.p().terms() {
        let xi = &one + (int(*i as i64) - &one) / ex;
        let yj = int(*j as i64) / ey;
        terms.push((true, c * ex, xi, yj));
    }
    for ((i, j), c) in s.q().terms() {
        let xi = int(*i as i64) / ex;
        let yj = &one + (int(*j as i64) - &one) / ey;
        terms.push((false, c * ey, xi, yj));
    }
    let tf = match given {
        Some(t) => t.clone(),
        None => TimeFactor {
            x: -terms.iter().map(|t| t.2.clone()).min().expect("nonempty"),
            y: -terms.iter().map(|t| t.3.clone()).min().expect("nonempty"),
        },
    };
    let mut p = BTreeMap::new();
    let mut q = BTreeMap::new();
    for (is_p, c, xi, yj) in terms {
        let a = xi + &tf.x;
        let b = yj + &tf.y;
        if !a.is_integer() || !b.is_integer() || a.is_negative() || b.is_negative() {
            return Err(HomogError::NonPolynomial);
        }
        let m = (
            u32::try_from(a.to_integer()).map_err(|_| HomogError::NonPolynomial)?,
            u32::try_from(b.to_integer()).map_err(|_| HomogError::NonPolynomial)?,
        );
        let target = if is_p { &mut p } else { &mut q };
        *target.entry(m).or_insert_with(Rat::zero) += c;
    }
    Ok((BiPoly::from_terms(p), BiPoly::from_terms(q), tf))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomogSystem {
    pub sys: PolySystem,
    pub degree: u32,
    pub target_class: Option<TargetClass>,
}

fn check_minimal(s: &PolySystem, w: &WeightVector) -> Result<(), HomogError> {
    if !satisfies(w, s) {
        return Err(HomogError::WeightMismatch(w.to_string()));
    }
    if w.s1.gcd(&w.s2) != 1 || !minimality_audit(w, s) {
        return Err(HomogError::NotMinimal(w.to_string()));
    }
    Ok(())
}

fn homogenize(
    s: &PolySystem,
    w: &WeightVector,
    path: TransformPath,
) -> Result<(HomogSystem, TransformRecord), HomogError> {
    check_minimal(s, w)?;
    let swap = w.s1 < w.s2;
    let (sys, s1, s2) = if swap {
        (s.swap_xy(), w.s2, w.s1)
    } else {
        (s.clone(), w.s1, w.s2)
    };
    let beta = s1.lcm(&s2);
    let (ex, ey, beta) = match path {
        TransformPath::Lcm => (
            Rat::new((s2 as i64).into(), (beta as i64).into()),
            Rat::new((s1 as i64).into(), (beta as i64).into()),
            beta,
        ),
        TransformPath::Min => (int(s2 as i64), int(s1 as i64), 1),
    };
    let (p, q, tf) = substitute(&sys, &ex, &ey, None)?;
    let target = PolySystem::new(p, q).map_err(|_| HomogError::Degenerate)?;
    if !target.is_homogeneous() {
        return Err(HomogError::NotHomogeneousResult);
    }
    // The factor that is even decides the half plane where the map is injective.
    let (x_even, y_even) = match path {
        TransformPath::Lcm => (s1 % 2 == 0, s2 % 2 == 0),
        TransformPath::Min => (s2 % 2 == 0, s1 % 2 == 0),
    };
    let chart = match (x_even, y_even) {
        (true, _) => Chart::XPositive,
        (_, true) => Chart::YPositive,
        _ => Chart::Full,
    };
    let working = WeightVector {
        s1,
        s2,
        d: w.d,
        minimal: true,
    };
    let record = TransformRecord {
        path,
        beta,
        expo_x: ex,
        expo_y: ey,
        time_factor: tf,
        chart,
        swap_xy: swap,
        symmetry: symmetry_type(w)?,
        weights: working,
    };
    let degree = target.degree();
    let class = target_class(&target).ok().map(|r| r.class);
    Ok((
        HomogSystem {
            sys: target,
            degree,
            target_class: class,
        },
        record,
    ))
}

/// Homogenization with `β = lcm(s1, s2)`.
pub fn homogenize_lcm(
    s: &PolySystem,
    w: &WeightVector,
) -> Result<(HomogSystem, TransformRecord), HomogError> {
    homogenize(s, w, TransformPath::Lcm)
}

/// Homogenization with `x̃ = x^s2`, `ỹ = y^s1` and a fractional time rescaling.
pub fn homogenize_min(
    s: &PolySystem,
    w: &WeightVector,
) -> Result<(HomogSystem, TransformRecord), HomogError> {
    homogenize(s, w, TransformPath::Min)
}
