//! Global center test.
//!
//! For odd `n` and no real characteristic direction, the origin is a global
//! center iff the return map along a ray is the identity, i.e.
//! `∫_{-π/2}^{π/2} H̃(θ)/G̃(θ) dθ = 0`. With `u = tan θ` and
//! `H(1,u) = (1+u²)P(1,u) + uG(1,u)` this is
//! `I = ∫_ℝ P(1,u)/G(1,u) + u/(1+u²) du`, whose integrand decays like `u^-2`
//! and equals the principal value of `∫ P(1,u)/G(1,u) du`.

use crate::charpoly::char_polys;
use crate::error::AnalysisError;
use crate::roots::real_roots;
use num_traits::{One, Zero};
use polyparse::rat::{exact_root, to_f64};
use polyparse::{int, PolySystem, Rat, UPoly};
use std::f64::consts::PI;

/// Numerical threshold below which a quadrature value is not separated from 0.
pub const CENTER_TOL: f64 = 1e-10;

#[derive(Clone, Debug, PartialEq)]
pub enum CenterEvidence {
    EvenDegree,
    RealDirection,
    /// The integrand is odd in `u`.
    OddIntegrand,
    /// Exact partial fractions over rational quadratic factors.
    PartialFractions { integral: f64 },
    Quadrature { integral: f64 },
}

#[derive(Clone, Debug, PartialEq)]
pub enum CenterVerdict {
    GlobalCenter(CenterEvidence),
    NotCenter(CenterEvidence),
    /// `|I| < CENTER_TOL` without a symbolic proof.
    NumericallyCenter { integral: f64 },
}

impl CenterVerdict {
    pub fn is_center(&self) -> bool {
        matches!(self, CenterVerdict::GlobalCenter(_))
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            CenterVerdict::GlobalCenter(_) => "global-center",
            CenterVerdict::NotCenter(_) => "not-center",
            CenterVerdict::NumericallyCenter { .. } => "numerically-center-unverified",
        }
    }
}

pub fn center_test(s: &PolySystem) -> Result<CenterVerdict, AnalysisError> {
    let cp = char_polys(s)?;
    if cp.n % 2 == 0 {
        return Ok(CenterVerdict::NotCenter(CenterEvidence::EvenDegree));
    }
    if cp.g_v.coeff(0).is_zero() || !real_roots(&cp.g_u).is_empty() {
        return Ok(CenterVerdict::NotCenter(CenterEvidence::RealDirection));
    }
    let one_plus_u2 = UPoly::from_ints(&[1, 0, 1]);
    let u = UPoly::from_ints(&[0, 1]);
    let num = &(&cp.p_u * &one_plus_u2) + &(&u * &cp.g_u);
    let den = &cp.g_u * &one_plus_u2;
    if num.is_zero() || &num.reflect() * &den == -&(&num * &den.reflect()) {
        return Ok(CenterVerdict::GlobalCenter(CenterEvidence::OddIntegrand));
    }
    if let Some((zero, integral)) = partial_fractions(&num, &den) {
        let ev = CenterEvidence::PartialFractions { integral };
        return Ok(if zero {
            CenterVerdict::GlobalCenter(ev)
        } else {
            CenterVerdict::NotCenter(ev)
        });
    }
    let integral = periodic_trapezoid(|t| {
        let (c, sn) = (t.cos(), t.sin());
        cp.h.eval_f64(c, sn) / cp.g.eval_f64(c, sn)
    });
    Ok(if integral.abs() > CENTER_TOL {
        CenterVerdict::NotCenter(CenterEvidence::Quadrature { integral })
    } else {
        CenterVerdict::NumericallyCenter { integral }
    })
}

/// `∫_{-π/2}^{π/2} f`, for `f` smooth and `π`-periodic, by the trapezoid rule
/// with doubling until successive values agree.
fn periodic_trapezoid(f: impl Fn(f64) -> f64) -> f64 {
    let mut n = 64usize;
    let sum = |n: usize| -> f64 {
        let h = PI / n as f64;
        (0..n).map(|k| f(-PI / 2.0 + (k as f64 + 0.5) * h)).sum::<f64>() * h
    };
    let mut prev = sum(n);
    while n < 1 << 22 {
        n *= 2;
        let next = sum(n);
        if (next - prev).abs() < 1e-14 * (1.0 + next.abs()) {
            return next;
        }
        prev = next;
    }
    prev
}

/// Extended Euclid: `(g, s)` with `s·a ≡ g (mod b)`, `g = gcd(a, b)` monic.
fn inverse_mod(a: &UPoly, m: &UPoly) -> Option<UPoly> {
    let (mut r0, mut r1) = (m.clone(), a.div_rem(m).1);
    let (mut s0, mut s1) = (UPoly::zero(), UPoly::constant(Rat::one()));
    while !r1.is_zero() {
        let (q, r) = r0.div_rem(&r1);
        let s = &s0 - &(&q * &s1);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
    }
    if r0.degree() != Some(0) {
        return None;
    }
    Some(s0.scale(&(Rat::one() / r0.leading())))
}

/// Factors an even polynomial `f(u) = F(u²)` by the rational roots of `F`.
fn split_even(f: &UPoly) -> Vec<UPoly> {
    let c = f.coeffs();
    if c.len() <= 3 || c.iter().skip(1).step_by(2).any(|a| !a.is_zero()) {
        return vec![f.clone()];
    }
    let w = UPoly::new(c.iter().step_by(2).cloned().collect());
    let mut rest = f.clone();
    let mut out = Vec::new();
    for (r, m) in w.rational_roots() {
        let q = UPoly::new(vec![-r, Rat::zero(), Rat::one()]);
        for _ in 0..m {
            rest = rest.div_exact(&q).expect("root of F");
            out.push(q.clone());
        }
    }
    if rest.degree().unwrap_or(0) > 0 {
        out.push(rest.monic());
    }
    out
}

/// Splits `den` into pairwise coprime irreducible quadratics when its
/// square-free factors (refined by `1 + u²` and by even factorization)
/// all have degree 2, and integrates
/// `num/den` exactly. Returns whether `I = 0` and the value of `I`.
fn partial_fractions(num: &UPoly, den: &UPoly) -> Option<(bool, f64)> {
    let g = num.gcd(den);
    let num = num.div_exact(&g)?;
    let den = den.div_exact(&g)?;
    let lead = den.leading();
    let (num, den) = (num.scale(&(Rat::one() / &lead)), den.monic());
    let dec = den.squarefree_decomposition();
    if dec.iter().any(|(_, m)| *m > 1) {
        return None;
    }
    let splitter = UPoly::from_ints(&[1, 0, 1]);
    let pieces: Vec<UPoly> = [den.clone()]
        .into_iter()
        .flat_map(|p| {
            let c = p.gcd(&splitter);
            if c.degree().unwrap_or(0) > 0 && c.degree() != p.degree() {
                vec![c.clone(), p.div_exact(&c).expect("gcd divides").monic()]
            } else {
                vec![p]
            }
        })
        .flat_map(|p| split_even(&p))
        .collect();
    if pieces.iter().any(|p| p.degree() != Some(2)) {
        return None;
    }
    // I = π Σ w_k / sqrt(δ_k) for num/den = Σ (A_k u + B_k)/(u² + b_k u + c_k).
    let mut terms: Vec<(Rat, Rat)> = Vec::new();
    for q in &pieces {
        let cof = den.div_exact(q)?;
        let r = (&num * &inverse_mod(&cof, q)?).div_rem(q).1;
        let (a, b) = (r.coeff(1), r.coeff(0));
        let (qb, qc) = (q.coeff(1), q.coeff(0));
        let w = &b - &a * &qb / int(2);
        let delta = &qc - &qb * &qb / int(4);
        terms.push((w, delta));
    }
    let value: f64 = PI * terms.iter().map(|(w, d)| to_f64(w) / to_f64(d).sqrt()).sum::<f64>();
    // Square roots of rationals in different square classes are linearly
    // independent over Q, so I = 0 iff each square class sums to zero.
    let mut groups: Vec<(Rat, Rat)> = Vec::new();
    for (w, d) in terms {
        let slot = groups.iter_mut().find_map(|(rep, sum)| {
            exact_root(&(&d / &*rep), 2).map(|t| (sum, t))
        });
        match slot {
            Some((sum, t)) => *sum += w / t,
            None => groups.push((d, w)),
        }
    }
    Some((groups.iter().all(|(_, s)| s.is_zero()), value))
}
