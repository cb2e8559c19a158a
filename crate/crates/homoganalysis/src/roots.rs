//! Real roots of univariate rational polynomials.
//!
//! Rational roots are found exactly. The remaining roots are isolated with a
//! Sturm sequence of the rational-root-free square-free part, so interval
//! endpoints are never roots. Multiplicities come from the square-free
//! decomposition.

use crate::error::AnalysisError;
use num_traits::{One, Signed, Zero};
use polyparse::rat::to_f64;
use polyparse::{int, Rat, UPoly};
use std::cmp::Ordering;
use std::fmt;

/// Bisection budget for sign decisions at irrational roots.
pub const MAX_BISECTIONS: usize = 256;

/// A real root of a polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraicRoot {
    /// Square-free polynomial with exactly one root in `(lo, hi)`, or the
    /// linear polynomial `u - r` for a rational root.
    pub poly: UPoly,
    pub lo: Rat,
    pub hi: Rat,
    pub multiplicity: usize,
    /// Exact value when the root is rational (then `lo == hi`).
    pub exact: Option<Rat>,
}

impl AlgebraicRoot {
    pub fn rational(r: Rat, multiplicity: usize) -> Self {
        AlgebraicRoot {
            poly: UPoly::linear_root(&r),
            lo: r.clone(),
            hi: r.clone(),
            multiplicity,
            exact: Some(r),
        }
    }

    pub fn is_rational(&self) -> bool {
        self.exact.is_some()
    }

    /// Halves the isolating interval.
    pub fn bisect(&mut self) {
        if self.exact.is_some() {
            return;
        }
        let mid = (&self.lo + &self.hi) / int(2);
        if self.poly.sign_at(&self.lo) * self.poly.sign_at(&mid) < 0 {
            self.hi = mid;
        } else {
            self.lo = mid;
        }
    }

    /// Refines until the interval is narrower than `width`.
    pub fn refine_to(&mut self, width: &Rat) {
        while &(&self.hi - &self.lo) > width {
            self.bisect();
        }
    }

    pub fn to_f64(&self) -> f64 {
        match &self.exact {
            Some(r) => to_f64(r),
            None => {
                let mut r = self.clone();
                r.refine_to(&Rat::new(1.into(), (1u64 << 60).into()));
                (to_f64(&r.lo) + to_f64(&r.hi)) / 2.0
            }
        }
    }

    /// Sign of `g` at the root. Exact for rational roots; otherwise refines a
    /// copy of the interval until `g` has no root in it.
    pub fn sign_of(&self, g: &UPoly) -> Result<i8, AnalysisError> {
        if let Some(r) = &self.exact {
            return Ok(g.sign_at(r));
        }
        if g.is_zero() {
            return Ok(0);
        }
        let common = self.poly.gcd(g);
        if common.degree().unwrap_or(0) > 0 && common.sign_at(&self.lo) * common.sign_at(&self.hi) < 0 {
            return Ok(0);
        }
        let sturm = Sturm::new(&g.squarefree_part());
        let mut r = self.clone();
        for _ in 0..MAX_BISECTIONS {
            if sturm.count(&r.lo, &r.hi) == 0 {
                return Ok(g.sign_at(&r.hi));
            }
            r.bisect();
        }
        Err(AnalysisError::RefinementExhausted)
    }

    /// Compares two roots by value.
    pub fn cmp_value(&self, other: &AlgebraicRoot) -> Ordering {
        match (&self.exact, &other.exact) {
            (Some(a), Some(b)) => a.cmp(b),
            _ => {
                let (mut a, mut b) = (self.clone(), other.clone());
                for _ in 0..MAX_BISECTIONS {
                    if a.hi < b.lo || (a.hi == b.lo && (a.exact.is_none() || b.exact.is_none())) {
                        return Ordering::Less;
                    }
                    if b.hi < a.lo || (b.hi == a.lo && (a.exact.is_none() || b.exact.is_none())) {
                        return Ordering::Greater;
                    }
                    a.bisect();
                    b.bisect();
                }
                Ordering::Equal
            }
        }
    }
}

impl fmt::Display for AlgebraicRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.exact {
            Some(r) => write!(f, "{r}"),
            None => write!(f, "root of {} in ({}, {})", self.poly, self.lo, self.hi),
        }
    }
}

/// Sturm sequence of a square-free polynomial.
#[derive(Clone, Debug)]
pub struct Sturm {
    seq: Vec<UPoly>,
}

impl Sturm {
    pub fn new(f: &UPoly) -> Self {
        let mut seq = vec![f.clone()];
        if f.degree().unwrap_or(0) > 0 {
            seq.push(f.derivative());
            loop {
                let n = seq.len();
                let (_, r) = seq[n - 2].div_rem(&seq[n - 1]);
                if r.is_zero() {
                    break;
                }
                seq.push(-&r);
            }
        }
        Sturm { seq }
    }

    fn variations(&self, signs: impl Iterator<Item = i8>) -> usize {
        let mut last = 0;
        let mut v = 0;
        for s in signs.filter(|&s| s != 0) {
            if last != 0 && s != last {
                v += 1;
            }
            last = s;
        }
        v
    }

    fn variations_at(&self, u: &Rat) -> usize {
        self.variations(self.seq.iter().map(|p| p.sign_at(u)))
    }

    /// Number of distinct roots in `(a, b]`.
    pub fn count(&self, a: &Rat, b: &Rat) -> usize {
        self.variations_at(a) - self.variations_at(b)
    }
}

/// Cauchy bound: every root satisfies `|u| < bound`.
fn root_bound(f: &UPoly) -> Rat {
    let lead = f.leading().abs();
    let m = f.coeffs().iter().map(|c| c.abs() / &lead).max().unwrap_or_else(Rat::zero);
    m + Rat::one()
}

fn isolate(sturm: &Sturm, lo: Rat, hi: Rat, n: usize, out: &mut Vec<(Rat, Rat)>) {
    match n {
        0 => {}
        1 => out.push((lo, hi)),
        _ => {
            let mid = (&lo + &hi) / int(2);
            let left = sturm.count(&lo, &mid);
            isolate(sturm, lo, mid.clone(), left, out);
            isolate(sturm, mid, hi, n - left, out);
        }
    }
}

/// All real roots of `f`, sorted increasingly, with multiplicities.
pub fn real_roots(f: &UPoly) -> Vec<AlgebraicRoot> {
    let mut out: Vec<AlgebraicRoot> = Vec::new();
    for (factor, m) in f.squarefree_decomposition() {
        let mut rest = factor.clone();
        for (r, _) in factor.rational_roots() {
            rest = rest.div_exact(&UPoly::linear_root(&r)).expect("root divides");
            out.push(AlgebraicRoot::rational(r, m));
        }
        if rest.degree().unwrap_or(0) == 0 {
            continue;
        }
        let sturm = Sturm::new(&rest);
        let b = root_bound(&rest);
        let total = sturm.count(&-b.clone(), &b);
        let mut intervals = Vec::new();
        isolate(&sturm, -b.clone(), b, total, &mut intervals);
        for (lo, hi) in intervals {
            out.push(AlgebraicRoot {
                poly: rest.clone(),
                lo,
                hi,
                multiplicity: m,
                exact: None,
            });
        }
    }
    // Separate intervals from every other root so the order is by value.
    let mut changed = true;
    while changed {
        changed = false;
        for i in 0..out.len() {
            for j in 0..out.len() {
                if i == j || out[i].exact.is_some() {
                    continue;
                }
                let overlaps = out[j].lo <= out[i].hi && out[i].lo <= out[j].hi;
                if overlaps {
                    out[i].bisect();
                    changed = true;
                }
            }
        }
    }
    out.sort_by(|a, b| a.cmp_value(b));
    out
}

/// Sign of `f` just to the right (`side = 1`) or left (`side = -1`) of a root
/// of `f`.
pub fn side_sign(f: &UPoly, root: &AlgebraicRoot, side: i8) -> Result<i8, AnalysisError> {
    let m = root.multiplicity;
    // Near the root f ≈ c (u - u0)^m with sign(c) = sign of f^(m)(u0).
    let dm = f.nth_derivative(m);
    let s = root.sign_of(&dm)?;
    Ok(if side < 0 && m % 2 == 1 { -s } else { s })
}

#[cfg(test)]
mod tests {
    use super::*;
    use polyparse::rat;

    fn values(f: &UPoly) -> Vec<(f64, usize)> {
        real_roots(f).iter().map(|r| (r.to_f64(), r.multiplicity)).collect()
    }

    #[test]
    fn cubic_with_rational_roots() {
        let f = UPoly::from_ints(&[0, -1, 0, 1]);
        assert_eq!(values(&f), vec![(-1.0, 1), (0.0, 1), (1.0, 1)]);
        assert!(real_roots(&f).iter().all(|r| r.is_rational()));
    }

    #[test]
    fn repeated_root() {
        // u^2 (u - 1)
        let f = UPoly::from_ints(&[0, 0, -1, 1]);
        assert_eq!(values(&f), vec![(0.0, 2), (1.0, 1)]);
    }

    #[test]
    fn irrational_roots_are_isolated() {
        let f = UPoly::from_ints(&[0, -2, 0, 1]);
        let roots = real_roots(&f);
        assert_eq!(roots.len(), 3);
        assert_eq!(roots[1].exact, Some(int(0)));
        let mut r = roots[2].clone();
        r.refine_to(&rat(1, 10));
        let s = Sturm::new(&r.poly);
        assert_eq!(s.count(&r.lo, &r.hi), 1);
        assert!((r.to_f64() - 2f64.sqrt()).abs() < 1e-12);
        assert!((roots[0].to_f64() + 2f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn sign_at_irrational_root() {
        let f = UPoly::from_ints(&[-2, 0, 1]);
        let roots = real_roots(&f);
        let g = UPoly::from_ints(&[-141, 100]); // 100u - 141 > 0 at √2
        assert_eq!(roots[1].sign_of(&g).unwrap(), 1);
        assert_eq!(roots[0].sign_of(&g).unwrap(), -1);
        let h = UPoly::from_ints(&[-4, 0, 2]);
        assert_eq!(roots[1].sign_of(&h).unwrap(), 0);
    }

    #[test]
    fn no_real_roots() {
        assert!(real_roots(&UPoly::from_ints(&[1, 0, 0, 0, 1])).is_empty());
        assert!(real_roots(&UPoly::from_ints(&[3])).is_empty());
    }

    #[test]
    fn side_signs_follow_multiplicity() {
        // (u - 1)^2 (u + 1)
        let f = &UPoly::from_ints(&[1, -2, 1]) * &UPoly::from_ints(&[1, 1]);
        let roots = real_roots(&f);
        assert_eq!(side_sign(&f, &roots[1], 1).unwrap(), 1);
        assert_eq!(side_sign(&f, &roots[1], -1).unwrap(), 1);
        assert_eq!(side_sign(&f, &roots[0], -1).unwrap(), -1);
    }
}
