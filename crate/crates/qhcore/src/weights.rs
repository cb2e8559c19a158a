//! Weight vectors.
//!
//! A system is quasi-homogeneous with weight vector `(s1, s2, d)` when
//! `P(a^s1 x, a^s2 y) = a^(s1+d-1) P(x, y)` and
//! `Q(a^s1 x, a^s2 y) = a^(s2+d-1) Q(x, y)`. Per monomial this reads
//! `v · (s1, s2) = d - 1`, where a `P`-monomial `x^i y^j` contributes
//! `v = (i-1, j)` and a `Q`-monomial contributes `v = (i, j-1)`. The solution
//! set is found from the differences of these vectors: rank 2 means no
//! solution, rank 1 fixes the direction of `(s1, s2)`, rank 0 leaves it free.

use crate::error::QhError;
use num_integer::Integer;
use polyparse::PolySystem;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightVector {
    pub s1: u32,
    pub s2: u32,
    pub d: u32,
    pub minimal: bool,
}

impl WeightVector {
    pub fn new(s1: u32, s2: u32, d: u32) -> Self {
        WeightVector {
            s1,
            s2,
            d,
            minimal: false,
        }
    }

    pub fn triple(&self) -> (u32, u32, u32) {
        (self.s1, self.s2, self.d)
    }

    /// `(r s1, r s2, r (d-1) + 1)`.
    pub fn scaled(&self, r: u32) -> WeightVector {
        WeightVector::new(r * self.s1, r * self.s2, r * (self.d - 1) + 1)
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.s1, self.s2, self.d)
    }
}

/// The full solution set of the weight equations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WeightFamily {
    /// All `(r a, r b, r e + 1)` for `r >= 1`.
    Ray { a: u32, b: u32, e: u32 },
    /// All `(s1, s2, 1 + alpha s1 + beta s2)`; only the diagonal linear
    /// system `x' = c x, y' = c' y` among coprime systems.
    Plane { alpha: u32, beta: u32 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightSet {
    pub minimal: WeightVector,
    pub family: WeightFamily,
}

impl WeightSet {
    /// The first `k` members of the family, minimal first.
    pub fn first(&self, k: usize) -> Vec<WeightVector> {
        match self.family {
            WeightFamily::Ray { a, b, e } => (1..=k as u32)
                .map(|r| WeightVector {
                    s1: r * a,
                    s2: r * b,
                    d: r * e + 1,
                    minimal: r == 1,
                })
                .collect(),
            WeightFamily::Plane { alpha, beta } => {
                let mut out = Vec::new();
                let mut total = 2;
                while out.len() < k {
                    for s1 in 1..total {
                        let s2 = total - s1;
                        if out.len() < k {
                            out.push(WeightVector {
                                s1,
                                s2,
                                d: 1 + alpha * s1 + beta * s2,
                                minimal: s1 == 1 && s2 == 1,
                            });
                        }
                    }
                    total += 1;
                }
                out
            }
        }
    }
}

/// Exponent vectors `v` with `v · (s1, s2) = d - 1`, one per monomial.
pub(crate) fn exponent_vectors(s: &PolySystem) -> Vec<(i64, i64)> {
    let mut v: Vec<(i64, i64)> = s
        .p()
        .support()
        .map(|(i, j)| (i as i64 - 1, j as i64))
        .chain(s.q().support().map(|(i, j)| (i as i64, j as i64 - 1)))
        .collect();
    v.sort();
    v.dedup();
    v
}

/// Whether `w` satisfies the defining relation for `s`.
pub fn satisfies(w: &WeightVector, s: &PolySystem) -> bool {
    let (s1, s2, d) = (w.s1 as i64, w.s2 as i64, w.d as i64);
    s.p()
        .support()
        .all(|(i, j)| i as i64 * s1 + j as i64 * s2 == s1 + d - 1)
        && s.q()
            .support()
            .all(|(i, j)| i as i64 * s1 + j as i64 * s2 == s2 + d - 1)
}

/// All weight vectors of `s`, with the componentwise-minimal one flagged.
pub fn weight_vectors(s: &PolySystem) -> Result<WeightSet, QhError> {
    let vs = exponent_vectors(s);
    let v0 = vs[0];
    let diffs: Vec<(i64, i64)> = vs[1..].iter().map(|v| (v.0 - v0.0, v.1 - v0.1)).collect();
    let Some(&(da, db)) = diffs.first() else {
        // Every monomial has the same vector; both coordinates are nonnegative
        // because P contributes j >= 0 and Q contributes i >= 0.
        if v0.0 < 0 || v0.1 < 0 {
            return Err(QhError::NotQuasiHomogeneous);
        }
        let (alpha, beta) = (v0.0 as u32, v0.1 as u32);
        let minimal = WeightVector {
            s1: 1,
            s2: 1,
            d: 1 + alpha + beta,
            minimal: true,
        };
        return Ok(WeightSet {
            minimal,
            family: WeightFamily::Plane { alpha, beta },
        });
    };
    // (s1, s2) is orthogonal to every difference.
    let g = da.gcd(&db);
    let (mut a, mut b) = (db / g, -da / g);
    if a < 0 || (a == 0 && b < 0) {
        a = -a;
        b = -b;
    }
    if diffs.iter().any(|&(x, y)| x * a + y * b != 0) || a <= 0 || b <= 0 {
        return Err(QhError::NotQuasiHomogeneous);
    }
    let e = v0.0 * a + v0.1 * b;
    if e < 0 {
        return Err(QhError::NotQuasiHomogeneous);
    }
    let minimal = WeightVector {
        s1: a as u32,
        s2: b as u32,
        d: e as u32 + 1,
        minimal: true,
    };
    Ok(WeightSet {
        minimal,
        family: WeightFamily::Ray {
            a: a as u32,
            b: b as u32,
            e: e as u32,
        },
    })
}

/// True iff `w` cannot be divided down: with `r = gcd(s1, s2) > 1`, the
/// triple `(s1/r, s2/r, (d-1)/r + 1)` would again satisfy the weight
/// equations, contradicting minimality.
pub fn minimality_audit(w: &WeightVector, s: &PolySystem) -> bool {
    let r = w.s1.gcd(&w.s2);
    if r == 1 {
        return true;
    }
    if !(w.d - 1).is_multiple_of(r) {
        return true;
    }
    let reduced = WeightVector::new(w.s1 / r, w.s2 / r, (w.d - 1) / r + 1);
    !satisfies(&reduced, s)
}
