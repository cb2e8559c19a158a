use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;

/// Exact rational number. `BigRational` keeps the denominator positive and the
/// fraction reduced, with zero stored as `0/1`.
pub type Rat = BigRational;

pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// `n/d`; panics when `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn to_f64(r: &Rat) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        // Very large numerators/denominators: scale through the bit lengths.
        let n = r.numer().bits() as i64;
        let d = r.denom().bits() as i64;
        let shift = n - d;
        let scaled = if shift > 0 {
            r / Rat::from_integer(BigInt::one() << (shift as usize))
        } else {
            r * Rat::from_integer(BigInt::one() << ((-shift) as usize))
        };
        scaled.to_f64().unwrap_or(0.0) * 2f64.powi(shift as i32)
    })
}

/// Sign as -1, 0 or 1.
pub fn sign(r: &Rat) -> i8 {
    match r.cmp(&Rat::zero()) {
        Ordering::Less => -1,
        Ordering::Equal => 0,
        Ordering::Greater => 1,
    }
}

/// Exact value of a finite float.
pub fn from_f64(v: f64) -> Option<Rat> {
    Rat::from_float(v)
}

/// `r^k` for a signed exponent; panics on `0^negative`.
pub fn powi(r: &Rat, k: i32) -> Rat {
    if k >= 0 {
        num_traits::pow(r.clone(), k as usize)
    } else {
        assert!(!r.is_zero(), "zero to a negative power");
        num_traits::pow(r.recip(), (-k) as usize)
    }
}

/// Exact integer `k`-th root of a nonnegative rational, when it exists.
pub fn exact_root(r: &Rat, k: u32) -> Option<Rat> {
    if k == 0 {
        return None;
    }
    if r.is_negative() {
        if k.is_multiple_of(2) {
            return None;
        }
        return exact_root(&-r, k).map(|v| -v);
    }
    let n = r.numer().nth_root(k);
    let d = r.denom().nth_root(k);
    let cand = Rat::new(n, d);
    if num_traits::pow(cand.clone(), k as usize) == *r {
        Some(cand)
    } else {
        None
    }
}
