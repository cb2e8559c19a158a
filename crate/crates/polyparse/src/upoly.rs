//! Dense univariate polynomials over the rationals.

use crate::rat::{int, sign, to_f64, Rat};
use num_traits::{One, Zero};
use std::fmt;

/// Dense polynomial `c[0] + c[1] u + ... + c[n] u^n`.
///
/// Invariant: no trailing zero coefficients, so the zero polynomial is the
/// empty vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct UPoly {
    coeffs: Vec<Rat>,
}

impl UPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        UPoly::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn zero() -> Self {
        UPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rat) -> Self {
        UPoly::new(vec![c])
    }

    /// The monomial `c u^k`.
    pub fn monomial(c: Rat, k: usize) -> Self {
        let mut v = vec![Rat::zero(); k + 1];
        v[k] = c;
        UPoly::new(v)
    }

    /// `u - r`.
    pub fn linear_root(r: &Rat) -> Self {
        UPoly::new(vec![-r.clone(), Rat::one()])
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn eval(&self, u: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * u + c;
        }
        acc
    }

    pub fn eval_f64(&self, u: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * u + to_f64(c);
        }
        acc
    }

    pub fn sign_at(&self, u: &Rat) -> i8 {
        sign(&self.eval(u))
    }

    pub fn derivative(&self) -> Self {
        UPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * int(k as i64))
                .collect(),
        )
    }

    /// `k`-th derivative.
    pub fn nth_derivative(&self, k: usize) -> Self {
        (0..k).fold(self.clone(), |p, _| p.derivative())
    }

    pub fn scale(&self, c: &Rat) -> Self {
        UPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.leading().recip())
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(UPoly::constant(Rat::one()), |acc, _| &acc * self)
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, d: &UPoly) -> (UPoly, UPoly) {
        let dd = d.degree().expect("division by zero polynomial");
        let lc = d.leading();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (UPoly::zero(), self.clone());
        }
        let mut quot = vec![Rat::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] / &lc;
            if !c.is_zero() {
                for (i, dc) in d.coeffs.iter().enumerate() {
                    rem[k + i] -= &c * dc;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (UPoly::new(quot), UPoly::new(rem))
    }

    /// Quotient when `d` divides `self` exactly.
    pub fn div_exact(&self, d: &UPoly) -> Option<UPoly> {
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }

    /// Monic greatest common divisor (zero only when both inputs are zero).
    pub fn gcd(&self, other: &UPoly) -> UPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `p(c u)`.
    pub fn scale_arg(&self, c: &Rat) -> Self {
        let mut pw = Rat::one();
        let mut v = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            v.push(a * &pw);
            pw *= c;
        }
        UPoly::new(v)
    }

    /// `u^n p(1/u)` with `n = deg p`.
    pub fn reversed(&self) -> Self {
        let mut v = self.coeffs.clone();
        v.reverse();
        UPoly::new(v)
    }

    /// `p(-u)`.
    pub fn reflect(&self) -> Self {
        self.scale_arg(&-Rat::one())
    }

    /// Multiplicity of `u = 0` as a root (`None` for the zero polynomial).
    pub fn zero_multiplicity(&self) -> Option<usize> {
        if self.is_zero() {
            return None;
        }
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Square-free decomposition `p = c * prod f_k^k` (Yun). Returns the
    /// nonconstant monic factors with their multiplicities.
    pub fn squarefree_decomposition(&self) -> Vec<(UPoly, usize)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let dp = self.derivative();
        let a0 = self.gcd(&dp);
        let mut b = self.div_exact(&a0).expect("gcd divides");
        let mut c = dp.div_exact(&a0).expect("gcd divides");
        let mut d = &c - &b.derivative();
        let mut k = 1;
        while b.degree().unwrap_or(0) > 0 {
            let a = b.gcd(&d);
            if a.degree().unwrap_or(0) > 0 {
                out.push((a.clone(), k));
            }
            b = b.div_exact(&a).expect("gcd divides");
            c = d.div_exact(&a).expect("gcd divides");
            d = &c - &b.derivative();
            k += 1;
        }
        out
    }

    /// Square-free part, monic.
    pub fn squarefree_part(&self) -> UPoly {
        if self.degree().unwrap_or(0) == 0 {
            return UPoly::constant(Rat::one());
        }
        self.div_exact(&self.gcd(&self.derivative()))
            .expect("gcd divides")
            .monic()
    }

    /// Rational roots with multiplicity, via the rational root theorem applied
    /// to each square-free factor.
    pub fn rational_roots(&self) -> Vec<(Rat, usize)> {
        let mut out = Vec::new();
        for (f, m) in self.squarefree_decomposition() {
            for r in squarefree_rational_roots(&f) {
                out.push((r, m));
            }
        }
        out.sort();
        out
    }
}

fn squarefree_rational_roots(f: &UPoly) -> Vec<Rat> {
    use num_bigint::BigInt;
    use num_integer::Integer;
    let mut roots = Vec::new();
    let Some(deg) = f.degree() else {
        return roots;
    };
    if deg == 0 {
        return roots;
    }
    let mut g = f.clone();
    if let Some(z) = g.zero_multiplicity() {
        if z > 0 {
            roots.push(Rat::zero());
            g = UPoly::new(g.coeffs[z..].to_vec());
        }
    }
    if g.degree().unwrap_or(0) == 0 {
        return roots;
    }
    // Clear denominators to get an integer polynomial.
    let l = g
        .coeffs
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = g
        .coeffs
        .iter()
        .map(|c| (c * Rat::from_integer(l.clone())).to_integer())
        .collect();
    let a0 = ints[0].clone();
    let an = ints.last().unwrap().clone();
    let small = |n: &BigInt| n.bits() <= 40;
    if small(&a0) && small(&an) {
        let p_divs = divisors(&a0);
        let q_divs = divisors(&an);
        for p in &p_divs {
            for q in &q_divs {
                for s in [1i64, -1] {
                    let cand = Rat::new(p * BigInt::from(s), q.clone());
                    if g.eval(&cand).is_zero() && !roots.contains(&cand) {
                        roots.push(cand);
                    }
                }
            }
        }
    } else if deg <= 2 {
        // Large coefficients: exact root extraction for degree ≤ 2.
        for r in small_degree_roots(&g) {
            if !roots.contains(&r) {
                roots.push(r);
            }
        }
    }
    roots
}

fn small_degree_roots(g: &UPoly) -> Vec<Rat> {
    match g.degree() {
        Some(1) => vec![-g.coeff(0) / g.coeff(1)],
        Some(2) => {
            let (a, b, c) = (g.coeff(2), g.coeff(1), g.coeff(0));
            let disc = &b * &b - int(4) * &a * &c;
            match crate::rat::exact_root(&disc, 2) {
                Some(s) => {
                    let two_a = int(2) * &a;
                    vec![(-&b - &s) / &two_a, (-&b + &s) / &two_a]
                }
                None => Vec::new(),
            }
        }
        _ => Vec::new(),
    }
}

fn divisors(n: &num_bigint::BigInt) -> Vec<num_bigint::BigInt> {
    use num_bigint::BigInt;
    use num_traits::{Signed, ToPrimitive};
    let v = n.abs().to_u64().unwrap_or(0);
    let mut out = Vec::new();
    let mut k = 1u64;
    while k * k <= v {
        if v.is_multiple_of(k) {
            out.push(BigInt::from(k));
            if k * k != v {
                out.push(BigInt::from(v / k));
            }
        }
        k += 1;
    }
    out
}

impl std::ops::Add for &UPoly {
    type Output = UPoly;
    fn add(self, o: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        UPoly::new((0..n).map(|k| self.coeff(k) + o.coeff(k)).collect())
    }
}

impl std::ops::Sub for &UPoly {
    type Output = UPoly;
    fn sub(self, o: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        UPoly::new((0..n).map(|k| self.coeff(k) - o.coeff(k)).collect())
    }
}

impl std::ops::Mul for &UPoly {
    type Output = UPoly;
    fn mul(self, o: &UPoly) -> UPoly {
        if self.is_zero() || o.is_zero() {
            return UPoly::zero();
        }
        let mut v = vec![Rat::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        UPoly::new(v)
    }
}

impl std::ops::Neg for &UPoly {
    type Output = UPoly;
    fn neg(self) -> UPoly {
        UPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

/// Prints in descending powers of `u`, e.g. `u^3 - 2*u`.
impl fmt::Display for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = sign(c) < 0;
            let mag = if neg { -c } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let unit = mag.is_one();
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !unit {
                        write!(f, "{mag}*")?;
                    }
                    if k == 1 {
                        write!(f, "u")?;
                    } else {
                        write!(f, "u^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}
