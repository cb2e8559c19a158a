//! Sparse bivariate polynomials with exact rational coefficients.

use crate::rat::{int, to_f64, Rat};
use crate::upoly::UPoly;
use num_traits::{One, Zero};
use std::collections::BTreeMap;

/// Exponent pair `(i, j)` for the monomial `x^i y^j`.
pub type Mono = (u32, u32);

/// Sparse polynomial in `x, y`. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct BiPoly {
    terms: BTreeMap<Mono, Rat>,
}

/// Graded lexicographic key with `x > y`, largest first when sorted ascending.
fn grlex_key(m: &Mono) -> (std::cmp::Reverse<u32>, std::cmp::Reverse<u32>) {
    (std::cmp::Reverse(m.0 + m.1), std::cmp::Reverse(m.0))
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly::default()
    }

    pub fn constant(c: Rat) -> Self {
        BiPoly::monomial(c, 0, 0)
    }

    pub fn one() -> Self {
        BiPoly::constant(Rat::one())
    }

    pub fn monomial(c: Rat, i: u32, j: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((i, j), c);
        }
        BiPoly { terms }
    }

    pub fn x() -> Self {
        BiPoly::monomial(Rat::one(), 1, 0)
    }

    pub fn y() -> Self {
        BiPoly::monomial(Rat::one(), 0, 1)
    }

    /// Sums repeated monomials and drops zeros.
    pub fn from_terms<I: IntoIterator<Item = (Mono, Rat)>>(it: I) -> Self {
        let mut p = BiPoly::zero();
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    /// Shorthand for tests and fixtures: `(coeff, i, j)` with integer coefficients.
    pub fn from_int_terms(ts: &[(i64, u32, u32)]) -> Self {
        BiPoly::from_terms(ts.iter().map(|&(c, i, j)| ((i, j), int(c))))
    }

    pub fn add_term(&mut self, m: Mono, c: Rat) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(m).or_insert_with(Rat::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &Rat)> {
        self.terms.iter()
    }

    /// Terms in graded lexicographic order with `x > y`, leading term first.
    pub fn grlex_terms(&self) -> Vec<(Mono, Rat)> {
        let mut v: Vec<(Mono, Rat)> = self.terms.iter().map(|(m, c)| (*m, c.clone())).collect();
        v.sort_by_key(|(m, _)| grlex_key(m));
        v
    }

    pub fn support(&self) -> impl Iterator<Item = Mono> + '_ {
        self.terms.keys().copied()
    }

    pub fn coeff(&self, i: u32, j: u32) -> Rat {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|&(i, j)| i == 0 && j == 0)
    }

    /// Total degree; 0 for the zero polynomial.
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|&(i, j)| i + j).max().unwrap_or(0)
    }

    pub fn degree_x(&self) -> u32 {
        self.terms.keys().map(|m| m.0).max().unwrap_or(0)
    }

    pub fn degree_y(&self) -> u32 {
        self.terms.keys().map(|m| m.1).max().unwrap_or(0)
    }

    /// True when every term has the same total degree (the zero polynomial counts).
    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.terms.keys().map(|&(i, j)| i + j);
        match it.next() {
            None => true,
            Some(d) => it.all(|e| e == d),
        }
    }

    pub fn homogeneous_part(&self, deg: u32) -> BiPoly {
        BiPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.0 + m.1 == deg)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    /// Leading term in graded lex order.
    pub fn leading_term(&self) -> Option<(Mono, Rat)> {
        self.terms
            .iter()
            .min_by_key(|(m, _)| grlex_key(m))
            .map(|(m, c)| (*m, c.clone()))
    }

    pub fn scale(&self, c: &Rat) -> BiPoly {
        if c.is_zero() {
            return BiPoly::zero();
        }
        BiPoly {
            terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect(),
        }
    }

    /// Scales so the graded-lex leading coefficient is 1.
    pub fn monic(&self) -> BiPoly {
        match self.leading_term() {
            Some((_, c)) => self.scale(&c.recip()),
            None => BiPoly::zero(),
        }
    }

    /// Multiplies by `x^a y^b`.
    pub fn shift(&self, a: u32, b: u32) -> BiPoly {
        BiPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| ((m.0 + a, m.1 + b), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> BiPoly {
        (0..k).fold(BiPoly::one(), |acc, _| &acc * self)
    }

    pub fn eval(&self, x: &Rat, y: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for ((i, j), c) in &self.terms {
            acc += c * num_traits::pow(x.clone(), *i as usize) * num_traits::pow(y.clone(), *j as usize);
        }
        acc
    }

    pub fn eval_f64(&self, x: f64, y: f64) -> f64 {
        self.terms
            .iter()
            .map(|((i, j), c)| to_f64(c) * x.powi(*i as i32) * y.powi(*j as i32))
            .sum()
    }

    pub fn diff_x(&self) -> BiPoly {
        BiPoly::from_terms(
            self.terms
                .iter()
                .filter(|(m, _)| m.0 > 0)
                .map(|(m, c)| ((m.0 - 1, m.1), c * int(m.0 as i64))),
        )
    }

    pub fn diff_y(&self) -> BiPoly {
        BiPoly::from_terms(
            self.terms
                .iter()
                .filter(|(m, _)| m.1 > 0)
                .map(|(m, c)| ((m.0, m.1 - 1), c * int(m.1 as i64))),
        )
    }

    /// `f(1, u)` as a polynomial in `u`.
    pub fn at_x_one(&self) -> UPoly {
        let mut v = vec![Rat::zero(); self.degree_y() as usize + 1];
        for ((_, j), c) in &self.terms {
            v[*j as usize] += c;
        }
        UPoly::new(v)
    }

    /// `f(v, 1)` as a polynomial in `v`.
    pub fn at_y_one(&self) -> UPoly {
        let mut v = vec![Rat::zero(); self.degree_x() as usize + 1];
        for ((i, _), c) in &self.terms {
            v[*i as usize] += c;
        }
        UPoly::new(v)
    }

    /// Coefficients of `x^k` as polynomials in `y`, index `k`.
    pub fn coeffs_in_x(&self) -> Vec<UPoly> {
        let mut rows: Vec<Vec<Rat>> = vec![Vec::new(); self.degree_x() as usize + 1];
        for ((i, j), c) in &self.terms {
            let row = &mut rows[*i as usize];
            if row.len() <= *j as usize {
                row.resize(*j as usize + 1, Rat::zero());
            }
            row[*j as usize] = c.clone();
        }
        if self.is_zero() {
            return Vec::new();
        }
        rows.into_iter().map(UPoly::new).collect()
    }

    /// Inverse of [`BiPoly::coeffs_in_x`].
    pub fn from_coeffs_in_x(rows: &[UPoly]) -> BiPoly {
        BiPoly::from_terms(rows.iter().enumerate().flat_map(|(i, row)| {
            row.coeffs()
                .iter()
                .enumerate()
                .map(move |(j, c)| ((i as u32, j as u32), c.clone()))
        }))
    }

    /// Homogeneous polynomial from its dehomogenization `f(1, u)` of total degree `deg`.
    pub fn homogenize_from_u(f: &UPoly, deg: u32) -> BiPoly {
        BiPoly::from_terms(
            f.coeffs()
                .iter()
                .enumerate()
                .map(|(j, c)| ((deg - j as u32, j as u32), c.clone())),
        )
    }

    /// Exact quotient `self / d` by multivariate division in graded lex order.
    pub fn div_exact(&self, d: &BiPoly) -> Option<BiPoly> {
        let (lm, lc) = d.leading_term()?;
        let mut rem = self.clone();
        let mut quot = BiPoly::zero();
        while let Some((m, c)) = rem.leading_term() {
            if m.0 < lm.0 || m.1 < lm.1 {
                return None;
            }
            let t = BiPoly::monomial(&c / &lc, m.0 - lm.0, m.1 - lm.1);
            rem = &rem - &(&t * d);
            quot = &quot + &t;
        }
        Some(quot)
    }

    /// Substitutes monomials: each `x^i y^j` becomes `f(i, j)`; exponents must
    /// stay nonnegative integers.
    pub fn map_monomials<F: Fn(Mono) -> Mono>(&self, f: F) -> BiPoly {
        BiPoly::from_terms(self.terms.iter().map(|(m, c)| (f(*m), c.clone())))
    }

    /// `f(y, x)`.
    pub fn swap_xy(&self) -> BiPoly {
        self.map_monomials(|(i, j)| (j, i))
    }

    /// `f(sx x, sy y)` with `sx, sy ∈ {1, -1}`.
    pub fn reflect(&self, sx: bool, sy: bool) -> BiPoly {
        BiPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let flips = (sx && m.0 % 2 == 1) as u32 + (sy && m.1 % 2 == 1) as u32;
                    (*m, if flips % 2 == 1 { -c } else { c.clone() })
                })
                .collect(),
        }
    }
}

impl std::ops::Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, o: &BiPoly) -> BiPoly {
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.add_term(*m, c.clone());
        }
        r
    }
}

impl std::ops::Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, o: &BiPoly) -> BiPoly {
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.add_term(*m, -c.clone());
        }
        r
    }
}

impl std::ops::Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, o: &BiPoly) -> BiPoly {
        let mut r = BiPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                r.add_term((m1.0 + m2.0, m1.1 + m2.1), c1 * c2);
            }
        }
        r
    }
}

impl std::ops::Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        self.scale(&-Rat::one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    #[test]
    fn no_zero_coefficients_stored() {
        let p = &BiPoly::x() - &BiPoly::x();
        assert!(p.is_zero());
        assert_eq!(p.degree(), 0);
        let q = BiPoly::monomial(int(0), 3, 1);
        assert!(q.is_zero());
    }

    #[test]
    fn grlex_order() {
        let p = BiPoly::from_int_terms(&[(1, 0, 5), (1, 1, 3), (1, 2, 1), (7, 0, 0), (1, 1, 4)]);
        let order: Vec<Mono> = p.grlex_terms().into_iter().map(|t| t.0).collect();
        assert_eq!(order, vec![(1, 4), (0, 5), (1, 3), (2, 1), (0, 0)]);
        assert_eq!(p.leading_term().unwrap().0, (1, 4));
    }

    #[test]
    fn exact_division() {
        let f = BiPoly::from_int_terms(&[(1, 0, 2), (-1, 2, 0)]);
        let g = &f * &BiPoly::from_int_terms(&[(1, 1, 0), (3, 0, 1), (2, 0, 0)]);
        assert_eq!(g.div_exact(&f).unwrap(), BiPoly::from_int_terms(&[(1, 1, 0), (3, 0, 1), (2, 0, 0)]));
        assert!(g.div_exact(&BiPoly::from_int_terms(&[(1, 1, 0), (1, 0, 0)])).is_none());
    }

    #[test]
    fn evaluation_and_dehomogenization() {
        let f = BiPoly::from_int_terms(&[(1, 2, 0), (1, 0, 2)]);
        assert_eq!(f.eval(&int(1), &int(2)), int(5));
        assert_eq!(BiPoly::zero().eval(&rat(1, 3), &int(9)), int(0));
        assert_eq!(f.at_x_one(), UPoly::from_ints(&[1, 0, 1]));
        let rows = f.coeffs_in_x();
        assert_eq!(BiPoly::from_coeffs_in_x(&rows), f);
        assert_eq!(f.reflect(false, true), f);
        let g = BiPoly::from_int_terms(&[(1, 1, 2)]);
        assert_eq!(g.reflect(true, false), BiPoly::from_int_terms(&[(-1, 1, 2)]));
    }
}
