//! Bivariate gcd over the rationals by content/primitive-part recursion:
//! polynomials are viewed in `Q[y][x]`, contents are univariate gcds in `y`,
//! and primitive parts are combined with a primitive pseudo-remainder sequence.

use crate::bipoly::BiPoly;
use crate::rat::Rat;
use crate::system::PolySystem;
use crate::upoly::UPoly;
use num_traits::One;

type Row = Vec<UPoly>;

fn trim(mut r: Row) -> Row {
    while r.last().is_some_and(|c| c.is_zero()) {
        r.pop();
    }
    r
}

fn content(r: &Row) -> UPoly {
    r.iter().fold(UPoly::zero(), |g, c| g.gcd(c))
}

fn primitive_part(r: &Row) -> Row {
    let c = content(r);
    if c.is_zero() {
        return Vec::new();
    }
    r.iter()
        .map(|a| a.div_exact(&c).expect("content divides"))
        .collect()
}

/// `lc(b)^k a mod b` in `Q[y][x]`, reduced to its primitive part.
fn prem_primitive(a: &Row, b: &Row) -> Row {
    let db = b.len() - 1;
    let lb = b[db].clone();
    let mut r = a.clone();
    while r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let shift = dr - db;
        let mut next: Row = r.iter().map(|c| c * &lb).collect();
        for (k, bc) in b.iter().enumerate() {
            next[k + shift] = &next[k + shift] - &(bc * &lr);
        }
        r = trim(next);
        r = primitive_part(&r);
    }
    r
}

/// Greatest common divisor, normalized to graded-lex leading coefficient 1.
/// `gcd(0, 0) = 0`.
pub fn gcd(f: &BiPoly, g: &BiPoly) -> BiPoly {
    if f.is_zero() {
        return g.monic();
    }
    if g.is_zero() {
        return f.monic();
    }
    let a = f.coeffs_in_x();
    let b = g.coeffs_in_x();
    let c = content(&a).gcd(&content(&b));
    let (mut a, mut b) = (primitive_part(&a), primitive_part(&b));
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while b.len() > 1 {
        let r = prem_primitive(&a, &b);
        a = b;
        b = r;
    }
    let core = if b.is_empty() {
        a
    } else {
        // b is a nonzero element of Q[y]; primitive in x means a unit.
        vec![UPoly::constant(Rat::one())]
    };
    let core = primitive_part(&core);
    let rows: Row = core.iter().map(|r| r * &c).collect();
    BiPoly::from_coeffs_in_x(&rows).monic()
}

/// Result of [`coprime_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Coprimality {
    Coprime,
    CommonFactor(BiPoly),
}

impl Coprimality {
    pub fn is_coprime(&self) -> bool {
        matches!(self, Coprimality::Coprime)
    }
}

/// Whether `P` and `Q` have a nonconstant common factor; returns it if so.
pub fn coprime_check(s: &PolySystem) -> Coprimality {
    let g = gcd(s.p(), s.q());
    if g.is_constant() {
        Coprimality::Coprime
    } else {
        Coprimality::CommonFactor(g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::{parse_poly, parse_system};

    fn pp(s: &str) -> BiPoly {
        parse_poly(s).unwrap()
    }

    #[test]
    fn monomial_common_factor() {
        let s = parse_system("dx/dt = x*y^2\ndy/dt = x*y^3").unwrap();
        assert_eq!(coprime_check(&s), Coprimality::CommonFactor(pp("x*y^2")));
    }

    #[test]
    fn coprime_catalog_member() {
        let s = parse_system("dx/dt = y^5\ndy/dt = x^4").unwrap();
        assert!(coprime_check(&s).is_coprime());
    }

    #[test]
    fn quadratic_common_factor() {
        let s = parse_system("dx/dt = x*(y^2 - x^2)\ndy/dt = y*(y^2 - x^2)").unwrap();
        // Normalized with leading x^2, so y^2 - x^2 up to sign.
        assert_eq!(coprime_check(&s), Coprimality::CommonFactor(pp("x^2 - y^2")));
    }

    #[test]
    fn mixed_content_and_primitive() {
        let f = pp("(y + 1)*(x - y)^2*(x + 2*y)");
        let g = pp("(y + 1)*(x - y)*(x^3 + y)");
        assert_eq!(gcd(&f, &g), pp("(y + 1)*(x - y)").monic());
        assert_eq!(gcd(&pp("x"), &pp("y")), BiPoly::one());
        assert_eq!(gcd(&pp("3*x^2*y"), &pp("0")), pp("x^2*y"));
    }
}
