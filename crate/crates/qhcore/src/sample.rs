//! Random members of catalog families, and random homogeneous targets
//! with simple rational characteristic directions.

use crate::catalog::{Coef, Family};
use crate::weights::weight_vectors;
use polyparse::{coprime_check, int, rat, BiPoly, PolySystem, Rat};
use rand::Rng;
use std::collections::BTreeMap;

/// Nonzero rational `±a/b` with `1 <= a <= num_max`, `1 <= b <= den_max`.
pub fn nonzero_rat<R: Rng + ?Sized>(rng: &mut R, num_max: i64, den_max: i64) -> Rat {
    let a = rng.gen_range(1..=num_max);
    let b = rng.gen_range(1..=den_max);
    let s = if rng.gen_bool(0.5) { 1 } else { -1 };
    rat(s * a, b)
}

/// Random coefficients: required ones nonzero, optional ones zero with
/// probability `1/4`.
pub fn random_coefficients<R: Rng + ?Sized>(fam: &Family, rng: &mut R) -> BTreeMap<Coef, Rat> {
    fam.coefficients()
        .into_iter()
        .filter_map(|c| {
            if !fam.required_nonzero.contains(&c) && rng.gen_bool(0.25) {
                None
            } else {
                Some((c, nonzero_rat(rng, 9, 4)))
            }
        })
        .collect()
}

/// A random coprime member of `fam` whose minimal weight is the family's.
pub fn random_instance<R: Rng + ?Sized>(fam: &Family, rng: &mut R) -> PolySystem {
    random_member(fam, rng).1
}

/// Like [`random_instance`], also returning the coefficient values.
pub fn random_member<R: Rng + ?Sized>(
    fam: &Family,
    rng: &mut R,
) -> (BTreeMap<Coef, Rat>, PolySystem) {
    loop {
        let vals = random_coefficients(fam, rng);
        let Some(s) = fam.instance(&vals) else { continue };
        if s.degree() != fam.n || !coprime_check(&s).is_coprime() {
            continue;
        }
        match weight_vectors(&s) {
            Ok(w) if w.minimal.triple() == fam.weight.triple() => return (vals, s),
            _ => continue,
        }
    }
}

/// `k` distinct rationals `a/b`, `|a| <= 6`, `1 <= b <= 3`.
fn distinct_rats<R: Rng + ?Sized>(rng: &mut R, k: usize, nonzero: bool) -> Vec<Rat> {
    let mut out: Vec<Rat> = Vec::new();
    while out.len() < k {
        let r = rat(rng.gen_range(-6..=6), rng.gen_range(1..=3));
        if !(nonzero && r == int(0)) && !out.contains(&r) {
            out.push(r);
        }
    }
    out
}

/// A coprime cubic of the form
/// `x' = x(c12 y² + c21 xy + c30 x²)`, `y' = y(d03 y² + d12 xy + d21 x²)`
/// whose characteristic directions are `u = 0`, the `y`-axis and two further
/// distinct nonzero rational slopes, all simple.
pub fn random_h3_simple<R: Rng + ?Sized>(rng: &mut R) -> PolySystem {
    loop {
        let c12 = nonzero_rat(rng, 5, 2);
        let c21 = rat(rng.gen_range(-5..=5), 2);
        let c30 = nonzero_rat(rng, 5, 2);
        let a = nonzero_rat(rng, 3, 2);
        let u = distinct_rats(rng, 2, true);
        // G(1, u) = u (A u² + B u + C) with roots u[0], u[1].
        let b = -&a * (&u[0] + &u[1]);
        let c = &a * &u[0] * &u[1];
        let d03 = &c12 + &a;
        if d03 == int(0) {
            continue;
        }
        let p = BiPoly::from_terms([((1, 2), c12), ((2, 1), c21.clone()), ((3, 0), c30.clone())]);
        let q = BiPoly::from_terms([((0, 3), d03), ((1, 2), &c21 + &b), ((2, 1), &c30 + &c)]);
        let Ok(s) = PolySystem::new(p, q) else { continue };
        if coprime_check(&s).is_coprime() {
            return s;
        }
    }
}

/// A coprime homogeneous quadratic whose characteristic directions are
/// simple rational slopes: three of them, or one together with the
/// irreducible factor `x² + y²` in `G = xQ - yP`.
pub fn random_h2_simple<R: Rng + ?Sized>(rng: &mut R) -> PolySystem {
    loop {
        let p02 = nonzero_rat(rng, 5, 2);
        let p = BiPoly::from_terms([
            ((0, 2), p02.clone()),
            ((1, 1), rat(rng.gen_range(-5..=5), 2)),
            ((2, 0), rat(rng.gen_range(-5..=5), 2)),
        ]);
        let three = rng.gen_bool(0.5);
        let roots = distinct_rats(rng, if three { 3 } else { 1 }, false);
        // G = -p02 ∏(y - r x), times x² + y² in the one-root case, so that
        // G + yP has no pure y³ term and is divisible by x.
        let mut g = BiPoly::constant(-p02);
        for r in &roots {
            g = &g * &BiPoly::from_terms([((0, 1), int(1)), ((1, 0), -r)]);
        }
        if !three {
            g = &g * &BiPoly::from_int_terms(&[(1, 2, 0), (1, 0, 2)]);
        }
        let Some(q) = (&g + &(&BiPoly::y() * &p)).div_exact(&BiPoly::x()) else { continue };
        let Ok(s) = PolySystem::new(p, q) else { continue };
        if s.degree() == 2 && s.is_homogeneous() && coprime_check(&s).is_coprime() {
            return s;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn char_poly(s: &PolySystem) -> BiPoly {
        &(&BiPoly::x() * s.q()) - &(&BiPoly::y() * s.p())
    }

    #[test]
    fn generated_targets_have_the_requested_directions() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..20 {
            let s = random_h3_simple(&mut rng);
            let g = char_poly(&s);
            assert_eq!(g.coeff(0, 4), int(0));
            assert_eq!(g.coeff(4, 0), int(0));
            assert_eq!(s.p().coeff(0, 3), int(0));
            let s = random_h2_simple(&mut rng);
            let g = char_poly(&s).at_x_one();
            // Every rational root of G(1, u) is simple.
            assert!(g.rational_roots().iter().all(|(_, m)| *m == 1));
            assert!(!g.rational_roots().is_empty());
        }
    }
}
