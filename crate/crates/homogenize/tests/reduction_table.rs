use homogenize::{homogenize_lcm, homogenize_min, Chart, TargetClass, TimeFactor};
use num_traits::{One, Zero};
use polyparse::rat::powi;
use polyparse::{int, parse_system, rat, PolySystem, Rat};
use proptest::prelude::*;
use qhcore::catalog::Coef;
use qhcore::sample::random_member;
use qhcore::{quintic_catalog, weight_vectors, Family};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;

/// Reduced systems in terms of the source coefficients, with the divisor of
/// `dt₁` written as `(a, b)` for `x̃^a ỹ^b`, the chart and the target class.
#[rustfmt::skip]
const REDUCTIONS: [(&str, &str, &str, (i64, i64, i64, i64), Chart, TargetClass); 15] = [
    ("X_011", "a05*y^2 + a13*x*y + a21*x^2", "2*(b04*y^2 + b12*x*y + b20*x^2)", (0, 1, 1, 2), Chart::YPositive, TargetClass::H2),
    ("X_012", "2*(a05*y + a22*x)", "3*(b13*y + b30*x)", (1, 2, 2, 3), Chart::XPositive, TargetClass::H1),
    ("X_014", "4*(a05*y + a40*x)", "5*b31*y", (3, 4, 0, 1), Chart::XPositive, TargetClass::H1),
    ("X_015", "5*a05", "6*b40", (4, 5, 5, 6), Chart::YPositive, TargetClass::H0),
    ("X_021", "a05*y + a12*x", "3*(b03*y + b10*x)", (0, 1, 2, 3), Chart::Full, TargetClass::H1),
    ("X_023", "3*(a05*y + a30*x)", "5*b21*y", (2, 3, 0, 1), Chart::Full, TargetClass::H1),
    ("X_032", "2*(a05*y + a20*x)", "5*b11*y", (1, 2, 0, 1), Chart::XPositive, TargetClass::H1),
    ("X_111", "a14*x*y^2 + a22*x^2*y + a30*x^3", "2*(b05*y^3 + b13*x*y^2 + b21*x^2*y)", (0, 1, 0, 1), Chart::YPositive, TargetClass::H3),
    ("X_113", "3*x*(a14*y + a40*x)", "4*y*(b05*y + b31*x)", (0, 1, 0, 1), Chart::YPositive, TargetClass::H2),
    ("X_114", "4*a14*x", "5*(b05*y + b40*x)", (0, 1, 4, 5), Chart::XPositive, TargetClass::H1),
    ("X_123", "3*a14*x", "5*(b05*y + b30*x)", (0, 1, 4, 5), Chart::Full, TargetClass::H1),
    ("X_131", "a14*x*y + a20*x^2", "4*(b05*y^2 + b11*x*y)", (0, 1, 0, 1), Chart::YPositive, TargetClass::H2),
    ("X_132", "2*a14*x", "5*(b05*y + b20*x)", (0, 1, 4, 5), Chart::XPositive, TargetClass::H1),
    ("X_141", "a14*x", "5*(b05*y + b10*x)", (0, 1, 4, 5), Chart::Full, TargetClass::H1),
    ("X_1", "a05*y + a10*x", "5*b01*y", (0, 1, 0, 1), Chart::Full, TargetClass::H1),
];

fn instantiate(template: &str, vals: &BTreeMap<Coef, Rat>, fam: &Family) -> String {
    let mut out = template.to_string();
    for c in fam.coefficients() {
        let v = vals.get(&c).cloned().unwrap_or_else(Rat::zero);
        out = out.replace(&c.to_string(), &format!("({v})"));
    }
    out
}

#[test]
fn minimal_substitution_reproduces_known_reductions() {
    let cat = quintic_catalog();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for (name, p, q, (xn, xd, yn, yd), chart, class) in REDUCTIONS {
        let fam = cat.iter().find(|f| f.name == name).unwrap();
        for _ in 0..8 {
            let (vals, s) = random_member(fam, &mut rng);
            let w = weight_vectors(&s).unwrap().minimal;
            let (h, rec) = homogenize_min(&s, &w).unwrap();
            let text = format!(
                "dx/dt = {}\ndy/dt = {}",
                instantiate(p, &vals, fam),
                instantiate(q, &vals, fam)
            );
            assert_eq!(h.sys, parse_system(&text).unwrap(), "{name}");
            assert_eq!(rec.time_factor, TimeFactor { x: -rat(xn, xd), y: -rat(yn, yd) }, "{name}");
            assert_eq!(rec.chart, chart, "{name}");
            assert_eq!(h.target_class, Some(class), "{name}");
        }
    }
}

#[test]
fn lcm_examples() {
    // X_011: degree 5 with dt = x̃ dt₁.
    let s = parse_system("dx/dt = 2*y^5 + 3*x*y^3 + 5*x^2*y\ndy/dt = 7*y^4 + 11*x*y^2 + 13*x^2").unwrap();
    let (h, rec) = homogenize_lcm(&s, &weight_vectors(&s).unwrap().minimal).unwrap();
    assert_eq!(rec.beta, 2);
    assert_eq!(rec.time_factor, TimeFactor { x: int(1), y: int(0) });
    let expected = parse_system(
        "dx/dt = (2*y^5 + 3*x^2*y^3 + 5*x^4*y)/2\ndy/dt = 7*x*y^4 + 11*x^3*y^2 + 13*x^5",
    )
    .unwrap();
    assert_eq!(h.sys, expected);
    // X_114: degree 20 with dt = ỹ³ dt₁.
    let s = parse_system("dx/dt = 3*x*y^4\ndy/dt = -2*y^5 + 7*x^4").unwrap();
    let (h, rec) = homogenize_lcm(&s, &weight_vectors(&s).unwrap().minimal).unwrap();
    assert_eq!(rec.beta, 20);
    assert_eq!(rec.time_factor, TimeFactor { x: int(0), y: int(3) });
    assert_eq!(h.degree, 20);
    assert_eq!(h.sys, parse_system("dx/dt = 3/5*x*y^19\ndy/dt = (-2*y^20 + 7*x^20)/4").unwrap());
}

#[test]
fn x111_cubic_coefficient() {
    let s = parse_system("dx/dt = 3*x*y^4 - x^2*y^2 + 2*x^3\ndy/dt = 5*y^5 + x*y^3 - x^2*y").unwrap();
    let (h, _) = homogenize_min(&s, &weight_vectors(&s).unwrap().minimal).unwrap();
    // After dividing time by d03 = 2·b05 the x*y^2 coefficient is a14/(2 b05).
    let d03 = h.sys.q().coeff(0, 3);
    assert_eq!(h.sys.p().coeff(1, 2) / d03, rat(3, 10));
}

/// Degree predicted for the lcm path: `d`, plus `s1 - 1` when `P` has a pure
/// power of `y`, plus `s2 - 1` when `Q` has a pure power of `x` (working frame).
fn lcm_degree(s: &PolySystem, s1: u32, s2: u32, d: u32) -> u32 {
    let x_boundary = s.p().terms().any(|(&(i, _), _)| i == 0);
    let y_boundary = s.q().terms().any(|(&(_, j), _)| j == 0);
    d + if x_boundary { s1 - 1 } else { 0 } + if y_boundary { s2 - 1 } else { 0 }
}

#[test]
fn degree_law_on_catalog() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut seen = std::collections::BTreeSet::new();
    for fam in quintic_catalog() {
        let (_, s) = random_member(&fam, &mut rng);
        let w = fam.weight;
        let (h, rec) = homogenize_lcm(&s, &w).unwrap();
        let expected = lcm_degree(&s, w.s1, w.s2, w.d);
        assert_eq!(h.degree, expected, "{}", fam.name);
        assert!(h.sys.is_homogeneous());
        assert_eq!(rec.beta, w.s1 * w.s2);
        seen.insert((expected - w.d == 0, expected - w.d == w.s1 - 1));
    }
    assert!(seen.len() >= 2);
}

fn power(v: &Rat, e: i64) -> Rat {
    powi(v, e as i32)
}

/// `x̃^a` for rational `a` and `x̃ = base^k`, where `k·a` is an integer.
fn power_of_power(base: &Rat, k: u32, a: &Rat) -> Rat {
    let e = a * int(k as i64);
    assert!(e.is_integer());
    power(base, e.to_integer().try_into().unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn min_path_conjugacy(k in 0usize..15, seed in any::<u64>(), xn in 1i64..9, xd in 1i64..5, yn in 1i64..9, yd in 1i64..5) {
        let fam = &quintic_catalog()[k];
        let (_, s) = random_member(fam, &mut ChaCha8Rng::seed_from_u64(seed));
        let w = weight_vectors(&s).unwrap().minimal;
        let (h, rec) = homogenize_min(&s, &w).unwrap();
        let sw = if rec.swap_xy { s.swap_xy() } else { s.clone() };
        prop_assert_eq!(rec.apply(&sw).unwrap(), h.sys.clone());
        let (s1, s2) = (rec.weights.s1, rec.weights.s2);
        let (x, y) = (rat(xn, xd), rat(yn, yd));
        let (xt, yt) = (power(&x, s2 as i64), power(&y, s1 as i64));
        let (p, q) = sw.eval(&x, &y);
        let dt = power_of_power(&x, s2, &rec.time_factor.x) * power_of_power(&y, s1, &rec.time_factor.y);
        let lhs = h.sys.eval(&xt, &yt);
        prop_assert_eq!(lhs.0, int(s2 as i64) * power(&x, s2 as i64 - 1) * p * &dt);
        prop_assert_eq!(lhs.1, int(s1 as i64) * power(&y, s1 as i64 - 1) * q * &dt);
    }

    #[test]
    fn lcm_path_conjugacy(k in 0usize..15, seed in any::<u64>(), xn in 1i64..5, xd in 1i64..4, yn in 1i64..5, yd in 1i64..4) {
        let fam = &quintic_catalog()[k];
        let (_, s) = random_member(fam, &mut ChaCha8Rng::seed_from_u64(seed));
        let w = weight_vectors(&s).unwrap().minimal;
        let (h, rec) = homogenize_lcm(&s, &w).unwrap();
        let sw = if rec.swap_xy { s.swap_xy() } else { s.clone() };
        // Start from the chart point; x = x̃^(1/ex) is an integer power.
        let (xt, yt) = (rat(xn, xd), rat(yn, yd));
        let kx = (Rat::one() / &rec.expo_x).to_integer();
        let ky = (Rat::one() / &rec.expo_y).to_integer();
        let (kx, ky): (i64, i64) = (kx.try_into().unwrap(), ky.try_into().unwrap());
        let (x, y) = (power(&xt, kx), power(&yt, ky));
        let (p, q) = sw.eval(&x, &y);
        let dt = power_of_power(&xt, 1, &rec.time_factor.x) * power_of_power(&yt, 1, &rec.time_factor.y);
        let lhs = h.sys.eval(&xt, &yt);
        // dx̃/dt = ex · x^(ex-1) · ẋ with x^(ex-1) = x̃^(1-kx).
        prop_assert_eq!(lhs.0, &rec.expo_x * power(&xt, 1 - kx) * p * &dt);
        prop_assert_eq!(lhs.1, &rec.expo_y * power(&yt, 1 - ky) * q * &dt);
    }

    #[test]
    fn symmetry_follows_parity(k in 0usize..15, seed in any::<u64>()) {
        let fam = &quintic_catalog()[k];
        let (_, s) = random_member(fam, &mut ChaCha8Rng::seed_from_u64(seed));
        let w = weight_vectors(&s).unwrap().minimal;
        let (_, rec) = homogenize_min(&s, &w).unwrap();
        let r = homogenize::reflect_system(&s, rec.symmetry.kind);
        let sign = if rec.symmetry.time_reversed { int(-1) } else { int(1) };
        prop_assert_eq!(r, s.scale(&sign));
    }
}
