use homoganalysis::center::CenterEvidence;
use homoganalysis::{
    center_test, char_polys, characteristic_directions, real_roots, CenterVerdict, Direction, LocalType, Sturm,
};
use num_traits::Zero;
use polyparse::{coprime_check, int, rat, BiPoly, PolySystem, Rat, UPoly};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Random coprime homogeneous system of degree `n` with `x Q - y P ≠ 0`.
fn random_homogeneous(n: u32, rng: &mut ChaCha8Rng) -> PolySystem {
    loop {
        let mut p = BiPoly::zero();
        let mut q = BiPoly::zero();
        for i in 0..=n {
            p.add_term((i, n - i), int(rng.gen_range(-4..=4)));
            q.add_term((i, n - i), int(rng.gen_range(-4..=4)));
        }
        let Ok(s) = PolySystem::new(p, q) else { continue };
        if s.degree() != n || !s.is_homogeneous() || !coprime_check(&s).is_coprime() {
            continue;
        }
        if char_polys(&s).is_ok() {
            return s;
        }
    }
}

/// Random H3 normal form `x' = x(c12 y² + c21 xy + c30 x²)`, `y' = y(y² + d12 xy + d21 x²)`.
fn random_h3(rng: &mut ChaCha8Rng) -> PolySystem {
    loop {
        let c: Vec<Rat> = (0..5).map(|_| rat(rng.gen_range(-6..=6), rng.gen_range(1..=3))).collect();
        if c[2].is_zero() {
            continue;
        }
        let p = BiPoly::from_terms([((1, 2), c[0].clone()), ((2, 1), c[1].clone()), ((3, 0), c[2].clone())]);
        let q = BiPoly::from_terms([((0, 3), int(1)), ((1, 2), c[3].clone()), ((2, 1), c[4].clone())]);
        let s = PolySystem::new(p, q).unwrap();
        if coprime_check(&s).is_coprime() && char_polys(&s).is_ok() {
            return s;
        }
    }
}

fn check_invariants(s: &PolySystem) {
    let cp = char_polys(s).unwrap();
    let dirs = characteristic_directions(&cp).unwrap();
    let one_plus_u2 = UPoly::from_ints(&[1, 0, 1]);
    let h_u = cp.h.at_x_one();
    let eq23 = &h_u - &(&one_plus_u2 * &cp.p_u);
    let mut real_mult = 0;
    for d in &dirs {
        // Saddle-node exactly at even multiplicity, at the origin and at infinity.
        let even = d.multiplicity % 2 == 0;
        assert_eq!(d.local_type_blowup == LocalType::SaddleNode, even);
        assert_eq!(d.infinity_type == LocalType::SaddleNode, even);
        if !even {
            let dual = match d.local_type_blowup {
                LocalType::Saddle => LocalType::Node,
                _ => LocalType::Saddle,
            };
            assert_eq!(d.infinity_type, dual);
        }
        match &d.direction {
            Direction::Slope(r) => {
                real_mult += r.multiplicity;
                assert_eq!(r.sign_of(&eq23).unwrap(), 0);
                assert_ne!(r.sign_of(&cp.p_u).unwrap(), 0);
                if let Some(u0) = &r.exact {
                    // y - u0 x divides G and the line is invariant.
                    let line = BiPoly::from_terms([((0, 1), int(1)), ((1, 0), -u0.clone())]);
                    assert!(cp.g.div_exact(&line).is_some());
                    assert_eq!(s.q().eval(&int(1), u0), u0 * s.p().eval(&int(1), u0));
                }
            }
            Direction::Vertical => {
                assert_eq!(d.multiplicity, cp.g_v.zero_multiplicity().unwrap());
                assert!(s.p().eval(&int(0), &int(1)).is_zero());
            }
        }
    }
    let vertical = cp.g_v.zero_multiplicity().unwrap();
    let deg_u = cp.g_u.degree().unwrap();
    assert_eq!(deg_u + vertical, cp.n as usize + 1);
    assert!(real_mult <= deg_u && (deg_u - real_mult).is_multiple_of(2));
}

#[test]
fn h3_and_h2_samples_satisfy_invariants() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..60 {
        check_invariants(&random_h3(&mut rng));
        check_invariants(&random_homogeneous(2, &mut rng));
        check_invariants(&random_homogeneous(3, &mut rng));
    }
}

#[test]
fn h3_always_has_vertical_direction() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..40 {
        let cp = char_polys(&random_h3(&mut rng)).unwrap();
        assert!(cp.g_v.zero_multiplicity().unwrap() >= 1);
        assert_eq!(characteristic_directions(&cp).unwrap().last().unwrap().direction, Direction::Vertical);
    }
}

#[test]
fn even_degree_never_center() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..50 {
        let v = center_test(&random_homogeneous(2, &mut rng)).unwrap();
        assert_eq!(v, CenterVerdict::NotCenter(CenterEvidence::EvenDegree));
    }
}

#[test]
fn linear_focus_integral_matches_eigenvalues() {
    // For eigenvalues α ± iω the return map after a half turn scales r by
    // exp(π α / ω), with ω signed by the rotation sense.
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    let mut checked = 0;
    while checked < 30 {
        let (a, b, c, d) = (
            rng.gen_range(-5i64..=5),
            rng.gen_range(-5i64..=5),
            rng.gen_range(-5i64..=5),
            rng.gen_range(-5i64..=5),
        );
        let alpha = (a + d) as f64 / 2.0;
        let disc = ((a - d) * (a - d) + 4 * b * c) as f64;
        if disc >= 0.0 {
            continue;
        }
        let omega = (-disc).sqrt() / 2.0 * (c as f64).signum();
        let s = PolySystem::new(
            BiPoly::from_int_terms(&[(a, 1, 0), (b, 0, 1)]),
            BiPoly::from_int_terms(&[(c, 1, 0), (d, 0, 1)]),
        )
        .unwrap();
        let expected = std::f64::consts::PI * alpha / omega;
        match center_test(&s).unwrap() {
            CenterVerdict::GlobalCenter(_) => assert_eq!(a + d, 0),
            CenterVerdict::NotCenter(CenterEvidence::PartialFractions { integral }) => {
                assert!((integral - expected).abs() < 1e-9, "{integral} vs {expected}");
            }
            v => panic!("{v:?}"),
        }
        checked += 1;
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn isolated_roots_match_construction(
        rs in proptest::collection::vec((-20i64..=20, 1i64..=4, 1usize..=3), 0..4),
        sq in proptest::collection::vec(2i64..=11, 0..3),
    ) {
        // Product of (u - r)^m and (u² - k) for non-square k.
        let mut f = UPoly::from_ints(&[1]);
        let mut expected: Vec<(f64, usize)> = Vec::new();
        for (n, d, m) in &rs {
            let r = rat(*n, *d);
            if expected.iter().any(|(v, _)| (*v - *n as f64 / *d as f64).abs() < 1e-12) {
                continue;
            }
            f = &f * &UPoly::linear_root(&r).pow(*m as u32);
            expected.push((*n as f64 / *d as f64, *m));
        }
        for k in &sq {
            if [4, 9].contains(k) || expected.iter().any(|(v, _)| (v * v - *k as f64).abs() < 1e-9) {
                continue;
            }
            f = &f * &UPoly::from_ints(&[-k, 0, 1]);
            let rk = (*k as f64).sqrt();
            expected.push((rk, 1));
            expected.push((-rk, 1));
        }
        expected.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
        let roots = real_roots(&f);
        prop_assert_eq!(roots.len(), expected.len());
        for (r, (v, m)) in roots.iter().zip(&expected) {
            prop_assert!((r.to_f64() - v).abs() < 1e-9);
            prop_assert_eq!(r.multiplicity, *m);
            if r.exact.is_none() {
                prop_assert_eq!(Sturm::new(&r.poly).count(&r.lo, &r.hi), 1);
            }
        }
    }

    #[test]
    fn random_cubic_invariants(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        check_invariants(&random_homogeneous(3, &mut rng));
        check_invariants(&random_h3(&mut rng));
    }
}
