use homoganalysis::{char_polys, characteristic_directions};
use homogenize::homogenize_min;
use oracle::integrate::{run, RunOptions};
use oracle::*;
use polyparse::{parse_system, PolySystem};
use qhcore::sample::{random_h2_simple, random_h3_simple, random_instance};
use qhcore::{quintic_catalog, weight_vectors};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn sys(t: &str) -> PolySystem {
    parse_system(t).unwrap()
}

#[test]
fn center_orbit_stays_on_level_set() {
    let s = sys("dx/dt = -y^3\ndy/dt = x^3");
    let w = Window::square(2.0).unwrap();
    let tr = integrate(&s, [1.0, 0.0], &w, 1e-10, 100.0).unwrap();
    assert_eq!(tr.termination, Termination::MaxTime);
    let drift = tr
        .points()
        .map(|[x, y]| (x.powi(4) + y.powi(4) - 1.0).abs())
        .fold(0.0, f64::max);
    assert!(drift < 1e-6, "drift {drift}");
    assert!(tr.samples.windows(2).all(|p| p[1].t > p[0].t));
}

#[test]
fn diagonal_cubic_escapes_monotonically() {
    let s = sys("dx/dt = x^3\ndy/dt = y^3");
    let w = Window::square(3.0).unwrap();
    let tr = integrate(&s, [0.1, 0.2], &w, 1e-9, 1e6).unwrap();
    assert_eq!(tr.termination, Termination::EscapedWindow);
    assert!(tr.samples.windows(2).all(|p| p[1].x > p[0].x && p[1].y > p[0].y));
    // The last sample is clipped onto the boundary.
    assert!((tr.last().y - 3.0).abs() < 1e-12);
}

#[test]
fn streamlines_of_center_close() {
    let s = sys("dx/dt = -y^3\ndy/dt = x^3");
    let w = Window::square(1.5).unwrap();
    let lines = streamlines(&s, &w, 16, 1e-10).unwrap();
    let mut closed = 0;
    for tr in &lines {
        match tr.termination {
            Termination::Closed => {
                let (a, b) = (tr.first(), tr.last());
                assert!((a.x - b.x).hypot(a.y - b.y) < 1e-4);
                closed += 1;
            }
            Termination::EscapedWindow => {}
            t => panic!("{t:?}"),
        }
    }
    assert!(closed >= 8, "{closed}");
}

#[test]
fn streamlines_respect_mirror_symmetry() {
    // Invariant under (x, y, t) -> (x, -y, t).
    let s = sys("dx/dt = x^2 - y^2 - 1/4\ndy/dt = 2*x*y + y");
    let w = Window::square(1.0).unwrap();
    let n = 36;
    let seeds = seed_grid(&w, n);
    let lines = streamlines(&s, &w, n, 1e-9).unwrap();
    for (k, tr) in lines.iter().enumerate() {
        let m = seeds
            .iter()
            .position(|z| (z[0] - seeds[k][0]).abs() < 1e-12 && (z[1] + seeds[k][1]).abs() < 1e-12)
            .unwrap();
        let mirrored: Vec<[f64; 2]> = tr.points().map(|[x, y]| [x, -y]).collect();
        let other: Vec<[f64; 2]> = lines[m].points().collect();
        let d = hausdorff(&mirrored, &other);
        assert!(d < 1e-6, "seed {k}: {d}");
    }
}

#[test]
fn parallel_and_sequential_agree() {
    let s = sys("dx/dt = 3*x*y^4 + x^2*y^2 - x^3\ndy/dt = 2*y^5 + x*y^3 + 4*x^2*y");
    let w = Window::square(1.0).unwrap();
    assert_eq!(
        streamlines(&s, &w, 25, 1e-8).unwrap(),
        streamlines_sequential(&s, &w, 25, 1e-8).unwrap()
    );
    assert_eq!(to_csv(&streamlines(&s, &w, 9, 1e-8).unwrap()), to_csv(&streamlines(&s, &w, 9, 1e-8).unwrap()));
}

#[test]
fn csv_and_svg_layout() {
    let s = sys("dx/dt = -y\ndy/dt = x");
    let w: Window = "-1:1,-1:1".parse().unwrap();
    let lines = streamlines(&s, &w, 2, 1e-8).unwrap();
    let csv = to_csv(&lines);
    assert!(csv.starts_with("t,x,y\n"));
    assert_eq!(csv.matches("\n\n").count(), 1);
    let svg = to_svg(&lines, &w);
    assert_eq!(svg.matches("<polyline").count(), 2);
}

/// Exact blow-up types never contradict the probes.
#[test]
fn probes_agree_with_direction_reports() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for k in 0..24 {
        let s = if k % 2 == 0 {
            random_h3_simple(&mut rng)
        } else {
            random_h2_simple(&mut rng)
        };
        let reports = characteristic_directions(&char_polys(&s).unwrap()).unwrap();
        let probes = probe_all(&s, &reports, &[0.05, 0.01], 1e-10).unwrap();
        for (rep, p) in reports.iter().zip(&probes) {
            assert_eq!(p.agrees_with(rep), Some(true), "{}: {rep:?} vs {p:?}", polyparse::print_system(&s));
        }
    }
}

/// The substitution carries orbits of the source onto orbits of the target.
#[test]
fn orbits_survive_homogenization() {
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    for fam in quintic_catalog().iter().filter(|f| f.weight.d > 1) {
        let s = random_instance(fam, &mut rng);
        let w = weight_vectors(&s).unwrap().minimal;
        let (h, t) = homogenize_min(&s, &w).unwrap();
        let src = if t.swap_xy { s.swap_xy() } else { s.clone() };
        let (fs, ft) = (FloatField::new(&src), FloatField::new(&h.sys));
        let seed = [0.3, 0.4];
        let a = run(
            |z| fs.eval_bounded(z),
            seed,
            RunOptions { tol: 1e-11, tmax: 0.5, max_step: 0.01 },
            |st| {
                if st.y1[0] > 0.0 && st.y1[1] > 0.0 {
                    oracle::integrate::Control::Continue
                } else {
                    oracle::integrate::Control::Stop(Termination::EscapedWindow)
                }
            },
        );
        let image: Vec<[f64; 2]> = a
            .points()
            .filter(|z| z[0] > 0.0 && z[1] > 0.0)
            .map(|[x, y]| {
                let (u, v) = t.forward_f64(x, y).unwrap();
                [u, v]
            })
            .collect();
        let arc: f64 = image.windows(2).map(|p| (p[1][0] - p[0][0]).hypot(p[1][1] - p[0][1])).sum();
        let unit = |z: [f64; 2]| {
            let [u, v] = ft.eval(z);
            let n = u.hypot(v);
            [u / n, v / n]
        };
        // Unit speed, so the time budget is an arc length.
        let b = run(
            unit,
            image[0],
            RunOptions { tol: 1e-11, tmax: 1.5 * arc + 1e-3, max_step: 1e-3 },
            |_| oracle::integrate::Control::Continue,
        );
        let target: Vec<[f64; 2]> = b.points().collect();
        let d = directed_hausdorff(&image, &target);
        assert!(arc > 1e-4, "{}", fam.name);
        assert!(d < 1e-5, "{}: {d}", fam.name);
    }
}

mod symmetry {
    use super::*;
    use homogenize::symmetry_type;
    use proptest::prelude::*;

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(60))]

        /// The mirror image of an orbit is the orbit of the mirrored seed.
        #[test]
        fn reflected_seed_gives_reflected_orbit(k in 0usize..15, seed in any::<u64>()) {
            let fam = &quintic_catalog()[k];
            let s = random_instance(fam, &mut ChaCha8Rng::seed_from_u64(seed));
            let sym = symmetry_type(&weight_vectors(&s).unwrap().minimal).unwrap();
            let w = Window::square(2.0).unwrap();
            let p = [0.3, 0.2];
            let (qx, qy) = sym.kind.apply(p[0], p[1]);
            let tmax = if sym.time_reversed { -0.5 } else { 0.5 };
            let a = integrate_with_max_step(&s, p, &w, 1e-10, 0.5, 0.01).unwrap();
            let b = integrate_with_max_step(&s, [qx, qy], &w, 1e-10, tmax, 0.01).unwrap();
            let image: Vec<[f64; 2]> = a.points().map(|[x, y]| {
                let (u, v) = sym.kind.apply(x, y);
                [u, v]
            }).collect();
            let other: Vec<[f64; 2]> = b.points().collect();
            let d = hausdorff(&image, &other);
            prop_assert!(d < 1e-5, "{}: {}", fam.name, d);
        }
    }
}
