use num_traits::Zero;
use polyparse::{
    coprime_check, eval_poly, gcd, int, parse_poly, parse_system, print_system, rat, BiPoly,
    Coprimality, PolySystem, Rat,
};
use proptest::prelude::*;

fn small_rat() -> impl Strategy<Value = Rat> {
    (-9i64..=9, 1i64..=9).prop_map(|(n, d)| rat(n, d))
}

fn poly(max_deg: u32, max_terms: usize) -> impl Strategy<Value = BiPoly> {
    prop::collection::vec(((0..=max_deg), (0..=max_deg), small_rat()), 0..max_terms).prop_map(
        move |ts| {
            BiPoly::from_terms(
                ts.into_iter()
                    .filter(|(i, j, _)| i + j <= max_deg)
                    .map(|(i, j, c)| ((i, j), c)),
            )
        },
    )
}

fn system(max_deg: u32) -> impl Strategy<Value = PolySystem> {
    (poly(max_deg, 10), poly(max_deg, 10)).prop_filter_map("zero component", |(p, q)| {
        PolySystem::new(p, q).ok()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn print_parse_round_trip(s in system(8)) {
        let text = print_system(&s);
        let back = parse_system(&text).unwrap();
        prop_assert_eq!(&back, &s);
        prop_assert_eq!(print_system(&back), text);
    }

    #[test]
    fn eval_matches_termwise_sum(f in poly(8, 12), x in small_rat(), y in small_rat()) {
        let mut acc = Rat::zero();
        for ((i, j), c) in f.terms() {
            let mut t = c.clone();
            for _ in 0..*i { t *= &x; }
            for _ in 0..*j { t *= &y; }
            acc += t;
        }
        prop_assert_eq!(eval_poly(&f, &x, &y), acc);
    }

    #[test]
    fn gcd_divides_and_cofactors_coprime(a in poly(3, 5), b in poly(3, 5), c in poly(2, 4)) {
        prop_assume!(!a.is_zero() && !b.is_zero() && !c.is_zero());
        let p = &a * &c;
        let q = &b * &c;
        let g = gcd(&p, &q);
        let pg = p.div_exact(&g).expect("gcd divides P");
        let qg = q.div_exact(&g).expect("gcd divides Q");
        prop_assert!(gcd(&pg, &qg).is_constant());
        // The planted factor c divides the gcd.
        prop_assert!(g.div_exact(&c.monic()).is_some());
    }
}

#[test]
fn invariant_line_of_cubic_diagonal() {
    // G = xQ - yP for x' = x^3, y' = y^3, expanded by hand: x y^3 - x^3 y.
    let s = parse_system("dx/dt = x^3\ndy/dt = y^3").unwrap();
    let g = &(&BiPoly::x() * s.q()) - &(&BiPoly::y() * s.p());
    assert_eq!(g, BiPoly::from_int_terms(&[(1, 1, 3), (-1, 3, 1)]));
    assert_eq!(eval_poly(&g, &int(1), &int(1)), int(0));
    assert_eq!(eval_poly(&parse_poly("x^2 + y^2").unwrap(), &int(1), &int(2)), int(5));
    assert_eq!(eval_poly(&BiPoly::zero(), &rat(3, 7), &int(-2)), int(0));
}

#[test]
fn coprime_examples() {
    let s = parse_system("dx/dt = x*y^2\ndy/dt = x*y^3").unwrap();
    assert_eq!(
        coprime_check(&s),
        Coprimality::CommonFactor(parse_poly("x*y^2").unwrap())
    );
    let s = parse_system("dx/dt = y^5\ndy/dt = x^4").unwrap();
    assert!(coprime_check(&s).is_coprime());
}
