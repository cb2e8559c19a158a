use num_integer::Integer;
use proptest::prelude::*;
use qhcore::sample::random_instance;
use qhcore::{decompose, quintic_catalog, satisfies, weight_vectors, Decomposition, Family};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Expected catalog: name, ẋ support, ẏ support, nonvanishing condition, weights.
const EXPECTED: [(&str, &str, &str, &str, (u32, u32, u32)); 15] = [
    ("X_011", "a05*y^5 + a13*x*y^3 + a21*x^2*y", "b04*y^4 + b12*x*y^2 + b20*x^2", "a05·b20 ≠ 0", (2, 1, 4)),
    ("X_012", "a05*y^5 + a22*x^2*y^2", "b13*x*y^3 + b30*x^3", "a05·b30 ≠ 0", (3, 2, 8)),
    ("X_014", "a05*y^5 + a40*x^4", "b31*x^3*y", "a05·a40·b31 ≠ 0", (5, 4, 16)),
    ("X_015", "a05*y^5", "b40*x^4", "a05·b40 ≠ 0", (6, 5, 20)),
    ("X_021", "a05*y^5 + a12*x*y^2", "b03*y^3 + b10*x", "a05·b10 ≠ 0", (3, 1, 3)),
    ("X_023", "a05*y^5 + a30*x^3", "b21*x^2*y", "a05·a30·b21 ≠ 0", (5, 3, 11)),
    ("X_032", "a05*y^5 + a20*x^2", "b11*x*y", "a05·a20·b11 ≠ 0", (5, 2, 6)),
    ("X_111", "a14*x*y^4 + a22*x^2*y^2 + a30*x^3", "b05*y^5 + b13*x*y^3 + b21*x^2*y", "a30·b05 ≠ 0", (2, 1, 5)),
    ("X_113", "a14*x*y^4 + a40*x^4", "b05*y^5 + b31*x^3*y", "a40·b05 ≠ 0", (4, 3, 13)),
    ("X_114", "a14*x*y^4", "b05*y^5 + b40*x^4", "a14·b05·b40 ≠ 0", (5, 4, 17)),
    ("X_123", "a14*x*y^4", "b05*y^5 + b30*x^3", "a14·b05·b30 ≠ 0", (5, 3, 13)),
    ("X_131", "a14*x*y^4 + a20*x^2", "b05*y^5 + b11*x*y", "a20·b05 ≠ 0", (4, 1, 5)),
    ("X_132", "a14*x*y^4", "b05*y^5 + b20*x^2", "a14·b05·b20 ≠ 0", (5, 2, 9)),
    ("X_141", "a14*x*y^4", "b05*y^5 + b10*x", "a14·b05·b10 ≠ 0", (5, 1, 5)),
    ("X_1", "a05*y^5 + a10*x", "b01*y", "a05·a10·b01 ≠ 0", (5, 1, 1)),
];

#[test]
fn catalog_matches_expected_list() {
    let cat = quintic_catalog();
    assert_eq!(cat.len(), EXPECTED.len());
    for (fam, (name, p, q, cond, w)) in cat.iter().zip(EXPECTED.iter()) {
        assert_eq!(fam.name, *name);
        assert_eq!(fam.symbolic(), (p.to_string(), q.to_string()), "{name}");
        assert_eq!(fam.condition(), *cond, "{name}");
        assert_eq!(fam.weight.triple(), *w, "{name}");
    }
}

fn family(name: &str) -> Family {
    quintic_catalog().into_iter().find(|f| f.name == name).unwrap()
}

#[test]
fn decomposition_names_match_catalog() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for fam in quintic_catalog() {
        for _ in 0..5 {
            let s = random_instance(&fam, &mut rng);
            let w = weight_vectors(&s).unwrap().minimal;
            match decompose(&s, &w).unwrap() {
                Decomposition::Graded(q) => {
                    assert_eq!(q.name(), fam.name);
                    assert_eq!(q.reassemble(), s);
                    assert_eq!(q.parts[0].degree, 5);
                }
                Decomposition::DegreeOne(f) => {
                    assert_eq!(fam.name, "X_1");
                    assert_eq!(f.n, 5);
                }
            }
        }
    }
}

fn family_index() -> impl Strategy<Value = usize> {
    0usize..15
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn minimal_weights_coprime_with_odd_component(k in family_index(), seed in any::<u64>()) {
        let fam = &quintic_catalog()[k];
        let s = random_instance(fam, &mut ChaCha8Rng::seed_from_u64(seed));
        let w = weight_vectors(&s).unwrap().minimal;
        prop_assert_eq!(w.s1.gcd(&w.s2), 1);
        prop_assert!(w.s1 % 2 == 1 || w.s2 % 2 == 1);
    }

    #[test]
    fn scale_closure(k in family_index(), seed in any::<u64>(), r in 1u32..=3) {
        let fam = &quintic_catalog()[k];
        let s = random_instance(fam, &mut ChaCha8Rng::seed_from_u64(seed));
        let set = weight_vectors(&s).unwrap();
        let scaled = set.minimal.scaled(r);
        prop_assert!(satisfies(&scaled, &s));
        let expected = qhcore::WeightVector { minimal: r == 1, ..scaled };
        prop_assert!(set.first(3).contains(&expected));
    }

    #[test]
    fn decompose_reassemble_identity(k in 0usize..14, seed in any::<u64>()) {
        let fam = &quintic_catalog()[k];
        let s = random_instance(fam, &mut ChaCha8Rng::seed_from_u64(seed));
        let w = weight_vectors(&s).unwrap().minimal;
        match decompose(&s, &w).unwrap() {
            Decomposition::Graded(q) => {
                prop_assert_eq!(q.reassemble(), s.clone());
                for b in &q.parts {
                    // Each block obeys the weight relation on its own.
                    for ((i, j), _) in b.p.terms() {
                        prop_assert_eq!(i * w.s1 + j * w.s2, w.s1 + w.d - 1);
                    }
                    for ((i, j), _) in b.q.terms() {
                        prop_assert_eq!(i * w.s1 + j * w.s2, w.s2 + w.d - 1);
                    }
                }
            }
            Decomposition::DegreeOne(_) => prop_assert!(false, "unexpected d = 1"),
        }
    }
}

#[test]
fn x_023_and_x_132_entries() {
    assert_eq!(family("X_023").weight.triple(), (5, 3, 11));
    assert_eq!(family("X_132").weight.triple(), (5, 2, 9));
}
