//! The catalog of quintic quasi-homogeneous, non-homogeneous systems.
//!
//! Candidates come from the minimal-weight parametrization
//! `s1 = (ς+κ)/s`, `s2 = κ/s`, `d = 1 + ((p-1)ς + (n-1)κ)/s` with
//! `p ∈ 0..n`, `ς ∈ 1..=n-p`, `κ ∈ 1..=n-p-ς+1`, `s = gcd(ς, κ)`. For each
//! weight the full monomial support is generated, and a family survives when
//! its generic member is coprime of degree `n`. A coefficient is required to
//! be nonzero when setting it to zero (others generic) breaks one of these.

use crate::weights::{weight_vectors, WeightVector};
use num_integer::Integer;
use polyparse::{coprime_check, int, BiPoly, Mono, PolySystem, Rat};
use std::collections::BTreeMap;
use std::fmt;

/// Which component a coefficient belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Component {
    P,
    Q,
}

/// Coefficient `a_ij` (of `P`) or `b_ij` (of `Q`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coef {
    pub comp: Component,
    pub i: u32,
    pub j: u32,
}

impl Coef {
    pub fn a(i: u32, j: u32) -> Self {
        Coef {
            comp: Component::P,
            i,
            j,
        }
    }

    pub fn b(i: u32, j: u32) -> Self {
        Coef {
            comp: Component::Q,
            i,
            j,
        }
    }
}

impl fmt::Display for Coef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letter = match self.comp {
            Component::P => 'a',
            Component::Q => 'b',
        };
        if self.i < 10 && self.j < 10 {
            write!(f, "{letter}{}{}", self.i, self.j)
        } else {
            write!(f, "{letter}{}_{}", self.i, self.j)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Family {
    pub name: String,
    pub n: u32,
    pub p: u32,
    pub varsigma: u32,
    pub kappa: u32,
    pub weight: WeightVector,
    pub p_support: Vec<Mono>,
    pub q_support: Vec<Mono>,
    pub required_nonzero: Vec<Coef>,
}

impl Family {
    pub fn coefficients(&self) -> Vec<Coef> {
        self.p_support
            .iter()
            .map(|&(i, j)| Coef::a(i, j))
            .chain(self.q_support.iter().map(|&(i, j)| Coef::b(i, j)))
            .collect()
    }

    /// Member with the given coefficient values (missing ones are zero).
    /// Returns `None` if a component vanishes.
    pub fn instance(&self, values: &BTreeMap<Coef, Rat>) -> Option<PolySystem> {
        let mut p = BiPoly::zero();
        let mut q = BiPoly::zero();
        for (c, v) in values {
            match c.comp {
                Component::P if self.p_support.contains(&(c.i, c.j)) => p.add_term((c.i, c.j), v.clone()),
                Component::Q if self.q_support.contains(&(c.i, c.j)) => q.add_term((c.i, c.j), v.clone()),
                _ => panic!("{c} is not a coefficient of {}", self.name),
            }
        }
        PolySystem::new(p, q).ok()
    }

    /// The condition in the form `a05·b20 ≠ 0`.
    pub fn condition(&self) -> String {
        let names: Vec<String> = self.required_nonzero.iter().map(|c| c.to_string()).collect();
        format!("{} ≠ 0", names.join("·"))
    }

    /// Right-hand sides with symbolic coefficient names, e.g. `a05*y^5 + a13*x*y^3`.
    pub fn symbolic(&self) -> (String, String) {
        fn side(letter: char, sup: &[Mono]) -> String {
            let mut terms: Vec<Mono> = sup.to_vec();
            terms.sort_by_key(|&(i, j)| (std::cmp::Reverse(i + j), i));
            terms
                .iter()
                .map(|&(i, j)| {
                    let mut t = format!("{letter}{i}{j}");
                    for (v, e) in [("x", i), ("y", j)] {
                        match e {
                            0 => {}
                            1 => t.push_str(&format!("*{v}")),
                            _ => t.push_str(&format!("*{v}^{e}")),
                        }
                    }
                    t
                })
                .collect::<Vec<_>>()
                .join(" + ")
        }
        (side('a', &self.p_support), side('b', &self.q_support))
    }
}

fn support(n: u32, s1: u32, s2: u32, e: u32) -> (Vec<Mono>, Vec<Mono>) {
    let (s1, s2, e) = (s1 as i64, s2 as i64, e as i64);
    let mut ps = Vec::new();
    let mut qs = Vec::new();
    for i in 0..=n {
        for j in 0..=(n - i) {
            let (ii, jj) = (i as i64, j as i64);
            if (ii - 1) * s1 + jj * s2 == e {
                ps.push((i, j));
            }
            if ii * s1 + (jj - 1) * s2 == e {
                qs.push((i, j));
            }
        }
    }
    (ps, qs)
}

/// Deterministic "generic" coefficient values: distinct primes.
fn generic_values(coefs: &[Coef], skip: Option<Coef>) -> BTreeMap<Coef, Rat> {
    const PRIMES: [i64; 16] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53];
    coefs
        .iter()
        .enumerate()
        .filter(|(_, c)| Some(**c) != skip)
        .map(|(k, c)| (*c, int(PRIMES[k % PRIMES.len()] * if k % 2 == 0 { 1 } else { -1 })))
        .collect()
}

fn admissible(fam: &Family, values: &BTreeMap<Coef, Rat>, n: u32) -> bool {
    match fam.instance(values) {
        Some(s) => s.degree() == n && coprime_check(&s).is_coprime(),
        None => false,
    }
}

/// Families of degree-`n` quasi-homogeneous, non-homogeneous systems.
pub fn catalog(n: u32) -> Vec<Family> {
    let mut seen = BTreeMap::new();
    let mut out = Vec::new();
    for p in 0..n {
        for varsigma in 1..=(n - p) {
            for kappa in 1..=(n - p - varsigma + 1) {
                let s = varsigma.gcd(&kappa);
                let (s1, s2) = ((varsigma + kappa) / s, kappa / s);
                let dm1 = (p as i64 - 1) * varsigma as i64 + (n as i64 - 1) * kappa as i64;
                if dm1 < 0 {
                    continue;
                }
                let e = (dm1 / s as i64) as u32;
                if seen.insert((p, s1, s2), ()).is_some() {
                    continue;
                }
                let (ps, qs) = support(n, s1, s2, e);
                let d = e + 1;
                let name = if d == 1 {
                    "X_1".to_string()
                } else {
                    format!("X_{}{}{}", p, s1 - s2, s2)
                };
                let mut fam = Family {
                    name,
                    n,
                    p,
                    varsigma: s1 - s2,
                    kappa: s2,
                    weight: WeightVector {
                        s1,
                        s2,
                        d,
                        minimal: true,
                    },
                    p_support: ps,
                    q_support: qs,
                    required_nonzero: Vec::new(),
                };
                let coefs = fam.coefficients();
                if !admissible(&fam, &generic_values(&coefs, None), n) {
                    continue;
                }
                fam.required_nonzero = coefs
                    .iter()
                    .copied()
                    .filter(|c| !admissible(&fam, &generic_values(&coefs, Some(*c)), n))
                    .collect();
                let generic = fam.instance(&generic_values(&coefs, None)).expect("admissible");
                debug_assert_eq!(
                    weight_vectors(&generic).map(|w| w.minimal.triple()),
                    Ok((s1, s2, d))
                );
                out.push(fam);
            }
        }
    }
    out.sort_by_key(|f| (f.weight.d == 1, f.p, f.varsigma, f.kappa));
    out
}

/// The fifteen quintic families.
pub fn quintic_catalog() -> Vec<Family> {
    catalog(5)
}
