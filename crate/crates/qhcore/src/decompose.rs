//! Splitting a quasi-homogeneous system into degree-graded blocks.
//!
//! With minimal weights `s1 > s2`, put `ς = s1 - s2`, `κ = s2` (so
//! `gcd(ς, κ) = 1`). Every monomial pair lies on a block of degree `n - tς`,
//! `t = 0, 1, ...`, whose `P`-monomial is `x^(p+tκ) y^(n-tς-p-tκ)` and whose
//! `Q`-monomial is `x^(p+tκ-1) y^(n-tς-p-tκ+1)`, where
//! `p = (d - 1 + s1 - n s2) / ς`. Block `t = 0` is the leading part `X_n^p`,
//! `t = 1` the part `X_{n-ς}`, and the rest forms the tail `V`.

use crate::error::QhError;
use crate::weights::{minimality_audit, satisfies, WeightVector};
use polyparse::{BiPoly, PolySystem, Rat};
use std::collections::BTreeMap;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum BlockRole {
    Leading,
    Middle,
    Tail,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub degree: u32,
    pub role: BlockRole,
    pub p: BiPoly,
    pub q: BiPoly,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QhStructure {
    pub n: u32,
    pub p: u32,
    pub varsigma: u32,
    pub kappa: u32,
    pub s: u32,
    /// Whether the blocks are expressed with `x` and `y` exchanged.
    pub swapped: bool,
    /// Nonzero blocks ordered by decreasing degree.
    pub parts: Vec<Block>,
}

impl QhStructure {
    /// Catalog-style name `X_{p ς κ}`.
    pub fn name(&self) -> String {
        format!("X_{}{}{}", self.p, self.varsigma, self.kappa)
    }

    /// Sum of the blocks, in the input coordinates.
    pub fn reassemble(&self) -> PolySystem {
        let mut p = BiPoly::zero();
        let mut q = BiPoly::zero();
        for b in &self.parts {
            p = &p + &b.p;
            q = &q + &b.q;
        }
        let s = PolySystem::new(p, q).expect("blocks of a valid system");
        if self.swapped {
            s.swap_xy()
        } else {
            s
        }
    }
}

/// The weight-`(n, 1, 1)` form `x' = a0n y^n + a10 x`, `y' = b01 y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeOneForm {
    pub n: u32,
    pub a0n: Rat,
    pub a10: Rat,
    pub b01: Rat,
    pub swapped: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decomposition {
    Graded(QhStructure),
    DegreeOne(DegreeOneForm),
}

pub fn decompose(s: &PolySystem, w: &WeightVector) -> Result<Decomposition, QhError> {
    if !satisfies(w, s) {
        return Err(QhError::WeightMismatch(w.to_string()));
    }
    if !minimality_audit(w, s) {
        return Err(QhError::NotMinimal(w.to_string()));
    }
    if w.s1 == w.s2 {
        return Err(QhError::Homogeneous);
    }
    let swapped = w.s1 < w.s2;
    let (sys, s1, s2) = if swapped {
        (s.swap_xy(), w.s2, w.s1)
    } else {
        (s.clone(), w.s1, w.s2)
    };
    let n = sys.degree();
    if w.d == 1 {
        return Ok(Decomposition::DegreeOne(DegreeOneForm {
            n,
            a0n: sys.p().coeff(0, n),
            a10: sys.p().coeff(1, 0),
            b01: sys.q().coeff(0, 1),
            swapped,
        }));
    }
    let e = (w.d - 1) as i64;
    let varsigma = s1 - s2;
    let num = e + s1 as i64 - n as i64 * s2 as i64;
    debug_assert_eq!(num.rem_euclid(varsigma as i64), 0);
    let p = (num / varsigma as i64) as u32;

    let mut blocks: BTreeMap<u32, (BiPoly, BiPoly)> = BTreeMap::new();
    for ((i, j), c) in sys.p().terms() {
        let deg = i + j;
        blocks.entry(deg).or_default().0.add_term((*i, *j), c.clone());
    }
    for ((i, j), c) in sys.q().terms() {
        let deg = i + j;
        blocks.entry(deg).or_default().1.add_term((*i, *j), c.clone());
    }
    let parts = blocks
        .into_iter()
        .rev()
        .map(|(degree, (bp, bq))| {
            let t = (n - degree) / varsigma;
            debug_assert_eq!((n - degree) % varsigma, 0);
            Block {
                degree,
                role: match t {
                    0 => BlockRole::Leading,
                    1 => BlockRole::Middle,
                    _ => BlockRole::Tail,
                },
                p: bp,
                q: bq,
            }
        })
        .collect();
    Ok(Decomposition::Graded(QhStructure {
        n,
        p,
        varsigma,
        kappa: s2,
        s: 1,
        swapped,
        parts,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weights::weight_vectors;
    use polyparse::{int, parse_system};

    fn graded(t: &str) -> QhStructure {
        let s = parse_system(t).unwrap();
        let w = weight_vectors(&s).unwrap().minimal;
        match decompose(&s, &w).unwrap() {
            Decomposition::Graded(q) => {
                assert_eq!(q.reassemble(), s);
                q
            }
            d => panic!("{d:?}"),
        }
    }

    #[test]
    fn system_14() {
        let q = graded("dx/dt = y^5 + x*y^3 + x^2*y\ndy/dt = y^4 + x*y^2 + x^2");
        assert_eq!((q.p, q.varsigma, q.kappa, q.s), (0, 1, 1, 1));
        assert_eq!(q.name(), "X_011");
        let degrees: Vec<u32> = q.parts.iter().map(|b| b.degree).collect();
        assert_eq!(degrees, vec![5, 4, 3, 2]);
        let roles: Vec<BlockRole> = q.parts.iter().map(|b| b.role).collect();
        assert_eq!(
            roles,
            vec![BlockRole::Leading, BlockRole::Middle, BlockRole::Tail, BlockRole::Tail]
        );
    }

    #[test]
    fn x114() {
        let q = graded("dx/dt = x*y^4\ndy/dt = y^5 + x^4");
        assert_eq!((q.p, q.varsigma, q.kappa), (1, 1, 4));
    }

    #[test]
    fn swapped_orientation() {
        // X_011 with x and y exchanged: weights (1, 2, 4).
        let q = graded("dx/dt = x^4 + x^2*y + y^2\ndy/dt = x^5 + x^3*y + x*y^2");
        assert!(q.swapped);
        assert_eq!(q.name(), "X_011");
    }

    #[test]
    fn degree_one_branch() {
        let s = parse_system("dx/dt = y^5 + x\ndy/dt = y").unwrap();
        let w = weight_vectors(&s).unwrap().minimal;
        assert_eq!(w.triple(), (5, 1, 1));
        match decompose(&s, &w).unwrap() {
            Decomposition::DegreeOne(f) => {
                assert_eq!(f.n, 5);
                assert_eq!((f.a0n, f.a10, f.b01), (int(1), int(1), int(1)));
            }
            d => panic!("{d:?}"),
        }
    }

    #[test]
    fn rejects_bad_weights() {
        let s = parse_system("dx/dt = y^5 + x*y^3 + x^2*y\ndy/dt = y^4 + x*y^2 + x^2").unwrap();
        assert!(matches!(
            decompose(&s, &WeightVector::new(4, 2, 7)),
            Err(QhError::NotMinimal(_))
        ));
        assert!(matches!(
            decompose(&s, &WeightVector::new(3, 1, 4)),
            Err(QhError::WeightMismatch(_))
        ));
        let h = parse_system("dx/dt = x^3\ndy/dt = y^3").unwrap();
        assert_eq!(decompose(&h, &WeightVector::new(1, 1, 3)), Err(QhError::Homogeneous));
    }
}
