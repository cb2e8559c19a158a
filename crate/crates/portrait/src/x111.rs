//! Sign signatures of the cubic target of `X_111` and the figure tables.
//!
//! After dividing by `d03` the target is
//! `ẋ = x(c12 y² + c21 xy + c30 x²)`, `ẏ = y(y² + d12 xy + d21 x²)` with
//! `P̂(u) = c12 u² + c21 u + c30` and
//! `Ĝ(u) = u(A u² + B u + C)`, `A = 1 - c12`, `B = d12 - c21`, `C = d21 - c30`.
//! The rows of the two tables are sign conditions on `P̂` and on the first
//! nonvanishing derivative of `Ĝ` at its real zeros.

use crate::code::{homogeneous_portrait, pull_back, InfinityKind, InfinityPoint, InfinityRing, PortraitCode};
use crate::error::PortraitError;
use homoganalysis::{real_roots, AlgebraicRoot, Stability};
use homogenize::homogenize_min;
use num_traits::{One, Signed, Zero};
use polyparse::rat::sign;
use polyparse::{int, rat, BiPoly, PolySystem, Rat, UPoly};
use qhcore::WeightVector;
use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

const X111_P: [(u32, u32); 3] = [(1, 4), (2, 2), (3, 0)];
const X111_Q: [(u32, u32); 3] = [(0, 5), (1, 3), (2, 1)];

/// Position of `a14` relative to 1, in the source coefficients.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum A14Regime {
    Greater,
    Less,
    Equal,
}

impl A14Regime {
    pub fn of(a14: &Rat) -> Self {
        match a14.cmp(&Rat::one()) {
            Ordering::Greater => A14Regime::Greater,
            Ordering::Less => A14Regime::Less,
            Ordering::Equal => A14Regime::Equal,
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            A14Regime::Greater => "a14>1",
            A14Regime::Less => "a14<1",
            A14Regime::Equal => "a14=1",
        }
    }

    pub const ALL: [A14Regime; 3] = [A14Regime::Greater, A14Regime::Less, A14Regime::Equal];
}

/// Normalized cubic coefficients (`d03 = 1`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct H3Coeffs {
    pub c12: Rat,
    pub c21: Rat,
    pub c30: Rat,
    pub d12: Rat,
    pub d21: Rat,
}

impl H3Coeffs {
    pub fn system(&self) -> PolySystem {
        let p = BiPoly::from_terms([
            ((1, 2), self.c12.clone()),
            ((2, 1), self.c21.clone()),
            ((3, 0), self.c30.clone()),
        ]);
        let q = BiPoly::from_terms([
            ((0, 3), Rat::one()),
            ((1, 2), self.d12.clone()),
            ((2, 1), self.d21.clone()),
        ]);
        PolySystem::new(p, q).expect("q has a y³ term")
    }

    /// Image under `x -> -x`, which maps `u` to `-u`.
    pub fn reflected(&self) -> Self {
        H3Coeffs {
            c21: -&self.c21,
            d12: -&self.d12,
            ..self.clone()
        }
    }

    pub fn p_hat(&self) -> UPoly {
        UPoly::new(vec![self.c30.clone(), self.c21.clone(), self.c12.clone()])
    }

    pub fn g_hat(&self) -> UPoly {
        let (a, b, c) = self.abc();
        UPoly::new(vec![Rat::zero(), c, b, a])
    }

    fn abc(&self) -> (Rat, Rat, Rat) {
        (
            Rat::one() - &self.c12,
            &self.d12 - &self.c21,
            &self.d21 - &self.c30,
        )
    }

    pub fn delta(&self) -> Rat {
        let (a, b, c) = self.abc();
        &b * &b - int(4) * a * c
    }

    /// Members of `X_111` with the given `a14` whose target normalizes to
    /// these coefficients (`c12 ≠ 0`, or `c12 = 0` with `a14 = 0`).
    pub fn x111_instance(&self, a14: &Rat) -> Option<PolySystem> {
        let b05 = if self.c12.is_zero() {
            if !a14.is_zero() {
                return None;
            }
            rat(1, 2)
        } else {
            if a14.is_zero() {
                return None;
            }
            a14 / (int(2) * &self.c12)
        };
        let two_b = int(2) * &b05;
        let p = BiPoly::from_terms([
            ((1, 4), a14.clone()),
            ((2, 2), &two_b * &self.c21),
            ((3, 0), &two_b * &self.c30),
        ]);
        let q = BiPoly::from_terms([
            ((0, 5), b05.clone()),
            ((1, 3), &b05 * &self.d12),
            ((2, 1), &b05 * &self.d21),
        ]);
        PolySystem::new(p, q).ok()
    }
}

impl fmt::Display for H3Coeffs {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "c12={}, c21={}, c30={}, d12={}, d21={}",
            self.c12, self.c21, self.c30, self.d12, self.d21
        )
    }
}

/// Which of the cases splits the zeros of `Ĝ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RootCase {
    /// `Δ > 0`, `C ≠ 0`, `A ≠ 0`: zeros `0`, `u₊`, `u₋`.
    Three,
    /// `C = 0`, `A B ≠ 0`: `u11 = B / (c12 - 1)`, zero `0` double.
    U11,
    /// `A = 0`, `B C ≠ 0`: `u12 = (c30 - d21) / B`.
    U12,
    /// `Δ = 0`, `B ≠ 0`: double zero `u13 = -B / (2A)`.
    U13,
    /// `Δ < 0`, `A C ≠ 0`.
    C31,
    /// `A = 0`, `B = 0`, `C ≠ 0`.
    C32,
    /// `C = 0` and `A B = 0`, not both zero.
    C33,
}

impl RootCase {
    pub fn as_str(&self) -> &'static str {
        match self {
            RootCase::Three => "three-roots",
            RootCase::U11 => "two-roots(u11)",
            RootCase::U12 => "two-roots(u12)",
            RootCase::U13 => "two-roots(u13)",
            RootCase::C31 => "one-root(C31)",
            RootCase::C32 => "one-root(C32)",
            RootCase::C33 => "one-root(C33)",
        }
    }
}

/// Signs at one nonzero zero of `Ĝ`.
#[derive(Clone, Debug, PartialEq)]
pub struct RootSigns {
    pub root: AlgebraicRoot,
    /// Sign of `P̂` at the zero.
    pub p: i8,
    /// Order of the first nonvanishing derivative of `Ĝ` there, and its sign.
    pub g_order: usize,
    pub g: i8,
}

#[derive(Clone, Debug, PartialEq)]
pub struct H3Signature {
    pub coeffs: H3Coeffs,
    pub regime: A14Regime,
    /// Sign of `a14/b05 - 1`, which decides the type of the singular point at
    /// the end of the `y`-axis.
    pub i1_sign: i8,
    pub delta: Rat,
    pub root_case: RootCase,
    /// Nonzero zeros of `Ĝ` in increasing order.
    pub roots: Vec<RootSigns>,
    /// Order and sign of the first nonvanishing derivative of `Ĝ` at 0.
    pub g0: (usize, i8),
    /// `P̂(0) = c30`.
    pub p0: i8,
    /// The signature was taken after `x -> -x` to make the single nonzero zero positive.
    pub reflected: bool,
}

impl H3Signature {
    /// The zeros straddle the origin (`u₋ < 0 < u₊`).
    pub fn straddles(&self) -> bool {
        let zero = AlgebraicRoot::rational(Rat::zero(), 1);
        self.roots.len() == 2
            && self.roots[0].root.cmp_value(&zero) == Ordering::Less
            && self.roots[1].root.cmp_value(&zero) == Ordering::Greater
    }

    pub fn tuple(&self) -> String {
        let s = |v: i8| match v {
            1 => "+",
            -1 => "-",
            _ => "0",
        };
        let mut parts = vec![self.root_case.as_str().to_string()];
        for (k, r) in self.roots.iter().enumerate() {
            parts.push(format!(
                "u{}: P{} G{}{}",
                k + 1,
                s(r.p),
                "'".repeat(r.g_order),
                s(r.g)
            ));
        }
        parts.push(format!("0: G{}{}", "'".repeat(self.g0.0), s(self.g0.1)));
        parts.push(format!("P(0){}", s(self.p0)));
        if self.root_case == RootCase::Three && !self.straddles() {
            parts.push("same-side".into());
        }
        parts.join(", ")
    }
}

impl fmt::Display for H3Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [{}]", self.regime.as_str(), self.tuple())
    }
}

fn classify_case(c: &H3Coeffs) -> Result<RootCase, PortraitError> {
    let (a, b, cc) = c.abc();
    let d = c.delta();
    let (az, bz, cz) = (a.is_zero(), b.is_zero(), cc.is_zero());
    Ok(match (az, bz, cz) {
        (true, true, true) => return Err(PortraitError::CommonFactor),
        (false, _, false) if d.is_positive() => RootCase::Three,
        (false, false, false) if d.is_zero() => RootCase::U13,
        (false, _, false) => RootCase::C31,
        (false, false, true) => RootCase::U11,
        (false, true, true) => RootCase::C33,
        (true, false, false) => RootCase::U12,
        (true, true, false) => RootCase::C32,
        (true, false, true) => RootCase::C33,
    })
}

/// First `k >= 1` with `f^(k)(r) ≠ 0`, and that sign.
fn first_derivative_sign(f: &UPoly, r: &AlgebraicRoot) -> Result<(usize, i8), PortraitError> {
    let mut d = f.clone();
    for k in 1..=3 {
        d = d.derivative();
        let s = r.sign_of(&d)?;
        if s != 0 {
            return Ok((k, s));
        }
    }
    Err(PortraitError::Inconsistent("Ĝ vanishes identically".into()))
}

/// Signature of normalized cubic coefficients under the given regime.
pub fn h3_signature(c: &H3Coeffs, regime: A14Regime, i1_sign: i8) -> Result<H3Signature, PortraitError> {
    signature(c, regime, i1_sign, false)
}

fn signature(
    c: &H3Coeffs,
    regime: A14Regime,
    i1_sign: i8,
    reflected: bool,
) -> Result<H3Signature, PortraitError> {
    let case = classify_case(c)?;
    if c.c30.is_zero() {
        return Err(PortraitError::CommonFactor);
    }
    let g = c.g_hat();
    let p = c.p_hat();
    let zero = AlgebraicRoot::rational(Rat::zero(), 1);
    let mut roots = Vec::new();
    let mut g0 = (0, 0);
    for r in real_roots(&g) {
        let (g_order, gs) = first_derivative_sign(&g, &r)?;
        if r.cmp_value(&zero) == Ordering::Equal {
            g0 = (g_order, gs);
            continue;
        }
        let ps = r.sign_of(&p)?;
        if ps == 0 {
            return Err(PortraitError::CommonFactor);
        }
        roots.push(RootSigns {
            root: r,
            p: ps,
            g_order,
            g: gs,
        });
    }
    roots.sort_by(|a, b| a.root.cmp_value(&b.root));
    let single = matches!(case, RootCase::U11 | RootCase::U12 | RootCase::U13);
    if single && !reflected && roots[0].root.cmp_value(&zero) == Ordering::Less {
        return signature(&c.reflected(), regime, i1_sign, true);
    }
    Ok(H3Signature {
        coeffs: c.clone(),
        regime,
        i1_sign,
        delta: c.delta(),
        root_case: case,
        roots,
        g0,
        p0: sign(&c.c30),
        reflected,
    })
}

fn x111_coefficient(s: &PolySystem, p_side: bool, m: (u32, u32)) -> Rat {
    if p_side {
        s.p().coeff(m.0, m.1)
    } else {
        s.q().coeff(m.0, m.1)
    }
}

/// Normalized cubic target of an `X_111` member, computed through the
/// minimal-path homogenization and divided by `d03`.
pub fn x111_target(q: &PolySystem) -> Result<H3Coeffs, PortraitError> {
    let wrong = |reason: String| PortraitError::WrongFamily {
        family: "X_111",
        reason,
    };
    if let Some(m) = q.p().support().find(|m| !X111_P.contains(m)) {
        return Err(wrong(format!("x' has the monomial x^{}y^{}", m.0, m.1)));
    }
    if let Some(m) = q.q().support().find(|m| !X111_Q.contains(m)) {
        return Err(wrong(format!("y' has the monomial x^{}y^{}", m.0, m.1)));
    }
    if x111_coefficient(q, true, (3, 0)).is_zero() || x111_coefficient(q, false, (0, 5)).is_zero() {
        return Err(wrong("a30·b05 = 0".into()));
    }
    let w = WeightVector {
        s1: 2,
        s2: 1,
        d: 5,
        minimal: true,
    };
    let (h, _) = homogenize_min(q, &w)?;
    let d03 = h.sys.q().coeff(0, 3);
    let n = |b: &BiPoly, i, j| b.coeff(i, j) / &d03;
    Ok(H3Coeffs {
        c12: n(h.sys.p(), 1, 2),
        c21: n(h.sys.p(), 2, 1),
        c30: n(h.sys.p(), 3, 0),
        d12: n(h.sys.q(), 1, 2),
        d21: n(h.sys.q(), 2, 1),
    })
}

pub fn x111_signature(q: &PolySystem) -> Result<H3Signature, PortraitError> {
    let c = x111_target(q)?;
    let a14 = q.p().coeff(1, 4);
    let b05 = q.q().coeff(0, 5);
    let i1 = sign(&(&a14 / &b05 - Rat::one()));
    h3_signature(&c, A14Regime::of(&a14), i1)
}

// ---------------------------------------------------------------------------
// Tables

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PPat {
    Pos,
    Neg,
    Mixed,
}

/// One alternative of a table row. `None` for a derivative sign means only
/// "nonzero" is required.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Alt {
    ThreeRoots { p: PPat, g: Option<i8>, p0: i8 },
    TwoRoots { case: RootCase, p: i8, g: Option<i8>, p0: i8 },
    OneRoot { cases: &'static [RootCase], order: usize, g: Option<i8>, p0: i8 },
}

impl Alt {
    pub fn matches(&self, s: &H3Signature) -> bool {
        let g_ok = |want: Option<i8>, have: i8| want.is_none_or(|w| w == have);
        match *self {
            Alt::ThreeRoots { p, g, p0 } => {
                if s.root_case != RootCase::Three || !s.straddles() || s.p0 != p0 {
                    return false;
                }
                let (a, b) = (&s.roots[0], &s.roots[1]);
                let p_ok = match p {
                    PPat::Pos => a.p > 0 && b.p > 0,
                    PPat::Neg => a.p < 0 && b.p < 0,
                    PPat::Mixed => a.p * b.p < 0,
                };
                p_ok && a.g == b.g && g_ok(g, a.g)
            }
            Alt::TwoRoots { case, p, g, p0 } => {
                s.root_case == case && s.p0 == p0 && s.roots[0].p == p && g_ok(g, s.roots[0].g)
            }
            Alt::OneRoot { cases, order, g, p0 } => {
                cases.contains(&s.root_case) && s.g0.0 == order && s.p0 == p0 && g_ok(g, s.g0.1)
            }
        }
    }
}

impl fmt::Display for Alt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = |v: i8| if v > 0 { ">0" } else { "<0" };
        let g = |v: Option<i8>| v.map_or("≠0", s);
        match self {
            Alt::ThreeRoots { p, g: gs, p0 } => {
                let ps = match p {
                    PPat::Pos => "P(u±)>0",
                    PPat::Neg => "P(u±)<0",
                    PPat::Mixed => "P(u+)P(u-)<0",
                };
                write!(f, "three-roots, {ps}, G'(u±){}, P(0){}", g(*gs), s(*p0))
            }
            Alt::TwoRoots { case, p, g: gs, p0 } => {
                let d = if *case == RootCase::U13 { "G''" } else { "G'" };
                write!(f, "{}, P(u1){}, {d}(u1){}, P(0){}", case.as_str(), s(*p), g(*gs), s(*p0))
            }
            Alt::OneRoot { cases, order, g: gs, p0 } => {
                let names: Vec<_> = cases.iter().map(|c| c.as_str()).collect();
                write!(
                    f,
                    "{}, G{}(0){}, P(0){}",
                    names.join(" or "),
                    "'".repeat(*order),
                    g(*gs),
                    s(*p0)
                )
            }
        }
    }
}

pub struct Row {
    pub label: &'static str,
    pub alts: &'static [Alt],
}

use Alt::{OneRoot, ThreeRoots, TwoRoots};
use PPat::{Mixed, Neg, Pos};
use RootCase::{C31, C32, C33, U11, U12, U13};

/// Rows for `a14 > 1`.
pub const TABLE_GREATER: &[Row] = &[
    Row {
        label: "I",
        alts: &[
            ThreeRoots { p: Pos, g: None, p0: 1 },
            TwoRoots { case: U11, p: 1, g: None, p0: 1 },
            TwoRoots { case: U12, p: 1, g: None, p0: 1 },
            TwoRoots { case: U13, p: 1, g: None, p0: 1 },
            OneRoot { cases: &[C31, C32], order: 1, g: None, p0: 1 },
            OneRoot { cases: &[C33], order: 3, g: None, p0: 1 },
            OneRoot { cases: &[C33], order: 2, g: None, p0: 1 },
        ],
    },
    Row { label: "II", alts: &[ThreeRoots { p: Neg, g: Some(1), p0: 1 }] },
    Row { label: "III.1", alts: &[ThreeRoots { p: Pos, g: Some(1), p0: -1 }] },
    Row {
        label: "III.2",
        alts: &[
            ThreeRoots { p: Mixed, g: Some(-1), p0: 1 },
            TwoRoots { case: U11, p: -1, g: Some(-1), p0: 1 },
            TwoRoots { case: U12, p: -1, g: Some(-1), p0: 1 },
        ],
    },
    Row { label: "III.3", alts: &[ThreeRoots { p: Neg, g: Some(-1), p0: -1 }] },
    Row { label: "IV.1", alts: &[ThreeRoots { p: Pos, g: Some(-1), p0: -1 }] },
    Row {
        label: "IV.2",
        alts: &[
            ThreeRoots { p: Mixed, g: Some(1), p0: 1 },
            TwoRoots { case: U11, p: -1, g: Some(1), p0: 1 },
        ],
    },
    Row { label: "IV.3", alts: &[ThreeRoots { p: Neg, g: Some(1), p0: -1 }] },
    Row { label: "V.1", alts: &[ThreeRoots { p: Mixed, g: Some(1), p0: -1 }] },
    Row { label: "V.2", alts: &[ThreeRoots { p: Mixed, g: Some(-1), p0: -1 }] },
    Row { label: "VI.1", alts: &[TwoRoots { case: U11, p: 1, g: Some(1), p0: -1 }] },
    Row { label: "VI.2", alts: &[TwoRoots { case: U12, p: -1, g: Some(-1), p0: -1 }] },
    Row { label: "VI.3", alts: &[TwoRoots { case: U13, p: -1, g: Some(1), p0: 1 }] },
    Row { label: "VI.4", alts: &[TwoRoots { case: U13, p: -1, g: Some(-1), p0: 1 }] },
    Row { label: "VI.5", alts: &[TwoRoots { case: U11, p: 1, g: Some(-1), p0: -1 }] },
    Row { label: "VI.6", alts: &[TwoRoots { case: U12, p: -1, g: Some(1), p0: -1 }] },
    Row {
        label: "VII.1",
        alts: &[
            TwoRoots { case: U12, p: 1, g: Some(-1), p0: -1 },
            TwoRoots { case: U13, p: 1, g: Some(1), p0: -1 },
        ],
    },
    Row { label: "VII.2", alts: &[TwoRoots { case: U12, p: -1, g: Some(1), p0: 1 }] },
    Row {
        label: "VII.3",
        alts: &[
            TwoRoots { case: U11, p: -1, g: Some(1), p0: -1 },
            TwoRoots { case: U13, p: -1, g: Some(1), p0: -1 },
        ],
    },
    Row {
        label: "VIII.1",
        alts: &[
            TwoRoots { case: U12, p: 1, g: Some(1), p0: -1 },
            TwoRoots { case: U13, p: 1, g: Some(-1), p0: -1 },
        ],
    },
    Row {
        label: "VIII.2",
        alts: &[
            TwoRoots { case: U11, p: -1, g: Some(-1), p0: -1 },
            TwoRoots { case: U13, p: -1, g: Some(-1), p0: -1 },
        ],
    },
    Row {
        label: "IX",
        alts: &[
            OneRoot { cases: &[C31], order: 1, g: Some(1), p0: -1 },
            OneRoot { cases: &[C32], order: 1, g: Some(1), p0: -1 },
            OneRoot { cases: &[C33], order: 3, g: Some(1), p0: -1 },
        ],
    },
    Row {
        label: "X",
        alts: &[
            OneRoot { cases: &[C31, C32], order: 1, g: Some(-1), p0: -1 },
            OneRoot { cases: &[C33], order: 3, g: Some(-1), p0: -1 },
        ],
    },
    Row { label: "XI", alts: &[OneRoot { cases: &[C33], order: 2, g: None, p0: -1 }] },
];

/// Rows for `a14 < 1`, reused for `a14 = 1`.
pub const TABLE_LESS: &[Row] = &[
    Row { label: "𝓘", alts: &[ThreeRoots { p: Pos, g: Some(1), p0: 1 }] },
    Row { label: "𝓘𝓘", alts: &[ThreeRoots { p: Neg, g: Some(1), p0: 1 }] },
    Row { label: "𝓘𝓘𝓘", alts: &[ThreeRoots { p: Pos, g: Some(1), p0: -1 }] },
    Row { label: "𝓘𝓥.1", alts: &[ThreeRoots { p: Neg, g: Some(1), p0: -1 }] },
    Row { label: "𝓘𝓥.2", alts: &[ThreeRoots { p: Mixed, g: Some(1), p0: 1 }] },
    Row { label: "𝓥", alts: &[ThreeRoots { p: Mixed, g: Some(1), p0: -1 }] },
    Row {
        label: "𝓥𝓘",
        alts: &[
            TwoRoots { case: U11, p: 1, g: Some(1), p0: 1 },
            TwoRoots { case: U13, p: 1, g: Some(1), p0: 1 },
        ],
    },
    Row { label: "𝓥𝓘𝓘.1", alts: &[TwoRoots { case: U11, p: 1, g: Some(1), p0: -1 }] },
    Row { label: "𝓥𝓘𝓘.2", alts: &[TwoRoots { case: U13, p: -1, g: Some(1), p0: 1 }] },
    Row { label: "𝓥𝓘𝓘𝓘.1", alts: &[TwoRoots { case: U11, p: -1, g: Some(1), p0: 1 }] },
    Row {
        label: "𝓥𝓘𝓘𝓘.2",
        alts: &[
            TwoRoots { case: U11, p: -1, g: Some(1), p0: -1 },
            TwoRoots { case: U13, p: -1, g: Some(1), p0: -1 },
        ],
    },
    Row { label: "𝓥𝓘𝓘𝓘.3", alts: &[TwoRoots { case: U13, p: 1, g: Some(1), p0: -1 }] },
    Row {
        label: "𝓘𝓧",
        alts: &[
            OneRoot { cases: &[C33], order: 3, g: Some(1), p0: -1 },
            OneRoot { cases: &[C31], order: 1, g: Some(1), p0: -1 },
        ],
    },
    Row {
        label: "𝓧",
        alts: &[
            OneRoot { cases: &[C31], order: 1, g: Some(1), p0: 1 },
            OneRoot { cases: &[C33], order: 3, g: Some(1), p0: 1 },
        ],
    },
];

pub fn table(regime: A14Regime) -> &'static [Row] {
    match regime {
        A14Regime::Greater => TABLE_GREATER,
        A14Regime::Less | A14Regime::Equal => TABLE_LESS,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct X111Label {
    pub regime: A14Regime,
    pub figure: &'static str,
}

impl fmt::Display for X111Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} / Figure ({})", self.regime.as_str(), self.figure)
    }
}

/// Figure label of the row whose sign conditions the signature satisfies.
pub fn x111_label(sig: &H3Signature) -> Result<X111Label, PortraitError> {
    let hits: BTreeSet<&'static str> = table(sig.regime)
        .iter()
        .filter(|row| row.alts.iter().any(|a| a.matches(sig)))
        .map(|row| row.label)
        .collect();
    match hits.len() {
        0 => Err(PortraitError::NoRowMatched(sig.to_string())),
        1 => Ok(X111Label {
            regime: sig.regime,
            figure: hits.into_iter().next().expect("one hit"),
        }),
        _ => Err(PortraitError::Ambiguous {
            signature: sig.to_string(),
            labels: hits.into_iter().map(String::from).collect(),
        }),
    }
}

/// Signature, figure label and pulled-back code of an `X_111` member.
#[derive(Clone, Debug, PartialEq)]
pub struct X111Report {
    pub signature: H3Signature,
    pub label: Option<X111Label>,
    pub code: PortraitCode,
    /// Table mismatches and regime remarks.
    pub warnings: Vec<String>,
}

pub fn x111_portrait(q: &PolySystem) -> Result<X111Report, PortraitError> {
    let signature = x111_signature(q)?;
    let mut warnings = Vec::new();
    let label = match x111_label(&signature) {
        Ok(l) => Some(l),
        Err(e @ (PortraitError::NoRowMatched(_) | PortraitError::Ambiguous { .. })) => {
            warnings.push(e.to_string());
            None
        }
        Err(e) => return Err(e),
    };
    let table_i1 = match signature.regime {
        A14Regime::Greater => 1,
        A14Regime::Less => -1,
        A14Regime::Equal => 0,
    };
    if table_i1 != signature.i1_sign {
        warnings.push(format!(
            "table chosen by {} but a14/b05 - 1 has sign {}, which fixes the point at the end of the y-axis",
            signature.regime.as_str(),
            signature.i1_sign
        ));
    }
    let w = WeightVector {
        s1: 2,
        s2: 1,
        d: 5,
        minimal: true,
    };
    let (h, t) = homogenize_min(q, &w)?;
    let (_, homogeneous) = homogeneous_portrait(&h.sys)?;
    let mut code = pull_back(&homogeneous, &t)?;
    code.figure_label = label.map(|l| l.to_string());
    let i0 = InfinityPoint {
        at: "end of the x-axis".into(),
        kind: InfinityKind::Degenerate,
        stability: None,
    };
    code.infinity = match signature.i1_sign {
        0 => InfinityRing::Filled,
        s => InfinityRing::Points(vec![
            i0,
            InfinityPoint {
                at: "end of the y-axis".into(),
                kind: if s > 0 { InfinityKind::Saddle } else { InfinityKind::Node },
                stability: (s < 0).then_some(Stability::Stable),
            },
        ]),
    };
    Ok(X111Report {
        signature,
        label,
        code,
        warnings,
    })
}

// ---------------------------------------------------------------------------
// Census

/// `a14` used for instances of each regime.
pub fn regime_a14(regime: A14Regime) -> Rat {
    match regime {
        A14Regime::Greater => int(2),
        A14Regime::Less => rat(1, 2),
        A14Regime::Equal => int(1),
    }
}

/// Deterministic grid of normalized coefficients covering every root case.
/// `c12` ranges over values reachable in all regimes (`c12 = a14 / (2 b05)`
/// with `b05` free); `c12 = 0` is only reachable with `a14 = 0 < 1`.
pub fn census_grid() -> Vec<H3Coeffs> {
    let c12s: Vec<Rat> = [(-2, 1), (-1, 2), (0, 1), (1, 4), (1, 2), (3, 4), (1, 1), (3, 2), (3, 1)]
        .iter()
        .map(|&(a, b)| rat(a, b))
        .collect();
    let c21s: Vec<Rat> = [-5, -2, 0, 2, 5].iter().map(|&v| int(v)).collect();
    let c30s: Vec<Rat> = [-4, -1, 1, 4].iter().map(|&v| int(v)).collect();
    let pos = [rat(1, 2), int(1), int(3)];
    let neg = [rat(-1, 2), int(-1), int(-3)];
    let singles = [rat(-2, 1), rat(-1, 2), rat(1, 2), int(2)];

    // (A, B, C) shapes per c12.
    let mut shapes: Vec<(Rat, Rat, Rat)> = Vec::new();
    for c12 in &c12s {
        let a = Rat::one() - c12;
        if !a.is_zero() {
            for up in &pos {
                for um in &neg {
                    shapes.push((a.clone(), -&a * (up + um), &a * up * um));
                }
            }
            // Both nonzero zeros on one side.
            shapes.push((a.clone(), &a * int(-3), &a * int(2)));
            for u in &singles {
                shapes.push((a.clone(), -&a * u, Rat::zero()));
                shapes.push((a.clone(), &a * int(-2) * u, &a * u * u));
            }
            for b in [int(-1), int(0), int(1)] {
                shapes.push((a.clone(), b.clone(), (&b * &b + int(4) * &a * &a) / (int(4) * &a)));
            }
            shapes.push((a.clone(), Rat::zero(), Rat::zero()));
        } else {
            for b in [int(-2), int(-1), int(1), int(2)] {
                for c in [int(-2), int(-1), int(1), int(2)] {
                    shapes.push((a.clone(), b.clone(), c));
                }
                shapes.push((a.clone(), b.clone(), Rat::zero()));
                shapes.push((a.clone(), Rat::zero(), b.clone()));
            }
        }
    }
    let mut out = Vec::new();
    for (a, b, c) in shapes {
        let c12 = Rat::one() - &a;
        for c21 in &c21s {
            for c30 in &c30s {
                out.push(H3Coeffs {
                    c12: c12.clone(),
                    c21: c21.clone(),
                    c30: c30.clone(),
                    d12: &b + c21,
                    d21: &c + c30,
                });
            }
        }
    }
    out
}

fn reachable(c: &H3Coeffs, regime: A14Regime) -> bool {
    !c.c12.is_zero() || regime == A14Regime::Less
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct X111Census {
    pub labels: BTreeMap<A14Regime, BTreeSet<&'static str>>,
    /// Sign tuples that satisfy no row, per regime.
    pub unmatched: BTreeMap<A14Regime, BTreeSet<String>>,
    /// Row alternatives never satisfied on the grid.
    pub unreached_alternatives: Vec<(A14Regime, &'static str, String)>,
    pub witnesses: BTreeMap<(A14Regime, &'static str), H3Coeffs>,
    pub samples: usize,
}

impl X111Census {
    pub fn count(&self, regime: A14Regime) -> usize {
        self.labels.get(&regime).map_or(0, |s| s.len())
    }

    pub fn total(&self) -> usize {
        A14Regime::ALL.iter().map(|r| self.count(*r)).sum()
    }
}

/// Enumerates the sign tuples realized on [`census_grid`] and counts the
/// distinct figure labels they reach in each regime.
pub fn x111_census() -> X111Census {
    let mut census = X111Census::default();
    let mut alt_hit: BTreeSet<(A14Regime, &'static str, usize)> = BTreeSet::new();
    for c in census_grid() {
        let Ok(sig) = h3_signature(&c, A14Regime::Less, 0) else { continue };
        census.samples += 1;
        for regime in A14Regime::ALL {
            if !reachable(&c, regime) {
                continue;
            }
            let sig = H3Signature { regime, ..sig.clone() };
            for row in table(regime) {
                for (k, alt) in row.alts.iter().enumerate() {
                    if alt.matches(&sig) {
                        alt_hit.insert((regime, row.label, k));
                    }
                }
            }
            match x111_label(&sig) {
                Ok(l) => {
                    census.labels.entry(regime).or_default().insert(l.figure);
                    census.witnesses.entry((regime, l.figure)).or_insert_with(|| c.clone());
                }
                Err(_) => {
                    census.unmatched.entry(regime).or_default().insert(sig.tuple());
                }
            }
        }
    }
    for regime in A14Regime::ALL {
        for row in table(regime) {
            for (k, alt) in row.alts.iter().enumerate() {
                if !alt_hit.contains(&(regime, row.label, k)) {
                    census.unreached_alternatives.push((regime, row.label, alt.to_string()));
                }
            }
        }
    }
    census
}

/// A grid point satisfying `alt` in `regime`, if any.
pub fn alternative_witness(regime: A14Regime, alt: &Alt) -> Option<H3Coeffs> {
    census_grid().into_iter().find(|c| {
        reachable(c, regime)
            && h3_signature(c, regime, 0)
                .map(|s| alt.matches(&s))
                .unwrap_or(false)
    })
}
