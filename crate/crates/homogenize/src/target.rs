//! The four homogeneous targets reached by the minimal substitution.

use polyparse::{PolySystem, Rat};
use num_traits::Zero;
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TargetClass {
    /// `x' = x(c12 y² + c21 xy + c30 x²)`, `y' = y(d03 y² + d12 xy + d21 x²)`.
    H3,
    /// General quadratic homogeneous system.
    H2,
    /// Linear system.
    H1,
    /// Constant system.
    H0,
}

impl TargetClass {
    pub fn as_str(&self) -> &'static str {
        match self {
            TargetClass::H3 => "H3",
            TargetClass::H2 => "H2",
            TargetClass::H1 => "H1",
            TargetClass::H0 => "H0",
        }
    }
}

impl fmt::Display for TargetClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum TargetError {
    #[error("degree {0} has no homogeneous target class")]
    UnsupportedDegree(u32),
    #[error("system is not homogeneous")]
    NotHomogeneous,
    #[error("{class} shape violated: coefficient {coefficient} must vanish")]
    Shape {
        class: TargetClass,
        coefficient: String,
    },
    #[error("{class} condition {condition} fails at {coefficient}")]
    Condition {
        class: TargetClass,
        condition: String,
        coefficient: String,
    },
}

/// Class, named coefficients (`c` for `x'`, `d` for `y'`, indices `ij` of
/// `x^i y^j`) and the nonvanishing condition that holds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassReport {
    pub class: TargetClass,
    pub coefficients: BTreeMap<String, Rat>,
    pub condition: String,
}

fn name(letter: char, i: u32, j: u32, deg: u32) -> String {
    if deg == 0 {
        letter.to_string()
    } else {
        format!("{letter}{i}{j}")
    }
}

/// Classifies a homogeneous system of degree at most 3 into the target list
/// and checks the coefficient conditions, reporting the first failing one.
pub fn target_class(s: &PolySystem) -> Result<ClassReport, TargetError> {
    if !s.is_homogeneous() {
        return Err(TargetError::NotHomogeneous);
    }
    let deg = s.degree();
    let class = match deg {
        3 => TargetClass::H3,
        2 => TargetClass::H2,
        1 => TargetClass::H1,
        0 => TargetClass::H0,
        d => return Err(TargetError::UnsupportedDegree(d)),
    };
    let mut coefficients = BTreeMap::new();
    for i in 0..=deg {
        let j = deg - i;
        coefficients.insert(name('c', i, j, deg), s.p().coeff(i, j));
        coefficients.insert(name('d', i, j, deg), s.q().coeff(i, j));
    }
    let get = |k: &str| coefficients[k].clone();
    let nz = |k: &str| !coefficients[k].is_zero();
    // Each alternative is a list of coefficients that must vanish and a list
    // that must not; the first alternative whose zero pattern fits is checked.
    let alternatives: Vec<(Vec<&str>, Vec<&str>)> = match class {
        TargetClass::H3 => {
            if nz("c03") {
                return Err(TargetError::Shape { class, coefficient: "c03".into() });
            }
            if nz("d30") {
                return Err(TargetError::Shape { class, coefficient: "d30".into() });
            }
            vec![(vec![], vec!["c30", "d03"])]
        }
        TargetClass::H2 => vec![
            (vec!["c02", "d20"], vec!["c20", "d02"]),
            (vec![], vec!["c02", "d20"]),
        ],
        TargetClass::H1 => vec![
            (vec!["d10"], vec!["c01", "c10", "d01"]),
            (vec!["c01"], vec!["c10", "d01", "d10"]),
            (vec![], vec!["c01", "d10"]),
        ],
        TargetClass::H0 => vec![(vec![], vec!["c", "d"])],
    };
    let render = |zero: &[&str], nonzero: &[&str]| {
        let mut parts: Vec<String> = zero.iter().map(|k| format!("{k} = 0")).collect();
        parts.push(format!("{} ≠ 0", nonzero.join("·")));
        parts.join(", ")
    };
    let (zero, nonzero) = alternatives
        .iter()
        .find(|(z, _)| z.iter().all(|k| !nz(k)))
        .expect("last alternative has no zero pattern");
    let condition = render(zero, nonzero);
    if let Some(bad) = nonzero.iter().find(|k| get(k).is_zero()) {
        return Err(TargetError::Condition {
            class,
            condition,
            coefficient: bad.to_string(),
        });
    }
    Ok(ClassReport {
        class,
        coefficients,
        condition,
    })
}
