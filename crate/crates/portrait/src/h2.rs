//! Quadratic targets of `X_011`, `X_113` and `X_131`.
//!
//! Shearing a characteristic direction `y = u0 x` onto the `x`-axis with
//! `y1 = y - u0 x` puts the target in the form
//! `ẋ1 = α11 x1² + α12 x1 y1 + α22 y1²`, `ẏ1 = β12 x1 y1 + β22 y1²` with
//! `α22 = c02`, `α12 = c11 + 2 c02 u0` and `β22 = d02 - u0 c02`. When
//! `α22 = 0` none of the three depends on `u0`.

use crate::code::{
    assemble_portrait, pull_back, InfinityKind, InfinityPoint, InfinityRing, PortraitCode,
};
use crate::error::PortraitError;
use homoganalysis::{char_polys, characteristic_directions, DirectionReport};
use homogenize::{homogenize_min, TargetClass, TransformRecord};
use num_traits::Zero;
use polyparse::rat::sign;
use polyparse::{int, PolySystem, Rat};
use qhcore::weight_vectors;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum H2RootCase {
    /// Three distinct real characteristic directions.
    Three,
    Two,
    One,
}

impl H2RootCase {
    pub fn as_str(&self) -> &'static str {
        match self {
            H2RootCase::Three => "(i)",
            H2RootCase::Two => "(ii)",
            H2RootCase::One => "(iii)",
        }
    }

    /// Number of distinct global portraits drawn for the case.
    pub fn portrait_count(&self) -> usize {
        match self {
            H2RootCase::Three => 3,
            H2RootCase::Two | H2RootCase::One => 2,
        }
    }
}

impl fmt::Display for H2RootCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "case {}", self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum H2Infinity {
    /// `α22 ≠ 0`: a single singular point, at the end of the `x`-axis.
    Unique,
    /// `α22 = 0`: the line at infinity is singular; `i1` is the point at the
    /// end of the `y`-axis after removing the common factor, absent when
    /// `2α12 = β22`.
    Filled { i1: Option<InfinityKind> },
}

#[derive(Clone, Debug, PartialEq)]
pub struct H2Case {
    pub case: H2RootCase,
    pub alpha22: Rat,
    pub alpha12: Option<Rat>,
    pub beta22: Option<Rat>,
    pub infinity: H2Infinity,
    pub target: PolySystem,
    pub reports: Vec<DirectionReport>,
    pub homogeneous: PortraitCode,
    pub code: PortraitCode,
    pub transform: TransformRecord,
}

/// Infinity data of a quadratic homogeneous system in the sheared normal form.
pub fn h2_infinity(target: &PolySystem) -> Result<(H2Infinity, Rat, Option<Rat>, Option<Rat>), PortraitError> {
    let p = target.p();
    let q = target.q();
    let alpha22 = p.coeff(0, 2);
    if !alpha22.is_zero() {
        return Ok((H2Infinity::Unique, alpha22, None, None));
    }
    let alpha12 = p.coeff(1, 1);
    let beta22 = q.coeff(0, 2);
    if beta22.is_zero() {
        return Err(PortraitError::CommonFactor);
    }
    let test = sign(&((int(2) * &alpha12 - &beta22) * &beta22));
    let i1 = match test {
        1 => Some(InfinityKind::Saddle),
        -1 => Some(InfinityKind::Node),
        _ => None,
    };
    Ok((H2Infinity::Filled { i1 }, alpha22, Some(alpha12), Some(beta22)))
}

/// Case split and portrait of a quasi-homogeneous system with quadratic
/// minimal-path target.
pub fn h2_case(q: &PolySystem) -> Result<H2Case, PortraitError> {
    let w = weight_vectors(q)
        .map_err(|e| PortraitError::WrongFamily {
            family: "X_011",
            reason: e.to_string(),
        })?
        .minimal;
    let (h, t) = homogenize_min(q, &w)?;
    if h.degree != 2 || h.target_class != Some(TargetClass::H2) {
        return Err(PortraitError::WrongFamily {
            family: "X_011",
            reason: format!("target has degree {} and class {:?}", h.degree, h.target_class),
        });
    }
    let cp = char_polys(&h.sys)?;
    let reports = characteristic_directions(&cp)?;
    let case = match reports.len() {
        3 => H2RootCase::Three,
        2 => H2RootCase::Two,
        1 => H2RootCase::One,
        n => {
            return Err(PortraitError::Inconsistent(format!(
                "a cubic form with {n} distinct real linear factors"
            )))
        }
    };
    let (infinity, alpha22, alpha12, beta22) = h2_infinity(&h.sys)?;
    let homogeneous = assemble_portrait(&h.sys, &reports)?;
    let mut code = pull_back(&homogeneous, &t)?;
    code.figure_label = Some(format!("H2 {case}, one of {} portraits", case.portrait_count()));
    code.infinity = match &infinity {
        H2Infinity::Unique => InfinityRing::Points(vec![InfinityPoint {
            at: "end of the x-axis".into(),
            kind: InfinityKind::Unclassified,
            stability: None,
        }]),
        H2Infinity::Filled { .. } => InfinityRing::Filled,
    };
    if let H2Infinity::Filled { i1 } = &infinity {
        code.notes.push(match i1 {
            Some(k) => format!("after removing the common factor, the end of the y-axis is a {}", k.as_str()),
            None => "after removing the common factor, no singular point remains".into(),
        });
    }
    Ok(H2Case {
        case,
        alpha22,
        alpha12,
        beta22,
        infinity,
        target: h.sys,
        reports,
        homogeneous,
        code,
        transform: t,
    })
}
