use crate::error::AnalysisError;
use polyparse::{coprime_check, BiPoly, Coprimality, PolySystem, UPoly};

/// `G = xQ - yP`, `H = yQ + xP` and their restrictions to `x = 1`, `y = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharPolys {
    pub n: u32,
    pub g: BiPoly,
    pub h: BiPoly,
    /// `G(1, u)`.
    pub g_u: UPoly,
    /// `G(v, 1)`.
    pub g_v: UPoly,
    /// `P(1, u)`.
    pub p_u: UPoly,
    /// `Q(v, 1)`.
    pub q_v: UPoly,
}

pub fn char_polys(s: &PolySystem) -> Result<CharPolys, AnalysisError> {
    if !s.is_homogeneous() {
        return Err(AnalysisError::NotHomogeneous);
    }
    if let Coprimality::CommonFactor(f) = coprime_check(s) {
        return Err(AnalysisError::CommonFactor(f.to_string()));
    }
    let (x, y) = (BiPoly::x(), BiPoly::y());
    let g = &(&x * s.q()) - &(&y * s.p());
    if g.is_zero() {
        return Err(AnalysisError::RadialField);
    }
    let h = &(&y * s.q()) + &(&x * s.p());
    Ok(CharPolys {
        n: s.degree(),
        g_u: g.at_x_one(),
        g_v: g.at_y_one(),
        p_u: s.p().at_x_one(),
        q_v: s.q().at_y_one(),
        g,
        h,
    })
}
