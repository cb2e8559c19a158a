//! Float evaluation of a polynomial vector field.

use polyparse::rat::to_f64;
use polyparse::{BiPoly, PolySystem};

#[derive(Clone, Debug)]
pub struct FloatField {
    p: Vec<(f64, i32, i32)>,
    q: Vec<(f64, i32, i32)>,
    /// Lowest total degree of a term.
    pub low_degree: u32,
}

fn terms(f: &BiPoly) -> Vec<(f64, i32, i32)> {
    f.grlex_terms()
        .into_iter()
        .map(|((i, j), c)| (to_f64(&c), i as i32, j as i32))
        .collect()
}

fn eval(ts: &[(f64, i32, i32)], x: f64, y: f64) -> f64 {
    ts.iter().map(|&(c, i, j)| c * x.powi(i) * y.powi(j)).sum()
}

impl FloatField {
    pub fn new(s: &PolySystem) -> Self {
        let low_degree = s
            .p()
            .support()
            .chain(s.q().support())
            .map(|(i, j)| i + j)
            .min()
            .unwrap_or(0);
        FloatField {
            p: terms(s.p()),
            q: terms(s.q()),
            low_degree,
        }
    }

    pub fn eval(&self, z: [f64; 2]) -> [f64; 2] {
        [eval(&self.p, z[0], z[1]), eval(&self.q, z[0], z[1])]
    }

    /// The field divided by `r^(low_degree - 1)`. Same orbits off the origin,
    /// but degenerate equilibria are approached at an exponential rate.
    pub fn eval_rescaled(&self, z: [f64; 2]) -> [f64; 2] {
        let [u, v] = self.eval(z);
        let k = self.low_degree.saturating_sub(1) as i32;
        let r = z[0].hypot(z[1]).powi(k);
        [u / r, v / r]
    }

    /// The field scaled to speed at most 1, for plotting.
    pub fn eval_bounded(&self, z: [f64; 2]) -> [f64; 2] {
        let [u, v] = self.eval(z);
        let s = (1.0 + u * u + v * v).sqrt();
        [u / s, v / s]
    }
}
