use crate::error::OracleError;
use std::fmt;
use std::str::FromStr;

/// Closed axis-aligned box.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Window {
    pub xmin: f64,
    pub xmax: f64,
    pub ymin: f64,
    pub ymax: f64,
}

impl Window {
    pub fn new(xmin: f64, xmax: f64, ymin: f64, ymax: f64) -> Result<Self, OracleError> {
        let ok = [xmin, xmax, ymin, ymax].iter().all(|v| v.is_finite()) && xmin < xmax && ymin < ymax;
        if !ok {
            return Err(OracleError::BadWindow(format!("{xmin}:{xmax},{ymin}:{ymax} is degenerate")));
        }
        Ok(Window { xmin, xmax, ymin, ymax })
    }

    /// `[-r, r] x [-r, r]`.
    pub fn square(r: f64) -> Result<Self, OracleError> {
        Window::new(-r, r, -r, r)
    }

    pub fn width(&self) -> f64 {
        self.xmax - self.xmin
    }

    pub fn height(&self) -> f64 {
        self.ymax - self.ymin
    }

    pub fn contains(&self, z: [f64; 2]) -> bool {
        (self.xmin..=self.xmax).contains(&z[0]) && (self.ymin..=self.ymax).contains(&z[1])
    }

    /// Largest `s` in `[0, 1]` with `a + s(b - a)` inside, for `a` inside.
    pub fn exit_fraction(&self, a: [f64; 2], b: [f64; 2]) -> f64 {
        let mut s = 1.0f64;
        for (i, (lo, hi)) in [(self.xmin, self.xmax), (self.ymin, self.ymax)].into_iter().enumerate() {
            let d = b[i] - a[i];
            if b[i] > hi && d > 0.0 {
                s = s.min((hi - a[i]) / d);
            }
            if b[i] < lo && d < 0.0 {
                s = s.min((lo - a[i]) / d);
            }
        }
        s.clamp(0.0, 1.0)
    }
}

impl FromStr for Window {
    type Err = OracleError;

    /// Parses `xmin:xmax,ymin:ymax`.
    fn from_str(s: &str) -> Result<Self, OracleError> {
        let bad = || OracleError::BadWindow(format!("expected xmin:xmax,ymin:ymax, got {s:?}"));
        let (xs, ys) = s.split_once(',').ok_or_else(bad)?;
        let range = |r: &str| -> Result<(f64, f64), OracleError> {
            let (a, b) = r.split_once(':').ok_or_else(bad)?;
            Ok((a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?))
        };
        let ((x0, x1), (y0, y1)) = (range(xs)?, range(ys)?);
        Window::new(x0, x1, y0, y1)
    }
}

impl fmt::Display for Window {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{},{}:{}", self.xmin, self.xmax, self.ymin, self.ymax)
    }
}
