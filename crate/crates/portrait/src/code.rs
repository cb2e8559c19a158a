//! Portrait codes.
//!
//! Around the origin of a homogeneous system every orbit in the open sector
//! between two consecutive characteristic rays is a scaled copy of every
//! other, so one orbit decides the sector. Writing `ṙ = r^n H̃(θ)` and
//! `θ̇ = r^(n-1) G̃(θ)`, along an orbit `d ln r / dθ = H̃/G̃`, which is not
//! integrable at a zero of `G̃`. With `σ` the sign of `G̃` inside the sector,
//! the orbit tends to the origin at the start ray iff `σ H̃ > 0` there and at
//! the end ray iff `σ H̃ < 0` there. Two origin ends make an elliptic sector,
//! none a hyperbolic one, one a parabolic one.

use crate::error::PortraitError;
use homoganalysis::{
    center_test, char_polys, characteristic_directions, CenterVerdict, Direction, DirectionReport, FlowSign, LocalType,
    OrbitCount, Stability,
};
use homogenize::{Chart, Symmetry, SymmetryKind, TransformRecord};
use polyparse::rat::{from_f64, sign};
use polyparse::PolySystem;
use std::f64::consts::{FRAC_PI_2, PI, TAU};
use std::fmt;

const ANGLE_EPS: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SectorType {
    Hyperbolic,
    Parabolic,
    Elliptic,
}

impl SectorType {
    pub fn as_str(&self) -> &'static str {
        match self {
            SectorType::Hyperbolic => "hyperbolic",
            SectorType::Parabolic => "parabolic",
            SectorType::Elliptic => "elliptic",
        }
    }

    fn letter(&self) -> char {
        match self {
            SectorType::Hyperbolic => 'h',
            SectorType::Parabolic => 'p',
            SectorType::Elliptic => 'e',
        }
    }

    fn from_ends(start: bool, end: bool) -> Self {
        match (start, end) {
            (true, true) => SectorType::Elliptic,
            (false, false) => SectorType::Hyperbolic,
            _ => SectorType::Parabolic,
        }
    }
}

/// One characteristic ray at the origin.
#[derive(Clone, Debug, PartialEq)]
pub struct Ray {
    /// Angle in `[0, 2π)` in the plane where the code lives.
    pub angle: f64,
    /// Human-readable direction, e.g. `u = 1/2` or `x = 0`.
    pub label: String,
    pub flow: FlowSign,
    pub local_type: LocalType,
    pub orbit_count: OrbitCount,
    pub multiplicity: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Sector {
    pub kind: SectorType,
    pub origin_at_start: bool,
    pub origin_at_end: bool,
}

impl Sector {
    fn of(kind: SectorType) -> Self {
        let (s, e) = match kind {
            SectorType::Elliptic => (true, true),
            SectorType::Hyperbolic => (false, false),
            SectorType::Parabolic => (true, false),
        };
        Sector {
            kind,
            origin_at_start: s,
            origin_at_end: e,
        }
    }
}

/// Origin without characteristic rays.
#[derive(Clone, Debug, PartialEq)]
pub enum Rotation {
    Center,
    Focus,
    /// The return-map integral vanishes numerically but was not proved zero.
    Unresolved,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InfinityKind {
    Saddle,
    Node,
    SaddleNode,
    Degenerate,
    /// Known to exist, type not determined.
    Unclassified,
}

impl InfinityKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            InfinityKind::Saddle => "saddle",
            InfinityKind::Node => "node",
            InfinityKind::SaddleNode => "saddle-node",
            InfinityKind::Degenerate => "degenerate",
            InfinityKind::Unclassified => "unclassified",
        }
    }

    fn index(&self) -> Option<i32> {
        match self {
            InfinityKind::Saddle => Some(-1),
            InfinityKind::Node => Some(1),
            InfinityKind::SaddleNode => Some(0),
            InfinityKind::Degenerate | InfinityKind::Unclassified => None,
        }
    }
}

impl From<LocalType> for InfinityKind {
    fn from(t: LocalType) -> Self {
        match t {
            LocalType::Saddle => InfinityKind::Saddle,
            LocalType::Node => InfinityKind::Node,
            LocalType::SaddleNode => InfinityKind::SaddleNode,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct InfinityPoint {
    /// Angle of the endpoint, or a chart name for non-homogeneous compactifications.
    pub at: String,
    pub kind: InfinityKind,
    pub stability: Option<Stability>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum InfinityRing {
    Points(Vec<InfinityPoint>),
    /// The whole line at infinity consists of singular points.
    Filled,
    NotComputed,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Plane {
    Homogeneous,
    QuasiHomogeneous,
}

#[derive(Clone, Debug, PartialEq)]
pub struct PortraitCode {
    pub plane: Plane,
    /// Rays sorted by angle; `sectors[i]` lies between `rays[i]` and `rays[i + 1]`.
    pub rays: Vec<Ray>,
    pub sectors: Vec<Sector>,
    pub rotation: Option<Rotation>,
    pub infinity: InfinityRing,
    pub index: i32,
    pub symmetry: Option<Symmetry>,
    pub figure_label: Option<String>,
    /// Sign of the time rescaling on the open quadrants I to IV.
    pub time_signs: Option<[Option<i8>; 4]>,
    pub notes: Vec<String>,
}

impl PortraitCode {
    pub fn count(&self, kind: SectorType) -> usize {
        self.sectors.iter().filter(|s| s.kind == kind).count()
    }

    /// Cyclic word of ray and sector letters, e.g. `SpNh`.
    pub fn word(&self) -> String {
        if self.rays.is_empty() {
            return match self.rotation {
                Some(Rotation::Center) => "C".into(),
                Some(Rotation::Focus) => "F".into(),
                _ => "?".into(),
            };
        }
        self.rays
            .iter()
            .zip(&self.sectors)
            .flat_map(|(r, s)| [ray_letter(r.local_type), s.kind.letter()])
            .collect()
    }

    /// Smallest rotation of the word or of its mirror image, so that two
    /// codes agree up to rotation and reflection iff their canonical words do.
    pub fn canonical(&self) -> String {
        let w: Vec<char> = self.word().chars().collect();
        if w.len() < 2 {
            return w.into_iter().collect();
        }
        let mut rev = w.clone();
        rev.reverse();
        let mut best: Option<String> = None;
        for seq in [&w, &rev] {
            for k in 0..seq.len() {
                if !seq[k].is_ascii_uppercase() {
                    continue;
                }
                let cand: String = seq[k..].iter().chain(&seq[..k]).collect();
                if best.as_ref().is_none_or(|b| cand < *b) {
                    best = Some(cand);
                }
            }
        }
        best.unwrap_or_default()
    }

    pub fn equivalent(&self, other: &PortraitCode) -> bool {
        self.canonical() == other.canonical()
    }

    /// Whether the code is mapped onto itself by `sym`: rays go to rays of
    /// the same type, with flow reversed exactly when time is.
    pub fn is_closed_under(&self, sym: &Symmetry) -> bool {
        let (fx, fy) = sym.kind.flips();
        let image = |a: f64| -> f64 {
            let (c, s) = (a.cos(), a.sin());
            let (c, s) = (if fx { -c } else { c }, if fy { -s } else { s });
            s.atan2(c).rem_euclid(TAU)
        };
        let find = |a: f64| {
            self.rays
                .iter()
                .position(|r| angle_dist(r.angle, a) < 1e-9)
        };
        for (i, r) in self.rays.iter().enumerate() {
            let Some(j) = find(image(r.angle)) else { return false };
            let m = &self.rays[j];
            let flow = if sym.time_reversed { flip(r.flow) } else { r.flow };
            if m.local_type != r.local_type || m.flow != flow {
                return false;
            }
            // The sector after ray i maps to a sector beside ray j, after it
            // for a rotation and before it for a reflection.
            let k = self.rays.len();
            let orientation_kept = fx == fy;
            let js = if orientation_kept { j } else { (j + k - 1) % k };
            if self.sectors[js].kind != self.sectors[i].kind {
                return false;
            }
        }
        true
    }
}

impl fmt::Display for PortraitCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] index {}", self.word(), self.index)?;
        if let Some(l) = &self.figure_label {
            write!(f, " ({l})")?;
        }
        Ok(())
    }
}

fn ray_letter(t: LocalType) -> char {
    match t {
        LocalType::Saddle => 'S',
        LocalType::Node => 'N',
        LocalType::SaddleNode => 'K',
    }
}

fn flip(f: FlowSign) -> FlowSign {
    match f {
        FlowSign::Outgoing => FlowSign::Incoming,
        FlowSign::Incoming => FlowSign::Outgoing,
    }
}

fn flow_sign(f: FlowSign) -> i8 {
    match f {
        FlowSign::Outgoing => 1,
        FlowSign::Incoming => -1,
    }
}

fn angle_dist(a: f64, b: f64) -> f64 {
    let d = (a - b).rem_euclid(TAU);
    d.min(TAU - d)
}

fn index_from_sectors(sectors: &[Sector]) -> Result<i32, PortraitError> {
    let e = sectors.iter().filter(|s| s.kind == SectorType::Elliptic).count() as i32;
    let h = sectors.iter().filter(|s| s.kind == SectorType::Hyperbolic).count() as i32;
    if (e - h) % 2 != 0 {
        return Err(PortraitError::Inconsistent(format!(
            "{e} elliptic and {h} hyperbolic sectors give a non-integer index"
        )));
    }
    Ok(1 + (e - h) / 2)
}

fn direction_label(d: &Direction) -> String {
    match d {
        Direction::Vertical => "x = 0".into(),
        Direction::Slope(r) => match &r.exact {
            Some(q) => format!("u = {q}"),
            None => format!("u ≈ {:.6}", r.to_f64()),
        },
    }
}

/// Portrait code of a homogeneous system from its characteristic directions.
pub fn assemble_portrait(
    sys: &PolySystem,
    reports: &[DirectionReport],
) -> Result<PortraitCode, PortraitError> {
    let cp = char_polys(sys)?;
    let n = cp.n;
    let mut rays = Vec::with_capacity(2 * reports.len());
    let mut points = Vec::with_capacity(2 * reports.len());
    for rep in reports {
        let theta = match &rep.direction {
            Direction::Vertical => FRAC_PI_2,
            Direction::Slope(r) => r.to_f64().atan(),
        };
        let label = direction_label(&rep.direction);
        for (k, angle) in [theta, theta + PI].into_iter().enumerate() {
            // The antipodal ray sees H̃(θ + π) = (-1)^(n+1) H̃(θ).
            let reversed = k == 1 && n % 2 == 0;
            rays.push(Ray {
                angle: angle.rem_euclid(TAU),
                label: label.clone(),
                flow: if reversed { flip(rep.flow_sign) } else { rep.flow_sign },
                local_type: rep.local_type_blowup,
                orbit_count: rep.orbit_count_origin,
                multiplicity: rep.multiplicity,
            });
            let stability = rep.infinity_stability.map(|s| match (reversed, s) {
                (false, s) => s,
                (true, Stability::Stable) => Stability::Unstable,
                (true, Stability::Unstable) => Stability::Stable,
            });
            points.push((
                angle.rem_euclid(TAU),
                InfinityPoint {
                    at: format!("{label} ({})", if k == 0 { "+" } else { "-" }),
                    kind: rep.infinity_type.into(),
                    stability,
                },
            ));
        }
    }
    rays.sort_by(|a, b| a.angle.total_cmp(&b.angle));
    points.sort_by(|a, b| a.0.total_cmp(&b.0));

    if rays.is_empty() {
        let rotation = match center_test(sys)? {
            CenterVerdict::GlobalCenter(_) => Rotation::Center,
            CenterVerdict::NotCenter(_) => Rotation::Focus,
            CenterVerdict::NumericallyCenter { .. } => Rotation::Unresolved,
        };
        return Ok(PortraitCode {
            plane: Plane::Homogeneous,
            rays,
            sectors: Vec::new(),
            rotation: Some(rotation),
            infinity: InfinityRing::Points(Vec::new()),
            index: 1,
            symmetry: None,
            figure_label: None,
            time_signs: None,
            notes: Vec::new(),
        });
    }

    let k = rays.len();
    let mut sectors = Vec::with_capacity(k);
    for i in 0..k {
        let a = rays[i].angle;
        let mut b = rays[(i + 1) % k].angle;
        if b <= a {
            b += TAU;
        }
        let mid = 0.5 * (a + b);
        let sigma = match (from_f64(mid.cos()), from_f64(mid.sin())) {
            (Some(c), Some(s)) => sign(&cp.g.eval(&c, &s)),
            _ => 0,
        };
        if sigma == 0 {
            return Err(PortraitError::Inconsistent(format!(
                "G vanishes inside the sector ({a:.6}, {b:.6})"
            )));
        }
        let hs = flow_sign(rays[i].flow);
        let he = flow_sign(rays[(i + 1) % k].flow);
        let start = sigma * hs > 0;
        let end = sigma * he < 0;
        sectors.push(Sector {
            kind: SectorType::from_ends(start, end),
            origin_at_start: start,
            origin_at_end: end,
        });
    }
    let index = index_from_sectors(&sectors)?;

    // Poincaré–Hopf on the sphere: the origin appears on both hemispheres.
    let points: Vec<InfinityPoint> = points.into_iter().map(|(_, p)| p).collect();
    let at_infinity: i32 = points.iter().filter_map(|p| p.kind.index()).sum();
    if 2 * index + at_infinity != 2 {
        return Err(PortraitError::Inconsistent(format!(
            "index {index} at the origin and {at_infinity} at infinity violate Poincaré–Hopf"
        )));
    }

    Ok(PortraitCode {
        plane: Plane::Homogeneous,
        rays,
        sectors,
        rotation: None,
        infinity: InfinityRing::Points(points),
        index,
        symmetry: None,
        figure_label: None,
        time_signs: None,
        notes: Vec::new(),
    })
}

/// Characteristic directions and portrait code of a homogeneous system.
pub fn homogeneous_portrait(sys: &PolySystem) -> Result<(Vec<DirectionReport>, PortraitCode), PortraitError> {
    let reports = characteristic_directions(&char_polys(sys)?)?;
    let code = assemble_portrait(sys, &reports)?;
    Ok((reports, code))
}

/// Carries a homogeneous code back to the quasi-homogeneous plane.
///
/// On the full chart the substitution is an orientation-preserving
/// homeomorphism, so the cyclic code is unchanged. On a half-plane chart the
/// half `[a, a + π]` is kept and completed by the source's mirror symmetry.
/// A boundary line that is not a ray is crossed transversally by orbits of
/// the source, which glues the two cut sectors next to it into one, elliptic
/// when the cut orbits tend to the origin and hyperbolic otherwise.
pub fn pull_back(code: &PortraitCode, t: &TransformRecord) -> Result<PortraitCode, PortraitError> {
    let mut out = code.clone();
    out.plane = Plane::QuasiHomogeneous;
    // Angles live in the working frame, where x and y may be exchanged.
    let mut sym = t.symmetry;
    if t.swap_xy {
        sym.kind = match sym.kind {
            SymmetryKind::XAxis => SymmetryKind::YAxis,
            SymmetryKind::YAxis => SymmetryKind::XAxis,
            SymmetryKind::Origin => SymmetryKind::Origin,
        };
        out.notes.push("angles refer to the frame with x and y exchanged".into());
    }
    out.symmetry = Some(sym);
    out.time_signs = Some(t.quadrant_time_signs());
    out.infinity = InfinityRing::NotComputed;
    let signs = t.quadrant_time_signs();
    let a = match t.chart {
        Chart::Full => {
            for r in &mut out.rays {
                apply_time_sign(r, &signs);
            }
            return Ok(out);
        }
        Chart::YPositive => 0.0,
        Chart::XPositive => 1.5 * PI,
    };
    if code.rays.is_empty() {
        return Err(PortraitError::Inconsistent(
            "half-plane chart without characteristic rays".into(),
        ));
    }
    let phi = |theta: f64| (theta - a).rem_euclid(TAU);
    let back = |p: f64| (p + a).rem_euclid(TAU);
    let k = code.rays.len();
    let ph: Vec<f64> = code.rays.iter().map(|r| phi(r.angle)).collect();
    let on = |p: f64, target: f64| angle_dist(p, target) < ANGLE_EPS;
    let upper: Vec<usize> = (0..k)
        .filter(|&i| on(ph[i], 0.0) || on(ph[i], PI) || ph[i] < PI)
        .collect();
    let interior = |i: usize| !on(ph[i], 0.0) && !on(ph[i], PI);
    let reversed = sym.time_reversed;

    // (phi, source ray, mirrored)
    let mut list: Vec<(f64, usize, bool)> = Vec::new();
    for &i in &upper {
        let p = if on(ph[i], 0.0) { 0.0 } else if on(ph[i], PI) { PI } else { ph[i] };
        list.push((p, i, false));
        if interior(i) {
            list.push((TAU - p, i, true));
        }
    }
    list.sort_by(|x, y| x.0.total_cmp(&y.0));

    if list.is_empty() {
        // The upper half lies in one sector: every orbit crosses both half
        // axes and closes up through the mirror.
        if !reversed {
            return Err(PortraitError::Inconsistent(
                "orbits cross the mirror line of a time-preserving symmetry".into(),
            ));
        }
        out.rays.clear();
        out.sectors.clear();
        out.rotation = Some(Rotation::Center);
        out.index = 1;
        return Ok(out);
    }

    // Homogeneous sector that starts at ray i (rays sorted by angle).
    let sector_after = |i: usize| &code.sectors[i];
    let sector_before = |i: usize| &code.sectors[(i + k - 1) % k];

    let m = list.len();
    let mut rays = Vec::with_capacity(m);
    let mut sectors = Vec::with_capacity(m);
    for idx in 0..m {
        let (p, i, mirrored) = list[idx];
        let mut r = code.rays[i].clone();
        r.angle = back(p);
        if !mirrored {
            apply_time_sign(&mut r, &signs);
        } else {
            let mut orig = code.rays[i].clone();
            apply_time_sign(&mut orig, &signs);
            r.flow = if reversed { flip(orig.flow) } else { orig.flow };
        }
        rays.push(r);

        let (_, j, mirrored_next) = list[(idx + 1) % m];
        let wraps = idx + 1 == m;
        let sector = if !wraps && !mirrored && !mirrored_next {
            // Adjacent in the closed upper half.
            sector_after(i).clone()
        } else if !wraps && mirrored && mirrored_next {
            // Mirror of the upper sector from j to i.
            mirror(sector_after(j))
        } else if !mirrored {
            // Leaving the upper half through φ = π.
            if on(p, PI) {
                mirror(sector_before(i))
            } else {
                glued(sector_after(i).origin_at_start)
            }
        } else {
            // Entering the upper half through φ = 0.
            let (p0, first, _) = list[0];
            if on(p0, 0.0) {
                mirror(sector_after(first))
            } else {
                glued(sector_before(first).origin_at_end)
            }
        };
        sectors.push(sector);
    }
    // Rays were generated in φ order; re-sort by angle keeping sector pairing.
    let start = rays
        .iter()
        .enumerate()
        .min_by(|x, y| x.1.angle.total_cmp(&y.1.angle))
        .map(|(i, _)| i)
        .unwrap_or(0);
    rays.rotate_left(start);
    sectors.rotate_left(start);
    out.index = index_from_sectors(&sectors)?;
    out.rays = rays;
    out.sectors = sectors;
    out.rotation = None;
    Ok(out)
}

fn mirror(s: &Sector) -> Sector {
    Sector {
        kind: s.kind,
        origin_at_start: s.origin_at_end,
        origin_at_end: s.origin_at_start,
    }
}

fn glued(origin: bool) -> Sector {
    Sector::of(if origin {
        SectorType::Elliptic
    } else {
        SectorType::Hyperbolic
    })
}

fn apply_time_sign(r: &mut Ray, signs: &[Option<i8>; 4]) {
    let q = |a: f64| -> Option<usize> {
        let a = a.rem_euclid(TAU);
        let on_axis = [0.0, FRAC_PI_2, PI, 1.5 * PI, TAU]
            .iter()
            .any(|&b| (a - b).abs() < ANGLE_EPS);
        if on_axis {
            None
        } else {
            Some((a / FRAC_PI_2) as usize % 4)
        }
    };
    let s = match q(r.angle) {
        Some(i) => signs[i],
        None => {
            // On an axis: use the two neighbouring quadrants when they agree.
            let left = signs[((r.angle + 0.1) / FRAC_PI_2) as usize % 4];
            let right = signs[((r.angle - 0.1).rem_euclid(TAU) / FRAC_PI_2) as usize % 4];
            match (left, right) {
                (Some(x), Some(y)) if x == y => Some(x),
                (Some(x), None) | (None, Some(x)) => Some(x),
                _ => None,
            }
        }
    };
    if s == Some(-1) {
        r.flow = flip(r.flow);
    }
}
