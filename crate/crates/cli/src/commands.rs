//! The subcommands as functions from input text and flags to output text.

use crate::report::*;
use homoganalysis::{center_test, char_polys, characteristic_directions, DirectionReport};
use homogenize::{homogenize_lcm, homogenize_min, TargetClass};
use oracle::{probe_all, streamlines, to_csv, to_svg, OracleError, Window};
use polyparse::{coprime_check, parse_system, Coprimality, PolySystem};
use portrait::{h2_case, homogeneous_portrait, pull_back, x111_census, x111_portrait, A14Regime, PortraitCode};
use qhcore::{decompose, quintic_catalog, weight_vectors};
use serde::Serialize;
use std::fmt;

/// Default oracle tolerance, overridden by `QHPP_TOL` and then by `--tol`.
pub const DEFAULT_TOL: f64 = 1e-10;

/// Probe radii: the second is used when the first is inconclusive.
pub const PROBE_RADII: [f64; 2] = [0.05, 0.01];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExitCode {
    Success = 0,
    /// Unparsable input, unreadable file or invalid flag value.
    Input = 2,
    NotQuasiHomogeneous = 3,
    CommonFactor = 4,
    UnsupportedDegree = 5,
    BadWindow = 6,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CliError {
    pub code: ExitCode,
    pub message: String,
}

impl CliError {
    pub fn new(code: ExitCode, message: impl Into<String>) -> Self {
        CliError {
            code,
            message: message.into(),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

pub fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("plain data serializes");
    s.push('\n');
    s
}

/// `--tol`, else `QHPP_TOL`, else [`DEFAULT_TOL`], checked against the
/// integrator's range.
pub fn resolve_tol(flag: Option<f64>, env: Option<&str>) -> Result<f64, CliError> {
    let tol = match (flag, env) {
        (Some(t), _) => t,
        (None, Some(e)) => e
            .trim()
            .parse()
            .map_err(|_| CliError::new(ExitCode::Input, format!("QHPP_TOL={e:?} is not a number")))?,
        (None, None) => DEFAULT_TOL,
    };
    oracle::integrate::check_tol(tol).map_err(|e| CliError::new(ExitCode::Input, e.to_string()))?;
    Ok(tol)
}

fn parse_coprime(text: &str) -> Result<PolySystem, CliError> {
    let s = parse_system(text).map_err(|e| CliError::new(ExitCode::Input, e.to_string()))?;
    match coprime_check(&s) {
        Coprimality::Coprime => Ok(s),
        Coprimality::CommonFactor(g) => Err(CliError::new(
            ExitCode::CommonFactor,
            format!("components share the common factor {g}"),
        )),
    }
}

/// Directions, homogeneous code and center verdict of a homogeneous system.
struct HomogeneousPart {
    reports: Vec<DirectionReport>,
    code: Option<PortraitCode>,
    center: Option<&'static str>,
}

fn analyze_homogeneous(h: &PolySystem, warnings: &mut Vec<String>) -> HomogeneousPart {
    let reports = match char_polys(h).and_then(|cp| characteristic_directions(&cp)) {
        Ok(r) => r,
        Err(e) => {
            warnings.push(format!("no direction analysis: {e}"));
            Vec::new()
        }
    };
    let code = match homogeneous_portrait(h) {
        Ok((_, c)) => Some(c),
        Err(e) => {
            warnings.push(format!("no homogeneous portrait: {e}"));
            None
        }
    };
    let center = center_test(h).ok().map(|v| v.as_str());
    HomogeneousPart { reports, code, center }
}

fn oracle_summary(h: &PolySystem, reports: &[DirectionReport], tol: f64, warnings: &mut Vec<String>) -> OracleJson {
    let probes = probe_all(h, reports, &PROBE_RADII, tol).unwrap_or_default();
    let items: Vec<ProbeJson> = probes.iter().zip(reports).map(|(p, r)| ProbeJson::new(p, r)).collect();
    for (p, r) in items.iter().zip(reports) {
        if p.agrees == Some(false) {
            warnings.push(format!(
                "oracle disagrees at angle {:.6}: probe {} vs exact {}",
                p.angle,
                p.verdict,
                r.local_type_blowup.as_str()
            ));
        }
    }
    OracleJson::new(tol, items)
}

/// Full pipeline on the text of a system file.
pub fn analyze(text: &str, tol: f64, run_oracle: bool) -> Result<AnalysisReport, CliError> {
    let s = parse_coprime(text)?;
    let mut warnings = Vec::new();
    let mut report = AnalysisReport {
        input: (&s).into(),
        homogeneous_input: s.is_homogeneous(),
        weights: None,
        structure: None,
        transforms: Vec::new(),
        directions: Vec::new(),
        homogeneous_portrait: None,
        portrait: None,
        center: None,
        x111: None,
        h2: None,
        oracle: None,
        warnings: Vec::new(),
    };
    let weights = weight_vectors(&s);
    if s.is_homogeneous() {
        report.weights = weights.as_ref().ok().map(WeightsJson::from);
        let part = analyze_homogeneous(&s, &mut warnings);
        report.directions = part.reports.iter().map(DirectionJson::from).collect();
        report.homogeneous_portrait = part.code.as_ref().map(CodeJson::from);
        report.portrait = report.homogeneous_portrait.clone();
        report.center = part.center;
        if run_oracle && !part.reports.is_empty() {
            report.oracle = Some(oracle_summary(&s, &part.reports, tol, &mut warnings));
        }
        report.warnings = warnings;
        return Ok(report);
    }
    let ws = weights.map_err(|e| CliError::new(ExitCode::NotQuasiHomogeneous, e.to_string()))?;
    let w = ws.minimal;
    report.weights = Some((&ws).into());
    let family = match decompose(&s, &w) {
        Ok(d) => {
            let name = match &d {
                qhcore::Decomposition::Graded(g) => Some(g.name()),
                qhcore::Decomposition::DegreeOne(_) => None,
            };
            report.structure = Some((&d).into());
            name
        }
        Err(e) => {
            warnings.push(format!("no structural decomposition: {e}"));
            None
        }
    };
    match homogenize_lcm(&s, &w) {
        Ok((h, t)) => report.transforms.push(TransformJson::new(&h, &t)),
        Err(e) => warnings.push(format!("lcm path: {e}")),
    }
    let (h, t) = homogenize_min(&s, &w).map_err(|e| CliError::new(ExitCode::NotQuasiHomogeneous, e.to_string()))?;
    report.transforms.push(TransformJson::new(&h, &t));
    if h.degree == 0 {
        warnings.push("constant target: the origin is not a singular point of the homogenized system".into());
        report.warnings = warnings;
        return Ok(report);
    }
    let part = analyze_homogeneous(&h.sys, &mut warnings);
    report.directions = part.reports.iter().map(DirectionJson::from).collect();
    report.homogeneous_portrait = part.code.as_ref().map(CodeJson::from);
    report.center = part.center;
    let mut code = match &part.code {
        Some(c) => match pull_back(c, &t) {
            Ok(q) => Some(q),
            Err(e) => {
                warnings.push(format!("no pulled-back portrait: {e}"));
                None
            }
        },
        None => None,
    };
    if family.as_deref() == Some("X_111") {
        match x111_portrait(&s) {
            Ok(r) => {
                warnings.extend(r.warnings.iter().cloned());
                report.x111 = Some((&r).into());
                code = Some(r.code);
            }
            Err(e) => warnings.push(format!("X_111 classification: {e}")),
        }
    } else if h.target_class == Some(TargetClass::H2) {
        match h2_case(&s) {
            Ok(c) => {
                report.h2 = Some((&c).into());
                code = Some(c.code);
            }
            Err(e) => warnings.push(format!("H2 classification: {e}")),
        }
    }
    report.portrait = code.as_ref().map(CodeJson::from);
    if run_oracle && !part.reports.is_empty() {
        report.oracle = Some(oracle_summary(&h.sys, &part.reports, tol, &mut warnings));
    }
    report.warnings = warnings;
    Ok(report)
}

pub fn catalog(degree: u32) -> Result<CatalogJson, CliError> {
    if degree != 5 {
        return Err(CliError::new(
            ExitCode::UnsupportedDegree,
            format!("catalog is available for degree 5 only, not {degree}"),
        ));
    }
    let families: Vec<FamilyJson> = quintic_catalog()
        .iter()
        .map(|f| {
            let (dx, dy) = f.symbolic();
            FamilyJson {
                name: f.name.clone(),
                weight: (&f.weight).into(),
                p: f.p,
                varsigma: f.varsigma,
                kappa: f.kappa,
                dx,
                dy,
                condition: f.condition(),
            }
        })
        .collect();
    Ok(CatalogJson {
        degree,
        count: families.len(),
        families,
    })
}

pub fn census() -> CensusJson {
    let c = x111_census();
    CensusJson {
        greater: c.count(A14Regime::Greater),
        less: c.count(A14Regime::Less),
        equal: c.count(A14Regime::Equal),
        total: c.total(),
        labels: c
            .labels
            .iter()
            .map(|(r, l)| (r.as_str(), l.iter().copied().collect()))
            .collect(),
        unmatched: c
            .unmatched
            .iter()
            .map(|(r, l)| (r.as_str(), l.iter().cloned().collect()))
            .collect(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum PlotFormat {
    Csv,
    Svg,
}

pub fn plot(text: &str, window: &str, n: usize, format: PlotFormat, tol: f64) -> Result<String, CliError> {
    let s = parse_system(text).map_err(|e| CliError::new(ExitCode::Input, e.to_string()))?;
    let w: Window = window
        .parse()
        .map_err(|e: OracleError| CliError::new(ExitCode::BadWindow, e.to_string()))?;
    let lines = streamlines(&s, &w, n, tol).map_err(|e| CliError::new(ExitCode::Input, e.to_string()))?;
    Ok(match format {
        PlotFormat::Csv => to_csv(&lines),
        PlotFormat::Svg => to_svg(&lines, &w),
    })
}

#[derive(Serialize, Debug, Clone, PartialEq)]
pub struct OracleCheckJson {
    pub target: SystemJson,
    pub directions: Vec<DirectionJson>,
    pub oracle: OracleJson,
    pub warnings: Vec<String>,
}

/// Probes every characteristic direction of the homogeneous system analyzed
/// for the input (the input itself, or its minimal-path target).
pub fn oracle_check(text: &str, radius: f64, tol: f64) -> Result<OracleCheckJson, CliError> {
    let s = parse_coprime(text)?;
    let h = if s.is_homogeneous() {
        s
    } else {
        let w = weight_vectors(&s)
            .map_err(|e| CliError::new(ExitCode::NotQuasiHomogeneous, e.to_string()))?
            .minimal;
        homogenize_min(&s, &w)
            .map_err(|e| CliError::new(ExitCode::NotQuasiHomogeneous, e.to_string()))?
            .0
            .sys
    };
    let mut warnings = Vec::new();
    let reports = char_polys(&h)
        .and_then(|cp| characteristic_directions(&cp))
        .map_err(|e| CliError::new(ExitCode::Input, e.to_string()))?;
    let radii = [radius, radius / 5.0];
    let probes = probe_all(&h, &reports, &radii, tol).map_err(|e| CliError::new(ExitCode::Input, e.to_string()))?;
    let items: Vec<ProbeJson> = probes.iter().zip(&reports).map(|(p, r)| ProbeJson::new(p, r)).collect();
    for p in items.iter().filter(|p| p.agrees == Some(false)) {
        warnings.push(format!("oracle disagrees at angle {:.6}", p.angle));
    }
    Ok(OracleCheckJson {
        target: (&h).into(),
        directions: reports.iter().map(DirectionJson::from).collect(),
        oracle: OracleJson::new(tol, items),
        warnings,
    })
}
