//! JSON shapes of the command outputs. Field order is declaration order and
//! maps are sorted, so output is byte-stable. Rationals are strings `a/b`;
//! algebraic numbers are a defining polynomial with an isolating interval.

use homoganalysis::{AlgebraicRoot, Direction, DirectionReport, FlowSign, OrbitCount, Stability};
use homogenize::{HomogSystem, Symmetry, TransformPath, TransformRecord};
use oracle::SectorProbe;
use polyparse::{PolySystem, Rat};
use portrait::{H2Case, H2Infinity, InfinityRing, PortraitCode, Rotation, X111Report};
use qhcore::{Decomposition, WeightFamily, WeightSet, WeightVector};
use serde::Serialize;
use std::collections::BTreeMap;

fn rat(r: &Rat) -> String {
    r.to_string()
}

#[derive(Serialize, Debug, Clone, PartialEq)]
pub struct SystemJson {
    pub p: String,
    pub q: String,
    pub degree: u32,
}

impl From<&PolySystem> for SystemJson {
    fn from(s: &PolySystem) -> Self {
        SystemJson {
            p: s.p().to_string(),
            q: s.q().to_string(),
            degree: s.degree(),
        }
    }
}

#[derive(Serialize, Debug, Clone, PartialEq)]
pub struct WeightJson {
    pub s1: u32,
    pub s2: u32,
    pub d: u32,
}

impl From<&WeightVector> for WeightJson {
    fn from(w: &WeightVector) -> Self {
        WeightJson { s1: w.s1, s2: w.s2, d: w.d }
    }
}

#[derive(Serialize, Debug, Clone, PartialEq)]
pub struct WeightsJson {
    pub minimal: WeightJson,
    /// `ray` or `plane`.
    pub family: &'static str,
    /// The first few members of the solution set.
    pub members: Vec<WeightJson>,
}

impl From<&WeightSet> for WeightsJson {
    fn from(w: &WeightSet) -> Self {
        WeightsJson {
            minimal: (&w.minimal).into(),
            family: match w.family {
                WeightFamily::Ray { .. } => "ray",
                WeightFamily::Plane { .. } => "plane",
            },
            members: w.first(3).iter().map(WeightJson::from).collect(),
        }
    }
}

#[derive(Serialize, Debug, Clone, PartialEq)]
pub struct BlockJson {
    pub degree: u32,
    pub role: String,
    pub p: String,
    pub q: String,
}

#[derive(Serialize, Debug, Clone, PartialEq)]
#[serde(tag = "form", rename_all = "kebab-case")]
pub enum StructureJson {
    Graded {
        name: String,
        n: u32,
        p: u32,
        varsigma: u32,
        kappa: u32,
        s: u32,
        swapped: bool,
        blocks: Vec<BlockJson>,
    },
    DegreeOne {
        n: u32,
        a0n: String,
        a10: String,
        b01: String,
        swapped: bool,
    },
}

impl From<&Decomposition> for StructureJson {
    fn from(d: &Decomposition) -> Self {
        match d {
            Decomposition::Graded(g) => StructureJson::Graded {
                name: g.name(),
                n: g.n,
                p: g.p,
                varsigma: g.varsigma,
                kappa: g.kappa,
                s: g.s,
                swapped: g.swapped,
                blocks: g
                    .parts
                    .iter()
                    .map(|b| BlockJson {
                        degree: b.degree,
                        role: format!("{:?}", b.role).to_lowercase(),
                        p: b.p.to_string(),
                        q: b.q.to_string(),
                    })
                    .collect(),
            },
            Decomposition::DegreeOne(f) => StructureJson::DegreeOne {
                n: f.n,
                a0n: rat(&f.a0n),
                a10: rat(&f.a10),
                b01: rat(&f.b01),
                swapped: f.swapped,
            },
        }
    }
}

#[derive(Serialize, Debug, Clone, PartialEq)]
pub struct SymmetryJson {
    pub kind: &'static str,
    pub time_reversed: bool,
}

impl From<&Symmetry> for SymmetryJson {
    fn from(s: &Symmetry) -> Self {
        SymmetryJson {
            kind: s.kind.as_str(),
            time_reversed: s.time_reversed,
        }
    }
}

#[derive(Serialize, Debug, Clone, PartialEq)]
pub struct TransformJson {
    pub path: &'static str,
    pub beta: u32,
    pub expo_x: String,
    pub expo_y: String,
    /// Exponents of `x̃^a ỹ^b` in `dt = x̃^a ỹ^b dt₁`.
    pub time_factor: [String; 2],
    pub chart: &'static str,
    pub swap_xy: bool,
    pub symmetry: SymmetryJson,
    /// Sign of `dt/dt₁` on quadrants I to IV of the working frame.
    pub quadrant_time_signs: [Option<i8>; 4],
    pub target: SystemJson,
    pub target_class: Option<&'static str>,
}

impl TransformJson {
    pub fn new(h: &HomogSystem, t: &TransformRecord) -> Self {
        TransformJson {
            path: match t.path {
                TransformPath::Lcm => "lcm",
                TransformPath::Min => "min",
            },
            beta: t.beta,
            expo_x: rat(&t.expo_x),
            expo_y: rat(&t.expo_y),
            time_factor: [rat(&t.time_factor.x), rat(&t.time_factor.y)],
            chart: t.chart.as_str(),
            swap_xy: t.swap_xy,
            symmetry: (&t.symmetry).into(),
            quadrant_time_signs: t.quadrant_time_signs(),
            target: (&h.sys).into(),
            target_class: h.target_class.map(|c| c.as_str()),
        }
    }
}

#[derive(Serialize, Debug, Clone, PartialEq)]
pub struct RootJson {
    pub polynomial: String,
    /// Isolating interval; a point interval for rational roots.
    pub interval: [String; 2],
    pub approx: f64,
}

impl From<&AlgebraicRoot> for RootJson {
    fn from(r: &AlgebraicRoot) -> Self {
        RootJson {
            polynomial: r.poly.to_string(),
            interval: [rat(&r.lo), rat(&r.hi)],
            approx: r.to_f64(),
        }
    }
}

fn flow(f: FlowSign) -> &'static str {
    match f {
        FlowSign::Outgoing => "outgoing",
        FlowSign::Incoming => "incoming",
    }
}

fn stability(s: Stability) -> &'static str {
    match s {
        Stability::Stable => "stable",
        Stability::Unstable => "unstable",
    }
}

#[derive(Serialize, Debug, Clone, PartialEq)]
pub struct DirectionJson {
    /// A slope root `u0` of `G(1, u)`, or `null` for the `y`-axis.
    pub slope: Option<RootJson>,
    pub multiplicity: usize,
    pub local_type: &'static str,
    pub orbit_count: &'static str,
    pub flow: &'static str,
    pub infinity_type: &'static str,
    pub infinity_stability: Option<&'static str>,
    pub origin_parabolic_side: Option<i8>,
    pub infinity_parabolic_side: Option<i8>,
}

impl From<&DirectionReport> for DirectionJson {
    fn from(d: &DirectionReport) -> Self {
        DirectionJson {
            slope: match &d.direction {
                Direction::Slope(r) => Some(r.into()),
                Direction::Vertical => None,
            },
            multiplicity: d.multiplicity,
            local_type: d.local_type_blowup.as_str(),
            orbit_count: match d.orbit_count_origin {
                OrbitCount::One => "one",
                OrbitCount::Infinite => "infinite",
            },
            flow: flow(d.flow_sign),
            infinity_type: d.infinity_type.as_str(),
            infinity_stability: d.infinity_stability.map(stability),
            origin_parabolic_side: d.origin_parabolic_side,
            infinity_parabolic_side: d.infinity_parabolic_side,
        }
    }
}

#[derive(Serialize, Debug, Clone, PartialEq)]
pub struct RayJson {
    pub label: String,
    pub angle: f64,
    pub flow: &'static str,
    pub local_type: &'static str,
    pub multiplicity: usize,
}

#[derive(Serialize, Debug, Clone, PartialEq)]
pub struct SectorJson {
    pub kind: &'static str,
    pub origin_at_start: bool,
    pub origin_at_end: bool,
}

#[derive(Serialize, Debug, Clone, PartialEq)]
pub struct InfinityPointJson {
    pub at: String,
    pub kind: &'static str,
    pub stability: Option<&'static str>,
}

#[derive(Serialize, Debug, Clone, PartialEq)]
pub struct CodeJson {
    pub plane: &'static str,
    pub word: String,
    pub canonical: String,
    pub index: i32,
    pub rotation: Option<&'static str>,
    pub rays: Vec<RayJson>,
    pub sectors: Vec<SectorJson>,
    /// `"filled"`, `"not-computed"`, or the list of points.
    pub infinity: serde_json::Value,
    pub symmetry: Option<SymmetryJson>,
    pub figure_label: Option<String>,
    pub time_signs: Option<[Option<i8>; 4]>,
    pub notes: Vec<String>,
}

impl From<&PortraitCode> for CodeJson {
    fn from(c: &PortraitCode) -> Self {
        let infinity = match &c.infinity {
            InfinityRing::Filled => serde_json::Value::from("filled"),
            InfinityRing::NotComputed => serde_json::Value::from("not-computed"),
            InfinityRing::Points(ps) => serde_json::to_value(
                ps.iter()
                    .map(|p| InfinityPointJson {
                        at: p.at.clone(),
                        kind: p.kind.as_str(),
                        stability: p.stability.map(stability),
                    })
                    .collect::<Vec<_>>(),
            )
            .expect("plain data"),
        };
        CodeJson {
            plane: match c.plane {
                portrait::Plane::Homogeneous => "homogeneous",
                portrait::Plane::QuasiHomogeneous => "quasi-homogeneous",
            },
            word: c.word(),
            canonical: c.canonical(),
            index: c.index,
            rotation: c.rotation.as_ref().map(|r| match r {
                Rotation::Center => "center",
                Rotation::Focus => "focus",
                Rotation::Unresolved => "unresolved",
            }),
            rays: c
                .rays
                .iter()
                .map(|r| RayJson {
                    label: r.label.clone(),
                    angle: r.angle,
                    flow: flow(r.flow),
                    local_type: r.local_type.as_str(),
                    multiplicity: r.multiplicity,
                })
                .collect(),
            sectors: c
                .sectors
                .iter()
                .map(|s| SectorJson {
                    kind: s.kind.as_str(),
                    origin_at_start: s.origin_at_start,
                    origin_at_end: s.origin_at_end,
                })
                .collect(),
            infinity,
            symmetry: c.symmetry.as_ref().map(SymmetryJson::from),
            figure_label: c.figure_label.clone(),
            time_signs: c.time_signs,
            notes: c.notes.clone(),
        }
    }
}

#[derive(Serialize, Debug, Clone, PartialEq)]
pub struct X111Json {
    pub regime: &'static str,
    pub i1_sign: i8,
    pub coefficients: BTreeMap<&'static str, String>,
    pub delta: String,
    pub root_case: &'static str,
    pub signature: String,
    pub reflected: bool,
    pub label: Option<String>,
}

impl From<&X111Report> for X111Json {
    fn from(r: &X111Report) -> Self {
        let s = &r.signature;
        let c = &s.coeffs;
        X111Json {
            regime: s.regime.as_str(),
            i1_sign: s.i1_sign,
            coefficients: [
                ("c12", &c.c12),
                ("c21", &c.c21),
                ("c30", &c.c30),
                ("d12", &c.d12),
                ("d21", &c.d21),
            ]
            .into_iter()
            .map(|(k, v)| (k, rat(v)))
            .collect(),
            delta: rat(&s.delta),
            root_case: s.root_case.as_str(),
            signature: s.tuple(),
            reflected: s.reflected,
            label: r.label.as_ref().map(|l| l.to_string()),
        }
    }
}

#[derive(Serialize, Debug, Clone, PartialEq)]
pub struct H2Json {
    pub case: &'static str,
    pub portraits_in_case: usize,
    pub alpha22: String,
    pub alpha12: Option<String>,
    pub beta22: Option<String>,
    /// `"unique"` or `"filled"`.
    pub infinity: &'static str,
    pub i1: Option<&'static str>,
}

impl From<&H2Case> for H2Json {
    fn from(h: &H2Case) -> Self {
        let (infinity, i1) = match h.infinity {
            H2Infinity::Unique => ("unique", None),
            H2Infinity::Filled { i1 } => ("filled", i1.map(|k| k.as_str())),
        };
        H2Json {
            case: h.case.as_str(),
            portraits_in_case: h.case.portrait_count(),
            alpha22: rat(&h.alpha22),
            alpha12: h.alpha12.as_ref().map(rat),
            beta22: h.beta22.as_ref().map(rat),
            infinity,
            i1,
        }
    }
}

#[derive(Serialize, Debug, Clone, PartialEq)]
pub struct ProbeJson {
    pub angle: f64,
    pub radius: f64,
    pub verdict: &'static str,
    pub flow: Option<&'static str>,
    /// `null` when the probe was inconclusive.
    pub agrees: Option<bool>,
}

impl ProbeJson {
    pub fn new(p: &SectorProbe, rep: &DirectionReport) -> Self {
        ProbeJson {
            angle: p.angle,
            radius: p.radius,
            verdict: p.verdict.as_str(),
            flow: p.radial.map(flow),
            agrees: p.agrees_with(rep),
        }
    }
}

#[derive(Serialize, Debug, Clone, PartialEq)]
pub struct OracleJson {
    pub tol: f64,
    pub agreements: usize,
    pub disagreements: usize,
    pub inconclusive: usize,
    pub probes: Vec<ProbeJson>,
}

impl OracleJson {
    pub fn new(tol: f64, probes: Vec<ProbeJson>) -> Self {
        let count = |v: Option<bool>| probes.iter().filter(|p| p.agrees == v).count();
        OracleJson {
            tol,
            agreements: count(Some(true)),
            disagreements: count(Some(false)),
            inconclusive: count(None),
            probes,
        }
    }
}

#[derive(Serialize, Debug, Clone, PartialEq)]
pub struct AnalysisReport {
    pub input: SystemJson,
    pub homogeneous_input: bool,
    pub weights: Option<WeightsJson>,
    pub structure: Option<StructureJson>,
    pub transforms: Vec<TransformJson>,
    /// Characteristic directions of the minimal-path target (of the input if
    /// it is homogeneous).
    pub directions: Vec<DirectionJson>,
    pub homogeneous_portrait: Option<CodeJson>,
    pub portrait: Option<CodeJson>,
    pub center: Option<&'static str>,
    pub x111: Option<X111Json>,
    pub h2: Option<H2Json>,
    pub oracle: Option<OracleJson>,
    pub warnings: Vec<String>,
}

#[derive(Serialize, Debug, Clone, PartialEq)]
pub struct FamilyJson {
    pub name: String,
    pub weight: WeightJson,
    pub p: u32,
    pub varsigma: u32,
    pub kappa: u32,
    pub dx: String,
    pub dy: String,
    pub condition: String,
}

#[derive(Serialize, Debug, Clone, PartialEq)]
pub struct CatalogJson {
    pub degree: u32,
    pub count: usize,
    pub families: Vec<FamilyJson>,
}

#[derive(Serialize, Debug, Clone, PartialEq)]
pub struct CensusJson {
    #[serde(rename = "a14>1")]
    pub greater: usize,
    #[serde(rename = "a14<1")]
    pub less: usize,
    #[serde(rename = "a14=1")]
    pub equal: usize,
    pub total: usize,
    pub labels: BTreeMap<&'static str, Vec<&'static str>>,
    /// Sign tuples matched by no table row.
    pub unmatched: BTreeMap<&'static str, Vec<String>>,
}
