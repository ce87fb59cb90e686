//! Serializable documents. Field names are part of the output format.

use serde::{Deserialize, Serialize};
use tricurve_core::euclid::{
    self, CertificateReason, CubicPoint, EuclidParams, EuclidTriangle, RankCertificate, TwoTorsion,
    WeierstrassPoint,
};
use tricurve_core::family::{FamilyItem, FamilyParams};
use tricurve_core::hyper::{self, HyperParams, HyperTriangle, SpacePoint};
use tricurve_core::{Rat, Result};

use crate::text::{approx, rats, PointText, RatText};

pub fn euclid_lengths(sides: &[Rat; 3]) -> Vec<String> {
    sides.iter().map(|s| approx(s.to_f64())).collect()
}

/// `atanh` of each value, the actual hyperbolic side lengths.
pub fn hyper_lengths(tsides: &[Rat; 3]) -> Vec<String> {
    tsides.iter().map(|t| approx(t.to_f64().atanh())).collect()
}

pub fn cubic_point_text(p: &CubicPoint) -> PointText {
    match p.affine() {
        Some((x, y)) => PointText::Affine(x, y),
        None => PointText::projective(p.point().coords()),
    }
}

pub fn weierstrass_point_text(p: &WeierstrassPoint) -> PointText {
    match p.affine() {
        Some((x, y)) => PointText::Affine(x, y),
        None => PointText::projective(p.point().coords()),
    }
}

pub fn space_point_text(p: &SpacePoint) -> PointText {
    PointText::projective(p.coords())
}

/// The projection to the quartic, when finite.
pub fn quartic_text(p: &SpacePoint) -> Option<PointText> {
    hyper::project_to_q(p).ok().map(|q| PointText::affine(q.x(), q.y()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EuclidSummary {
    pub sides: [RatText; 3],
    pub s: RatText,
    pub r2: RatText,
    pub point: PointText,
    pub weierstrass: PointText,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub approx_lengths: Option<Vec<String>>,
}

impl EuclidSummary {
    pub fn new(t: &EuclidTriangle, lengths: bool) -> Result<Self> {
        let params = euclid::params_from_sides(t)?;
        let p = euclid::point_from_triangle(t)?;
        Ok(EuclidSummary {
            sides: rats(t.sides()),
            s: params.s().into(),
            r2: params.r2().into(),
            point: cubic_point_text(&p),
            weierstrass: weierstrass_point_text(&euclid::to_weierstrass(&p)),
            approx_lengths: lengths.then(|| euclid_lengths(t.sides())),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EuclidPointInfo {
    pub s: RatText,
    pub r2: RatText,
    pub point: PointText,
    pub weierstrass: PointText,
    pub triangle_point: bool,
    pub sides: Option<[RatText; 3]>,
    /// Order when finite and at most the search bound.
    pub order: Option<u32>,
}

impl EuclidPointInfo {
    pub fn new(p: &CubicPoint) -> Result<Self> {
        let sides = if euclid::is_triangle_point(p) {
            Some(rats(euclid::triangle_from_point(p)?.sides()))
        } else {
            None
        };
        Ok(EuclidPointInfo {
            s: p.params().s().into(),
            r2: p.params().r2().into(),
            point: cubic_point_text(p),
            weierstrass: weierstrass_point_text(&euclid::to_weierstrass(p)),
            triangle_point: sides.is_some(),
            sides,
            order: euclid::torsion_order_cubic(p)?,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Model {
    Cubic,
    Weierstrass,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EuclidGroupResult {
    pub s: RatText,
    pub r2: RatText,
    pub model: Model,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<i64>,
    pub point: PointText,
}

impl EuclidGroupResult {
    pub fn new(params: &EuclidParams, model: Model, n: Option<i64>, point: PointText) -> Self {
        EuclidGroupResult { s: params.s().into(), r2: params.r2().into(), model, n, point }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EuclidFamilyLine {
    pub step: u64,
    pub s: RatText,
    pub r2: RatText,
    pub point: PointText,
    pub sides: [RatText; 3],
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub approx_lengths: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HyperFamilyLine {
    pub step: u64,
    pub sigma: RatText,
    pub rho2: RatText,
    pub point: PointText,
    pub tsides: [RatText; 3],
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub approx_lengths: Option<Vec<String>>,
}

pub enum FamilyLine {
    Euclid(EuclidFamilyLine),
    Hyper(HyperFamilyLine),
}

impl FamilyLine {
    pub fn euclid(params: &EuclidParams, item: &FamilyItem, lengths: bool) -> Self {
        let sides = item.triangle.values();
        FamilyLine::Euclid(EuclidFamilyLine {
            step: item.step,
            s: params.s().into(),
            r2: params.r2().into(),
            point: PointText::affine(&item.point.0, &item.point.1),
            sides: rats(sides),
            approx_lengths: lengths.then(|| euclid_lengths(sides)),
        })
    }

    pub fn hyper(params: &HyperParams, item: &FamilyItem, lengths: bool) -> Self {
        let tsides = item.triangle.values();
        FamilyLine::Hyper(HyperFamilyLine {
            step: item.step,
            sigma: params.sigma().into(),
            rho2: params.rho2().into(),
            point: PointText::affine(&item.point.0, &item.point.1),
            tsides: rats(tsides),
            approx_lengths: lengths.then(|| hyper_lengths(tsides)),
        })
    }

    pub fn csv_header(&self) -> Vec<&'static str> {
        match self {
            FamilyLine::Euclid(_) => vec!["step", "s", "r2", "x", "y", "side1", "side2", "side3"],
            FamilyLine::Hyper(_) => {
                vec!["step", "sigma", "rho2", "x", "y", "tside1", "tside2", "tside3"]
            }
        }
    }

    pub fn csv_row(&self) -> Vec<String> {
        let (step, a, b, point, values) = match self {
            FamilyLine::Euclid(l) => (l.step, &l.s, &l.r2, &l.point, &l.sides),
            FamilyLine::Hyper(l) => (l.step, &l.sigma, &l.rho2, &l.point, &l.tsides),
        };
        let (x, y) = match point {
            PointText::Affine(x, y) => (x.to_string(), y.to_string()),
            other => (other.to_string(), String::new()),
        };
        let mut row = vec![step.to_string(), a.to_string(), b.to_string(), x, y];
        row.extend(values.iter().map(ToString::to_string));
        row
    }

    pub fn to_json(&self) -> serde_json::Result<String> {
        match self {
            FamilyLine::Euclid(l) => serde_json::to_string(l),
            FamilyLine::Hyper(l) => serde_json::to_string(l),
        }
    }
}

/// Builds the line for any family item.
pub fn family_line(item: &FamilyItem, params: &FamilyParams, lengths: bool) -> FamilyLine {
    match params {
        FamilyParams::Euclid(p) => FamilyLine::euclid(p, item, lengths),
        FamilyParams::Hyper(p) => FamilyLine::hyper(p, item, lengths),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoTorsionDoc {
    pub s: RatText,
    pub r2: RatText,
    pub points: Vec<PointText>,
    pub real_count: usize,
    pub positive_count: usize,
}

impl TwoTorsionDoc {
    pub fn new(params: &EuclidParams, tt: &TwoTorsion) -> Self {
        TwoTorsionDoc {
            s: params.s().into(),
            r2: params.r2().into(),
            points: tt.points.iter().map(cubic_point_text).collect(),
            real_count: tt.real_count,
            positive_count: tt.positive_count,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Certificate {
    Applicable { cube_root_floor: u64, half_cube_root_floor: Option<u64> },
    NotApplicable { reason: Reason, root: u64 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Reason {
    OddCube,
    TwiceCube,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateDoc {
    pub m: u64,
    pub n: u64,
    pub s: RatText,
    pub r2: RatText,
    pub sides: [RatText; 3],
    pub certificate: Certificate,
}

impl CertificateDoc {
    pub fn new(cert: &RankCertificate) -> Self {
        let curve = cert.curve();
        let certificate = match cert {
            RankCertificate::Applicable { cube_root_floor, half_cube_root_floor, .. } => {
                Certificate::Applicable {
                    cube_root_floor: *cube_root_floor,
                    half_cube_root_floor: *half_cube_root_floor,
                }
            }
            RankCertificate::NotApplicable { reason, .. } => match reason {
                CertificateReason::OddCube { root } => {
                    Certificate::NotApplicable { reason: Reason::OddCube, root: *root }
                }
                CertificateReason::TwiceCube { root } => {
                    Certificate::NotApplicable { reason: Reason::TwiceCube, root: *root }
                }
            },
        };
        CertificateDoc {
            m: curve.m,
            n: curve.n,
            s: curve.params.s().into(),
            r2: curve.params.r2().into(),
            sides: rats(curve.triangle.sides()),
            certificate,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HyperSummary {
    pub tsides: [RatText; 3],
    pub sigma: RatText,
    pub rho2: RatText,
    pub point: PointText,
    pub lift: PointText,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub approx_lengths: Option<Vec<String>>,
}

impl HyperSummary {
    pub fn new(t: &HyperTriangle, lengths: bool) -> Result<Self> {
        let q = hyper::point_from_triangle(t)?;
        let params = q.params();
        Ok(HyperSummary {
            tsides: rats(t.tsides()),
            sigma: params.sigma().into(),
            rho2: params.rho2().into(),
            point: PointText::affine(q.x(), q.y()),
            lift: space_point_text(&hyper::lift_to_h(&q)),
            approx_lengths: lengths.then(|| hyper_lengths(t.tsides())),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum BranchArg {
    Literal,
    NonnegZ,
}

impl From<BranchArg> for hyper::Branch {
    fn from(b: BranchArg) -> Self {
        match b {
            BranchArg::Literal => hyper::Branch::Literal,
            BranchArg::NonnegZ => hyper::Branch::NonNegativeZ,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HyperGroupResult {
    pub sigma: RatText,
    pub rho2: RatText,
    pub branch: BranchArg,
    pub lift: PointText,
    /// `None` when the point projects to infinity.
    pub point: Option<PointText>,
}

impl HyperGroupResult {
    pub fn new(r: &SpacePoint, branch: BranchArg) -> Self {
        let params = r.params();
        HyperGroupResult {
            sigma: params.sigma().into(),
            rho2: params.rho2().into(),
            branch,
            lift: space_point_text(r),
            point: quartic_text(r),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanLine {
    pub tsides: [RatText; 3],
    pub sigma: Option<RatText>,
    pub rho2: Option<RatText>,
}

impl ScanLine {
    pub fn new(t: &HyperTriangle) -> Self {
        let params = hyper::params_from_sides(t).ok();
        ScanLine {
            tsides: rats(t.tsides()),
            sigma: params.as_ref().map(|p| p.sigma().into()),
            rho2: params.as_ref().map(|p| p.rho2().into()),
        }
    }

    pub fn csv_header() -> [&'static str; 5] {
        ["tside1", "tside2", "tside3", "sigma", "rho2"]
    }

    pub fn csv_row(&self) -> Vec<String> {
        let mut row: Vec<String> = self.tsides.iter().map(ToString::to_string).collect();
        for v in [&self.sigma, &self.rho2] {
            row.push(v.as_ref().map(ToString::to_string).unwrap_or_default());
        }
        row
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PlotReport {
    pub curve: String,
    pub components: usize,
    pub resolution: usize,
    pub viewport: [f64; 4],
    pub output: String,
}
