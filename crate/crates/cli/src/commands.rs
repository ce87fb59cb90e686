//! Argument definitions and command dispatch.

use std::io::Write;
use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use tricurve_core::euclid::{self, CubicPoint, EuclidParams, EuclidTriangle, WeierstrassPoint};
use tricurve_core::family::{self, FamilyRecord, HyperChain, DEFAULT_MAX_HEIGHT};
use tricurve_core::hyper::{self, HyperParams, HyperTriangle, QuarticPoint, SpacePoint};
use tricurve_core::projective::{PPoint2, PPoint3};
use tricurve_core::Rat;

use crate::error::CliError;
use crate::payload::*;
use crate::plot::{self, Curve, PlotSpec, Viewport, DEFAULT_RESOLUTION};
use crate::text::{parse_rat, parse_triple, PointText};

/// Tanh side lengths used when `hyper family` gets no `--sides`.
pub const DEFAULT_HYPER_SIDES: &str = "672/697,104/185,40/41";

#[derive(Debug, Parser)]
#[command(name = "tricurve", version, about = "Rational triangles sharing inradius and semiperimeter")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Euclidean triangles and the cubic `s(xy − r²) = xy(x + y)`.
    #[command(subcommand)]
    Euclid(EuclidCmd),
    /// Hyperbolic triangles and their quartic, given by tanh of the sides.
    #[command(subcommand)]
    Hyper(HyperCmd),
    /// Draw the real locus of a curve as SVG and count its components.
    #[command(subcommand)]
    Plot(PlotCmd),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum ChainArg {
    #[default]
    Twisted,
    Plain,
}

#[derive(Debug, Args)]
pub struct EuclidCurveArgs {
    #[arg(long, value_parser = parse_rat, allow_hyphen_values = true)]
    pub s: Rat,
    #[arg(long, value_parser = parse_rat, allow_hyphen_values = true)]
    pub r2: Rat,
}

#[derive(Debug, Args)]
pub struct HyperCurveArgs {
    #[arg(long, value_parser = parse_rat, allow_hyphen_values = true)]
    pub sigma: Rat,
    #[arg(long, value_parser = parse_rat, allow_hyphen_values = true)]
    pub rho2: Rat,
}

#[derive(Debug, Subcommand)]
pub enum EuclidCmd {
    /// Parameters and curve point of a triangle, listed as `a b c`.
    FromSides {
        #[arg(num_args = 3, value_parser = parse_rat)]
        sides: Vec<Rat>,
        /// Also print decimal side lengths (approximate).
        #[arg(long)]
        lengths: bool,
    },
    /// Describe a point of the cubic.
    Point {
        #[command(flatten)]
        curve: EuclidCurveArgs,
        #[arg(long, allow_hyphen_values = true)]
        point: PointText,
    },
    /// Sum of two points.
    Add {
        #[command(flatten)]
        curve: EuclidCurveArgs,
        #[arg(long, allow_hyphen_values = true)]
        p: PointText,
        #[arg(long, allow_hyphen_values = true)]
        q: PointText,
        #[arg(long, value_enum, default_value = "cubic")]
        model: Model,
    },
    /// The multiple `n·P`.
    Mul {
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
        #[arg(long, allow_hyphen_values = true)]
        point: PointText,
        #[command(flatten)]
        curve: EuclidCurveArgs,
        #[arg(long, value_enum, default_value = "cubic")]
        model: Model,
    },
    /// Triangles from the odd multiples of a triangle's point.
    Family {
        #[arg(long, value_parser = parse_triple)]
        sides: [Rat; 3],
        #[arg(long, default_value_t = 3)]
        count: usize,
        #[arg(long, default_value_t = DEFAULT_MAX_HEIGHT)]
        max_height: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        lengths: bool,
    },
    /// Rational points of order two.
    TwoTorsion {
        #[command(flatten)]
        curve: EuclidCurveArgs,
    },
    /// Positive-rank certificate for the triple `(m² − n², 2mn, m² + n²)`.
    CertifyRank {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        n: u64,
    },
}

#[derive(Debug, Subcommand)]
pub enum HyperCmd {
    /// Parameters, quartic point and lift of a triangle given by tanh of its sides.
    FromSides {
        #[arg(num_args = 3, value_parser = parse_rat)]
        tsides: Vec<Rat>,
        /// Also print decimal side lengths (approximate).
        #[arg(long)]
        lengths: bool,
    },
    /// Fourth intersection of the composition plane of `P` and `Q`.
    Compose {
        #[command(flatten)]
        curve: HyperCurveArgs,
        #[arg(long, allow_hyphen_values = true)]
        p: PointText,
        #[arg(long, allow_hyphen_values = true)]
        q: PointText,
        #[arg(long, value_enum, default_value = "nonneg-z")]
        branch: BranchArg,
    },
    /// Group sum with the base point as identity.
    Add {
        #[command(flatten)]
        curve: HyperCurveArgs,
        #[arg(long, allow_hyphen_values = true)]
        p: PointText,
        #[arg(long, allow_hyphen_values = true)]
        q: PointText,
    },
    /// Triangles along the composition chain of a triangle's point.
    Family {
        #[arg(long, value_parser = parse_triple, default_value = DEFAULT_HYPER_SIDES)]
        sides: [Rat; 3],
        #[arg(long, default_value_t = 3)]
        count: usize,
        #[arg(long, default_value_t = DEFAULT_MAX_HEIGHT)]
        max_height: usize,
        #[arg(long, value_enum, default_value = "twisted")]
        chain: ChainArg,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        lengths: bool,
    },
    /// Right triangles with leg denominators up to a bound.
    Scan {
        #[arg(long)]
        max_denominator: u64,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
}

#[derive(Debug, Args)]
pub struct PlotArgs {
    /// `xmin,xmax,ymin,ymax`; defaults to (−10,10)² for the cubic and (−3,3)² for the quartic.
    #[arg(long, allow_hyphen_values = true)]
    pub viewport: Option<String>,
    #[arg(long, default_value_t = DEFAULT_RESOLUTION)]
    pub resolution: usize,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Subcommand)]
pub enum PlotCmd {
    Cubic {
        #[command(flatten)]
        curve: EuclidCurveArgs,
        #[command(flatten)]
        plot: PlotArgs,
    },
    Quartic {
        #[command(flatten)]
        curve: HyperCurveArgs,
        #[command(flatten)]
        plot: PlotArgs,
    },
}

pub fn run(cli: Cli, out: &mut dyn Write) -> Result<(), CliError> {
    match cli.command {
        Command::Euclid(cmd) => run_euclid(cmd, out),
        Command::Hyper(cmd) => run_hyper(cmd, out),
        Command::Plot(cmd) => run_plot(cmd, out),
    }
}

fn emit<T: Serialize>(out: &mut dyn Write, doc: &T) -> Result<(), CliError> {
    serde_json::to_writer_pretty(&mut *out, doc)?;
    writeln!(out)?;
    Ok(())
}

fn sides3(v: Vec<Rat>) -> Result<[Rat; 3], CliError> {
    <[Rat; 3]>::try_from(v).map_err(|_| CliError::usage("expected three side values"))
}

fn euclid_params(c: EuclidCurveArgs) -> Result<EuclidParams, CliError> {
    Ok(EuclidParams::new(c.r2, c.s)?)
}

fn hyper_params(c: HyperCurveArgs) -> Result<HyperParams, CliError> {
    Ok(HyperParams::new(c.rho2, c.sigma)?)
}

pub fn cubic_point(params: &EuclidParams, p: &PointText) -> Result<CubicPoint, CliError> {
    Ok(match p {
        PointText::Affine(x, y) => CubicPoint::from_affine(params.clone(), x, y)?,
        PointText::Base => CubicPoint::identity(params.clone()),
        PointText::Projective(c) => {
            let c =
                <[Rat; 3]>::try_from(c.clone()).map_err(|_| CliError::usage("expected a point [x:y:z]"))?;
            CubicPoint::new(params.clone(), PPoint2::new(c)?)?
        }
    })
}

pub fn weierstrass_point(params: &EuclidParams, p: &PointText) -> Result<WeierstrassPoint, CliError> {
    Ok(match p {
        PointText::Affine(x, y) => WeierstrassPoint::from_affine(params.clone(), x, y)?,
        PointText::Base => WeierstrassPoint::identity(params.clone()),
        PointText::Projective(c) => {
            let c =
                <[Rat; 3]>::try_from(c.clone()).map_err(|_| CliError::usage("expected a point [X:Y:Z]"))?;
            WeierstrassPoint::new(params.clone(), PPoint2::new(c)?)?
        }
    })
}

pub fn space_point(params: &HyperParams, p: &PointText) -> Result<SpacePoint, CliError> {
    Ok(match p {
        PointText::Affine(x, y) => {
            hyper::lift_to_h(&QuarticPoint::new(params.clone(), x.clone(), y.clone())?)
        }
        PointText::Base => hyper::base_point(params)?,
        PointText::Projective(c) => {
            let c =
                <[Rat; 4]>::try_from(c.clone()).map_err(|_| CliError::usage("expected a point [X:Y:Z:T]"))?;
            SpacePoint::new(params.clone(), PPoint3::new(c)?)?
        }
    })
}

fn run_euclid(cmd: EuclidCmd, out: &mut dyn Write) -> Result<(), CliError> {
    match cmd {
        EuclidCmd::FromSides { sides, lengths } => {
            let t = EuclidTriangle::from_listing(sides3(sides)?)?;
            emit(out, &EuclidSummary::new(&t, lengths)?)
        }
        EuclidCmd::Point { curve, point } => {
            let params = euclid_params(curve)?;
            emit(out, &EuclidPointInfo::new(&cubic_point(&params, &point)?)?)
        }
        EuclidCmd::Add { curve, p, q, model } => {
            let params = euclid_params(curve)?;
            let point = match model {
                Model::Cubic => cubic_point_text(&euclid::cubic_add(
                    &cubic_point(&params, &p)?,
                    &cubic_point(&params, &q)?,
                )?),
                Model::Weierstrass => weierstrass_point_text(&euclid::weierstrass_add(
                    &weierstrass_point(&params, &p)?,
                    &weierstrass_point(&params, &q)?,
                )?),
            };
            emit(out, &EuclidGroupResult::new(&params, model, None, point))
        }
        EuclidCmd::Mul { n, point, curve, model } => {
            let params = euclid_params(curve)?;
            let result = match model {
                Model::Cubic => cubic_point_text(&euclid::cubic_mul(n, &cubic_point(&params, &point)?)?),
                Model::Weierstrass => {
                    weierstrass_point_text(&euclid::weierstrass_mul(n, &weierstrass_point(&params, &point)?)?)
                }
            };
            emit(out, &EuclidGroupResult::new(&params, model, Some(n), result))
        }
        EuclidCmd::Family { sides, count, max_height, format, lengths } => {
            let t = EuclidTriangle::from_listing(sides)?;
            let rec = family::euclid_family(&t, count, max_height)?;
            write_family(out, &rec, format, lengths)
        }
        EuclidCmd::TwoTorsion { curve } => {
            let params = euclid_params(curve)?;
            let tt = euclid::two_torsion(&params)?;
            emit(out, &TwoTorsionDoc::new(&params, &tt))
        }
        EuclidCmd::CertifyRank { m, n } => {
            let cert = euclid::rank_positive_certificate(m, n)?;
            emit(out, &CertificateDoc::new(&cert))
        }
    }
}

fn run_hyper(cmd: HyperCmd, out: &mut dyn Write) -> Result<(), CliError> {
    match cmd {
        HyperCmd::FromSides { tsides, lengths } => {
            let t = HyperTriangle::new(sides3(tsides)?)?;
            emit(out, &HyperSummary::new(&t, lengths)?)
        }
        HyperCmd::Compose { curve, p, q, branch } => {
            let params = hyper_params(curve)?;
            let (p, q) = (space_point(&params, &p)?, space_point(&params, &q)?);
            let r = hyper::compose(&p, &q, branch.into())?;
            emit(out, &HyperGroupResult::new(&r, branch))
        }
        HyperCmd::Add { curve, p, q } => {
            let params = hyper_params(curve)?;
            let (p, q) = (space_point(&params, &p)?, space_point(&params, &q)?);
            let r = hyper::hyper_add(&p, &q)?;
            emit(out, &HyperGroupResult::new(&r, BranchArg::Literal))
        }
        HyperCmd::Family { sides, count, max_height, chain, format, lengths } => {
            let t = HyperTriangle::new(sides)?;
            let chain = match chain {
                ChainArg::Twisted => HyperChain::Twisted,
                ChainArg::Plain => HyperChain::Plain,
            };
            let rec = family::hyper_family_with(&t, count, max_height, chain)?;
            write_family(out, &rec, format, lengths)
        }
        HyperCmd::Scan { max_denominator, format } => {
            let lines: Vec<ScanLine> =
                parallel_scan(max_denominator)?.par_iter().map(ScanLine::new).collect();
            match format {
                Format::Json => {
                    for line in &lines {
                        serde_json::to_writer(&mut *out, line)?;
                        writeln!(out)?;
                    }
                }
                Format::Csv => {
                    let mut w = csv::Writer::from_writer(&mut *out);
                    w.write_record(ScanLine::csv_header())?;
                    for line in &lines {
                        w.write_record(line.csv_row())?;
                    }
                    w.flush()?;
                }
            }
            Ok(())
        }
    }
}

fn write_family(
    out: &mut dyn Write,
    rec: &FamilyRecord,
    format: Format,
    lengths: bool,
) -> Result<(), CliError> {
    let lines: Vec<FamilyLine> = rec.items.iter().map(|i| family_line(i, &rec.params, lengths)).collect();
    match format {
        Format::Json => {
            for line in &lines {
                writeln!(out, "{}", line.to_json()?)?;
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            if let Some(first) = lines.first() {
                w.write_record(first.csv_header())?;
            }
            for line in &lines {
                w.write_record(line.csv_row())?;
            }
            w.flush()?;
        }
    }
    Ok(())
}

/// Contiguous denominator ranges of roughly equal work.
fn shards(max_den: u64, pieces: u64) -> Vec<RangeInclusive<u64>> {
    if max_den < 2 {
        return Vec::new();
    }
    let total: u64 = (2..=max_den).sum();
    let target = total.div_ceil(pieces.max(1));
    let mut out = Vec::new();
    let (mut start, mut acc) = (2, 0);
    for q in 2..=max_den {
        acc += q;
        if acc >= target || q == max_den {
            out.push(start..=q);
            start = q + 1;
            acc = 0;
        }
    }
    out
}

/// Same result as the sequential scan, computed shard by shard.
pub fn parallel_scan(max_den: u64) -> Result<Vec<HyperTriangle>, CliError> {
    let pieces = 4 * rayon::current_num_threads() as u64;
    let parts = shards(max_den, pieces)
        .into_par_iter()
        .map(|r| hyper::pythagorean_scan_shard(max_den, r))
        .collect::<Result<Vec<_>, _>>()?;
    let mut all: Vec<HyperTriangle> = parts.into_iter().flatten().collect();
    all.sort_by(|a, b| a.tsides()[..2].cmp(&b.tsides()[..2]));
    Ok(all)
}

pub fn parse_viewport(s: &str) -> Result<Viewport, CliError> {
    let v = s
        .split(',')
        .map(|p| p.trim().parse::<f64>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| CliError::usage(format!("bad viewport: {s:?}")))?;
    match v.as_slice() {
        &[xmin, xmax, ymin, ymax] if v.iter().all(|x| x.is_finite()) => {
            Ok(Viewport { xmin, xmax, ymin, ymax })
        }
        _ => Err(CliError::usage("viewport needs four finite numbers xmin,xmax,ymin,ymax")),
    }
}

fn run_plot(cmd: PlotCmd, out: &mut dyn Write) -> Result<(), CliError> {
    let (curve, args) = match cmd {
        PlotCmd::Cubic { curve, plot } => (Curve::Cubic { s: curve.s.to_f64(), r2: curve.r2.to_f64() }, plot),
        PlotCmd::Quartic { curve, plot } => {
            (Curve::Quartic { sigma: curve.sigma.to_f64(), rho2: curve.rho2.to_f64() }, plot)
        }
    };
    let viewport = match &args.viewport {
        Some(s) => parse_viewport(s)?,
        None => curve.default_viewport(),
    };
    let spec = PlotSpec::new(curve, viewport, args.resolution).map_err(CliError::Usage)?;
    let contour = plot::trace(&spec);
    std::fs::write(&args.out, plot::render_svg(&spec, &contour))?;
    emit(
        out,
        &PlotReport {
            curve: curve.name().into(),
            components: contour.components,
            resolution: spec.resolution,
            viewport: viewport.as_array(),
            output: args.out.display().to_string(),
        },
    )
}
