//! `sdlab` — bound tables, certified constructions, verification suites,
//! and search runs for sphere-map distortion geometry, with reproducible
//! seeds and machine-readable output.

mod verify;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use sdlab_core::{
    adversarial_vertex_gap_search, affine_dimension, certify_circle_values, diameter,
    equidistant_circumcenter, granas_scan, jung_bound, min_enclosing_ball_with_support,
    min_vertex_distance, minimax_distortion_search, projection_map_sample,
    reduce_to_complementary_dims, sharp_pair, simplex_intersection, sphere_distortion_bound,
    vertex_gap_bound, CertifiedBound, IntersectionWitness, Parity, Point, Relation, Simplex,
    DEFAULT_LP_TOL,
};

#[derive(Parser)]
#[command(
    name = "sdlab",
    version,
    about = "Metric-geometry lab: distortion bounds for maps from round spheres",
    long_about = None
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit the bound table (CSV: n, parity, q, vertex_gap_bound, distortion_bound)
    Bounds {
        /// Largest dimension to tabulate
        #[arg(long = "n-max")]
        n_max: usize,
        /// Sphere radius for the distortion column
        #[arg(long, default_value_t = 1.0)]
        r: f64,
    },
    /// Circumscribed spheres of a point set (JSON file: array of points)
    Circumsphere {
        /// Path to a JSON array of points
        #[arg(long)]
        points: PathBuf,
        #[arg(long, value_enum, default_value_t = FlavorArg::MinEnclosing)]
        flavor: FlavorArg,
        /// Shuffle seed for the enclosing-ball recursion
        #[arg(long, env = "SDLAB_SEED", default_value_t = 0)]
        seed: u64,
    },
    /// Intersect two simplices (JSON files: arrays of points)
    Intersect {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
        /// LP feasibility tolerance
        #[arg(long, default_value_t = DEFAULT_LP_TOL)]
        tol: f64,
        /// Also reduce the pair to complementary dimensions
        #[arg(long)]
        reduce: bool,
    },
    /// Construct the extremal simplex pair attaining the vertex-gap bound
    Construct {
        /// Ambient dimension
        #[arg(long)]
        n: usize,
        /// Edge length
        #[arg(long, default_value_t = 1.0)]
        l: f64,
    },
    /// Certify a distortion lower bound from circle-sampled values
    #[command(name = "certify-1d")]
    Certify1d {
        /// Path to a JSON array of m numbers (m odd)
        #[arg(long)]
        values: PathBuf,
        #[arg(long, default_value_t = 1.0)]
        r: f64,
    },
    /// Sampled distortion of a relation file
    Distortion {
        /// Path to a relation JSON file: {"r": ..., "pairs": [[[x...],[y...]], ...]}
        #[arg(long)]
        relation: PathBuf,
    },
    /// Run the full randomized invariant suites; nonzero exit on violation
    Verify {
        #[arg(long, env = "SDLAB_SEED", default_value_t = 0)]
        seed: u64,
    },
    /// Search harnesses (minimax, adversarial, granas)
    Search {
        #[command(subcommand)]
        kind: SearchCommand,
    },
}

#[derive(Subcommand)]
enum SearchCommand {
    /// Minimize sampled distortion over maps from a fixed sphere sample
    Minimax {
        /// Sphere dimension
        #[arg(long, default_value_t = 1)]
        n: usize,
        /// Image dimension
        #[arg(long, default_value_t = 1)]
        m: usize,
        #[arg(long, default_value_t = 1.0)]
        r: f64,
        /// Sample size (odd when n = 1)
        #[arg(long = "N", default_value_t = 201)]
        count: usize,
        #[arg(long, default_value_t = 20)]
        restarts: usize,
        #[arg(long, env = "SDLAB_SEED", default_value_t = 0)]
        seed: u64,
        /// Write the JSON report here as well as stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Maximize the vertex gap of intersecting pairs under an edge budget
    Adversarial {
        /// Ambient dimension
        #[arg(long, default_value_t = 2)]
        n: usize,
        /// Edge budget
        #[arg(long, default_value_t = 1.0)]
        l: f64,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long = "climb-steps", default_value_t = 60)]
        climb_steps: usize,
        #[arg(long, env = "SDLAB_SEED", default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Scan for a direction whose image hull meets the antipodal one
    Granas {
        /// Relation file to scan; omitted = projection map sample
        #[arg(long)]
        relation: Option<PathBuf>,
        /// Sphere dimension of the generated sample (no --relation)
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long, default_value_t = 1.0)]
        r: f64,
        /// Sample size of the generated sample (no --relation)
        #[arg(long = "N", default_value_t = 2000)]
        count: usize,
        /// Scale; defaults to twice the sample mesh
        #[arg(long)]
        eps: Option<f64>,
        #[arg(long, env = "SDLAB_SEED", default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FlavorArg {
    Equidistant,
    MinEnclosing,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Bounds { n_max, r } => bounds_table(n_max, r),
        Command::Circumsphere {
            points,
            flavor,
            seed,
        } => circumsphere(&points, flavor, seed),
        Command::Intersect { a, b, tol, reduce } => intersect(&a, &b, tol, reduce),
        Command::Construct { n, l } => construct(n, l),
        Command::Certify1d { values, r } => certify(&values, r),
        Command::Distortion { relation } => distortion(&relation),
        Command::Verify { seed } => {
            return Ok(if verify::run(seed) {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            });
        }
        Command::Search { kind } => search(kind),
    }?;
    Ok(ExitCode::SUCCESS)
}

/// Formats with 12 significant digits, plain decimal notation.
fn fmt_sig(v: f64) -> String {
    if v == 0.0 || !v.is_finite() {
        return format!("{v}");
    }
    let mag = v.abs().log10().floor() as i32;
    let decimals = (11 - mag).max(0) as usize;
    format!("{v:.decimals$}")
}

fn bounds_table(n_max: usize, r: f64) -> Result<()> {
    anyhow::ensure!(n_max >= 1, "--n-max must be at least 1");
    println!("n,parity,q,vertex_gap_bound,distortion_bound");
    for n in 1..=n_max {
        let gap = vertex_gap_bound(n, 1.0)?;
        let dist = sphere_distortion_bound(n, r)?;
        let parity = match gap.parity {
            Parity::Even => "even",
            Parity::Odd => "odd",
        };
        println!(
            "{n},{parity},{},{},{}",
            fmt_sig(gap.q),
            fmt_sig(gap.value),
            fmt_sig(dist.value)
        );
    }
    Ok(())
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path, what: &str) -> Result<T> {
    let text = fs::read_to_string(path)
        .with_context(|| format!("reading {} from {}", what, path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing {} from {}", what, path.display()))
}

fn emit<T: Serialize>(value: &T, out: Option<&Path>) -> Result<()> {
    let json = serde_json::to_string_pretty(value)?;
    println!("{json}");
    if let Some(path) = out {
        fs::write(path, format!("{json}\n"))
            .with_context(|| format!("writing report to {}", path.display()))?;
    }
    Ok(())
}

#[derive(Serialize)]
struct JungOutput {
    diameter: f64,
    affine_dim: usize,
    bound: f64,
}

#[derive(Serialize)]
struct CircumsphereOutput {
    version: &'static str,
    flavor: &'static str,
    center: Point,
    radius: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    support: Option<Vec<usize>>,
    jung: JungOutput,
}

fn circumsphere(points_path: &Path, flavor: FlavorArg, seed: u64) -> Result<()> {
    let points: Vec<Point> = read_json(points_path, "point array")?;
    let dim = affine_dimension(&points, sdlab_core::geom::DEFAULT_AFFINE_TOL)?;
    let d = diameter(&points);
    let jung = JungOutput {
        diameter: d,
        affine_dim: dim,
        bound: jung_bound(d, dim),
    };
    let output = match flavor {
        FlavorArg::Equidistant => {
            let s = Simplex::new(points)?;
            let c = equidistant_circumcenter(&s)?;
            CircumsphereOutput {
                version: sdlab_core::VERSION,
                flavor: "equidistant",
                center: c.center,
                radius: c.radius,
                support: None,
                jung,
            }
        }
        FlavorArg::MinEnclosing => {
            let (c, support) = min_enclosing_ball_with_support(&points, seed)?;
            CircumsphereOutput {
                version: sdlab_core::VERSION,
                flavor: "min_enclosing",
                center: c.center,
                radius: c.radius,
                support: Some(support),
                jung,
            }
        }
    };
    emit(&output, None)
}

#[derive(Serialize)]
struct GapOutput {
    i: usize,
    j: usize,
    distance: f64,
}

#[derive(Serialize)]
struct ReducedOutput {
    a: Simplex,
    b: Simplex,
    witness: IntersectionWitness,
}

#[derive(Serialize)]
struct IntersectOutput {
    version: &'static str,
    intersects: bool,
    witness: Option<IntersectionWitness>,
    min_vertex_distance: GapOutput,
    #[serde(skip_serializing_if = "Option::is_none")]
    reduced: Option<ReducedOutput>,
}

fn intersect(a_path: &Path, b_path: &Path, tol: f64, reduce: bool) -> Result<()> {
    let a: Simplex = read_json(a_path, "simplex")?;
    let b: Simplex = read_json(b_path, "simplex")?;
    let witness = simplex_intersection(&a, &b, tol)?;
    let (i, j, distance) = min_vertex_distance(&a, &b);
    let reduced = match (&witness, reduce) {
        (Some(w), true) => {
            let (ra, rb, rw) = reduce_to_complementary_dims(&a, &b, w)?;
            Some(ReducedOutput {
                a: ra,
                b: rb,
                witness: rw,
            })
        }
        _ => None,
    };
    emit(
        &IntersectOutput {
            version: sdlab_core::VERSION,
            intersects: witness.is_some(),
            witness,
            min_vertex_distance: GapOutput { i, j, distance },
            reduced,
        },
        None,
    )
}

#[derive(Serialize)]
struct ConstructOutput {
    version: &'static str,
    n: usize,
    edge: f64,
    a: Simplex,
    b: Simplex,
    vertex_gap: f64,
    bound: f64,
}

fn construct(n: usize, l: f64) -> Result<()> {
    let (a, b) = sharp_pair(n, l)?;
    let (_, _, gap) = min_vertex_distance(&a, &b);
    let bound = vertex_gap_bound(n, l)?.value;
    emit(
        &ConstructOutput {
            version: sdlab_core::VERSION,
            n,
            edge: l,
            a,
            b,
            vertex_gap: gap,
            bound,
        },
        None,
    )
}

#[derive(Serialize)]
struct CertifyOutput {
    version: &'static str,
    #[serde(flatten)]
    bound: CertifiedBound,
}

fn certify(values_path: &Path, r: f64) -> Result<()> {
    let values: Vec<f64> = read_json(values_path, "value array")?;
    let bound = certify_circle_values(&values, r)?;
    emit(
        &CertifyOutput {
            version: sdlab_core::VERSION,
            bound,
        },
        None,
    )
}

#[derive(Serialize)]
struct DistortionOutput {
    version: &'static str,
    pairs: usize,
    distortion: f64,
}

fn distortion(relation_path: &Path) -> Result<()> {
    let relation: Relation = read_json(relation_path, "relation")?;
    emit(
        &DistortionOutput {
            version: sdlab_core::VERSION,
            pairs: relation.len(),
            distortion: relation.distortion(),
        },
        None,
    )
}

fn search(kind: SearchCommand) -> Result<()> {
    match kind {
        SearchCommand::Minimax {
            n,
            m,
            r,
            count,
            restarts,
            seed,
            out,
        } => {
            let report = minimax_distortion_search(n, m, r, count, restarts, seed)?;
            emit(&report, out.as_deref())
        }
        SearchCommand::Adversarial {
            n,
            l,
            trials,
            climb_steps,
            seed,
            out,
        } => {
            let report = adversarial_vertex_gap_search(n, l, trials, climb_steps, seed)?;
            emit(&report, out.as_deref())
        }
        SearchCommand::Granas {
            relation,
            n,
            r,
            count,
            eps,
            seed,
            out,
        } => {
            let rel = match relation {
                Some(path) => read_json(&path, "relation")?,
                None => projection_map_sample(n, r, count, seed)?,
            };
            let report = granas_scan(&rel, eps)?;
            emit(&report, out.as_deref())
        }
    }
}
