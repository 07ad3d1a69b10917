use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use rsprocess::correspondences::{drs, rsk, LatticeConfiguration, PointConfiguration};
use rsprocess::exactlaw::{fdd_continuous, fdd_discrete, FddQuery};
use rsprocess::harness::{
    lln_topline, registry, render_ensemble, run_suite_config, RenderFormat, SuiteConfig,
};
use rsprocess::sampling::{
    sample_geometric_lattice_with, sample_nonintersecting_arches_with, sample_poisson_square_with,
    ArchCountLaw, RngSpec, DEFAULT_MAX_ATTEMPTS,
};
use rsprocess::trajectories::{discrete_trajectory, full_trajectory, DiagramTrajectory};
use rsprocess::Error;

#[derive(Parser)]
#[command(name = "rsprocess", version, about = "Poissonized RS and geometric RSK diagram processes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Draw point configurations, lattice matrices or arch ensembles as JSON lines.
    Sample(SampleArgs),
    /// Diagram trajectory of a configuration (read from a file or sampled).
    Trajectory(TrajectoryArgs),
    /// Exact probability of a finite-dimensional query given as JSON.
    Prob(ProbArgs),
    /// Run the verification suite.
    Verify(VerifyArgs),
    /// Top-line ratios M(1; tau theta)/theta against 2 sqrt(1 - |tau|).
    Lln(LlnArgs),
    /// Render a trajectory's line ensemble as SVG or CSV.
    Render(RenderArgs),
}

#[derive(Args)]
struct Seeding {
    #[arg(long, default_value_t = 2024)]
    seed: u64,
    /// Number of RNG streams; samples are split into this many contiguous chunks.
    #[arg(long, default_value_t = 1)]
    streams: u64,
}

#[derive(Clone, Copy, ValueEnum)]
enum SampleModel {
    Continuous,
    Discrete,
    Arches,
}

#[derive(Args)]
struct SampleArgs {
    #[arg(long, value_enum, default_value = "continuous")]
    model: SampleModel,
    #[arg(long)]
    theta: f64,
    #[arg(long)]
    k: Option<u32>,
    /// Number of arches for `--model arches`.
    #[arg(long, default_value_t = 1)]
    lines: usize,
    #[arg(long, default_value_t = 1)]
    samples: u64,
    #[command(flatten)]
    seeding: Seeding,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum TrajectoryFormat {
    Json,
    Csv,
}

#[derive(Args)]
struct TrajectoryArgs {
    /// Point or lattice configuration JSON; sampled from `--theta` when absent.
    #[arg(long)]
    input: Option<PathBuf>,
    #[arg(long)]
    theta: Option<f64>,
    /// Lattice size; selects the discrete model when sampling.
    #[arg(long)]
    k: Option<u32>,
    #[command(flatten)]
    seeding: Seeding,
    #[arg(long, value_enum, default_value = "json")]
    format: TrajectoryFormat,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ProbArgs {
    /// Query JSON file, or `-` for standard input.
    query: PathBuf,
    /// Overrides or sets the lattice size of the query.
    #[arg(long)]
    k: Option<u32>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite configuration JSON; the full registry with defaults when absent.
    config: Option<PathBuf>,
    #[arg(long)]
    seed: Option<u64>,
    /// Multiplier on Monte-Carlo sample counts.
    #[arg(long)]
    scale: Option<f64>,
    /// Comma-separated registry ids.
    #[arg(long, value_delimiter = ',')]
    checks: Option<Vec<String>>,
    /// Report file.
    #[arg(long)]
    out: Option<PathBuf>,
    /// List registry ids and exit.
    #[arg(long)]
    list: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Text,
    Json,
}

#[derive(Args)]
struct LlnArgs {
    #[arg(long, default_value_t = 100.0)]
    theta: f64,
    #[arg(long = "tau", allow_negative_numbers = true, value_delimiter = ',', default_values_t = [0.0, 0.5, -0.5])]
    taus: Vec<f64>,
    #[arg(long, default_value_t = 20)]
    draws: usize,
    #[arg(long, default_value_t = 2024)]
    seed: u64,
    #[arg(long, value_enum, default_value = "text")]
    format: TableFormat,
}

#[derive(Clone, Copy, ValueEnum)]
enum PictureFormat {
    Svg,
    Csv,
}

#[derive(Args)]
struct RenderArgs {
    /// Trajectory JSON or CSV; a continuous draw from `--theta` when absent.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Required for CSV input and for sampling.
    #[arg(long)]
    theta: Option<f64>,
    #[arg(long, default_value_t = 2024)]
    seed: u64,
    /// Number of top lines; 0 draws every line that moves.
    #[arg(long, default_value_t = 0)]
    top_lines: usize,
    #[arg(long, value_enum, default_value = "svg")]
    format: PictureFormat,
    #[arg(long)]
    out: PathBuf,
}

enum Failure {
    Usage(String),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn read_input(path: &Path) -> Result<String, Failure> {
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
    }
}

fn emit(out: Option<&Path>, text: &str) -> Outcome {
    match out {
        Some(p) => fs::write(p, text)?,
        None => io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn json_line<T: Serialize>(v: &T) -> Result<String, Failure> {
    Ok(serde_json::to_string(v)? + "\n")
}

fn sample(a: SampleArgs) -> Outcome {
    if a.seeding.streams == 0 {
        return Err(Failure::Usage("--streams must be positive".into()));
    }
    let law = match a.model {
        SampleModel::Arches => Some(ArchCountLaw::new(a.theta)?),
        _ => None,
    };
    let k = match (a.model, a.k) {
        (SampleModel::Discrete, None) => return Err(Failure::Usage("--k is required for the discrete model".into())),
        (_, k) => k.unwrap_or(0),
    };
    let streams = a.seeding.streams;
    let chunks: Vec<Result<String, Failure>> = (0..streams)
        .into_par_iter()
        .map(|c| {
            let n = a.samples / streams + u64::from(c < a.samples % streams);
            let mut rng = RngSpec::new(a.seeding.seed, c).rng();
            let mut text = String::new();
            for _ in 0..n {
                text += &match a.model {
                    SampleModel::Continuous => json_line(&sample_poisson_square_with(a.theta, &mut rng)?)?,
                    SampleModel::Discrete => json_line(&sample_geometric_lattice_with(a.theta, k, &mut rng)?)?,
                    SampleModel::Arches => json_line(&sample_nonintersecting_arches_with(
                        law.as_ref().expect("arch law"),
                        a.lines,
                        &mut rng,
                        DEFAULT_MAX_ATTEMPTS,
                    )?)?,
                };
            }
            Ok(text)
        })
        .collect();
    let mut all = String::new();
    for c in chunks {
        all += &c?;
    }
    emit(a.out.as_deref(), &all)
}

fn load_trajectory_source(a: &TrajectoryArgs) -> Result<DiagramTrajectory, Failure> {
    if let Some(path) = &a.input {
        let text = read_input(path)?;
        let value: serde_json::Value = serde_json::from_str(&text)?;
        return Ok(if value.get("k").is_some() {
            let m: LatticeConfiguration = serde_json::from_value(value)?;
            discrete_trajectory(&rsk(&m), m.theta(), m.k())?
        } else {
            let c: PointConfiguration = serde_json::from_value(value)?;
            full_trajectory(&drs(&c))
        });
    }
    let theta = a.theta.ok_or_else(|| Failure::Usage("need --input or --theta".into()))?;
    let mut rng = RngSpec::new(a.seeding.seed, 0).rng();
    Ok(match a.k {
        Some(k) => discrete_trajectory(&rsk(&sample_geometric_lattice_with(theta, k, &mut rng)?), theta, k)?,
        None => full_trajectory(&drs(&sample_poisson_square_with(theta, &mut rng)?)),
    })
}

fn trajectory(a: TrajectoryArgs) -> Outcome {
    let tr = load_trajectory_source(&a)?;
    let text = match a.format {
        TrajectoryFormat::Json => serde_json::to_string(&tr)? + "\n",
        TrajectoryFormat::Csv => tr.to_csv(),
    };
    emit(a.out.as_deref(), &text)
}

fn prob(a: ProbArgs) -> Outcome {
    let mut query: FddQuery = serde_json::from_str(&read_input(&a.query)?)?;
    if let Some(k) = a.k {
        query = FddQuery::discrete(query.theta(), k, query.pins().to_vec())?;
    }
    let p = match query.discrete_k() {
        Some(_) => fdd_discrete(&query)?,
        None => fdd_continuous(&query)?,
    };
    emit(None, &(serde_json::to_string_pretty(&p)? + "\n"))
}

fn verify(a: VerifyArgs) -> Outcome {
    if a.list {
        for c in registry() {
            println!("{:<18} criterion {:>2}  {}", c.id, c.criterion, c.title);
        }
        return Ok(());
    }
    let mut config = match &a.config {
        Some(p) => SuiteConfig::from_json(&read_input(p)?)?,
        None => SuiteConfig::default(),
    };
    if let Some(s) = a.seed {
        config.seed = s;
    }
    if let Some(s) = a.scale {
        config.sample_scale = s;
    }
    if a.checks.is_some() {
        config.checks = a.checks;
    }
    if a.out.is_some() {
        config.out = a.out;
    }
    let outcome = run_suite_config(&config)?;
    for c in &outcome.checks {
        println!(
            "{} criterion {:>2} [{}] ({:.2}s)",
            if c.passed { "PASS" } else { "FAIL" },
            c.criterion,
            c.id,
            c.elapsed_secs
        );
        for d in c.details.iter().filter(|d| !c.passed && d.starts_with("FAIL")) {
            println!("       {d}");
        }
    }
    for r in &outcome.experiments {
        println!(
            "{} experiment [{}] {:.6} vs {:.6} (z = {:.2})",
            if r.pass { "PASS" } else { "FAIL" },
            r.name,
            r.empirical,
            r.exact,
            r.z_score
        );
    }
    if outcome.passed {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn lln(a: LlnArgs) -> Outcome {
    let rows = lln_topline(a.theta, &a.taus, a.draws, RngSpec::new(a.seed, 0))?;
    match a.format {
        TableFormat::Json => emit(None, &(serde_json::to_string_pretty(&rows)? + "\n")),
        TableFormat::Text => {
            println!("{:>8} {:>10} {:>10} {:>10}", "tau", "mean", "limit", "rel.err");
            for r in rows {
                println!("{:>8} {:>10.4} {:>10.4} {:>9.2}%", r.tau, r.mean_ratio, r.limit, 100.0 * r.relative_error);
            }
            Ok(())
        }
    }
}

fn render(a: RenderArgs) -> Outcome {
    let tr = match &a.input {
        Some(path) => {
            let text = read_input(path)?;
            if text.trim_start().starts_with('{') {
                serde_json::from_str(&text)?
            } else {
                let theta = a.theta.ok_or_else(|| Failure::Usage("CSV input needs --theta".into()))?;
                DiagramTrajectory::from_csv(&text, theta)?
            }
        }
        None => {
            let theta = a.theta.ok_or_else(|| Failure::Usage("need --input or --theta".into()))?;
            let mut rng = RngSpec::new(a.seed, 0).rng();
            full_trajectory(&drs(&sample_poisson_square_with(theta, &mut rng)?))
        }
    };
    let format = match a.format {
        PictureFormat::Svg => RenderFormat::Svg,
        PictureFormat::Csv => RenderFormat::Csv,
    };
    let summary = render_ensemble(&tr, a.top_lines, format, &a.out)?;
    emit(None, &(serde_json::to_string(&summary)? + "\n"))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Sample(a) => sample(a),
        Command::Trajectory(a) => trajectory(a),
        Command::Prob(a) => prob(a),
        Command::Verify(a) => verify(a),
        Command::Lln(a) => lln(a),
        Command::Render(a) => render(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
    }
}
