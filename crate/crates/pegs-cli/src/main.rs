//! `pegs` — permutation entropy for time series, graph signals, and
//! multivariate signals, from the command line.
//!
//! Subcommands:
//!
//! * `compute {pe|peg|mmspe|mpeg}` — score a CSV signal, emitting one JSON
//!   object on stdout.
//! * `gen {henon|lorenz}` — write synthetic signals as CSV.
//! * `repro {henon-sweep|lorenz-table}` — the bundled experiments, emitted
//!   as CSV.
//!
//! Exit codes: 0 success, 1 usage error, 2 computation error, 3 I/O or
//! input-format error.

mod output;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use pegs_core::{
    csv, henon, henon_sweep, lorenz, lorenz_entropy_table, mmspe_distribution,
    mpe_graph_distribution, normalized_shannon, pe_distribution, pe_graph_distribution,
    EntropyParams, Graph, HenonParams, HenonSweepConfig, LorenzParams, LorenzTableConfig,
    MultivariateSignal, PatternDistribution,
};

use output::RunResult;

#[derive(Parser)]
#[command(
    name = "pegs",
    version,
    about = "Permutation entropy for time series, graph signals, and multivariate signals"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute one entropy metric of a CSV signal.
    Compute(ComputeArgs),
    /// Generate a synthetic signal as CSV.
    #[command(subcommand)]
    Gen(GenCommand),
    /// Run a bundled experiment and emit its CSV.
    #[command(subcommand)]
    Repro(ReproCommand),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Metric {
    /// Classical permutation entropy of one channel.
    Pe,
    /// Permutation entropy of a signal on an explicit graph.
    Peg,
    /// Multivariate PE from pooled per-channel patterns.
    Mmspe,
    /// Multivariate PE over a channel interaction graph.
    Mpeg,
}

impl Metric {
    fn name(self) -> &'static str {
        match self {
            Metric::Pe => "pe",
            Metric::Peg => "peg",
            Metric::Mmspe => "mmspe",
            Metric::Mpeg => "mpeg",
        }
    }
}

#[derive(Args)]
struct ComputeArgs {
    /// Which metric to compute.
    #[arg(value_enum)]
    metric: Metric,
    /// Signal CSV: one time sample per row, one channel per column,
    /// optional header row of channel names.
    #[arg(long)]
    input: PathBuf,
    /// Adjacency CSV. For `mpeg`: p x p channel interaction graph
    /// (defaults to the complete graph). For `peg`: graph over all signal
    /// samples (required).
    #[arg(long)]
    graph: Option<PathBuf>,
    /// 1-based channel selector for `pe` and `peg` (required when the
    /// signal has several channels).
    #[arg(long)]
    channel: Option<usize>,
    /// Embedding dimension.
    #[arg(short)]
    m: usize,
    /// Delay.
    #[arg(short = 'L')]
    delay: usize,
}

#[derive(Subcommand)]
enum GenCommand {
    /// Iterate the Henon map; channels x and y.
    Henon(GenHenonArgs),
    /// Integrate the Lorenz system with fixed-step RK4; channels x, y, z.
    Lorenz(GenLorenzArgs),
}

#[derive(Args)]
struct GenHenonArgs {
    #[arg(long, default_value_t = 1.4, allow_negative_numbers = true)]
    a: f64,
    #[arg(long, default_value_t = 0.3, allow_negative_numbers = true)]
    b: f64,
    #[arg(long, default_value_t = 0.5, allow_negative_numbers = true)]
    x0: f64,
    #[arg(long, default_value_t = 0.1, allow_negative_numbers = true)]
    y0: f64,
    /// Samples to generate.
    #[arg(short, default_value_t = 100)]
    n: usize,
    /// Leading samples to discard from the n generated.
    #[arg(long, default_value_t = 0)]
    transient: usize,
    /// Output CSV path (stdout when omitted).
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct GenLorenzArgs {
    #[arg(long, default_value_t = 10.0)]
    sigma: f64,
    #[arg(long, default_value_t = 28.0, allow_negative_numbers = true)]
    rho: f64,
    #[arg(long, default_value_t = 8.0 / 3.0)]
    beta: f64,
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    x0: f64,
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    y0: f64,
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    z0: f64,
    /// Integration step.
    #[arg(long, default_value_t = 0.01)]
    dt: f64,
    /// Samples to integrate (the initial state is sample 0).
    #[arg(long, default_value_t = 15000)]
    steps: usize,
    /// Leading samples to discard.
    #[arg(long, default_value_t = 5000)]
    transient: usize,
    /// Output CSV path (stdout when omitted).
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum ReproCommand {
    /// Sweep the Henon parameter a, scoring every grid point.
    HenonSweep(HenonSweepArgs),
    /// Entropy table of the Lorenz system across rho and m.
    LorenzTable(LorenzTableArgs),
}

#[derive(Args)]
struct HenonSweepArgs {
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    a_min: f64,
    #[arg(long, default_value_t = 1.4, allow_negative_numbers = true)]
    a_max: f64,
    #[arg(long, default_value_t = 0.0001)]
    step: f64,
    #[arg(long, default_value_t = 0.3, allow_negative_numbers = true)]
    b: f64,
    #[arg(long, default_value_t = 0.5, allow_negative_numbers = true)]
    x0: f64,
    #[arg(long, default_value_t = 0.1, allow_negative_numbers = true)]
    y0: f64,
    /// Samples per grid point.
    #[arg(short, default_value_t = 100)]
    n: usize,
    /// Leading samples to discard at every grid point.
    #[arg(long, default_value_t = 0)]
    transient: usize,
    /// Embedding dimension.
    #[arg(short, default_value_t = 3)]
    m: usize,
    /// Delay.
    #[arg(short = 'L', default_value_t = 1)]
    delay: usize,
    /// Output CSV path (stdout when omitted).
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct LorenzTableArgs {
    /// Rho values, one table row each (repeat the flag).
    #[arg(long = "rho", num_args = 1.., default_values_t = [0.8, 0.9, 1.2, 1.3], allow_negative_numbers = true)]
    rhos: Vec<f64>,
    /// Embedding dimensions, one table column each (repeat the flag).
    #[arg(short, num_args = 1.., default_values_t = [3, 4, 5, 6, 7])]
    ms: Vec<usize>,
    /// Delay.
    #[arg(short = 'L', default_value_t = 1)]
    delay: usize,
    #[arg(long, default_value_t = 10.0)]
    sigma: f64,
    #[arg(long, default_value_t = 8.0 / 3.0)]
    beta: f64,
    #[arg(long, default_value_t = -8.0, allow_negative_numbers = true)]
    x0: f64,
    #[arg(long, default_value_t = 9.0, allow_negative_numbers = true)]
    y0: f64,
    #[arg(long, default_value_t = 25.0, allow_negative_numbers = true)]
    z0: f64,
    #[arg(long, default_value_t = 0.01)]
    dt: f64,
    #[arg(long, default_value_t = 1200)]
    steps: usize,
    #[arg(long, default_value_t = 0)]
    transient: usize,
    /// Output CSV path (stdout when omitted).
    #[arg(long)]
    output: Option<PathBuf>,
}

/// Everything that can go wrong after argument parsing, labeled with the
/// exit code it maps to.
enum CliError {
    /// Kernel-level failures: exit 2.
    Compute(pegs_core::Error),
    /// File system and input-format failures: exit 3.
    Io(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Compute(_) => 2,
            CliError::Io(_) => 3,
        }
    }

    fn message(&self) -> String {
        match self {
            CliError::Compute(e) => e.to_string(),
            CliError::Io(msg) => msg.clone(),
        }
    }
}

impl From<pegs_core::Error> for CliError {
    fn from(e: pegs_core::Error) -> Self {
        match e {
            pegs_core::Error::Parse { .. } => CliError::Io(e.to_string()),
            other => CliError::Compute(other),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match cli.command {
        Command::Compute(args) => cmd_compute(&args),
        Command::Gen(GenCommand::Henon(args)) => cmd_gen_henon(&args),
        Command::Gen(GenCommand::Lorenz(args)) => cmd_gen_lorenz(&args),
        Command::Repro(ReproCommand::HenonSweep(args)) => cmd_repro_henon(&args),
        Command::Repro(ReproCommand::LorenzTable(args)) => cmd_repro_lorenz(&args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("pegs: error: {}", e.message());
            ExitCode::from(e.exit_code())
        }
    }
}

fn load_signal(path: &Path) -> Result<MultivariateSignal, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Io(format!("cannot read {}: {e}", path.display())))?;
    Ok(csv::parse_signal_csv(&text)?)
}

fn load_interaction_graph(path: &Path, expected: usize) -> Result<Graph, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Io(format!("cannot read {}: {e}", path.display())))?;
    let graph = csv::parse_adjacency_csv(&text)?;
    if graph.num_vertices() != expected {
        return Err(CliError::Compute(pegs_core::Error::InvalidArgument(
            format!(
                "graph {} has {} vertices but {} are required",
                path.display(),
                graph.num_vertices(),
                expected
            ),
        )));
    }
    Ok(graph)
}

/// Pick the channel for the univariate metrics: explicit `--channel`
/// (1-based), or the only channel of a univariate file.
fn select_channel<'a>(
    u: &'a MultivariateSignal,
    channel: Option<usize>,
    metric: &str,
) -> Result<(&'a [f64], usize), CliError> {
    let p = u.num_channels();
    let index = match channel {
        Some(c) => {
            if c == 0 || c > p {
                return Err(CliError::Compute(pegs_core::Error::InvalidArgument(
                    format!("--channel {c} out of range 1..={p}"),
                )));
            }
            c
        }
        None if p == 1 => 1,
        None => {
            return Err(CliError::Compute(pegs_core::Error::InvalidArgument(
                format!("{metric} on a {p}-channel signal requires --channel"),
            )));
        }
    };
    Ok((u.channel(index - 1), index))
}

fn cmd_compute(args: &ComputeArgs) -> Result<(), CliError> {
    let params = EntropyParams::new(args.m, args.delay).map_err(CliError::Compute)?;
    let u = load_signal(&args.input)?;
    let mut result = RunResult::new(args.metric.name(), args.m, args.delay);
    result.meta("input", args.input.display().to_string());

    let dist: PatternDistribution = match args.metric {
        Metric::Pe => {
            let (x, index) = select_channel(&u, args.channel, "pe")?;
            result.meta("channel", index.to_string());
            pe_distribution(x, params).map_err(CliError::Compute)?
        }
        Metric::Peg => {
            let (x, index) = select_channel(&u, args.channel, "peg")?;
            result.meta("channel", index.to_string());
            let path = args.graph.as_ref().ok_or_else(|| {
                CliError::Compute(pegs_core::Error::InvalidArgument(
                    "peg requires --graph with one vertex per signal sample".to_string(),
                ))
            })?;
            let g = load_interaction_graph(path, x.len())?;
            result.meta("graph", path.display().to_string());
            pe_graph_distribution(&g, x, params).map_err(CliError::Compute)?
        }
        Metric::Mmspe => mmspe_distribution(&u, params).map_err(CliError::Compute)?,
        Metric::Mpeg => {
            let p = u.num_channels();
            let interaction = match &args.graph {
                Some(path) => {
                    result.meta("graph", path.display().to_string());
                    load_interaction_graph(path, p)?
                }
                None => {
                    result.meta("graph", format!("complete:{p}"));
                    Graph::complete(p).map_err(CliError::Compute)?
                }
            };
            mpe_graph_distribution(&u, &interaction, params).map_err(CliError::Compute)?
        }
    };

    let value = normalized_shannon(&dist).map_err(CliError::Compute)?;
    result.finish(value, dist.total());
    println!("{}", result.to_json());
    Ok(())
}

fn write_text(path: Option<&PathBuf>, text: &str) -> Result<(), CliError> {
    match path {
        Some(path) => fs::write(path, text)
            .map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())
                .map_err(|e| CliError::Io(format!("cannot write to stdout: {e}")))
        }
    }
}

fn discard_leading(
    u: &MultivariateSignal,
    transient: usize,
) -> Result<MultivariateSignal, CliError> {
    if transient == 0 {
        return Ok(u.clone());
    }
    if transient >= u.num_samples() {
        return Err(CliError::Compute(pegs_core::Error::InvalidArgument(
            format!(
                "transient ({transient}) must be smaller than the sample count ({})",
                u.num_samples()
            ),
        )));
    }
    let channels: Vec<Vec<f64>> = (0..u.num_channels())
        .map(|s| u.channel(s)[transient..].to_vec())
        .collect();
    let trimmed = MultivariateSignal::from_channels(channels).map_err(CliError::Compute)?;
    match u.channel_names() {
        Some(names) => trimmed
            .with_names(names.to_vec())
            .map_err(CliError::Compute),
        None => Ok(trimmed),
    }
}

fn cmd_gen_henon(args: &GenHenonArgs) -> Result<(), CliError> {
    let u = henon(&HenonParams {
        a: args.a,
        b: args.b,
        x0: args.x0,
        y0: args.y0,
        n: args.n,
    })
    .map_err(CliError::Compute)?;
    let u = discard_leading(&u, args.transient)?;
    write_text(args.output.as_ref(), &csv::signal_to_csv(&u))
}

fn cmd_gen_lorenz(args: &GenLorenzArgs) -> Result<(), CliError> {
    let u = lorenz(&LorenzParams {
        sigma: args.sigma,
        rho: args.rho,
        beta: args.beta,
        init: [args.x0, args.y0, args.z0],
        dt: args.dt,
        steps: args.steps,
        transient: args.transient,
    })
    .map_err(CliError::Compute)?;
    write_text(args.output.as_ref(), &csv::signal_to_csv(&u))
}

fn cmd_repro_henon(args: &HenonSweepArgs) -> Result<(), CliError> {
    let params = EntropyParams::new(args.m, args.delay).map_err(CliError::Compute)?;
    let config = HenonSweepConfig {
        a_min: args.a_min,
        a_max: args.a_max,
        step: args.step,
        b: args.b,
        x0: args.x0,
        y0: args.y0,
        n: args.n,
        transient: args.transient,
        params,
    };
    let points = henon_sweep(&config).map_err(CliError::Compute)?;
    let mut out = String::from("a,mpeg,pe_x,pe_y,mmspe,diverged\n");
    for point in &points {
        match point.metrics {
            Some(m) => out.push_str(&format!(
                "{:.6},{:.6},{:.6},{:.6},{:.6},0\n",
                point.a, m.mpe_graph, m.pe_x, m.pe_y, m.mmspe
            )),
            None => out.push_str(&format!("{:.6},,,,,1\n", point.a)),
        }
    }
    write_text(args.output.as_ref(), &out)
}

fn cmd_repro_lorenz(args: &LorenzTableArgs) -> Result<(), CliError> {
    let config = LorenzTableConfig {
        rhos: args.rhos.clone(),
        ms: args.ms.clone(),
        delay: args.delay,
        base: LorenzParams {
            sigma: args.sigma,
            rho: 0.0, // overridden per row
            beta: args.beta,
            init: [args.x0, args.y0, args.z0],
            dt: args.dt,
            steps: args.steps,
            transient: args.transient,
        },
    };
    let rows = lorenz_entropy_table(&config).map_err(CliError::Compute)?;
    let mut out = String::from("rho");
    for m in &args.ms {
        out.push_str(&format!(",m={m}"));
    }
    out.push('\n');
    for row in &rows {
        out.push_str(&format!("{:.6}", row.rho));
        for v in &row.values {
            out.push_str(&format!(",{v:.6}"));
        }
        out.push('\n');
    }
    write_text(args.output.as_ref(), &out)
}
