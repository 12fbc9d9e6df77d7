//! `blockforest`: counts, series, codes and virial coefficients on the command line.
//!
//! Exit codes: 0 success, 2 usage, 3 domain error, 4 internal-consistency failure.

mod commands;
mod report;
mod selftest;

use std::io::Write;
use std::process::ExitCode;

use blockforest::oracle::{OracleConfig, DEFAULT_ORACLE_LIMIT};
use blockforest::virial::{Alpha, DEFAULT_PRECISION, MAX_PRECISION};
use blockforest::Species;
use clap::{Args, Parser, Subcommand, ValueEnum};

use report::Report;

#[derive(Parser, Debug)]
#[command(name = "blockforest", version, about = "Exact enumeration of Husimi graphs, cacti and their relatives")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true)]
    format: Option<Format>,

    /// Largest n the brute-force oracle will enumerate.
    #[arg(long, global = true, env = "BLOCKFOREST_ORACLE_LIMIT", default_value_t = DEFAULT_ORACLE_LIMIT)]
    oracle_limit: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Tsv,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Labelled counts from the closed forms.
    Count(CountArgs),
    /// Unlabelled rooted and unrooted counts for n = 1..N.
    Unlabeled(UnlabeledArgs),
    /// Convert between block lists and (lambda, pi) codes, one per line.
    Prufer(PruferArgs),
    /// Virial coefficients of the Gaussian model with a check of both routes.
    Virial(VirialArgs),
    /// Brute-force counts.
    Oracle(OracleArgs),
    /// Run the internal consistency checks.
    Selftest(SelftestArgs),
}

#[derive(Args, Debug)]
struct CountArgs {
    species: Species,
    n: usize,
    /// One row per block-size distribution.
    #[arg(long)]
    by_distribution: bool,
}

#[derive(Args, Debug)]
struct UnlabeledArgs {
    /// triangular, husimi or oriented.
    species: Species,
    /// Largest n; same as --order.
    #[arg(required_unless_present = "order", conflicts_with = "order")]
    n: Option<usize>,
    #[arg(long)]
    order: Option<usize>,
    /// Break counts down by block-size monomial (oriented only).
    #[arg(long)]
    weighted: bool,
    /// With --weighted, drop monomials containing a block larger than this.
    #[arg(long, requires = "weighted")]
    marker_truncation: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Direction {
    Encode,
    Decode,
}

#[derive(Args, Debug)]
struct PruferArgs {
    direction: Direction,
    /// Input lines; read from stdin when absent.
    lines: Vec<String>,
}

#[derive(Args, Debug)]
struct VirialArgs {
    n_max: usize,
    /// Gaussian width, e.g. `pi`, `4pi`, `2.5`.
    #[arg(long, default_value = "pi")]
    alpha: Alpha,
    /// Decimal places printed.
    #[arg(long, default_value_t = DEFAULT_PRECISION)]
    precision: usize,
}

#[derive(Args, Debug)]
struct OracleArgs {
    species: Species,
    n: usize,
    #[arg(long)]
    by_distribution: bool,
    /// Count isomorphism classes instead of labelled graphs.
    #[arg(long)]
    unlabeled: bool,
    /// With --unlabeled, count vertex-rooted classes.
    #[arg(long, requires = "unlabeled")]
    rooted: bool,
    /// With --unlabeled, count by fixed points over all permutations.
    #[arg(long, requires = "unlabeled", conflicts_with_all = ["rooted", "by_distribution"])]
    burnside: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Level {
    Fast,
    Full,
}

#[derive(Args, Debug)]
struct SelftestArgs {
    #[arg(long, value_enum, default_value_t = Level::Fast)]
    level: Level,
    /// Corrupt one recurrence coefficient; the run must then fail.
    #[arg(long, hide = true)]
    inject_fault: bool,
}

/// What went wrong, mapped onto an exit code.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Lib(blockforest::Error),
    /// A report was produced but some check failed.
    Checks(Report, String),
}

impl From<blockforest::Error> for Failure {
    fn from(e: blockforest::Error) -> Self {
        Failure::Lib(e)
    }
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Lib(blockforest::Error::InternalConsistency { .. }) | Failure::Checks(..) => 4,
            Failure::Lib(_) => 3,
        }
    }
}

type Outcome = Result<Output, Failure>;

/// Prufer output defaults to bare lines so encode and decode can be piped.
enum Output {
    Table(Report),
    Lines(Report),
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn run(cli: &Cli) -> Outcome {
    let oracle = OracleConfig::with_limit(cli.oracle_limit).map_err(|e| usage(e.to_string()))?;
    match &cli.command {
        Command::Count(a) => commands::count(a.species, a.n, a.by_distribution).map(Output::Table),
        Command::Unlabeled(a) => {
            let n = a.n.or(a.order).expect("clap requires one");
            commands::unlabeled(a.species, n, a.weighted, a.marker_truncation).map(Output::Table)
        }
        Command::Prufer(a) => {
            let lines = if a.lines.is_empty() {
                std::io::stdin().lines().collect::<Result<Vec<_>, _>>().map_err(|e| usage(format!("reading stdin: {e}")))?
            } else {
                a.lines.clone()
            };
            commands::prufer(a.direction == Direction::Encode, &lines).map(Output::Lines)
        }
        Command::Virial(a) => {
            if a.precision == 0 || a.precision > MAX_PRECISION {
                return Err(usage(format!("--precision must lie in 1..={MAX_PRECISION}")));
            }
            commands::virial(a.n_max, &a.alpha, a.precision, &oracle).map(Output::Table)
        }
        Command::Oracle(a) => commands::oracle(a, &oracle).map(Output::Table),
        Command::Selftest(a) => selftest::run(a.level == Level::Full, a.inject_fault, &oracle).map(Output::Table),
    }
}

fn render(report: &Report, format: Option<Format>, lines: bool) -> String {
    match format {
        Some(Format::Json) => report.to_json(),
        Some(Format::Tsv) => report.to_tsv(),
        None if lines => report.rows.iter().map(|r| format!("{}\n", r[1])).collect(),
        None => report.to_tsv(),
    }
}

fn emit(text: &str) -> ExitCode {
    let mut out = std::io::stdout().lock();
    match out.write_all(text.as_bytes()).and_then(|_| out.flush()) {
        Ok(()) => ExitCode::SUCCESS,
        // Closed pipe: the reader has what it wanted.
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    match run(&cli) {
        Ok(Output::Table(r)) => emit(&render(&r, cli.format, false)),
        Ok(Output::Lines(r)) => emit(&render(&r, cli.format, true)),
        Err(failure) => {
            let code = failure.code();
            match failure {
                Failure::Usage(msg) => eprintln!("error: {msg}"),
                Failure::Lib(e) => eprintln!("error: {e}"),
                Failure::Checks(report, msg) => {
                    emit(&render(&report, cli.format, false));
                    eprintln!("error: {msg}");
                }
            }
            ExitCode::from(code)
        }
    }
}
