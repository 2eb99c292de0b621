use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use serde::Serialize;
use ufna_cli::report::{QuiverSummary, SeriesReport, Verdict};
use ufna_cli::{
    emit, exit, load, render_summary, to_json, verify, CliError, CliResult, VerifyOptions,
};
use ufna_core::language::{dims, Cap};
use ufna_core::{hilbert_algebra, hilbert_quiver, Quiver};

/// Monomial algebras, their Ufnarovskii quivers, and the graded map between them.
#[derive(Parser)]
#[command(name = "ufna", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Presentation file (JSON or compact), `-` for stdin, or a fixture name P0..P3.
    input: String,
    /// Maximum number of basis elements materialized in any one degree.
    #[arg(long, env = "UFNA_CAP", default_value_t = 1_000_000)]
    cap: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Run every check up to degree N and report.
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(short = 'n', long, default_value_t = 8)]
        max_degree: usize,
        /// Largest m' tried by the finiteness certificates (defaults to N).
        #[arg(long)]
        m_max: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write the JSON report to a file, or `-` for stdout.
        #[arg(long, value_name = "PATH|-")]
        json: Option<String>,
    },
    /// Print dim A_0 .. dim A_N.
    Dims {
        #[command(flatten)]
        common: Common,
        #[arg(short = 'n', long, default_value_t = 10)]
        max_degree: usize,
        #[arg(long, value_name = "PATH|-")]
        json: Option<String>,
    },
    /// Describe the quiver, optionally as Graphviz DOT.
    Graph {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_name = "PATH|-")]
        dot: Option<String>,
        #[arg(long, value_name = "PATH|-")]
        json: Option<String>,
    },
    /// Rational Hilbert series of the algebra (or of the path algebra).
    Hilbert {
        #[command(flatten)]
        common: Common,
        /// Also print the coefficients of t^0 .. t^K.
        #[arg(long, value_name = "K")]
        expand: Option<usize>,
        /// Series of the path algebra kQ instead of A.
        #[arg(long)]
        quiver: bool,
        #[arg(long, value_name = "PATH|-")]
        json: Option<String>,
    },
    /// List the paths of length N, each with its word and vertex sequence.
    Paths {
        #[command(flatten)]
        common: Common,
        #[arg(short = 'n', long, default_value_t = 2)]
        max_degree: usize,
        /// Print only the number of paths.
        #[arg(long)]
        count: bool,
    },
}

#[derive(Serialize)]
struct DimsJson {
    schema: u32,
    dims: Vec<String>,
}

#[derive(Serialize)]
struct GraphJson {
    schema: u32,
    quiver: QuiverSummary,
    growth: String,
    vertices: Vec<String>,
    arrows: Vec<ArrowJson>,
}

#[derive(Serialize)]
struct ArrowJson {
    word: String,
    source: String,
    target: String,
    label: String,
}

#[derive(Serialize)]
struct HilbertJson {
    schema: u32,
    series: SeriesReport,
    expansion: Option<Vec<String>>,
}

fn run(cli: Cli) -> CliResult<i32> {
    match cli.command {
        Command::Verify {
            common,
            max_degree,
            m_max,
            seed,
            json,
        } => {
            let p = load(&common.input)?;
            let opts = VerifyOptions {
                m_max: m_max.unwrap_or(max_degree),
                seed,
                cap: Cap(common.cap),
                ..VerifyOptions::new(max_degree)
            };
            let report = verify(&p, &opts)?;
            match json.as_deref() {
                Some(target) => {
                    emit(target, &to_json(&report)?)?;
                    if target != "-" {
                        emit("-", &render_summary(&report))?;
                    }
                }
                None => emit("-", &render_summary(&report))?,
            }
            Ok(match report.verdict {
                Verdict::Pass => exit::OK,
                Verdict::Fail => exit::CHECK_FAILED,
            })
        }
        Command::Dims {
            common,
            max_degree,
            json,
        } => {
            let p = load(&common.input)?.normalize()?;
            let ds = dims(max_degree, &p, Cap(common.cap))?;
            let ds: Vec<String> = ds.iter().map(ToString::to_string).collect();
            match json {
                Some(target) => emit(
                    &target,
                    &to_json(&DimsJson {
                        schema: 1,
                        dims: ds,
                    })?,
                )?,
                None => emit("-", &format!("{}\n", ds.join(" ")))?,
            }
            Ok(exit::OK)
        }
        Command::Graph { common, dot, json } => {
            let p = load(&common.input)?.normalize()?;
            let q = Quiver::build(&p, Cap(common.cap))?;
            if let Some(target) = &dot {
                emit(target, &q.export_dot())?;
            }
            if let Some(target) = &json {
                let g = GraphJson {
                    schema: 1,
                    quiver: QuiverSummary::from(&q),
                    growth: q.growth_class().to_string(),
                    vertices: q.vertices().iter().map(|v| q.spell(v)).collect(),
                    arrows: q
                        .arrows()
                        .iter()
                        .map(|a| ArrowJson {
                            word: q.spell(&a.word),
                            source: q.spell(&q.vertices()[a.source]),
                            target: q.spell(&q.vertices()[a.target]),
                            label: q.generators()[a.label].clone(),
                        })
                        .collect(),
                };
                emit(target, &to_json(&g)?)?;
            }
            if dot.is_none() && json.is_none() {
                emit(
                    "-",
                    &format!(
                        "d = {}  |V| = {}  |E| = {}  growth: {}\n",
                        q.d(),
                        q.num_vertices(),
                        q.num_arrows(),
                        q.growth_class()
                    ),
                )?;
            }
            Ok(exit::OK)
        }
        Command::Hilbert {
            common,
            expand,
            quiver,
            json,
        } => {
            let p = load(&common.input)?.normalize()?;
            let q = Quiver::build(&p, Cap(common.cap))?;
            let series = if quiver {
                hilbert_quiver(&q)
            } else {
                hilbert_algebra(&p, &q, Cap(common.cap))?
            };
            let coeffs: Option<Vec<String>> =
                expand.map(|k| series.expand(k).iter().map(BigInt::to_string).collect());
            match json {
                Some(target) => emit(
                    &target,
                    &to_json(&HilbertJson {
                        schema: 1,
                        series: SeriesReport::from(&series),
                        expansion: coeffs,
                    })?,
                )?,
                None => {
                    let mut out = format!(
                        "numerator: {}\ndenominator: {}\n",
                        series.numerator(),
                        series.denominator()
                    );
                    if let Some(c) = coeffs {
                        out.push_str(&format!("coefficients: {}\n", c.join(" ")));
                    }
                    emit("-", &out)?;
                }
            }
            Ok(exit::OK)
        }
        Command::Paths {
            common,
            max_degree,
            count,
        } => {
            let p = load(&common.input)?.normalize()?;
            let q = Quiver::build(&p, Cap(common.cap))?;
            if count {
                emit("-", &format!("{}\n", q.count_paths(max_degree)))?;
                return Ok(exit::OK);
            }
            let mut out = String::new();
            for path in q.enumerate_paths(max_degree, Cap(common.cap))? {
                let mut v = path.source();
                let mut stops = vec![q.spell(&q.vertices()[v])];
                for &a in path.arrows() {
                    v = q.arrows()[a].target;
                    stops.push(q.spell(&q.vertices()[v]));
                }
                out.push_str(&format!(
                    "{}\t{}\n",
                    q.spell(&q.path_word(&path)),
                    stops.join(" -> ")
                ));
            }
            emit("-", &out)?;
            Ok(exit::OK)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            let kind = match &e {
                CliError::Core(ufna_core::Error::Collapsed) => "degenerate input",
                CliError::Core(ufna_core::Error::CapExceeded { .. }) => "resource cap",
                _ if e.exit_code() == exit::INPUT => "input error",
                _ => "error",
            };
            eprintln!("ufna: {kind}: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
