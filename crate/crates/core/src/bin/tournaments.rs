use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use tournaments::census::{census_with, CensusOptions};
use tournaments::format::{graph_to_dot, read_trn, tournament_to_dot, write_trn};
use tournaments::report::analyze;
use tournaments::verify::{self, VerificationReport, VerifyOptions};
use tournaments::{find_isomorphism, Error, Family, FamilySpec, Result};

#[derive(Parser)]
#[command(name = "tournaments", version, about = "Generate, analyze and census tournaments")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a family member and write it as a .trn file.
    Gen {
        /// L, T, U, V, E, F, F*, G, G* or H.
        family: Family,
        n: usize,
        k: Option<usize>,
        #[arg(short, long)]
        output: PathBuf,
        /// Also write a DOT rendering.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Report intervals, critical vertices and I(T) of a .trn file.
    Analyze {
        input: PathBuf,
        /// Write I(T) as DOT, non-critical vertices highlighted.
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Print JSON instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Look for an isomorphism between two .trn files.
    Iso { first: PathBuf, second: PathBuf },
    /// Exhaustive census of labeled tournaments of order M.
    Census {
        m: usize,
        #[command(flatten)]
        run: RunFlags,
        /// Write the machine-readable report here.
        #[arg(long)]
        json: Option<PathBuf>,
        /// Required for order 8, which takes hours.
        #[arg(long)]
        allow_order_8: bool,
    },
    /// Run a verification suite over a range of n, e.g. `3..6` (inclusive).
    Verify {
        /// minus1 (alias thm13), critical (prop11), graphs (remark45), lemmas, duals, construction, all.
        suite: String,
        range: String,
        #[command(flatten)]
        run: RunFlags,
    },
}

#[derive(Args)]
struct RunFlags {
    /// Census shards, one thread each.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Omit the elapsed-time line.
    #[arg(long)]
    no_timing: bool,
}

/// Writes to stdout, treating a closed pipe as the reader having seen enough.
fn emit(text: impl std::fmt::Display) {
    use std::io::Write;
    let _ = write!(std::io::stdout().lock(), "{text}");
}

fn parse_range(s: &str) -> Result<(usize, usize)> {
    let bad = || Error::BadParams(format!("bad range {s:?}, expected A..B or A"));
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (a, b.strip_prefix('=').unwrap_or(b)),
        None => (s, s),
    };
    let a: usize = a.parse().map_err(|_| bad())?;
    let b: usize = b.parse().map_err(|_| bad())?;
    if a > b {
        return Err(bad());
    }
    Ok((a, b))
}

fn run_suite(suite: &str, n: usize, opts: &VerifyOptions) -> Result<Vec<VerificationReport>> {
    Ok(match suite {
        "minus1" | "thm13" => vec![verify::verify_minus1_characterization(n, opts)?],
        "critical" | "prop11" => vec![verify::verify_critical_characterization(n, opts)?],
        "graphs" | "remark45" => vec![verify::verify_graph_shapes(n)?],
        "lemmas" => vec![verify::verify_structural_lemmas(n)?],
        "duals" => vec![verify::verify_dual_isomorphisms(n)?],
        "construction" => vec![verify::verify_construction_classes(n)?],
        "all" => {
            let mut v = Vec::new();
            for s in ["minus1", "critical", "graphs", "lemmas", "duals", "construction"] {
                v.extend(run_suite(s, n, opts)?);
            }
            v
        }
        other => return Err(Error::BadParams(format!("unknown suite {other:?}"))),
    })
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Gen { family, n, k, output, dot } => {
            let spec = FamilySpec::new(family, n, k)?;
            let t = spec.build()?;
            write_trn(&output, &t)?;
            if let Some(path) = dot {
                std::fs::write(path, tournament_to_dot(&t, &spec.to_string()))?;
            }
            emit(format_args!("{spec}: {} vertices written to {}\n", t.order(), output.display()));
        }
        Command::Analyze { input, dot, json } => {
            let t = read_trn(&input)?;
            let a = analyze(&t);
            if json {
                emit(format_args!("{}\n", serde_json::to_string_pretty(&a).expect("analysis serializes")));
            } else {
                emit(&a);
            }
            if let Some(path) = dot {
                let text = match &a.criticality {
                    Some(r) => graph_to_dot(&r.graph, r.non_critical, "I(T)"),
                    None => tournament_to_dot(&t, "T"),
                };
                std::fs::write(path, text)?;
            }
        }
        Command::Iso { first, second } => {
            let (a, b) = (read_trn(first)?, read_trn(second)?);
            match find_isomorphism(&a, &b) {
                Some(p) => emit(format_args!("isomorphic: {p}\n")),
                None => emit("not isomorphic\n"),
            }
        }
        Command::Census { m, run, json, allow_order_8 } => {
            if m == 8 && !allow_order_8 {
                return Err(Error::BadParams("order 8 needs --allow-order-8".into()));
            }
            let start = Instant::now();
            let result = census_with(m, &CensusOptions { jobs: run.jobs, relabel: None })?;
            emit(result.summary());
            if let Some(path) = json {
                let text = serde_json::to_string_pretty(&result.to_json()).expect("census serializes");
                std::fs::write(path, text + "\n")?;
            }
            if !run.no_timing {
                emit(format_args!("elapsed: {:.3}s\n", start.elapsed().as_secs_f64()));
            }
        }
        Command::Verify { suite, range, run } => {
            let (lo, hi) = parse_range(&range)?;
            let opts = VerifyOptions { jobs: run.jobs, exhaustive: true };
            let start = Instant::now();
            for n in lo..=hi {
                for report in run_suite(&suite, n, &opts)? {
                    emit(&report);
                }
            }
            if matches!(suite.as_str(), "lemmas" | "all") {
                emit(verify::verify_no_small_minus1(&opts)?);
            }
            emit(format_args!("{suite} {lo}..{hi}: pass\n"));
            if !run.no_timing {
                emit(format_args!("elapsed: {:.3}s\n", start.elapsed().as_secs_f64()));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::VerificationFailed { .. } => 1,
                Error::Io(_) => 3,
                _ => 2,
            })
        }
    }
}
