//! Command-line front end.
//!
//! Every subcommand prints a human-readable table by default and a
//! versioned JSON record under `--json`. Exact rationals are printed as
//! `num/den` strings; decimals only appear behind an explicit `--approx`.
//! Identical invocations produce byte-identical output: timing is opt-in
//! (`--timing`) and cache status goes to stderr, never into the payload.

use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand};
use num_rational::BigRational;
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::asymptotics::{self, DiagramGraph};
use crate::diagrams::{
    enumerate_colored_pairings, enumerate_pairings, ColorWord, DiagramError, MultiIndex,
};
use crate::exactalg::{rational_to_decimal, rational_to_string};
use crate::integrator::{
    integrate_with_table, truncated_moment_with_table, Case, IntegratorError, MomentQuery,
    MonomialSpec,
};
use crate::verify::{self, Suite};
use crate::weingarten::{cache, GramSpec, WeingartenTable, CACHE_ENV_VAR};

const OUTPUT_SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Integrator(#[from] IntegratorError),
    #[error(transparent)]
    Weingarten(#[from] crate::weingarten::WeingartenError),
    #[error(transparent)]
    Asymptotics(#[from] crate::asymptotics::AsymptoticsError),
}

#[derive(Debug, Parser)]
#[command(
    name = "qweingarten",
    version,
    about = "Exact Weingarten calculus for free orthogonal and unitary quantum groups"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Emit a versioned JSON record instead of the human-readable table.
    #[arg(long, global = true)]
    json: bool,

    /// Also print decimal approximations with this many digits.
    #[arg(long, global = true, value_name = "DIGITS", num_args = 0..=1, default_missing_value = "12")]
    approx: Option<u32>,

    /// Include wall-clock timing in the output (breaks byte-identity).
    #[arg(long, global = true)]
    timing: bool,

    /// Directory for the Weingarten table cache (default: $QWEINGARTEN_CACHE).
    #[arg(long, global = true, value_name = "DIR")]
    cache_dir: Option<PathBuf>,

    /// Never read or write the table cache.
    #[arg(long, global = true)]
    no_cache: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List non-crossing pairings (or their colored variant) in canonical order.
    Enumerate {
        /// Half-size of the plain diagram set.
        #[arg(long, conflicts_with = "word")]
        k: Option<usize>,
        /// Two-letter word ('a'/'b') selecting the colored diagram set.
        #[arg(long)]
        word: Option<String>,
        /// Print only the number of diagrams.
        #[arg(long)]
        count_only: bool,
    },
    /// Haar integral of one generator monomial.
    Integrate {
        /// orthogonal or unitary.
        #[arg(long, default_value = "orthogonal")]
        case: String,
        /// Dimension parameter, n >= 2.
        #[arg(long)]
        n: u64,
        /// Star pattern for the unitary case ('a' = generator, 'b' = adjoint).
        #[arg(long)]
        word: Option<String>,
        /// Comma-separated row indices, e.g. 1,1,2,2.
        #[arg(long)]
        i: String,
        /// Comma-separated column indices.
        #[arg(long)]
        j: String,
    },
    /// Moment table of the truncated character u_11 + ... + u_ss.
    Moments {
        /// Truncation rank, 1 <= s <= n.
        #[arg(long)]
        s: u64,
        /// Dimension parameter, n >= 2.
        #[arg(long)]
        n: u64,
        /// Table rows run over the powers 2k for k = 1..=max_k.
        #[arg(long)]
        max_k: usize,
    },
    /// Coefficients of the 1/n expansion.
    Expand {
        /// Half-size of the diagram set.
        #[arg(long)]
        k: usize,
        /// Expansion order: coefficients of n^0 .. n^-order.
        #[arg(long)]
        order: usize,
        /// Expand one Weingarten entry instead of the moment series;
        /// 1-based canonical basis positions, e.g. 1,2.
        #[arg(long)]
        pair: Option<String>,
    },
    /// Run a verification suite and exit nonzero on any failure.
    Verify {
        /// catalan | metric | n2 | second-order | unitary | wick | all.
        #[arg(long)]
        suite: String,
    },
}

#[derive(Serialize)]
struct OutputRecord {
    schema_version: u32,
    tool_version: &'static str,
    command: &'static str,
    params: Value,
    payload: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    timing_ms: Option<u128>,
}

struct CommandOutput {
    command: &'static str,
    params: Value,
    payload: Value,
    human: String,
    failed: bool,
}

/// Entry point for the binary: parse `std::env::args`, run, and return the
/// process exit code.
pub fn main() -> i32 {
    let cli = Cli::parse();
    run(cli)
}

/// Run a parsed invocation, printing to stdout/stderr.
pub fn run(cli: Cli) -> i32 {
    let started = Instant::now();
    let cache_dir = resolve_cache_dir(&cli);
    let result = dispatch(&cli, cache_dir.as_deref());
    match result {
        Ok(out) => {
            let failed = out.failed;
            if cli.json {
                let record = OutputRecord {
                    schema_version: OUTPUT_SCHEMA_VERSION,
                    tool_version: env!("CARGO_PKG_VERSION"),
                    command: out.command,
                    params: out.params,
                    payload: out.payload,
                    timing_ms: cli.timing.then(|| started.elapsed().as_millis()),
                };
                println!(
                    "{}",
                    serde_json::to_string_pretty(&record).expect("record serializes")
                );
            } else {
                print!("{}", out.human);
                if cli.timing {
                    println!("elapsed: {} ms", started.elapsed().as_millis());
                }
            }
            if failed {
                1
            } else {
                0
            }
        }
        Err(err) => {
            eprintln!("error: {err}");
            2
        }
    }
}

fn resolve_cache_dir(cli: &Cli) -> Option<PathBuf> {
    if cli.no_cache {
        return None;
    }
    cli.cache_dir
        .clone()
        .or_else(|| std::env::var_os(CACHE_ENV_VAR).map(PathBuf::from))
}

/// Build a Weingarten table through the cache when one is configured,
/// reporting rejected records on stderr.
fn table_for(spec: &GramSpec, cache_dir: Option<&std::path::Path>) -> Result<WeingartenTable, CliError> {
    let (table, status) = cache::load_or_build(cache_dir, spec)?;
    if let cache::CacheStatus::Rejected(reason) = &status {
        eprintln!("warning: cache entry rejected and recomputed: {reason}");
    }
    Ok(table)
}

fn dispatch(cli: &Cli, cache_dir: Option<&std::path::Path>) -> Result<CommandOutput, CliError> {
    match &cli.command {
        Command::Enumerate { k, word, count_only } => cmd_enumerate(*k, word.as_deref(), *count_only),
        Command::Integrate { case, n, word, i, j } => {
            cmd_integrate(case, *n, word.as_deref(), i, j, cli.approx, cache_dir)
        }
        Command::Moments { s, n, max_k } => cmd_moments(*s, *n, *max_k, cli.approx, cache_dir),
        Command::Expand { k, order, pair } => cmd_expand(*k, *order, pair.as_deref()),
        Command::Verify { suite } => cmd_verify(suite),
    }
}

fn rational_payload(value: &BigRational, approx: Option<u32>) -> Value {
    match approx {
        None => json!(rational_to_string(value)),
        Some(digits) => json!({
            "exact": rational_to_string(value),
            "approx": rational_to_decimal(value, digits),
            "approx_digits": digits,
        }),
    }
}

fn human_rational(value: &BigRational, approx: Option<u32>) -> String {
    let mut s = rational_to_string(value);
    if let Some(stripped) = s.strip_suffix("/1") {
        s = stripped.to_string();
    }
    if let Some(digits) = approx {
        s.push_str(&format!(" ~ {}", rational_to_decimal(value, digits)));
    }
    s
}

fn cmd_enumerate(
    k: Option<usize>,
    word: Option<&str>,
    count_only: bool,
) -> Result<CommandOutput, CliError> {
    let (params, pairings) = match (k, word) {
        (Some(k), None) => (json!({ "k": k }), enumerate_pairings(k)?),
        (None, Some(word)) => {
            let parsed = ColorWord::parse(word)?;
            (json!({ "word": word }), enumerate_colored_pairings(&parsed)?)
        }
        _ => {
            return Err(CliError::Usage(
                "enumerate needs exactly one of --k or --word".to_string(),
            ))
        }
    };
    let arrays: Vec<Vec<usize>> = pairings.iter().map(|p| p.partner_one_based()).collect();
    let mut human = String::new();
    let payload = if count_only {
        human.push_str(&format!("{}\n", arrays.len()));
        json!({ "count": arrays.len() })
    } else {
        for p in &pairings {
            human.push_str(&format!("{p}\n"));
        }
        human.push_str(&format!("count: {}\n", arrays.len()));
        json!({ "count": arrays.len(), "pairings": arrays })
    };
    Ok(CommandOutput {
        command: "enumerate",
        params,
        payload,
        human,
        failed: false,
    })
}

fn parse_case(case: &str) -> Result<Case, CliError> {
    match case {
        "orthogonal" => Ok(Case::Orthogonal),
        "unitary" => Ok(Case::Unitary),
        other => Err(CliError::Usage(format!(
            "unknown case {other:?}, expected orthogonal or unitary"
        ))),
    }
}

fn cmd_integrate(
    case: &str,
    n: u64,
    word: Option<&str>,
    i: &str,
    j: &str,
    approx: Option<u32>,
    cache_dir: Option<&std::path::Path>,
) -> Result<CommandOutput, CliError> {
    let case = parse_case(case)?;
    let row = MultiIndex::parse(i)
        .map_err(|e| CliError::Usage(format!("bad row index {i:?}: {e}")))?;
    let col = MultiIndex::parse(j)
        .map_err(|e| CliError::Usage(format!("bad column index {j:?}: {e}")))?;
    let word = match (case, word) {
        (Case::Orthogonal, None) => ColorWord::all_alpha(row.len()),
        (Case::Orthogonal, Some(w)) => {
            let parsed = ColorWord::parse(w)?;
            if parsed.len() != row.len() {
                return Err(CliError::Usage(format!(
                    "word length {} does not match index length {}",
                    parsed.len(),
                    row.len()
                )));
            }
            parsed
        }
        (Case::Unitary, Some(w)) => ColorWord::parse(w)?,
        (Case::Unitary, None) => {
            return Err(CliError::Usage(
                "the unitary case needs --word to mark starred letters".to_string(),
            ))
        }
    };
    let params = json!({
        "case": case.label(),
        "n": n,
        "word": word.to_string(),
        "i": row.to_string(),
        "j": col.to_string(),
    });
    let monomial = MonomialSpec::with_case(case, word, row, col, n)?;
    let value = if monomial.vanishes_trivially() {
        BigRational::from_integer(0.into())
    } else {
        let table = table_for(&monomial.gram_spec(), cache_dir)?;
        integrate_with_table(&monomial, &table)?
    };
    Ok(CommandOutput {
        command: "integrate",
        params,
        payload: json!({ "value": rational_payload(&value, approx) }),
        human: format!("{}\n", human_rational(&value, approx)),
        failed: false,
    })
}

fn cmd_moments(
    s: u64,
    n: u64,
    max_k: usize,
    approx: Option<u32>,
    cache_dir: Option<&std::path::Path>,
) -> Result<CommandOutput, CliError> {
    let params = json!({ "s": s, "n": n, "max_k": max_k });
    let mut rows = Vec::with_capacity(max_k);
    let mut human = String::new();
    for k in 1..=max_k {
        let query = MomentQuery::new(s, n, 2 * k as u64)?;
        let table = table_for(&GramSpec::orthogonal(k, n), cache_dir)?;
        let value = truncated_moment_with_table(&query, &table)?;
        human.push_str(&format!("2k = {:>3}: {}\n", 2 * k, human_rational(&value, approx)));
        rows.push(json!({
            "power": 2 * k,
            "value": rational_payload(&value, approx),
        }));
    }
    Ok(CommandOutput {
        command: "moments",
        params,
        payload: json!({ "moments": rows }),
        human,
        failed: false,
    })
}

fn cmd_expand(k: usize, order: usize, pair: Option<&str>) -> Result<CommandOutput, CliError> {
    let (params, series, human_label) = match pair {
        None => {
            let series = asymptotics::moment_series(k, order)?;
            (
                json!({ "k": k, "order": order, "kind": "moment" }),
                series,
                format!("moment series for k={k}"),
            )
        }
        Some(pair) => {
            let positions: Vec<usize> = pair
                .split(',')
                .map(|t| t.trim().parse::<usize>())
                .collect::<Result<_, _>>()
                .map_err(|e| CliError::Usage(format!("bad pair {pair:?}: {e}")))?;
            let [p, q] = positions[..] else {
                return Err(CliError::Usage(
                    "expected --pair P,Q with 1-based basis positions".to_string(),
                ));
            };
            let graph = DiagramGraph::new(k)?;
            let dim = graph.dimension();
            if p < 1 || q < 1 || p > dim || q > dim {
                return Err(CliError::Usage(format!(
                    "pair positions must lie in 1..={dim} for k={k}"
                )));
            }
            let series = graph.weingarten_series(p - 1, q - 1, order)?;
            (
                json!({ "k": k, "order": order, "kind": "pair", "p": p, "q": q }),
                series,
                format!("weingarten entry series for k={k}, pair ({p},{q})"),
            )
        }
    };
    let coefficients: Vec<String> = series.coeffs().iter().map(rational_to_string).collect();
    let mut human = format!("{human_label}\n");
    for (d, c) in series.coeffs().iter().enumerate() {
        human.push_str(&format!("n^-{d}: {}\n", human_rational(c, None)));
    }
    Ok(CommandOutput {
        command: "expand",
        params,
        payload: json!({ "coefficients": coefficients }),
        human,
        failed: false,
    })
}

fn cmd_verify(suite: &str) -> Result<CommandOutput, CliError> {
    let parsed = Suite::parse(suite).ok_or_else(|| {
        CliError::Usage(format!(
            "unknown suite {suite:?}, expected one of {}",
            Suite::NAMES.join(", ")
        ))
    })?;
    let reports = verify::run(parsed);
    let mut human = String::new();
    let mut all_passed = true;
    let mut suites = Vec::new();
    for report in &reports {
        let passed = report.passed();
        all_passed &= passed;
        human.push_str(&format!("suite {}:\n", report.suite));
        for check in &report.checks {
            let marker = if check.passed { "PASS" } else { "FAIL" };
            human.push_str(&format!(
                "  [{marker}] {} (expected {}, got {})\n",
                check.name, check.expected, check.actual
            ));
        }
        human.push_str(&format!(
            "suite {}: {} ({} checks)\n",
            report.suite,
            if passed { "PASS" } else { "FAIL" },
            report.checks.len()
        ));
        suites.push(json!({
            "suite": report.suite,
            "passed": passed,
            "checks": report
                .checks
                .iter()
                .map(|c| {
                    json!({
                        "name": c.name,
                        "expected": c.expected,
                        "actual": c.actual,
                        "passed": c.passed,
                    })
                })
                .collect::<Vec<_>>(),
        }));
    }
    Ok(CommandOutput {
        command: "verify",
        params: json!({ "suite": suite }),
        payload: json!({ "passed": all_passed, "suites": suites }),
        human,
        failed: !all_passed,
    })
}
