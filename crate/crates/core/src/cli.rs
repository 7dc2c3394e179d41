//! Command-line front end. The `etrans` binary is a thin wrapper around [`run`].
//!
//! Exit codes: 0 on success, 2 for input or usage errors, 3 when `--verify`
//! finds a disagreement with an oracle.

use std::ffi::OsString;
use std::io::{self, Write};
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde::Serialize;

use crate::analytics;
use crate::engine::{self, EdgeOrder, RowFamily, RunOptions};
use crate::hypergraph::Hypergraph;
use crate::oracles::{self, BRUTE_MAX_W, INCLUSION_EXCLUSION_MAX_H};
use crate::vertex_set::VertexSet;
use crate::BigCount;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "etrans", version, about = "Count, enumerate and query hypergraph transversals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Count all transversals and report the transversal number.
    Count {
        #[command(flatten)]
        common: Common,
        /// Also count transversals with at least this many vertices.
        #[arg(long, value_name = "K")]
        at_least: Option<usize>,
        /// Cross-check against the brute-force and inclusion-exclusion oracles.
        #[arg(long)]
        verify: bool,
        /// Print a single JSON object instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Print `k count` for every size k = 0..=w.
    Spectrum {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        verify: bool,
    },
    /// Print the k-element transversals, one sorted vertex list per line.
    Enumerate {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_name = "K")]
        k: usize,
        /// Stop after this many lines.
        #[arg(long, value_name = "M")]
        limit: Option<usize>,
    },
    /// Print the final rows as `0 1 2 e1 ...` tokens.
    Rows {
        #[command(flatten)]
        common: Common,
    },
    /// Restrict the transversals to those containing `--require` and avoiding `--forbid`.
    Query {
        #[command(flatten)]
        common: Common,
        /// Comma-separated vertices, e.g. `8,9`.
        #[arg(long, default_value = "", value_parser = parse_vertex_list)]
        require: VertexSet,
        #[arg(long, default_value = "", value_parser = parse_vertex_list)]
        forbid: VertexSet,
    },
}

#[derive(Args, Debug)]
struct Common {
    /// Hypergraph file (`w h` header and edge lines, or `.json`).
    file: PathBuf,
    /// Edge imposition order.
    #[arg(long, value_enum, default_value_t = OrderArg::Input)]
    order: OrderArg,
    /// Process independent branches in parallel; row order is then unspecified.
    #[arg(long)]
    parallel: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OrderArg {
    Input,
    SizeAsc,
}

fn parse_vertex_list(s: &str) -> Result<VertexSet, String> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| match t.parse::<usize>() {
            Ok(v) if v > 0 => Ok(v),
            _ => Err(format!("invalid vertex {t:?}")),
        })
        .collect()
}

impl Common {
    fn options(&self, min_card: Option<usize>) -> RunOptions {
        let order = match self.order {
            OrderArg::Input => EdgeOrder::Input,
            OrderArg::SizeAsc => EdgeOrder::SizeAscending,
        };
        RunOptions { min_card, order, parallel: self.parallel }
    }
}

/// Summary of a counting run.
#[derive(Debug, Serialize)]
pub struct RunReport {
    pub n_total: String,
    pub r_final: usize,
    pub k_min: Option<usize>,
    pub tau_min: String,
    pub impositions: usize,
    pub s_max_observed: usize,
    pub max_stack: usize,
    pub elapsed_us: u128,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub at_least: Option<AtLeast>,
}

#[derive(Debug, Serialize)]
pub struct AtLeast {
    pub k: usize,
    pub count: String,
}

enum Failure {
    Input(String),
    Mismatch(String),
    Io(io::Error),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return if code == 0 { EXIT_OK } else { EXIT_INPUT };
        }
    };
    match dispatch(cli.command, out) {
        Ok(()) => EXIT_OK,
        Err(Failure::Input(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_INPUT
        }
        Err(Failure::Mismatch(msg)) => {
            let _ = writeln!(err, "verification failed: {msg}");
            EXIT_MISMATCH
        }
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => EXIT_OK,
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INPUT
        }
    }
}

fn load(common: &Common) -> Result<Hypergraph, Failure> {
    Hypergraph::load(&common.file).map_err(|e| Failure::Input(e.to_string()))
}

fn input<T, E: ToString>(r: Result<T, E>) -> Result<T, Failure> {
    r.map_err(|e| Failure::Input(e.to_string()))
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<(), Failure> {
    match command {
        Command::Count { common, at_least, verify, json } => {
            cmd_count(&common, at_least, verify, json, out)
        }
        Command::Spectrum { common, verify } => cmd_spectrum(&common, verify, out),
        Command::Enumerate { common, k, limit } => cmd_enumerate(&common, k, limit, out),
        Command::Rows { common } => {
            let h = load(&common)?;
            let family = engine::run(&h, common.options(None));
            for row in &family.rows {
                writeln!(out, "{row}")?;
            }
            Ok(())
        }
        Command::Query { common, require, forbid } => {
            let h = load(&common)?;
            let family = engine::run(&h, common.options(None));
            let filtered = input(analytics::filter_family(&family, &require, &forbid))?;
            for row in &filtered.rows {
                writeln!(out, "{row}")?;
            }
            writeln!(out, "N = {}", input(analytics::count_total(&filtered))?)?;
            Ok(())
        }
    }
}

fn cmd_count(
    common: &Common,
    at_least: Option<usize>,
    verify: bool,
    json: bool,
    out: &mut dyn Write,
) -> Result<(), Failure> {
    let h = load(common)?;
    let start = Instant::now();
    let family = engine::run(&h, common.options(None));
    let total = input(analytics::count_total(&family))?;
    let transversal_number = analytics::transversal_number(&family).ok();
    let at_least = match at_least {
        Some(k) => {
            let pruned = engine::run(&h, common.options(Some(k)));
            Some((k, input(analytics::count_at_least(&pruned, k))?))
        }
        None => None,
    };
    let elapsed = start.elapsed();

    let report = RunReport {
        n_total: total.to_string(),
        r_final: family.len(),
        k_min: transversal_number.as_ref().map(|t| t.0),
        tau_min: transversal_number.as_ref().map_or_else(|| "0".to_string(), |t| t.1.to_string()),
        impositions: family.stats.impositions,
        s_max_observed: family.stats.max_sons,
        max_stack: family.stats.max_stack,
        elapsed_us: elapsed.as_micros(),
        at_least: at_least.as_ref().map(|(k, n)| AtLeast { k: *k, count: n.to_string() }),
    };

    let verdict = if verify { Some(verify_count(&h, &family, &total, at_least.as_ref())?) } else { None };

    if json {
        writeln!(out, "{}", serde_json::to_string(&report).expect("report serializes"))?;
        return Ok(());
    }
    let k_min = report.k_min.map_or_else(|| "none".to_string(), |k| k.to_string());
    writeln!(out, "N = {}, R = {}, k_min = {}, tau_min = {}", report.n_total, report.r_final, k_min, report.tau_min)?;
    if let Some(a) = &report.at_least {
        writeln!(out, "N(|X| >= {}) = {}", a.k, a.count)?;
    }
    writeln!(
        out,
        "impositions = {}, s_max = {}, max_stack = {}",
        report.impositions, report.s_max_observed, report.max_stack
    )?;
    if let Some(verdict) = verdict {
        writeln!(out, "verify = {verdict}")?;
    }
    Ok(())
}

/// Checks the engine's counts against whichever oracles are within limits.
fn verify_count(
    h: &Hypergraph,
    family: &RowFamily,
    total: &BigCount,
    at_least: Option<&(usize, BigCount)>,
) -> Result<String, Failure> {
    let mut used = Vec::new();
    if h.w() <= BRUTE_MAX_W {
        let sets = input(oracles::brute_transversals(h))?;
        expect_eq("brute-force total", &BigUint::from(sets.len()), total)?;
        if let Some((k, n)) = at_least {
            let brute = sets.iter().filter(|s| s.len() >= *k).count();
            expect_eq("brute-force at-least count", &BigUint::from(brute), n)?;
        }
        used.push("brute-force");
    }
    if h.h() <= INCLUSION_EXCLUSION_MAX_H {
        expect_eq("inclusion-exclusion total", &input(oracles::inclusion_exclusion_count(h, None))?, total)?;
        if let Some((k, n)) = at_least {
            let mut sum = BigUint::default();
            for size in *k..=h.w() {
                sum += input(oracles::inclusion_exclusion_count(h, Some(size)))?;
            }
            expect_eq("inclusion-exclusion at-least count", &sum, n)?;
        }
        used.push("inclusion-exclusion");
    }
    if let Some((k, n)) = at_least {
        expect_eq("unpruned at-least count", &input(analytics::count_at_least(family, *k))?, n)?;
    }
    Ok(if used.is_empty() {
        "skipped (beyond oracle limits)".to_string()
    } else {
        format!("ok ({})", used.join(", "))
    })
}

fn expect_eq(what: &str, oracle: &BigCount, engine: &BigCount) -> Result<(), Failure> {
    if oracle == engine {
        Ok(())
    } else {
        Err(Failure::Mismatch(format!("{what}: oracle {oracle} vs engine {engine}")))
    }
}

fn cmd_spectrum(common: &Common, verify: bool, out: &mut dyn Write) -> Result<(), Failure> {
    let h = load(common)?;
    let family = engine::run(&h, common.options(None));
    let spectrum = input(analytics::spectrum(&family))?;
    if verify && h.h() <= INCLUSION_EXCLUSION_MAX_H {
        for (k, count) in spectrum.counts.iter().enumerate() {
            let oracle = input(oracles::inclusion_exclusion_count(&h, Some(k)))?;
            expect_eq(&format!("inclusion-exclusion tau_{k}"), &oracle, count)?;
        }
    }
    for (k, count) in spectrum.counts.iter().enumerate() {
        writeln!(out, "{k} {count}")?;
    }
    Ok(())
}

fn cmd_enumerate(common: &Common, k: usize, limit: Option<usize>, out: &mut dyn Write) -> Result<(), Failure> {
    let h = load(common)?;
    let family = engine::run(&h, common.options(Some(k)));
    let sets = input(analytics::generate_all_k(&family, k))?;
    for set in sets.take(limit.unwrap_or(usize::MAX)) {
        writeln!(out, "{set}")?;
    }
    Ok(())
}
