//! Command-line front end: tables, verification suites, asymptotic
//! comparisons, the rank distribution and moment tables.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::{self, Write};
use std::path::PathBuf;
use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Map, Value};

use crate::asymptotics::{structural_asymptotics, u_mn_asymptotic, u_total_asymptotic};
use crate::bigmath::ln_abs;
use crate::genfun::{unimodal_moments, RowEvaluator, Route, UnimodalTableSet};
use crate::verify::{self, CheckReport, EmpiricalDist};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_IO: i32 = 3;

/// Largest size the brute-force route accepts.
pub const ORACLE_MAX_N: usize = 30;

pub const THREADS_ENV: &str = "UNIMODAL_THREADS";

#[derive(Debug, Parser)]
#[command(name = "unimodal", version, about = "Rank statistics of strongly unimodal sequences")]
pub struct CliConfig {
    #[command(subcommand)]
    pub command: Command,

    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Csv)]
    pub format: Format,

    /// Write to this file instead of standard output.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,

    /// Worker threads (default: $UNIMODAL_THREADS, then all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    /// Omit the timestamp from JSON output.
    #[arg(long, global = true)]
    pub deterministic: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum RouteArg {
    Bivariate,
    PerM,
    Theta,
    Oracle,
    All,
}

impl RouteArg {
    fn routes(self) -> Vec<Route> {
        match self {
            RouteArg::Bivariate => vec![Route::Bivariate],
            RouteArg::PerM => vec![Route::PerM],
            RouteArg::Theta => vec![Route::Theta],
            RouteArg::Oracle => vec![Route::Oracle],
            RouteArg::All => Route::ALL.to_vec(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Table1,
    LogConcavity,
    Identities,
    Oracles,
    Moments,
    Asymptotics,
    Distribution,
    Analytic,
    All,
}

fn parse_checkpoints(s: &str) -> Result<Vec<usize>, String> {
    let v: Vec<usize> = s
        .split(',')
        .map(|x| x.trim().parse::<usize>().map_err(|e| format!("{x:?}: {e}")))
        .collect::<Result<_, _>>()?;
    if v.is_empty() || v.contains(&0) {
        return Err("checkpoints must be positive".into());
    }
    if v.windows(2).any(|w| w[0] >= w[1]) {
        return Err("checkpoints must be strictly increasing".into());
    }
    Ok(v)
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print u(m, n) for 0 <= m <= max-m and 1 <= n <= max-n.
    Table {
        #[arg(long, default_value_t = 20)]
        max_n: usize,
        #[arg(long, default_value_t = 4)]
        max_m: usize,
        /// Computation route; `all` cross-checks every route first.
        #[arg(long, value_enum, default_value_t = RouteArg::PerM)]
        route: RouteArg,
    },
    /// Run verification suites; exit 1 if any check fails.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        /// Range for the exact suites.
        #[arg(long, default_value_t = 500)]
        max_n: usize,
        #[arg(long, value_parser = parse_checkpoints, default_value = "250,1000,4000")]
        checkpoints: std::vec::Vec<usize>,
    },
    /// Compare exact values with the asymptotic formulas at the checkpoints.
    Asymptote {
        #[arg(long, default_value_t = 3)]
        max_m: usize,
        #[arg(long, value_parser = parse_checkpoints, default_value = "250,1000,4000")]
        checkpoints: std::vec::Vec<usize>,
    },
    /// The normalised rank distribution at size n against the normal CDF.
    Dist {
        #[arg(long)]
        n: usize,
    },
    /// Even rank moments u_{2k}(n) and absolute moments u_r^+(n).
    Moments {
        #[arg(long, default_value_t = 100)]
        max_n: usize,
        /// Largest k for u_{2k}.
        #[arg(long, default_value_t = 3)]
        k: u32,
        /// Largest r for u_r^+ (0 for none).
        #[arg(long, default_value_t = 0)]
        r: u32,
    },
}

/// Something that ends the run with a specific exit code.
#[derive(Debug)]
struct Exit {
    code: i32,
    message: String,
}

fn usage(message: impl Into<String>) -> Exit {
    Exit {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

/// Parse `args` (including the program name) and run; returns the exit code.
pub fn main_with_args<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match CliConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                stderr.write_all(text.as_bytes())
            } else {
                stdout.write_all(text.as_bytes())
            };
            return code;
        }
    };
    run(&config, stdout, stderr)
}

pub fn run(config: &CliConfig, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let threads = config
        .common
        .threads
        .or_else(|| std::env::var(THREADS_ENV).ok()?.parse().ok());
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(t) = threads {
        builder = builder.num_threads(t);
    }
    let pool = match builder.build() {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(stderr, "error: thread pool: {e}");
            return EXIT_USAGE;
        }
    };
    let outcome = pool.install(|| produce(config));
    let (body, code) = match outcome {
        Ok(ok) => ok,
        Err(Exit { code, message }) => {
            let _ = writeln!(stderr, "error: {message}");
            return code;
        }
    };
    let written = match &config.common.output {
        Some(path) => std::fs::write(path, body.as_bytes()),
        None => stdout.write_all(body.as_bytes()).and_then(|_| stdout.flush()),
    };
    if let Err(e) = written {
        let _ = writeln!(stderr, "error: writing output: {e}");
        return EXIT_IO;
    }
    code
}

fn produce(config: &CliConfig) -> Result<(String, i32), Exit> {
    let fmt = config.common.format;
    let stamp = !config.common.deterministic;
    match &config.command {
        Command::Table {
            max_n,
            max_m,
            route,
        } => table(*max_n, *max_m, *route, fmt, stamp),
        Command::Verify {
            suite,
            max_n,
            checkpoints,
        } => verify_suite(*suite, *max_n, checkpoints, fmt, stamp),
        Command::Asymptote { max_m, checkpoints } => {
            Ok((asymptote(*max_m, checkpoints, fmt, stamp), EXIT_OK))
        }
        Command::Dist { n } => {
            if *n == 0 {
                return Err(usage("--n must be at least 1"));
            }
            Ok((dist(*n, fmt, stamp), EXIT_OK))
        }
        Command::Moments { max_n, k, r } => {
            if *max_n == 0 {
                return Err(usage("--max-n must be at least 1"));
            }
            Ok((moments(*max_n, *k, *r, fmt, stamp), EXIT_OK))
        }
    }
}

fn finish_json(mut obj: Map<String, Value>, stamp: bool) -> String {
    if stamp {
        let secs = SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .map(|d| d.as_secs())
            .unwrap_or(0);
        obj.insert("generated_at".into(), json!(secs));
    }
    let mut s = serde_json::to_string_pretty(&Value::Object(obj)).expect("serialisable");
    s.push('\n');
    s
}

fn table(
    max_n: usize,
    max_m: usize,
    route: RouteArg,
    fmt: Format,
    stamp: bool,
) -> Result<(String, i32), Exit> {
    if max_n == 0 {
        return Err(usage("--max-n must be at least 1"));
    }
    let routes = route.routes();
    if routes.contains(&Route::Oracle) && max_n > ORACLE_MAX_N {
        return Err(usage(format!(
            "the oracle route enumerates sequences and is limited to --max-n {ORACLE_MAX_N}"
        )));
    }
    let sets: Vec<UnimodalTableSet> = routes
        .iter()
        .map(|&r| UnimodalTableSet::compute(r, max_n))
        .collect();
    for other in &sets[1..] {
        if let Some((m, n)) = sets[0].first_disagreement(other) {
            let a = sets[0].get(m, n).unwrap_or_default();
            let b = other.get(m, n).unwrap_or_default();
            return Err(Exit {
                code: EXIT_FAIL,
                message: format!(
                    "routes disagree at u({m},{n}): {} gives {a}, {} gives {b}",
                    sets[0].route, other.route
                ),
            });
        }
    }
    let t = &sets[0];
    let cell = |m: usize, n: usize| t.get(m as i64, n).unwrap_or_default();
    let out = match fmt {
        Format::Csv => {
            let mut s = String::from("m");
            for n in 1..=max_n {
                let _ = write!(s, ",{n}");
            }
            s.push('\n');
            for m in 0..=max_m {
                s.push_str(&m.to_string());
                for n in 1..=max_n {
                    let _ = write!(s, ",{}", cell(m, n));
                }
                s.push('\n');
            }
            s
        }
        Format::Json => {
            let mut rows = Map::new();
            for m in 0..=max_m {
                let cells: Vec<Value> = (1..=max_n).map(|n| json!(cell(m, n).to_string())).collect();
                rows.insert(m.to_string(), Value::Array(cells));
            }
            let mut obj = Map::new();
            obj.insert("route".into(), json!(route_label(route)));
            obj.insert("max_n".into(), json!(max_n));
            obj.insert("max_m".into(), json!(max_m));
            obj.insert("u".into(), Value::Object(rows));
            finish_json(obj, stamp)
        }
        Format::Text => {
            let width = (0..=max_m)
                .flat_map(|m| (1..=max_n).map(move |n| (m, n)))
                .map(|(m, n)| cell(m, n).to_string().len())
                .max()
                .unwrap_or(1)
                .max(max_n.to_string().len());
            let mut s = format!("{:>3} |", "m\\n");
            for n in 1..=max_n {
                let _ = write!(s, " {n:>width$}");
            }
            s.push('\n');
            for m in 0..=max_m {
                let _ = write!(s, "{m:>3} |");
                for n in 1..=max_n {
                    let v = cell(m, n);
                    let shown = if v == BigInt::from(0) { String::new() } else { v.to_string() };
                    let _ = write!(s, " {shown:>width$}");
                }
                s.push('\n');
            }
            s
        }
    };
    Ok((out, EXIT_OK))
}

fn route_label(r: RouteArg) -> &'static str {
    match r {
        RouteArg::All => "all",
        RouteArg::Bivariate => "bivariate",
        RouteArg::PerM => "per-m",
        RouteArg::Theta => "theta",
        RouteArg::Oracle => "oracle",
    }
}

/// Tolerances used by the asymptotic suites.
pub const ASYMPTOTIC_TOLERANCE: f64 = 0.15;
pub const MOMENT_TOLERANCE: f64 = 0.10;
pub const DISTANCE_BOUND: f64 = 0.05;

fn run_suite(suite: Suite, max_n: usize, checkpoints: &[usize]) -> Result<Vec<CheckReport>, Exit> {
    let needs_rows = matches!(
        suite,
        Suite::Moments | Suite::Asymptotics | Suite::Distribution | Suite::All
    );
    let eval = needs_rows.then(|| RowEvaluator::new(*checkpoints.last().expect("nonempty")));
    let eval = eval.as_ref();
    let mut out = Vec::new();
    let want = |s: Suite| suite == s || suite == Suite::All;
    if want(Suite::Table1) {
        out.push(verify::check_table1());
    }
    if want(Suite::LogConcavity) {
        out.push(verify::check_log_concavity(max_n));
    }
    if want(Suite::Identities) {
        out.push(verify::check_identities(max_n));
    }
    if want(Suite::Oracles) {
        out.push(verify::check_oracles(20, 25, 30));
    }
    if want(Suite::Moments) {
        out.push(verify::check_moments(
            max_n,
            3,
            eval.expect("rows"),
            checkpoints,
            MOMENT_TOLERANCE,
        ));
    }
    if want(Suite::Asymptotics) {
        out.push(verify::check_asymptotics(
            eval.expect("rows"),
            checkpoints,
            ASYMPTOTIC_TOLERANCE,
        ));
    }
    if want(Suite::Distribution) {
        out.push(verify::check_distribution(
            eval.expect("rows"),
            checkpoints,
            DISTANCE_BOUND,
        ));
    }
    if want(Suite::Analytic) {
        out.push(verify::check_analytic().map_err(|e| Exit {
            code: EXIT_FAIL,
            message: format!("analytic checks: {e}"),
        })?);
    }
    Ok(out)
}

fn verify_suite(
    suite: Suite,
    max_n: usize,
    checkpoints: &[usize],
    fmt: Format,
    stamp: bool,
) -> Result<(String, i32), Exit> {
    if max_n == 0 {
        return Err(usage("--max-n must be at least 1"));
    }
    let reports = run_suite(suite, max_n, checkpoints)?;
    let code = if reports.iter().all(|r| r.status != verify::Status::Fail) {
        EXIT_OK
    } else {
        EXIT_FAIL
    };
    let out = match fmt {
        Format::Json => {
            let mut obj = Map::new();
            obj.insert(
                "reports".into(),
                Value::Array(reports.iter().map(CheckReport::to_json).collect()),
            );
            finish_json(obj, stamp)
        }
        Format::Text => reports.iter().map(CheckReport::to_text).collect(),
        Format::Csv => {
            let mut s = String::from("check_id,status,n_lo,n_hi,failures\n");
            fn walk(r: &CheckReport, s: &mut String) {
                let _ = writeln!(
                    s,
                    "{},{},{},{},{}",
                    r.check_id, r.status, r.range.0, r.range.1, r.failures
                );
                r.children.iter().for_each(|c| walk(c, s));
            }
            reports.iter().for_each(|r| walk(r, &mut s));
            s
        }
    };
    Ok((out, code))
}

struct AsymRow {
    n: usize,
    quantity: String,
    exact: BigInt,
    ln_exact: f64,
    ln_order0: f64,
    ln_order1: Option<f64>,
}

fn asymptote(max_m: usize, checkpoints: &[usize], fmt: Format, stamp: bool) -> String {
    let eval = RowEvaluator::new(*checkpoints.last().expect("nonempty"));
    let mut rows = Vec::new();
    for &n in checkpoints {
        let nu = n as u64;
        for m in 0..=max_m {
            let exact = eval.u(m as i64, n);
            rows.push(AsymRow {
                n,
                quantity: format!("u({m},n)"),
                ln_exact: ln_abs(&exact),
                exact,
                ln_order0: u_mn_asymptotic(m as u64, nu, 0).ln_value(),
                ln_order1: Some(u_mn_asymptotic(m as u64, nu, 1).ln_value()),
            });
        }
        let total = eval.row(n).total();
        rows.push(AsymRow {
            n,
            quantity: "u(n)".into(),
            ln_exact: ln_abs(&total),
            exact: total,
            ln_order0: u_total_asymptotic(nu, 0).ln_value(),
            ln_order1: Some(u_total_asymptotic(nu, 1).ln_value()),
        });
        let s = structural_asymptotics(0, nu);
        let diff = eval.u(0, n) - eval.u(1, n);
        rows.push(AsymRow {
            n,
            quantity: "u(0,n)-u(1,n)".into(),
            ln_exact: ln_abs(&diff),
            exact: diff,
            ln_order0: s.ln_diff,
            ln_order1: None,
        });
        let gap = eval.u(1, n) * eval.u(1, n) - eval.u(0, n) * eval.u(2, n);
        rows.push(AsymRow {
            n,
            quantity: "u(1,n)^2-u(0,n)u(2,n)".into(),
            ln_exact: ln_abs(&gap),
            exact: gap,
            ln_order0: s.ln_logconc,
            ln_order1: None,
        });
    }
    let ratio = |ln_est: f64, ln_exact: f64| (ln_exact - ln_est).exp();
    match fmt {
        Format::Csv | Format::Text => {
            let mut s = String::from("n,quantity,exact,ratio_order0,ratio_order1\n");
            for r in &rows {
                let r1 = r
                    .ln_order1
                    .map(|l| format!("{:.10}", ratio(l, r.ln_exact)))
                    .unwrap_or_default();
                let _ = writeln!(
                    s,
                    "{},\"{}\",{},{:.10},{}",
                    r.n,
                    r.quantity,
                    r.exact,
                    ratio(r.ln_order0, r.ln_exact),
                    r1
                );
            }
            s
        }
        Format::Json => {
            let items: Vec<Value> = rows
                .iter()
                .map(|r| {
                    json!({
                        "n": r.n,
                        "quantity": r.quantity,
                        "exact": r.exact.to_string(),
                        "ln_exact": r.ln_exact,
                        "ln_order0": r.ln_order0,
                        "ln_order1": r.ln_order1,
                        "ratio_order0": ratio(r.ln_order0, r.ln_exact),
                        "ratio_order1": r.ln_order1.map(|l| ratio(l, r.ln_exact)),
                    })
                })
                .collect();
            let mut obj = Map::new();
            obj.insert("rows".into(), Value::Array(items));
            finish_json(obj, stamp)
        }
    }
}

fn dist(n: usize, fmt: Format, stamp: bool) -> String {
    let d = EmpiricalDist::from_row(&RowEvaluator::new(n).row(n));
    let rows = d.rows();
    match fmt {
        Format::Csv | Format::Text => {
            let mut s = String::from("m,x,probability,cdf,phi\n");
            for r in &rows {
                let _ = writeln!(
                    s,
                    "{},{:.12},{:.12e},{:.12},{:.12}",
                    r.m, r.x, r.probability, r.cdf, r.normal
                );
            }
            s
        }
        Format::Json => {
            let items: Vec<Value> = rows
                .iter()
                .map(|r| {
                    json!({"m": r.m, "x": r.x, "probability": r.probability,
                           "cdf": r.cdf, "phi": r.normal})
                })
                .collect();
            let mut obj = Map::new();
            obj.insert("n".into(), json!(n));
            obj.insert("total".into(), json!(d.total.to_string()));
            obj.insert("kolmogorov_distance".into(), json!(d.kolmogorov_distance()));
            obj.insert("atoms".into(), Value::Array(items));
            finish_json(obj, stamp)
        }
    }
}

fn moments(max_n: usize, k: u32, r: u32, fmt: Format, stamp: bool) -> String {
    let tables = UnimodalTableSet::per_m(max_n);
    let mut columns: Vec<(String, Vec<BigInt>)> = (0..=k)
        .map(|j| (format!("u_{}", 2 * j), unimodal_moments(&tables, 2 * j, true)))
        .collect();
    columns.extend((1..=r).map(|j| (format!("u+_{j}"), unimodal_moments(&tables, j, false))));
    match fmt {
        Format::Csv | Format::Text => {
            let mut s = String::from("n");
            for (name, _) in &columns {
                let _ = write!(s, ",{name}");
            }
            s.push('\n');
            for n in 0..=max_n {
                s.push_str(&n.to_string());
                for (_, col) in &columns {
                    let _ = write!(s, ",{}", col[n]);
                }
                s.push('\n');
            }
            s
        }
        Format::Json => {
            let mut obj = Map::new();
            obj.insert("max_n".into(), json!(max_n));
            for (name, col) in &columns {
                let v: Vec<Value> = col.iter().map(|c| json!(c.to_string())).collect();
                obj.insert(name.clone(), Value::Array(v));
            }
            finish_json(obj, stamp)
        }
    }
}

/// Entry point for the binary.
pub fn main() -> i32 {
    let stdout = io::stdout();
    let stderr = io::stderr();
    main_with_args(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}
