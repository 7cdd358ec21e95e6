//! `meanforge` — coefficient tables, symmetry evaluation, the discovery
//! pipeline and the verification grids as machine-readable reports.
//!
//! Exit codes: 0 success, 1 verification/hypothesis failure, 2 usage error.

mod output;
mod selectors;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use meanforge_core::discovery::{check_hypothesis, run_discovery, MAX_DISCOVERY_ORDER};
use meanforge_core::means::parse_mean;
use meanforge_core::symmetry::numeric::{
    functional_symmetry, group_symmetry, phi, star, GaussSolverConfig,
};
use meanforge_core::verify::{run_all, thread_cap, VerifyConfig};

use output::{emit, Format};
use selectors::{operator_series, series_of, SYMBOLIC_ORDER_CAP};

#[derive(Parser)]
#[command(
    name = "meanforge",
    version,
    about = "Exact arithmetic for bivariate means, their expansions and symmetries"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Emit JSON (the default).
    #[arg(long, global = true)]
    json: bool,
    /// Emit CSV instead of JSON.
    #[arg(long, global = true)]
    csv: bool,
    /// Seed for the randomized verification sweeps.
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,
    /// Override every verification threshold.
    #[arg(long, global = true)]
    tol: Option<f64>,
    /// Series/truncation order (default 6 for coeffs and discover, 8 for verify).
    #[arg(long, global = true)]
    order: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Which {
    S,
    Sigma,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Op {
    S,
    Sigma,
    Star,
    Phi,
}

#[derive(Subcommand)]
enum Command {
    /// Expansion coefficients of a mean or of its symmetry operators.
    Coeffs {
        /// Base mean: `A | G | H | Lc-sym | Lc:<value> | file:<path>`.
        #[arg(long)]
        m0: String,
        /// Probe mean: `symbolic | A | G | H | Lc:<value> | file:<path>`.
        #[arg(long, default_value = "symbolic")]
        m1: String,
        /// Operator series to emit; omit for the series of --m0 itself.
        #[arg(long, value_enum)]
        which: Option<Which>,
    },
    /// Evaluate a symmetry operator at one point.
    Symmetry {
        #[arg(long)]
        m0: String,
        /// Second mean; ignored by --op phi.
        #[arg(long, default_value = "A")]
        m1: String,
        #[arg(long, value_enum)]
        op: Op,
        #[arg(long)]
        a: f64,
        #[arg(long)]
        b: f64,
    },
    /// Run the coefficient-comparison pipeline.
    Discover,
    /// Run the verification grids and report per-check residuals.
    Verify {
        /// Comma-separated grid values for (a, b) pairs.
        #[arg(long)]
        grid: Option<String>,
        /// Comma-separated list of parameters c.
        #[arg(long = "c-list")]
        c_list: Option<String>,
        /// Comma-separated probe mean names.
        #[arg(long)]
        means: Option<String>,
        /// Random samples for the axiom sweeps.
        #[arg(long)]
        samples: Option<usize>,
    },
    /// Evaluate a mean at one point.
    Eval {
        #[arg(long)]
        mean: String,
        #[arg(long)]
        a: f64,
        #[arg(long)]
        b: f64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = match (cli.json, cli.csv) {
        (_, false) => Format::Json,
        (false, true) => Format::Csv,
        (true, true) => {
            eprintln!("error: --json and --csv are mutually exclusive");
            return ExitCode::from(2);
        }
    };
    match run(cli, format) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli, format: Format) -> Result<ExitCode, String> {
    match cli.command {
        Command::Coeffs { m0, m1, which } => {
            let order = cli.order.unwrap_or(6);
            let mut series = Vec::new();
            match which {
                None => series.push(("M0".to_string(), series_of(&m0, order)?)),
                Some(w) => {
                    let need_s = matches!(w, Which::S | Which::Both);
                    let need_sigma = matches!(w, Which::Sigma | Which::Both);
                    let (s, sigma) = operator_series(&m0, &m1, order, need_s, need_sigma)?;
                    if let Some(s) = s {
                        series.push(("S".to_string(), s));
                    }
                    if let Some(sigma) = sigma {
                        series.push(("sigma".to_string(), sigma));
                    }
                }
            }
            let rows: Vec<serde_json::Value> = series
                .iter()
                .flat_map(|(role, s)| {
                    let coeffs = s["coeffs"].as_array().cloned().unwrap_or_default();
                    coeffs
                        .into_iter()
                        .enumerate()
                        .map(move |(n, c)| json!({"role": role, "n": n, "coeff": c}))
                })
                .collect();
            let payload = json!({
                "command": "coeffs",
                "m0": m0,
                "m1": m1,
                "order": order,
                "series": series.iter().map(|(role, s)| {
                    let mut s = s.clone();
                    s["role"] = json!(role);
                    s
                }).collect::<Vec<_>>(),
            });
            emit(format, &payload, &["role", "n", "coeff"], &rows);
            Ok(ExitCode::SUCCESS)
        }
        Command::Symmetry { m0, m1, op, a, b } => {
            if !(a > 0.0 && b > 0.0) {
                return Err(format!("arguments must be positive, got ({a}, {b})"));
            }
            let mean0 = parse_mean(&m0).map_err(|e| e.to_string())?;
            let mean1 = parse_mean(&m1).map_err(|e| e.to_string())?;
            let (op_name, value) = match op {
                Op::S => (
                    "S",
                    group_symmetry(&mean0, &mean1)
                        .try_eval(a, b)
                        .map_err(|e| e.to_string())?,
                ),
                Op::Sigma => (
                    "sigma",
                    functional_symmetry(&mean0, &mean1, GaussSolverConfig::default())
                        .try_eval(a, b)
                        .map_err(|e| e.to_string())?,
                ),
                Op::Star => (
                    "star",
                    star(&mean0, &mean1)
                        .try_eval(a, b)
                        .map_err(|e| e.to_string())?,
                ),
                Op::Phi => ("phi", phi(&mean0, a, b)),
            };
            let payload = json!({
                "command": "symmetry",
                "op": op_name,
                "m0": m0,
                "m1": m1,
                "a": a,
                "b": b,
                "value": value,
            });
            let rows = vec![payload.clone()];
            emit(
                format,
                &payload,
                &["op", "m0", "m1", "a", "b", "value"],
                &rows,
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Discover => {
            let order = cli.order.unwrap_or(6);
            if !(2..=MAX_DISCOVERY_ORDER).contains(&order) {
                return Err(format!(
                    "discover order must lie in [2, {MAX_DISCOVERY_ORDER}], got {order}"
                ));
            }
            let state = run_discovery(order).map_err(|e| e.to_string())?;
            let matches = check_hypothesis(&state);
            let steps: Vec<serde_json::Value> = state
                .steps
                .iter()
                .map(|s| {
                    json!({
                        "n": s.n,
                        "difference": s.difference.to_string(),
                        "condition": s.condition.to_string(),
                        "solved": s.solved.to_string(),
                    })
                })
                .collect();
            let payload = json!({
                "command": "discover",
                "order": order,
                "matches_hypothesis": matches,
                "solved": state.solved.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
                "steps": steps,
            });
            emit(
                format,
                &payload,
                &["n", "difference", "condition", "solved"],
                &steps,
            );
            Ok(if matches {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Verify {
            grid,
            c_list,
            means,
            samples,
        } => {
            let mut cfg = VerifyConfig {
                seed: cli.seed,
                tol_override: cli.tol,
                threads: thread_cap(),
                ..VerifyConfig::default()
            };
            if let Some(order) = cli.order {
                if order > SYMBOLIC_ORDER_CAP {
                    return Err(format!(
                        "symbolic order {order} exceeds the cap of {SYMBOLIC_ORDER_CAP}"
                    ));
                }
                cfg.series_order = order;
            }
            if let Some(grid) = grid {
                cfg.grid = parse_f64_list(&grid)?;
                if cfg.grid.iter().any(|&v| v <= 0.0) {
                    return Err("grid values must be positive".to_string());
                }
            }
            if let Some(cs) = c_list {
                cfg.c_list = parse_f64_list(&cs)?;
                if cfg.c_list.iter().any(|&c| c < -1.0) {
                    return Err("c values must satisfy c >= -1".to_string());
                }
            }
            if let Some(m) = means {
                cfg.probe_means = m.split(',').map(|s| s.trim().to_string()).collect();
                for name in &cfg.probe_means {
                    parse_mean(name).map_err(|e| e.to_string())?;
                }
            }
            if let Some(s) = samples {
                cfg.samples = s;
            }
            let report = run_all(&cfg);
            match format {
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&report).expect("report serializes")
                ),
                Format::Csv => print!("{}", report.to_csv()),
            }
            Ok(if report.overall_pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Eval { mean, a, b } => {
            let m = parse_mean(&mean).map_err(|e| e.to_string())?;
            let value = m.try_eval(a, b).map_err(|e| e.to_string())?;
            let payload = json!({
                "command": "eval",
                "mean": mean,
                "a": a,
                "b": b,
                "value": value,
            });
            let rows = vec![payload.clone()];
            emit(format, &payload, &["mean", "a", "b", "value"], &rows);
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn parse_f64_list(text: &str) -> Result<Vec<f64>, String> {
    text.split(',')
        .map(|s| {
            s.trim()
                .parse::<f64>()
                .map_err(|_| format!("invalid number `{s}`"))
        })
        .collect()
}
