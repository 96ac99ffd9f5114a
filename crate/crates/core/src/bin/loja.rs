//! `loja`: exponent bounds, critical-point counts, curve witnesses and
//! numerical exponent estimates for max-systems of polynomials.
//!
//! Every command prints one JSON report on stdout. Exit status is 0 on
//! success (including findings such as a failed positivity hypothesis), 1 on
//! domain or input errors (the JSON report then carries `outputs.error`) and
//! 2 on usage errors.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use loja::report::{self, EstimateArgs, Report, WitnessArgs};
use loja::{Error, OptConfig, RadiusSchedule, Regime, Result};

#[derive(Parser)]
#[command(name = "loja", version, about = "Lojasiewicz exponents of polynomial max-systems")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Closed-form exponent bounds for degree d in n variables.
    Bound {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        d: u64,
        /// The system is a single polynomial; also report the single-polynomial bound.
        #[arg(long)]
        single: bool,
    },
    /// Critical-point count of a degree-c function on a complete intersection.
    Count {
        #[arg(long)]
        n: u64,
        /// Comma-separated hypersurface degrees; may be empty.
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        degrees: String,
        #[arg(long)]
        c: u64,
        /// Also evaluate the closed form for k equal degree-d hypersurfaces.
        #[arg(long, requires_all = ["k", "d"])]
        closed: bool,
        #[arg(long)]
        k: Option<u64>,
        #[arg(long)]
        d: Option<u64>,
    },
    /// Exact order of the max-system along a monomial curve.
    Witness {
        #[arg(long)]
        system: PathBuf,
        /// Comma-separated integer exponents a_i.
        #[arg(long, allow_hyphen_values = true)]
        curve_a: String,
        /// Comma-separated nonzero rational coefficients s_i.
        #[arg(long, allow_hyphen_values = true)]
        curve_s: String,
        #[arg(long, default_value = "local")]
        regime: Regime,
        /// Use max |f_i| instead of max f_i.
        #[arg(long)]
        abs: bool,
    },
    /// Numerical exponent estimate from minima on shrinking (or growing) cubes.
    Estimate(EstimateCmd),
    /// Write a built-in system to stdout in the polynomial file format.
    #[command(subcommand)]
    Generate(Generate),
}

#[derive(Args)]
struct EstimateCmd {
    #[arg(long)]
    system: PathBuf,
    #[arg(long)]
    r_start: f64,
    #[arg(long)]
    ratio: f64,
    #[arg(long)]
    count: usize,
    #[arg(long, default_value = "local")]
    regime: Regime,
    #[arg(long, default_value_t = 64)]
    starts: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    max_iters: Option<usize>,
    /// Use max |f_i| instead of max f_i.
    #[arg(long)]
    abs: bool,
    /// Also write the per-radius minima as CSV.
    #[arg(long)]
    csv: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Generate {
    /// f_1 = x1^d, f_i = x_{i-1} - x_i^d.
    WorstCase {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        d: u32,
        /// Emit the single polynomial Σ f_i².
        #[arg(long, conflicts_with = "abs")]
        sos: bool,
        /// Emit ±f_i, whose max is max |f_i|.
        #[arg(long)]
        abs: bool,
    },
    /// Lift a single polynomial by one variable: F + (x_{n+1} - ℓ^d)².
    Pemantle {
        #[arg(long)]
        base: PathBuf,
        #[arg(long)]
        d: u32,
        /// Linear form ℓ; defaults to the last base variable.
        #[arg(long, allow_hyphen_values = true)]
        ell: Option<String>,
    },
    /// {Σ f_i², x_{n+1}} for the worst-case f_i.
    Mixed {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        d: u32,
    },
    /// Ψ = max(f_i, ±g_j, -h_k) for the set {g = 0, h >= 0}.
    Semialg {
        #[arg(long)]
        f: PathBuf,
        #[arg(long)]
        g: Option<PathBuf>,
        #[arg(long)]
        h: Option<PathBuf>,
    },
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::InvalidConfig(format!("cannot read {}: {e}", path.display())))
}

fn threads_from_env() -> Result<usize> {
    match std::env::var("LOJA_THREADS") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Error::InvalidConfig(format!("LOJA_THREADS must be a non-negative integer, got {v:?}"))),
        Err(_) => Ok(0),
    }
}

enum Output {
    Json(Report),
    Text(String),
}

fn run(cmd: Command) -> (String, Value, Result<Output>) {
    match cmd {
        Command::Bound { n, d, single } => {
            ("bound".into(), json!({ "n": n, "d": d, "single": single }), report::bound(n, d, single).map(Output::Json))
        }
        Command::Count { n, degrees, c, closed, k, d } => {
            let inputs = json!({ "n": n, "degrees": degrees, "c": c });
            let res = (|| {
                let degs = report::parse_int_list(&degrees)?
                    .into_iter()
                    .map(|v| u64::try_from(v).map_err(|_| Error::DomainError(format!("degree must be >= 1, got {v}"))))
                    .collect::<Result<Vec<_>>>()?;
                let closed = if closed { Some((k.unwrap_or(0), d.unwrap_or(0))) } else { None };
                report::count(n, &degs, c, closed).map(Output::Json)
            })();
            ("count".into(), inputs, res)
        }
        Command::Witness { system, curve_a, curve_s, regime, abs } => {
            let inputs = json!({
                "system": system.display().to_string(),
                "curve_a": curve_a,
                "curve_s": curve_s,
                "regime": regime,
                "abs": abs,
            });
            let res = read(&system).and_then(|text| {
                let args = WitnessArgs { system_text: &text, curve_a: &curve_a, curve_s: &curve_s, regime, abs };
                report::witness(&args, inputs.clone()).map(Output::Json)
            });
            ("witness".into(), inputs, res)
        }
        Command::Estimate(e) => {
            let inputs = json!({
                "system": e.system.display().to_string(),
                "r_start": e.r_start,
                "ratio": e.ratio,
                "count": e.count,
                "regime": e.regime,
                "starts": e.starts,
                "seed": e.seed,
                "abs": e.abs,
            });
            let res = estimate(&e, inputs.clone());
            ("estimate".into(), inputs, res)
        }
        Command::Generate(g) => {
            let (inputs, res) = match g {
                Generate::WorstCase { n, d, sos, abs } => (
                    json!({ "kind": "worst-case", "n": n, "d": d, "sos": sos, "abs": abs }),
                    report::generate_worst_case(n, d, sos, abs),
                ),
                Generate::Pemantle { base, d, ell } => (
                    json!({ "kind": "pemantle", "base": base.display().to_string(), "d": d, "ell": ell }),
                    read(&base).and_then(|t| report::generate_pemantle(&t, d, ell.as_deref())),
                ),
                Generate::Mixed { n, d } => {
                    (json!({ "kind": "mixed", "n": n, "d": d }), report::generate_mixed(n, d))
                }
                Generate::Semialg { f, g, h } => {
                    let inputs = json!({ "kind": "semialg", "f": f.display().to_string() });
                    let res = (|| {
                        let ft = read(&f)?;
                        let gt = g.as_deref().map(read).transpose()?;
                        let ht = h.as_deref().map(read).transpose()?;
                        report::generate_semialg(&ft, gt.as_deref(), ht.as_deref())
                    })();
                    (inputs, res)
                }
            };
            ("generate".into(), inputs, res.map(Output::Text))
        }
    }
}

fn estimate(e: &EstimateCmd, inputs: Value) -> Result<Output> {
    let text = read(&e.system)?;
    let schedule = RadiusSchedule::new(e.r_start, e.ratio, e.count, e.regime)?;
    let mut config = OptConfig { starts: e.starts, seed: e.seed, threads: threads_from_env()?, ..OptConfig::default() };
    if let Some(m) = e.max_iters {
        config.max_iters = m;
    }
    let args = EstimateArgs { system_text: &text, schedule, config, abs: e.abs };
    let (rep, records) = report::estimate(&args, inputs)?;
    if let (Some(path), Some(records)) = (&e.csv, records) {
        let csv = report::records_csv(&records)?;
        fs::write(path, csv).map_err(|err| Error::InvalidConfig(format!("cannot write {}: {err}", path.display())))?;
    }
    Ok(Output::Json(rep))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (command, inputs, res) = run(cli.command);
    match res {
        Ok(Output::Json(r)) => {
            println!("{}", r.to_json());
            ExitCode::SUCCESS
        }
        Ok(Output::Text(t)) => {
            print!("{t}");
            ExitCode::SUCCESS
        }
        Err(err) => {
            println!("{}", Report::error(&command, inputs, &err).to_json());
            ExitCode::from(1)
        }
    }
}
