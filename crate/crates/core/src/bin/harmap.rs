use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use harmap::oracle::{conjecture_scan, OracleConfig};
use harmap::radii::{coefficient_bound, BoundVariant, ClassParams, Theorem};
use harmap::report::{
    checks_csv, fmt_sig, oracle_summary, radii_csv, run_suite, scan_csv, table_csv, Status, Suite,
    TableId, VerifyOptions, PROVEN_BOUND_SLACK,
};
use harmap::{build_extremal, parse_map, write_map, ExtremalKind, ExtremalSpec, GridSpec};

#[derive(Parser)]
#[command(
    name = "harmap",
    version,
    about = "Landau and Bloch radii for planar harmonic mappings"
)]
struct Cli {
    /// Write the result here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Overrides the primary tolerance of a verification suite.
    #[arg(long, global = true)]
    tolerance: Option<f64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct Params {
    /// Defaults to 1 (2 for the conjecture suite).
    #[arg(long = "K")]
    k: Option<f64>,
    #[arg(long = "Kp", default_value_t = 0.0)]
    kp: f64,
    #[arg(long = "Lambda")]
    lambda_big: Option<f64>,
    #[arg(long = "lambda")]
    lambda_small: Option<f64>,
    #[arg(long = "M")]
    m: Option<f64>,
}

impl Params {
    fn class(&self) -> ClassParams {
        ClassParams {
            k: self.k.unwrap_or(1.0),
            kp: self.kp,
            lambda_big: self.lambda_big,
            lambda_small: self.lambda_small,
            m: self.m,
        }
    }
}

#[derive(Args, Clone, Copy)]
struct GridArgs {
    #[arg(long, default_value_t = 64)]
    radial_steps: usize,
    #[arg(long, default_value_t = 128)]
    angular_steps: usize,
    #[arg(long, default_value_t = 0.9)]
    max_radius: f64,
    #[arg(long, default_value_t = 1e-6)]
    pair_tolerance: f64,
    #[arg(long, default_value_t = 40)]
    bisection_steps: usize,
}

impl GridArgs {
    fn config(&self, seed: u64, samples: usize) -> OracleConfig {
        OracleConfig {
            grid: GridSpec {
                radial_steps: self.radial_steps,
                angular_steps: self.angular_steps,
                max_radius: self.max_radius,
            },
            pair_tolerance: self.pair_tolerance,
            bisection_steps: self.bisection_steps,
            seed,
            samples,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Reproduce a radius comparison table (1: elliptic, 2: quasiregular).
    Table { which: TableId },
    /// Univalence and schlicht radii of one result.
    Radii {
        theorem: Theorem,
        #[command(flatten)]
        params: Params,
    },
    /// Bound on |a_n| + |b_n|.
    CoeffBound {
        variant: BoundVariant,
        #[command(flatten)]
        params: Params,
        #[arg(long)]
        n: usize,
    },
    /// Write an extremal map as a mapping-spec file.
    Extremal {
        /// f0, f1, fn or Fn
        kind: String,
        #[command(flatten)]
        params: Params,
        #[arg(long)]
        n: Option<usize>,
        /// Truncation degree.
        #[arg(long = "N")]
        degree: Option<usize>,
    },
    /// Univalence bracket and schlicht estimate of a mapping-spec file.
    Oracle {
        map: PathBuf,
        #[command(flatten)]
        grid: GridArgs,
    },
    /// Run a verification suite; exits 1 if any check fails.
    Verify {
        suite: Suite,
        /// Restrict the sharpness suite to one result.
        #[arg(long)]
        theorem: Option<Theorem>,
        #[command(flatten)]
        params: Params,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
    },
    /// Random search against the conjectured coefficient bound.
    ConjectureScan {
        #[command(flatten)]
        params: Params,
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
        #[command(flatten)]
        grid: GridArgs,
    },
}

enum Failure {
    /// A check failed.
    Check(String),
    /// Bad input, parameters or I/O.
    Config(String),
}

impl From<harmap::Error> for Failure {
    fn from(e: harmap::Error) -> Self {
        Failure::Config(e.to_string())
    }
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => {
            fs::write(path, text).map_err(|e| Failure::Config(format!("{}: {e}", path.display())))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn extremal_spec(kind: &str, p: &Params, n: Option<usize>) -> Result<ExtremalSpec, Failure> {
    let need = |v: Option<f64>, name: &str| {
        v.ok_or_else(|| Failure::Config(format!("{kind} requires --{name}")))
    };
    let need_n = || n.ok_or_else(|| Failure::Config(format!("{kind} requires --n")));
    Ok(match kind {
        "f0" => ExtremalSpec::f0(need(p.m, "M")?),
        "f1" => ExtremalSpec::f1(need(p.lambda_big, "Lambda")?),
        "fn" => ExtremalSpec::fn_map(need(p.lambda_big, "Lambda")?, need_n()?),
        "Fn" | "Fn_conjecture" => ExtremalSpec::with_default_degree(ExtremalKind::FnConjecture {
            lambda_big: need(p.lambda_big, "Lambda")?,
            n: need_n()?,
            k: p.k.unwrap_or(1.0),
        }),
        other => return Err(Failure::Config(format!("unknown extremal kind `{other}`"))),
    })
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Table { which } => emit(&cli.out, &table_csv(which)?),
        Command::Radii { theorem, params } => emit(&cli.out, &radii_csv(theorem, &params.class())?),
        Command::CoeffBound { variant, params, n } => {
            let lambda = params
                .lambda_big
                .ok_or_else(|| Failure::Config("coeff-bound requires --Lambda".into()))?;
            let b = coefficient_bound(variant, params.k.unwrap_or(1.0), params.kp, lambda, n)?;
            emit(
                &cli.out,
                &format!("variant,n,bound\n{},{n},{}\n", variant.tag(), fmt_sig(b)),
            )
        }
        Command::Extremal {
            kind,
            params,
            n,
            degree,
        } => {
            let mut spec = extremal_spec(&kind, &params, n)?;
            if let Some(d) = degree {
                spec = spec.with_degree(d);
            }
            emit(&cli.out, &write_map(&build_extremal(&spec)?))
        }
        Command::Oracle { map, grid } => {
            let text = fs::read_to_string(&map)
                .map_err(|e| Failure::Config(format!("{}: {e}", map.display())))?;
            let label = map
                .file_stem()
                .map_or("map".into(), |s| s.to_string_lossy().into_owned());
            let f = parse_map(&text, &label)
                .map_err(|e| Failure::Config(format!("{}: {e}", map.display())))?;
            let summary = oracle_summary(&f, &grid.config(cli.seed, 0))?;
            emit(&cli.out, &summary.to_csv())
        }
        Command::Verify {
            suite,
            theorem,
            params,
            n,
            samples,
        } => {
            let mut opts = VerifyOptions {
                tolerance: cli.tolerance,
                theorem: theorem.map(|t| (t, params.class())),
                ..VerifyOptions::default()
            };
            opts.oracle.seed = cli.seed;
            opts.oracle.samples = samples;
            if suite == Suite::Conjecture {
                opts.conjecture = (
                    params.k.unwrap_or(2.0),
                    params.lambda_big.unwrap_or(2.0),
                    n.unwrap_or(2),
                );
            }
            let checks = run_suite(suite, &opts)?;
            emit(&cli.out, &checks_csv(&checks))?;
            for c in &checks {
                eprintln!("{:<4} {}", c.status.as_str(), c.name);
            }
            let failed = checks.iter().filter(|c| c.status == Status::Fail).count();
            if failed > 0 {
                return Err(Failure::Check(format!(
                    "{failed} of {} checks failed",
                    checks.len()
                )));
            }
            Ok(())
        }
        Command::ConjectureScan {
            params,
            n,
            samples,
            grid,
        } => {
            let lambda = params.lambda_big.unwrap_or(2.0);
            let rep = conjecture_scan(
                params.k.unwrap_or(2.0),
                lambda,
                n,
                &grid.config(cli.seed, samples),
            )?;
            emit(&cli.out, &scan_csv(&rep))?;
            if rep.max_observed > rep.proven_bound + PROVEN_BOUND_SLACK {
                return Err(Failure::Check(format!(
                    "observed {} above the proven bound {}",
                    rep.max_observed, rep.proven_bound
                )));
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(msg)) => {
            eprintln!("harmap: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Config(msg)) => {
            eprintln!("harmap: error: {msg}");
            ExitCode::from(2)
        }
    }
}
