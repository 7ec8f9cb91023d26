//! `cybe`: batch verification of the sl(4) r-matrix catalog.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use cybe::catalog::{load_catalog, load_catalog_file, parse_expression, Catalog, Value};
use cybe::frobenius::{form_from_functional, parabolic_by_name, pfaffian, rmatrix_from_functional, Functional};
use cybe::lie::{sl4, LieAlgebra};
use cybe::verify::{check_entry, run_all, Report, RunOptions};
use cybe::wedge::{cybe_residual, schouten_mixed, BiVector};
use cybe::{Error, Result};

#[derive(Parser)]
#[command(name = "cybe", version, about = "Exact verification of classical r-matrices of sl(4)")]
struct Cli {
    /// Catalog file; defaults to $CYBE_CATALOG, then the built-in catalog.
    #[arg(long, global = true, env = "CYBE_CATALOG")]
    catalog: Option<PathBuf>,

    /// Substitute a value for a parameter, e.g. `a=0` or `lam=1/2`.
    #[arg(long = "params", global = true, value_name = "K=V")]
    params: Vec<String>,

    /// Worker threads; the report does not depend on this.
    #[arg(long, global = true, value_name = "N")]
    jobs: Option<usize>,

    /// Treat failing non-required checks as failures.
    #[arg(long, global = true)]
    strict: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Run every check; exit 1 if a required check fails.
    Verify {
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Check CYBE and reality of one catalog r-matrix.
    Check {
        entry: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Invert the form of a functional on a parabolic subalgebra.
    Derive {
        /// Catalog functional name or an expression such as `e1* + e4* + e5*`.
        functional: String,
        /// One of P1, P2, P3, P23, P(-2,-3), B+.
        parabolic: String,
    },
    /// Print the Schouten bracket of two bivectors.
    Schouten { left: String, right: String },
    /// Emit the full report; the exit code is 0 unless the run aborts.
    Report {
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
}

fn catalog(g: &LieAlgebra, path: Option<&PathBuf>) -> Result<Catalog> {
    match path {
        Some(p) => load_catalog_file(g, p),
        None => load_catalog(g),
    }
}

fn emit(report: &Report, format: Format) {
    match format {
        Format::Json => print!("{}", report.to_json()),
        Format::Text => print!("{}", report.to_text()),
    }
}

fn bivector(g: &LieAlgebra, text: &str) -> Result<BiVector> {
    match parse_expression(g, text)? {
        Value::BiVector(b) => Ok(b),
        Value::Scalar(s) if s.is_zero() => Ok(BiVector::zero(g.id())),
        other => Err(Error::Type(format!("`{text}` is a {}, expected a bivector", other.kind()))),
    }
}

fn functional(g: &LieAlgebra, cat: &Catalog, text: &str) -> Result<Functional> {
    if let Ok(entry) = cat.get(text) {
        if let Some(c) = entry.functional() {
            return Ok(Functional::new(text, c.clone()));
        }
    }
    match parse_expression(g, text)? {
        Value::Dual(c) => Ok(Functional::new(text, c)),
        other => Err(Error::Type(format!("`{text}` is a {}, expected a functional", other.kind()))),
    }
}

fn run(cli: &Cli) -> Result<i32> {
    let g = sl4();
    let opts = RunOptions::default().with_assignments(cli.params.iter().map(String::as_str))?;
    match &cli.command {
        Command::Verify { format } => {
            let report = run_all(g, &catalog(g, cli.catalog.as_ref())?, &opts)?;
            emit(&report, *format);
            Ok(report.exit_code(cli.strict))
        }
        Command::Check { entry, format } => {
            let report = check_entry(g, &catalog(g, cli.catalog.as_ref())?, entry, &opts)?;
            emit(&report, *format);
            Ok(report.exit_code(cli.strict))
        }
        Command::Report { format } => {
            emit(&run_all(g, &catalog(g, cli.catalog.as_ref())?, &opts)?, *format);
            Ok(0)
        }
        Command::Derive { functional: name, parabolic } => {
            let cat = catalog(g, cli.catalog.as_ref())?;
            let f = functional(g, &cat, name)?;
            let p = parabolic_by_name(g, parabolic)?;
            let pf = pfaffian(&form_from_functional(g, &f, &p)?.matrix)?;
            println!("functional {f}");
            println!("subalgebra {p}");
            println!("pfaffian {pf}");
            if pf.is_zero() {
                println!("form is degenerate");
                return Ok(1);
            }
            let derived = rmatrix_from_functional(g, &f, &p)?;
            match derived.rmatrix() {
                Some(r) => {
                    let res = cybe_residual(g, &r)?;
                    println!("r = {r}");
                    println!("cybe {}", if res.is_solution { "pass" } else { "fail" });
                    Ok(i32::from(!res.is_solution))
                }
                None => {
                    println!("r = ({}) / ({})", derived.numerator, derived.denominator);
                    let res = cybe_residual(g, &derived.numerator)?;
                    println!("cybe of numerator {}", if res.is_solution { "pass" } else { "fail" });
                    Ok(i32::from(!res.is_solution))
                }
            }
        }
        Command::Schouten { left, right } => {
            let r = bivector(g, left)?;
            let s = bivector(g, right)?;
            let t = schouten_mixed(g, &r, &s)?;
            if t.is_zero() {
                println!("0");
            } else {
                println!("{t}");
            }
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.jobs {
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build() {
            Ok(pool) => pool.install(|| run(&cli)),
            Err(e) => Err(Error::Internal(e.to_string())),
        },
        None => run(&cli),
    };
    match outcome {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
