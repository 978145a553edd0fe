use anyhow::{Context, Result};
use casimir_core::checks::{self, CalculusOptions, Kappa, Suite};
use casimir_core::projection::cone::QuadratureSpec;
use casimir_core::projection::poincare::{genus1_poincare, PoincareArgs};
use casimir_core::projection::sturm::{parse_datum_file, sturm_coefficient};
use casimir_core::report::Report;
use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "casimir", version, about = "Casimir calculus verification and holomorphic projection numerics")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Algebra,
    Hc,
    Calculus,
    Spectral,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite and print its report.
    Verify {
        suite: SuiteArg,
        /// Restrict the calculus suite to one genus.
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
        genus: Option<u8>,
        /// Weight for the calculus suite: an integer or `sym`.
        #[arg(long, default_value = "sym", value_parser = parse_kappa)]
        kappa: Kappa,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Holomorphic Fourier coefficients from a Fourier-datum file.
    Project {
        #[arg(long)]
        input: std::path::PathBuf,
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
    },
    /// Truncated genus-one Poincaré series.
    Poincare {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=1))]
        genus: u8,
        #[arg(long)]
        kappa: i64,
        #[arg(long)]
        tau: i64,
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
        z: Complex64,
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
        s: Complex64,
        #[arg(long)]
        trunc: usize,
    },
    /// Run every suite.
    Report {
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

fn parse_kappa(s: &str) -> Result<Kappa, String> {
    if s == "sym" {
        return Ok(Kappa::Symbolic);
    }
    s.parse::<i64>().map(Kappa::Value).map_err(|_| format!("expected an integer or `sym`, got `{s}`"))
}

fn parse_complex(s: &str) -> Result<Complex64, String> {
    let (re, im) = s.split_once(',').ok_or_else(|| format!("expected RE,IM, got `{s}`"))?;
    let p = |t: &str| t.trim().parse::<f64>().map_err(|e| format!("`{t}`: {e}"));
    Ok(Complex64::new(p(re)?, p(im)?))
}

/// Errors in the inputs themselves, as opposed to failed checks.
#[derive(Debug, thiserror::Error)]
#[error("{0}")]
struct InputError(String);

fn emit(report: &Report, format: Format) -> ExitCode {
    match format {
        Format::Json => println!("{}", report.to_json()),
        Format::Text => print!("{}", report.to_text()),
    }
    if report.all_pass() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Verify { suite, genus, kappa, format } => {
            let opts = CalculusOptions { genus: genus.map(usize::from), kappa };
            let suites: Vec<Suite> = match suite {
                SuiteArg::Algebra => vec![Suite::Algebra],
                SuiteArg::Hc => vec![Suite::Hc],
                SuiteArg::Calculus => vec![Suite::Calculus],
                SuiteArg::Spectral => vec![Suite::Spectral],
                SuiteArg::All => Suite::ALL.to_vec(),
            };
            Ok(emit(&Report::new(checks::run(&suites, opts)), format))
        }
        Command::Report { format } => Ok(emit(&Report::new(checks::run(&Suite::ALL, CalculusOptions::default())), format)),
        Command::Project { input, tol } => {
            if !(tol > 0.0) {
                return Err(InputError(format!("tolerance must be positive, got {tol}")).into());
            }
            let text = std::fs::read_to_string(&input)
                .map_err(|e| InputError(format!("cannot read {}: {e}", input.display())))?;
            let set = parse_datum_file(&text).map_err(|e| InputError(e.to_string()))?;
            let spec = QuadratureSpec::with_tol(tol);
            let mut out = Vec::with_capacity(set.data.len());
            for d in &set.data {
                let r = sturm_coefficient(set.genus, set.kappa, d, &spec).context("projection failed")?;
                out.push(r.to_json_value());
            }
            println!("{}", serde_json::to_string_pretty(&out)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Poincare { genus: _, kappa, tau, z, s, trunc } => {
            if z.im <= 0.0 {
                return Err(InputError(format!("z = {z} is not in the upper half-plane")).into());
            }
            let args = PoincareArgs { z, s, kappa, tau, n: trunc };
            let v = genus1_poincare(&args, None).map_err(|e| InputError(e.to_string()))?;
            let json = serde_json::json!({
                "value": [v.value.re, v.value.im],
                "tail": v.tail,
                "terms": v.terms,
            });
            println!("{}", serde_json::to_string_pretty(&json)?);
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.downcast_ref::<InputError>().is_some() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}
