use std::io::Write;
use std::path::PathBuf;
use std::process;

use clap::{Parser, Subcommand};
use vroots_cli::commands;
use vroots_cli::{CliError, CliResult, Format};

/// Exact virtual roots of monic polynomials over the rationals.
#[derive(Parser, Debug)]
#[command(name = "vroots", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format; text by default, csv for sweep.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Decimal digits: enclosures are narrower than 10^-precision.
    #[arg(long, global = true, env = "VROOTS_PRECISION", default_value_t = 9)]
    precision: u32,

    /// Write to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Seed for the randomized parts of `check`.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// The r-th virtual roots ρ_{d,1} <= ... <= ρ_{d,d}.
    Roots {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// One Thom virtual root. SIGMA is σ_1..σ_{d-1} (σ_0 = + is implied)
    /// or the full code.
    Thom {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(allow_hyphen_values = true)]
        sigma: String,
    },
    /// All Thom virtual roots with the number of distinct values.
    Table {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// r-th virtual roots of P(x, ·) for x sampled in [X_LO, X_HI].
    Sweep {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(allow_hyphen_values = true)]
        x_lo: String,
        #[arg(allow_hyphen_values = true)]
        x_hi: String,
        steps: usize,
        /// Output file; same as --out.
        file: Option<PathBuf>,
    },
    /// The modulus ω(M, ε) for degree D.
    Modulus {
        m: String,
        eps: String,
        d: usize,
    },
    /// Run the invariant suite on one polynomial.
    Check {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
}

fn run(cli: Cli) -> CliResult<bool> {
    let fmt = cli.format.unwrap_or(Format::Text);
    let prec = cli.precision;
    let mut out = cli.out;
    let (body, ok) = match cli.command {
        Command::Roots { expr } => (commands::roots(&expr, fmt, prec)?, true),
        Command::Thom { expr, sigma } => (commands::thom(&expr, &sigma, fmt, prec)?, true),
        Command::Table { expr } => (commands::table(&expr, fmt, prec)?, true),
        Command::Sweep {
            expr,
            x_lo,
            x_hi,
            steps,
            file,
        } => {
            out = file.or(out);
            let fmt = cli.format.unwrap_or(Format::Csv);
            (commands::sweep(&expr, &x_lo, &x_hi, steps, fmt, prec)?, true)
        }
        Command::Modulus { m, eps, d } => (commands::modulus(&m, &eps, d, fmt, prec)?, true),
        Command::Check { expr } => commands::check(&expr, cli.seed, fmt)?,
    };
    match out {
        Some(path) => std::fs::write(path, body)?,
        None => std::io::stdout().lock().write_all(body.as_bytes())?,
    }
    Ok(ok)
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => {}
        Ok(false) => process::exit(CliError::Invariant(String::new()).exit_code()),
        Err(e) => {
            eprintln!("error: {e}");
            process::exit(e.exit_code());
        }
    }
}
