use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use cosprod::{commands, exit, parse_rational, CliError, Format, Outcome, Report};
use cosprod_core::ExactRational;

#[derive(Parser)]
#[command(
    name = "cosprod",
    version,
    about = "Exact coefficients and error-bounded checks of the odd cosine product"
)]
struct Cli {
    /// Working precision in bits.
    #[arg(long, global = true, default_value_t = 128, value_parser = clap::value_parser!(u32).range(8..=1_000_000))]
    precision: u32,

    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,

    /// Write the output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Recurrence coefficients, tangent coefficients and odd power sums.
    Coeffs {
        #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u64).range(1..))]
        m_max: u64,
    },
    /// Truncated odd power sums against their closed forms.
    Lambda {
        #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u64).range(1..))]
        m_max: u64,
        #[arg(long, default_value_t = 100_000, value_parser = clap::value_parser!(u64).range(1..))]
        num_terms: u64,
    },
    /// Partial products at N = 1, 10, 100, … against cos(π/2n).
    Product {
        /// n as an integer or p/q.
        #[arg(long, value_parser = parse_rational)]
        n: ExactRational,
        #[arg(long, default_value_t = 100_000, value_parser = clap::value_parser!(u64).range(1..))]
        num_factors: u64,
    },
    /// Product, coefficient series and cosine, checked against each other.
    Verify {
        #[arg(long, value_parser = parse_rational)]
        n: ExactRational,
        #[arg(long, default_value_t = 100_000, value_parser = clap::value_parser!(u64).range(1..))]
        num_factors: u64,
        #[arg(long, default_value_t = 30, value_parser = clap::value_parser!(u64).range(1..))]
        order: u64,
    },
    /// The double series for −ln S summed by rows and by columns.
    Rearrange {
        #[arg(long, value_parser = parse_rational)]
        n: ExactRational,
        #[arg(long, default_value_t = 10_000, value_parser = clap::value_parser!(u64).range(1..))]
        rows: u64,
        #[arg(long, default_value_t = 30, value_parser = clap::value_parser!(u64).range(1..))]
        order: u64,
    },
}

fn run(cli: &Cli) -> Result<Report, CliError> {
    let p = cli.precision;
    match &cli.command {
        Command::Coeffs { m_max } => commands::coeffs(*m_max as usize, p),
        Command::Lambda { m_max, num_terms } => commands::lambda(*m_max as usize, *num_terms, p),
        Command::Product { n, num_factors } => commands::product(n, *num_factors, p),
        Command::Verify {
            n,
            num_factors,
            order,
        } => commands::verify(n, *num_factors, *order as usize, p),
        Command::Rearrange { n, rows, order } => commands::rearrange(n, *rows, *order as usize, p),
    }
}

fn emit(text: &str, out: Option<&PathBuf>) -> io::Result<()> {
    match out {
        Some(path) => fs::write(path, text),
        None => io::stdout().lock().write_all(text.as_bytes()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let report = match run(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("cosprod: {e}");
            let code = match e {
                CliError::Usage(_) => exit::USAGE,
                CliError::Domain(_) => exit::DOMAIN,
            };
            return ExitCode::from(code as u8);
        }
    };
    if let Err(e) = emit(&report.record.render(cli.format), cli.out.as_ref()) {
        eprintln!("cosprod: cannot write output: {e}");
        return ExitCode::from(exit::USAGE as u8);
    }
    match &report.outcome {
        Outcome::Success => {}
        Outcome::Fail => eprintln!("cosprod: verification FAILED"),
        Outcome::Domain(msg) => eprintln!("cosprod: domain error: {msg}"),
    }
    ExitCode::from(report.exit_code() as u8)
}
