mod commands;
mod record;

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use tuenter_core::{CoreError, SweepConfig};

use commands::Basis;
use record::{Format, OutputRecord};

const EXIT_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;

/// Tuenter polynomials, their falling-factorial coefficients and related checks.
#[derive(Parser, Debug)]
#[command(name = "tuenter", version)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value = "json", global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Coefficients of P_k in the monomial or falling-factorial basis.
    Poly {
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value = "monomial")]
        basis: Basis,
    },
    /// Rows k = 1..=K of the c_{j,k} triangle, from the recurrence.
    Coeffs {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        max_k: u64,
    },
    /// Rows j = 1..=J of the Catalan triangle B_{j,q}.
    Triangle {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        rows: u64,
    },
    /// Sweep every identity; exit 0 when all hold, 1 on the first failure.
    Verify {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        max_k: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        max_n: u64,
        /// Perturb one table entry so the sweep must fail.
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
    /// F_k(j) as a polynomial in j, optionally with the factorization check.
    Fpoly {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        check_conjecture: bool,
    },
    /// Golay-Rudin-Shapiro partial-sum maxima and the c_{2,k} cross-check.
    Grs {
        #[arg(long, value_parser = clap::value_parser!(u64).range(3..))]
        limit: u64,
    },
}

fn run(command: Command) -> Result<(OutputRecord, bool), CoreError> {
    Ok(match command {
        Command::Poly { k, basis } => (commands::poly(k, basis), true),
        Command::Coeffs { max_k } => (commands::coeffs(max_k as usize)?, true),
        Command::Triangle { rows } => (commands::triangle(rows)?, true),
        Command::Verify {
            max_k,
            max_n,
            inject_fault,
        } => {
            let config = SweepConfig {
                max_k: max_k as usize,
                max_n,
                inject_fault,
            };
            let (rec, report) = commands::verify(&config)?;
            (rec, report.passed())
        }
        Command::Fpoly {
            k,
            check_conjecture,
        } => {
            if check_conjecture && k == 0 {
                return Err(CoreError::OutOfRange {
                    what: "k",
                    detail: "--check-conjecture needs k >= 1".into(),
                });
            }
            (commands::fpoly(k, check_conjecture)?, true)
        }
        Command::Grs { limit } => (commands::grs(limit)?, true),
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli.command) {
        Ok((rec, passed)) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(rec.render(cli.format).as_bytes()).is_err() {
                return ExitCode::from(EXIT_FAILED);
            }
            if passed {
                ExitCode::SUCCESS
            } else {
                eprintln!("verification failed");
                ExitCode::from(EXIT_FAILED)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
