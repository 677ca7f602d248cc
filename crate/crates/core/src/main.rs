use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use nhr::cli::{self, Command, Settings};
use nhr::io::InputFormat;
use nhr::C64;

#[derive(Parser)]
#[command(name = "nhr", version, about = "Degeneracy, response and perturbation analysis of non-Hermitian Hamiltonians")]
struct Args {
    /// Matrix input format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Json)]
    format: Format,
    /// Relative tolerance for degeneracy decisions (default 1e-9·N).
    #[arg(long, global = true, env = "NHR_TOL")]
    tol: Option<f64>,
    #[command(subcommand)]
    command: Sub,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    CsvReim,
}

fn complex(s: &str) -> Result<C64, String> {
    cli::parse_complex(s)
}

#[derive(Subcommand)]
enum Sub {
    /// Classify every eigenvalue (or the one at --omega) and print a JSON report.
    Analyze {
        matrix: PathBuf,
        #[arg(long, value_parser = complex, allow_hyphen_values = true)]
        omega: Option<C64>,
    },
    /// Response power on a real energy grid, as CSV.
    Greens {
        matrix: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        e_min: f64,
        #[arg(long, allow_hyphen_values = true)]
        e_max: f64,
        #[arg(long)]
        steps: usize,
        #[arg(long, default_value_t = 0.0)]
        loss: f64,
    },
    /// Characteristic coefficients and modes at a reference energy, as JSON.
    Modes {
        matrix: PathBuf,
        #[arg(long, value_parser = complex, allow_hyphen_values = true, default_value = "0")]
        omega: C64,
    },
    /// First-order splitting of the eigenvalue at --omega under H0 + epsilon·H'.
    Perturb {
        h0: PathBuf,
        h_prime: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        epsilon: f64,
        #[arg(long, value_parser = complex, allow_hyphen_values = true)]
        omega: C64,
    },
    /// |η^(n,m)|² at --omega.
    Strength {
        matrix: PathBuf,
        #[arg(long, value_parser = complex, allow_hyphen_values = true)]
        omega: C64,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
    },
}

fn main() -> ExitCode {
    let args = Args::parse();
    let settings = Settings {
        format: match args.format {
            Format::Json => InputFormat::Json,
            Format::CsvReim => InputFormat::CsvReim,
        },
        tol: args.tol,
    };
    let command = match args.command {
        Sub::Analyze { matrix, omega } => Command::Analyze { matrix, omega },
        Sub::Greens { matrix, e_min, e_max, steps, loss } => Command::Greens { matrix, e_min, e_max, steps, loss },
        Sub::Modes { matrix, omega } => Command::Modes { matrix, omega },
        Sub::Perturb { h0, h_prime, epsilon, omega } => Command::Perturb { h0, h_prime, epsilon, omega },
        Sub::Strength { matrix, omega, n, m } => Command::Strength { matrix, omega, n, m },
    };
    let out = cli::run(&command, &settings);
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    ExitCode::from(out.code as u8)
}
