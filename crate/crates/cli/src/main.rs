//! `ebill`: boundary ellipses and elliptic billiards from the command line.
//!
//! Every subcommand reads one JSON document (`-` for stdin) and writes one
//! document (`-` for stdout). Failures print an error document on stderr
//! and exit with 2 for malformed input, 3 for geometric or verification
//! failures and 4 for I/O errors.

mod doc;
mod error;
mod render;
mod simulate;
mod solve;
mod verify;

use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use crate::doc::{parse_any, to_json, ErrorDoc, PolygonInput};
use crate::error::CliError;

#[derive(Parser)]
#[command(
    name = "ebill",
    version,
    about = "Boundary ellipses and elliptic billiards"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Find the ellipse in which a triangle, parallelogram or butterfly is a
    /// closed billiard trajectory.
    Solve(Common),
    /// Run a billiard trajectory.
    Simulate(Common),
    /// Draw a solve result or trajectory as SVG.
    Render(Common),
    /// Recompute the certificates of a solve result or trajectory.
    Verify(Common),
}

#[derive(Args)]
struct Common {
    #[arg(long, default_value = "-")]
    input: PathBuf,
    #[arg(long, default_value = "-")]
    output: PathBuf,
    /// Closure tolerance for orbits and pass threshold for `verify`.
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
    #[arg(long, default_value_t = 1000)]
    max_bounces: usize,
    /// Significant digits of every float written.
    #[arg(long, default_value_t = 17)]
    digits: usize,
}

fn is_stdio(p: &std::path::Path) -> bool {
    p.as_os_str() == "-"
}

fn read_input(path: &std::path::Path) -> Result<String, CliError> {
    let io_err = |source| CliError::Io {
        path: path.display().to_string(),
        source,
    };
    if is_stdio(path) {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(io_err)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(io_err)
    }
}

fn write_output(path: &std::path::Path, text: &str) -> Result<(), CliError> {
    let io_err = |source| CliError::Io {
        path: path.display().to_string(),
        source,
    };
    if is_stdio(path) {
        std::io::stdout().write_all(text.as_bytes()).map_err(io_err)
    } else {
        std::fs::write(path, text).map_err(io_err)
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    let (Command::Solve(c) | Command::Simulate(c) | Command::Render(c) | Command::Verify(c)) =
        &cli.command;
    if !(c.tol > 0.0 && c.tol.is_finite()) {
        return Err(CliError::Parse("--tol must be positive".into()));
    }
    let text = read_input(&c.input)?;
    match &cli.command {
        Command::Solve(c) => {
            let input: PolygonInput = serde_json::from_str(&text)?;
            let result = solve::solve(&input, c.tol, c.max_bounces)?;
            write_output(&c.output, &to_json(&result, c.digits)?)
        }
        Command::Simulate(c) => {
            let t = simulate::simulate(&text, c.tol, c.max_bounces)?;
            write_output(&c.output, &to_json(&t, c.digits)?)
        }
        Command::Render(c) => write_output(&c.output, &render::render(&parse_any(&text)?)?),
        Command::Verify(c) => {
            let report = verify::verify(&parse_any(&text)?, c.tol)?;
            write_output(&c.output, &to_json(&report, c.digits)?)?;
            if report.pass {
                Ok(())
            } else {
                Err(CliError::VerificationFailed {
                    worst: report.worst_residual,
                    tol: report.tol,
                })
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let doc = ErrorDoc {
                doc_type: "error",
                code: e.code(),
                message: e.to_string(),
            };
            let text = serde_json::to_string_pretty(&doc).unwrap_or_else(|_| e.to_string());
            eprintln!("{text}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
