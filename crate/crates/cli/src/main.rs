//! Command-line front end: construct the geometries, run the verification
//! suites against the compiled-in expected values, and export graphs and
//! Veldkamp-line tables in deterministic formats.
//!
//! Exit codes: 0 all checks pass, 1 some check failed, 2 usage error.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};

mod export;
mod report;
mod verify;

use export::{run_export, Format, Selector};
use report::{lockfile_to_json, parse_lockfile, Lockfile};
use verify::{run_verify, GeometryChoice, Suite};

#[derive(Parser)]
#[command(
    name = "gq24",
    version,
    about = "Exact construction and verification of GQ(2,4) and its Veldkamp space"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run verification suites and write a JSON report.
    Verify {
        /// Which suite to run.
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
        /// Which geometry the hyperplane/Veldkamp suites target.
        #[arg(long, value_enum, default_value = "gq24")]
        geometry: GeometryChoice,
        /// Base point for the derived-family and Payne constructions
        /// (taken mod 28 for the bitangent family, mod 40 for W(3)).
        #[arg(long = "seed-point", default_value_t = 0)]
        seed_point: usize,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Check computed baselines against this lockfile.
        #[arg(long)]
        lock: Option<PathBuf>,
        /// Freeze this run's computed baselines into a lockfile.
        #[arg(long = "write-lock")]
        write_lock: Option<PathBuf>,
    },
    /// Export a constructed object.
    Export {
        /// What to export.
        #[arg(value_enum)]
        selector: Selector,
        /// Output format.
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Geometry for the collinearity-graph selector.
        #[arg(long, value_enum, default_value = "gq24")]
        geometry: GeometryChoice,
        /// Write here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn write_output(out: Option<&PathBuf>, content: &str) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, content)
            .with_context(|| format!("writing {}", path.display())),
        None => {
            std::io::stdout()
                .write_all(content.as_bytes())
                .context("writing to stdout")
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Verify {
            suite,
            geometry,
            seed_point,
            out,
            lock,
            write_lock,
        } => {
            let max_seed = match suite {
                Suite::Steiner => 28,
                _ => 40,
            };
            if seed_point >= max_seed {
                anyhow::bail!("--seed-point {seed_point} out of range (< {max_seed} for this suite)");
            }
            let lockfile: Lockfile = match &lock {
                Some(path) => {
                    let text = std::fs::read_to_string(path)
                        .with_context(|| format!("reading lockfile {}", path.display()))?;
                    parse_lockfile(&text).context("parsing lockfile")?
                }
                None => Lockfile::new(),
            };
            let report = run_verify(suite, geometry, seed_point, lockfile);
            write_output(out.as_ref(), &report.to_json())?;
            if let Some(path) = write_lock {
                std::fs::write(&path, lockfile_to_json(&report.computed_values()))
                    .with_context(|| format!("writing lockfile {}", path.display()))?;
            }
            if report.pass {
                Ok(ExitCode::SUCCESS)
            } else {
                for check in report.checks.iter().filter(|c| !c.pass) {
                    eprintln!(
                        "FAIL {}: {} (expected {:?}, got {})",
                        check.check, check.claim, check.expected, check.actual
                    );
                }
                Ok(ExitCode::from(1))
            }
        }
        Command::Export {
            selector,
            format,
            geometry,
            out,
        } => {
            let content = run_export(selector, format, geometry)?;
            write_output(out.as_ref(), &content)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}
