//! `grcat`: validate category instances, compute Gabriel-Roiter measures,
//! run the checker suites and generate instances.
//!
//! Exit codes: 0 on success, 1 on a domain failure (violations, failed
//! checks, guards), 2 on IO, parse or usage errors. Diagnostics go to
//! stderr; stdout carries only the payload.

mod render;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use grcat_core::generator::{generate_an_with_guard, Fixture, AN_GUARD, WINDOW_GUARD};
use grcat_core::theorems::{brauer_thrall_report, run_suite};
use grcat_core::{gr_table, parse_spec, render_spec, validate_spec, CategorySpec, IndecId};

#[derive(Debug, Parser)]
#[command(
    name = "grcat",
    version,
    about = "Gabriel-Roiter measures on finite length-category instances"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Write the payload to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Extra diagnostics on stderr.
    #[arg(long, global = true)]
    verbose: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check a spec file against the length-function axioms.
    Validate { path: PathBuf },
    /// Print the measure table and the Gabriel-Roiter chain.
    Measure {
        path: PathBuf,
        /// Print only this object's measure.
        #[arg(long)]
        object: Option<String>,
    },
    /// Run checker suites.
    Check {
        path: PathBuf,
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
    },
    /// Brauer-Thrall quantities and block partition.
    Report { path: PathBuf },
    /// Generate a spec file.
    #[command(subcommand)]
    Generate(Generate),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    GrAxioms,
    MainProperty,
    ExtBound,
    SmallLemmas,
    All,
}

impl Suite {
    fn name(self) -> &'static str {
        match self {
            Suite::GrAxioms => "gr-axioms",
            Suite::MainProperty => "main-property",
            Suite::ExtBound => "ext-bound",
            Suite::SmallLemmas => "small-lemmas",
            Suite::All => "all",
        }
    }
}

#[derive(Debug, Subcommand)]
enum Generate {
    /// Module category of the linearly oriented A_n quiver over GF(2).
    An(AnArgs),
    /// A bundled derived-category fixture.
    Fixture(FixtureArgs),
}

#[derive(Debug, Args)]
struct AnArgs {
    #[arg(long)]
    n: usize,
}

#[derive(Debug, Args)]
struct FixtureArgs {
    /// `final-example` or `db-window`.
    #[arg(long)]
    name: String,
    /// Number of periods for `db-window`.
    #[arg(long)]
    w: Option<usize>,
}

/// A failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn io(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }

    fn domain(message: impl Into<String>) -> Self {
        Failure {
            code: 1,
            message: message.into(),
        }
    }
}

/// Size guards, overridable through `GRCAT_SIZE_GUARD="an=7,window=100"`.
struct Guards {
    an: usize,
    window: usize,
}

impl Guards {
    fn from_env() -> Result<Guards, Failure> {
        let mut g = Guards {
            an: AN_GUARD,
            window: WINDOW_GUARD,
        };
        let Ok(raw) = std::env::var("GRCAT_SIZE_GUARD") else {
            return Ok(g);
        };
        for part in raw.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| Failure::io(format!("GRCAT_SIZE_GUARD: expected key=value, got `{part}`")))?;
            let value: usize = value
                .trim()
                .parse()
                .map_err(|_| Failure::io(format!("GRCAT_SIZE_GUARD: `{value}` is not a number")))?;
            match key.trim() {
                "an" => g.an = value,
                "window" => g.window = value,
                other => return Err(Failure::io(format!("GRCAT_SIZE_GUARD: unknown key `{other}`"))),
            }
        }
        Ok(g)
    }
}

struct Outcome {
    payload: String,
    ok: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(outcome) => {
            if let Err(f) = emit(&cli, &outcome.payload) {
                eprintln!("error: {}", f.message);
                return ExitCode::from(f.code);
            }
            if outcome.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn emit(cli: &Cli, payload: &str) -> Result<(), Failure> {
    let generating = matches!(cli.command, Command::Generate(_));
    match &cli.out {
        Some(path) if !generating => {
            fs::write(path, payload).map_err(|e| Failure::io(format!("{}: {e}", path.display())))
        }
        _ => {
            print!("{payload}");
            Ok(())
        }
    }
}

fn load(path: &Path, verbose: bool) -> Result<CategorySpec, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::io(format!("{}: {e}", path.display())))?;
    let spec = parse_spec(&text).map_err(|e| Failure::io(format!("{}: {e}", path.display())))?;
    if verbose {
        eprintln!(
            "loaded `{}`: {} indecomposables, {} inflations, {} conflations",
            spec.name(),
            spec.len(),
            spec.inflations().len(),
            spec.conflations().len()
        );
    }
    Ok(spec)
}

fn json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn run(cli: &Cli) -> Result<Outcome, Failure> {
    let format = cli.format;
    match &cli.command {
        Command::Validate { path } => {
            let spec = load(path, cli.verbose)?;
            let report = validate_spec(&spec);
            let payload = match format {
                Format::Json => json(&report),
                Format::Table => render::validation(&spec, &report),
            };
            Ok(Outcome {
                payload,
                ok: report.ok,
            })
        }
        Command::Measure { path, object } => {
            let spec = load(path, cli.verbose)?;
            let table = gr_table(&spec).map_err(|e| Failure::domain(e.to_string()))?;
            let payload = match object {
                Some(id) => {
                    let chain = IndecId::new(id.as_str())
                        .ok()
                        .and_then(|id| table.measure(&id).cloned())
                        .ok_or_else(|| Failure::domain(format!("unknown object `{id}`")))?;
                    match format {
                        Format::Json => json(&serde_json::json!({ "object": id, "measure": chain })),
                        Format::Table => format!("{chain}\n"),
                    }
                }
                None => match format {
                    Format::Json => json(&render::measure_json(&spec, &table)),
                    Format::Table => render::measure_table(&spec, &table),
                },
            };
            Ok(Outcome { payload, ok: true })
        }
        Command::Check { path, suite } => {
            let spec = load(path, cli.verbose)?;
            let reports = run_suite(&spec, suite.name()).expect("suite names come from the enum");
            let ok = reports.iter().all(|r| r.passed());
            if cli.verbose {
                for r in &reports {
                    eprintln!(
                        "{}: {} pass, {} fail, {} skipped",
                        r.suite, r.summary.pass, r.summary.fail, r.summary.skipped
                    );
                }
            }
            let payload = match format {
                Format::Json => json(&reports),
                Format::Table => render::reports(&reports),
            };
            Ok(Outcome { payload, ok })
        }
        Command::Report { path } => {
            let spec = load(path, cli.verbose)?;
            let report = brauer_thrall_report(&spec).map_err(|e| Failure::domain(e.to_string()))?;
            let payload = match format {
                Format::Json => json(&report),
                Format::Table => render::brauer_thrall(&report),
            };
            Ok(Outcome {
                payload,
                ok: report.checks.passed(),
            })
        }
        Command::Generate(kind) => {
            let guards = Guards::from_env()?;
            let spec = match kind {
                Generate::An(args) => generate_an_with_guard(args.n, guards.an),
                Generate::Fixture(args) => {
                    Fixture::from_name(&args.name, args.w).and_then(|f| f.build_with_guard(guards.window))
                }
            }
            .map_err(|e| Failure::domain(e.to_string()))?;
            let text = render_spec(&spec);
            let payload = match &cli.out {
                Some(path) => {
                    fs::write(path, &text).map_err(|e| Failure::io(format!("{}: {e}", path.display())))?;
                    let summary = render::generated(&spec, path);
                    match format {
                        Format::Json => json(&summary),
                        Format::Table => format!(
                            "wrote `{}` to {}: {} indecomposables, {} inflations, {} conflations\n",
                            summary.name,
                            path.display(),
                            summary.indecomposables,
                            summary.inflations,
                            summary.conflations
                        ),
                    }
                }
                None => text,
            };
            Ok(Outcome { payload, ok: true })
        }
    }
}
