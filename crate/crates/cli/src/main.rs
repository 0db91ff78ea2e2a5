use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};
use serde_json::Value;

use tjurina_core::analysis::{analyze, AnalyzeOptions};
use tjurina_core::catalog::{catalog_get, catalog_list, verify_entry};
use tjurina_core::enumeration::enumerate_weak_types;
use tjurina_core::format::parse_arrangement;
use tjurina_core::geometry::Arrangement;
use tjurina_core::surfaces::surface_report;

mod render;

#[derive(Parser)]
#[command(
    name = "tjurina",
    version,
    about = "Exact invariants of line and conic arrangements"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Singular points, Tjurina numbers, freeness and bounds for an arrangement file.
    Analyze {
        path: PathBuf,
        /// Skip the Jacobian computations (profile and bounds only).
        #[arg(long)]
        skip_oracle: bool,
        #[arg(long)]
        json: bool,
        /// Highest degree tried before declaring the Hilbert function unstable.
        #[arg(long, value_name = "N")]
        max_degree_cap: Option<u32>,
    },
    /// Weak combinatorial types with d lines, k conics and maximal multiplicity m.
    Enumerate {
        #[arg(long)]
        d: u64,
        #[arg(long, default_value_t = 0)]
        k: u64,
        #[arg(long)]
        m: u32,
        /// Impose the constraints that hold for free arrangements.
        #[arg(long)]
        free: bool,
        /// Keep only types with these Tjurina numbers (comma separated).
        #[arg(long, value_delimiter = ',')]
        tau: Vec<i64>,
        #[arg(long)]
        json: bool,
    },
    /// Named arrangements with expected invariants.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Suspension f + w^q of an arrangement to a surface in P^3.
    Surface {
        path: PathBuf,
        /// Also compute mdr of the surface and its du Plessis-Wall window.
        #[arg(long)]
        mdr: bool,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    List,
    Show {
        name: String,
        #[arg(long)]
        json: bool,
    },
    /// Recompute an entry (or all of them) and compare with its expected data.
    Verify {
        name: Option<String>,
        #[arg(long)]
        all: bool,
        #[arg(long)]
        json: bool,
    },
    /// Print an entry in arrangement file format.
    Export {
        name: String,
    },
}

fn load(path: &Path) -> Result<Arrangement> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_arrangement(&text).with_context(|| format!("parsing {}", path.display()))
}

/// Writes to stdout; a closed pipe ends the process quietly.
fn emit(text: &str) -> Result<()> {
    let mut out = std::io::stdout().lock();
    match out.write_all(text.as_bytes()).and_then(|()| out.flush()) {
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => std::process::exit(0),
        r => Ok(r?),
    }
}

fn print_json(v: &impl serde::Serialize) -> Result<()> {
    // serde_json maps are ordered by key, so the round trip through Value sorts keys
    let value: Value = serde_json::to_value(v)?;
    emit(&format!("{}\n", serde_json::to_string_pretty(&value)?))
}

fn configure_threads() -> Result<()> {
    if let Ok(raw) = std::env::var("TJURINA_THREADS") {
        let n: usize = raw
            .parse()
            .with_context(|| format!("TJURINA_THREADS must be a positive integer, got `{raw}`"))?;
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .context("configuring the thread pool")?;
    }
    Ok(())
}

/// Ok(true) iff every applicable check passed.
fn run(cli: Cli) -> Result<bool> {
    configure_threads()?;
    match cli.command {
        Command::Analyze {
            path,
            skip_oracle,
            json,
            max_degree_cap,
        } => {
            let arr = load(&path)?;
            let opts = AnalyzeOptions {
                skip_oracle,
                degree_cap: max_degree_cap,
            };
            let report = analyze(&arr, &opts)?;
            if json {
                print_json(&report)?;
            } else {
                emit(&render::analysis(&report))?;
            }
            Ok(report.passed())
        }
        Command::Enumerate {
            d,
            k,
            m,
            free,
            tau,
            json,
        } => {
            let mut types = enumerate_weak_types(d, k, m, free);
            if !tau.is_empty() {
                types.retain(|w| tau.contains(&w.tau));
            }
            if json {
                print_json(&types)?;
            } else {
                emit(&render::weak_types(&types, m))?;
            }
            Ok(true)
        }
        Command::Catalog { action } => match action {
            CatalogAction::List => {
                for name in catalog_list() {
                    let e = catalog_get(name)?;
                    emit(&format!(
                        "{name:<12} {:<14} {}\n",
                        format!("{:?}", e.tier),
                        e.declared_profile
                    ))?;
                }
                Ok(true)
            }
            CatalogAction::Show { name, json } => {
                let e = catalog_get(&name)?;
                if json {
                    print_json(&render::EntryView::from(&e))?;
                } else {
                    emit(&render::entry(&e))?;
                }
                Ok(true)
            }
            CatalogAction::Verify { name, all, json } => {
                let names: Vec<String> = match (name, all) {
                    (Some(n), false) => vec![n],
                    (None, true) => catalog_list().iter().map(|s| s.to_string()).collect(),
                    _ => anyhow::bail!("give either an entry name or --all"),
                };
                let mut ok = true;
                let mut reports = Vec::new();
                for n in &names {
                    let r = verify_entry(n)?;
                    ok &= r.passed();
                    if !json {
                        emit(&render::entry_report(&r))?;
                    }
                    reports.push(r);
                }
                if json {
                    if reports.len() == 1 {
                        print_json(&reports[0])?;
                    } else {
                        print_json(&reports)?;
                    }
                }
                Ok(ok)
            }
            CatalogAction::Export { name } => {
                let e = catalog_get(&name)?;
                let file = e.export().with_context(|| {
                    format!("`{name}` is combinatorial only and has no coordinates")
                })?;
                emit(&format!("{}\n", file.to_json()))?;
                Ok(true)
            }
        },
        Command::Surface { path, mdr, json } => {
            let arr = load(&path)?;
            let report = surface_report(&arr, mdr)?;
            if json {
                print_json(&report)?;
            } else {
                emit(&render::surface(&report))?;
            }
            Ok(report.passed())
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
