//! `symsep`: command-line front end for the symsep-core library.
//!
//! Exit codes: 0 success or true predicate, 1 false predicate or failing
//! verification, 2 usage error, 3 domain error, 4 budget exhausted.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Deserialize;

use symsep_core::collections::{enumerate_maximal, enumerate_maximal_symmetric, WsCollection};
use symsep_core::cyclic::{bar, is_admissible, is_weakly_separated, parse_set};
use symsep_core::error::Error;
use symsep_core::io::{
    collection_from_json, collection_to_json, graph_from_json, graph_to_json, necklace_from_json,
    necklace_to_json, perm_from_json, perm_to_json, tiling_to_json,
};
use symsep_core::plabic::dual_graph;
use symsep_core::positroid::{
    necklace_from_perm, perm_from_necklace, EnumerationBudget, PositroidHandle,
};
use symsep_core::tiling::build_tiling;
use symsep_core::verify::{render_reports, run_suite};

#[derive(Parser)]
#[command(
    name = "symsep",
    about = "Weakly separated collections, positroids, plabic tilings and plabic graphs",
    version
)]
struct Cli {
    /// Enumeration budget (number of subsets scanned); overrides the
    /// config file and the SYMSEP_BUDGET environment variable.
    #[arg(long, global = true)]
    budget: Option<u128>,

    /// Optional TOML config file with `budget` and `long_running` keys.
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    /// Allow long-running checks (the n = 4 verification gate).
    #[arg(long, global = true)]
    long_running: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide weak separation of two sets; prints true/false.
    WsCheck {
        i: String,
        j: String,
        /// Ambient size (always explicit).
        #[arg(long)]
        m: usize,
    },
    /// Print the bar image of a set.
    Bar {
        i: String,
        #[arg(long)]
        m: usize,
    },
    /// Decide admissibility (weak separation from the bar image).
    Admissible {
        i: String,
        #[arg(long)]
        m: usize,
    },
    /// Print the Grassmann necklace of a decorated permutation file.
    Necklace {
        #[arg(long)]
        perm: PathBuf,
    },
    /// Print the decorated permutation of a necklace file.
    Perm {
        #[arg(long)]
        necklace: PathBuf,
    },
    /// Print the positroid members of a decorated permutation file.
    Members {
        #[arg(long)]
        perm: PathBuf,
    },
    /// Complete a collection file to a maximal one.
    Complete {
        #[arg(long)]
        collection: PathBuf,
        /// Complete to a symmetric maximal collection.
        #[arg(long)]
        symmetric: bool,
    },
    /// Enumerate the maximal collections of a positroid.
    Enumerate {
        #[arg(long)]
        perm: PathBuf,
        /// Enumerate symmetric maximal collections only.
        #[arg(long)]
        symmetric: bool,
    },
    /// Build the plabic tiling of a maximal collection and render SVG.
    Tiling {
        #[arg(long)]
        collection: PathBuf,
        #[arg(long)]
        svg: PathBuf,
        /// Also dump the complex as JSON.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Build the dual plabic graph and export DOT (and optionally JSON).
    Dual {
        #[arg(long)]
        collection: PathBuf,
        #[arg(long)]
        dot: PathBuf,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Print the trips and trip permutation of a graph file.
    Trips {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Run a verification suite; exits 1 if any check fails.
    Verify {
        /// One of: purity, symmetric, corollaries, all.
        #[arg(long)]
        suite: String,
        /// Half-ambient n (ambient is 2n).
        #[arg(long, default_value_t = 2)]
        n: usize,
        /// Write the machine-readable report array here.
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

#[derive(Debug, Default, Deserialize)]
struct Config {
    budget: Option<u64>,
    long_running: Option<bool>,
}

fn read_file(path: &Path) -> Result<String, Error> {
    fs::read_to_string(path)
        .map_err(|e| Error::domain(format!("cannot read {}: {e}", path.display())))
}

fn write_file(path: &Path, contents: &str) -> Result<(), Error> {
    fs::write(path, contents)
        .map_err(|e| Error::domain(format!("cannot write {}: {e}", path.display())))
}

fn load_config(path: Option<&Path>) -> Result<Config, Error> {
    match path {
        None => Ok(Config::default()),
        Some(p) => toml::from_str(&read_file(p)?)
            .map_err(|e| Error::domain(format!("bad config {}: {e}", p.display()))),
    }
}

/// Budget precedence: flag, then config file, then SYMSEP_BUDGET, then
/// the library default.
fn resolve_budget(flag: Option<u128>, config: &Config) -> Result<EnumerationBudget, Error> {
    let from_env = match std::env::var("SYMSEP_BUDGET") {
        Ok(text) => Some(
            text.parse::<u128>()
                .map_err(|e| Error::domain(format!("bad SYMSEP_BUDGET: {e}")))?,
        ),
        Err(_) => None,
    };
    let max_subsets = flag
        .or(config.budget.map(u128::from))
        .or(from_env)
        .unwrap_or(EnumerationBudget::default().max_subsets);
    Ok(EnumerationBudget { max_subsets })
}

fn anchored_from_file(path: &Path) -> Result<(PositroidHandle, WsCollection), Error> {
    let c = collection_from_json(&read_file(path)?)?;
    let anchor = c
        .anchor()
        .cloned()
        .ok_or_else(|| Error::domain("collection file must carry an anchor"))?;
    Ok((anchor, c))
}

/// Returns the predicate outcome: `false` maps to exit code 1.
fn run(cli: Cli) -> Result<bool, Error> {
    let config = load_config(cli.config.as_deref())?;
    let budget = resolve_budget(cli.budget, &config)?;
    let long_running = cli.long_running || config.long_running.unwrap_or(false);
    match cli.command {
        Command::WsCheck { i, j, m } => {
            let result = is_weakly_separated(&parse_set(&i, m)?, &parse_set(&j, m)?)?;
            println!("{result}");
            Ok(result)
        }
        Command::Bar { i, m } => {
            println!("{}", bar(&parse_set(&i, m)?)?);
            Ok(true)
        }
        Command::Admissible { i, m } => {
            let result = is_admissible(&parse_set(&i, m)?)?;
            println!("{result}");
            Ok(result)
        }
        Command::Necklace { perm } => {
            let f = perm_from_json(&read_file(&perm)?)?;
            println!("{}", necklace_to_json(&necklace_from_perm(&f)));
            Ok(true)
        }
        Command::Perm { necklace } => {
            let necklace = necklace_from_json(&read_file(&necklace)?)?;
            println!("{}", perm_to_json(&perm_from_necklace(&necklace)?));
            Ok(true)
        }
        Command::Members { perm } => {
            let f = perm_from_json(&read_file(&perm)?)?;
            let anchor = PositroidHandle::new(necklace_from_perm(&f));
            let members = anchor.members(budget)?.to_vec();
            let c = WsCollection::new(anchor.ambient(), anchor.k(), members)?;
            println!("{}", collection_to_json(&c)?);
            Ok(true)
        }
        Command::Complete {
            collection,
            symmetric,
        } => {
            let (_, c) = anchored_from_file(&collection)?;
            let completed = if symmetric {
                c.complete_to_maximal_symmetric(budget)?
            } else {
                c.complete_to_maximal(budget)?
            };
            println!("{}", collection_to_json(&completed)?);
            Ok(true)
        }
        Command::Enumerate { perm, symmetric } => {
            let f = perm_from_json(&read_file(&perm)?)?;
            let anchor = PositroidHandle::new(necklace_from_perm(&f));
            let all = if symmetric {
                enumerate_maximal_symmetric(&anchor, budget)?
            } else {
                enumerate_maximal(&anchor, budget)?
            };
            let blobs: Vec<serde_json::Value> = all
                .iter()
                .map(|c| {
                    Ok(serde_json::from_str(&collection_to_json(c)?)
                        .expect("just serialized"))
                })
                .collect::<Result<_, Error>>()?;
            println!(
                "{}",
                serde_json::to_string_pretty(&blobs).expect("serialization cannot fail")
            );
            Ok(true)
        }
        Command::Tiling {
            collection,
            svg,
            json,
        } => {
            let (_, c) = anchored_from_file(&collection)?;
            let t = build_tiling(&c, budget)?;
            write_file(&svg, &t.render_svg())?;
            if let Some(path) = json {
                write_file(&path, &tiling_to_json(&t))?;
            }
            Ok(true)
        }
        Command::Dual {
            collection,
            dot,
            json,
        } => {
            let (_, c) = anchored_from_file(&collection)?;
            let g = dual_graph(&build_tiling(&c, budget)?)?;
            write_file(&dot, &g.to_dot())?;
            if let Some(path) = json {
                write_file(&path, &graph_to_json(&g)?)?;
            }
            Ok(true)
        }
        Command::Trips { graph } => {
            let g = graph_from_json(&read_file(&graph)?)?;
            for trip in g.trips()? {
                println!("{} -> {} ({} steps)", trip.start, trip.end, trip.steps.len());
            }
            println!("{}", perm_to_json(&g.trip_permutation()?));
            Ok(true)
        }
        Command::Verify { suite, n, json } => {
            let reports = run_suite(&suite, n, long_running)?;
            print!("{}", render_reports(&reports));
            if let Some(path) = json {
                write_file(
                    &path,
                    &serde_json::to_string_pretty(&reports).expect("serialization cannot fail"),
                )?;
            }
            Ok(reports.iter().all(|r| r.pass))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse(); // clap exits with code 2 on usage errors
    match run(cli) {
        Ok(true) => ExitCode::from(0),
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Budget(_) => ExitCode::from(4),
                _ => ExitCode::from(3),
            }
        }
    }
}
