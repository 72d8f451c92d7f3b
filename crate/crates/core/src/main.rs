use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use finring::classify::{self, uniquely_weakly_flag, ElementProfile, Interpretation, RingProfile, UniquenessReport};
use finring::harness::{self, Catalog};
use finring::hunt::{self, HuntCaps, Target};
use finring::report::{render, Format};
use finring::ring::TableOp;
use finring::spec::parse_spec;
use finring::Limits;

#[derive(Parser)]
#[command(name = "finring", version, about = "Finite ring classification and verification")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum Op {
    Add,
    Mul,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a ring given by a spec such as `T2(Z4)`.
    Classify { spec: String },
    /// Show every decomposition of one element (id or literal).
    Decompose { spec: String, element: String },
    /// Run the check suite over a catalog.
    Verify {
        /// Run only these checks (repeatable).
        #[arg(long = "check")]
        checks: Vec<String>,
        #[arg(long)]
        catalog: Option<PathBuf>,
        /// Largest ring order built.
        #[arg(long)]
        budget: Option<usize>,
    },
    /// Search for counterexamples to an open conjecture or problem.
    Hunt {
        #[arg(long)]
        target: String,
        #[arg(long, default_value_t = 100)]
        max_zn: u32,
        #[arg(long)]
        catalog: Option<PathBuf>,
        #[arg(long)]
        budget: Option<usize>,
        /// Skip the T2 and K_s families over catalog rings.
        #[arg(long)]
        no_families: bool,
    },
    /// Catalog inspection.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Print the addition or multiplication table as CSV.
    DumpTables {
        spec: String,
        #[arg(long, value_enum, default_value_t = Op::Mul)]
        op: Op,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    /// List catalog entries and registered checks.
    List {
        #[arg(long)]
        catalog: Option<PathBuf>,
    },
}

#[derive(Serialize)]
struct ClassifyOutput {
    profile: RingProfile,
    uniquely_weakly_nil_clean: [UniquenessReport; 2],
}

#[derive(Serialize)]
struct CatalogEntry {
    spec: String,
    order_bound: u128,
    gated: bool,
}

#[derive(Serialize)]
struct CheckEntry {
    id: &'static str,
    statement: &'static str,
    applicability: &'static str,
}

#[derive(Serialize)]
struct CatalogListing {
    budget: usize,
    pair_budget: usize,
    oracle_cap: usize,
    entries: Vec<CatalogEntry>,
    checks: Vec<CheckEntry>,
}

struct Failure {
    code: u8,
    message: String,
}

fn usage(message: impl ToString) -> Failure {
    Failure {
        code: 2,
        message: message.to_string(),
    }
}

fn load_catalog(path: Option<&PathBuf>, budget: Option<usize>) -> Result<Catalog, Failure> {
    let catalog = match path {
        None => Catalog::default_catalog(),
        Some(p) => {
            let text = std::fs::read_to_string(p).map_err(|e| usage(format!("{}: {e}", p.display())))?;
            Catalog::parse(&text).map_err(|e| usage(format!("{}: {e}", p.display())))?
        }
    };
    Ok(match budget {
        Some(b) => catalog.with_budget(b),
        None => catalog,
    })
}

fn run(cli: Cli) -> Result<(String, u8), Failure> {
    let format = match cli.format {
        OutputFormat::Json => Format::Json,
        OutputFormat::Text => Format::Text,
    };
    let limits = Limits::default();
    match cli.command {
        Command::Classify { spec } => {
            let ring = parse_spec(&spec).and_then(|s| s.build(&limits)).map_err(usage)?;
            let out = ClassifyOutput {
                profile: classify::classify_ring(&ring),
                uniquely_weakly_nil_clean: [
                    uniquely_weakly_flag(&ring, Interpretation::RingLevel),
                    uniquely_weakly_flag(&ring, Interpretation::ElementLevel),
                ],
            };
            Ok((render(&out, format), 0))
        }
        Command::Decompose { spec, element } => {
            let ring = parse_spec(&spec).and_then(|s| s.build(&limits)).map_err(usage)?;
            let x = ring.parse_element(&element).map_err(usage)?;
            let profile: ElementProfile = classify::classify_element(&ring, x);
            Ok((render(&profile, format), 0))
        }
        Command::Verify {
            checks,
            catalog,
            budget,
        } => {
            let catalog = load_catalog(catalog.as_ref(), budget)?;
            let ids: Vec<&str> = checks.iter().map(String::as_str).collect();
            let (entries, ctx) = harness::prepare(&catalog);
            let report = harness::suite_from(entries, &ctx, &ids).map_err(usage)?;
            Ok((render(&report, format), report.exit_code as u8))
        }
        Command::Hunt {
            target,
            max_zn,
            catalog,
            budget,
            no_families,
        } => {
            let target: Target = target.parse().map_err(usage)?;
            let catalog = load_catalog(catalog.as_ref(), budget)?;
            let caps = HuntCaps {
                max_zn,
                families: !no_families,
            };
            let report = hunt::hunt(target, &catalog, &caps);
            Ok((render(&report, format), report.exit_code() as u8))
        }
        Command::Catalog {
            action: CatalogAction::List { catalog },
        } => {
            let catalog = load_catalog(catalog.as_ref(), None)?;
            let listing = CatalogListing {
                budget: catalog.budget,
                pair_budget: catalog.pair_budget,
                oracle_cap: catalog.oracle_cap,
                entries: catalog
                    .specs
                    .iter()
                    .map(|s| CatalogEntry {
                        spec: s.to_string(),
                        order_bound: s.order_bound(),
                        gated: s.order_bound() > catalog.budget as u128,
                    })
                    .collect(),
                checks: harness::registry()
                    .iter()
                    .map(|c| CheckEntry {
                        id: c.id,
                        statement: c.statement,
                        applicability: c.applicability,
                    })
                    .collect(),
            };
            Ok((render(&listing, format), 0))
        }
        Command::DumpTables { spec, op } => {
            let ring = parse_spec(&spec).and_then(|s| s.build(&limits)).map_err(usage)?;
            let op = match op {
                Op::Add => TableOp::Add,
                Op::Mul => TableOp::Mul,
            };
            Ok((ring.table_csv(op), 0))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((out, code)) => {
            print!("{out}");
            if !out.ends_with('\n') {
                println!();
            }
            ExitCode::from(code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
