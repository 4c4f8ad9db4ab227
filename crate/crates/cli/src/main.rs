//! `pqsurf` — analyze, search, and verify quotient surfaces built from
//! pairs of cyclic covers of the line.
//!
//! Subcommands:
//!
//! - `analyze --m M --a t,u,... --b x,y,z` — validate one quadruple and
//!   print its invariants (`--trace` adds the singularity table,
//!   component ledger, and blow-down log);
//! - `search` — enumerate every valid quadruple within bounds and emit a
//!   sorted catalog;
//! - `verify` — recompute the embedded reference tables and compare.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 usage error or
//! rejected input.

mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use pqsurf::reference::{ReferenceRow, TABLE_ONE, TABLE_TWO};
use pqsurf::{analyze, Quadruple, SearchBounds, SurfaceModel};
use render::{render_one, render_records, render_trace, summary, Format};

#[derive(Parser)]
#[command(
    name = "pqsurf",
    version,
    about = "Catalog engine for quotient surfaces built from pairs of cyclic covers of the line"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate one quadruple (m, a, b) and print its invariants.
    Analyze(AnalyzeArgs),
    /// Enumerate all valid quadruples within bounds into a catalog.
    Search(SearchArgs),
    /// Recompute the embedded reference tables and compare.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct AnalyzeArgs {
    /// Degree of the two cyclic covers.
    #[arg(long)]
    m: i64,
    /// Branch exponents of the first cover, comma-separated (e.g.
    /// 1,9,9,9).
    #[arg(long, value_delimiter = ',', required = true)]
    a: Vec<i64>,
    /// Branch exponents of the second cover, comma-separated (e.g.
    /// 3,4,7).
    #[arg(long, value_delimiter = ',', required = true)]
    b: Vec<i64>,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Md)]
    format: Format,
    /// Also print singular points, components, and the blow-down log.
    #[arg(long)]
    trace: bool,
}

#[derive(Args)]
struct SearchArgs {
    /// Smallest cover degree (at least 3).
    #[arg(long, default_value_t = 3)]
    min_m: i64,
    /// Largest cover degree.
    #[arg(long, default_value_t = 22)]
    max_m: i64,
    /// Smallest number of first-cover branch points (at least 4).
    #[arg(long, default_value_t = 4)]
    min_n: usize,
    /// Largest number of first-cover branch points (raise to 12 for the
    /// full catalog).
    #[arg(long, default_value_t = 4)]
    max_n: usize,
    /// Write the catalog to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Catalog format.
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Number of worker threads (default: one per CPU).
    #[arg(long)]
    jobs: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableChoice {
    /// The 150 normalized quadruples.
    #[value(name = "1")]
    One,
    /// The four generalized quadruples.
    #[value(name = "2")]
    Two,
    /// Both tables.
    All,
}

#[derive(Args)]
struct VerifyArgs {
    /// Which reference table to check.
    #[arg(long, value_enum, default_value_t = TableChoice::All)]
    table: TableChoice,
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Analyze(args) => cmd_analyze(args),
        Command::Search(args) => cmd_search(args),
        Command::Verify(args) => cmd_verify(args),
    }
}

fn reject(err: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {err}");
    ExitCode::from(2)
}

fn cmd_analyze(args: AnalyzeArgs) -> ExitCode {
    let quad = match Quadruple::canonicalize(args.m, &args.a, &args.b) {
        Ok(quad) => quad,
        Err(err) => return reject(err),
    };
    let record = match analyze(&quad) {
        Ok(record) => record,
        Err(err) => return reject(err),
    };
    print!("{}", render_one(&record, args.format));
    if args.trace {
        let trace = SurfaceModel::build(&quad).and_then(|model| render_trace(&model));
        match trace {
            Ok(text) => print!("{text}"),
            Err(err) => return reject(err),
        }
    }
    ExitCode::SUCCESS
}

fn cmd_search(args: SearchArgs) -> ExitCode {
    let bounds = SearchBounds {
        m_min: args.min_m,
        m_max: args.max_m,
        n_min: args.min_n,
        n_max: args.max_n,
    };
    let run = || pqsurf::search::enumerate_quadruples(&bounds);
    let outcome = match args.jobs {
        Some(jobs) => {
            let pool = match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
                Ok(pool) => pool,
                Err(err) => return reject(err),
            };
            pool.install(run)
        }
        None => run(),
    };
    let catalog = match outcome {
        Ok(catalog) => catalog,
        Err(err) => return reject(err),
    };
    for collision in &catalog.collisions {
        eprintln!(
            "warning: quadruples {:?} and {:?} at degree {} are the same surface (unit {})",
            collision.first, collision.second, collision.m, collision.unit
        );
    }
    let body = render_records(&catalog.records, args.format);
    match &args.out {
        Some(path) => {
            if let Err(err) = std::fs::write(path, &body) {
                eprintln!("error: cannot write {}: {err}", path.display());
                return ExitCode::from(2);
            }
            println!("{} -> {}", summary(&catalog.records), path.display());
        }
        None => {
            print!("{body}");
            eprintln!("{}", summary(&catalog.records));
        }
    }
    ExitCode::SUCCESS
}

fn cmd_verify(args: VerifyArgs) -> ExitCode {
    let tables: Vec<(&str, &[ReferenceRow])> = match args.table {
        TableChoice::One => vec![("1", &TABLE_ONE[..])],
        TableChoice::Two => vec![("2", &TABLE_TWO[..])],
        TableChoice::All => vec![("1", &TABLE_ONE[..]), ("2", &TABLE_TWO[..])],
    };
    let mut failures = 0usize;
    for (name, rows) in tables {
        let mut matched = 0usize;
        for row in rows {
            let recomputed =
                Quadruple::canonicalize(row.m, row.a, row.b).and_then(|q| analyze(&q));
            match recomputed {
                Ok(record) => {
                    let got = (record.g_c, record.g_d, record.k2_minimal);
                    let want = (row.g_c, row.g_d, row.k2_min);
                    if got == want {
                        matched += 1;
                    } else {
                        failures += 1;
                        println!(
                            "row {} (table {name}): expected (g_C, g_D, K2_min) = {want:?}, got {got:?}",
                            row.row
                        );
                    }
                }
                Err(err) => {
                    failures += 1;
                    println!("row {} (table {name}): rejected: {err}", row.row);
                }
            }
        }
        println!("table {name}: {matched}/{} rows match", rows.len());
    }
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
