//! Command-line interface: analyze catalog entries or products, print the
//! genus and spinor K-types, run the classification sweep, and list the
//! catalog. `--format json` emits the stable schema with exact "p/q"
//! rationals.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use diracpoint::{
    a_hat_number, analyze, catalog_rows, ktypes_report, parse_space_expr, sweep, Catalog,
    EntryKind, Error,
};

mod render;

#[derive(Parser)]
#[command(
    name = "diracpoint",
    version,
    about = "Decides, by exact root-system computation, whether the Dirac operator on a \
             noncompact symmetric space has point spectrum"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Catalog file to use instead of the built-in default.
    #[arg(long, global = true, value_name = "PATH")]
    catalog: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Decide the point spectrum for an entry or a product `A x B`.
    Analyze {
        /// Entry name, or names joined by `x` (e.g. `AIII:1,2 x CI:2`).
        #[arg(required = true)]
        expr: Vec<String>,
    },
    /// A-hat genus of the compact dual of an equal-rank entry.
    Genus { entry: String },
    /// Spinor K-type decomposition of an equal-rank entry.
    Ktypes { entry: String },
    /// Classification sweep over the catalog.
    Sweep {
        #[arg(long, value_name = "N")]
        max_rank: usize,
    },
    /// Catalog inspection.
    Catalog {
        #[command(subcommand)]
        command: CatalogCommand,
    },
}

#[derive(Subcommand)]
enum CatalogCommand {
    /// List all catalog entries.
    List,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            if let Error::UnknownEntry(_) = err {
                let names = load_catalog(&cli)
                    .map(|c| c.names().join(", "))
                    .unwrap_or_default();
                eprintln!("known entries: {names}");
            }
            ExitCode::FAILURE
        }
    }
}

fn load_catalog(cli: &Cli) -> Result<Catalog, Error> {
    match &cli.catalog {
        None => Ok(Catalog::default_catalog().clone()),
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::Domain(format!("cannot read {}: {e}", path.display())))?;
            Catalog::load(&text)
        }
    }
}

fn pair_entry<'c>(catalog: &'c Catalog, name: &str) -> Result<&'c diracpoint::SymmetricPair, Error> {
    let entry = catalog
        .lookup(name)
        .ok_or_else(|| Error::UnknownEntry(name.to_string()))?;
    match &entry.kind {
        EntryKind::Pair(p) => Ok(p),
        EntryKind::Stub(s) => Err(Error::Domain(format!(
            "'{}' has unequal ranks ({} > {}); the A-hat genus of its dual vanishes and there \
             is no spinor K-type data",
            s.name, s.rank_g, s.rank_k
        ))),
    }
}

fn run(cli: &Cli) -> Result<(), Error> {
    let catalog = load_catalog(cli)?;
    match &cli.command {
        Command::Analyze { expr } => {
            let expr = expr.join(" ");
            let descriptor = parse_space_expr(&catalog, &expr)?;
            let report = analyze(&descriptor)?;
            match cli.format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&report).unwrap()),
                Format::Text => print!("{}", render::render_analysis(&report)),
            }
        }
        Command::Genus { entry } => {
            let pair = pair_entry(&catalog, entry)?;
            let report = a_hat_number(pair);
            match cli.format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&report).unwrap()),
                Format::Text => print!("{}", render::render_genus(entry, &report)),
            }
        }
        Command::Ktypes { entry } => {
            let pair = pair_entry(&catalog, entry)?;
            let report = ktypes_report(pair)?;
            match cli.format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&report).unwrap()),
                Format::Text => print!("{}", render::render_ktypes(&report)),
            }
        }
        Command::Sweep { max_rank } => {
            let summary = sweep(&catalog, *max_rank)?;
            match cli.format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&summary).unwrap()),
                Format::Text => print!("{}", render::render_sweep(&summary)),
            }
        }
        Command::Catalog { command } => match command {
            CatalogCommand::List => {
                let rows = catalog_rows(&catalog);
                match cli.format {
                    Format::Json => println!("{}", serde_json::to_string_pretty(&rows).unwrap()),
                    Format::Text => print!("{}", render::render_catalog(&rows)),
                }
            }
        },
    }
    Ok(())
}
