use std::process::ExitCode;

use clap::{Parser, Subcommand};
use symprod::commands::{self, Mode};
use symprod::exit;
use symprod_core::orbifold::SeriesKind;

#[derive(Parser)]
#[command(
    name = "symprod",
    version,
    about = "Orbifold series of symmetric products, checked two ways"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print one generating series.
    Series {
        /// Series kind, e.g. euler_orb, hodge_orb, chiy_orb_b.
        #[arg(value_parser = parse_kind)]
        kind: SeriesKind,
        /// Manifold JSON file or catalog name.
        #[arg(long)]
        manifold: String,
        /// Truncation order in the counting variable.
        #[arg(long)]
        order: Option<u32>,
        #[arg(long, value_enum, default_value_t = Mode::Closed)]
        mode: Mode,
    },
    /// Check the Heisenberg relations on the truncated Fock space.
    FockVerify {
        #[arg(long)]
        manifold: String,
        #[arg(long)]
        max_charge: Option<u32>,
    },
    /// Run every applicable brute/closed comparison and cross-check.
    VerifyAll {
        #[arg(long)]
        manifold: String,
        #[arg(long)]
        order: Option<u32>,
    },
    /// Inspect the manifold catalog.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    /// List catalog entries.
    List,
}

fn parse_kind(s: &str) -> Result<SeriesKind, String> {
    s.parse::<SeriesKind>().map_err(|_| {
        let names: Vec<_> = SeriesKind::ALL.iter().map(|k| k.name()).collect();
        format!("unknown series kind; expected one of {}", names.join(", "))
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            let code = if e.use_stderr() {
                exit::INPUT
            } else {
                exit::PASS
            };
            return ExitCode::from(code as u8);
        }
    };
    let result = match cli.command {
        Command::Series {
            kind,
            manifold,
            order,
            mode,
        } => commands::series(kind, &manifold, order, mode),
        Command::FockVerify {
            manifold,
            max_charge,
        } => commands::fock_verify(&manifold, max_charge),
        Command::VerifyAll { manifold, order } => commands::verify_all_cmd(&manifold, order),
        Command::Catalog {
            action: CatalogAction::List,
        } => commands::catalog_list(),
    };
    match result {
        Ok(report) => {
            print!("{}", report.render());
            ExitCode::from(report.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("symprod: {e}");
            ExitCode::from(exit::INPUT as u8)
        }
    }
}
