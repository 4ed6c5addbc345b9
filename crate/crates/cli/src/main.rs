use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use ore_cli::{CliError, Format, Mode, ResidueClass, SweepOptions};

/// Prime splitting through Newton polygons, and monogenity of pure fields.
#[derive(Parser)]
#[command(name = "ore", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether Q(m^(1/n)) is monogenic.
    Classify {
        #[arg(long, allow_hyphen_values = true)]
        m: String,
        #[arg(long, default_value_t = 12)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Mode::Both)]
        mode: Mode,
    },
    /// Factor p in the field defined by a monic irreducible f.
    Factor {
        #[arg(long, allow_hyphen_values = true)]
        f: String,
        #[arg(long)]
        p: String,
    },
    /// The phi-Newton polygon of f at p.
    Polygon {
        #[arg(long, allow_hyphen_values = true)]
        f: String,
        #[arg(long, allow_hyphen_values = true)]
        phi: String,
        #[arg(long)]
        p: String,
    },
    /// Classify every squarefree m in an inclusive range.
    Sweep {
        /// `a..b`, both ends included.
        #[arg(long, allow_hyphen_values = true)]
        range: String,
        #[arg(long, default_value_t = 12)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Mode::Both)]
        mode: Mode,
        /// Keep only m = r (mod k), given as `r/k`. Repeatable.
        #[arg(long = "class", allow_hyphen_values = true)]
        classes: Vec<String>,
    },
}

fn run(cli: Cli) -> Result<(), CliError> {
    let report = match cli.command {
        Command::Classify { m, n, mode } => {
            ore_cli::classify(&m, n, mode, ore_cli::squarefree_bound()?)?
        }
        Command::Factor { f, p } => ore_cli::factor(&f, &p)?,
        Command::Polygon { f, phi, p } => ore_cli::polygon(&f, &phi, &p)?,
        Command::Sweep {
            range,
            n,
            mode,
            classes,
        } => ore_cli::sweep(&SweepOptions {
            range: ore_cli::commands::parse_range(&range)?,
            n,
            mode,
            classes: classes
                .iter()
                .map(|c| ResidueClass::parse(c))
                .collect::<Result<_, _>>()?,
            bound: ore_cli::squarefree_bound()?,
        })?,
    };
    let rendered = report.render(cli.format)?;
    match cli.out {
        Some(path) => std::fs::write(path, rendered)?,
        None => print!("{rendered}"),
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
