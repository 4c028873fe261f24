mod commands;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use commands::{Format, MethodChoice, Outcome};

#[derive(Parser)]
#[command(name = "itg", version, about = "Inner Tutte groups of matroids")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Basic data of a matroid: rank, circuit counts, components, Fano minors.
    Info {
        /// JSON file or catalog:NAME
        source: String,
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
    },
    /// Generator counts and inner Tutte group invariants.
    Groups {
        /// JSON file or catalog:NAME
        source: String,
        #[arg(long, value_enum, default_value_t = MethodArg::All)]
        method: MethodArg,
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
        /// Leave wall-clock timings out of the report.
        #[arg(long)]
        no_timings: bool,
    },
    /// Generator counts of the catalog against the reference table.
    Table {
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
        /// Leave wall-clock timings out of the report.
        #[arg(long)]
        no_timings: bool,
    },
    /// Cross-method agreement, isomorphism maps, bracket identities and the
    /// Tutte group decomposition.
    Verify {
        /// JSON file or catalog:NAME
        source: String,
        /// Seed for sampling configuration sets above the exhaustive limit.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
        /// Leave wall-clock timings out of the report.
        #[arg(long)]
        no_timings: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    All,
    Kernel,
    Tm2,
    Tmi0,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let fmt = |f: FormatArg| match f {
        FormatArg::Json => Format::Json,
        FormatArg::Text => Format::Text,
    };
    let result = match cli.command {
        Command::Info { source, format } => commands::info(&source, fmt(format)),
        Command::Groups {
            source,
            method,
            format,
            no_timings,
        } => {
            let method = match method {
                MethodArg::All => MethodChoice::All,
                MethodArg::Kernel => MethodChoice::One(itg_core::tutte::Method::Kernel),
                MethodArg::Tm2 => MethodChoice::One(itg_core::tutte::Method::Tm2),
                MethodArg::Tmi0 => MethodChoice::One(itg_core::tutte::Method::Tmi0),
            };
            commands::groups(&source, method, fmt(format), !no_timings)
        }
        Command::Table { format, no_timings } => Ok(commands::table(fmt(format), !no_timings)),
        Command::Verify {
            source,
            seed,
            format,
            no_timings,
        } => commands::verify(&source, seed, fmt(format), !no_timings),
    };
    match result {
        Ok(Outcome { output, passed }) => {
            print!("{output}");
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
