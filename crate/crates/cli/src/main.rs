use std::io;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use msort_cli::{cmd_laws, cmd_report, cmd_sort, RunConfig, Selection, SortMode, EXIT_CONFIG};
use msort_core::refinement::Mutant;

#[derive(Parser)]
#[command(
    name = "msort",
    version,
    about = "Check quicksort derivation obligations and sort keys"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run obligations and print a verdict per obligation.
    Laws(RunArgs),
    /// Sort integer keys.
    Sort {
        #[arg(long, value_enum, default_value = "list")]
        mode: Mode,
        #[arg(allow_negative_numbers = true)]
        keys: Vec<i64>,
    },
    /// Run obligations and emit the JSON report.
    Report(RunArgs),
}

#[derive(Args)]
struct RunArgs {
    /// Run every registered obligation (the default).
    #[arg(long, conflicts_with = "only")]
    all: bool,
    /// Run only the named obligation; repeatable.
    #[arg(long, value_name = "NAME")]
    only: Vec<String>,
    /// Override the list-length bound of list-scaled obligations.
    #[arg(long)]
    max_len: Option<usize>,
    /// Override the key alphabet of list-scaled obligations.
    #[arg(long)]
    alphabet: Option<usize>,
    /// Stop after the first failing obligation.
    #[arg(long)]
    fail_fast: bool,
    /// Also write the JSON report here.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
    /// Run against a seeded fault.
    #[arg(long, default_value = "none", value_parser = parse_mutant)]
    mutant: Mutant,
}

fn parse_mutant(s: &str) -> Result<Mutant, String> {
    s.parse().map_err(|e| format!("{e}"))
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    List,
    Array,
}

impl From<RunArgs> for RunConfig {
    fn from(a: RunArgs) -> Self {
        RunConfig {
            max_len: a.max_len,
            alphabet: a.alphabet,
            obligations: if a.only.is_empty() {
                Selection::All
            } else {
                Selection::Only(a.only)
            },
            report_path: a.out,
            fail_fast: a.fail_fast,
            mutant: a.mutant,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut stdout = io::stdout().lock();
    let result = match cli.command {
        Command::Laws(args) => cmd_laws(&args.into(), &mut stdout),
        Command::Report(args) => cmd_report(&args.into(), &mut stdout),
        Command::Sort { mode, keys } => {
            let mode = match mode {
                Mode::List => SortMode::List,
                Mode::Array => SortMode::Array,
            };
            cmd_sort(&keys, mode, &mut stdout)
        }
    };
    match result {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("msort: {e:#}");
            ExitCode::from(EXIT_CONFIG as u8)
        }
    }
}
