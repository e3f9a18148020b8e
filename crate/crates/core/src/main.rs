use std::io;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use hartogs::cli::{self, Format};

#[derive(Parser)]
#[command(
    name = "hartogs",
    version,
    about = "Hartogs phenomenon checks for colored fans"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Validate the colored fan described by an input file.
    Validate { file: PathBuf },
    /// Decide compactifiability and the Hartogs phenomenon.
    Check {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
        /// Include gap cells, generators of C and L, and the full certificate.
        #[arg(long)]
        explain: bool,
        /// Largest rank for the arrangement refinement (default 4).
        #[arg(long, env = "HARTOGS_MAX_RANK")]
        max_rank: Option<usize>,
    },
    /// Recheck the certificate in a JSON report against an input file.
    Verify { report: PathBuf, input: PathBuf },
}

fn main() -> ExitCode {
    let args = Cli::parse();
    let (mut out, mut err) = (io::stdout().lock(), io::stderr().lock());
    let code = match args.command {
        Command::Validate { file } => cli::cmd_validate(&file, &mut out, &mut err),
        Command::Check {
            file,
            format,
            explain,
            max_rank,
        } => {
            let format = match format {
                FormatArg::Text => Format::Text,
                FormatArg::Json => Format::Json,
            };
            cli::cmd_check(&file, format, explain, max_rank, &mut out, &mut err)
        }
        Command::Verify { report, input } => cli::cmd_verify(&report, &input, &mut out, &mut err),
    };
    ExitCode::from(code as u8)
}
