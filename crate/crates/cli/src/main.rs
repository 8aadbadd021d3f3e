use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, ValueEnum};
use rkdual::{run, Command, Document, InputError, Options, Output};
use rkdual_core::linalg::Ring;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

/// Verify (R,K) duality constructions on simplicial maps.
#[derive(Parser, Debug)]
#[command(name = "rkdual", version)]
struct Cli {
    #[arg(value_enum)]
    command: Command,
    /// Input document (JSON); optional for `random`.
    input: Option<PathBuf>,
    /// Coefficient ring: Z, Q or Z/p. Overrides the document.
    #[arg(long)]
    ring: Option<String>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 100)]
    count: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the output here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn execute(cli: &Cli) -> Result<Output, InputError> {
    let ring = cli
        .ring
        .as_deref()
        .map(|r| r.parse::<Ring>().map_err(|e| InputError::Invalid(e.to_string())))
        .transpose()?;
    let doc = cli.input.as_deref().map(Document::read).transpose()?;
    let opts = Options {
        ring,
        seed: cli.seed,
        count: cli.count,
    };
    run(cli.command, doc.as_ref(), &opts)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let output = match execute(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("rkdual: {e}");
            return ExitCode::from(2);
        }
    };
    let text = match &output {
        Output::Report(r) => match cli.format {
            Format::Text => r.to_text(),
            Format::Json => r.to_json(),
        },
        Output::Cells(c) => c.clone(),
    };
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                eprintln!("rkdual: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{text}"),
    }
    eprintln!("rkdual: {} finished in {} ms", cli.command.name(), start.elapsed().as_millis());
    ExitCode::from(output.exit_code())
}
