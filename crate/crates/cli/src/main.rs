use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use copra_cli::{failure, run, CliError, Format, Outcome, Request, Subcommand};

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Command {
    Snf,
    Kernel,
    Solve,
    Decompose,
    SameModule,
    Quasifactor,
    Polygcd,
    Separable,
    Primary,
    Bound,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OutputFormat {
    Structured,
    Plain,
}

/// Exact algebra over constructive rings: Smith forms, module structure,
/// gcd-free bases, separable and primary decompositions.
#[derive(Parser, Debug)]
#[command(name = "copra", version)]
struct Args {
    #[arg(value_enum)]
    command: Command,

    /// Input document, or `-` for standard input.
    #[arg(long, default_value = "-")]
    input: PathBuf,

    #[arg(long, value_enum, default_value = "structured")]
    format: OutputFormat,

    /// Re-check the result's certificates (default).
    #[arg(long, overrides_with = "no_verify")]
    verify: bool,

    /// Skip the `verified` block.
    #[arg(long, overrides_with = "verify")]
    no_verify: bool,
}

fn read_input(path: &PathBuf) -> io::Result<String> {
    if path.as_os_str() == "-" {
        let mut text = String::new();
        io::stdin().read_to_string(&mut text)?;
        Ok(text)
    } else {
        std::fs::read_to_string(path)
    }
}

fn main() -> ExitCode {
    let args = Args::parse();
    let subcommand = match args.command {
        Command::Snf => Subcommand::Snf,
        Command::Kernel => Subcommand::Kernel,
        Command::Solve => Subcommand::Solve,
        Command::Decompose => Subcommand::Decompose,
        Command::SameModule => Subcommand::SameModule,
        Command::Quasifactor => Subcommand::Quasifactor,
        Command::Polygcd => Subcommand::Polygcd,
        Command::Separable => Subcommand::Separable,
        Command::Primary => Subcommand::Primary,
        Command::Bound => Subcommand::Bound,
    };
    let request = Request {
        subcommand,
        format: match args.format {
            OutputFormat::Structured => Format::Structured,
            OutputFormat::Plain => Format::Plain,
        },
        verify: !args.no_verify,
    };
    let outcome: Outcome = match read_input(&args.input) {
        Ok(text) => run(request, &text),
        Err(e) => failure(
            subcommand,
            &CliError::Input(format!("cannot read {}: {e}", args.input.display())),
        ),
    };
    // A closed pipe on either stream is not worth a panic.
    let _ = io::stdout().write_all(outcome.stdout.as_bytes());
    let _ = io::stderr().write_all(outcome.stderr.as_bytes());
    ExitCode::from(outcome.code as u8)
}
