use std::process::ExitCode;

use clap::{Parser, Subcommand};
use greend4_cli::{
    cmd_dual, cmd_multiply, cmd_presentation, cmd_verify, CliError, EtaList, Format,
    PresentationCommand, VerifyConfig, VerifyScope,
};
use greend4_core::verify::standard_etas;
use greend4_core::ProductCase;

/// Exact calculator for tensor products of D4-modules.
#[derive(Parser)]
#[command(name = "greend4", version)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value = "text", global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Multiply two elements, e.g. `multiply "[V(2,0)]" "[O^1V(0)]"`.
    Multiply { left: String, right: String },
    /// Dual of an element.
    Dual { element: String },
    /// Convert between modules and the polynomial presentation.
    Presentation {
        #[arg(value_enum)]
        action: PresentationCommand,
        expression: String,
    },
    /// Check the multiplication table, presentation or braiding against
    /// explicit matrices.
    Verify {
        #[arg(value_enum)]
        scope: VerifyScope,
        /// Largest index s of the label grid.
        #[arg(long, default_value_t = 4)]
        max_s: u32,
        /// Comma-separated band parameters, e.g. `0,1,-2,5/7,oo`.
        #[arg(long)]
        etas: Option<EtaList>,
        /// Seed for randomized isomorphism search.
        #[arg(long, default_value_t = 0x5eed_d4d4)]
        seed: u64,
        /// Worker threads; 0 uses all cores.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Corrupt every table entry of one case, to exercise failure
        /// reporting.
        #[arg(long, hide = true)]
        inject_fault: Option<ProductCase>,
    },
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    let format = cli.format;
    let out = match cli.command {
        Command::Multiply { left, right } => cmd_multiply(&left, &right, format)?,
        Command::Dual { element } => cmd_dual(&element, format)?,
        Command::Presentation { action, expression } => {
            cmd_presentation(action, &expression, format)?
        }
        Command::Verify {
            scope,
            max_s,
            etas,
            seed,
            jobs,
            inject_fault,
        } => {
            let cfg = VerifyConfig {
                scope,
                max_s,
                etas: etas.map_or_else(standard_etas, |l| l.0),
                seed,
                jobs,
                inject_fault,
                format,
            };
            let outcome = cmd_verify(&cfg)?;
            println!("{}", outcome.output);
            return Ok(if outcome.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            });
        }
    };
    println!("{out}");
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
