use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use drazin_cli::{cmd_apply, cmd_check, cmd_drazin, cmd_gen, cmd_verify, parse_formula, CliError, Outcome};
use drazin_core::gen::GenSpec;

#[derive(Parser)]
#[command(name = "drazin", version, about = "Exact Drazin inverses and their closed-form representations")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Drazin inverse, index and eigenprojection via the core-nilpotent oracle.
    Drazin { path: PathBuf },
    /// Check a formula's hypotheses on an instance file.
    Check {
        path: PathBuf,
        #[arg(long)]
        formula: String,
    },
    /// Evaluate a formula on an instance file.
    Apply {
        path: PathBuf,
        #[arg(long)]
        formula: String,
    },
    /// Compare a formula against the oracle.
    Verify {
        path: PathBuf,
        #[arg(long)]
        formula: String,
    },
    /// Write seeded instances satisfying a formula's hypotheses.
    Gen {
        #[arg(long)]
        case: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Size of the A block (defaults to n).
        #[arg(long)]
        m: Option<usize>,
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        count: usize,
        #[arg(long, default_value_t = 2)]
        bound: i64,
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
}

fn run(command: Command) -> Result<Outcome, CliError> {
    match command {
        Command::Drazin { path } => cmd_drazin(&path),
        Command::Check { path, formula } => cmd_check(&path, parse_formula(&formula)?),
        Command::Apply { path, formula } => cmd_apply(&path, parse_formula(&formula)?),
        Command::Verify { path, formula } => cmd_verify(&path, parse_formula(&formula)?),
        Command::Gen {
            case,
            seed,
            m,
            n,
            count,
            bound,
            out,
        } => {
            let spec = GenSpec {
                case: parse_formula(&case)?,
                seed,
                m: m.unwrap_or(n),
                n,
                entry_bound: bound,
            };
            cmd_gen(&spec, count, &out)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match run(cli.command) {
        Ok(out) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&out.json).unwrap());
            } else {
                println!("{}", out.text);
            }
            out.code
        }
        Err(e) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&e.to_json()).unwrap());
            } else {
                eprintln!("{}", e.to_text());
            }
            e.exit_code()
        }
    };
    ExitCode::from(code as u8)
}
