use std::io;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use knotcert::commands::{run_alexander, run_certify, run_verify, AlexanderArgs, CertifyArgs, VerifyArgs, EXIT_INVALID};

/// Exact rigidity certificates for two-bridge knots.
#[derive(Parser, Debug)]
#[command(name = "knotcert", version)]
struct Cli {
    /// Worker threads for per-branch and per-j parallelism
    #[arg(long, global = true, value_name = "N")]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Certify local longitudinal rigidity at the Alexander roots
    Certify(CertifyArgs),
    /// Run every exact check for the [1,1,2,2,2j] family up to --j-max
    VerifyPaper(VerifyArgs),
    /// Print the normalized Alexander polynomial, optionally with its real roots
    Alexander(AlexanderArgs),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_INVALID as u8);
        }
    }
    let (mut out, mut err) = (io::stdout().lock(), io::stderr().lock());
    let code = match &cli.command {
        Command::Certify(a) => run_certify(a, &mut out, &mut err),
        Command::VerifyPaper(a) => run_verify(a, &mut out, &mut err),
        Command::Alexander(a) => run_alexander(a, &mut out, &mut err),
    };
    ExitCode::from(code as u8)
}
