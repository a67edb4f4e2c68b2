mod commands;
mod report;

use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand};

use report::{Failure, Report, EXIT_USAGE};

/// Maximal chains in well partial orders: finite analysis, chain
/// operators driven by bit sources, and coding gadgets.
#[derive(Debug, Parser)]
#[command(name = "maxchain", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Heights, longest and strongly maximal chains of a finite poset.
    Analyze {
        #[arg(long, value_name = "FILE")]
        poset: PathBuf,
        /// Write the Hasse diagram as DOT.
        #[arg(long, value_name = "OUT")]
        dot: Option<PathBuf>,
    },
    /// Run the chain operator on a family and print a prefix of its output.
    #[command(group(ArgGroup::new("source").args(["seed", "bits"])))]
    Chain {
        #[arg(long, value_name = "FILE")]
        family: PathBuf,
        #[arg(long, value_name = "ORD")]
        alpha: String,
        #[arg(long)]
        seed: Option<u64>,
        /// File of 0/1 characters used as a finite bit source.
        #[arg(long, value_name = "FILE")]
        bits: Option<PathBuf>,
        #[arg(long)]
        fuel: Option<usize>,
        #[arg(long, default_value_t = 20)]
        emit: usize,
    },
    /// Check an emitted prefix against the finite-poset oracles.
    Verify {
        #[arg(long, value_name = "FILE")]
        family: PathBuf,
        #[arg(long, value_name = "ORD")]
        alpha: String,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        window: usize,
        #[arg(long)]
        fuel: Option<usize>,
    },
    /// Decode the parameter information carried by a chain.
    Decode {
        #[arg(long, value_name = "FILE")]
        family: PathBuf,
        /// Whitespace-separated element codes.
        #[arg(long, value_name = "FILE")]
        chain: PathBuf,
    },
    /// Build a truncated ladder and write it as DOT.
    Gadget {
        #[arg(long, value_name = "FILE")]
        family: PathBuf,
        #[arg(long)]
        rungs: usize,
        #[arg(long, value_name = "OUT")]
        dot: PathBuf,
    },
}

fn run(command: Command, report: &mut Report) -> Result<(), Failure> {
    match command {
        Command::Analyze { poset, dot } => commands::analyze(report, &poset, dot.as_deref()),
        Command::Chain {
            family,
            alpha,
            seed,
            bits,
            fuel,
            emit,
        } => commands::chain(report, &family, &alpha, seed, bits.as_deref(), fuel, emit),
        Command::Verify {
            family,
            alpha,
            seed,
            window,
            fuel,
        } => commands::verify(report, &family, &alpha, seed, window, fuel),
        Command::Decode { family, chain } => commands::decode(report, &family, &chain),
        Command::Gadget { family, rungs, dot } => commands::gadget(report, &family, rungs, &dot),
    }
}

fn name(command: &Command) -> &'static str {
    match command {
        Command::Analyze { .. } => "analyze",
        Command::Chain { .. } => "chain",
        Command::Verify { .. } => "verify",
        Command::Decode { .. } => "decode",
        Command::Gadget { .. } => "gadget",
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let usage = e.use_stderr();
            let _ = e.print();
            if !usage {
                return ExitCode::SUCCESS;
            }
            println!("reason: usage");
            return ExitCode::from(EXIT_USAGE as u8);
        }
    };
    let mut report = Report::new(name(&cli.command));
    let result = run(cli.command, &mut report);
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let _ = report.write_to(&mut out);
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            let _ = writeln!(out, "reason: {}", failure.reason);
            let _ = out.flush();
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code as u8)
        }
    }
}
