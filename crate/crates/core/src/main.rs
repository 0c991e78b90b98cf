use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use dqpsk_ber::cli::{self, Scale, SweepSpec, Table};
use dqpsk_ber::Error;

/// Exact BER, bounds and approximations for Gray-coded DQPSK over AWGN.
#[derive(Debug, Parser)]
#[command(name = "dqpsk-ber", version)]
struct Args {
    /// Write the CSV to this file (atomically) instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ScaleArg {
    Db,
    Linear,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print one of the three reference tables (gamma = 1..12, linear).
    Table {
        #[arg(value_parser = ["1", "2", "3"])]
        which: String,
    },
    /// Evaluate selected quantities over an SNR grid.
    Sweep {
        #[arg(long, allow_hyphen_values = true)]
        start: f64,
        #[arg(long, allow_hyphen_values = true)]
        stop: f64,
        #[arg(long)]
        step: f64,
        #[arg(long, value_enum)]
        scale: ScaleArg,
        /// Comma-separated: exact,l1,l2,u1,u2,u3,ber1..ber7,eps5..eps7,w5,w6,w7
        #[arg(long)]
        cols: String,
    },
    /// Monte-Carlo estimate compared with the exact BER.
    Mc {
        #[arg(long, allow_hyphen_values = true)]
        snr_db: f64,
        #[arg(long)]
        symbols: u64,
        #[arg(long)]
        seed: u64,
    },
    /// rho0, lambda0 and the root residual.
    Constants,
}

fn run(command: Command) -> dqpsk_ber::Result<String> {
    match command {
        Command::Table { which } => cli::cmd_table(which.parse::<Table>()?),
        Command::Sweep {
            start,
            stop,
            step,
            scale,
            cols,
        } => {
            let spec = SweepSpec {
                start,
                stop,
                step,
                scale: match scale {
                    ScaleArg::Db => Scale::Db,
                    ScaleArg::Linear => Scale::Linear,
                },
            };
            let columns = cli::parse_columns(&cols)?;
            cli::cmd_sweep(&spec, &columns)
        }
        Command::Mc {
            snr_db,
            symbols,
            seed,
        } => cli::cmd_mc(snr_db, symbols, seed),
        Command::Constants => cli::cmd_constants(),
    }
}

fn main() -> ExitCode {
    let args = Args::parse();
    let text = match run(args.command) {
        Ok(text) => text,
        Err(err) => {
            eprintln!("dqpsk-ber: {err}");
            return match err {
                Error::Usage(_) => ExitCode::from(2),
                _ => ExitCode::from(1),
            };
        }
    };
    match args.out {
        Some(path) => {
            if let Err(err) = cli::write_atomic(&path, &text) {
                eprintln!("dqpsk-ber: cannot write {}: {err}", path.display());
                return ExitCode::from(1);
            }
        }
        None => print!("{text}"),
    }
    ExitCode::SUCCESS
}
