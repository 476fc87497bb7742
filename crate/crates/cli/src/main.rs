// Copyright contributors to the sqct project
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

mod bench;
mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use commands::Failure;

#[derive(Parser)]
#[command(
    name = "sqct",
    version,
    about = "Clifford+T synthesis of controlled phases with two ancillae"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Synthesize Λ(e^{iφ}) to precision ε.
    Synth {
        /// `pi`, `pi/N`, `K*pi`, `K*pi/N` or decimal radians.
        #[arg(long, allow_hyphen_values = true)]
        phase: String,
        #[arg(long)]
        eps: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Circuit output; stdout when absent.
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
        /// JSON report output.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Synthesize a single-qubit unitary read from a file of 8 decimals.
    SynthUnitary {
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long)]
        eps: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Also correct the global phase (two extra blocks).
        #[arg(long)]
        exact_phase: bool,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Re-simulate a circuit file and certify it against Λ(e^{iφ}).
    Verify {
        #[arg(short = 'c', long = "circuit")]
        circuit: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        phase: String,
        #[arg(long)]
        eps: String,
    },
    /// Measure gate counts and timings over a list of precisions.
    Bench {
        /// Comma-separated values, or a decade range such as `1e-2..1e-8`.
        #[arg(long, default_value = "1e-2..1e-8")]
        eps_list: String,
        #[arg(long, default_value_t = 1)]
        trials: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Fixed phase; a seeded random phase per trial when absent.
        #[arg(long, allow_hyphen_values = true)]
        phase: Option<String>,
        /// CSV output; stdout when absent.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Write a nonnegative integer as a sum of four squares.
    FourSquares {
        m: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn run(cli: Cli) -> Result<(), Failure> {
    let opts = commands::options_from_env()?;
    match cli.command {
        Command::Synth {
            phase,
            eps,
            seed,
            output,
            report,
        } => commands::synth(&phase, &eps, seed, output, report, &opts),
        Command::SynthUnitary {
            matrix,
            eps,
            seed,
            exact_phase,
            output,
            report,
        } => commands::synth_unitary(&matrix, &eps, seed, exact_phase, output, report, &opts),
        Command::Verify {
            circuit,
            phase,
            eps,
        } => commands::verify(&circuit, &phase, &eps, &opts),
        Command::Bench {
            eps_list,
            trials,
            seed,
            phase,
            csv,
        } => bench::run(&eps_list, trials, seed, phase.as_deref(), csv, &opts),
        Command::FourSquares { m, seed } => commands::four_squares(&m, seed),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("sqct: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
