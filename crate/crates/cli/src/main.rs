use std::io::{self, Read, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use vcut_cli::bench::{format_bench, run_bench, Via};
use vcut_cli::commands::{self, CliError, CliResult};
use vcut_cli::verify::run_verify;
use vcut_core::oracle::OracleBudget;
use vcut_core::random::GnpParams;

#[derive(Parser)]
#[command(name = "vcut", version, about = "Minimum weighted vertex cuts in directed and undirected graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum PathArg {
    Reduction,
    Direct,
}

#[derive(Clone, Copy, ValueEnum)]
enum ViaArg {
    Reduction,
    Direct,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum Model {
    Gnp,
}

#[derive(Subcommand)]
enum Command {
    /// Print the undirected reduced graph of a directed instance.
    Reduce {
        /// Instance file, or `-` for stdin.
        input: String,
    },
    /// Solve a cut query.
    Solve {
        input: String,
        /// global | pair S T | source S | sink T | steiner V1,V2,... | all-pairs
        #[arg(long, num_args = 1.., required = true, allow_hyphen_values = false)]
        variant: Vec<String>,
        #[arg(long, value_enum, default_value = "reduction")]
        via: PathArg,
        /// Also print the left side, separator and right side.
        #[arg(long)]
        witness: bool,
    },
    /// Solve a cut query by exhaustive enumeration (small graphs only).
    Oracle {
        input: String,
        #[arg(long, num_args = 1.., required = true)]
        variant: Vec<String>,
        #[arg(long)]
        witness: bool,
        /// Largest vertex count accepted.
        #[arg(long, default_value_t = OracleBudget::default().max_n)]
        max_n: usize,
    },
    /// Generate a random directed instance.
    Gen {
        #[arg(long, value_enum, default_value = "gnp")]
        model: Model,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
        #[arg(long, default_value_t = 1)]
        wmax: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Cross-check both solver paths and the oracle on random instances.
    Verify {
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Time the solver paths on a generated instance.
    Bench {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
        #[arg(long, default_value_t = 100)]
        wmax: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, num_args = 1.., default_value = "global")]
        variant: Vec<String>,
        #[arg(long, value_enum, default_value = "both")]
        via: ViaArg,
    },
}

fn read_input(path: &str) -> CliResult<String> {
    let mut text = String::new();
    let res = if path == "-" {
        io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    res.map_err(|e| CliError::Usage(format!("cannot read {path}: {e}")))?;
    Ok(text)
}

fn gnp_params(n: usize, p: f64, wmax: u64, seed: u64) -> CliResult<GnpParams> {
    if !(0.0..=1.0).contains(&p) || n == 0 || wmax == 0 {
        return Err(CliError::Usage("need n >= 1, 0 <= p <= 1 and wmax >= 1".into()));
    }
    Ok(GnpParams { n, p, wmax, seed })
}

fn path_of(p: PathArg) -> vcut_core::connectivity::Path {
    match p {
        PathArg::Reduction => vcut_core::connectivity::Path::Reduction,
        PathArg::Direct => vcut_core::connectivity::Path::Direct,
    }
}

/// Returns stdout text and whether the run counts as a success.
fn run(cmd: Command) -> CliResult<(String, bool)> {
    match cmd {
        Command::Reduce { input } => Ok((commands::cmd_reduce(&read_input(&input)?)?, true)),
        Command::Solve {
            input,
            variant,
            via,
            witness,
        } => {
            let query = commands::parse_query(&variant)?;
            let text = read_input(&input)?;
            Ok((commands::cmd_solve(&text, &query, path_of(via), witness)?, true))
        }
        Command::Oracle {
            input,
            variant,
            witness,
            max_n,
        } => {
            let query = commands::parse_query(&variant)?;
            let text = read_input(&input)?;
            let budget = OracleBudget::with_max_n(max_n);
            Ok((commands::cmd_oracle(&text, &query, witness, budget)?, true))
        }
        Command::Gen {
            model: Model::Gnp,
            n,
            p,
            wmax,
            seed,
        } => Ok((commands::cmd_gen(gnp_params(n, p, wmax, seed)?)?, true)),
        Command::Verify {
            trials,
            max_n,
            seed,
        } => {
            if max_n == 0 {
                return Err(CliError::Usage("max-n must be positive".into()));
            }
            let report = run_verify(trials, max_n, seed);
            let ok = report.passed();
            Ok((report.text, ok))
        }
        Command::Bench {
            n,
            p,
            wmax,
            seed,
            variant,
            via,
        } => {
            let params = gnp_params(n, p, wmax, seed)?;
            let query = commands::parse_query(&variant)?;
            let via = match via {
                ViaArg::Reduction => Via::Reduction,
                ViaArg::Direct => Via::Direct,
                ViaArg::Both => Via::Both,
            };
            let rows = run_bench(params, &query, via)?;
            let agree = rows.windows(2).all(|w| w[0].value == w[1].value);
            Ok((format_bench(params, &query, &rows), agree))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok((text, ok)) => {
            let mut stdout = io::stdout().lock();
            if stdout.write_all(text.as_bytes()).is_err() {
                return ExitCode::from(1);
            }
            ExitCode::from(if ok { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
