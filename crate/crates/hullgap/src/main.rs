use clap::{Parser, Subcommand};
use hullgap::cli::{
    self, run_bench, run_decide, run_plot, run_verify, BenchOptions, CliError, Family, Problem,
    VerifyOptions,
};
use std::path::PathBuf;

#[derive(Parser)]
#[command(
    name = "hullgap",
    version,
    about = "Exact hull classification and hull-based closeness decisions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide a problem on an input file and print a one-line verdict
    Decide {
        /// Which problem to decide
        #[arg(value_enum)]
        problem: Problem,
        /// Instance file for strict/closeness/weak, point file for
        /// api/convex-position
        file: PathBuf,
    },
    /// Run the seeded randomized verification suite
    Verify {
        #[arg(long, default_value_t = 1000, value_parser = clap::value_parser!(u64).range(1..))]
        trials: u64,
        #[arg(long = "n-max", default_value_t = 16, value_parser = clap::value_parser!(u64).range(1..))]
        n_max: u64,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
    /// Benchmark predicate counts across instance families, writing CSV
    Bench {
        #[arg(long, value_delimiter = ',', default_value = "1024,4096,16384")]
        sizes: Vec<usize>,
        #[arg(
            long,
            value_delimiter = ',',
            value_enum,
            default_value = "uniform,eps-spaced,all-equal"
        )]
        families: Vec<Family>,
        /// Output CSV path
        #[arg(long)]
        csv: PathBuf,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
    /// Draw an instance's doubled point set as an SVG figure
    Plot {
        /// Instance file
        file: PathBuf,
        /// Output SVG path
        #[arg(long)]
        svg: PathBuf,
    },
}

fn run(command: Command) -> Result<i32, CliError> {
    match command {
        Command::Decide { problem, file } => {
            let verdict = run_decide(problem, &file)?;
            println!("{}", verdict.line);
            Ok(verdict.exit_code())
        }
        Command::Verify {
            trials,
            n_max,
            seed,
        } => {
            let report = run_verify(&VerifyOptions {
                trials,
                n_max: n_max as usize,
                seed,
            });
            print!("{}", report.render());
            Ok(if report.all_passed() {
                cli::EXIT_NO
            } else {
                cli::EXIT_ERROR
            })
        }
        Command::Bench {
            sizes,
            families,
            csv,
            seed,
        } => {
            let records = run_bench(&BenchOptions {
                sizes,
                families,
                seed,
            })?;
            cli::bench::write_csv(&records, &csv)?;
            for record in &records {
                println!(
                    "{} n={} orient_calls={} wall_ns={}",
                    record.family, record.n, record.orient_calls, record.wall_ns
                );
            }
            Ok(cli::EXIT_NO)
        }
        Command::Plot { file, svg } => {
            run_plot(&file, &svg)?;
            Ok(cli::EXIT_NO)
        }
    }
}

fn main() {
    // Usage errors must exit 1 to leave 10 free for "yes" verdicts.
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = if err.use_stderr() {
                cli::EXIT_ERROR
            } else {
                cli::EXIT_NO // --help and --version
            };
            let _ = err.print();
            std::process::exit(code);
        }
    };
    match run(cli.command) {
        Ok(code) => std::process::exit(code),
        Err(err) => {
            eprintln!("error: {err}");
            std::process::exit(cli::EXIT_ERROR);
        }
    }
}
