use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use lcs_cli::{run, Command, Format, JobSpec};
use lcs_core::lcs::DEFAULT_BUDGET;
use lcs_core::properties::DEFAULT_SAMPLES;

/// Graded dimensions, series and checks for the lower central series of
/// free superalgebras.
#[derive(Parser)]
#[command(name = "lcs", version)]
struct Cli {
    command: Command,
    /// schur: b3 | bk; conjecture: rational | fit | weakbound
    target: Option<String>,
    #[arg(long, default_value_t = 2)]
    m: usize,
    #[arg(long, default_value_t = 0)]
    n: usize,
    #[arg(long, default_value_t = 6)]
    max_degree: usize,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    j: Option<usize>,
    /// Comma-separated: fs, bracket, product, bmcor, f3, properties
    #[arg(long, value_delimiter = ',')]
    checks: Vec<String>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[arg(long)]
    cache_dir: Option<PathBuf>,
    #[arg(long)]
    no_cache: bool,
    #[arg(long)]
    check_cache: bool,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = DEFAULT_SAMPLES)]
    samples: usize,
    /// Largest word-basis dimension allowed in any multidegree.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: usize,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut job = JobSpec::new(cli.command, cli.m, cli.n, cli.max_degree);
    job.target = cli.target;
    job.k = cli.k;
    job.j = cli.j;
    job.checks = cli.checks;
    job.format = cli.format;
    job.seed = cli.seed;
    job.samples = cli.samples;
    job.budget = cli.budget;
    job.cache_dir = cli.cache_dir;
    job.no_cache = cli.no_cache;
    job.check_cache = cli.check_cache;

    let report = match run(&job) {
        Ok(r) => r,
        Err(e) => {
            println!(
                "{}",
                serde_json::to_string_pretty(&e.to_record()).expect("record serializes")
            );
            return ExitCode::from(2);
        }
    };
    match job.format {
        Format::Json => println!("{}", report.to_json()),
        Format::Csv => match report.to_csv() {
            Ok(csv) => {
                eprintln!(
                    "{}",
                    serde_json::to_string(&report.manifest).expect("manifest serializes")
                );
                print!("{csv}");
            }
            Err(e) => {
                println!("{}", e.to_record());
                return ExitCode::from(2);
            }
        },
    }
    if report.ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
