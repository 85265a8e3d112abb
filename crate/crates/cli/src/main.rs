use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use corekit::bijection::{build_bijection, label_rows};
use corekit::catalan::{kappa_bar_abacus, kappa_pair, kappa_triple};
use corekit::render::{abacus_grid, labeled_diagram, quotient_listing, young_diagram, RenderConfig};
use corekit::simulcores::{enumerate_cores, CoreFamilySpec, EnumConfig, EnumerationReport, DEFAULT_MAX_BOUND};
use corekit::suites::{self, Suite, SweepConfig};
use corekit::{t_quotient, Error, Execution};

const BOUND_ENV: &str = "COREKIT_MAX_ENUM_BOUND";

const EXIT_VERIFY_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_INFINITE: u8 = 3;

#[derive(Parser)]
#[command(name = "corekit", version, about = "t-cores, abaci and simultaneous core partitions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Young diagram of κ(2k-1,2k+1) or κ(2k-1,2k,2k+1)
    Kappa {
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long, value_enum, default_value_t = Format::Ascii)]
        format: Format,
        #[arg(long)]
        unicode: bool,
    },
    /// The 2k-abacus of κ(2k-1,2k,2k+1)
    Abacus {
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = Format::Ascii)]
        format: Format,
    },
    /// The 2k-quotient of κ(2k-1,2k+1)
    Quotient {
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = Format::Ascii)]
        format: Format,
    },
    /// Region-labelled κ(2k-1,2k,2k+1) or the full cell map as JSON
    Bijection {
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = Mode::Labels)]
        mode: Mode,
        #[arg(long)]
        unicode: bool,
    },
    /// Run verification sweeps for k = 1..=k-max
    Verify {
        #[arg(long)]
        k_max: usize,
        /// comma-separated subset of theorem3,theorem6,remarks,bijection,eq1,maximal
        #[arg(long, value_delimiter = ',')]
        suites: Option<Vec<Suite>>,
        #[arg(long, default_value_t = corekit::random::DEFAULT_SEED)]
        seed: u64,
        /// run on one thread
        #[arg(long)]
        sequential: bool,
    },
    /// Enumerate all simultaneous cores for a set of moduli
    Enumerate {
        #[arg(required = true)]
        moduli: Vec<usize>,
        /// also print every core
        #[arg(long)]
        list: bool,
        #[arg(long, value_enum, default_value_t = Format::Ascii)]
        format: Format,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Pair,
    Triple,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Ascii,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Labels,
    Trace,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure { code: EXIT_USAGE, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InfiniteFamily { .. } => EXIT_INFINITE,
            _ => EXIT_USAGE,
        };
        Failure { code, message: e.to_string() }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn require_k(k: usize, min: usize) -> Result<(), Failure> {
    if k < min {
        Err(Failure::usage(format!("--k must be at least {min}")))
    } else {
        Ok(())
    }
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("serializable value")
}

fn render_config(unicode: bool) -> RenderConfig {
    if unicode {
        RenderConfig::unicode()
    } else {
        RenderConfig::default()
    }
}

fn run(command: Command) -> Result<u8, Failure> {
    match command {
        Command::Kappa { k, family, format, unicode } => {
            require_k(k, 1)?;
            let lambda = match family {
                Family::Pair => kappa_pair(k)?,
                Family::Triple => kappa_triple(k)?,
            };
            match format {
                Format::Json => println!("{}", to_json(&lambda)),
                Format::Ascii => {
                    print!("{}", young_diagram(&lambda, &render_config(unicode)));
                    println!("size={}", lambda.size());
                }
            }
        }
        Command::Abacus { k, format } => {
            require_k(k, 2)?;
            let abacus = kappa_bar_abacus(k)?;
            match format {
                Format::Json => println!("{}", to_json(&abacus)),
                Format::Ascii => print!("{}", abacus_grid(&abacus)),
            }
        }
        Command::Quotient { k, format } => {
            require_k(k, 1)?;
            let quotient = t_quotient(&kappa_pair(k)?, 2 * k)?;
            match format {
                Format::Json => println!("{}", to_json(&quotient)),
                Format::Ascii => print!("{}", quotient_listing(&quotient)),
            }
        }
        Command::Bijection { k, mode, unicode } => {
            require_k(k, 1)?;
            match mode {
                Mode::Labels => {
                    let labels = label_rows(k)?;
                    print!("{}", labeled_diagram(&kappa_triple(k)?, &labels, &render_config(unicode))?);
                }
                Mode::Trace => println!("{}", to_json(&build_bijection(k)?)),
            }
        }
        Command::Verify { k_max, suites, seed, sequential } => {
            if k_max == 0 {
                return Err(Failure::usage("--k-max must be at least 1"));
            }
            let execution = if sequential { Execution::Sequential } else { Execution::default() };
            let cfg = SweepConfig { k_max, seed, execution };
            let mut selected = suites.unwrap_or_else(|| Suite::ALL.to_vec());
            selected.sort();
            selected.dedup();
            let mut all_ok = true;
            for suite in selected {
                let outcome = suites::run(suite, &cfg)?;
                println!("{outcome}");
                for failure in outcome.failures.iter().take(5) {
                    eprintln!("  {suite}: {failure}");
                }
                all_ok &= outcome.ok();
            }
            if !all_ok {
                return Ok(EXIT_VERIFY_FAILED);
            }
        }
        Command::Enumerate { moduli, list, format } => {
            let spec = CoreFamilySpec::new(moduli).map_err(|e| Failure::usage(e.to_string()))?;
            let max_bound = match std::env::var(BOUND_ENV) {
                Ok(v) => v.parse().map_err(|_| Failure::usage(format!("{BOUND_ENV} must be an integer")))?,
                Err(_) => DEFAULT_MAX_BOUND,
            };
            let cores = enumerate_cores(&spec, &EnumConfig { max_bound, ..Default::default() })?;
            let report = EnumerationReport::new(&spec, cores);
            match format {
                Format::Json => println!("{}", to_json(&report)),
                Format::Ascii => {
                    let maxima: Vec<String> = report.maximal().map(|c| c.to_exponential()).collect();
                    if maxima.len() == 1 {
                        println!("count={} max_size={} max_core={}", report.count, report.max_size, maxima[0]);
                    } else {
                        println!("count={} max_size={} max cores: {}", report.count, report.max_size, maxima.join(","));
                    }
                    if list {
                        for core in &report.cores {
                            println!("{}", core.to_exponential());
                        }
                    }
                }
            }
        }
    }
    Ok(0)
}
