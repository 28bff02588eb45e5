// Copyright 2026 The ifpmine Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! Command-line front end for the ifpmine miners.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use ifpmine::bench::{bench_sweep, count_mismatches, render_csv, BenchConfig, BenchDataset};
use ifpmine::format::{render_json, render_text};
use ifpmine::mlms::{mine_mlms_with, parse_threshold_list};
use ifpmine::{
    gen_synthetic, parse_fimi, Error, Itemset, MiiAlgorithm, MineOptions, MlmsOptions,
    SupportThreshold, SynthConfig, ThresholdVector, TransactionDatabase,
};

const EXIT_DISAGREE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_IO: u8 = 3;
const EXIT_GUARD: u8 = 4;

#[derive(Parser, Debug)]
#[command(
    name = "ifpmine",
    version,
    about = "Minimally infrequent and MLMS itemset mining"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Mine minimally infrequent itemsets.
    MineMii {
        #[arg(long)]
        input: PathBuf,
        /// Absolute count `N` or percentage `P%`.
        #[arg(long)]
        min_sup: SupportThreshold,
        #[arg(long, default_value = "ifp")]
        algo: MiiAlgorithm,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Mine frequent itemsets with one threshold per itemset length.
    MineMlms {
        #[arg(long)]
        input: PathBuf,
        /// Comma-separated thresholds, e.g. `4,4,3,2,1` or `10%,8%,5%`.
        #[arg(long)]
        thresholds: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Cross-check ifp, apriori and the brute-force oracle on one input.
    Check {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        min_sup: SupportThreshold,
    },
    /// Sweep thresholds across inputs and algorithms; CSV on stdout.
    Bench {
        #[arg(long, value_delimiter = ',', num_args = 1.., required = true)]
        inputs: Vec<PathBuf>,
        #[arg(long, value_delimiter = ',', default_value = "ifp,apriori")]
        algos: Vec<MiiAlgorithm>,
        #[arg(long, value_delimiter = ',', required = true)]
        thresholds: Vec<SupportThreshold>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Per-cell timeout in seconds.
        #[arg(long, default_value_t = 60.0)]
        timeout: f64,
    },
    /// Write a synthetic FIMI database.
    Gen {
        #[arg(long)]
        items: u32,
        #[arg(long)]
        transactions: usize,
        #[arg(long)]
        density: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug)]
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::GuardViolation { .. } => EXIT_GUARD,
            Error::Parse { .. } | Error::NegativeItem { .. } => EXIT_IO,
            _ => EXIT_USAGE,
        };
        Failure::new(code, e.to_string())
    }
}

fn read_db(path: &Path) -> Result<TransactionDatabase, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::new(EXIT_IO, format!("{}: {e}", path.display())))?;
    parse_fimi(&text).map_err(|e| Failure::new(EXIT_IO, format!("{}: {e}", path.display())))
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text)
            .map_err(|e| Failure::new(EXIT_IO, format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn render(format: Format, sets: &[Itemset], db: &TransactionDatabase) -> String {
    match format {
        Format::Text => render_text(sets, db),
        Format::Json => render_json(sets, db),
    }
}

/// Runs `f` on a pool of `jobs` threads with branch-parallel mining enabled,
/// or inline when `jobs` is 1.
fn with_jobs<T: Send>(jobs: usize, f: impl FnOnce(MineOptions) -> T + Send) -> Result<T, Failure> {
    if jobs == 0 {
        return Err(Failure::new(EXIT_USAGE, "--jobs must be at least 1"));
    }
    if jobs == 1 {
        return Ok(f(MineOptions::default()));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Failure::new(EXIT_USAGE, e.to_string()))?;
    Ok(pool.install(|| f(MineOptions::parallel())))
}

fn resolve_sigma(t: SupportThreshold, db: &TransactionDatabase) -> Result<u64, Failure> {
    let sigma = t.resolve(db.len());
    if sigma < 1 {
        return Err(Failure::new(
            EXIT_USAGE,
            format!("threshold {t} resolves to 0 on {} transactions", db.len()),
        ));
    }
    Ok(sigma)
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::MineMii {
            input,
            min_sup,
            algo,
            format,
            jobs,
            out,
        } => {
            let db = read_db(&input)?;
            let sigma = resolve_sigma(min_sup, &db)?;
            let result = with_jobs(jobs, |opts| algo.mine(&db, sigma, opts))??;
            eprintln!(
                "{}: {} minimally infrequent itemsets at support {} in {:.3} ms",
                result.algorithm,
                result.miis.len(),
                sigma,
                result.elapsed.as_secs_f64() * 1000.0
            );
            emit(out.as_deref(), &render(format, &result.miis, &db))?;
            Ok(0)
        }
        Command::MineMlms {
            input,
            thresholds,
            format,
            jobs,
            out,
        } => {
            let db = read_db(&input)?;
            let tv = ThresholdVector::resolve(&parse_threshold_list(&thresholds)?, db.len())?;
            let result = with_jobs(jobs, |mine| {
                mine_mlms_with(
                    &db,
                    &tv,
                    MlmsOptions {
                        mine,
                        ..MlmsOptions::default()
                    },
                )
            })??;
            eprintln!(
                "ifp_mlms: {} frequent itemsets at thresholds {:?} in {:.3} ms",
                result.frequent.len(),
                tv.sigmas(),
                result.elapsed.as_secs_f64() * 1000.0
            );
            emit(out.as_deref(), &render(format, &result.frequent, &db))?;
            Ok(0)
        }
        Command::Check { input, min_sup } => {
            let db = read_db(&input)?;
            let sigma = resolve_sigma(min_sup, &db)?;
            // Oracle first so its size guard fails fast, before the exponential miners run.
            let runs = [
                MiiAlgorithm::Oracle,
                MiiAlgorithm::Ifp,
                MiiAlgorithm::Apriori,
            ]
            .into_iter()
            .map(|a| a.mine(&db, sigma, MineOptions::default()))
            .collect::<Result<Vec<_>, _>>()?;
            for r in &runs {
                println!("{}: {} itemsets", r.algorithm, r.miis.len());
            }
            let mut agree = true;
            let reference = &runs[0];
            for r in &runs[1..] {
                let only_here: Vec<Itemset> = r
                    .miis
                    .iter()
                    .filter(|s| !reference.miis.contains(s))
                    .cloned()
                    .collect();
                let only_ref: Vec<Itemset> = reference
                    .miis
                    .iter()
                    .filter(|s| !r.miis.contains(s))
                    .cloned()
                    .collect();
                if !only_here.is_empty() || !only_ref.is_empty() {
                    agree = false;
                    println!("only in {}:", r.algorithm);
                    print!("{}", render_text(&only_here, &db));
                    println!("only in {}:", reference.algorithm);
                    print!("{}", render_text(&only_ref, &db));
                }
            }
            Ok(if agree { 0 } else { EXIT_DISAGREE })
        }
        Command::Bench {
            inputs,
            algos,
            thresholds,
            jobs,
            timeout,
        } => {
            if jobs == 0 {
                return Err(Failure::new(EXIT_USAGE, "--jobs must be at least 1"));
            }
            if !(timeout.is_finite() && timeout >= 0.0) {
                return Err(Failure::new(
                    EXIT_USAGE,
                    "--timeout must be a nonnegative number",
                ));
            }
            let datasets = inputs
                .iter()
                .map(|p| {
                    Ok(BenchDataset {
                        id: p.display().to_string(),
                        db: read_db(p)?,
                    })
                })
                .collect::<Result<Vec<_>, Failure>>()?;
            let cfg = BenchConfig {
                algorithms: algos,
                thresholds,
                jobs,
                timeout: Duration::from_secs_f64(timeout),
            };
            let records = bench_sweep(&datasets, &cfg);
            print!("{}", render_csv(&records));
            for r in &records {
                if let ifpmine::bench::CellOutcome::Failed(e) = &r.outcome {
                    eprintln!("{} {} {}: {e}", r.dataset, r.algorithm.name(), r.threshold);
                }
            }
            let mismatches = count_mismatches(&records);
            for m in &mismatches {
                eprintln!("itemset count mismatch: {m}");
            }
            Ok(if mismatches.is_empty() {
                0
            } else {
                EXIT_DISAGREE
            })
        }
        Command::Gen {
            items,
            transactions,
            density,
            seed,
            out,
        } => {
            let db = gen_synthetic(&SynthConfig {
                num_items: items,
                num_transactions: transactions,
                density,
                seed,
            })?;
            emit(out.as_deref(), &db.to_fimi())?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
