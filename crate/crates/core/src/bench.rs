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

//! Threshold sweeps over datasets and MII miners, emitted as CSV.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::data::{SupportThreshold, TransactionDatabase};
use crate::error::Error;
use crate::mii::MiiAlgorithm;
use crate::mining::MineOptions;

pub const CSV_HEADER: &str = "dataset,algorithm,threshold,elapsed_ms,itemsets,peak_nodes";

#[derive(Debug, Clone)]
pub struct BenchDataset {
    pub id: String,
    pub db: TransactionDatabase,
}

#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub algorithms: Vec<MiiAlgorithm>,
    pub thresholds: Vec<SupportThreshold>,
    pub jobs: usize,
    pub timeout: Duration,
}

/// How a sweep cell ended.
#[derive(Debug, Clone, PartialEq)]
pub enum CellOutcome {
    Done {
        elapsed: Duration,
        itemsets: usize,
        peak_nodes: usize,
    },
    TimedOut,
    Failed(Error),
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRecord {
    pub dataset: String,
    pub algorithm: MiiAlgorithm,
    pub threshold: SupportThreshold,
    pub outcome: CellOutcome,
}

impl BenchRecord {
    pub fn itemsets(&self) -> Option<usize> {
        match self.outcome {
            CellOutcome::Done { itemsets, .. } => Some(itemsets),
            _ => None,
        }
    }

    /// CSV row. Cells that did not finish report `-1` in every measured
    /// column.
    pub fn csv_row(&self) -> String {
        let (elapsed, itemsets, peak) = match &self.outcome {
            CellOutcome::Done {
                elapsed,
                itemsets,
                peak_nodes,
            } => (
                format!("{:.3}", elapsed.as_secs_f64() * 1000.0),
                itemsets.to_string(),
                peak_nodes.to_string(),
            ),
            _ => ("-1".into(), "-1".into(), "-1".into()),
        };
        format!(
            "{},{},{},{},{},{}",
            csv_field(&self.dataset),
            self.algorithm.name(),
            self.threshold,
            elapsed,
            itemsets,
            peak
        )
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Runs the full (dataset, algorithm, threshold) cross product. Rows come
/// back in that nesting order regardless of `jobs`.
pub fn bench_sweep(datasets: &[BenchDataset], cfg: &BenchConfig) -> Vec<BenchRecord> {
    let cells: Vec<(&BenchDataset, MiiAlgorithm, SupportThreshold)> = datasets
        .iter()
        .flat_map(|d| {
            cfg.algorithms
                .iter()
                .flat_map(move |&a| cfg.thresholds.iter().map(move |&t| (d, a, t)))
        })
        .collect();

    let run = |&(d, algorithm, threshold): &(&BenchDataset, MiiAlgorithm, SupportThreshold)| {
        let sigma = threshold.resolve(d.db.len());
        let opts = MineOptions {
            parallel: false,
            deadline: Some(Instant::now() + cfg.timeout),
        };
        let start = Instant::now();
        let outcome = match algorithm.mine(&d.db, sigma, opts) {
            Ok(r) => CellOutcome::Done {
                elapsed: start.elapsed(),
                itemsets: r.miis.len(),
                peak_nodes: r.peak_nodes,
            },
            Err(Error::TimedOut) => CellOutcome::TimedOut,
            Err(e) => CellOutcome::Failed(e),
        };
        BenchRecord {
            dataset: d.id.clone(),
            algorithm,
            threshold,
            outcome,
        }
    };

    if cfg.jobs <= 1 {
        return cells.iter().map(run).collect();
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs)
        .build()
        .expect("thread pool");
    pool.install(|| cells.par_iter().map(run).collect())
}

/// Cells where finished algorithms disagree on the itemset count for the
/// same dataset and threshold.
pub fn count_mismatches(records: &[BenchRecord]) -> Vec<String> {
    let mut groups: BTreeMap<(String, String), Vec<&BenchRecord>> = BTreeMap::new();
    for r in records {
        groups
            .entry((r.dataset.clone(), r.threshold.to_string()))
            .or_default()
            .push(r);
    }
    let mut out = Vec::new();
    for ((dataset, threshold), rows) in groups {
        let counts: Vec<(&str, usize)> = rows
            .iter()
            .filter_map(|r| r.itemsets().map(|n| (r.algorithm.name(), n)))
            .collect();
        if counts.windows(2).any(|w| w[0].1 != w[1].1) {
            let detail: Vec<String> = counts.iter().map(|(a, n)| format!("{a}={n}")).collect();
            out.push(format!(
                "dataset {dataset} threshold {threshold}: {}",
                detail.join(" ")
            ));
        }
    }
    out
}

pub fn render_csv(records: &[BenchRecord]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in records {
        let _ = writeln!(out, "{}", r.csv_row());
    }
    out
}
