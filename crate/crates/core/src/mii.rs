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

//! Minimally infrequent itemset mining.
//!
//! An itemset is minimally infrequent (an MII) when its support is below the
//! threshold while every proper subset reaches it. Two miners live here:
//! [`ifp_min`], which recursively splits an [`IfpTree`] on its least
//! frequent item, and [`apriori_min`], which keeps the candidates a
//! level-wise Apriori pass would reject.

use std::collections::{BTreeSet, HashSet};
use std::time::{Duration, Instant};

use fixedbitset::FixedBitSet;

use crate::data::{ItemId, Itemset, TidIndex, TransactionDatabase};
use crate::error::{Error, Result};
use crate::mining::{Algorithm, MineOptions, RunState};
use crate::tree::IfpTree;

#[derive(Debug, Clone)]
pub struct MiiResult {
    /// Canonically ordered, each annotated with its support.
    pub miis: Vec<Itemset>,
    pub sigma: u64,
    pub algorithm: Algorithm,
    pub elapsed: Duration,
    /// Largest tree built during the run; zero for tree-less miners.
    pub peak_nodes: usize,
}

/// `{x} • {S1, .., Sn} = {{x} ∪ S1, .., {x} ∪ Sn}`.
pub fn unify<'a, I>(x: ItemId, sets: I) -> Vec<Itemset>
where
    I: IntoIterator<Item = &'a Itemset>,
{
    sets.into_iter().map(|s| s.insert(x)).collect()
}

fn check_sigma(sigma: u64) -> Result<()> {
    if sigma < 1 {
        Err(Error::InvalidThreshold(sigma))
    } else {
        Ok(())
    }
}

pub fn ifp_min(tree: &IfpTree, sigma: u64) -> Result<MiiResult> {
    ifp_min_with(tree, sigma, MineOptions::default())
}

pub fn ifp_min_with(tree: &IfpTree, sigma: u64, opts: MineOptions) -> Result<MiiResult> {
    check_sigma(sigma)?;
    let start = Instant::now();
    let state = RunState::new(opts);
    state.observe_tree(tree.node_count());

    // Steps 1-2 at the top level; deeper trees arrive already pruned.
    let infrequent: BTreeSet<ItemId> = tree
        .item_supports()
        .into_iter()
        .filter(|&(_, s)| s < sigma)
        .map(|(i, _)| i)
        .collect();
    let pruned = tree.without_items(&infrequent);
    let mut found = mine_pruned(pruned, sigma, &state)?;
    found.extend(infrequent.into_iter().map(|i| Itemset::new([i])));

    let index = tree.support_index();
    let miis = found
        .into_iter()
        .map(|s| {
            let supp = index.support(&s);
            s.with_support(supp)
        })
        .collect();
    Ok(MiiResult {
        miis,
        sigma,
        algorithm: Algorithm::IfpMin,
        elapsed: start.elapsed(),
        peak_nodes: state.peak_nodes(),
    })
}

/// MIIs of a tree whose items are all frequent.
///
/// The projected tree is built with its infrequent items already removed;
/// those items are exactly what the recursive call would report and prune
/// first, so they are added to its result here instead.
fn mine_pruned(tree: IfpTree, sigma: u64, state: &RunState) -> Result<BTreeSet<Itemset>> {
    state.check_deadline()?;
    let mut out = BTreeSet::new();
    let Ok(x) = tree.lf_item() else {
        return Ok(out);
    };
    if tree.node_count() == 1 {
        if tree.item_support(x) < sigma {
            out.insert(Itemset::new([x]));
        }
        return Ok(out);
    }

    let (projected, projected_infrequent) = tree.projected_tree_min_support(x, sigma)?;
    let mut projected_items = projected.items();
    projected_items.extend(projected_infrequent.iter().map(|&(i, _)| i));
    let fork = state.fork(tree.node_count());
    let residual = tree.into_residual_tree(x)?;
    state.observe_tree(projected.node_count().max(residual.node_count()));
    let never_with_x: Vec<Itemset> = residual
        .items()
        .into_iter()
        .filter(|i| !projected_items.contains(i))
        .map(|i| Itemset::new([i]))
        .collect();

    let (from_residual, from_projected) = if fork {
        rayon::join(
            || mine_pruned(residual, sigma, state),
            || mine_pruned(projected, sigma, state),
        )
    } else {
        (
            mine_pruned(residual, sigma, state),
            mine_pruned(projected, sigma, state),
        )
    };
    let from_residual = from_residual?;
    let mut from_projected = from_projected?;
    from_projected.extend(
        projected_infrequent
            .into_iter()
            .map(|(i, _)| Itemset::new([i])),
    );

    let with_x = unify(x, from_projected.difference(&from_residual));
    let zero_support_pairs = unify(x, &never_with_x);

    out.extend(from_residual);
    out.extend(with_x);
    out.extend(zero_support_pairs);
    Ok(out)
}

/// Builds the tree for `db` and runs [`ifp_min_with`].
pub fn ifp_min_db(db: &TransactionDatabase, sigma: u64, opts: MineOptions) -> Result<MiiResult> {
    check_sigma(sigma)?;
    let start = Instant::now();
    let tree = IfpTree::build(db);
    let mut result = ifp_min_with(&tree, sigma, opts)?;
    result.elapsed = start.elapsed();
    Ok(result)
}

pub fn apriori_min(db: &TransactionDatabase, sigma: u64) -> Result<MiiResult> {
    apriori_min_with(db, sigma, MineOptions::default())
}

/// Level-wise MII mining: every candidate that fails the threshold after
/// passing the subset check is minimally infrequent.
pub fn apriori_min_with(
    db: &TransactionDatabase,
    sigma: u64,
    opts: MineOptions,
) -> Result<MiiResult> {
    check_sigma(sigma)?;
    let start = Instant::now();
    let state = RunState::new(opts);
    let tidsets = TidIndex::new(db).into_sets();

    let mut miis = Vec::new();
    let mut level: Vec<(Itemset, FixedBitSet)> = Vec::new();
    for (item, tids) in tidsets {
        let supp = tids.count_ones(..) as u64;
        let single = Itemset::new([item]).with_support(supp);
        if supp < sigma {
            miis.push(single);
        } else {
            level.push((single, tids));
        }
    }

    while level.len() > 1 {
        state.check_deadline()?;
        let frequent: HashSet<&[ItemId]> = level.iter().map(|(s, _)| s.items()).collect();
        let mut next = Vec::new();
        for (i, (a, ta)) in level.iter().enumerate() {
            let prefix = &a.items()[..a.len() - 1];
            for (b, tb) in &level[i + 1..] {
                if &b.items()[..b.len() - 1] != prefix {
                    break;
                }
                let candidate = a.insert(*b.items().last().unwrap());
                if !candidate
                    .immediate_subsets()
                    .all(|s| frequent.contains(s.items()))
                {
                    continue;
                }
                let mut tids = ta.clone();
                tids.intersect_with(tb);
                let supp = tids.count_ones(..) as u64;
                let candidate = candidate.with_support(supp);
                if supp < sigma {
                    miis.push(candidate);
                } else {
                    next.push((candidate, tids));
                }
            }
            if i % 256 == 255 {
                state.check_deadline()?;
            }
        }
        level = next;
    }

    miis.sort();
    Ok(MiiResult {
        miis,
        sigma,
        algorithm: Algorithm::AprioriMin,
        elapsed: start.elapsed(),
        peak_nodes: 0,
    })
}

/// MII miner selector, as named on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MiiAlgorithm {
    Ifp,
    Apriori,
    Oracle,
}

impl MiiAlgorithm {
    pub fn name(&self) -> &'static str {
        match self {
            MiiAlgorithm::Ifp => "ifp",
            MiiAlgorithm::Apriori => "apriori",
            MiiAlgorithm::Oracle => "oracle",
        }
    }

    pub fn mine(
        &self,
        db: &TransactionDatabase,
        sigma: u64,
        opts: MineOptions,
    ) -> Result<MiiResult> {
        match self {
            MiiAlgorithm::Ifp => ifp_min_db(db, sigma, opts),
            MiiAlgorithm::Apriori => apriori_min_with(db, sigma, opts),
            MiiAlgorithm::Oracle => {
                let start = Instant::now();
                let miis = crate::oracle::mii_oracle(db, sigma)?.into_iter().collect();
                Ok(MiiResult {
                    miis,
                    sigma,
                    algorithm: Algorithm::MiiOracle,
                    elapsed: start.elapsed(),
                    peak_nodes: 0,
                })
            }
        }
    }
}

impl std::str::FromStr for MiiAlgorithm {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "ifp" => Ok(MiiAlgorithm::Ifp),
            "apriori" => Ok(MiiAlgorithm::Apriori),
            "oracle" => Ok(MiiAlgorithm::Oracle),
            other => Err(format!(
                "unknown algorithm {other:?} (expected ifp, apriori or oracle)"
            )),
        }
    }
}
