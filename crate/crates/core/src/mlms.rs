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

//! Frequent itemset mining under multiple level minimum supports (MLMS).
//!
//! Each itemset length `k` has its own threshold `σ_k`, and nothing forces
//! `σ_1 ≥ σ_2 ≥ ..`, so the Apriori property does not hold. The miner walks
//! the same projected/residual decomposition as the MII miner while tracking
//! how many items have been projected away (the prefix length). A `k`-itemset
//! found in a tree with prefix length `p` stands for a `k + p`-itemset of the
//! original database and is judged against `σ_{k+p}`.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use crate::data::{ItemId, Itemset, SupportThreshold, TidIndex, TransactionDatabase};
use crate::error::{Error, Result};
use crate::mii::unify;
use crate::mining::{MineOptions, RunState};
use crate::tree::IfpTree;

/// Per-length minimum supports `σ_1..σ_L`, all at least 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThresholdVector {
    sigmas: Vec<u64>,
}

impl ThresholdVector {
    pub fn new(sigmas: Vec<u64>) -> Result<Self> {
        if sigmas.is_empty() {
            return Err(Error::EmptyThresholds);
        }
        if let Some(&bad) = sigmas.iter().find(|&&s| s < 1) {
            return Err(Error::InvalidThreshold(bad));
        }
        Ok(ThresholdVector { sigmas })
    }

    /// Resolves counts and percentages against a database size.
    pub fn resolve(list: &[SupportThreshold], num_transactions: usize) -> Result<Self> {
        Self::new(list.iter().map(|t| t.resolve(num_transactions)).collect())
    }

    /// Longest itemset length with a threshold.
    pub fn max_len(&self) -> usize {
        self.sigmas.len()
    }

    /// `σ_k` for 1-based `k`.
    pub fn sigma(&self, k: usize) -> Option<u64> {
        k.checked_sub(1).and_then(|i| self.sigmas.get(i)).copied()
    }

    pub fn sigmas(&self) -> &[u64] {
        &self.sigmas
    }
}

/// Parses `"4,4,3,2,1"` or `"10%,8%,5%"`.
pub fn parse_threshold_list(text: &str) -> Result<Vec<SupportThreshold>> {
    let list = text
        .split(',')
        .map(|t| t.parse())
        .collect::<Result<Vec<SupportThreshold>>>()?;
    if list.is_empty() {
        return Err(Error::EmptyThresholds);
    }
    Ok(list)
}

pub fn sigma_low(tv: &ThresholdVector) -> u64 {
    *tv.sigmas
        .iter()
        .min()
        .expect("threshold vectors are nonempty")
}

/// Whether a `k`-itemset with support `supp`, found in a tree with prefix
/// length `p`, meets `σ_{k+p}`. Lengths beyond the vector are never frequent.
pub fn is_frequent_star(k: usize, p: usize, supp: u64, tv: &ThresholdVector) -> bool {
    tv.sigma(k + p).is_some_and(|sigma| supp >= sigma)
}

/// Items projected away on the way to a tree.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PrefixContext {
    prefix: Itemset,
}

impl PrefixContext {
    pub fn root() -> Self {
        PrefixContext::default()
    }

    pub fn prefix_set(&self) -> &Itemset {
        &self.prefix
    }

    pub fn prefix_length(&self) -> usize {
        self.prefix.len()
    }

    /// Context of the projected tree of `x`.
    pub fn project(&self, x: ItemId) -> Self {
        PrefixContext {
            prefix: self.prefix.insert(x),
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct MlmsOptions {
    pub mine: MineOptions,
    /// Skip projecting items whose support is below `σ_low`.
    pub sigma_low_pruning: bool,
}

impl Default for MlmsOptions {
    fn default() -> Self {
        MlmsOptions {
            mine: MineOptions::default(),
            sigma_low_pruning: true,
        }
    }
}

#[derive(Debug, Clone)]
pub struct MlmsResult {
    /// Canonically ordered, each annotated with its support.
    pub frequent: Vec<Itemset>,
    pub thresholds: ThresholdVector,
    pub elapsed: Duration,
    pub peak_nodes: usize,
}

/// Frequent* itemsets of `tree` under context `ctx`, relative to the tree
/// (the prefix set is not included in the returned itemsets).
pub fn ifp_mlms(tree: &IfpTree, tv: &ThresholdVector, ctx: &PrefixContext) -> BTreeSet<Itemset> {
    let state = RunState::new(MineOptions::default());
    mine_tree(tree.clone(), tv, ctx, &state, true).expect("no deadline set")
}

pub fn ifp_mlms_with(
    tree: &IfpTree,
    tv: &ThresholdVector,
    ctx: &PrefixContext,
    opts: MlmsOptions,
) -> Result<BTreeSet<Itemset>> {
    let state = RunState::new(opts.mine);
    mine_tree(tree.clone(), tv, ctx, &state, opts.sigma_low_pruning)
}

fn mine_tree(
    tree: IfpTree,
    tv: &ThresholdVector,
    ctx: &PrefixContext,
    state: &RunState,
    prune: bool,
) -> Result<BTreeSet<Itemset>> {
    state.check_deadline()?;
    state.observe_tree(tree.node_count());
    let p = ctx.prefix_length();
    // With p >= L no itemset of length >= 1 has a threshold left.
    if tree.is_empty() || p >= tv.max_len() {
        return Ok(BTreeSet::new());
    }
    let x = tree.lf_item()?;
    let supp_x = tree.item_support(x);

    let skip_projection = prune && supp_x < sigma_low(tv);
    let projected = if skip_projection {
        None
    } else {
        Some(tree.projected_tree(x)?)
    };
    let fork = state.fork(tree.node_count());
    let residual = tree.into_residual_tree(x)?;
    let (from_projected, from_residual) = match projected {
        None => (
            Ok(BTreeSet::new()),
            mine_tree(residual, tv, ctx, state, prune),
        ),
        Some(projected) => {
            let projected_ctx = ctx.project(x);
            if fork {
                rayon::join(
                    || mine_tree(projected, tv, &projected_ctx, state, prune),
                    || mine_tree(residual, tv, ctx, state, prune),
                )
            } else {
                (
                    mine_tree(projected, tv, &projected_ctx, state, prune),
                    mine_tree(residual, tv, ctx, state, prune),
                )
            }
        }
    };

    let mut out = from_residual?;
    out.extend(unify(x, &from_projected?));
    if is_frequent_star(1, p, supp_x, tv) {
        out.insert(Itemset::new([x]));
    }
    Ok(out)
}

pub fn mine_mlms(db: &TransactionDatabase, tv: &ThresholdVector) -> Result<MlmsResult> {
    mine_mlms_with(db, tv, MlmsOptions::default())
}

/// Builds the tree, mines it from the root context and attaches supports
/// counted against `db`.
pub fn mine_mlms_with(
    db: &TransactionDatabase,
    tv: &ThresholdVector,
    opts: MlmsOptions,
) -> Result<MlmsResult> {
    let start = Instant::now();
    let tree = IfpTree::build(db);
    let state = RunState::new(opts.mine);
    let found = mine_tree(
        tree,
        tv,
        &PrefixContext::root(),
        &state,
        opts.sigma_low_pruning,
    )?;
    let index = TidIndex::new(db);
    let frequent = found
        .into_iter()
        .map(|s| {
            let supp = index.support(&s);
            s.with_support(supp)
        })
        .collect();
    Ok(MlmsResult {
        frequent,
        thresholds: tv.clone(),
        elapsed: start.elapsed(),
        peak_nodes: state.peak_nodes(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{table2, TABLE2_FREQUENT, TABLE2_THRESHOLDS};

    fn tv(s: &[u64]) -> ThresholdVector {
        ThresholdVector::new(s.to_vec()).unwrap()
    }

    #[test]
    fn sigma_low_examples() {
        assert_eq!(sigma_low(&tv(&[4, 4, 3, 2, 1])), 1);
        assert_eq!(sigma_low(&tv(&[3, 3, 3])), 3);
        assert_eq!(sigma_low(&tv(&[2, 5, 1, 4])), 1);
    }

    #[test]
    fn vector_validation() {
        assert_eq!(ThresholdVector::new(vec![]), Err(Error::EmptyThresholds));
        assert_eq!(
            ThresholdVector::new(vec![3, 0]),
            Err(Error::InvalidThreshold(0))
        );
        let list = parse_threshold_list("10%,8%,5%").unwrap();
        assert_eq!(
            ThresholdVector::resolve(&list, 100).unwrap().sigmas(),
            &[10, 8, 5]
        );
        assert!(parse_threshold_list("4,,2").is_err());
    }

    #[test]
    fn frequent_star_examples() {
        let t = tv(&TABLE2_THRESHOLDS);
        assert!(is_frequent_star(1, 0, 4, &t));
        assert!(is_frequent_star(1, 0, 6, &t));
        assert!(!is_frequent_star(3, 1, 1, &t));
        assert!(!is_frequent_star(2, 4, u64::MAX, &t));
    }

    #[test]
    fn prefix_context() {
        let root = PrefixContext::root();
        assert_eq!(root.prefix_length(), 0);
        let child = root.project(ItemId(3)).project(ItemId(1));
        assert_eq!(child.prefix_length(), 2);
        assert_eq!(child.prefix_set(), &Itemset::from_ids([1, 3]));
    }

    #[test]
    fn table2_frequent_itemsets() {
        let db = table2();
        let result = mine_mlms(&db, &tv(&TABLE2_THRESHOLDS)).unwrap();
        let expected: BTreeSet<Itemset> = TABLE2_FREQUENT
            .iter()
            .map(|s| Itemset::new(s.iter().map(|l| db.item_by_label(l).unwrap())))
            .collect();
        let got: BTreeSet<Itemset> = result.frequent.iter().cloned().collect();
        assert_eq!(got, expected);
        let b = db.item_by_label("B").unwrap();
        assert!(result.frequent.iter().all(|s| !s.contains(b)));
        let everything = result.frequent.last().unwrap();
        assert_eq!(everything.len(), 5);
        assert_eq!(everything.support, Some(1));
    }

    #[test]
    fn empty_inputs() {
        let tree = IfpTree::build(&TransactionDatabase::default());
        assert!(ifp_mlms(&tree, &tv(&[1]), &PrefixContext::root()).is_empty());
        let r = mine_mlms(&TransactionDatabase::default(), &tv(&[1, 1])).unwrap();
        assert!(r.frequent.is_empty());
    }

    #[test]
    fn no_downward_closure() {
        // {0,1,2} occurs once; its pairs occur at most twice.
        let db = TransactionDatabase::from_rows([vec![0, 1, 2], vec![0, 1], vec![2]]);
        let r = mine_mlms(&db, &tv(&[1, 5, 1])).unwrap();
        let got: Vec<Itemset> = r.frequent;
        assert!(got.contains(&Itemset::from_ids([0, 1, 2])));
        assert!(!got.iter().any(|s| s.len() == 2));
    }
}
