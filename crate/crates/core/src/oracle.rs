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

//! Brute-force reference miners.
//!
//! These count supports by scanning raw transactions and share no code with
//! the tree-based or bitset-based miners they check.

use std::collections::{BTreeSet, HashSet};

use crate::data::{support, ItemId, Itemset, TransactionDatabase};
use crate::error::{Error, Result};
use crate::mlms::ThresholdVector;

/// Largest frequent-item count [`mii_oracle`] will enumerate over.
pub const MII_ORACLE_MAX_FREQUENT_ITEMS: usize = 25;
/// Longest transaction [`mlms_oracle`] will expand into subsets.
pub const MLMS_ORACLE_MAX_TRANSACTION_LEN: usize = 25;

/// All minimally infrequent itemsets, each annotated with its support.
///
/// Works level by level over frequent itemsets. Checking only the immediate
/// subsets of a candidate suffices: support is anti-monotone, so if every
/// `(k-1)`-subset is frequent then so is every smaller subset.
pub fn mii_oracle(db: &TransactionDatabase, sigma: u64) -> Result<BTreeSet<Itemset>> {
    if sigma < 1 {
        return Err(Error::InvalidThreshold(sigma));
    }
    let mut out = BTreeSet::new();
    let mut frequent_items: Vec<ItemId> = Vec::new();
    for &item in db.universe() {
        let single = Itemset::new([item]);
        let supp = support(db, &single);
        if supp < sigma {
            out.insert(single.with_support(supp));
        } else {
            frequent_items.push(item);
        }
    }
    if frequent_items.len() > MII_ORACLE_MAX_FREQUENT_ITEMS {
        return Err(Error::GuardViolation {
            what: "frequent item count",
            actual: frequent_items.len(),
            limit: MII_ORACLE_MAX_FREQUENT_ITEMS,
        });
    }

    let mut frequent: HashSet<Itemset> =
        frequent_items.iter().map(|&i| Itemset::new([i])).collect();
    let mut level: Vec<Itemset> = frequent.iter().cloned().collect();
    while !level.is_empty() {
        let mut next = Vec::new();
        let mut tried = HashSet::new();
        for set in &level {
            for &item in &frequent_items {
                if set.contains(item) {
                    continue;
                }
                let candidate = set.insert(item);
                if !tried.insert(candidate.clone()) {
                    continue;
                }
                if !candidate.immediate_subsets().all(|s| frequent.contains(&s)) {
                    continue;
                }
                let supp = support(db, &candidate);
                if supp < sigma {
                    out.insert(candidate.with_support(supp));
                } else {
                    next.push(candidate);
                }
            }
        }
        frequent.extend(next.iter().cloned());
        level = next;
    }
    Ok(out)
}

/// All itemsets of length `k ≤ L` occurring in some transaction with support
/// at least `σ_k`, each annotated with its support.
pub fn mlms_oracle(db: &TransactionDatabase, tv: &ThresholdVector) -> Result<BTreeSet<Itemset>> {
    let longest = db
        .transactions()
        .iter()
        .map(|t| t.items.len())
        .max()
        .unwrap_or(0);
    if longest > MLMS_ORACLE_MAX_TRANSACTION_LEN {
        return Err(Error::GuardViolation {
            what: "transaction length",
            actual: longest,
            limit: MLMS_ORACLE_MAX_TRANSACTION_LEN,
        });
    }
    let mut seen: HashSet<Itemset> = HashSet::new();
    for t in db.transactions() {
        let items = t.items.items();
        for mask in 1u32..(1u32 << items.len()) {
            if mask.count_ones() as usize > tv.max_len() {
                continue;
            }
            let subset = items
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, &item)| item);
            seen.insert(Itemset::new(subset));
        }
    }
    Ok(seen
        .into_iter()
        .filter_map(|s| {
            let supp = support(db, &s);
            let sigma = tv.sigma(s.len())?;
            (supp >= sigma).then(|| s.with_support(supp))
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{table1, table2, TABLE1_MIIS, TABLE2_FREQUENT, TABLE2_THRESHOLDS};

    fn named(db: &TransactionDatabase, sets: &[&[&str]]) -> BTreeSet<Itemset> {
        sets.iter()
            .map(|s| Itemset::new(s.iter().map(|l| db.item_by_label(l).unwrap())))
            .collect()
    }

    #[test]
    fn mii_table1() {
        let db = table1();
        assert_eq!(mii_oracle(&db, 2).unwrap(), named(&db, &TABLE1_MIIS));
    }

    #[test]
    fn mii_small_cases() {
        let one = TransactionDatabase::from_rows([vec![0, 1]]);
        assert!(mii_oracle(&one, 1).unwrap().is_empty());
        let two = TransactionDatabase::from_rows([vec![0], vec![1]]);
        let got = mii_oracle(&two, 1).unwrap();
        assert_eq!(got, BTreeSet::from([Itemset::from_ids([0, 1])]));
        assert_eq!(got.first().unwrap().support, Some(0));
    }

    #[test]
    fn mii_guard() {
        let db = TransactionDatabase::from_rows([(0..30).collect::<Vec<u32>>()]);
        assert!(matches!(
            mii_oracle(&db, 1),
            Err(Error::GuardViolation { actual: 30, .. })
        ));
    }

    #[test]
    fn mlms_table2() {
        let db = table2();
        let tv = ThresholdVector::new(TABLE2_THRESHOLDS.to_vec()).unwrap();
        assert_eq!(mlms_oracle(&db, &tv).unwrap(), named(&db, &TABLE2_FREQUENT));
    }

    #[test]
    fn mlms_single_threshold_one() {
        let db = table1();
        let tv = ThresholdVector::new(vec![1]).unwrap();
        let got = mlms_oracle(&db, &tv).unwrap();
        let expected: BTreeSet<Itemset> =
            db.universe().iter().map(|&i| Itemset::new([i])).collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn mlms_non_monotone() {
        let db = TransactionDatabase::from_rows([vec![0, 1, 2], vec![0, 1], vec![1, 2]]);
        let tv = ThresholdVector::new(vec![1, 5, 1]).unwrap();
        let got = mlms_oracle(&db, &tv).unwrap();
        assert!(got.contains(&Itemset::from_ids([0, 1, 2])));
        assert!(got.iter().all(|s| s.len() != 2));
    }

    #[test]
    fn mlms_guard() {
        let db = TransactionDatabase::from_rows([(0..26).collect::<Vec<u32>>()]);
        let tv = ThresholdVector::new(vec![1]).unwrap();
        assert!(matches!(
            mlms_oracle(&db, &tv),
            Err(Error::GuardViolation { .. })
        ));
    }
}
