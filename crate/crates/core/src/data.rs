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

//! Transaction databases, itemsets and support counting.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ItemId(pub u32);

impl fmt::Display for ItemId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A canonical set of items: sorted ascending, no duplicates.
///
/// Equality, ordering and hashing consider only the items; `support` is an
/// annotation carried along for reporting.
#[derive(Debug, Clone, Default)]
pub struct Itemset {
    items: Vec<ItemId>,
    pub support: Option<u64>,
}

impl Itemset {
    pub fn new<I: IntoIterator<Item = ItemId>>(items: I) -> Self {
        let mut items: Vec<ItemId> = items.into_iter().collect();
        items.sort_unstable();
        items.dedup();
        Itemset {
            items,
            support: None,
        }
    }

    pub fn from_ids<I: IntoIterator<Item = u32>>(ids: I) -> Self {
        Itemset::new(ids.into_iter().map(ItemId))
    }

    /// Wraps an already sorted, duplicate-free vector.
    pub(crate) fn from_sorted(items: Vec<ItemId>) -> Self {
        debug_assert!(items.windows(2).all(|w| w[0] < w[1]));
        Itemset {
            items,
            support: None,
        }
    }

    pub fn empty() -> Self {
        Itemset::default()
    }

    pub fn with_support(mut self, support: u64) -> Self {
        self.support = Some(support);
        self
    }

    pub fn items(&self) -> &[ItemId] {
        &self.items
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn contains(&self, item: ItemId) -> bool {
        self.items.binary_search(&item).is_ok()
    }

    pub fn is_subset_of(&self, other: &Itemset) -> bool {
        is_sorted_subset(&self.items, &other.items)
    }

    pub fn insert(&self, item: ItemId) -> Itemset {
        match self.items.binary_search(&item) {
            Ok(_) => Itemset::from_sorted(self.items.clone()),
            Err(pos) => {
                let mut items = self.items.clone();
                items.insert(pos, item);
                Itemset::from_sorted(items)
            }
        }
    }

    pub fn without(&self, item: ItemId) -> Itemset {
        Itemset::from_sorted(self.items.iter().copied().filter(|&i| i != item).collect())
    }

    /// Subsets obtained by dropping exactly one item.
    pub fn immediate_subsets(&self) -> impl Iterator<Item = Itemset> + '_ {
        (0..self.items.len()).map(move |skip| {
            Itemset::from_sorted(
                self.items
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != skip)
                    .map(|(_, &item)| item)
                    .collect(),
            )
        })
    }

    /// Ordering used for reports: shorter itemsets first, then lexicographic.
    pub fn report_cmp(&self, other: &Itemset) -> std::cmp::Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.items.cmp(&other.items))
    }
}

impl PartialEq for Itemset {
    fn eq(&self, other: &Self) -> bool {
        self.items == other.items
    }
}

impl Eq for Itemset {}

impl std::hash::Hash for Itemset {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.items.hash(state);
    }
}

impl PartialOrd for Itemset {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Itemset {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.report_cmp(other)
    }
}

pub(crate) fn is_sorted_subset(small: &[ItemId], large: &[ItemId]) -> bool {
    if small.len() > large.len() {
        return false;
    }
    let mut rest = large.iter();
    'outer: for item in small {
        for candidate in rest.by_ref() {
            match candidate.cmp(item) {
                std::cmp::Ordering::Less => continue,
                std::cmp::Ordering::Equal => continue 'outer,
                std::cmp::Ordering::Greater => return false,
            }
        }
        return false;
    }
    true
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transaction {
    pub tid: usize,
    pub items: Itemset,
}

/// An immutable multiset of transactions with an optional label dictionary.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TransactionDatabase {
    transactions: Vec<Transaction>,
    labels: BTreeMap<ItemId, String>,
    universe: BTreeSet<ItemId>,
}

impl TransactionDatabase {
    /// Builds a database from raw item-id rows; tids are assigned in order.
    pub fn from_rows<R, I>(rows: R) -> Self
    where
        R: IntoIterator<Item = I>,
        I: IntoIterator<Item = u32>,
    {
        let transactions: Vec<Transaction> = rows
            .into_iter()
            .enumerate()
            .map(|(tid, row)| Transaction {
                tid,
                items: Itemset::from_ids(row),
            })
            .collect();
        let universe = transactions
            .iter()
            .flat_map(|t| t.items.items().iter().copied())
            .collect();
        TransactionDatabase {
            transactions,
            labels: BTreeMap::new(),
            universe,
        }
    }

    /// Builds a database from string-labelled rows. Labels are assigned ids
    /// in ascending label order, so `A < B < C` maps to `0 < 1 < 2`.
    pub fn from_labeled_rows<S: AsRef<str>>(rows: &[Vec<S>]) -> Self {
        let names: BTreeSet<&str> = rows
            .iter()
            .flat_map(|row| row.iter().map(|s| s.as_ref()))
            .collect();
        let ids: HashMap<&str, u32> = names
            .iter()
            .enumerate()
            .map(|(i, &name)| (name, i as u32))
            .collect();
        let mut db = TransactionDatabase::from_rows(
            rows.iter()
                .map(|row| row.iter().map(|s| ids[s.as_ref()]).collect::<Vec<_>>()),
        );
        db.labels = ids
            .into_iter()
            .map(|(name, id)| (ItemId(id), name.to_string()))
            .collect();
        db
    }

    pub fn transactions(&self) -> &[Transaction] {
        &self.transactions
    }

    pub fn len(&self) -> usize {
        self.transactions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.transactions.is_empty()
    }

    pub fn universe(&self) -> &BTreeSet<ItemId> {
        &self.universe
    }

    pub fn labels(&self) -> &BTreeMap<ItemId, String> {
        &self.labels
    }

    pub fn has_labels(&self) -> bool {
        !self.labels.is_empty()
    }

    pub fn set_labels(&mut self, labels: BTreeMap<ItemId, String>) {
        self.labels = labels;
    }

    /// Label of an item, falling back to its decimal id.
    pub fn label(&self, item: ItemId) -> String {
        self.labels
            .get(&item)
            .cloned()
            .unwrap_or_else(|| item.0.to_string())
    }

    /// Reverse label lookup.
    pub fn item_by_label(&self, label: &str) -> Option<ItemId> {
        self.labels
            .iter()
            .find(|(_, l)| l.as_str() == label)
            .map(|(&id, _)| id)
    }

    /// Keeps only the transactions selected by `keep`, renumbering tids.
    pub fn filter_transactions<F: FnMut(&Transaction) -> bool>(&self, mut keep: F) -> Self {
        let mut db = TransactionDatabase::from_rows(
            self.transactions
                .iter()
                .filter(|t| keep(t))
                .map(|t| t.items.items().iter().map(|i| i.0).collect::<Vec<_>>()),
        );
        db.labels = self.labels.clone();
        db
    }

    /// Support count of every item in the universe.
    pub fn item_supports(&self) -> BTreeMap<ItemId, u64> {
        let mut counts = BTreeMap::new();
        for t in &self.transactions {
            for &item in t.items.items() {
                *counts.entry(item).or_insert(0) += 1;
            }
        }
        counts
    }

    pub fn to_fimi(&self) -> String {
        let mut out = String::new();
        for t in &self.transactions {
            let line: Vec<String> = t.items.items().iter().map(|i| i.0.to_string()).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }
}

/// Parses FIMI text: one transaction per line, whitespace-separated item ids.
pub fn parse_fimi(text: &str) -> Result<TransactionDatabase> {
    let mut rows = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let mut row = Vec::new();
        for token in line.split_whitespace() {
            match token.parse::<u32>() {
                Ok(id) => row.push(id),
                Err(_) => {
                    let line = idx + 1;
                    let token = token.to_string();
                    return Err(
                        if token.starts_with('-') && token[1..].parse::<u64>().is_ok() {
                            Error::NegativeItem { line, token }
                        } else {
                            Error::Parse { line, token }
                        },
                    );
                }
            }
        }
        rows.push(row);
    }
    Ok(TransactionDatabase::from_rows(rows))
}

/// Parses an `id,label` CSV map.
pub fn parse_label_csv(text: &str) -> Result<BTreeMap<ItemId, String>> {
    let mut labels = BTreeMap::new();
    for (idx, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let (id, label) = line.split_once(',').ok_or_else(|| Error::Parse {
            line: idx + 1,
            token: line.to_string(),
        })?;
        let id = id.trim().parse::<u32>().map_err(|_| Error::Parse {
            line: idx + 1,
            token: id.to_string(),
        })?;
        labels.insert(ItemId(id), label.trim().to_string());
    }
    Ok(labels)
}

/// Vertical (item to transaction-bitset) index for fast repeated support
/// counting.
#[derive(Debug, Clone)]
pub struct TidIndex {
    sets: BTreeMap<ItemId, FixedBitSet>,
    num_transactions: usize,
}

impl TidIndex {
    pub fn new(db: &TransactionDatabase) -> Self {
        let n = db.len();
        let mut sets: BTreeMap<ItemId, FixedBitSet> = BTreeMap::new();
        for (row, t) in db.transactions().iter().enumerate() {
            for &item in t.items.items() {
                sets.entry(item)
                    .or_insert_with(|| FixedBitSet::with_capacity(n))
                    .insert(row);
            }
        }
        TidIndex {
            sets,
            num_transactions: n,
        }
    }

    pub fn tids(&self, item: ItemId) -> Option<&FixedBitSet> {
        self.sets.get(&item)
    }

    pub fn into_sets(self) -> BTreeMap<ItemId, FixedBitSet> {
        self.sets
    }

    pub fn support(&self, set: &Itemset) -> u64 {
        let mut items = set.items().iter();
        let Some(first) = items.next() else {
            return self.num_transactions as u64;
        };
        let Some(first) = self.sets.get(first) else {
            return 0;
        };
        let mut acc = first.clone();
        for item in items {
            match self.sets.get(item) {
                Some(tids) => acc.intersect_with(tids),
                None => return 0,
            }
        }
        acc.count_ones(..) as u64
    }
}

/// Number of transactions containing every item of `set`.
pub fn support(db: &TransactionDatabase, set: &Itemset) -> u64 {
    db.transactions
        .iter()
        .filter(|t| set.is_subset_of(&t.items))
        .count() as u64
}

/// Universe items ordered by ascending support, ties by ascending id.
pub fn iflist_order(db: &TransactionDatabase) -> Vec<ItemId> {
    order_by_support(&db.item_supports())
}

pub(crate) fn order_by_support(supports: &BTreeMap<ItemId, u64>) -> Vec<ItemId> {
    let mut order: Vec<(u64, ItemId)> = supports.iter().map(|(&i, &s)| (s, i)).collect();
    order.sort_unstable();
    order.into_iter().map(|(_, i)| i).collect()
}

/// Removes every item with support below `sigma` from every transaction.
///
/// Emptied transactions are kept. Returns the pruned items as 1-itemsets
/// annotated with their supports, in ascending id order.
pub fn prune_infrequent_items(
    db: &TransactionDatabase,
    sigma: u64,
) -> (TransactionDatabase, Vec<Itemset>) {
    let supports = db.item_supports();
    let infrequent: BTreeSet<ItemId> = supports
        .iter()
        .filter(|&(_, &s)| s < sigma)
        .map(|(&i, _)| i)
        .collect();
    if infrequent.is_empty() {
        return (db.clone(), Vec::new());
    }
    let pruned_rows = db.transactions.iter().map(|t| {
        t.items
            .items()
            .iter()
            .filter(|i| !infrequent.contains(i))
            .map(|i| i.0)
            .collect::<Vec<_>>()
    });
    let mut pruned = TransactionDatabase::from_rows(pruned_rows);
    pruned.labels = db.labels.clone();
    let singles = infrequent
        .into_iter()
        .map(|i| Itemset::from_sorted(vec![i]).with_support(supports[&i]))
        .collect();
    (pruned, singles)
}

/// A minimum support given either as an absolute count or as a fraction of
/// the number of transactions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SupportThreshold {
    Absolute(u64),
    Fraction(f64),
}

impl SupportThreshold {
    /// Resolves to an absolute count: fractions become
    /// `ceil(fraction * num_transactions)`.
    pub fn resolve(&self, num_transactions: usize) -> u64 {
        match *self {
            SupportThreshold::Absolute(n) => n,
            SupportThreshold::Fraction(f) => {
                let exact = f * num_transactions as f64;
                let nearest = exact.round();
                // 0.3 * 10000 is 3000.0000000000005 in binary floating point.
                if (exact - nearest).abs() <= 1e-9 * exact.max(1.0) {
                    nearest as u64
                } else {
                    exact.ceil() as u64
                }
            }
        }
    }
}

impl FromStr for SupportThreshold {
    type Err = Error;

    /// Accepts `N` (absolute count) or `P%` (percentage of transactions).
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::BadThreshold(s.to_string());
        if let Some(pct) = s.strip_suffix('%') {
            let p: f64 = pct.trim().parse().map_err(|_| bad())?;
            if !(0.0..=100.0).contains(&p) {
                return Err(bad());
            }
            Ok(SupportThreshold::Fraction(p / 100.0))
        } else {
            s.parse::<u64>()
                .map(SupportThreshold::Absolute)
                .map_err(|_| bad())
        }
    }
}

impl fmt::Display for SupportThreshold {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SupportThreshold::Absolute(n) => write!(f, "{n}"),
            SupportThreshold::Fraction(p) => write!(f, "{}%", p * 100.0),
        }
    }
}
