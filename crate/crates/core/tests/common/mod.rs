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

#![allow(dead_code)]

use std::collections::BTreeSet;

use ifpmine::{ItemId, Itemset, TransactionDatabase};
use proptest::prelude::*;

/// Databases over at most `max_items` items with up to `max_tx` transactions.
pub fn arb_db(max_items: u32, max_tx: usize) -> impl Strategy<Value = TransactionDatabase> {
    (1..=max_items).prop_flat_map(move |n| {
        prop::collection::vec(
            prop::collection::btree_set(0..n, 0..=n as usize),
            0..=max_tx,
        )
        .prop_map(|rows| TransactionDatabase::from_rows(rows.into_iter().map(|r| r.into_iter())))
    })
}

pub fn arb_itemset(max_items: u32) -> impl Strategy<Value = Itemset> {
    prop::collection::btree_set(0..max_items, 0..=4).prop_map(Itemset::from_ids)
}

/// Transactions containing `x`, with `x` removed.
pub fn projected_db(db: &TransactionDatabase, x: ItemId) -> TransactionDatabase {
    TransactionDatabase::from_rows(
        db.transactions()
            .iter()
            .filter(|t| t.items.contains(x))
            .map(|t| ids(&t.items.without(x))),
    )
}

/// Every transaction with `x` removed.
pub fn residual_db(db: &TransactionDatabase, x: ItemId) -> TransactionDatabase {
    TransactionDatabase::from_rows(db.transactions().iter().map(|t| ids(&t.items.without(x))))
}

pub fn ids(s: &Itemset) -> Vec<u32> {
    s.items().iter().map(|i| i.0).collect()
}

pub fn set_of(v: Vec<Itemset>) -> BTreeSet<Itemset> {
    v.into_iter().collect()
}
