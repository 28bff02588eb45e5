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

//! Small worked-example databases.

use crate::data::TransactionDatabase;

/// Nine transactions over `A..F` (ids 0..5), the running example for
/// minimally infrequent itemset mining.
pub fn table1() -> TransactionDatabase {
    TransactionDatabase::from_labeled_rows(&[
        vec!["F", "E"],
        vec!["A", "B", "C"],
        vec!["A", "B"],
        vec!["A", "D"],
        vec!["A", "C", "D"],
        vec!["B", "C", "D"],
        vec!["E", "B"],
        vec!["E", "C"],
        vec!["E", "D"],
    ])
}

/// Six transactions over `A, B, C, D, T, W` (ids 0..5), the running example
/// for multiple-level minimum support mining.
pub fn table2() -> TransactionDatabase {
    TransactionDatabase::from_labeled_rows(&[
        vec!["A", "C", "T", "W"],
        vec!["C", "D", "W"],
        vec!["A", "C", "T", "W"],
        vec!["A", "D", "C", "W"],
        vec!["A", "T", "C", "W", "D"],
        vec!["C", "D", "T", "B"],
    ])
}

/// Minimally infrequent itemsets of [`table1`] at a minimum support of 2.
pub const TABLE1_MIIS: [&[&str]; 8] = [
    &["E", "B"],
    &["E", "C"],
    &["E", "D"],
    &["B", "D"],
    &["A", "B", "C"],
    &["A", "C", "D"],
    &["A", "E"],
    &["F"],
];

/// Per-length thresholds used with [`table2`].
pub const TABLE2_THRESHOLDS: [u64; 5] = [4, 4, 3, 2, 1];

/// Frequent itemsets of [`table2`] under [`TABLE2_THRESHOLDS`].
pub const TABLE2_FREQUENT: [&[&str]; 18] = [
    &["C"],
    &["W"],
    &["T"],
    &["D"],
    &["A"],
    &["C", "D"],
    &["C", "W"],
    &["C", "A"],
    &["W", "A"],
    &["C", "T"],
    &["C", "W", "T"],
    &["C", "W", "D"],
    &["C", "W", "A"],
    &["C", "T", "A"],
    &["W", "T", "A"],
    &["C", "W", "T", "A"],
    &["C", "D", "W", "A"],
    &["C", "W", "T", "D", "A"],
];
