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

//! Text and JSON renderings of mined itemsets.

use serde_json::{json, Value};

use crate::data::{Itemset, TransactionDatabase};

fn sorted(sets: &[Itemset]) -> Vec<&Itemset> {
    let mut v: Vec<&Itemset> = sets.iter().collect();
    v.sort_by(|a, b| a.report_cmp(b));
    v
}

/// One itemset per line, labels space-separated, then `(support)`:
/// `B D (1)`. Lines are ordered by length, then lexicographically.
pub fn render_text(sets: &[Itemset], db: &TransactionDatabase) -> String {
    let mut out = String::new();
    for set in sorted(sets) {
        let labels: Vec<String> = set.items().iter().map(|&i| db.label(i)).collect();
        out.push_str(&labels.join(" "));
        if let Some(s) = set.support {
            out.push_str(&format!(" ({s})"));
        }
        out.push('\n');
    }
    out
}

/// A JSON array of `{"items": [..], "support": n}`. Items are numeric ids
/// for unlabelled databases and label strings otherwise.
pub fn render_json(sets: &[Itemset], db: &TransactionDatabase) -> String {
    let rows: Vec<Value> = sorted(sets)
        .into_iter()
        .map(|set| {
            let items: Vec<Value> = set
                .items()
                .iter()
                .map(|&i| {
                    if db.has_labels() {
                        Value::from(db.label(i))
                    } else {
                        Value::from(i.0)
                    }
                })
                .collect();
            json!({ "items": items, "support": set.support })
        })
        .collect();
    let mut text = serde_json::to_string_pretty(&Value::Array(rows)).expect("plain JSON values");
    text.push('\n');
    text
}
