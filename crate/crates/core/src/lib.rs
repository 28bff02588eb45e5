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

//! Minimally infrequent itemset mining and multiple-level minimum support
//! frequent itemset mining on inverse FP-trees.
//!
//! The IFP-tree stores transactions with items in ascending support order.
//! Both miners repeatedly split a tree on its least frequent item into the
//! *projected* tree (transactions containing the item, item removed) and the
//! *residual* tree (every transaction, item removed), and combine the
//! recursive results.

pub mod bench;
pub mod data;
pub mod error;
pub mod fixtures;
pub mod format;
pub mod mii;
pub mod mining;
pub mod mlms;
pub mod oracle;
pub mod synth;
pub mod tree;

pub use data::{
    iflist_order, parse_fimi, prune_infrequent_items, support, ItemId, Itemset, SupportThreshold,
    Transaction, TransactionDatabase,
};
pub use error::{Error, Result};
pub use mii::{
    apriori_min, apriori_min_with, ifp_min, ifp_min_db, ifp_min_with, unify, MiiAlgorithm,
    MiiResult,
};
pub use mining::{Algorithm, MineOptions};
pub use mlms::{
    ifp_mlms, ifp_mlms_with, is_frequent_star, mine_mlms, mine_mlms_with, sigma_low, MlmsOptions,
    MlmsResult, PrefixContext, ThresholdVector,
};
pub use oracle::{mii_oracle, mlms_oracle};
pub use synth::{gen_synthetic, SynthConfig};
pub use tree::IfpTree;
