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

//! Seeded Bernoulli transaction generator.
//!
//! The output is part of the file contract, so the draw procedure is fixed:
//! a `xoshiro256++` generator seeded with `seed` through SplitMix64 (the
//! `seed_from_u64` of `rand_xoshiro`) produces one `u64` per (item,
//! transaction) cell in item-major order, i.e. all transactions for item 0,
//! then all for item 1, and so on. A cell is set when the top 53 bits of its
//! draw, scaled to `[0, 1)`, fall below `density`.

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::Xoshiro256PlusPlus;

use crate::data::TransactionDatabase;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SynthConfig {
    pub num_items: u32,
    pub num_transactions: usize,
    pub density: f64,
    pub seed: u64,
}

pub fn gen_synthetic(cfg: &SynthConfig) -> Result<TransactionDatabase> {
    if !(0.0..=1.0).contains(&cfg.density) {
        return Err(Error::BadConfig(format!(
            "density {} not in [0, 1]",
            cfg.density
        )));
    }
    if cfg.num_items == 0 || cfg.num_transactions == 0 {
        return Err(Error::BadConfig(
            "item and transaction counts must be positive".into(),
        ));
    }
    let mut rng = Xoshiro256PlusPlus::seed_from_u64(cfg.seed);
    let mut rows: Vec<Vec<u32>> = vec![Vec::new(); cfg.num_transactions];
    for item in 0..cfg.num_items {
        for row in rows.iter_mut() {
            let unit = (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64);
            if unit < cfg.density {
                row.push(item);
            }
        }
    }
    Ok(TransactionDatabase::from_rows(rows))
}
