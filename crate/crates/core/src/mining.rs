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

//! Run options and bookkeeping shared by every miner.

use std::fmt;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::Instant;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Algorithm {
    IfpMin,
    AprioriMin,
    MiiOracle,
    IfpMlms,
    MlmsOracle,
}

impl Algorithm {
    pub fn name(&self) -> &'static str {
        match self {
            Algorithm::IfpMin => "ifp_min",
            Algorithm::AprioriMin => "apriori_min",
            Algorithm::MiiOracle => "mii_oracle",
            Algorithm::IfpMlms => "ifp_mlms",
            Algorithm::MlmsOracle => "mlms_oracle",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Trees smaller than this are mined without forking.
pub(crate) const PARALLEL_MIN_NODES: usize = 64;

#[derive(Debug, Clone, Copy, Default)]
pub struct MineOptions {
    /// Mine the projected and residual branches with `rayon::join`. Output
    /// is identical either way.
    pub parallel: bool,
    /// Abort with [`Error::TimedOut`] once this instant has passed.
    pub deadline: Option<Instant>,
}

impl MineOptions {
    pub fn parallel() -> Self {
        MineOptions {
            parallel: true,
            deadline: None,
        }
    }
}

/// Per-run state threaded through a recursive miner.
#[derive(Debug)]
pub(crate) struct RunState {
    pub opts: MineOptions,
    peak_nodes: AtomicUsize,
}

impl RunState {
    pub fn new(opts: MineOptions) -> Self {
        RunState {
            opts,
            peak_nodes: AtomicUsize::new(0),
        }
    }

    pub fn check_deadline(&self) -> Result<()> {
        match self.opts.deadline {
            Some(d) if Instant::now() >= d => Err(Error::TimedOut),
            _ => Ok(()),
        }
    }

    pub fn observe_tree(&self, nodes: usize) {
        self.peak_nodes.fetch_max(nodes, Ordering::Relaxed);
    }

    pub fn peak_nodes(&self) -> usize {
        self.peak_nodes.load(Ordering::Relaxed)
    }

    pub fn fork(&self, nodes: usize) -> bool {
        self.opts.parallel && nodes >= PARALLEL_MIN_NODES
    }
}
