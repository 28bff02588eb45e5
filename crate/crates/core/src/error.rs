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

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: invalid item token {token:?}")]
    Parse { line: usize, token: String },

    #[error("line {line}: negative item id {token:?}")]
    NegativeItem { line: usize, token: String },

    #[error("invalid threshold {0:?}")]
    BadThreshold(String),

    #[error("support threshold must resolve to at least 1 (got {0})")]
    InvalidThreshold(u64),

    #[error("threshold vector is empty")]
    EmptyThresholds,

    #[error("tree has no items")]
    NoLfItem,

    #[error("item {0} is not the least frequent item of the tree")]
    NotLfItem(u32),

    #[error("oracle guard: {what} is {actual}, limit is {limit}")]
    GuardViolation {
        what: &'static str,
        actual: usize,
        limit: usize,
    },

    #[error("mining exceeded its deadline")]
    TimedOut,

    #[error("invalid synthetic config: {0}")]
    BadConfig(String),
}
