// Copyright 2026 The qparrondo Developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

use thiserror::Error;

/// Errors produced by the game, state and multiplexer operations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("non-finite value in {0}")]
    NonFinite(&'static str),
    #[error("state is not normalized: norm squared = {0}")]
    NotNormalized(f64),
    #[error("length {0} is not a power of two")]
    NotPowerOfTwo(usize),
    #[error("{what} has {found} qubits, limit is {limit}")]
    TooManyQubits {
        what: &'static str,
        found: usize,
        limit: usize,
    },
    #[error("empty {0}")]
    Empty(&'static str),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("{name} = {value} is outside [{lo}, {hi}]")]
    OutOfRange {
        name: &'static str,
        value: f64,
        lo: f64,
        hi: f64,
    },
    #[error("coin block is not special unitary: |a|^2 + |b|^2 = {0}")]
    NotUnitary(f64),
    #[error("degenerate history chain: {0}")]
    DegenerateChain(String),
    #[error("reducible history chain: {0}")]
    ReducibleChain(String),
    #[error("closed form {closed} disagrees with simulation {simulated} at point {index}")]
    OracleMismatch {
        index: u64,
        closed: f64,
        simulated: f64,
    },
    #[error("invalid sweep: {0}")]
    InvalidSweep(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_range(name: &'static str, value: f64, lo: f64, hi: f64) -> Result<f64> {
    if !value.is_finite() {
        return Err(Error::NonFinite(name));
    }
    if value < lo || value > hi {
        return Err(Error::OutOfRange { name, value, lo, hi });
    }
    Ok(value)
}
