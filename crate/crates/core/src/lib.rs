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

//! Classical and quantum history-dependent Parrondo games.
//!
//! The classical side covers the four-coin history game, its stationary
//! Markov analysis, Monte Carlo play of game schedules and a brute-force
//! search for the Parrondo effect. The quantum side plays the game as a
//! block-diagonal multiplexer on three qubits starting from an un-entangled
//! state, with closed-form win probabilities checked against a small
//! state-vector simulator.
//!
//! ```
//! use qparrondo::quantumgame::{detect_quantum_parrondo};
//! use std::f64::consts::PI;
//!
//! let t = 0.75 * PI;
//! let report = detect_quantum_parrondo(&[[t; 4], [t; 4]]).unwrap();
//! assert!(report.effect);
//! assert!((report.sequence_simulated - 1.0).abs() < 1e-12);
//! ```

pub mod classical;
pub mod cli;
pub mod error;
pub mod multiplexer;
pub mod qcore;
pub mod quantumgame;

pub use error::{Error, Result};

/// Sign of a game's expected payoff.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Outcome {
    Winning,
    Fair,
    Losing,
}

impl Outcome {
    pub fn as_str(&self) -> &'static str {
        match self {
            Outcome::Winning => "winning",
            Outcome::Fair => "fair",
            Outcome::Losing => "losing",
        }
    }
}

impl std::fmt::Display for Outcome {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Outcome {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "winning" => Ok(Outcome::Winning),
            "fair" => Ok(Outcome::Fair),
            "losing" => Ok(Outcome::Losing),
            other => Err(format!("unknown classification {other:?}")),
        }
    }
}
