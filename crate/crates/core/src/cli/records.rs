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

//! Row types emitted by the commands. Angles are in radians.

use serde::{Deserialize, Serialize};

use crate::quantumgame::SweepRecord;
use crate::Outcome;

/// `classical classify`.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct ClassifyRecord {
    pub p1: f64,
    pub p2: f64,
    pub p3: f64,
    pub p4: f64,
    pub p_win: f64,
    pub expected_payoff: f64,
    pub c: f64,
    pub s: f64,
    pub classification: String,
    pub mc_steps: Option<u64>,
    pub mc_mean_payoff: Option<f64>,
    pub mc_std_error: Option<f64>,
}

/// `classical simulate`, one row per simulated schedule.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct SimulateRecord {
    pub pattern: String,
    pub p_a: f64,
    pub p1: f64,
    pub p2: f64,
    pub p3: f64,
    pub p4: f64,
    pub steps: u64,
    pub seed: u64,
    pub analytic_p_win: f64,
    pub analytic_payoff: f64,
    pub mean_payoff: f64,
    pub std_error: f64,
    /// Every game in the pattern loses on its own and the simulated payoff
    /// is more than three standard errors above zero.
    pub effect: bool,
}

/// `classical region`, one row per Parrondo instance.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct RegionRecord {
    pub sample_index: u64,
    pub pattern: String,
    pub p_a: f64,
    pub p1: f64,
    pub p2: f64,
    pub p3: f64,
    pub p4: f64,
    pub b_p_win: f64,
    pub c: f64,
    pub s: f64,
    pub schedule_p_win: f64,
    pub schedule_payoff: f64,
    pub effect: bool,
    pub sim_mean_payoff: Option<f64>,
    pub sim_std_error: Option<f64>,
}

/// The twelve coin angles of one game.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct BlockColumns {
    pub b1_theta: f64,
    pub b1_phi: f64,
    pub b1_eta: f64,
    pub b2_theta: f64,
    pub b2_phi: f64,
    pub b2_eta: f64,
    pub b3_theta: f64,
    pub b3_phi: f64,
    pub b3_eta: f64,
    pub b4_theta: f64,
    pub b4_phi: f64,
    pub b4_eta: f64,
}

impl BlockColumns {
    pub fn from_slice(a: &[f64]) -> Self {
        BlockColumns {
            b1_theta: a[0],
            b1_phi: a[1],
            b1_eta: a[2],
            b2_theta: a[3],
            b2_phi: a[4],
            b2_eta: a[5],
            b3_theta: a[6],
            b3_phi: a[7],
            b3_eta: a[8],
            b4_theta: a[9],
            b4_phi: a[10],
            b4_eta: a[11],
        }
    }

    pub fn to_array(&self) -> [f64; 12] {
        [
            self.b1_theta, self.b1_phi, self.b1_eta, self.b2_theta, self.b2_phi, self.b2_eta,
            self.b3_theta, self.b3_phi, self.b3_eta, self.b4_theta, self.b4_phi, self.b4_eta,
        ]
    }
}

/// The nine initial-qubit angles.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct QubitColumns {
    pub q1_theta: f64,
    pub q1_phi: f64,
    pub q1_eta: f64,
    pub q2_theta: f64,
    pub q2_phi: f64,
    pub q2_eta: f64,
    pub q3_theta: f64,
    pub q3_phi: f64,
    pub q3_eta: f64,
}

/// `quantum play`.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct PlayRecord {
    pub initial: String,
    #[serde(flatten)]
    pub blocks: BlockColumns,
    /// Closed form when the initial state is a product, simulation otherwise.
    pub p_win: f64,
    pub p_win_sim: f64,
    pub closed_form: bool,
    pub expected_payoff: f64,
    pub classification: String,
    pub oracle_checked: bool,
}

/// `quantum sequence`: one row per game, then one for the whole sequence.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct SequenceRecord {
    pub label: String,
    pub p_win: f64,
    pub p_win_formula: Option<f64>,
    pub deviation: Option<f64>,
    pub formula_exact: bool,
    pub expected_payoff: f64,
    pub classification: String,
    pub effect: bool,
}

/// `quantum sweep`.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct SweepRow {
    pub index: u64,
    #[serde(flatten)]
    pub qubits: QubitColumns,
    #[serde(flatten)]
    pub blocks: BlockColumns,
    pub p_win: f64,
    pub expected_payoff: f64,
    pub classification: String,
    pub oracle_checked: bool,
}

impl From<&SweepRecord> for SweepRow {
    fn from(r: &SweepRecord) -> Self {
        let a = &r.angles;
        SweepRow {
            index: r.index,
            qubits: QubitColumns {
                q1_theta: a[0],
                q1_phi: a[1],
                q1_eta: a[2],
                q2_theta: a[3],
                q2_phi: a[4],
                q2_eta: a[5],
                q3_theta: a[6],
                q3_phi: a[7],
                q3_eta: a[8],
            },
            blocks: BlockColumns::from_slice(&a[9..]),
            p_win: r.p_win,
            expected_payoff: r.expected_payoff,
            classification: r.classification.to_string(),
            oracle_checked: r.oracle_checked,
        }
    }
}

impl TryFrom<&SweepRow> for SweepRecord {
    type Error = String;

    fn try_from(r: &SweepRow) -> Result<Self, Self::Error> {
        let q = &r.qubits;
        let mut angles = [0.0; 21];
        angles[..9].copy_from_slice(&[
            q.q1_theta, q.q1_phi, q.q1_eta, q.q2_theta, q.q2_phi, q.q2_eta, q.q3_theta, q.q3_phi, q.q3_eta,
        ]);
        angles[9..].copy_from_slice(&r.blocks.to_array());
        Ok(SweepRecord {
            index: r.index,
            angles,
            p_win: r.p_win,
            expected_payoff: r.expected_payoff,
            classification: r.classification.parse::<Outcome>()?,
            oracle_checked: r.oracle_checked,
        })
    }
}

/// `compare`: a classical game and its coin-matched quantum game.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct CompareRecord {
    pub index: u64,
    pub p1: f64,
    pub p2: f64,
    pub p3: f64,
    pub p4: f64,
    pub classical_p_win: f64,
    pub classical_classification: String,
    pub quantum_p_win: f64,
    pub quantum_classification: String,
    /// `quantum_p_win - classical_p_win`.
    pub difference: f64,
    pub oracle_checked: bool,
}
