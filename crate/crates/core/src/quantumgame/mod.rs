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

//! Quantized history-dependent Parrondo game on three qubits.
//!
//! Qubits 1 and 2 carry the history, qubit 3 the outcome. A game is a
//! multiplexer of four coins selected by the history bits, played on an
//! initial state that is by default un-entangled. Every closed-form win
//! probability in this module has a simulation counterpart built from
//! [`crate::qcore`] and [`crate::multiplexer`], and the two are expected to
//! agree to [`ORACLE_TOLERANCE`].

mod sweep;

pub use sweep::{sweep, Axis, SweepIter, SweepMode, SweepRecord, SweepSpec, DEFAULT_ORACLE_EVERY};

use std::f64::consts::{FRAC_1_SQRT_2, PI};

use crate::error::{check_range, Error, Result};
use crate::multiplexer::{compose, Multiplexer, PolarBlock, PolarQubit};
use crate::qcore::{tensor, win_probability, PureState};
use crate::Outcome;

/// Agreement required between a closed form and the simulation oracle.
pub const ORACLE_TOLERANCE: f64 = 1e-12;
/// `|p - 1/2|` at or below this is a fair game.
pub const FAIR_TOLERANCE: f64 = 1e-12;

/// Names of the 21 real parameters of a single game, in canonical order:
/// the three initial qubits followed by the four coins.
pub const PARAM_NAMES: [&str; 21] = [
    "q1_theta", "q1_phi", "q1_eta", "q2_theta", "q2_phi", "q2_eta", "q3_theta", "q3_phi", "q3_eta",
    "b1_theta", "b1_phi", "b1_eta", "b2_theta", "b2_phi", "b2_eta", "b3_theta", "b3_phi", "b3_eta",
    "b4_theta", "b4_phi", "b4_eta",
];

/// Four coins, one per history `00, 01, 10, 11`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuantumHDGame {
    blocks: [PolarBlock; 4],
}

impl QuantumHDGame {
    pub fn new(blocks: [PolarBlock; 4]) -> Self {
        QuantumHDGame { blocks }
    }

    pub fn identity() -> Self {
        Self::new([PolarBlock::identity(); 4])
    }

    /// Real rotations with the given angles and zero phases.
    pub fn zero_phase(thetas: [f64; 4]) -> Result<Self> {
        let mut blocks = [PolarBlock::identity(); 4];
        for (b, t) in blocks.iter_mut().zip(thetas) {
            *b = PolarBlock::rotation(t)?;
        }
        Ok(Self::new(blocks))
    }

    pub fn blocks(&self) -> &[PolarBlock; 4] {
        &self.blocks
    }

    pub fn multiplexer(&self) -> Multiplexer {
        Multiplexer::from_polar(&self.blocks).expect("four blocks form a three-qubit multiplexer")
    }

    /// The game whose multiplexer is the adjoint of this one.
    pub fn adjoint(&self) -> Self {
        Self::new(self.blocks.map(|b| b.adjoint()))
    }

    fn has_zero_phases(&self) -> bool {
        self.blocks.iter().all(|b| b.phi() == 0.0 && b.eta() == 0.0)
    }
}

/// Initial three-qubit state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum InitialStateSpec {
    Product([PolarQubit; 3]),
    EqualSuperposition,
    /// `(|000> + |111>) / sqrt(2)`, for comparison with the entangled protocol.
    Ghz,
}

impl InitialStateSpec {
    /// Product angles, if this spec is a product state.
    pub fn product_qubits(&self) -> Option<[PolarQubit; 3]> {
        match self {
            InitialStateSpec::Product(q) => Some(*q),
            InitialStateSpec::EqualSuperposition => Some([PolarQubit::plus(); 3]),
            InitialStateSpec::Ghz => None,
        }
    }
}

/// Win probability, payoff and its sign.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WinReport {
    pub p_win: f64,
    pub expected_payoff: f64,
    pub classification: Outcome,
}

impl WinReport {
    pub fn from_probability(p_win: f64) -> Self {
        WinReport {
            p_win,
            expected_payoff: 2.0 * p_win - 1.0,
            classification: classify_probability(p_win),
        }
    }
}

pub fn classify_probability(p: f64) -> Outcome {
    if (p - 0.5).abs() <= FAIR_TOLERANCE {
        Outcome::Fair
    } else if p > 0.5 {
        Outcome::Winning
    } else {
        Outcome::Losing
    }
}

/// `2p - 1` for unit stakes.
pub fn expected_payoff(p: f64) -> Result<f64> {
    Ok(2.0 * check_range("probability", p, 0.0, 1.0)? - 1.0)
}

pub fn build_initial_state(spec: &InitialStateSpec) -> Result<PureState> {
    match spec {
        InitialStateSpec::Product(qubits) => {
            let factors: Vec<PureState> = qubits.iter().map(PolarQubit::to_state).collect();
            tensor(&factors)
        }
        InitialStateSpec::EqualSuperposition => PureState::uniform(3),
        InitialStateSpec::Ghz => {
            let h = FRAC_1_SQRT_2;
            PureState::from_real(&[h, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, h])
        }
    }
}

pub fn play(game: &QuantumHDGame, initial: &PureState) -> Result<PureState> {
    game.multiplexer().apply(initial)
}

/// Win probability measured on the simulated output state.
pub fn pwin_quantum_sim(game: &QuantumHDGame, spec: &InitialStateSpec) -> Result<WinReport> {
    let out = play(game, &build_initial_state(spec)?)?;
    Ok(WinReport::from_probability(win_probability(&out)))
}

/// Closed-form win probability over the 21 polar angles.
///
/// With `q_k = (e^{i phi_k} cos(theta_k/2), e^{i eta_k} sin(theta_k/2))` and
/// coin `j` given by `(theta_j, phi_j, eta_j)`, the win amplitude of history
/// `j` has squared modulus
///
/// ```text
/// cos^2(theta_j/2) sin^2(theta_3/2) + sin^2(theta_j/2) cos^2(theta_3/2)
///     - 1/2 sin(theta_j) sin(theta_3) cos(phi_j - eta_j + phi_3 - eta_3)
/// ```
///
/// weighted by the history probability `|q_1r|^2 |q_2s|^2`. Note the half
/// angles on the target qubit and `phi_j` (not `theta_j`) inside the cosine.
pub fn pwin_quantum_closed(qubits: &[PolarQubit; 3], blocks: &[PolarBlock; 4]) -> f64 {
    let half_sq = |t: f64| {
        let (s, c) = (t / 2.0).sin_cos();
        (c * c, s * s)
    };
    let (q1_zero, q1_one) = half_sq(qubits[0].theta());
    let (q2_zero, q2_one) = half_sq(qubits[1].theta());
    let weights = [q1_zero * q2_zero, q1_zero * q2_one, q1_one * q2_zero, q1_one * q2_one];

    let q3 = &qubits[2];
    let (q3_zero, q3_one) = half_sq(q3.theta());
    let q3_sin = q3.theta().sin();
    let q3_phase = q3.phi() - q3.eta();

    weights
        .iter()
        .zip(blocks)
        .map(|(w, b)| {
            let (c2, s2) = half_sq(b.theta());
            let cross = 0.5 * b.theta().sin() * q3_sin * (b.phi() - b.eta() + q3_phase).cos();
            w * (c2 * q3_one + s2 * q3_zero - cross)
        })
        .sum()
}

/// `1/2 - 1/8 sum_j sin(theta_j) cos(eta_j - phi_j)` for the equal superposition.
pub fn pwin_equal_superposition(blocks: &[PolarBlock; 4]) -> f64 {
    0.5 - blocks
        .iter()
        .map(|b| b.theta().sin() * (b.eta() - b.phi()).cos())
        .sum::<f64>()
        / 8.0
}

/// Single multiplexer equivalent to playing `games` in order.
pub fn sequence_multiplexer(games: &[QuantumHDGame]) -> Result<Multiplexer> {
    let (first, rest) = games.split_first().ok_or(Error::Empty("game sequence"))?;
    rest.iter()
        .try_fold(first.multiplexer(), |acc, g| compose(&acc, &g.multiplexer()))
}

/// Compose the games, apply once, then measure.
pub fn play_sequence(games: &[QuantumHDGame], spec: &InitialStateSpec) -> Result<WinReport> {
    let m = sequence_multiplexer(games)?;
    let out = m.apply(&build_initial_state(spec)?)?;
    Ok(WinReport::from_probability(win_probability(&out)))
}

fn check_theta_table(theta: &[[f64; 4]]) -> Result<()> {
    if theta.is_empty() {
        return Err(Error::Empty("angle table"));
    }
    for row in theta {
        for &t in row {
            check_range("block theta", t, 0.0, PI)?;
        }
    }
    Ok(())
}

/// `1/2 - 1/8 sum_j sin(sum_k theta_j^k)` for `n` games with rows `k`.
///
/// Exact for the equal superposition with every phase zero, where composed
/// coins are rotations by the summed angle.
pub fn pwin_sequence_formula(theta: &[[f64; 4]]) -> Result<f64> {
    check_theta_table(theta)?;
    let sum: f64 = (0..4)
        .map(|j| theta.iter().map(|row| row[j]).sum::<f64>().sin())
        .sum();
    Ok(0.5 - sum / 8.0)
}

/// The sequence formula measured against the composed simulation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SequenceFormulaCheck {
    pub formula: f64,
    pub simulated: f64,
    pub deviation: f64,
    /// All phases zero: the formula is exact here and `deviation` must be
    /// within [`ORACLE_TOLERANCE`].
    pub exact_domain: bool,
}

/// Evaluate the sequence formula from the games' `theta` angles and compare
/// it with the simulated sequence on the equal superposition.
pub fn check_sequence_formula(games: &[QuantumHDGame]) -> Result<SequenceFormulaCheck> {
    let theta: Vec<[f64; 4]> = games
        .iter()
        .map(|g| g.blocks.map(|b| b.theta()))
        .collect();
    let formula = pwin_sequence_formula(&theta)?;
    let simulated = play_sequence(games, &InitialStateSpec::EqualSuperposition)?.p_win;
    Ok(SequenceFormulaCheck {
        formula,
        simulated,
        deviation: (formula - simulated).abs(),
        exact_domain: games.iter().all(QuantumHDGame::has_zero_phases),
    })
}

/// Per-game and sequence win probabilities for a zero-phase table played on
/// the equal superposition.
#[derive(Debug, Clone, PartialEq)]
pub struct QuantumParrondoReport {
    pub singles: Vec<f64>,
    pub sequence_formula: f64,
    pub sequence_simulated: f64,
    /// Two or more games, each losing on its own, whose sequence wins.
    pub effect: bool,
}

pub fn detect_quantum_parrondo(theta: &[[f64; 4]]) -> Result<QuantumParrondoReport> {
    check_theta_table(theta)?;
    let games = theta
        .iter()
        .map(|row| QuantumHDGame::zero_phase(*row))
        .collect::<Result<Vec<_>>>()?;
    let singles: Vec<f64> = games.iter().map(|g| pwin_equal_superposition(g.blocks())).collect();
    let check = check_sequence_formula(&games)?;
    if check.deviation > ORACLE_TOLERANCE {
        return Err(Error::OracleMismatch {
            index: 0,
            closed: check.formula,
            simulated: check.simulated,
        });
    }
    let effect = games.len() >= 2
        && singles.iter().all(|&p| classify_probability(p) == Outcome::Losing)
        && classify_probability(check.simulated) == Outcome::Winning;
    Ok(QuantumParrondoReport {
        singles,
        sequence_formula: check.formula,
        sequence_simulated: check.simulated,
        effect,
    })
}

/// One point of the 21-parameter space.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuantumPoint {
    pub qubits: [PolarQubit; 3],
    pub game: QuantumHDGame,
}

impl QuantumPoint {
    /// Angles in [`PARAM_NAMES`] order.
    pub fn to_array(&self) -> [f64; 21] {
        let mut out = [0.0; 21];
        for (i, q) in self.qubits.iter().enumerate() {
            out[3 * i..3 * i + 3].copy_from_slice(&[q.theta(), q.phi(), q.eta()]);
        }
        for (j, b) in self.game.blocks.iter().enumerate() {
            out[9 + 3 * j..12 + 3 * j].copy_from_slice(&[b.theta(), b.phi(), b.eta()]);
        }
        out
    }

    pub fn from_array(a: &[f64; 21]) -> Result<Self> {
        let mut qubits = [PolarQubit::plus(); 3];
        for (i, q) in qubits.iter_mut().enumerate() {
            *q = PolarQubit::new(a[3 * i], a[3 * i + 1], a[3 * i + 2])?;
        }
        let mut blocks = [PolarBlock::identity(); 4];
        for (j, b) in blocks.iter_mut().enumerate() {
            let k = 9 + 3 * j;
            *b = PolarBlock::new(a[k], a[k + 1], a[k + 2])?;
        }
        Ok(QuantumPoint {
            qubits,
            game: QuantumHDGame::new(blocks),
        })
    }

    pub fn pwin_closed(&self) -> f64 {
        pwin_quantum_closed(&self.qubits, &self.game.blocks)
    }

    pub fn pwin_sim(&self) -> Result<f64> {
        Ok(pwin_quantum_sim(&self.game, &InitialStateSpec::Product(self.qubits))?.p_win)
    }
}
