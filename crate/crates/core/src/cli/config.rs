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

//! JSON run configuration.
//!
//! Every section and field is optional; missing values take the defaults
//! below. Unknown fields are rejected with the line and column of the
//! offending key. Angles are given in units of pi unless `angle_unit` is
//! `"rad"`.

use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::path::{Path, PathBuf};

use serde::Deserialize;

use super::emit::Format;
use super::CliError;
use crate::classical::{ClassicalHDGame, GameA, RegionSearch, SamplingMode};
use crate::multiplexer::{PolarBlock, PolarQubit};
use crate::quantumgame::{
    Axis, InitialStateSpec, QuantumHDGame, SweepMode, SweepSpec, DEFAULT_ORACLE_EVERY, PARAM_NAMES,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AngleUnit {
    #[default]
    Pi,
    Rad,
}

impl AngleUnit {
    pub fn to_radians(self, x: f64) -> f64 {
        match self {
            AngleUnit::Pi => x * PI,
            AngleUnit::Rad => x,
        }
    }
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct RunConfig {
    pub seed: Option<u64>,
    pub format: Option<Format>,
    pub oracle_every: Option<u64>,
    pub out: Option<PathBuf>,
    pub angle_unit: AngleUnit,
    pub classical: ClassicalConfig,
    pub quantum: QuantumConfig,
    pub compare: CompareConfig,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct ClassicalConfig {
    /// `p1..p4` of the history game.
    pub game: [f64; 4],
    /// Win probability of game A.
    pub game_a: f64,
    /// Periodic schedule over `A` and `B` for `simulate`.
    pub schedule: String,
    pub steps: u64,
    /// Monte Carlo plays used to cross-check `classify`; 0 disables.
    pub simulate_steps: u64,
    /// Region records (CSV or JSONL, by extension) to re-simulate instead of `schedule`.
    pub instances_file: Option<PathBuf>,
    pub region: RegionConfig,
}

impl Default for ClassicalConfig {
    fn default() -> Self {
        ClassicalConfig {
            game: [0.5; 4],
            game_a: 0.5,
            schedule: "B".into(),
            steps: 1_000_000,
            simulate_steps: 0,
            instances_file: None,
            region: RegionConfig::default(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SamplingModeConfig {
    #[default]
    Random,
    Grid,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct RegionConfig {
    pub budget: usize,
    pub mode: SamplingModeConfig,
    pub a_range: [f64; 2],
    pub b_ranges: [[f64; 2]; 4],
    pub patterns: Vec<String>,
    /// Monte Carlo plays per found instance; 0 disables.
    pub validate_steps: u64,
}

impl Default for RegionConfig {
    fn default() -> Self {
        let d = RegionSearch::default();
        RegionConfig {
            budget: d.budget,
            mode: SamplingModeConfig::Random,
            a_range: [d.a_range.0, d.a_range.1],
            b_ranges: d.b_ranges.map(|(lo, hi)| [lo, hi]),
            patterns: d.patterns,
            validate_steps: 0,
        }
    }
}

#[derive(Debug, Clone, Copy, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AnglesConfig {
    pub theta: f64,
    #[serde(default)]
    pub phi: f64,
    #[serde(default)]
    pub eta: f64,
}

#[derive(Debug, Clone, Copy, Default, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum InitialConfig {
    #[default]
    EqualSuperposition,
    Ghz,
    Product {
        qubits: [AnglesConfig; 3],
    },
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct QuantumConfig {
    pub initial: InitialConfig,
    /// The four coins of `play`, histories 00, 01, 10, 11.
    pub game: [AnglesConfig; 4],
    /// Games of `sequence`, in play order.
    pub sequence: Vec<[AnglesConfig; 4]>,
    pub sweep: SweepConfig,
}

impl Default for QuantumConfig {
    fn default() -> Self {
        QuantumConfig {
            initial: InitialConfig::default(),
            game: [AnglesConfig {
                theta: 0.0,
                phi: 0.0,
                eta: 0.0,
            }; 4],
            sequence: Vec::new(),
            sweep: SweepConfig::default(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SweepModeConfig {
    #[default]
    Grid,
    Random,
}

#[derive(Debug, Clone, Copy, Deserialize)]
#[serde(untagged, deny_unknown_fields)]
pub enum AxisConfig {
    Value { value: f64 },
    Range { range: [f64; 2], #[serde(default)] steps: u64 },
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct SweepConfig {
    pub mode: SweepModeConfig,
    /// Number of random points.
    pub samples: u64,
    /// Refuse grids larger than this.
    pub max_points: u64,
    /// Parameters by name; unnamed ones stay at the equal superposition with identity coins.
    pub params: BTreeMap<String, AxisConfig>,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            mode: SweepModeConfig::Grid,
            samples: 1000,
            max_points: 10_000_000,
            params: BTreeMap::new(),
        }
    }
}

#[derive(Debug, Clone, Copy, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PhaseConfig {
    #[serde(default)]
    pub phi: f64,
    #[serde(default)]
    pub eta: f64,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct CompareConfig {
    /// Classical `p1..p4` tuples; each is matched to coins with `|b_j|^2 = p_j`.
    pub games: Vec<[f64; 4]>,
    pub initial: InitialConfig,
    /// Coin phases shared by every compared game.
    pub phases: Option<[PhaseConfig; 4]>,
}

impl Default for CompareConfig {
    fn default() -> Self {
        CompareConfig {
            games: vec![[0.5; 4]],
            initial: InitialConfig::default(),
            phases: None,
        }
    }
}

pub fn load(path: &Path) -> Result<RunConfig, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Config(format!("{}: {e}", path.display())))?;
    parse(&text).map_err(|e| match e {
        CliError::Config(msg) => CliError::Config(format!("{}: {msg}", path.display())),
        other => other,
    })
}

pub fn parse(text: &str) -> Result<RunConfig, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::Config(e.to_string()))
}

fn field_err(field: impl std::fmt::Display, e: impl std::fmt::Display) -> CliError {
    CliError::Config(format!("{field}: {e}"))
}

impl RunConfig {
    pub fn classical_game(&self) -> Result<ClassicalHDGame, CliError> {
        ClassicalHDGame::new(self.classical.game).map_err(|e| field_err("classical.game", e))
    }

    pub fn game_a(&self) -> Result<GameA, CliError> {
        GameA::new(self.classical.game_a).map_err(|e| field_err("classical.game_a", e))
    }

    pub fn region_search(&self) -> Result<RegionSearch, CliError> {
        let r = &self.classical.region;
        for (i, [lo, hi]) in std::iter::once(&r.a_range).chain(&r.b_ranges).enumerate() {
            if !(0.0..=1.0).contains(lo) || !(0.0..=1.0).contains(hi) || lo > hi {
                let name = if i == 0 { "a_range".to_string() } else { format!("b_ranges[{}]", i - 1) };
                return Err(field_err(
                    format!("classical.region.{name}"),
                    format!("[{lo}, {hi}] is not an interval inside [0, 1]"),
                ));
            }
        }
        Ok(RegionSearch {
            budget: r.budget,
            mode: match r.mode {
                SamplingModeConfig::Random => SamplingMode::Random,
                SamplingModeConfig::Grid => SamplingMode::Grid,
            },
            a_range: (r.a_range[0], r.a_range[1]),
            b_ranges: r.b_ranges.map(|[lo, hi]| (lo, hi)),
            patterns: r.patterns.clone(),
        })
    }

    fn rad(&self, x: f64) -> f64 {
        self.angle_unit.to_radians(x)
    }

    pub fn block(&self, field: &str, a: &AnglesConfig) -> Result<PolarBlock, CliError> {
        PolarBlock::new(self.rad(a.theta), self.rad(a.phi), self.rad(a.eta)).map_err(|e| field_err(field, e))
    }

    pub fn quantum_game(&self, field: &str, blocks: &[AnglesConfig; 4]) -> Result<QuantumHDGame, CliError> {
        let mut out = [PolarBlock::identity(); 4];
        for (j, (o, b)) in out.iter_mut().zip(blocks).enumerate() {
            *o = self.block(&format!("{field}[{j}]"), b)?;
        }
        Ok(QuantumHDGame::new(out))
    }

    pub fn initial_state(&self, field: &str, init: &InitialConfig) -> Result<InitialStateSpec, CliError> {
        Ok(match init {
            InitialConfig::EqualSuperposition => InitialStateSpec::EqualSuperposition,
            InitialConfig::Ghz => InitialStateSpec::Ghz,
            InitialConfig::Product { qubits } => {
                let mut out = [PolarQubit::plus(); 3];
                for (k, (o, q)) in out.iter_mut().zip(qubits).enumerate() {
                    *o = PolarQubit::new(self.rad(q.theta), self.rad(q.phi), self.rad(q.eta))
                        .map_err(|e| field_err(format!("{field}.qubits[{k}]"), e))?;
                }
                InitialStateSpec::Product(out)
            }
        })
    }

    pub fn compare_game(&self, index: usize, p: &[f64; 4]) -> Result<(ClassicalHDGame, QuantumHDGame), CliError> {
        let field = format!("compare.games[{index}]");
        let classical = ClassicalHDGame::new(*p).map_err(|e| field_err(&field, e))?;
        let zero = PhaseConfig { phi: 0.0, eta: 0.0 };
        let phases = self.compare.phases.unwrap_or([zero; 4]);
        let mut blocks = [PolarBlock::identity(); 4];
        for (j, (b, (pj, ph))) in blocks.iter_mut().zip(p.iter().zip(&phases)).enumerate() {
            let theta = 2.0 * pj.sqrt().asin();
            *b = PolarBlock::new(theta, self.rad(ph.phi), self.rad(ph.eta))
                .map_err(|e| field_err(format!("compare.phases[{j}]"), e))?;
        }
        Ok((classical, QuantumHDGame::new(blocks)))
    }

    pub fn sweep_spec(&self, oracle_every: u64) -> Result<SweepSpec, CliError> {
        let s = &self.quantum.sweep;
        let mut axes = SweepSpec::equal_superposition_axes();
        for (name, axis) in &s.params {
            let i = PARAM_NAMES
                .iter()
                .position(|n| n == name)
                .ok_or_else(|| field_err(format!("quantum.sweep.params.{name}"), "unknown parameter"))?;
            axes[i] = match *axis {
                AxisConfig::Value { value } => Axis::Fixed(self.rad(value)),
                AxisConfig::Range { range: [lo, hi], steps } => Axis::Range {
                    lo: self.rad(lo),
                    hi: self.rad(hi),
                    steps,
                },
            };
        }
        let mode = match s.mode {
            SweepModeConfig::Grid => SweepMode::Grid,
            SweepModeConfig::Random => SweepMode::Random { samples: s.samples },
        };
        let spec = SweepSpec::new(axes, mode, oracle_every).map_err(|e| field_err("quantum.sweep", e))?;
        if spec.len() > s.max_points {
            return Err(field_err(
                "quantum.sweep",
                format!("{} points exceed max_points = {}", spec.len(), s.max_points),
            ));
        }
        Ok(spec)
    }
}

pub fn default_oracle_every() -> u64 {
    DEFAULT_ORACLE_EVERY
}
