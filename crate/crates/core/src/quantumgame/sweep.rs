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

//! Streaming sweeps over the 21 game parameters.

use std::f64::consts::{PI, TAU};
use std::vec::IntoIter;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{classify_probability, QuantumPoint, ORACLE_TOLERANCE, PARAM_NAMES};
use crate::error::{Error, Result};
use crate::Outcome;

pub const DEFAULT_ORACLE_EVERY: u64 = 1000;

/// Points evaluated in parallel before they are handed out in order.
const CHUNK: u64 = 4096;

/// How one parameter varies across the sweep.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Axis {
    Fixed(f64),
    /// `steps` evenly spaced values from `lo` to `hi` inclusive in grid mode;
    /// uniform draws from `[lo, hi]` in random mode, where `steps` is unused.
    Range { lo: f64, hi: f64, steps: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepMode {
    Grid,
    Random { samples: u64 },
}

/// A validated sweep description.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    axes: [Axis; 21],
    mode: SweepMode,
    oracle_every: u64,
    total: u64,
}

fn legal_bounds(param: usize) -> (f64, f64) {
    if param % 3 == 0 {
        (0.0, PI)
    } else {
        (0.0, TAU)
    }
}

impl SweepSpec {
    pub fn new(axes: [Axis; 21], mode: SweepMode, oracle_every: u64) -> Result<Self> {
        if oracle_every == 0 {
            return Err(Error::InvalidSweep("oracle cadence must be at least 1".into()));
        }
        for (i, axis) in axes.iter().enumerate() {
            let (lo_ok, hi_ok) = legal_bounds(i);
            let name = PARAM_NAMES[i];
            let (lo, hi) = match *axis {
                Axis::Fixed(v) => (v, v),
                Axis::Range { lo, hi, .. } => (lo, hi),
            };
            if !lo.is_finite() || !hi.is_finite() || lo > hi {
                return Err(Error::InvalidSweep(format!("{name}: bad interval [{lo}, {hi}]")));
            }
            if lo < lo_ok || hi > hi_ok {
                return Err(Error::InvalidSweep(format!(
                    "{name}: [{lo}, {hi}] leaves the legal range [{lo_ok}, {hi_ok}]"
                )));
            }
        }
        let total = match mode {
            SweepMode::Random { samples } => samples,
            SweepMode::Grid => axes.iter().try_fold(1u64, |acc, axis| match axis {
                Axis::Fixed(_) => Some(acc),
                Axis::Range { steps, .. } => acc.checked_mul(*steps),
            })
            .ok_or_else(|| Error::InvalidSweep("grid point count overflows u64".into()))?,
        };
        Ok(SweepSpec {
            axes,
            mode,
            oracle_every,
            total,
        })
    }

    /// Axes fixing the equal-superposition initial state and identity coins.
    pub fn equal_superposition_axes() -> [Axis; 21] {
        let mut axes = [Axis::Fixed(0.0); 21];
        for q in 0..3 {
            axes[3 * q] = Axis::Fixed(PI / 2.0);
        }
        axes
    }

    pub fn axes(&self) -> &[Axis; 21] {
        &self.axes
    }

    pub fn mode(&self) -> SweepMode {
        self.mode
    }

    pub fn oracle_every(&self) -> u64 {
        self.oracle_every
    }

    /// Number of records the sweep will produce.
    pub fn len(&self) -> u64 {
        self.total
    }

    pub fn is_empty(&self) -> bool {
        self.total == 0
    }

    fn point(&self, index: u64, seed: u64) -> [f64; 21] {
        let mut out = [0.0; 21];
        match self.mode {
            SweepMode::Random { .. } => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                rng.set_stream(index);
                for (v, axis) in out.iter_mut().zip(&self.axes) {
                    *v = match *axis {
                        Axis::Fixed(x) => x,
                        Axis::Range { lo, hi, .. } => rng.gen_range(lo..=hi),
                    };
                }
            }
            SweepMode::Grid => {
                // Last axis varies fastest.
                let mut rem = index;
                for (v, axis) in out.iter_mut().zip(&self.axes).rev() {
                    *v = match *axis {
                        Axis::Fixed(x) => x,
                        Axis::Range { lo, hi, steps } => {
                            let i = rem % steps;
                            rem /= steps;
                            if i + 1 == steps {
                                if steps == 1 {
                                    lo
                                } else {
                                    hi
                                }
                            } else {
                                lo + (hi - lo) * i as f64 / (steps - 1) as f64
                            }
                        }
                    };
                }
            }
        }
        out
    }
}

/// One evaluated parameter point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRecord {
    pub index: u64,
    /// Radians, in [`PARAM_NAMES`] order.
    pub angles: [f64; 21],
    pub p_win: f64,
    pub expected_payoff: f64,
    pub classification: Outcome,
    /// The closed form was checked against the simulation at this point.
    pub oracle_checked: bool,
}

fn evaluate(spec: &SweepSpec, index: u64, seed: u64) -> Result<SweepRecord> {
    let angles = spec.point(index, seed);
    let point = QuantumPoint::from_array(&angles)?;
    let p_win = point.pwin_closed();
    let oracle_checked = index % spec.oracle_every == 0;
    if oracle_checked {
        let simulated = point.pwin_sim()?;
        if (simulated - p_win).abs() > ORACLE_TOLERANCE {
            return Err(Error::OracleMismatch {
                index,
                closed: p_win,
                simulated,
            });
        }
    }
    Ok(SweepRecord {
        index,
        angles,
        p_win,
        expected_payoff: 2.0 * p_win - 1.0,
        classification: classify_probability(p_win),
        oracle_checked,
    })
}

/// Ordered stream of sweep records. Stops after the first error.
pub struct SweepIter {
    spec: SweepSpec,
    seed: u64,
    next: u64,
    buffer: IntoIter<Result<SweepRecord>>,
    failed: bool,
}

impl Iterator for SweepIter {
    type Item = Result<SweepRecord>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.failed {
            return None;
        }
        if let Some(item) = self.buffer.next() {
            self.failed = item.is_err();
            return Some(item);
        }
        if self.next >= self.spec.total {
            return None;
        }
        let end = (self.next + CHUNK).min(self.spec.total);
        let (spec, seed) = (&self.spec, self.seed);
        let chunk: Vec<Result<SweepRecord>> = (self.next..end)
            .into_par_iter()
            .map(|i| evaluate(spec, i, seed))
            .collect();
        self.next = end;
        self.buffer = chunk.into_iter();
        self.next()
    }
}

/// Evaluate every point of `spec` lazily, in point-index order.
///
/// Random points are drawn from an independent stream per index, so the
/// output depends only on `spec` and `seed`.
pub fn sweep(spec: &SweepSpec, seed: u64) -> SweepIter {
    SweepIter {
        spec: spec.clone(),
        seed,
        next: 0,
        buffer: Vec::new().into_iter(),
        failed: false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn theta_grid(steps: u64) -> SweepSpec {
        let mut axes = SweepSpec::equal_superposition_axes();
        for j in 0..4 {
            axes[9 + 3 * j] = Axis::Range { lo: 0.0, hi: PI, steps };
        }
        SweepSpec::new(axes, SweepMode::Grid, 7).unwrap()
    }

    #[test]
    fn empty_budget_is_empty() {
        assert_eq!(sweep(&theta_grid(0), 1).count(), 0);
        let spec = SweepSpec::new(
            SweepSpec::equal_superposition_axes(),
            SweepMode::Random { samples: 0 },
            1,
        )
        .unwrap();
        assert!(spec.is_empty());
        assert_eq!(sweep(&spec, 1).count(), 0);
    }

    #[test]
    fn fixed_only_grid_is_one_point() {
        let spec = SweepSpec::new(SweepSpec::equal_superposition_axes(), SweepMode::Grid, 1).unwrap();
        let records: Vec<_> = sweep(&spec, 0).collect::<Result<_>>().unwrap();
        assert_eq!(records.len(), 1);
        assert!((records[0].p_win - 0.5).abs() < 1e-15);
        assert!(records[0].oracle_checked);
    }

    #[test]
    fn zero_phase_grid_never_wins() {
        let records: Vec<_> = sweep(&theta_grid(5), 3).collect::<Result<_>>().unwrap();
        assert_eq!(records.len(), 625);
        assert!(records.iter().all(|r| r.p_win <= 0.5 + 1e-12));
        assert_eq!(records[624].angles[18], PI);
        assert_eq!(records[1].angles[18], PI / 4.0);
        assert!(records.iter().enumerate().all(|(i, r)| r.index == i as u64));
        assert_eq!(records.iter().filter(|r| r.oracle_checked).count(), 90);
    }

    #[test]
    fn random_sweep_is_reproducible() {
        let mut axes = [Axis::Range { lo: 0.0, hi: TAU, steps: 0 }; 21];
        for i in (0..21).step_by(3) {
            axes[i] = Axis::Range { lo: 0.0, hi: PI, steps: 0 };
        }
        let spec = SweepSpec::new(axes, SweepMode::Random { samples: 5000 }, 1).unwrap();
        let a: Vec<_> = sweep(&spec, 42).collect::<Result<_>>().unwrap();
        let b: Vec<_> = sweep(&spec, 42).collect::<Result<_>>().unwrap();
        assert_eq!(a, b);
        let c: Vec<_> = sweep(&spec, 43).take(3).collect::<Result<_>>().unwrap();
        assert_ne!(a[..3], c[..]);
    }

    #[test]
    fn spec_validation() {
        let mut axes = SweepSpec::equal_superposition_axes();
        assert!(SweepSpec::new(axes, SweepMode::Grid, 0).is_err());
        axes[9] = Axis::Range { lo: 0.0, hi: 4.0, steps: 3 };
        assert!(SweepSpec::new(axes, SweepMode::Grid, 1).is_err());
        axes[9] = Axis::Range { lo: 2.0, hi: 1.0, steps: 3 };
        assert!(SweepSpec::new(axes, SweepMode::Grid, 1).is_err());
        axes[9] = Axis::Fixed(f64::NAN);
        assert!(SweepSpec::new(axes, SweepMode::Grid, 1).is_err());
        let huge = [Axis::Range { lo: 0.0, hi: 1.0, steps: u64::MAX }; 21];
        assert!(SweepSpec::new(huge, SweepMode::Grid, 1).is_err());
    }
}
