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

//! Classical Parrondo games.
//!
//! Game A is a single biased coin. The history-dependent game picks one of
//! four coins from the outcomes of the previous two plays. A history is
//! indexed as `2 * before_last + last` with a win encoded as `1`, so the
//! coins `p[0]..p[3]` belong to loss-loss, loss-win, win-loss and win-win.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{check_range, Error, Result};
use crate::Outcome;

/// Denominators and `s` at or below this are treated as zero.
pub const DEGENERACY_TOLERANCE: f64 = 1e-12;
/// `|c|` at or below this classifies a game as fair.
pub const FAIR_TOLERANCE: f64 = 1e-12;
/// L1 residual at which power iteration stops.
pub const STATIONARY_RESIDUAL: f64 = 1e-12;
pub const STATIONARY_MAX_ITERATIONS: usize = 1_000_000;
/// Plays discarded before payoff accounting in simulations.
pub const BURN_IN_STEPS: u64 = 1000;
/// Batches used for the batch-means standard error.
pub const SIMULATION_BATCHES: u64 = 100;

/// Single biased coin.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GameA {
    p_win: f64,
}

impl GameA {
    pub fn new(p_win: f64) -> Result<Self> {
        Ok(GameA {
            p_win: check_range("game A p_win", p_win, 0.0, 1.0)?,
        })
    }

    pub fn p_win(&self) -> f64 {
        self.p_win
    }
}

/// Four coins selected by the last two outcomes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClassicalHDGame {
    p: [f64; 4],
}

impl ClassicalHDGame {
    pub fn new(p: [f64; 4]) -> Result<Self> {
        const NAMES: [&str; 4] = ["p1", "p2", "p3", "p4"];
        for (name, &v) in NAMES.iter().zip(&p) {
            check_range(name, v, 0.0, 1.0)?;
        }
        Ok(ClassicalHDGame { p })
    }

    pub fn probabilities(&self) -> [f64; 4] {
        self.p
    }

    /// `c = (1 - p4)(1 - p3) - p1 p2`.
    pub fn c(&self) -> f64 {
        let [p1, p2, p3, p4] = self.p;
        (1.0 - p4) * (1.0 - p3) - p1 * p2
    }

    /// `s = p1 (p2 + 1 - p4)`.
    pub fn s(&self) -> f64 {
        let [p1, p2, _, p4] = self.p;
        p1 * (p2 + 1.0 - p4)
    }
}

/// Either kind of classical game, as used in a schedule.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ClassicalGame {
    A(GameA),
    B(ClassicalHDGame),
}

impl ClassicalGame {
    /// Win probability given a history index in `0..4`.
    pub fn win_probability(&self, history: usize) -> f64 {
        match self {
            ClassicalGame::A(a) => a.p_win,
            ClassicalGame::B(b) => b.p[history],
        }
    }

    pub fn transition_matrix(&self) -> [[f64; 4]; 4] {
        let mut t = [[0.0; 4]; 4];
        for (h, row) in t.iter_mut().enumerate() {
            let last = h & 1;
            let p = self.win_probability(h);
            row[2 * last + 1] += p;
            row[2 * last] += 1.0 - p;
        }
        t
    }

    pub fn label(&self) -> char {
        match self {
            ClassicalGame::A(_) => 'A',
            ClassicalGame::B(_) => 'B',
        }
    }
}

impl From<GameA> for ClassicalGame {
    fn from(g: GameA) -> Self {
        ClassicalGame::A(g)
    }
}

impl From<ClassicalHDGame> for ClassicalGame {
    fn from(g: ClassicalHDGame) -> Self {
        ClassicalGame::B(g)
    }
}

/// Sign of `c` together with `c` and `s`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GameClassification {
    pub outcome: Outcome,
    pub c: f64,
    pub s: f64,
}

/// Stationary win probability `p1 (p2 + 1 - p4) / ((1 - p4)(2 p1 + 1 - p3) + p1 p2)`.
pub fn pwin_closed_form(g: &ClassicalHDGame) -> Result<f64> {
    let [p1, p2, p3, p4] = g.p;
    let denom = (1.0 - p4) * (2.0 * p1 + 1.0 - p3) + p1 * p2;
    if denom <= DEGENERACY_TOLERANCE {
        return Err(Error::DegenerateChain(format!(
            "denominator {denom} vanishes for p = {:?}",
            g.p
        )));
    }
    Ok(g.s() / denom)
}

/// Long-run occupancy of the four histories, by power iteration.
pub fn stationary_distribution(g: &ClassicalHDGame) -> Result<[f64; 4]> {
    if g.p.iter().any(|&p| p <= 0.0 || p >= 1.0) {
        return Err(Error::ReducibleChain(format!(
            "boundary coin probability in {:?}",
            g.p
        )));
    }
    power_iteration(&ClassicalGame::B(*g).transition_matrix())
}

fn step(pi: &[f64; 4], t: &[[f64; 4]; 4]) -> [f64; 4] {
    let mut next = [0.0; 4];
    for (i, row) in t.iter().enumerate() {
        for (j, &tij) in row.iter().enumerate() {
            next[j] += pi[i] * tij;
        }
    }
    next
}

fn power_iteration(t: &[[f64; 4]; 4]) -> Result<[f64; 4]> {
    let mut pi = [0.25; 4];
    for _ in 0..STATIONARY_MAX_ITERATIONS {
        let mut next = step(&pi, t);
        let total: f64 = next.iter().sum();
        next.iter_mut().for_each(|x| *x /= total);
        let residual: f64 = next.iter().zip(&pi).map(|(a, b)| (a - b).abs()).sum();
        pi = next;
        if residual < STATIONARY_RESIDUAL {
            return Ok(pi);
        }
    }
    Err(Error::ReducibleChain(format!(
        "power iteration did not reach residual {STATIONARY_RESIDUAL} in {STATIONARY_MAX_ITERATIONS} steps"
    )))
}

pub fn classify(g: &ClassicalHDGame) -> Result<GameClassification> {
    let s = g.s();
    if s <= DEGENERACY_TOLERANCE {
        return Err(Error::DegenerateChain(format!("s = {s} is not positive")));
    }
    let c = g.c();
    let outcome = if c.abs() <= FAIR_TOLERANCE {
        Outcome::Fair
    } else if c < 0.0 {
        Outcome::Winning
    } else {
        Outcome::Losing
    };
    Ok(GameClassification { outcome, c, s })
}

/// Long-run win probability of a schedule repeated forever.
///
/// Computes the stationary history distribution of one full period and
/// averages the per-play win probability along the period.
pub fn schedule_win_probability(schedule: &[ClassicalGame]) -> Result<f64> {
    if schedule.is_empty() {
        return Err(Error::Empty("schedule"));
    }
    let mut period = identity4();
    for g in schedule {
        period = matmul4(&period, &g.transition_matrix());
    }
    let mut dist = power_iteration(&period)?;
    let mut total = 0.0;
    for g in schedule {
        total += (0..4).map(|h| dist[h] * g.win_probability(h)).sum::<f64>();
        dist = step(&dist, &g.transition_matrix());
    }
    Ok(total / schedule.len() as f64)
}

fn identity4() -> [[f64; 4]; 4] {
    let mut m = [[0.0; 4]; 4];
    (0..4).for_each(|i| m[i][i] = 1.0);
    m
}

fn matmul4(x: &[[f64; 4]; 4], y: &[[f64; 4]; 4]) -> [[f64; 4]; 4] {
    let mut out = [[0.0; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            out[i][j] = (0..4).map(|k| x[i][k] * y[k][j]).sum();
        }
    }
    out
}

/// Outcome of a Monte Carlo run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SimulationSummary {
    pub steps: u64,
    pub wins: u64,
    /// Mean payoff per play, each play paying `+1` or `-1`.
    pub mean_payoff: f64,
    pub std_error: f64,
}

/// Play `schedule` cyclically for `steps` accounted plays.
///
/// The two-play history starts uniformly at random and the first
/// [`BURN_IN_STEPS`] plays are discarded. The standard error uses batch
/// means over [`SIMULATION_BATCHES`] batches so that correlation between
/// consecutive plays is accounted for; runs shorter than
/// `SIMULATION_BATCHES^2` plays fall back to the i.i.d. estimate.
pub fn simulate_sequence(schedule: &[ClassicalGame], steps: u64, seed: u64) -> Result<SimulationSummary> {
    if schedule.is_empty() {
        return Err(Error::Empty("schedule"));
    }
    if steps == 0 {
        return Err(Error::OutOfRange {
            name: "steps",
            value: 0.0,
            lo: 1.0,
            hi: f64::INFINITY,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut history: usize = rng.gen_range(0..4);
    let len = schedule.len() as u64;
    let play = |t: u64, rng: &mut ChaCha8Rng, history: &mut usize| -> bool {
        let game = &schedule[(t % len) as usize];
        let win = rng.gen::<f64>() < game.win_probability(*history);
        *history = ((*history & 1) << 1) | usize::from(win);
        win
    };
    for t in 0..BURN_IN_STEPS {
        play(t, &mut rng, &mut history);
    }

    let batched = steps >= SIMULATION_BATCHES * SIMULATION_BATCHES;
    let batch_len = steps / SIMULATION_BATCHES;
    let mut wins = 0u64;
    let mut batch_wins = 0u64;
    let mut batch_means = Vec::with_capacity(SIMULATION_BATCHES as usize);
    for i in 0..steps {
        let win = play(BURN_IN_STEPS + i, &mut rng, &mut history);
        wins += u64::from(win);
        if batched {
            batch_wins += u64::from(win);
            if (i + 1) % batch_len == 0 && (batch_means.len() as u64) < SIMULATION_BATCHES {
                batch_means.push(payoff_mean(batch_wins, batch_len));
                batch_wins = 0;
            }
        }
    }

    let mean = payoff_mean(wins, steps);
    let std_error = if batched {
        let n = batch_means.len() as f64;
        let m = batch_means.iter().sum::<f64>() / n;
        let var = batch_means.iter().map(|x| (x - m).powi(2)).sum::<f64>() / (n - 1.0);
        (var / n).sqrt()
    } else if steps > 1 {
        let n = steps as f64;
        let var = (1.0 - mean * mean) * n / (n - 1.0);
        (var / n).sqrt()
    } else {
        f64::INFINITY
    };
    Ok(SimulationSummary {
        steps,
        wins,
        mean_payoff: mean,
        std_error,
    })
}

fn payoff_mean(wins: u64, plays: u64) -> f64 {
    (2.0 * wins as f64 - plays as f64) / plays as f64
}

/// How the search box is covered.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SamplingMode {
    /// Uniform random points, `budget` of them.
    Random,
    /// Cell centres of a regular grid with `floor(budget^(1/5))` cells per axis.
    Grid,
}

/// Box of (game A, game B) parameters to search for the Parrondo effect.
#[derive(Debug, Clone, PartialEq)]
pub struct RegionSearch {
    pub budget: usize,
    pub mode: SamplingMode,
    pub a_range: (f64, f64),
    pub b_ranges: [(f64, f64); 4],
    /// Periodic schedules to try, as strings over `{'A', 'B'}`.
    pub patterns: Vec<String>,
}

impl Default for RegionSearch {
    /// A slightly losing coin A paired with a history game whose
    /// loss-loss and win-win coins are favourable and the mixed-history
    /// coins unfavourable.
    fn default() -> Self {
        RegionSearch {
            budget: 10_000,
            mode: SamplingMode::Random,
            a_range: (0.45, 0.5),
            b_ranges: [(0.5, 1.0), (0.0, 0.5), (0.0, 0.5), (0.5, 1.0)],
            patterns: ["AB", "AAB", "ABB", "AABB"].map(String::from).to_vec(),
        }
    }
}

/// A pair of individually losing games and a schedule that wins.
#[derive(Debug, Clone, PartialEq)]
pub struct ParrondoInstance {
    pub sample_index: usize,
    pub game_a: GameA,
    pub game_b: ClassicalHDGame,
    pub pattern: String,
    pub b_p_win: f64,
    pub b_classification: GameClassification,
    pub schedule_p_win: f64,
}

impl ParrondoInstance {
    pub fn schedule(&self) -> Vec<ClassicalGame> {
        self.pattern
            .chars()
            .map(|ch| match ch {
                'A' => ClassicalGame::A(self.game_a),
                _ => ClassicalGame::B(self.game_b),
            })
            .collect()
    }

    pub fn schedule_payoff(&self) -> f64 {
        2.0 * self.schedule_p_win - 1.0
    }
}

fn parse_pattern(pattern: &str) -> Result<()> {
    if pattern.is_empty() || pattern.chars().any(|c| c != 'A' && c != 'B') {
        return Err(Error::InvalidSweep(format!(
            "schedule pattern {pattern:?} must be a non-empty string over A and B"
        )));
    }
    Ok(())
}

/// Brute-force search of the box for Parrondo instances.
///
/// Each sample is kept for every pattern whose analytic long-run win
/// probability exceeds 1/2 while game A has `p_win < 1/2` and game B
/// classifies as losing. Samples whose history game is degenerate are
/// skipped.
pub fn find_parrondo_samples(search: &RegionSearch, seed: u64) -> Result<Vec<ParrondoInstance>> {
    for p in &search.patterns {
        parse_pattern(p)?;
    }
    for (lo, hi) in std::iter::once(&search.a_range).chain(&search.b_ranges) {
        check_range("search bound", *lo, 0.0, 1.0)?;
        check_range("search bound", *hi, *lo, 1.0)?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cells = match search.mode {
        SamplingMode::Random => 0,
        SamplingMode::Grid => grid_cells_per_axis(search.budget),
    };
    let total = match search.mode {
        SamplingMode::Random => search.budget,
        SamplingMode::Grid => cells.pow(5),
    };
    let axes: Vec<(f64, f64)> = std::iter::once(search.a_range)
        .chain(search.b_ranges)
        .collect();

    let mut found = Vec::new();
    for index in 0..total {
        let point: Vec<f64> = match search.mode {
            SamplingMode::Random => axes
                .iter()
                .map(|&(lo, hi)| if hi > lo { rng.gen_range(lo..hi) } else { lo })
                .collect(),
            SamplingMode::Grid => {
                let mut rem = index;
                let mut coords = vec![0.0; 5];
                for d in (0..5).rev() {
                    let i = rem % cells;
                    rem /= cells;
                    let (lo, hi) = axes[d];
                    coords[d] = lo + (hi - lo) * (i as f64 + 0.5) / cells as f64;
                }
                coords
            }
        };
        let game_a = GameA::new(point[0])?;
        let game_b = ClassicalHDGame::new([point[1], point[2], point[3], point[4]])?;
        if game_a.p_win >= 0.5 {
            continue;
        }
        let (Ok(b_classification), Ok(b_p_win)) = (classify(&game_b), pwin_closed_form(&game_b)) else {
            continue;
        };
        if b_classification.outcome != Outcome::Losing || b_p_win >= 0.5 {
            continue;
        }
        for pattern in &search.patterns {
            let schedule: Vec<ClassicalGame> = pattern
                .chars()
                .map(|ch| match ch {
                    'A' => ClassicalGame::A(game_a),
                    _ => ClassicalGame::B(game_b),
                })
                .collect();
            let Ok(p) = schedule_win_probability(&schedule) else {
                continue;
            };
            if p > 0.5 + FAIR_TOLERANCE {
                found.push(ParrondoInstance {
                    sample_index: index,
                    game_a,
                    game_b,
                    pattern: pattern.clone(),
                    b_p_win,
                    b_classification,
                    schedule_p_win: p,
                });
            }
        }
    }
    Ok(found)
}

fn grid_cells_per_axis(budget: usize) -> usize {
    let mut n = 0usize;
    while (n + 1).pow(5) <= budget {
        n += 1;
    }
    n
}
