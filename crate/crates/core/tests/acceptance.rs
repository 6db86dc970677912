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

//! Acceptance criteria, one pass/fail line each. Exits nonzero on any failure.

mod common;

use std::f64::consts::{PI, TAU};
use std::time::{Duration, Instant};

use qparrondo::classical::{
    classify, find_parrondo_samples, pwin_closed_form, simulate_sequence, stationary_distribution,
    ClassicalHDGame, RegionSearch,
};
use qparrondo::multiplexer::{PolarBlock, PolarQubit};
use qparrondo::qcore::norm_squared;
use qparrondo::quantumgame::{
    check_sequence_formula, detect_quantum_parrondo, play_sequence, pwin_equal_superposition,
    pwin_quantum_closed, pwin_quantum_sim, pwin_sequence_formula, InitialStateSpec, QuantumHDGame,
};
use qparrondo::Outcome;
use rand::Rng;

type Outcome_ = Result<String, String>;

fn check(cond: bool, msg: String) -> Outcome_ {
    if cond {
        Ok(msg)
    } else {
        Err(msg)
    }
}

fn timed(limit: Option<Duration>, f: impl FnOnce() -> Outcome_) -> Outcome_ {
    let start = Instant::now();
    let r = f();
    let took = start.elapsed();
    match (r, limit) {
        (Ok(msg), Some(l)) if took >= l => Err(format!("{msg}; took {took:?} >= {l:?}")),
        (Ok(msg), _) => Ok(format!("{msg}; {took:.2?}")),
        (Err(msg), _) => Err(format!("{msg}; {took:.2?}")),
    }
}

fn ac1_stationary_equivalence() -> Outcome_ {
    let mut rng = common::rng(0xac1);
    let mut worst = 0.0f64;
    for _ in 0..1000 {
        let g = ClassicalHDGame::new(std::array::from_fn(|_| rng.gen_range(0.05..=0.95))).unwrap();
        let pi = stationary_distribution(&g).map_err(|e| e.to_string())?;
        let avg: f64 = pi.iter().zip(g.probabilities()).map(|(x, p)| x * p).sum();
        worst = worst.max((avg - pwin_closed_form(&g).map_err(|e| e.to_string())?).abs());
    }
    check(worst < 1e-10, format!("max |sum pi_j p_j - closed form| = {worst:.3e} (< 1e-10) over 1000 games"))
}

fn ac2_closed_form_gate() -> Outcome_ {
    let mut rng = common::rng(0xac2);
    let mut worst = 0.0f64;
    for _ in 0..1000 {
        let q = common::qubits(&mut rng);
        let g = common::game(&mut rng);
        let sim = pwin_quantum_sim(&g, &InitialStateSpec::Product(q)).map_err(|e| e.to_string())?;
        worst = worst.max((pwin_quantum_closed(&q, g.blocks()) - sim.p_win).abs());
    }
    check(worst < 1e-12, format!("max |closed - simulated| = {worst:.3e} (< 1e-12) over 1000 draws"))
}

fn ac3_equal_superposition() -> Outcome_ {
    let mut rng = common::rng(0xac3);
    let grid: Vec<f64> = (0..9).map(|i| PI * i as f64 / 8.0).collect();
    let mut worst_random = 0.0f64;
    let mut worst_equal = 0.0f64;
    let mut max_equal_p = f64::NEG_INFINITY;
    let mut iff_violations = 0usize;
    let mut points = 0usize;
    for idx in 0..9usize.pow(4) {
        let thetas: [f64; 4] = std::array::from_fn(|j| grid[(idx / 9usize.pow(j as u32)) % 9]);
        let random: [PolarBlock; 4] = std::array::from_fn(|j| {
            PolarBlock::new(thetas[j], rng.gen_range(0.0..=TAU), rng.gen_range(0.0..=TAU)).unwrap()
        });
        let sim = pwin_quantum_sim(&QuantumHDGame::new(random), &InitialStateSpec::EqualSuperposition).unwrap();
        worst_random = worst_random.max((pwin_equal_superposition(&random) - sim.p_win).abs());

        let equal: [PolarBlock; 4] = std::array::from_fn(|j| {
            let phase = rng.gen_range(0.0..=TAU);
            PolarBlock::new(thetas[j], phase, phase).unwrap()
        });
        let p = pwin_equal_superposition(&equal);
        let sim = pwin_quantum_sim(&QuantumHDGame::new(equal), &InitialStateSpec::EqualSuperposition).unwrap();
        worst_equal = worst_equal.max((p - sim.p_win).abs());
        max_equal_p = max_equal_p.max(sim.p_win);
        let degenerate = thetas.iter().all(|&t| t == 0.0 || t == PI);
        let is_half = (sim.p_win - 0.5).abs() <= 1e-12;
        if degenerate != is_half || sim.p_win > 0.5 + 1e-12 {
            iff_violations += 1;
        }
        points += 1;
    }
    check(
        worst_random < 1e-12 && worst_equal < 1e-12 && iff_violations == 0,
        format!(
            "{points} grid points: max dev random phases {worst_random:.3e}, equal phases {worst_equal:.3e}; \
             max p_win with eta=phi {max_equal_p:.15}; fair-iff-degenerate violations {iff_violations}"
        ),
    )
}

fn ac4_quantum_parrondo() -> Outcome_ {
    let t = 0.75 * PI;
    let single_expected = 0.5 - t.sin() / 2.0;
    let report = detect_quantum_parrondo(&[[t; 4], [t; 4]]).map_err(|e| e.to_string())?;
    let game = QuantumHDGame::zero_phase([t; 4]).unwrap();
    let single_sim = pwin_quantum_sim(&game, &InitialStateSpec::EqualSuperposition).unwrap().p_win;
    let seq_sim = play_sequence(&[game, game], &InitialStateSpec::EqualSuperposition).unwrap().p_win;
    let seq_formula = pwin_sequence_formula(&[[t; 4], [t; 4]]).unwrap();
    let ok = report.effect
        && report.singles.iter().all(|p| (p - single_expected).abs() < 1e-12)
        && (single_sim - single_expected).abs() < 1e-12
        && (seq_formula - 1.0).abs() < 1e-12
        && (seq_sim - 1.0).abs() < 1e-12
        && (seq_formula - seq_sim).abs() < 1e-12
        && (single_expected - 0.146_446_6).abs() < 1e-7;
    check(
        ok,
        format!(
            "single p_win formula {:.10} / simulated {single_sim:.10} (losing); sequence formula {seq_formula:.15} / composed {seq_sim:.15}; effect {}",
            report.singles[0], report.effect
        ),
    )
}

fn ac5_sequence_validity() -> Outcome_ {
    let mut rng = common::rng(0xac5);
    let mut worst_zero = 0.0f64;
    for _ in 0..200 {
        let n = rng.gen_range(1..=4);
        let theta: Vec<[f64; 4]> = (0..n).map(|_| std::array::from_fn(|_| rng.gen_range(0.0..=PI))).collect();
        let games: Vec<QuantumHDGame> = theta.iter().map(|r| QuantumHDGame::zero_phase(*r).unwrap()).collect();
        let composed = play_sequence(&games, &InitialStateSpec::EqualSuperposition).unwrap().p_win;
        worst_zero = worst_zero.max((pwin_sequence_formula(&theta).unwrap() - composed).abs());
    }
    let mut worst_phase = 0.0f64;
    let mut mean_phase = 0.0f64;
    for _ in 0..200 {
        let n = rng.gen_range(2..=4);
        let games: Vec<QuantumHDGame> = (0..n)
            .map(|_| {
                QuantumHDGame::new(std::array::from_fn(|_| {
                    let phase = rng.gen_range(0.0..=TAU);
                    PolarBlock::new(rng.gen_range(0.0..=PI), phase, phase).unwrap()
                }))
            })
            .collect();
        let c = check_sequence_formula(&games).unwrap();
        worst_phase = worst_phase.max(c.deviation);
        mean_phase += c.deviation / 200.0;
    }
    check(
        worst_zero < 1e-12,
        format!(
            "zero phases: max |formula - composed| = {worst_zero:.3e} (< 1e-12) over 200 draws; \
             equal nonzero phases (reported only): max deviation {worst_phase:.4}, mean {mean_phase:.4}"
        ),
    )
}

fn ac6_unitarity() -> Outcome_ {
    let mut rng = common::rng(0xac6);
    let mut worst_norm = 0.0f64;
    let mut worst_unitary = 0.0f64;
    for i in 0..1000 {
        let k = 2 + i % 4;
        let m = common::multiplexer(&mut rng, k);
        let x = common::state(&mut rng, k);
        let y = m.apply(&x).unwrap();
        worst_norm = worst_norm.max((norm_squared(&y) - 1.0).abs());
        worst_unitary = worst_unitary.max(common::max_identity_error(&m.as_dense_matrix()));
    }
    check(
        worst_norm < 1e-12 && worst_unitary < 1e-12,
        format!("1000 multiplexers k=2..5: max norm drift {worst_norm:.3e}, max |U^dag U - I| {worst_unitary:.3e}"),
    )
}

fn ac7_phase_invariance() -> Outcome_ {
    let mut rng = common::rng(0xac7);
    let mut worst_history = 0.0f64;
    let mut worst_target = 0.0f64;
    for _ in 0..500 {
        let q = common::qubits(&mut rng);
        let g = common::game(&mut rng);
        let base = pwin_quantum_sim(&g, &InitialStateSpec::Product(q)).unwrap().p_win;

        let mut shifted = q;
        for k in 0..2 {
            shifted[k] = PolarQubit::new(q[k].theta(), rng.gen_range(0.0..=TAU), rng.gen_range(0.0..=TAU)).unwrap();
        }
        let p = pwin_quantum_sim(&g, &InitialStateSpec::Product(shifted)).unwrap().p_win;
        worst_history = worst_history.max((p - base).abs());

        let (phi, eta) = (q[2].phi(), q[2].eta());
        let lo = -phi.min(eta);
        let hi = TAU - phi.max(eta);
        let delta = rng.gen_range(lo..=hi);
        let mut joint = q;
        joint[2] = PolarQubit::new(q[2].theta(), (phi + delta).clamp(0.0, TAU), (eta + delta).clamp(0.0, TAU)).unwrap();
        let p = pwin_quantum_sim(&g, &InitialStateSpec::Product(joint)).unwrap().p_win;
        worst_target = worst_target.max((p - base).abs());
    }
    check(
        worst_history < 1e-12 && worst_target < 1e-12,
        format!("500 draws: history-qubit phases {worst_history:.3e}, joint target shift {worst_target:.3e} (< 1e-12)"),
    )
}

fn ac8_classical_parrondo() -> Outcome_ {
    let found = find_parrondo_samples(&RegionSearch::default(), 0xac8).map_err(|e| e.to_string())?;
    let best = found
        .iter()
        .max_by(|a, b| a.schedule_p_win.total_cmp(&b.schedule_p_win))
        .ok_or_else(|| "no instance in 10^4 samples".to_string())?;
    let b_losing = classify(&best.game_b).map_err(|e| e.to_string())?.outcome == Outcome::Losing;
    let a_losing = best.game_a.p_win() < 0.5;
    let sim = simulate_sequence(&best.schedule(), 1_000_000, 0x5eed).map_err(|e| e.to_string())?;
    check(
        a_losing && b_losing && sim.mean_payoff > 3.0 * sim.std_error,
        format!(
            "{} instances; best pattern {} with A p={:.4}, B p={:?} (p_win {:.4}); simulated payoff {:.5} +- {:.5} at 10^6 steps",
            found.len(),
            best.pattern,
            best.game_a.p_win(),
            best.game_b.probabilities(),
            best.b_p_win,
            sim.mean_payoff,
            sim.std_error
        ),
    )
}

fn run_cli(args: &[&str]) -> (i32, Vec<u8>) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut full = vec!["qparrondo"];
    full.extend_from_slice(args);
    let code = qparrondo::cli::run_with(full, &mut out, &mut err);
    (code, out)
}

fn ac9_determinism() -> Outcome_ {
    let dir = tempfile::TempDir::new().map_err(|e| e.to_string())?;
    let cfg = dir.path().join("run.json");
    let game = r#"[{"theta": 0.75}, {"theta": 0.75, "phi": 0.3, "eta": 0.3}, {"theta": 0.5}, {"theta": 0.25, "eta": 1.5}]"#;
    std::fs::write(
        &cfg,
        format!(
            r#"{{"seed": 99,
                "classical": {{"game": [0.3, 0.6, 0.2, 0.7], "simulate_steps": 50000, "steps": 50000,
                               "schedule": "AABB", "game_a": 0.48, "region": {{"budget": 3000, "validate_steps": 20000}}}},
                "quantum": {{"game": {game}, "sequence": [{game}, {game}, {game}],
                             "sweep": {{"mode": "random", "samples": 5000,
                                        "params": {{"q3_theta": {{"range": [0, 1]}}, "b2_theta": {{"range": [0, 1]}}, "b3_phi": {{"range": [0, 2]}}}}}}}},
                "compare": {{"games": [[0.3, 0.6, 0.2, 0.7], [0.9, 0.25, 0.25, 0.7]]}}}}"#
        ),
    )
    .map_err(|e| e.to_string())?;
    let cfg = cfg.to_string_lossy().into_owned();
    let commands: [&[&str]; 7] = [
        &["classical", "classify"],
        &["classical", "simulate"],
        &["classical", "region"],
        &["quantum", "play"],
        &["quantum", "sequence"],
        &["quantum", "sweep"],
        &["compare"],
    ];
    let mut runs = 0;
    for cmd in commands {
        for format in ["csv", "jsonl"] {
            let mut args = vec!["--config", cfg.as_str(), "--format", format];
            args.extend_from_slice(cmd);
            let (c1, o1) = run_cli(&args);
            let (c2, o2) = run_cli(&args);
            if c1 != 0 || c2 != 0 {
                return Err(format!("{cmd:?} exited {c1}/{c2}"));
            }
            if o1 != o2 || o1.is_empty() {
                return Err(format!("{cmd:?} --format {format} output differs between runs"));
            }
            runs += 1;
        }
    }
    Ok(format!("{runs} command/format pairs byte-identical across repeated runs"))
}

fn main() {
    let criteria: [(&str, Option<Duration>, fn() -> Outcome_); 9] = [
        ("AC1 classical closed form = stationary average", Some(Duration::from_secs(1)), ac1_stationary_equivalence),
        ("AC2 quantum closed form = simulation", Some(Duration::from_secs(1)), ac2_closed_form_gate),
        ("AC3 equal-superposition formula and losing property", None, ac3_equal_superposition),
        ("AC4 quantum Parrondo effect, n=2 at 3pi/4", None, ac4_quantum_parrondo),
        ("AC5 sequence formula validity domain", None, ac5_sequence_validity),
        ("AC6 unitarity and norm preservation", None, ac6_unitarity),
        ("AC7 phase invariance", None, ac7_phase_invariance),
        ("AC8 classical Parrondo instance", Some(Duration::from_secs(30)), ac8_classical_parrondo),
        ("AC9 CLI determinism", None, ac9_determinism),
    ];
    let mut failed = 0;
    for (name, limit, f) in criteria {
        match timed(limit, f) {
            Ok(msg) => println!("[PASS] {name}: {msg}"),
            Err(msg) => {
                failed += 1;
                println!("[FAIL] {name}: {msg}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
