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


//! Two losing quantum games that win with certainty when played back to back.

use qparrondo::multiplexer::PolarBlock;
use qparrondo::quantumgame::{check_sequence_formula, detect_quantum_parrondo, QuantumHDGame};
use std::f64::consts::PI;

fn main() -> qparrondo::Result<()> {
    let t = 0.75 * PI;
    for n in 1..=4 {
        let report = detect_quantum_parrondo(&vec![[t; 4]; n])?;
        println!(
            "n={n}: single p_win {:.7}, sequence p_win {:.7} (formula {:.7}), effect {}",
            report.singles[0], report.sequence_simulated, report.sequence_formula, report.effect
        );
    }

    // The sequence formula assumes zero phases; show how far it drifts otherwise.
    let phased = QuantumHDGame::new([PolarBlock::new(t, 0.8, 0.8)?; 4]);
    let check = check_sequence_formula(&[phased, phased])?;
    println!(
        "phases 0.8: formula {:.6}, simulated {:.6}, deviation {:.6}",
        check.formula, check.simulated, check.deviation
    );
    Ok(())
}
