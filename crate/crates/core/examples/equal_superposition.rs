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


//! Games played from the equal superposition: with matching phases on every
//! block the game never wins on average.

use qparrondo::multiplexer::PolarBlock;
use qparrondo::quantumgame::{pwin_equal_superposition, pwin_quantum_sim, InitialStateSpec, QuantumHDGame};
use std::f64::consts::PI;

fn main() -> qparrondo::Result<()> {
    println!("{:>8} {:>8} {:>12} {:>12}", "theta/pi", "phase", "formula", "simulated");
    for &t in &[0.0, 0.25, 0.5, 0.75, 1.0] {
        for &phase in &[0.0, 1.0, 3.0] {
            let blocks = [PolarBlock::new(t * PI, phase, phase)?; 4];
            let sim = pwin_quantum_sim(&QuantumHDGame::new(blocks), &InitialStateSpec::EqualSuperposition)?;
            println!("{t:>8.2} {phase:>8.2} {:>12.8} {:>12.8}", pwin_equal_superposition(&blocks), sim.p_win);
        }
    }

    // Opposing phases on the off-diagonal turn the same rotation into a winner.
    let blocks = [PolarBlock::new(0.5 * PI, 0.0, PI)?; 4];
    let sim = pwin_quantum_sim(&QuantumHDGame::new(blocks), &InitialStateSpec::EqualSuperposition)?;
    println!("eta - phi = pi: p_win {:.8} ({})", sim.p_win, sim.classification);
    Ok(())
}
