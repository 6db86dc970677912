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


//! Play one quantum game from a product state and compare the closed form
//! with the state-vector result.

use qparrondo::multiplexer::{PolarBlock, PolarQubit};
use qparrondo::qcore::{win_probability, BasisLabel};
use qparrondo::quantumgame::{build_initial_state, play, pwin_quantum_closed, InitialStateSpec, QuantumHDGame};
use std::f64::consts::PI;

fn main() -> qparrondo::Result<()> {
    let qubits = [
        PolarQubit::new(PI / 3.0, 0.2, 1.4)?,
        PolarQubit::plus(),
        PolarQubit::new(PI / 4.0, 0.0, PI / 2.0)?,
    ];
    let game = QuantumHDGame::new([
        PolarBlock::new(0.75 * PI, 0.0, 0.0)?,
        PolarBlock::new(0.5 * PI, 0.3, 1.2)?,
        PolarBlock::new(0.25 * PI, PI, 0.0)?,
        PolarBlock::new(0.9 * PI, 2.0, 0.5)?,
    ]);

    let initial = build_initial_state(&InitialStateSpec::Product(qubits))?;
    let out = play(&game, &initial)?;
    for (i, p) in out.probabilities().iter().enumerate() {
        println!("{}  {p:.6}", BasisLabel::from_index(3, i));
    }
    println!("p_win simulated   {:.15}", win_probability(&out));
    println!("p_win closed form {:.15}", pwin_quantum_closed(&qubits, game.blocks()));
    Ok(())
}
