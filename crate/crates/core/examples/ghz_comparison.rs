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


//! Entangled versus product inputs: a GHZ start ignores the middle blocks,
//! and the entanglement witness separates the two cases.

use qparrondo::multiplexer::PolarBlock;
use qparrondo::qcore::split_entanglement_witness;
use qparrondo::quantumgame::{build_initial_state, pwin_quantum_sim, InitialStateSpec, QuantumHDGame};
use std::f64::consts::PI;

fn main() -> qparrondo::Result<()> {
    for spec in [InitialStateSpec::EqualSuperposition, InitialStateSpec::Ghz] {
        let state = build_initial_state(&spec)?;
        let witness = split_entanglement_witness(&state, 2)?;
        let games = [
            QuantumHDGame::zero_phase([0.75 * PI, 0.1, 0.1, 0.25 * PI])?,
            QuantumHDGame::zero_phase([0.75 * PI, PI, PI, 0.75 * PI])?,
            QuantumHDGame::new([PolarBlock::new(0.5 * PI, 0.0, PI)?; 4]),
        ];
        let p: Vec<String> = games
            .iter()
            .map(|g| pwin_quantum_sim(g, &spec).map(|r| format!("{:.6}", r.p_win)))
            .collect::<Result<_, _>>()?;
        println!("{spec:?}: witness {witness:.3}, p_win {}", p.join(" "));
    }
    Ok(())
}
