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


//! Stream a grid sweep over a rotation angle and an off-diagonal phase with periodic oracle checks.

use qparrondo::quantumgame::{sweep, Axis, SweepMode, SweepSpec, PARAM_NAMES};
use qparrondo::Outcome;
use std::f64::consts::PI;

fn main() -> qparrondo::Result<()> {
    let mut axes = SweepSpec::equal_superposition_axes();
    let b1 = PARAM_NAMES.iter().position(|n| *n == "b1_theta").unwrap();
    let e1 = PARAM_NAMES.iter().position(|n| *n == "b1_eta").unwrap();
    axes[b1] = Axis::Range { lo: 0.0, hi: PI, steps: 201 };
    axes[e1] = Axis::Range { lo: 0.0, hi: 2.0 * PI, steps: 201 };
    let spec = SweepSpec::new(axes, SweepMode::Grid, 500)?;

    let (mut wins, mut losses, mut checked) = (0u64, 0u64, 0u64);
    let mut best = (f64::NEG_INFINITY, 0.0, 0.0);
    for rec in sweep(&spec, 1) {
        let rec = rec?;
        match rec.classification {
            Outcome::Winning => wins += 1,
            Outcome::Losing => losses += 1,
            Outcome::Fair => {}
        }
        checked += rec.oracle_checked as u64;
        if rec.p_win > best.0 {
            best = (rec.p_win, rec.angles[b1], rec.angles[e1]);
        }
    }
    println!("{} points: {wins} winning, {losses} losing, {checked} oracle checks", spec.len());
    println!("max p_win {:.6} at b1_theta={:.4}, b1_eta={:.4}", best.0, best.1, best.2);
    Ok(())
}
