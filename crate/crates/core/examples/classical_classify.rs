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


//! Classify a few history-dependent games and compare the closed-form win
//! probability with the stationary distribution of the history chain.

use qparrondo::classical::{classify, pwin_closed_form, stationary_distribution, ClassicalHDGame};

fn main() -> qparrondo::Result<()> {
    let games = [
        [0.3, 0.6, 0.2, 0.7],
        [0.9, 0.25, 0.25, 0.7],
        [0.5, 0.5, 0.5, 0.5],
        [0.8, 0.4, 0.35, 0.6],
    ];
    println!("{:<28} {:>10} {:>10} {:>10}  outcome", "p1..p4", "p_win", "c", "s");
    for p in games {
        let g = ClassicalHDGame::new(p)?;
        let class = classify(&g)?;
        let pi = stationary_distribution(&g)?;
        println!(
            "{:<28} {:>10.6} {:>10.6} {:>10.6}  {}",
            format!("{p:?}"),
            pwin_closed_form(&g)?,
            class.c,
            class.s,
            class.outcome
        );
        println!("    stationary histories LL,LW,WL,WW = {pi:.4?}");
    }
    Ok(())
}
