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


//! Search the default parameter box for losing game pairs whose periodic
//! schedule wins, then confirm the best one by Monte Carlo play.

use qparrondo::classical::{find_parrondo_samples, simulate_sequence, RegionSearch};

fn main() -> qparrondo::Result<()> {
    let search = RegionSearch { budget: 10_000, ..RegionSearch::default() };
    let found = find_parrondo_samples(&search, 7)?;
    println!("{} of {} samples show the effect", found.len(), search.budget);

    let mut by_pattern = std::collections::BTreeMap::new();
    for inst in &found {
        *by_pattern.entry(inst.pattern.clone()).or_insert(0usize) += 1;
    }
    for (pattern, n) in &by_pattern {
        println!("  {pattern:<5} {n}");
    }

    let Some(best) = found.iter().max_by(|a, b| a.schedule_p_win.total_cmp(&b.schedule_p_win)) else {
        return Ok(());
    };
    println!("best: pattern {} A p={:.4} B p={:.4?}", best.pattern, best.game_a.p_win(), best.game_b.probabilities());
    println!("  A p_win {:.4}, B p_win {:.4}, schedule p_win {:.4}", best.game_a.p_win(), best.b_p_win, best.schedule_p_win);
    let sim = simulate_sequence(&best.schedule(), 1_000_000, 11)?;
    println!(
        "  simulated payoff {:.5} +- {:.5} (analytic {:.5})",
        sim.mean_payoff,
        sim.std_error,
        best.schedule_payoff()
    );
    Ok(())
}
