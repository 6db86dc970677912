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


//! Build multiplexers from SU(2) blocks, apply them to states and check
//! composition against the dense matrix product.

use num_complex::Complex64;
use qparrondo::multiplexer::{compose, Multiplexer, PolarBlock};
use qparrondo::qcore::{norm_squared, tensor, BasisLabel, PureState};
use std::f64::consts::PI;

fn main() -> qparrondo::Result<()> {
    let first = Multiplexer::from_polar(&[
        PolarBlock::rotation(PI / 2.0)?,
        PolarBlock::new(PI / 3.0, 0.4, 1.1)?,
    ])?;
    let second = Multiplexer::from_polar(&[PolarBlock::identity(), PolarBlock::new(PI, 0.0, PI)?])?;

    let x = tensor(&[PureState::uniform(1)?, PureState::basis(1, 0)?])?;
    let y = second.apply(&first.apply(&x)?)?;
    let z = compose(&first, &second)?.apply(&x)?;
    for (i, (a, b)) in y.amplitudes().iter().zip(z.amplitudes()).enumerate() {
        println!("{}  stepwise {a:.6}  composed {b:.6}", BasisLabel::from_index(2, i));
    }
    println!("norm after apply: {:.15}", norm_squared(&y));

    let u = compose(&first, &second)?.as_dense_matrix();
    println!("dense matrix:");
    for row in u.rows() {
        let cells: Vec<String> = row.iter().map(|c: &Complex64| format!("{:>7.3}{:+.3}i", c.re, c.im)).collect();
        println!("  {}", cells.join(" "));
    }
    Ok(())
}
