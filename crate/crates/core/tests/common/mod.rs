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

//! Random generators and dense linear-algebra oracles shared by the test targets.
#![allow(dead_code)]

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;
use qparrondo::multiplexer::{DenseMatrix, Multiplexer, PolarBlock, PolarQubit, SU2Block};
use qparrondo::qcore::PureState;
use qparrondo::quantumgame::QuantumHDGame;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn polar_qubit(rng: &mut impl Rng) -> PolarQubit {
    PolarQubit::new(rng.gen_range(0.0..=PI), rng.gen_range(0.0..=TAU), rng.gen_range(0.0..=TAU)).unwrap()
}

pub fn polar_block(rng: &mut impl Rng) -> PolarBlock {
    PolarBlock::new(rng.gen_range(0.0..=PI), rng.gen_range(0.0..=TAU), rng.gen_range(0.0..=TAU)).unwrap()
}

pub fn game(rng: &mut impl Rng) -> QuantumHDGame {
    QuantumHDGame::new(std::array::from_fn(|_| polar_block(rng)))
}

pub fn qubits(rng: &mut impl Rng) -> [PolarQubit; 3] {
    std::array::from_fn(|_| polar_qubit(rng))
}

pub fn multiplexer(rng: &mut impl Rng, qubits: usize) -> Multiplexer {
    let blocks: Vec<SU2Block> = (0..1 << (qubits - 1)).map(|_| polar_block(rng).to_block()).collect();
    Multiplexer::new(blocks).unwrap()
}

/// Haar-ish random state: normalized complex Gaussian-like amplitudes.
pub fn state(rng: &mut impl Rng, qubits: usize) -> PureState {
    let raw: Vec<Complex64> = (0..1 << qubits)
        .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
        .collect();
    let norm: f64 = raw.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
    PureState::new(raw.into_iter().map(|a| a / norm).collect()).unwrap()
}

pub fn dense_mul(x: &DenseMatrix, y: &DenseMatrix) -> DenseMatrix {
    let n = x.dim();
    let mut out = DenseMatrix::zeros(n);
    for i in 0..n {
        for j in 0..n {
            let v = (0..n).map(|k| x.get(i, k) * y.get(k, j)).sum();
            out.set(i, j, v);
        }
    }
    out
}

pub fn dense_adjoint(x: &DenseMatrix) -> DenseMatrix {
    let n = x.dim();
    let mut out = DenseMatrix::zeros(n);
    for i in 0..n {
        for j in 0..n {
            out.set(i, j, x.get(j, i).conj());
        }
    }
    out
}

pub fn dense_apply(x: &DenseMatrix, v: &[Complex64]) -> Vec<Complex64> {
    x.rows().map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum()).collect()
}

pub fn max_dist(x: &DenseMatrix, y: &DenseMatrix) -> f64 {
    let n = x.dim();
    (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .map(|(i, j)| (x.get(i, j) - y.get(i, j)).norm())
        .fold(0.0, f64::max)
}

pub fn max_identity_error(u: &DenseMatrix) -> f64 {
    let g = dense_mul(&dense_adjoint(u), u);
    let n = g.dim();
    let mut worst = 0.0f64;
    for i in 0..n {
        for j in 0..n {
            let want = if i == j { 1.0 } else { 0.0 };
            worst = worst.max((g.get(i, j) - Complex64::new(want, 0.0)).norm());
        }
    }
    worst
}

pub fn vec_dist(x: &[Complex64], y: &[Complex64]) -> f64 {
    x.iter().zip(y).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max)
}

/// Output amplitudes of a three-qubit game on a product input, written out
/// entry by entry: history `(r, s)` scales the target pair
/// `(a_j q31 + b_j q32, conj(a_j) q32 - conj(b_j) q31)` by `q1r q2s`.
pub fn product_output_by_hand(qubits: &[PolarQubit; 3], game: &QuantumHDGame) -> Vec<Complex64> {
    let (q11, q12) = qubits[0].amplitudes();
    let (q21, q22) = qubits[1].amplitudes();
    let (q31, q32) = qubits[2].amplitudes();
    let hist = [q11 * q21, q11 * q22, q12 * q21, q12 * q22];
    let mut out = Vec::with_capacity(8);
    for (h, b) in hist.iter().zip(game.blocks()) {
        let c = b.to_block();
        let (a, bb) = (c.a(), c.b());
        out.push(h * (a * q31 + bb * q32));
        out.push(h * (a.conj() * q32 - bb.conj() * q31));
    }
    out
}
