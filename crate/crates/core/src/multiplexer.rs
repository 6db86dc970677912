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

//! SU(2) coin blocks and the block-diagonal multiplexer they form.
//!
//! A multiplexer on `k` qubits holds `2^(k-1)` coins. The first `k - 1`
//! qubits are controls; block `j` acts on the last qubit whenever the control
//! bits, read as a big-endian integer, equal `j`. Block 0 therefore fires on
//! the all-zero history.

use std::f64::consts::{PI, TAU};

use crate::error::{check_range, Error, Result};
use crate::qcore::{Amplitude, PureState, MAX_QUBITS, NORM_TOLERANCE};

/// A 2x2 special unitary coin with rows `(a, b)` and `(-conj(b), conj(a))`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SU2Block {
    a: Amplitude,
    b: Amplitude,
}

impl SU2Block {
    pub fn new(a: Amplitude, b: Amplitude) -> Result<Self> {
        if ![a.re, a.im, b.re, b.im].iter().all(|x| x.is_finite()) {
            return Err(Error::NonFinite("coin block"));
        }
        let n = a.norm_sqr() + b.norm_sqr();
        if (n - 1.0).abs() > NORM_TOLERANCE {
            return Err(Error::NotUnitary(n));
        }
        Ok(SU2Block { a, b })
    }

    pub fn identity() -> Self {
        SU2Block {
            a: Amplitude::new(1.0, 0.0),
            b: Amplitude::new(0.0, 0.0),
        }
    }

    pub fn a(&self) -> Amplitude {
        self.a
    }

    pub fn b(&self) -> Amplitude {
        self.b
    }

    /// Row-major 2x2 matrix.
    pub fn matrix(&self) -> [[Amplitude; 2]; 2] {
        [[self.a, self.b], [-self.b.conj(), self.a.conj()]]
    }

    /// Matrix product `self * rhs`. SU(2) is closed under products, so the
    /// result stays in `(a, b)` form.
    pub fn mul(&self, rhs: &SU2Block) -> SU2Block {
        SU2Block {
            a: self.a * rhs.a - self.b * rhs.b.conj(),
            b: self.a * rhs.b + self.b * rhs.a.conj(),
        }
    }

    pub fn adjoint(&self) -> SU2Block {
        SU2Block {
            a: self.a.conj(),
            b: -self.b,
        }
    }

    /// Apply to the amplitude pair `(lo, hi)` of a target qubit.
    #[inline]
    pub fn apply_pair(&self, lo: Amplitude, hi: Amplitude) -> (Amplitude, Amplitude) {
        (
            self.a * lo + self.b * hi,
            self.a.conj() * hi - self.b.conj() * lo,
        )
    }
}

/// Polar coordinates of a coin: `a = e^{i phi} cos(theta/2)`,
/// `b = e^{i eta} sin(theta/2)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolarBlock {
    theta: f64,
    phi: f64,
    eta: f64,
}

impl PolarBlock {
    /// Validates `theta` in `[0, pi]` and both phases in `[0, 2pi]`.
    pub fn new(theta: f64, phi: f64, eta: f64) -> Result<Self> {
        Ok(PolarBlock {
            theta: check_range("block theta", theta, 0.0, PI)?,
            phi: check_range("block phi", phi, 0.0, TAU)?,
            eta: check_range("block eta", eta, 0.0, TAU)?,
        })
    }

    /// A real rotation: both phases zero.
    pub fn rotation(theta: f64) -> Result<Self> {
        Self::new(theta, 0.0, 0.0)
    }

    pub fn identity() -> Self {
        PolarBlock {
            theta: 0.0,
            phi: 0.0,
            eta: 0.0,
        }
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }

    pub fn eta(&self) -> f64 {
        self.eta
    }

    pub fn to_block(&self) -> SU2Block {
        block_from_polar(self)
    }

    /// Polar angles of the adjoint coin `(conj(a), -b)`.
    pub fn adjoint(&self) -> PolarBlock {
        let eta = self.eta + PI;
        PolarBlock {
            theta: self.theta,
            phi: TAU - self.phi,
            eta: if eta > TAU { eta - TAU } else { eta },
        }
    }
}

/// Polar coordinates of a single qubit: `(e^{i phi} cos(theta/2), e^{i eta} sin(theta/2))`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolarQubit {
    theta: f64,
    phi: f64,
    eta: f64,
}

impl PolarQubit {
    pub fn new(theta: f64, phi: f64, eta: f64) -> Result<Self> {
        Ok(PolarQubit {
            theta: check_range("qubit theta", theta, 0.0, PI)?,
            phi: check_range("qubit phi", phi, 0.0, TAU)?,
            eta: check_range("qubit eta", eta, 0.0, TAU)?,
        })
    }

    /// `(|0> + |1>) / sqrt(2)`.
    pub fn plus() -> Self {
        PolarQubit {
            theta: PI / 2.0,
            phi: 0.0,
            eta: 0.0,
        }
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }

    pub fn eta(&self) -> f64 {
        self.eta
    }

    /// The `|0>` and `|1>` amplitudes.
    pub fn amplitudes(&self) -> (Amplitude, Amplitude) {
        let half = self.theta / 2.0;
        (
            Amplitude::from_polar(half.cos(), self.phi),
            Amplitude::from_polar(half.sin(), self.eta),
        )
    }

    pub fn to_state(&self) -> PureState {
        qubit_from_polar(self)
    }
}

pub fn block_from_polar(p: &PolarBlock) -> SU2Block {
    let half = p.theta / 2.0;
    SU2Block {
        a: Amplitude::from_polar(half.cos(), p.phi),
        b: Amplitude::from_polar(half.sin(), p.eta),
    }
}

pub fn qubit_from_polar(p: &PolarQubit) -> PureState {
    let (zero, one) = p.amplitudes();
    PureState::from_unitary_image(vec![zero, one])
}

/// Block-diagonal unitary: one coin per control pattern.
#[derive(Debug, Clone, PartialEq)]
pub struct Multiplexer {
    blocks: Vec<SU2Block>,
}

impl Multiplexer {
    /// At least two blocks (one control qubit), count a power of two.
    pub fn new(blocks: Vec<SU2Block>) -> Result<Self> {
        let n = blocks.len();
        if n < 2 || !n.is_power_of_two() {
            return Err(Error::NotPowerOfTwo(n));
        }
        let qubits = n.trailing_zeros() as usize + 1;
        if qubits > MAX_QUBITS {
            return Err(Error::TooManyQubits {
                what: "multiplexer",
                found: qubits,
                limit: MAX_QUBITS,
            });
        }
        Ok(Multiplexer { blocks })
    }

    pub fn from_polar(blocks: &[PolarBlock]) -> Result<Self> {
        Self::new(blocks.iter().map(block_from_polar).collect())
    }

    /// Identity on `qubits >= 2` qubits.
    pub fn identity(qubits: usize) -> Result<Self> {
        if qubits < 2 {
            return Err(Error::NotPowerOfTwo(qubits.saturating_sub(1)));
        }
        if qubits > MAX_QUBITS {
            return Err(Error::TooManyQubits {
                what: "multiplexer",
                found: qubits,
                limit: MAX_QUBITS,
            });
        }
        Self::new(vec![SU2Block::identity(); 1 << (qubits - 1)])
    }

    pub fn blocks(&self) -> &[SU2Block] {
        &self.blocks
    }

    pub fn qubits(&self) -> usize {
        self.blocks.len().trailing_zeros() as usize + 1
    }

    pub fn dim(&self) -> usize {
        self.blocks.len() * 2
    }

    pub fn adjoint(&self) -> Multiplexer {
        Multiplexer {
            blocks: self.blocks.iter().map(SU2Block::adjoint).collect(),
        }
    }

    pub fn apply(&self, state: &PureState) -> Result<PureState> {
        apply(self, state)
    }

    /// Dense `2^k x 2^k` matrix, row-major.
    pub fn as_dense_matrix(&self) -> DenseMatrix {
        as_dense_matrix(self)
    }
}

/// Left-multiply each amplitude pair `(2j, 2j + 1)` by block `j`.
pub fn apply(m: &Multiplexer, state: &PureState) -> Result<PureState> {
    if state.dim() != m.dim() {
        return Err(Error::DimensionMismatch {
            expected: m.dim(),
            found: state.dim(),
        });
    }
    let mut out = state.amplitudes().to_vec();
    for (pair, block) in out.chunks_exact_mut(2).zip(&m.blocks) {
        let (lo, hi) = block.apply_pair(pair[0], pair[1]);
        pair[0] = lo;
        pair[1] = hi;
    }
    Ok(PureState::from_unitary_image(out))
}

/// The multiplexer equivalent to applying `first`, then `second`.
pub fn compose(first: &Multiplexer, second: &Multiplexer) -> Result<Multiplexer> {
    if first.blocks.len() != second.blocks.len() {
        return Err(Error::DimensionMismatch {
            expected: first.dim(),
            found: second.dim(),
        });
    }
    Ok(Multiplexer {
        blocks: first
            .blocks
            .iter()
            .zip(&second.blocks)
            .map(|(f, s)| s.mul(f))
            .collect(),
    })
}

/// A square complex matrix in row-major order.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix {
    dim: usize,
    data: Vec<Amplitude>,
}

impl DenseMatrix {
    pub fn zeros(dim: usize) -> Self {
        DenseMatrix {
            dim,
            data: vec![Amplitude::new(0.0, 0.0); dim * dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> Amplitude {
        self.data[row * self.dim + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: Amplitude) {
        self.data[row * self.dim + col] = value;
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Amplitude]> {
        self.data.chunks_exact(self.dim)
    }
}

pub fn as_dense_matrix(m: &Multiplexer) -> DenseMatrix {
    let mut out = DenseMatrix::zeros(m.dim());
    for (j, block) in m.blocks.iter().enumerate() {
        let g = block.matrix();
        for (r, row) in g.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                out.set(2 * j + r, 2 * j + c, v);
            }
        }
    }
    out
}
