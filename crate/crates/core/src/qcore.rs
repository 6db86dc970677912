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

//! Complex amplitude vectors over the computational basis.
//!
//! Qubits are ordered big-endian: the first qubit is the most significant
//! bit of a basis index, so for three qubits the basis runs `|000>, |001>,
//! ..., |111>`. The last qubit is the outcome of the current play, with
//! `|0>` a loss and `|1>` a win.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// A single complex amplitude.
pub type Amplitude = Complex64;

/// Construction-time normalization tolerance.
pub const NORM_TOLERANCE: f64 = 1e-9;

/// Largest register handled by the dense state representation.
pub const MAX_QUBITS: usize = 20;

/// A normalized pure state of `k >= 1` qubits.
#[derive(Debug, Clone, PartialEq)]
pub struct PureState {
    amps: Vec<Amplitude>,
}

impl PureState {
    /// Build a state from raw amplitudes, checking length, finiteness and norm.
    pub fn new(amps: Vec<Amplitude>) -> Result<Self> {
        let len = amps.len();
        if len < 2 || !len.is_power_of_two() {
            return Err(Error::NotPowerOfTwo(len));
        }
        let qubits = len.trailing_zeros() as usize;
        if qubits > MAX_QUBITS {
            return Err(Error::TooManyQubits {
                what: "state",
                found: qubits,
                limit: MAX_QUBITS,
            });
        }
        if amps.iter().any(|a| !a.re.is_finite() || !a.im.is_finite()) {
            return Err(Error::NonFinite("state amplitude"));
        }
        let norm: f64 = amps.iter().map(|a| a.norm_sqr()).sum();
        if (norm - 1.0).abs() > NORM_TOLERANCE {
            return Err(Error::NotNormalized(norm));
        }
        Ok(PureState { amps })
    }

    /// Build a state from real amplitudes.
    pub fn from_real(amps: &[f64]) -> Result<Self> {
        Self::new(amps.iter().map(|&x| Amplitude::new(x, 0.0)).collect())
    }

    /// Computational basis state `|index>` on `qubits` qubits.
    pub fn basis(qubits: usize, index: usize) -> Result<Self> {
        if qubits == 0 {
            return Err(Error::Empty("register"));
        }
        if qubits > MAX_QUBITS {
            return Err(Error::TooManyQubits {
                what: "state",
                found: qubits,
                limit: MAX_QUBITS,
            });
        }
        let dim = 1usize << qubits;
        if index >= dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: index,
            });
        }
        let mut amps = vec![Amplitude::new(0.0, 0.0); dim];
        amps[index] = Amplitude::new(1.0, 0.0);
        Ok(PureState { amps })
    }

    /// The uniform superposition over all `2^qubits` basis states.
    pub fn uniform(qubits: usize) -> Result<Self> {
        let mut state = Self::basis(qubits, 0)?;
        let value = Amplitude::new((state.dim() as f64).sqrt().recip(), 0.0);
        state.amps.iter_mut().for_each(|a| *a = value);
        Ok(state)
    }

    /// Wrap amplitudes produced by a norm-preserving map.
    pub(crate) fn from_unitary_image(amps: Vec<Amplitude>) -> Self {
        debug_assert!(amps.len().is_power_of_two());
        PureState { amps }
    }

    pub fn amplitudes(&self) -> &[Amplitude] {
        &self.amps
    }

    pub fn into_amplitudes(self) -> Vec<Amplitude> {
        self.amps
    }

    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    pub fn qubits(&self) -> usize {
        self.amps.len().trailing_zeros() as usize
    }

    /// Multiply every amplitude by `e^{i phase}`.
    pub fn with_global_phase(&self, phase: f64) -> Self {
        let factor = Amplitude::from_polar(1.0, phase);
        PureState {
            amps: self.amps.iter().map(|a| a * factor).collect(),
        }
    }

    /// Probability of measuring each basis state.
    pub fn probabilities(&self) -> Vec<f64> {
        self.amps.iter().map(|a| a.norm_sqr()).collect()
    }
}

/// A computational basis label, most significant bit first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BasisLabel {
    bits: Vec<bool>,
}

impl BasisLabel {
    pub fn new(bits: Vec<bool>) -> Self {
        BasisLabel { bits }
    }

    pub fn from_index(qubits: usize, index: usize) -> Self {
        let bits = (0..qubits)
            .map(|i| (index >> (qubits - 1 - i)) & 1 == 1)
            .collect();
        BasisLabel { bits }
    }

    pub fn index(&self) -> usize {
        self.bits
            .iter()
            .fold(0usize, |acc, &b| (acc << 1) | usize::from(b))
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    /// The last qubit records the current outcome; `1` is a win.
    pub fn is_win(&self) -> bool {
        self.bits.last().copied().unwrap_or(false)
    }

    /// Everything before the outcome qubit.
    pub fn history(&self) -> &[bool] {
        &self.bits[..self.bits.len().saturating_sub(1)]
    }
}

impl std::fmt::Display for BasisLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "|")?;
        for &b in &self.bits {
            write!(f, "{}", u8::from(b))?;
        }
        write!(f, ">")
    }
}

/// Kronecker product of the factors, first factor most significant.
pub fn tensor(factors: &[PureState]) -> Result<PureState> {
    let (first, rest) = factors.split_first().ok_or(Error::Empty("tensor factor list"))?;
    let qubits: usize = factors.iter().map(PureState::qubits).sum();
    if qubits > MAX_QUBITS {
        return Err(Error::TooManyQubits {
            what: "tensor product",
            found: qubits,
            limit: MAX_QUBITS,
        });
    }
    for f in factors {
        let n = norm_squared(f);
        if (n - 1.0).abs() > NORM_TOLERANCE {
            return Err(Error::NotNormalized(n));
        }
    }
    let mut amps = first.amps.clone();
    for factor in rest {
        amps = amps
            .iter()
            .flat_map(|&x| factor.amps.iter().map(move |&y| x * y))
            .collect();
    }
    PureState::new(amps)
}

pub fn norm_squared(state: &PureState) -> f64 {
    state.amps.iter().map(|a| a.norm_sqr()).sum()
}

/// Measurement mass on basis states whose last qubit is `|1>`.
pub fn win_probability(state: &PureState) -> f64 {
    state.amps.iter().skip(1).step_by(2).map(|a| a.norm_sqr()).sum()
}

/// Measurement mass on basis states whose last qubit is `|0>`.
pub fn loss_probability(state: &PureState) -> f64 {
    state.amps.iter().step_by(2).map(|a| a.norm_sqr()).sum()
}

/// Largest 2x2 minor modulus of the amplitude matrix obtained by splitting
/// the register after `leading` qubits.
///
/// The state is a product across the split iff this is zero, so a value
/// above a small tolerance certifies entanglement across the cut.
pub fn split_entanglement_witness(state: &PureState, leading: usize) -> Result<f64> {
    let k = state.qubits();
    if leading == 0 || leading >= k {
        return Err(Error::OutOfRange {
            name: "split position",
            value: leading as f64,
            lo: 1.0,
            hi: (k - 1) as f64,
        });
    }
    let cols = 1usize << (k - leading);
    let rows = 1usize << leading;
    let at = |r: usize, c: usize| state.amps[r * cols + c];
    let mut worst = 0.0f64;
    for r1 in 0..rows {
        for r2 in (r1 + 1)..rows {
            for c1 in 0..cols {
                for c2 in (c1 + 1)..cols {
                    let minor = at(r1, c1) * at(r2, c2) - at(r1, c2) * at(r2, c1);
                    worst = worst.max(minor.norm());
                }
            }
        }
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_1_SQRT_2;

    fn c(re: f64, im: f64) -> Amplitude {
        Amplitude::new(re, im)
    }

    #[test]
    fn tensor_of_zero_kets_is_basis_zero() {
        let zero = PureState::basis(1, 0).unwrap();
        let s = tensor(&[zero.clone(), zero.clone(), zero]).unwrap();
        assert_eq!(s.dim(), 8);
        assert_eq!(s.amplitudes()[0], c(1.0, 0.0));
        assert!(s.amplitudes()[1..].iter().all(|a| a.norm() == 0.0));
    }

    #[test]
    fn tensor_of_plus_states_is_uniform() {
        let plus = PureState::from_real(&[FRAC_1_SQRT_2, FRAC_1_SQRT_2]).unwrap();
        let s = tensor(&[plus.clone(), plus.clone(), plus]).unwrap();
        let expected = 1.0 / 8f64.sqrt();
        assert_eq!(s.dim(), 8);
        for a in s.amplitudes() {
            assert!((a.re - expected).abs() < 1e-12 && a.im == 0.0);
        }
    }

    #[test]
    fn first_factor_is_most_significant() {
        let one = PureState::basis(1, 1).unwrap();
        let zero = PureState::basis(1, 0).unwrap();
        let s = tensor(&[one, zero]).unwrap();
        assert_eq!(s.dim(), 4);
        assert_eq!(s.amplitudes()[2], c(1.0, 0.0));
    }

    #[test]
    fn tensor_rejects_empty_list() {
        assert_eq!(tensor(&[]), Err(Error::Empty("tensor factor list")));
    }

    #[test]
    fn construction_rejects_bad_inputs() {
        assert!(matches!(
            PureState::from_real(&[1.0, 0.0, 0.0]),
            Err(Error::NotPowerOfTwo(3))
        ));
        assert!(matches!(
            PureState::from_real(&[1.0, 1.0]),
            Err(Error::NotNormalized(_))
        ));
        assert!(matches!(
            PureState::new(vec![c(f64::NAN, 0.0), c(0.0, 0.0)]),
            Err(Error::NonFinite(_))
        ));
        assert!(matches!(
            PureState::from_real(&[1.0]),
            Err(Error::NotPowerOfTwo(1))
        ));
        assert!(PureState::basis(21, 0).is_err());
    }

    #[test]
    fn win_probability_reads_last_qubit() {
        let s = PureState::basis(3, 0b001).unwrap();
        assert_eq!(win_probability(&s), 1.0);
        assert_eq!(loss_probability(&s), 0.0);
        let u = PureState::uniform(3).unwrap();
        assert!((win_probability(&u) - 0.5).abs() < 1e-15);
        assert!((norm_squared(&u) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn basis_label_round_trip() {
        for i in 0..8 {
            let label = BasisLabel::from_index(3, i);
            assert_eq!(label.index(), i);
            assert_eq!(label.is_win(), i & 1 == 1);
        }
        let label = BasisLabel::new(vec![true, false, true]);
        assert_eq!(label.index(), 5);
        assert_eq!(label.history(), &[true, false]);
        assert_eq!(label.to_string(), "|101>");
    }

    #[test]
    fn witness_separates_product_from_ghz() {
        let u = PureState::uniform(3).unwrap();
        assert!(split_entanglement_witness(&u, 2).unwrap() < 1e-15);
        let h = FRAC_1_SQRT_2;
        let ghz = PureState::from_real(&[h, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, h]).unwrap();
        assert!((split_entanglement_witness(&ghz, 2).unwrap() - 0.5).abs() < 1e-15);
        assert!(split_entanglement_witness(&ghz, 3).is_err());
    }
}
