// Copyright contributors to the sqct project
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! Exact column reduction with two-level generators.
//!
//! A unit vector with least denominator exponent `m` is brought to exponent
//! `m − 1` by `HTM` gates on pairs of entries whose numerators agree mod 2 up
//! to a power of `ω`. At exponent 0 the vector is `ω^l e_j`, which `IX` and
//! `WPOW` move to `e₀`.

use std::fmt;

use thiserror::Error;

use crate::ring::{is_unit, RingInt, RingScalar};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SynthError {
    #[error("input is not an exact unit vector")]
    NotUnit,
    #[error("residue counts at exponent {0} cannot be paired")]
    Parity(u32),
    #[error("gate indices ({0}, {1}) invalid for dimension {2}")]
    BadIndices(usize, usize, usize),
}

/// An exact vector over `D[ω]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StateVec {
    pub entries: Vec<RingScalar>,
}

impl StateVec {
    pub fn new(entries: Vec<RingScalar>) -> Self {
        StateVec { entries }
    }

    pub fn basis(dim: usize, i: usize) -> Self {
        let mut entries = vec![RingScalar::zero(); dim];
        entries[i] = RingScalar::one();
        StateVec { entries }
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn is_unit(&self) -> bool {
        is_unit(&self.entries)
    }

    /// Least `k` with every `√2^k · entry` in `Z[ω]`.
    pub fn lde(&self) -> u32 {
        self.entries.iter().map(RingScalar::lde).max().unwrap_or(0)
    }

    /// Numerators over the common denominator `√2^k`, `k >= lde`.
    pub fn numerators(&self, k: u32) -> Vec<RingInt> {
        self.entries
            .iter()
            .map(|e| e.normalize().numerator_at(k))
            .collect()
    }

    fn normalized(mut self) -> Self {
        for e in &mut self.entries {
            *e = e.normalize();
        }
        self
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TwoLevelKind {
    /// `[[0, i], [i, 0]]`.
    IX,
    /// `(i/√2)·[[1, ω^m], [ω^-m, −1]]`.
    HTM(u8),
    /// `diag(ω^l, ω^-l)`.
    WPOW(u8),
}

/// A generator acting on basis slots `i < j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TwoLevelGate {
    pub kind: TwoLevelKind,
    pub i: usize,
    pub j: usize,
    pub inverse: bool,
}

impl TwoLevelGate {
    pub fn new(kind: TwoLevelKind, i: usize, j: usize) -> Self {
        assert!(i < j, "two-level indices must be increasing");
        TwoLevelGate {
            kind,
            i,
            j,
            inverse: false,
        }
    }

    pub fn ix(i: usize, j: usize) -> Self {
        TwoLevelGate::new(TwoLevelKind::IX, i, j)
    }

    pub fn htm(m: u8, i: usize, j: usize) -> Self {
        TwoLevelGate::new(TwoLevelKind::HTM(m % 8), i, j)
    }

    pub fn wpow(l: u8, i: usize, j: usize) -> Self {
        TwoLevelGate::new(TwoLevelKind::WPOW(l % 8), i, j)
    }

    pub fn inverse(self) -> Self {
        TwoLevelGate {
            inverse: !self.inverse,
            ..self
        }
    }

    /// The 2×2 block in matrix order, adjointed when `inverse` is set.
    pub fn block(&self) -> [[RingScalar; 2]; 2] {
        let w = |p: i64| RingScalar::omega_pow(p);
        let h = |p: i64| RingScalar::omega_pow(p).div_sqrt2();
        let b = match self.kind {
            TwoLevelKind::IX => [[RingScalar::zero(), w(2)], [w(2), RingScalar::zero()]],
            TwoLevelKind::HTM(m) => {
                let m = m as i64;
                [[h(2), h(m + 2)], [h(2 - m), h(6)]]
            }
            TwoLevelKind::WPOW(l) => {
                let l = l as i64;
                [[w(l), RingScalar::zero()], [RingScalar::zero(), w(-l)]]
            }
        };
        if self.inverse {
            [
                [b[0][0].conj(), b[1][0].conj()],
                [b[0][1].conj(), b[1][1].conj()],
            ]
        } else {
            b
        }
    }
}

impl fmt::Display for TwoLevelGate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            TwoLevelKind::IX => write!(f, "IX")?,
            TwoLevelKind::HTM(m) => write!(f, "HTM({m})")?,
            TwoLevelKind::WPOW(l) => write!(f, "WPOW({l})")?,
        }
        write!(
            f,
            "[{},{}]{}",
            self.i,
            self.j,
            if self.inverse { "†" } else { "" }
        )
    }
}

/// Exact action of a two-level gate.
pub fn apply_two_level(g: &TwoLevelGate, v: &StateVec) -> Result<StateVec, SynthError> {
    let n = v.dim();
    if g.i >= g.j || g.j >= n {
        return Err(SynthError::BadIndices(g.i, g.j, n));
    }
    let b = g.block();
    let (x, y) = (&v.entries[g.i], &v.entries[g.j]);
    let mut out = v.clone();
    out.entries[g.i] = (&(&b[0][0] * x) + &(&b[0][1] * y)).normalize();
    out.entries[g.j] = (&(&b[1][0] * x) + &(&b[1][1] * y)).normalize();
    Ok(out)
}

pub fn apply_sequence(seq: &[TwoLevelGate], v: &StateVec) -> Result<StateVec, SynthError> {
    seq.iter()
        .try_fold(v.clone(), |acc, g| apply_two_level(g, &acc))
}

/// Rotation classes of a 4-bit residue mod 2 under multiplication by `ω`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Orbit {
    /// Divisible by `√2`; left alone.
    Even,
    Single,
    Adjacent,
    Triple,
}

fn orbit(mask: u8) -> Orbit {
    match mask.count_ones() {
        1 => Orbit::Single,
        3 => Orbit::Triple,
        2 if mask != 0b0101 && mask != 0b1010 => Orbit::Adjacent,
        _ => Orbit::Even,
    }
}

/// Residue of `ω^m z` mod 2 from the residue of `z`.
fn rotate(mask: u8, m: u8) -> u8 {
    let m = m % 4;
    ((mask << m) | (mask >> (4 - m))) & 0xF
}

/// Least `m` with `mask_x ⊕ rot(mask_y, m) = want`.
fn find_m(mask_x: u8, mask_y: u8, want: u8) -> Option<u8> {
    (0..4).find(|&m| mask_x ^ rotate(mask_y, m) == want)
}

/// Gates lowering the least denominator exponent by one.
pub fn reduce_step(v: &StateVec) -> Result<(Vec<TwoLevelGate>, StateVec), SynthError> {
    let m = v.lde();
    if m == 0 {
        return Ok((Vec::new(), v.clone()));
    }
    let masks: Vec<u8> = v.numerators(m).iter().map(RingInt::residue_mod2).collect();
    let of =
        |o: Orbit| -> Vec<usize> { (0..masks.len()).filter(|&i| orbit(masks[i]) == o).collect() };
    let (single, adjacent, triple) = (of(Orbit::Single), of(Orbit::Adjacent), of(Orbit::Triple));
    if (single.len() + triple.len()) % 2 == 1 || adjacent.len() % 2 == 1 {
        return Err(SynthError::Parity(m));
    }

    let mut gates = Vec::new();
    let mut state = v.clone();
    let mut pending = vec![single, adjacent, triple];
    if pending[0].len() % 2 == 1 {
        // one weight-1 and one weight-3 residue combine to two adjacent ones
        let a = pending[0].remove(0);
        let c = pending[2].remove(0);
        let (i, j) = (a.min(c), a.max(c));
        let mm = find_m(masks[i], masks[j], 0b1111).expect("complementary residues");
        let g = TwoLevelGate::htm(mm, i, j);
        state = apply_two_level(&g, &state)?;
        gates.push(g);
        let new_masks: Vec<u8> = state
            .numerators(m)
            .iter()
            .map(RingInt::residue_mod2)
            .collect();
        debug_assert!(
            orbit(new_masks[i]) == Orbit::Adjacent && orbit(new_masks[j]) == Orbit::Adjacent
        );
        pending[1].extend([i, j]);
        pending[1].sort_unstable();
    }
    let masks: Vec<u8> = state
        .numerators(m)
        .iter()
        .map(RingInt::residue_mod2)
        .collect();
    for group in pending {
        for pair in group.chunks(2) {
            let (i, j) = (pair[0], pair[1]);
            let mm = find_m(masks[i], masks[j], 0).ok_or(SynthError::Parity(m))?;
            let g = TwoLevelGate::htm(mm, i, j);
            state = apply_two_level(&g, &state)?;
            gates.push(g);
        }
    }
    let state = state.normalized();
    if state.lde() >= m {
        return Err(SynthError::Parity(m));
    }
    Ok((gates, state))
}

/// Gates mapping `v` exactly to `e₀`, in application order.
pub fn column_reduce(v: &StateVec) -> Result<Vec<TwoLevelGate>, SynthError> {
    if !v.is_unit() {
        return Err(SynthError::NotUnit);
    }
    let mut gates = Vec::new();
    let mut state = v.clone().normalized();
    while state.lde() > 0 {
        let (g, next) = reduce_step(&state)?;
        gates.extend(g);
        state = next;
    }
    let (j, l) = state
        .entries
        .iter()
        .enumerate()
        .find_map(|(j, e)| e.is_omega_power().map(|l| (j, l)))
        .ok_or(SynthError::NotUnit)?;
    let mut l = l;
    if j != 0 {
        gates.push(TwoLevelGate::ix(0, j));
        l = (l + 2) % 8;
    }
    if l != 0 {
        gates.push(TwoLevelGate::wpow((8 - l) % 8, 0, 1));
    }
    Ok(gates)
}

/// Gates mapping `e₀` exactly to `v`, in application order.
pub fn prep_sequence(v: &StateVec) -> Result<Vec<TwoLevelGate>, SynthError> {
    Ok(column_reduce(v)?
        .into_iter()
        .rev()
        .map(TwoLevelGate::inverse)
        .collect())
}
