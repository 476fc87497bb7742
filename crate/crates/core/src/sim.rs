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

//! Dense exact simulation over `D[ω]` and certified distances.

use crate::compile::{Circuit, PrimGate};
use crate::ring::{evaluate, ComplexInterval, Dyadic, RealInterval, RingScalar};
use crate::synth::StateVec;

/// A square matrix over `D[ω]`, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactMatrix {
    pub dim: usize,
    pub entries: Vec<RingScalar>,
}

impl ExactMatrix {
    pub fn zero(dim: usize) -> Self {
        ExactMatrix {
            dim,
            entries: vec![RingScalar::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = ExactMatrix::zero(dim);
        for i in 0..dim {
            m.entries[i * dim + i] = RingScalar::one();
        }
        m
    }

    pub fn get(&self, r: usize, c: usize) -> &RingScalar {
        &self.entries[r * self.dim + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: RingScalar) {
        self.entries[r * self.dim + c] = v;
    }

    pub fn column(&self, c: usize) -> StateVec {
        StateVec::new((0..self.dim).map(|r| self.get(r, c).clone()).collect())
    }

    pub fn from_columns(cols: &[StateVec]) -> Self {
        let dim = cols.len();
        let mut m = ExactMatrix::zero(dim);
        for (c, col) in cols.iter().enumerate() {
            for r in 0..dim {
                m.set(r, c, col.entries[r].clone());
            }
        }
        m
    }

    pub fn adjoint(&self) -> Self {
        let mut m = ExactMatrix::zero(self.dim);
        for r in 0..self.dim {
            for c in 0..self.dim {
                m.set(c, r, self.get(r, c).conj());
            }
        }
        m
    }

    pub fn mul(&self, other: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.dim, other.dim);
        let n = self.dim;
        let mut m = ExactMatrix::zero(n);
        for r in 0..n {
            for c in 0..n {
                let mut acc = RingScalar::zero();
                for k in 0..n {
                    let (a, b) = (self.get(r, k), other.get(k, c));
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &(a * b);
                    }
                }
                m.set(r, c, acc.normalize());
            }
        }
        m
    }

    pub fn is_unitary(&self) -> bool {
        exact_equal(&self.adjoint().mul(self), &ExactMatrix::identity(self.dim))
    }

    /// `diag(I, block)` with the block in the lower-right corner.
    pub fn controlled(block: &ExactMatrix) -> ExactMatrix {
        let n = block.dim;
        let mut m = ExactMatrix::identity(2 * n);
        for r in 0..n {
            for c in 0..n {
                m.set(n + r, n + c, block.get(r, c).clone());
            }
        }
        m
    }

    /// Identity with a 2×2 block placed at rows and columns `(i, j)`.
    pub fn two_level(dim: usize, i: usize, j: usize, block: &[[RingScalar; 2]; 2]) -> ExactMatrix {
        let mut m = ExactMatrix::identity(dim);
        m.set(i, i, block[0][0].clone());
        m.set(i, j, block[0][1].clone());
        m.set(j, i, block[1][0].clone());
        m.set(j, j, block[1][1].clone());
        m
    }
}

/// Entrywise value equality.
pub fn exact_equal<T: PartialEq>(a: &T, b: &T) -> bool {
    a == b
}

fn bit(n_qubits: usize, q: usize) -> usize {
    1 << (n_qubits - 1 - q)
}

/// Exact action of one gate on a state of `2^n_qubits` amplitudes.
pub fn apply_gate_entries(g: &PrimGate, n_qubits: usize, v: &mut [RingScalar]) {
    let dim = v.len();
    debug_assert_eq!(dim, 1 << n_qubits);
    match *g {
        PrimGate::Cnot(c, t) => {
            let (bc, bt) = (bit(n_qubits, c), bit(n_qubits, t));
            for idx in 0..dim {
                if idx & bc != 0 && idx & bt == 0 {
                    v.swap(idx, idx | bt);
                }
            }
        }
        PrimGate::X(q) => {
            let b = bit(n_qubits, q);
            for idx in (0..dim).filter(|i| i & b == 0) {
                v.swap(idx, idx | b);
            }
        }
        PrimGate::H(q) => {
            let b = bit(n_qubits, q);
            for idx in (0..dim).filter(|i| i & b == 0) {
                let (x, y) = (&v[idx], &v[idx | b]);
                let sum = (x + y).div_sqrt2().normalize();
                let diff = (x - y).div_sqrt2().normalize();
                v[idx] = sum;
                v[idx | b] = diff;
            }
        }
        _ => {
            let (q, l) = g.phase_exponent().expect("remaining gates are diagonal");
            let b = bit(n_qubits, q);
            for idx in (0..dim).filter(|i| i & b != 0) {
                v[idx] = v[idx].omega_mul(l as i64);
            }
        }
    }
}

pub fn apply_gate(g: &PrimGate, n_qubits: usize, v: &StateVec) -> StateVec {
    let mut out = v.clone();
    apply_gate_entries(g, n_qubits, &mut out.entries);
    out
}

/// Runs a circuit on a state.
pub fn run(c: &Circuit, v: &StateVec) -> StateVec {
    let mut out = v.clone();
    for g in &c.gates {
        apply_gate_entries(g, c.n_qubits, &mut out.entries);
    }
    out
}

/// Left-multiplies a matrix by one gate.
pub fn apply_gate_matrix(g: &PrimGate, n_qubits: usize, m: &ExactMatrix) -> ExactMatrix {
    let cols: Vec<StateVec> = (0..m.dim)
        .map(|c| apply_gate(g, n_qubits, &m.column(c)))
        .collect();
    ExactMatrix::from_columns(&cols)
}

/// The unitary of a circuit, later gates multiplying on the left.
pub fn circuit_matrix(c: &Circuit) -> ExactMatrix {
    let dim = 1 << c.n_qubits;
    let cols: Vec<StateVec> = (0..dim).map(|i| run(c, &StateVec::basis(dim, i))).collect();
    ExactMatrix::from_columns(&cols)
}

/// Interval enclosure of every entry.
pub fn enclose(v: &StateVec, prec: u32) -> Vec<ComplexInterval> {
    v.entries.iter().map(|e| evaluate(e, prec)).collect()
}

/// Certified upper bound on `‖a − b‖` for interval vectors.
pub fn interval_distance(a: &[ComplexInterval], b: &[ComplexInterval], prec: u32) -> Dyadic {
    assert_eq!(a.len(), b.len(), "dimension mismatch");
    let sq = a
        .iter()
        .zip(b)
        .map(|(x, y)| (x - y).norm_sq())
        .fold(RealInterval::from_int(0), |acc, t| &acc + &t);
    sq.hi.sqrt_ceil(prec as i64)
}

/// Certified upper bound on `‖a − b‖`.
pub fn certified_distance(a: &StateVec, b: &StateVec, prec: u32) -> Dyadic {
    assert_eq!(a.dim(), b.dim(), "dimension mismatch");
    let diff: Vec<RingScalar> = a
        .entries
        .iter()
        .zip(&b.entries)
        .map(|(x, y)| x - y)
        .collect();
    let zero = vec![ComplexInterval::zero(); diff.len()];
    interval_distance(&enclose(&StateVec::new(diff), prec + 4), &zero, prec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::RingInt;
    use num_bigint::BigInt;

    fn c(n: usize, gates: Vec<PrimGate>) -> Circuit {
        Circuit::from_gates(n, gates)
    }

    #[test]
    fn gate_examples() {
        let h = apply_gate(&PrimGate::H(0), 1, &StateVec::basis(2, 0));
        let r = RingScalar::new(RingInt::one(), 1);
        assert_eq!(h.entries, vec![r.clone(), r]);
        let t = apply_gate(&PrimGate::T(0), 1, &StateVec::basis(2, 1));
        assert_eq!(t.entries[1], RingScalar::omega_pow(1));
        let x = apply_gate(&PrimGate::Cnot(0, 1), 2, &StateVec::basis(4, 2));
        assert_eq!(x, StateVec::basis(4, 3));
    }

    #[test]
    fn matrix_examples() {
        assert_eq!(circuit_matrix(&Circuit::new(2)), ExactMatrix::identity(4));
        let h = circuit_matrix(&c(1, vec![PrimGate::H(0)]));
        let r = RingScalar::new(RingInt::one(), 1);
        assert_eq!(h.entries, vec![r.clone(), r.clone(), r.clone(), -&r]);
        assert!(exact_equal(
            &circuit_matrix(&c(1, vec![PrimGate::H(0); 2])),
            &ExactMatrix::identity(2)
        ));
        assert!(exact_equal(
            &circuit_matrix(&c(1, vec![PrimGate::T(0); 8])),
            &ExactMatrix::identity(2)
        ));
        assert!(!exact_equal(
            &circuit_matrix(&c(1, vec![PrimGate::T(0); 4])),
            &ExactMatrix::identity(2)
        ));
    }

    #[test]
    fn qubit_zero_is_most_significant() {
        let m = circuit_matrix(&c(3, vec![PrimGate::X(0)]));
        assert_eq!(*m.get(4, 0), RingScalar::one());
        let m = circuit_matrix(&c(3, vec![PrimGate::X(2)]));
        assert_eq!(*m.get(1, 0), RingScalar::one());
    }

    #[test]
    fn random_circuits_stay_unitary() {
        let mut rng = crate::numtheory::RandomSource::new(6);
        for _ in 0..20 {
            let mut circ = Circuit::new(3);
            for _ in 0..40 {
                let q = (rng.next_u64() % 3) as usize;
                let g = match rng.next_u64() % 8 {
                    0 => PrimGate::H(q),
                    1 => PrimGate::T(q),
                    2 => PrimGate::Tdg(q),
                    3 => PrimGate::S(q),
                    4 => PrimGate::Sdg(q),
                    5 => PrimGate::X(q),
                    6 => PrimGate::Z(q),
                    _ => PrimGate::Cnot(q, (q + 1) % 3),
                };
                circ.push(g);
            }
            let m = circuit_matrix(&circ);
            assert!(m.is_unitary());
            let v = run(&circ, &StateVec::basis(8, 5));
            assert!(v.is_unit());
            assert_eq!(v, m.column(5));
            let back = circuit_matrix(&circ.adjoint()).mul(&m);
            assert_eq!(back, ExactMatrix::identity(8));
        }
    }

    #[test]
    fn distance_examples() {
        let e0 = StateVec::basis(4, 0);
        let e1 = StateVec::basis(4, 1);
        let d = certified_distance(&e0, &e0, 64);
        assert!(d <= Dyadic::new(BigInt::from(1), -60));
        let d = certified_distance(&e0, &e1, 64);
        let sqrt2 = std::f64::consts::SQRT_2;
        assert!(d.to_f64() >= sqrt2 - 1e-15 && d.to_f64() <= sqrt2 + 1e-12);
    }
}
