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

//! Verified gate templates.
//!
//! Identities used, in matrix order:
//! `Λ(iU) = Λ(i)·Λ(U)`, `Λ(KXK†) = K·Λ(X)·K†` with `K = S·H·T` so that
//! `KXK† = H`, `Λ(A†BA) = A†·Λ(B)·A` for `A` on the target, and
//! `W = T†·X·T·X`.

use super::circuit::{phase_gates, Circuit, PrimGate};
use crate::ring::RingScalar;
use crate::sim::{circuit_matrix, ExactMatrix};
use crate::synth::{TwoLevelGate, TwoLevelKind};

/// A named template with the matrix it must realize.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub matrix: ExactMatrix,
    pub template: Circuit,
}

impl CatalogEntry {
    pub fn verify(&self) -> bool {
        circuit_matrix(&self.template) == self.matrix
    }
}

/// Standard 7-T Toffoli on controls `c1`, `c2` and target `t`.
pub fn toffoli_gates(c1: usize, c2: usize, t: usize) -> Vec<PrimGate> {
    use PrimGate::*;
    vec![
        H(t),
        Cnot(c2, t),
        Tdg(t),
        Cnot(c1, t),
        T(t),
        Cnot(c2, t),
        Tdg(t),
        Cnot(c1, t),
        T(c2),
        T(t),
        H(t),
        Cnot(c1, c2),
        T(c1),
        Tdg(c2),
        Cnot(c1, c2),
    ]
}

/// `diag(1, 1, 1, i)` on `(c, t)`.
pub fn cs_gates(c: usize, t: usize) -> Vec<PrimGate> {
    use PrimGate::*;
    vec![T(c), T(t), Cnot(c, t), Tdg(t), Cnot(c, t)]
}

/// `X` on `t` controlled on every wire in `controls` (one or two).
fn controlled_x(controls: &[usize], t: usize) -> Vec<PrimGate> {
    match *controls {
        [c] => vec![PrimGate::Cnot(c, t)],
        [c1, c2] => toffoli_gates(c1, c2, t),
        _ => panic!("one or two controls supported"),
    }
}

/// Phase `i` when every control is set.
fn controlled_i(controls: &[usize]) -> Vec<PrimGate> {
    match *controls {
        [c] => vec![PrimGate::S(c)],
        [c1, c2] => cs_gates(c1, c2),
        _ => panic!("one or two controls supported"),
    }
}

/// `H` on `t` controlled on `controls`, as `K·Λ(X)·K†`.
fn controlled_h(controls: &[usize], t: usize) -> Vec<PrimGate> {
    use PrimGate::*;
    let mut g = vec![Sdg(t), H(t), Tdg(t)];
    g.extend(controlled_x(controls, t));
    g.extend([T(t), H(t), S(t)]);
    g
}

/// The block of a generator on target `t`, controlled on `controls`.
///
/// The block acts on `t` when all controls are 1, matching a two-level
/// gate on slots `(dim − 2, dim − 1)` when `t` is the last wire.
pub fn lambda_core(kind: TwoLevelKind, controls: &[usize], t: usize) -> Vec<PrimGate> {
    let mut g = Vec::new();
    match kind {
        TwoLevelKind::IX => {
            g.extend(controlled_x(controls, t));
            g.extend(controlled_i(controls));
        }
        TwoLevelKind::WPOW(l) => {
            g.extend(controlled_x(controls, t));
            g.extend(phase_gates(t, l as i64));
            g.extend(controlled_x(controls, t));
            g.extend(phase_gates(t, -(l as i64)));
        }
        TwoLevelKind::HTM(m) => {
            g.extend(phase_gates(t, m as i64));
            g.extend(controlled_h(controls, t));
            g.extend(phase_gates(t, -(m as i64)));
            g.extend(controlled_i(controls));
        }
    }
    g
}

pub fn toffoli_template() -> CatalogEntry {
    let mut m = ExactMatrix::identity(8);
    m.set(6, 6, RingScalar::zero());
    m.set(7, 7, RingScalar::zero());
    m.set(6, 7, RingScalar::one());
    m.set(7, 6, RingScalar::one());
    CatalogEntry {
        name: "toffoli".into(),
        matrix: m,
        template: Circuit::from_gates(3, toffoli_gates(0, 1, 2)),
    }
}

pub fn cs_template() -> CatalogEntry {
    let mut m = ExactMatrix::identity(4);
    m.set(3, 3, RingScalar::omega_pow(2));
    CatalogEntry {
        name: "cs".into(),
        matrix: m,
        template: Circuit::from_gates(2, cs_gates(0, 1)),
    }
}

fn hadamard_block() -> [[RingScalar; 2]; 2] {
    let r = RingScalar::one().div_sqrt2();
    [[r.clone(), r.clone()], [r.clone(), -&r]]
}

pub fn ch_template() -> CatalogEntry {
    CatalogEntry {
        name: "ch".into(),
        matrix: ExactMatrix::two_level(4, 2, 3, &hadamard_block()),
        template: Circuit::from_gates(2, controlled_h(&[0], 1)),
    }
}

pub fn cch_template() -> CatalogEntry {
    CatalogEntry {
        name: "cch".into(),
        matrix: ExactMatrix::two_level(8, 6, 7, &hadamard_block()),
        template: Circuit::from_gates(3, controlled_h(&[0, 1], 2)),
    }
}

fn generator_entry(kind: TwoLevelKind, controlled: bool) -> CatalogEntry {
    let (n, controls, dim): (usize, &[usize], usize) = if controlled {
        (3, &[0, 1], 8)
    } else {
        (2, &[0], 4)
    };
    let g = TwoLevelGate::new(kind, 0, 1);
    CatalogEntry {
        name: format!("{}{}", if controlled { "c-" } else { "" }, g).replace("[0,1]", ""),
        matrix: ExactMatrix::two_level(dim, dim - 2, dim - 1, &g.block()),
        template: Circuit::from_gates(n, lambda_core(kind, controls, n - 1)),
    }
}

/// Every template used by the compiler.
pub fn catalog() -> Vec<CatalogEntry> {
    let mut entries = vec![
        toffoli_template(),
        cs_template(),
        ch_template(),
        cch_template(),
    ];
    let mut kinds = vec![TwoLevelKind::IX];
    for p in 0..8 {
        kinds.push(TwoLevelKind::HTM(p));
        kinds.push(TwoLevelKind::WPOW(p));
    }
    for controlled in [false, true] {
        for &k in &kinds {
            entries.push(generator_entry(k, controlled));
        }
    }
    entries
}
