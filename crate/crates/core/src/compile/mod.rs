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

//! Lowering two-level generators to Clifford+T circuits.
//!
//! A generator on slots `(i, j)` is compiled as `P⁻¹ · Λ(U) · P`, where the
//! permutation `P` sends `i ↦ 2`, `j ↦ 3` using X and CNOT on the two
//! ancillae, and `Λ(U)` is a catalog core with the high ancilla as control.
//! The controlled form adds the data qubit as a second control.

mod catalog;
mod circuit;
mod peephole;
mod pipeline;

use std::collections::{HashMap, VecDeque};
use std::sync::{Mutex, OnceLock};

pub use catalog::{
    catalog, cch_template, ch_template, cs_gates, cs_template, lambda_core, toffoli_gates,
    toffoli_template, CatalogEntry,
};
pub use circuit::{phase_gates, Circuit, ParseError, PrimGate, GATE_NAMES};
pub use peephole::peephole;
pub use pipeline::{
    operator_bound, synth_lambda, PipelineError, SynthOptions, Synthesis, SynthesisReport,
    VerifyFlags, DEFAULT_PRECISION_BITS,
};

use crate::synth::TwoLevelGate;

/// Basis permutations available to the conjugator search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum PermGate {
    X(usize),
    Cnot(usize, usize),
    Toffoli(usize, usize, usize),
}

impl PermGate {
    fn apply(&self, n: usize, idx: usize) -> usize {
        let bit = |q: usize| 1 << (n - 1 - q);
        match *self {
            PermGate::X(q) => idx ^ bit(q),
            PermGate::Cnot(c, t) if idx & bit(c) != 0 => idx ^ bit(t),
            PermGate::Toffoli(a, b, t) if idx & bit(a) != 0 && idx & bit(b) != 0 => idx ^ bit(t),
            _ => idx,
        }
    }

    fn gates(&self) -> Vec<PrimGate> {
        match *self {
            PermGate::X(q) => vec![PrimGate::X(q)],
            PermGate::Cnot(c, t) => vec![PrimGate::Cnot(c, t)],
            PermGate::Toffoli(a, b, t) => toffoli_gates(a, b, t),
        }
    }
}

fn generators(n: usize) -> Vec<PermGate> {
    let mut g: Vec<PermGate> = (0..n).map(PermGate::X).collect();
    for c in 0..n {
        for t in 0..n {
            if c != t {
                g.push(PermGate::Cnot(c, t));
            }
        }
    }
    if n == 3 {
        g.extend([
            PermGate::Toffoli(0, 1, 2),
            PermGate::Toffoli(0, 2, 1),
            PermGate::Toffoli(1, 2, 0),
        ]);
    }
    g
}

fn search_conjugator(i: usize, j: usize, dim: usize) -> Circuit {
    let n = dim.trailing_zeros() as usize;
    let gens = generators(n);
    let goal = (dim - 2, dim - 1);
    let mut prev: HashMap<(usize, usize), ((usize, usize), PermGate)> = HashMap::new();
    let mut queue = VecDeque::from([(i, j)]);
    let mut seen = vec![(i, j)];
    while let Some(s) = queue.pop_front() {
        if s == goal {
            break;
        }
        for g in &gens {
            let next = (g.apply(n, s.0), g.apply(n, s.1));
            if !seen.contains(&next) {
                seen.push(next);
                prev.insert(next, (s, *g));
                queue.push_back(next);
            }
        }
    }
    let mut path = Vec::new();
    let mut cur = goal;
    while cur != (i, j) {
        let (p, g) = prev[&cur];
        path.push(g);
        cur = p;
    }
    path.reverse();
    Circuit::from_gates(n, path.iter().flat_map(PermGate::gates).collect())
}

type ConjugatorMemo = Mutex<HashMap<(usize, usize, usize), Circuit>>;

/// Shortest X/CNOT (and Toffoli for `dim = 8`) circuit mapping basis state
/// `i` to `dim − 2` and `j` to `dim − 1`, memoized.
pub fn permutation_conjugator(i: usize, j: usize, dim: usize) -> Circuit {
    assert!(
        i != j && i < dim && j < dim,
        "need distinct in-range indices"
    );
    assert!(dim == 4 || dim == 8, "dimension must be 4 or 8");
    static MEMO: OnceLock<ConjugatorMemo> = OnceLock::new();
    let memo = MEMO.get_or_init(|| Mutex::new(HashMap::new()));
    let mut table = memo.lock().expect("conjugator memo poisoned");
    table
        .entry((i, j, dim))
        .or_insert_with(|| search_conjugator(i, j, dim))
        .clone()
}

/// Circuit for one generator on the ancilla pair, optionally controlled on qubit 0.
///
/// Uncontrolled output has 2 qubits (ancillae 0, 1); controlled output has 3
/// qubits with the data qubit first.
pub fn compile_two_level(g: &TwoLevelGate, controlled: bool) -> Circuit {
    assert!(g.j < 4, "two-level gate must act on dimension 4");
    let (n, hi, lo) = if controlled { (3, 1, 2) } else { (2, 0, 1) };
    let conj = permutation_conjugator(g.i, g.j, 4).remap(&[hi, lo], n);
    let controls: Vec<usize> = if controlled { vec![0, hi] } else { vec![hi] };
    let mut core = Circuit::from_gates(n, lambda_core(g.kind, &controls, lo));
    if g.inverse {
        core = core.adjoint();
    }
    let mut c = conj.clone();
    c.append(&core);
    c.append(&conj.adjoint());
    c
}

fn compile_all(seq: &[TwoLevelGate], controlled: bool) -> Circuit {
    let mut c = Circuit::new(if controlled { 3 } else { 2 });
    for g in seq {
        c.append(&compile_two_level(g, controlled));
    }
    c
}

/// The two-qubit circuit `C` for a generator sequence, with peephole cleanup.
pub fn compile_sequence(seq: &[TwoLevelGate]) -> Circuit {
    peephole(&compile_all(seq, false))
}

/// `diag(I₄, C)` on three qubits, data qubit 0 as control.
pub fn controlize(seq: &[TwoLevelGate]) -> Circuit {
    peephole(&compile_all(seq, true))
}

/// As [`controlize`] without the peephole pass.
pub fn controlize_raw(seq: &[TwoLevelGate]) -> Circuit {
    compile_all(seq, true)
}
