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

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

/// Primitive Clifford+T gates. Qubit 0 is the most significant bit of a basis index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PrimGate {
    H(usize),
    T(usize),
    Tdg(usize),
    S(usize),
    Sdg(usize),
    X(usize),
    Z(usize),
    Cnot(usize, usize),
}

pub const GATE_NAMES: [&str; 8] = ["H", "T", "TDG", "S", "SDG", "X", "Z", "CNOT"];

impl PrimGate {
    pub fn name(&self) -> &'static str {
        match self {
            PrimGate::H(_) => "H",
            PrimGate::T(_) => "T",
            PrimGate::Tdg(_) => "TDG",
            PrimGate::S(_) => "S",
            PrimGate::Sdg(_) => "SDG",
            PrimGate::X(_) => "X",
            PrimGate::Z(_) => "Z",
            PrimGate::Cnot(..) => "CNOT",
        }
    }

    pub fn qubits(&self) -> Vec<usize> {
        match *self {
            PrimGate::Cnot(c, t) => vec![c, t],
            PrimGate::H(q)
            | PrimGate::T(q)
            | PrimGate::Tdg(q)
            | PrimGate::S(q)
            | PrimGate::Sdg(q)
            | PrimGate::X(q)
            | PrimGate::Z(q) => vec![q],
        }
    }

    pub fn touches(&self, q: usize) -> bool {
        self.qubits().contains(&q)
    }

    pub fn adjoint(&self) -> PrimGate {
        match *self {
            PrimGate::T(q) => PrimGate::Tdg(q),
            PrimGate::Tdg(q) => PrimGate::T(q),
            PrimGate::S(q) => PrimGate::Sdg(q),
            PrimGate::Sdg(q) => PrimGate::S(q),
            g => g,
        }
    }

    /// Exponent `l` when the gate is `diag(1, ω^l)`.
    pub fn phase_exponent(&self) -> Option<(usize, u8)> {
        match *self {
            PrimGate::T(q) => Some((q, 1)),
            PrimGate::S(q) => Some((q, 2)),
            PrimGate::Z(q) => Some((q, 4)),
            PrimGate::Sdg(q) => Some((q, 6)),
            PrimGate::Tdg(q) => Some((q, 7)),
            _ => None,
        }
    }

    pub fn remap(&self, wires: &[usize]) -> PrimGate {
        match *self {
            PrimGate::H(q) => PrimGate::H(wires[q]),
            PrimGate::T(q) => PrimGate::T(wires[q]),
            PrimGate::Tdg(q) => PrimGate::Tdg(wires[q]),
            PrimGate::S(q) => PrimGate::S(wires[q]),
            PrimGate::Sdg(q) => PrimGate::Sdg(wires[q]),
            PrimGate::X(q) => PrimGate::X(wires[q]),
            PrimGate::Z(q) => PrimGate::Z(wires[q]),
            PrimGate::Cnot(c, t) => PrimGate::Cnot(wires[c], wires[t]),
        }
    }

    fn from_parts(name: &str, ops: &[usize]) -> Option<PrimGate> {
        Some(match (name, ops) {
            ("H", [q]) => PrimGate::H(*q),
            ("T", [q]) => PrimGate::T(*q),
            ("TDG", [q]) => PrimGate::Tdg(*q),
            ("S", [q]) => PrimGate::S(*q),
            ("SDG", [q]) => PrimGate::Sdg(*q),
            ("X", [q]) => PrimGate::X(*q),
            ("Z", [q]) => PrimGate::Z(*q),
            ("CNOT", [c, t]) if c != t => PrimGate::Cnot(*c, *t),
            _ => return None,
        })
    }
}

impl fmt::Display for PrimGate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())?;
        for q in self.qubits() {
            write!(f, " {q}")?;
        }
        Ok(())
    }
}

/// `diag(1, ω^l)` on qubit `q` with at most two gates.
pub fn phase_gates(q: usize, l: i64) -> Vec<PrimGate> {
    match l.rem_euclid(8) {
        0 => vec![],
        1 => vec![PrimGate::T(q)],
        2 => vec![PrimGate::S(q)],
        3 => vec![PrimGate::S(q), PrimGate::T(q)],
        4 => vec![PrimGate::Z(q)],
        5 => vec![PrimGate::Z(q), PrimGate::T(q)],
        6 => vec![PrimGate::Sdg(q)],
        _ => vec![PrimGate::Tdg(q)],
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {0}: expected header `{1}`")]
    Header(usize, String),
    #[error("line {0}: unknown or malformed gate `{1}`")]
    Gate(usize, String),
    #[error("line {0}: operand out of range in `{1}`")]
    Operand(usize, String),
    #[error("circuit text must use LF line endings without trailing whitespace")]
    Whitespace,
}

/// A time-ordered gate list; index 0 is applied first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Circuit {
    pub n_qubits: usize,
    pub gates: Vec<PrimGate>,
}

impl Circuit {
    pub fn new(n_qubits: usize) -> Self {
        Circuit {
            n_qubits,
            gates: Vec::new(),
        }
    }

    pub fn from_gates(n_qubits: usize, gates: Vec<PrimGate>) -> Self {
        let c = Circuit { n_qubits, gates };
        debug_assert!(c.operands_valid());
        c
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    pub fn push(&mut self, g: PrimGate) {
        self.gates.push(g);
    }

    pub fn extend(&mut self, gates: impl IntoIterator<Item = PrimGate>) {
        self.gates.extend(gates);
    }

    pub fn append(&mut self, other: &Circuit) {
        self.gates.extend_from_slice(&other.gates);
    }

    pub fn adjoint(&self) -> Circuit {
        Circuit {
            n_qubits: self.n_qubits,
            gates: self.gates.iter().rev().map(PrimGate::adjoint).collect(),
        }
    }

    /// Places qubit `q` of this circuit on wire `wires[q]` of an `n`-qubit circuit.
    pub fn remap(&self, wires: &[usize], n_qubits: usize) -> Circuit {
        Circuit::from_gates(
            n_qubits,
            self.gates.iter().map(|g| g.remap(wires)).collect(),
        )
    }

    pub fn operands_valid(&self) -> bool {
        self.gates
            .iter()
            .all(|g| g.qubits().iter().all(|&q| q < self.n_qubits))
    }

    /// Gate counts by name, including zero entries for unused kinds.
    pub fn counts(&self) -> BTreeMap<String, usize> {
        let mut m: BTreeMap<String, usize> =
            GATE_NAMES.iter().map(|n| (n.to_string(), 0)).collect();
        for g in &self.gates {
            *m.entry(g.name().to_string()).or_default() += 1;
        }
        m
    }

    pub fn t_count(&self) -> usize {
        self.gates
            .iter()
            .filter(|g| matches!(g, PrimGate::T(_) | PrimGate::Tdg(_)))
            .count()
    }

    /// Text form: three header lines then one gate per line.
    pub fn emit(&self) -> String {
        let mut s = String::from("# sqct v1\n");
        s.push_str(&format!("# qubits {}\n", self.n_qubits));
        let anc: Vec<String> = (1..self.n_qubits).map(|q| q.to_string()).collect();
        if anc.is_empty() {
            s.push_str("# ancillae\n");
        } else {
            s.push_str(&format!("# ancillae {}\n", anc.join(" ")));
        }
        for g in &self.gates {
            s.push_str(&g.to_string());
            s.push('\n');
        }
        s
    }

    pub fn parse(text: &str) -> Result<Circuit, ParseError> {
        if text.contains('\r') {
            return Err(ParseError::Whitespace);
        }
        let lines: Vec<&str> = text.lines().collect();
        if lines.iter().any(|l| l.ends_with([' ', '\t'])) {
            return Err(ParseError::Whitespace);
        }
        let header = |i: usize, want: &str| -> Result<&str, ParseError> {
            let l = lines.get(i).copied().unwrap_or("");
            l.strip_prefix(want)
                .ok_or_else(|| ParseError::Header(i + 1, want.trim().to_string()))
        };
        if !header(0, "# sqct v1")?.is_empty() {
            return Err(ParseError::Header(1, "# sqct v1".into()));
        }
        let n: usize = header(1, "# qubits ")?
            .parse()
            .map_err(|_| ParseError::Header(2, "# qubits N".into()))?;
        let anc = header(2, "# ancillae")?;
        let expected: String = (1..n).map(|q| format!(" {q}")).collect();
        if anc != expected {
            return Err(ParseError::Header(3, format!("# ancillae{expected}")));
        }
        let mut c = Circuit::new(n);
        for (idx, line) in lines.iter().enumerate().skip(3) {
            let mut parts = line.split(' ');
            let name = parts.next().unwrap_or("");
            let ops: Option<Vec<usize>> = parts
                .map(|p| {
                    (!p.is_empty() && p.chars().all(|ch| ch.is_ascii_digit()))
                        .then(|| p.parse().ok())
                        .flatten()
                })
                .collect();
            let ops = ops.ok_or_else(|| ParseError::Gate(idx + 1, line.to_string()))?;
            let g = PrimGate::from_parts(name, &ops)
                .ok_or_else(|| ParseError::Gate(idx + 1, line.to_string()))?;
            if ops.iter().any(|&q| q >= n) {
                return Err(ParseError::Operand(idx + 1, line.to_string()));
            }
            c.push(g);
        }
        Ok(c)
    }
}
