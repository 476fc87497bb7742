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

use super::circuit::{phase_gates, Circuit, PrimGate};

/// Index of the last gate in `out` sharing a wire with `g`.
fn last_on(out: &[PrimGate], g: &PrimGate) -> Option<usize> {
    let qs = g.qubits();
    out.iter().rposition(|h| qs.iter().any(|&q| h.touches(q)))
}

fn push(out: &mut Vec<PrimGate>, g: PrimGate) {
    if let Some((q, l)) = g.phase_exponent() {
        // collect the trailing run of phase gates on this wire
        let mut total = l as i64;
        let mut idx = out.len();
        let mut run = Vec::new();
        while let Some(i) = out[..idx].iter().rposition(|h| h.touches(q)) {
            match out[i].phase_exponent() {
                Some((_, p)) => {
                    total += p as i64;
                    run.push(i);
                    idx = i;
                }
                None => break,
            }
        }
        for i in run {
            out.remove(i);
        }
        out.extend(phase_gates(q, total));
        return;
    }
    if let Some(i) = last_on(out, &g) {
        let cancels =
            out[i] == g && matches!(g, PrimGate::H(_) | PrimGate::X(_) | PrimGate::Cnot(..));
        if cancels {
            out.remove(i);
            return;
        }
    }
    out.push(g);
}

/// Cancels adjacent self-inverse pairs and fuses runs of phase gates per wire.
pub fn peephole(c: &Circuit) -> Circuit {
    let mut out = Vec::with_capacity(c.len());
    for &g in &c.gates {
        push(&mut out, g);
    }
    Circuit::from_gates(c.n_qubits, out)
}
