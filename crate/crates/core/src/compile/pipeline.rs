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

//! End-to-end synthesis of `Λ(e^{iφ})` with exact verification.

use std::collections::BTreeMap;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::circuit::{phase_gates, Circuit};
use super::{compile_all, compile_sequence, controlize};
use crate::numtheory::RandomSource;
use crate::ring::{decimal_string, ComplexInterval, Dyadic};
use crate::sim::{
    certified_distance, circuit_matrix, enclose, interval_distance, run, ExactMatrix,
};
use crate::synth::{apply_sequence, prep_sequence, StateVec, SynthError, TwoLevelGate};
use crate::target::{approximate, error_bound, AngleSpec, Phase, TargetApprox, TargetError};

pub const DEFAULT_PRECISION_BITS: u32 = 128;

/// Significant digits in report decimals.
const REPORT_DIGITS: usize = 6;

#[derive(Clone, Debug)]
pub struct SynthOptions {
    pub precision_bits: u32,
    pub peephole: bool,
}

impl Default for SynthOptions {
    fn default() -> Self {
        SynthOptions {
            precision_bits: DEFAULT_PRECISION_BITS,
            peephole: true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyFlags {
    pub prep_exact: bool,
    pub controlled_block_exact: bool,
}

/// Certification metadata for one synthesized block. Reals are decimal
/// strings rounded upward.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SynthesisReport {
    pub phi: String,
    pub octant: u8,
    pub k: u32,
    pub eps_target: String,
    pub eps_bound: String,
    pub eps_certified: String,
    #[serde(rename = "M")]
    pub m: String,
    pub quad: [String; 4],
    pub gate_counts: BTreeMap<String, usize>,
    pub t_count: usize,
    pub total_gates: usize,
    pub two_level_count: usize,
    pub ancillae: usize,
    pub seed: u64,
    pub verify: VerifyFlags,
}

impl SynthesisReport {
    pub fn all_verified(&self) -> bool {
        self.verify.prep_exact && self.verify.controlled_block_exact
    }
}

/// Everything produced by [`synth_lambda`].
#[derive(Clone, Debug)]
pub struct Synthesis {
    /// Three-qubit circuit: `T^t` on the data qubit, then the controlled block.
    pub circuit: Circuit,
    /// Two-qubit preparation circuit `C` with `C|00⟩ = v`.
    pub c_part: Circuit,
    pub target: TargetApprox,
    pub prep: Vec<TwoLevelGate>,
    pub eps_bound: Dyadic,
    pub eps_certified: Dyadic,
    /// Certified operator distance of `circuit` to `Λ(e^{iφ})` on ancillae `|00⟩`.
    pub operator_bound: Dyadic,
    pub report: SynthesisReport,
}

#[derive(Debug, Error)]
pub enum PipelineError {
    #[error(transparent)]
    Target(#[from] TargetError),
    #[error(transparent)]
    Synth(#[from] SynthError),
    #[error("certified error {certified} exceeds requested {requested}")]
    BoundExceeded {
        certified: String,
        requested: String,
    },
}

/// Certified bound on the distance between a three-qubit circuit and
/// `Λ(e^{iφ})` restricted to ancillae in `|00⟩`: `sqrt(d₀² + d₁²)` where
/// `d₀`, `d₁` are the column errors on `|000⟩` and `|100⟩`.
pub fn operator_bound(c: &Circuit, phi: &Phase, prec: u32) -> Result<Dyadic, TargetError> {
    assert_eq!(c.n_qubits, 3, "operator bound is defined on three qubits");
    let e0 = StateVec::basis(8, 0);
    let e4 = StateVec::basis(8, 4);
    let d0 = certified_distance(&run(c, &e0), &e0, prec);
    let mut ideal = vec![ComplexInterval::zero(); 8];
    ideal[4] = phi.exp_i(prec + 8)?;
    let d1 = interval_distance(&enclose(&run(c, &e4), prec + 8), &ideal, prec);
    Ok((&(&d0 * &d0) + &(&d1 * &d1)).sqrt_ceil(prec as i64))
}

fn sequence_matrix(seq: &[TwoLevelGate]) -> Result<ExactMatrix, SynthError> {
    let cols = (0..4)
        .map(|i| apply_sequence(seq, &StateVec::basis(4, i)))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(ExactMatrix::from_columns(&cols))
}

/// Synthesizes and verifies `Λ(e^{iφ})` to precision `ε`.
pub fn synth_lambda(
    phi: &AngleSpec,
    eps: &BigRational,
    seed: u64,
    opts: &SynthOptions,
) -> Result<Synthesis, PipelineError> {
    let prec = opts.precision_bits;
    let phase = phi.phase();
    let mut rng = RandomSource::new(seed);
    let target = approximate(&phase, eps, &mut rng)?;
    let prep = prep_sequence(&target.v)?;

    let (c_part, block) = if opts.peephole {
        (compile_sequence(&prep), controlize(&prep))
    } else {
        (compile_all(&prep, false), compile_all(&prep, true))
    };
    let mut circuit = Circuit::from_gates(3, phase_gates(0, target.octant as i64));
    circuit.append(&block);

    let c_mat = circuit_matrix(&c_part);
    let prep_exact = c_mat.column(0) == target.v;
    let controlled_block_exact = circuit_matrix(&block) == ExactMatrix::controlled(&c_mat)
        && c_mat == sequence_matrix(&prep)?;

    let eps_bound = error_bound(target.k, prec as i64).hi;
    let eps_certified = target.exact_error(prec);
    let op = operator_bound(&circuit, &phase, prec)?;
    let eps_d = Dyadic::rational_bounds(eps, prec as i64 + 8).0;
    if eps_certified > eps_bound || op > eps_d {
        return Err(PipelineError::BoundExceeded {
            certified: op.to_decimal_up(REPORT_DIGITS),
            requested: decimal_string(eps, REPORT_DIGITS, false),
        });
    }

    let q = &target.quad;
    let report = SynthesisReport {
        phi: phi.to_string(),
        octant: target.octant,
        k: target.k,
        eps_target: decimal_string(eps, REPORT_DIGITS, true),
        eps_bound: eps_bound.to_decimal_up(REPORT_DIGITS),
        eps_certified: eps_certified.to_decimal_up(REPORT_DIGITS),
        m: target.m.to_string(),
        quad: [
            q.a.to_string(),
            q.b.to_string(),
            q.c.to_string(),
            q.d.to_string(),
        ],
        gate_counts: circuit.counts(),
        t_count: circuit.t_count(),
        total_gates: circuit.len(),
        two_level_count: prep.len(),
        ancillae: 2,
        seed,
        verify: VerifyFlags {
            prep_exact,
            controlled_block_exact,
        },
    };
    Ok(Synthesis {
        circuit,
        c_part,
        target,
        prep,
        eps_bound,
        eps_certified,
        operator_bound: op,
        report,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::compile::PrimGate;
    use crate::target::parse_decimal;

    fn eps(s: &str) -> BigRational {
        parse_decimal(s).unwrap()
    }

    #[test]
    fn pi_over_4_is_one_t_gate() {
        let s = synth_lambda(
            &AngleSpec::pi_fraction(1, 4),
            &eps("1e-3"),
            1,
            &SynthOptions::default(),
        )
        .unwrap();
        assert_eq!(s.circuit.gates, vec![PrimGate::T(0)]);
        assert!(s.eps_certified.is_zero());
        assert_eq!(s.report.eps_certified, "0");
        assert!(s.report.all_verified());
    }

    #[test]
    fn pi_over_8_example() {
        let s = synth_lambda(
            &AngleSpec::pi_fraction(1, 8),
            &eps("0.1"),
            7,
            &SynthOptions::default(),
        )
        .unwrap();
        assert_eq!(s.report.k, 9);
        assert_eq!(s.report.m, "390");
        assert!(s.report.all_verified());
        assert!(s.circuit.len() <= 200 * (4 * 18 + 3));
        assert!(s.eps_certified <= s.eps_bound);
        let again = synth_lambda(
            &AngleSpec::pi_fraction(1, 8),
            &eps("0.1"),
            7,
            &SynthOptions::default(),
        )
        .unwrap();
        assert_eq!(s.circuit.emit(), again.circuit.emit());
        assert_eq!(s.report, again.report);
    }

    #[test]
    fn report_consistency() {
        let s = synth_lambda(
            &AngleSpec::parse("0.3").unwrap(),
            &eps("1e-4"),
            3,
            &SynthOptions::default(),
        )
        .unwrap();
        let r = &s.report;
        assert_eq!(r.gate_counts.values().sum::<usize>(), r.total_gates);
        assert_eq!(r.t_count, r.gate_counts["T"] + r.gate_counts["TDG"]);
        assert_eq!(r.ancillae, 2);
        assert!(s.operator_bound <= Dyadic::rational_bounds(&eps("1e-4"), 64).1);
    }

    #[test]
    fn peephole_is_optional() {
        let opts = SynthOptions {
            peephole: false,
            ..SynthOptions::default()
        };
        let raw = synth_lambda(&AngleSpec::parse("1.1").unwrap(), &eps("1e-3"), 5, &opts).unwrap();
        let opt = synth_lambda(
            &AngleSpec::parse("1.1").unwrap(),
            &eps("1e-3"),
            5,
            &SynthOptions::default(),
        )
        .unwrap();
        assert!(raw.report.all_verified() && opt.report.all_verified());
        assert!(opt.circuit.len() < raw.circuit.len());
        assert_eq!(circuit_matrix(&opt.circuit), circuit_matrix(&raw.circuit));
    }
}
