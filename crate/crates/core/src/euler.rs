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

//! Arbitrary single-qubit unitaries via `U = e^{iα}·Rz(β)·H·Rz(γ)·H·Rz(δ)`.
//!
//! With `Rz(θ) = e^{−iθ/2}·Λ(e^{iθ})` the data qubit runs
//! `Λ(δ), H, Λ(γ), H, Λ(β)`, which equals `U` up to the phase
//! `ψ = α − (β + γ + δ)/2`. With exact phase, `X·Λ(ψ)·X·Λ(ψ) = e^{iψ}·I`
//! is appended.
//!
//! Angles are extracted in `f64` and snapped to multiples of `π/4` when
//! within `1e-12`; the certified residual between `U` and the ideal product
//! of the chosen angles is charged against the budget.

use std::collections::BTreeMap;
use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI, TAU};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::compile::{
    synth_lambda, Circuit, PipelineError, PrimGate, SynthOptions, SynthesisReport,
};
use crate::ring::{decimal_string, inv_sqrt2, ComplexInterval, Dyadic, RealInterval};
use crate::target::{parse_decimal, AngleSpec, TargetError};

const SNAP_TOL: f64 = 1e-12;
const REPORT_DIGITS: usize = 6;

/// Exact 2×2 complex matrix, entries as `(re, im)`.
pub type Matrix2 = [[(BigRational, BigRational); 2]; 2];

#[derive(Debug, Error)]
pub enum EulerError {
    #[error("matrix file must hold 8 decimal numbers (re im for U00 U01 U10 U11)")]
    Format,
    #[error("matrix is not unitary within tolerance")]
    NotUnitary,
    #[error("Euler residual {0} leaves no budget for eps")]
    ResidualTooLarge(String),
    #[error(transparent)]
    Target(#[from] TargetError),
    #[error(transparent)]
    Pipeline(#[from] PipelineError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EulerDecomposition {
    pub alpha: AngleSpec,
    pub beta: AngleSpec,
    pub gamma: AngleSpec,
    pub delta: AngleSpec,
    /// Phase left over by the three `Λ` blocks.
    pub psi: AngleSpec,
}

/// Reads `re im` pairs for `U00 U01 U10 U11`, separated by any whitespace.
pub fn parse_matrix(text: &str) -> Result<Matrix2, EulerError> {
    let nums: Vec<BigRational> = text
        .split_whitespace()
        .map(parse_decimal)
        .collect::<Option<_>>()
        .ok_or(EulerError::Format)?;
    if nums.len() != 8 {
        return Err(EulerError::Format);
    }
    let e = |i: usize| (nums[2 * i].clone(), nums[2 * i + 1].clone());
    Ok([[e(0), e(1)], [e(2), e(3)]])
}

/// Largest entry magnitude bound `max |(U†U − I)_rc|` over real and imaginary parts.
pub fn unitarity_defect(u: &Matrix2) -> BigRational {
    let mut worst = BigRational::zero();
    for r in 0..2 {
        for c in 0..2 {
            let mut re = BigRational::zero();
            let mut im = BigRational::zero();
            for row in u {
                let (a, b) = &row[r];
                let (x, y) = &row[c];
                // conj(a + ib)(x + iy)
                re += a * x + b * y;
                im += a * y - b * x;
            }
            if r == c {
                re -= BigRational::from_integer(1.into());
            }
            for v in [re.abs(), im.abs()] {
                if v > worst {
                    worst = v;
                }
            }
        }
    }
    worst
}

fn to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

fn wrap(x: f64) -> f64 {
    let y = x.rem_euclid(TAU);
    if (TAU - y).abs() < SNAP_TOL {
        0.0
    } else {
        y
    }
}

/// `f64` angle as an [`AngleSpec`], snapping near multiples of `π/4`.
pub fn angle_spec(x: f64) -> AngleSpec {
    let n = (x / FRAC_PI_4).round();
    if (x - n * FRAC_PI_4).abs() < SNAP_TOL {
        let n = (n as i64).rem_euclid(8);
        let g = num_integer::gcd(n, 4).max(1);
        return AngleSpec::PiMultiple {
            num: BigInt::from(n / g),
            den: BigInt::from(4 / g),
        };
    }
    AngleSpec::Radians(format!("{x:?}"))
}

fn rz_rx_rz(beta: f64, gamma: f64, delta: f64) -> [[Complex64; 2]; 2] {
    let (c, s) = ((gamma / 2.0).cos(), (gamma / 2.0).sin());
    let e = |t: f64| Complex64::from_polar(1.0, t);
    let mi = Complex64::new(0.0, -1.0);
    [
        [
            e(-(beta + delta) / 2.0) * c,
            mi * e(-(beta - delta) / 2.0) * s,
        ],
        [
            mi * e((beta - delta) / 2.0) * s,
            e((beta + delta) / 2.0) * c,
        ],
    ]
}

/// Euler angles with `β, δ, α ∈ [0, 2π)` and `γ ∈ [0, π]`.
pub fn decompose(u: &Matrix2) -> EulerDecomposition {
    let z = |r: usize, c: usize| Complex64::new(to_f64(&u[r][c].0), to_f64(&u[r][c].1));
    let (u00, u01, u10, u11) = (z(0, 0), z(0, 1), z(1, 0), z(1, 1));
    let (c, s) = (u00.norm(), u10.norm());
    let mut gamma = 2.0 * s.atan2(c);
    let (beta, delta);
    if s < SNAP_TOL {
        gamma = 0.0;
        beta = wrap(u11.arg() - u00.arg());
        delta = 0.0;
    } else if c < SNAP_TOL {
        gamma = PI;
        beta = wrap(u10.arg() - u01.arg());
        delta = 0.0;
    } else {
        // U10/U00 = −i·tan(γ/2)·e^{iβ}, U01/U00 = −i·tan(γ/2)·e^{iδ}
        beta = wrap(u10.arg() - u00.arg() + FRAC_PI_2);
        delta = wrap(u01.arg() - u00.arg() + FRAC_PI_2);
    }
    let m = rz_rx_rz(beta, gamma, delta);
    let (r, col) = if c >= s { (0, 0) } else { (1, 0) };
    let alpha = wrap((z(r, col) / m[r][col]).arg());
    let psi = wrap(alpha - (beta + gamma + delta) / 2.0);
    EulerDecomposition {
        alpha: angle_spec(alpha),
        beta: angle_spec(beta),
        gamma: angle_spec(gamma),
        delta: angle_spec(delta),
        psi: angle_spec(psi),
    }
}

type IMat = [[ComplexInterval; 2]; 2];

fn imul(a: &IMat, b: &IMat, prec: i64) -> IMat {
    let e =
        |r: usize, c: usize| (&(&a[r][0] * &b[0][c]) + &(&a[r][1] * &b[1][c])).round_outward(prec);
    [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
}

/// Certified Frobenius-norm bound on `‖U − e^{iψ}·Λ(β)·H·Λ(γ)·H·Λ(δ)‖`.
pub fn residual(u: &Matrix2, d: &EulerDecomposition, prec: u32) -> Result<Dyadic, TargetError> {
    let w = prec + 16;
    let zero = ComplexInterval::zero();
    let one = ComplexInterval::new(RealInterval::from_int(1), RealInterval::from_int(0));
    let lam = |a: &AngleSpec| -> Result<IMat, TargetError> {
        Ok([
            [one.clone(), zero.clone()],
            [zero.clone(), a.phase().exp_i(w)?],
        ])
    };
    let wi = w as i64;
    let r = ComplexInterval::new(inv_sqrt2(wi), RealInterval::from_int(0));
    let h: IMat = [[r.clone(), r.clone()], [r.clone(), &zero - &r]];
    let p = d.psi.phase().exp_i(w)?;
    let mut m = imul(&lam(&d.beta)?, &h, wi);
    m = imul(&m, &lam(&d.gamma)?, wi);
    m = imul(&m, &h, wi);
    m = imul(&m, &lam(&d.delta)?, wi);
    let mut sq = RealInterval::from_int(0);
    for (rr, row) in m.iter().enumerate() {
        for (cc, entry) in row.iter().enumerate() {
            let (re, im) = &u[rr][cc];
            let target = ComplexInterval::new(
                RealInterval::from_rational(re, w as i64),
                RealInterval::from_rational(im, w as i64),
            );
            sq = &sq + &(&target - &(&p * entry)).norm_sq();
        }
    }
    Ok(sq.hi.sqrt_ceil(prec as i64))
}

/// Euler angles as printed angle strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EulerAngles {
    pub alpha: String,
    pub beta: String,
    pub gamma: String,
    pub delta: String,
    pub psi: String,
}

impl From<&EulerDecomposition> for EulerAngles {
    fn from(d: &EulerDecomposition) -> Self {
        EulerAngles {
            alpha: d.alpha.to_string(),
            beta: d.beta.to_string(),
            gamma: d.gamma.to_string(),
            delta: d.delta.to_string(),
            psi: d.psi.to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockReport {
    pub role: String,
    pub report: SynthesisReport,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnitaryReport {
    pub euler: EulerAngles,
    pub exact_phase: bool,
    pub eps_target: String,
    pub block_budget: String,
    pub euler_residual: String,
    pub total_certified: String,
    pub gate_counts: BTreeMap<String, usize>,
    pub t_count: usize,
    pub total_gates: usize,
    pub ancillae: usize,
    pub seed: u64,
    pub blocks: Vec<BlockReport>,
}

impl UnitaryReport {
    pub fn all_verified(&self) -> bool {
        self.blocks.iter().all(|b| b.report.all_verified())
    }
}

#[derive(Clone, Debug)]
pub struct UnitarySynthesis {
    pub circuit: Circuit,
    pub total_bound: Dyadic,
    pub report: UnitaryReport,
}

/// Compiles `U` to precision `ε`, up to global phase unless `exact_phase`.
pub fn synth_unitary(
    u: &Matrix2,
    eps: &BigRational,
    seed: u64,
    exact_phase: bool,
    opts: &SynthOptions,
) -> Result<UnitarySynthesis, EulerError> {
    if !eps.is_positive() || eps >= &BigRational::from_integer(1.into()) {
        return Err(TargetError::BadEpsilon(eps.to_string()).into());
    }
    if unitarity_defect(u) > eps / BigRational::from_integer(1000.into()) {
        return Err(EulerError::NotUnitary);
    }
    let prec = opts.precision_bits;
    let d = decompose(u);
    let res = residual(u, &d, prec)?;
    let res_q = res.to_rational();
    if &res_q >= eps {
        return Err(EulerError::ResidualTooLarge(
            res.to_decimal_up(REPORT_DIGITS),
        ));
    }
    let n_blocks = if exact_phase { 5 } else { 3 };
    let budget = (eps - &res_q) / BigRational::from_integer(n_blocks.into());

    // time order on the data qubit; `None` is a bare gate
    let mut steps: Vec<(&str, Option<&AngleSpec>, Vec<PrimGate>)> = Vec::new();
    let has_gamma = !d.gamma.phase().is_zero();
    steps.push(("delta", Some(&d.delta), vec![]));
    if has_gamma {
        steps.push(("h", None, vec![PrimGate::H(0)]));
        steps.push(("gamma", Some(&d.gamma), vec![]));
        steps.push(("h", None, vec![PrimGate::H(0)]));
    }
    steps.push(("beta", Some(&d.beta), vec![]));
    if exact_phase {
        steps.push(("x", None, vec![PrimGate::X(0)]));
        steps.push(("phase", Some(&d.psi), vec![]));
        steps.push(("x", None, vec![PrimGate::X(0)]));
        steps.push(("phase", Some(&d.psi), vec![]));
    }

    let mut circuit = Circuit::new(3);
    let mut blocks = Vec::new();
    let mut total = res.clone();
    let mut block_seed = seed;
    for (role, angle, gates) in steps {
        match angle {
            None => circuit.extend(gates),
            Some(a) if a.phase().is_zero() => {}
            Some(a) => {
                let s = synth_lambda(a, &budget, block_seed, opts)?;
                block_seed = block_seed.wrapping_add(1);
                total = &total + &s.operator_bound;
                circuit.append(&s.circuit);
                blocks.push(BlockReport {
                    role: role.to_string(),
                    report: s.report,
                });
            }
        }
    }
    if total.to_rational() > *eps {
        return Err(PipelineError::BoundExceeded {
            certified: total.to_decimal_up(REPORT_DIGITS),
            requested: decimal_string(eps, REPORT_DIGITS, false),
        }
        .into());
    }
    let report = UnitaryReport {
        euler: EulerAngles::from(&d),
        exact_phase,
        eps_target: decimal_string(eps, REPORT_DIGITS, true),
        block_budget: decimal_string(&budget, REPORT_DIGITS, false),
        euler_residual: res.to_decimal_up(REPORT_DIGITS),
        total_certified: total.to_decimal_up(REPORT_DIGITS),
        gate_counts: circuit.counts(),
        t_count: circuit.t_count(),
        total_gates: circuit.len(),
        ancillae: 2,
        seed,
        blocks,
    };
    Ok(UnitarySynthesis {
        circuit,
        total_bound: total,
        report,
    })
}
