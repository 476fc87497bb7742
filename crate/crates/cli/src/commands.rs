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
use std::fs;
use std::path::{Path, PathBuf};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use serde::Serialize;
use sqct::compile::operator_bound;
use sqct::ring::decimal_string;
use sqct::{
    four_squares_with_stats, parse_decimal, parse_matrix, synth_lambda, AngleSpec, Circuit,
    EulerError, PipelineError, RandomSource, SynthOptions, TargetError, DEFAULT_PRECISION_BITS,
};

pub const OK: u8 = 0;
pub const CERT_FAIL: u8 = 1;
pub const INPUT_ERROR: u8 = 2;
pub const INTERNAL_ERROR: u8 = 3;

const PRECISION_VAR: &str = "SQCT_PRECISION_BITS";
const REPORT_DIGITS: usize = 6;

#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn new(code: u8, message: impl Into<String>) -> Self {
        debug_assert_ne!(code, OK);
        Failure {
            code,
            message: message.into(),
        }
    }

    fn input(message: impl Into<String>) -> Self {
        Failure::new(INPUT_ERROR, message)
    }
}

impl From<TargetError> for Failure {
    fn from(e: TargetError) -> Self {
        let code = match e {
            TargetError::Undecidable(_) => INTERNAL_ERROR,
            _ => INPUT_ERROR,
        };
        Failure::new(code, e.to_string())
    }
}

impl From<PipelineError> for Failure {
    fn from(e: PipelineError) -> Self {
        match e {
            PipelineError::Target(t) => t.into(),
            PipelineError::Synth(_) => Failure::new(INTERNAL_ERROR, e.to_string()),
            PipelineError::BoundExceeded { .. } => Failure::new(CERT_FAIL, e.to_string()),
        }
    }
}

impl From<EulerError> for Failure {
    fn from(e: EulerError) -> Self {
        match e {
            EulerError::Format | EulerError::NotUnitary => Failure::input(e.to_string()),
            EulerError::ResidualTooLarge(_) => Failure::new(CERT_FAIL, e.to_string()),
            EulerError::Target(t) => t.into(),
            EulerError::Pipeline(p) => p.into(),
        }
    }
}

pub fn options_from_env() -> Result<SynthOptions, Failure> {
    let precision_bits = match std::env::var(PRECISION_VAR) {
        Ok(s) => s
            .trim()
            .parse::<u32>()
            .ok()
            .filter(|p| (32..=65536).contains(p))
            .ok_or_else(|| {
                Failure::input(format!(
                    "{PRECISION_VAR} must be an integer in [32, 65536], got `{s}`"
                ))
            })?,
        Err(_) => DEFAULT_PRECISION_BITS,
    };
    Ok(SynthOptions {
        precision_bits,
        ..SynthOptions::default()
    })
}

pub fn parse_eps(s: &str) -> Result<BigRational, Failure> {
    let eps = parse_decimal(s).ok_or_else(|| Failure::input(format!("cannot parse eps `{s}`")))?;
    if !eps.is_positive() || eps >= BigRational::from_integer(1.into()) {
        return Err(Failure::input(format!(
            "eps must satisfy 0 < eps < 1, got {s}"
        )));
    }
    Ok(eps)
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text)
        .map_err(|e| Failure::new(INTERNAL_ERROR, format!("{}: {e}", path.display())))
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serializes");
    s.push('\n');
    s
}

/// Writes the circuit and report; the circuit goes to stdout without `-o`.
fn emit(
    circuit: &Circuit,
    output: Option<PathBuf>,
    report: Option<(PathBuf, String)>,
) -> Result<(), Failure> {
    let text = circuit.emit();
    match output {
        Some(p) => write(&p, &text)?,
        None => print!("{text}"),
    }
    if let Some((p, r)) = report {
        write(&p, &r)?;
    }
    Ok(())
}

pub fn synth(
    phase: &str,
    eps: &str,
    seed: u64,
    output: Option<PathBuf>,
    report: Option<PathBuf>,
    opts: &SynthOptions,
) -> Result<(), Failure> {
    let phi = AngleSpec::parse(phase)?;
    let eps = parse_eps(eps)?;
    let s = synth_lambda(&phi, &eps, seed, opts)?;
    if !s.report.all_verified() {
        return Err(Failure::new(INTERNAL_ERROR, "exact verification failed"));
    }
    eprintln!(
        "k={} total_gates={} t_count={} eps_certified={}",
        s.report.k, s.report.total_gates, s.report.t_count, s.report.eps_certified
    );
    emit(&s.circuit, output, report.map(|p| (p, json(&s.report))))
}

pub fn synth_unitary(
    matrix: &Path,
    eps: &str,
    seed: u64,
    exact_phase: bool,
    output: Option<PathBuf>,
    report: Option<PathBuf>,
    opts: &SynthOptions,
) -> Result<(), Failure> {
    let u = parse_matrix(&read(matrix)?)?;
    let eps = parse_eps(eps)?;
    let s = sqct::synth_unitary(&u, &eps, seed, exact_phase, opts)?;
    if !s.report.all_verified() {
        return Err(Failure::new(INTERNAL_ERROR, "exact verification failed"));
    }
    eprintln!(
        "blocks={} total_gates={} t_count={} total_certified={}",
        s.report.blocks.len(),
        s.report.total_gates,
        s.report.t_count,
        s.report.total_certified
    );
    emit(&s.circuit, output, report.map(|p| (p, json(&s.report))))
}

#[derive(Serialize)]
struct VerifyReport {
    phi: String,
    eps_target: String,
    operator_bound: String,
    certified: bool,
    qubits: usize,
    gate_counts: BTreeMap<String, usize>,
    t_count: usize,
    total_gates: usize,
}

pub fn verify(circuit: &Path, phase: &str, eps: &str, opts: &SynthOptions) -> Result<(), Failure> {
    let c = Circuit::parse(&read(circuit)?)
        .map_err(|e| Failure::input(format!("{}: {e}", circuit.display())))?;
    if c.n_qubits != 3 || !c.operands_valid() {
        return Err(Failure::input("circuit must act on exactly 3 qubits"));
    }
    let phi = AngleSpec::parse(phase)?;
    let eps = parse_eps(eps)?;
    let bound = operator_bound(&c, &phi.phase(), opts.precision_bits)?;
    let certified = bound.to_rational() <= eps;
    let report = VerifyReport {
        phi: phi.to_string(),
        eps_target: decimal_string(&eps, REPORT_DIGITS, true),
        operator_bound: bound.to_decimal_up(REPORT_DIGITS),
        certified,
        qubits: c.n_qubits,
        gate_counts: c.counts(),
        t_count: c.t_count(),
        total_gates: c.len(),
    };
    print!("{}", json(&report));
    if certified {
        Ok(())
    } else {
        Err(Failure::new(
            CERT_FAIL,
            format!(
                "certified distance {} exceeds {}",
                report.operator_bound, report.eps_target
            ),
        ))
    }
}

#[derive(Serialize)]
struct FourSquaresReport {
    #[serde(rename = "M")]
    m: String,
    a: String,
    b: String,
    c: String,
    d: String,
    trials: u64,
    brute_force: bool,
}

pub fn four_squares(m: &str, seed: u64) -> Result<(), Failure> {
    let n: BigInt = m
        .trim()
        .parse()
        .map_err(|_| Failure::input(format!("cannot parse integer `{m}`")))?;
    if n.is_negative() {
        return Err(Failure::input("M must be nonnegative"));
    }
    let mut rng = RandomSource::new(seed);
    let (q, stats) = four_squares_with_stats(&n, &mut rng);
    if !q.solves(&n) {
        return Err(Failure::new(
            INTERNAL_ERROR,
            "four-square solution does not check",
        ));
    }
    print!(
        "{}",
        json(&FourSquaresReport {
            m: n.to_string(),
            a: q.a.to_string(),
            b: q.b.to_string(),
            c: q.c.to_string(),
            d: q.d.to_string(),
            trials: stats.trials,
            brute_force: stats.brute_force,
        })
    );
    Ok(())
}
