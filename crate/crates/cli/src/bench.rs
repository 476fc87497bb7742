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

use std::f64::consts::TAU;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use serde::Serialize;
use sqct::{synth_lambda, AngleSpec, RandomSource, SynthOptions};

use crate::commands::{parse_eps, Failure, INTERNAL_ERROR};

#[derive(Serialize)]
struct Row {
    eps: String,
    k: u32,
    total_gates: usize,
    t_count: usize,
    wall_time: String,
    quad_trials: u64,
}

/// `a,b,c` or `1e-A..1e-B` (every decade in between, inclusive).
fn eps_values(list: &str) -> Result<Vec<String>, Failure> {
    let bad = || Failure::new(2, format!("cannot parse eps list `{list}`"));
    if let Some((from, to)) = list.split_once("..") {
        let decade = |s: &str| -> Result<i32, Failure> {
            let x: f64 = s.trim().parse().map_err(|_| bad())?;
            let e = x.log10();
            if x > 0.0 && (e - e.round()).abs() < 1e-9 {
                Ok(e.round() as i32)
            } else {
                Err(bad())
            }
        };
        let (a, b) = (decade(from)?, decade(to)?);
        let range: Vec<i32> = if a >= b {
            (b..=a).rev().collect()
        } else {
            (a..=b).collect()
        };
        return Ok(range.into_iter().map(|e| format!("1e{e}")).collect());
    }
    let v: Vec<String> = list
        .split(',')
        .map(|s| s.trim().to_string())
        .filter(|s| !s.is_empty())
        .collect();
    if v.is_empty() {
        return Err(bad());
    }
    Ok(v)
}

pub fn run(
    eps_list: &str,
    trials: u32,
    seed: u64,
    phase: Option<&str>,
    csv_out: Option<PathBuf>,
    opts: &SynthOptions,
) -> Result<(), Failure> {
    let values = eps_values(eps_list)?;
    let eps: Vec<_> = values
        .iter()
        .map(|s| parse_eps(s))
        .collect::<Result<_, _>>()?;
    let fixed = phase.map(AngleSpec::parse).transpose()?;

    let sink: Box<dyn Write> = match &csv_out {
        Some(p) => Box::new(
            std::fs::File::create(p)
                .map_err(|e| Failure::new(INTERNAL_ERROR, format!("{}: {e}", p.display())))?,
        ),
        None => Box::new(std::io::stdout()),
    };
    let mut w = csv::Writer::from_writer(sink);
    let io = |e: csv::Error| Failure::new(INTERNAL_ERROR, e.to_string());
    for (label, e) in values.iter().zip(&eps) {
        for t in 0..trials.max(1) {
            let trial_seed = seed.wrapping_add(t as u64);
            let phi = match &fixed {
                Some(p) => p.clone(),
                None => {
                    let x = RandomSource::new(trial_seed).next_f64() * TAU;
                    AngleSpec::parse(&format!("{x:?}"))?
                }
            };
            let start = Instant::now();
            let s = synth_lambda(&phi, e, trial_seed, opts)?;
            let elapsed = start.elapsed().as_secs_f64();
            if !s.report.all_verified() {
                return Err(Failure::new(INTERNAL_ERROR, "exact verification failed"));
            }
            w.serialize(Row {
                eps: label.clone(),
                k: s.report.k,
                total_gates: s.report.total_gates,
                t_count: s.report.t_count,
                wall_time: format!("{elapsed:.6}"),
                quad_trials: s.target.quad_trials,
            })
            .map_err(io)?;
        }
    }
    w.flush()
        .map_err(|e| Failure::new(INTERNAL_ERROR, e.to_string()))
}
