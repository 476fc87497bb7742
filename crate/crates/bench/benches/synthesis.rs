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

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use sqct::sim::circuit_matrix;
use sqct::synth::prep_sequence;
use sqct::target::approximate;
use sqct::{four_squares, synth_lambda, RandomSource, SynthOptions};
use sqct_bench::{eps_decade, sample_integers, sample_phases};

fn synth(c: &mut Criterion) {
    let mut g = c.benchmark_group("synth_lambda");
    g.sample_size(20);
    let phi = &sample_phases(1, 9)[0];
    for e in [2u32, 6, 10] {
        let eps = eps_decade(e);
        g.bench_with_input(
            BenchmarkId::from_parameter(format!("1e-{e}")),
            &eps,
            |b, eps| {
                b.iter(|| synth_lambda(black_box(phi), eps, 1, &SynthOptions::default()).unwrap())
            },
        );
    }
    g.finish();
}

fn stages(c: &mut Criterion) {
    let phi = sample_phases(1, 3)[0].phase();
    let eps = eps_decade(8);
    c.bench_function("approximate/1e-8", |b| {
        b.iter(|| approximate(black_box(&phi), &eps, &mut RandomSource::new(1)).unwrap())
    });
    let target = approximate(&phi, &eps, &mut RandomSource::new(1)).unwrap();
    c.bench_function("prep_sequence/1e-8", |b| {
        b.iter(|| prep_sequence(black_box(&target.v)).unwrap())
    });
    let s = synth_lambda(&sample_phases(1, 3)[0], &eps, 1, &SynthOptions::default()).unwrap();
    c.bench_function("circuit_matrix/1e-8", |b| {
        b.iter(|| circuit_matrix(black_box(&s.circuit)))
    });
}

fn quad(c: &mut Criterion) {
    let mut g = c.benchmark_group("four_squares");
    for bits in [48u64, 128] {
        let inputs = sample_integers(32, bits, bits);
        g.bench_with_input(BenchmarkId::from_parameter(bits), &inputs, |b, inputs| {
            b.iter(|| {
                let mut rng = RandomSource::new(7);
                for m in inputs {
                    black_box(four_squares(m, &mut rng));
                }
            })
        });
    }
    g.finish();
}

criterion_group!(benches, synth, stages, quad);
criterion_main!(benches);
