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

//! Clifford+T synthesis of the controlled phase `Λ(e^{iφ})` on one data qubit
//! and two ancillae.
//!
//! The pipeline rounds `e^{iφ}|00⟩` to a unit vector over `Z[ω, 1/√2]` by
//! solving a four-square equation, exactly prepares that vector with
//! two-level generators, and compiles the preparation circuit controlled on
//! the data qubit. Every emitted circuit is checked by exact simulation.

pub mod compile;
pub mod euler;
pub mod numtheory;
pub mod ring;
pub mod sim;
pub mod synth;
pub mod target;

pub use compile::{
    synth_lambda, Circuit, ParseError, PipelineError, PrimGate, SynthOptions, Synthesis,
    SynthesisReport, DEFAULT_PRECISION_BITS,
};
pub use euler::{parse_matrix, synth_unitary, EulerError, UnitaryReport, UnitarySynthesis};
pub use numtheory::{four_squares, four_squares_with_stats, QuadSolution, RandomSource};
pub use ring::{Dyadic, RingInt, RingScalar};
pub use synth::{StateVec, TwoLevelGate, TwoLevelKind};
pub use target::{choose_k, error_bound, parse_decimal, AngleSpec, Phase, TargetError};
