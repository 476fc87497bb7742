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

//! Exact arithmetic in `Z[ω]` and `D[ω] = Z[ω, 1/√2]` with `ω = exp(iπ/4)`.

mod int;
mod interval;
mod real;
mod scalar;

pub use int::{ResidueClass, RingInt};
pub use interval::{decimal_string, evaluate, inv_sqrt2, ComplexInterval, Dyadic, RealInterval};
pub use real::RingReal;
pub use scalar::{is_unit, norm_sum, RingScalar};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RingError {
    #[error("element is not divisible by √2")]
    NotDivisibleBySqrt2,
}
