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

//! Fixed inputs shared by the benchmarks.

use num_bigint::BigInt;
use num_rational::BigRational;
use sqct::{AngleSpec, RandomSource};

/// `10^(−e)`.
pub fn eps_decade(e: u32) -> BigRational {
    BigRational::new(1.into(), BigInt::from(10).pow(e))
}

/// Reproducible phases spread over `[0, 2π)`.
pub fn sample_phases(n: usize, seed: u64) -> Vec<AngleSpec> {
    let mut rng = RandomSource::new(seed);
    (0..n)
        .map(|_| {
            let x = rng.next_f64() * std::f64::consts::TAU;
            AngleSpec::parse(&format!("{x:?}")).expect("decimal angle parses")
        })
        .collect()
}

/// Reproducible integers below `2^bits`.
pub fn sample_integers(n: usize, bits: u64, seed: u64) -> Vec<BigInt> {
    let mut rng = RandomSource::new(seed);
    (0..n)
        .map(|_| {
            let mut x = BigInt::from(0);
            for _ in 0..bits.div_ceil(64) {
                x = (x << 64) + rng.next_u64();
            }
            x % (BigInt::from(1) << bits)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_are_stable() {
        assert_eq!(sample_phases(3, 1), sample_phases(3, 1));
        assert!(sample_integers(50, 48, 2).iter().all(|x| x.bits() <= 48));
        assert_eq!(eps_decade(3), BigRational::new(1.into(), 1000.into()));
    }
}
