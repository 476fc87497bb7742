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

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;

use super::{RingInt, RingReal};

/// An element `u / √2^k` of `D[ω]`.
///
/// The exponent is lazy: arithmetic never divides out common factors of `√2`,
/// [`RingScalar::normalize`] does. Equality compares values, not representations.
#[derive(Clone, Default)]
pub struct RingScalar {
    pub u: RingInt,
    pub k: u32,
}

impl RingScalar {
    pub fn new(u: RingInt, k: u32) -> Self {
        RingScalar { u, k }
    }

    pub fn zero() -> Self {
        RingScalar::default()
    }

    pub fn one() -> Self {
        RingScalar::new(RingInt::one(), 0)
    }

    pub fn from_int(u: RingInt) -> Self {
        RingScalar::new(u, 0)
    }

    pub fn omega_pow(m: i64) -> Self {
        RingScalar::from_int(RingInt::omega_pow(m))
    }

    pub fn is_zero(&self) -> bool {
        self.u.is_zero()
    }

    /// Minimal-exponent representative.
    pub fn normalize(&self) -> Self {
        if self.u.is_zero() {
            return RingScalar::zero();
        }
        let mut u = self.u.clone();
        let mut k = self.k;
        while k > 0 && u.divisible_by_sqrt2() {
            u = u.div_sqrt2().expect("checked divisibility");
            k -= 1;
        }
        RingScalar { u, k }
    }

    /// Least denominator exponent.
    pub fn lde(&self) -> u32 {
        self.normalize().k
    }

    /// Numerator with respect to a denominator `√2^k` for `k >= self.k`.
    pub fn numerator_at(&self, k: u32) -> RingInt {
        assert!(
            k >= self.k,
            "cannot lower a denominator exponent by rescaling"
        );
        self.u.mul_sqrt2_pow(k - self.k)
    }

    pub fn conj(&self) -> Self {
        RingScalar::new(self.u.conj(), self.k)
    }

    /// `|s|²` as `(x + y√2) / 2^k`.
    pub fn norm(&self) -> (RingReal, u32) {
        (self.u.norm(), self.k)
    }

    pub fn omega_mul(&self, m: i64) -> Self {
        RingScalar::new(self.u.omega_mul(m), self.k)
    }

    pub fn div_sqrt2(&self) -> Self {
        RingScalar::new(self.u.clone(), self.k + 1)
    }

    pub fn is_omega_power(&self) -> Option<u8> {
        let n = self.normalize();
        if n.k == 0 {
            n.u.as_omega_power()
        } else {
            None
        }
    }
}

impl PartialEq for RingScalar {
    fn eq(&self, other: &Self) -> bool {
        let k = self.k.max(other.k);
        self.numerator_at(k) == other.numerator_at(k)
    }
}

impl Eq for RingScalar {}

impl fmt::Debug for RingScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}/√2^{}", self.u, self.k)
    }
}

impl Add for &RingScalar {
    type Output = RingScalar;
    fn add(self, rhs: &RingScalar) -> RingScalar {
        let k = self.k.max(rhs.k);
        RingScalar::new(&self.numerator_at(k) + &rhs.numerator_at(k), k)
    }
}

impl Sub for &RingScalar {
    type Output = RingScalar;
    fn sub(self, rhs: &RingScalar) -> RingScalar {
        let k = self.k.max(rhs.k);
        RingScalar::new(&self.numerator_at(k) - &rhs.numerator_at(k), k)
    }
}

impl Mul for &RingScalar {
    type Output = RingScalar;
    fn mul(self, rhs: &RingScalar) -> RingScalar {
        RingScalar::new(&self.u * &rhs.u, self.k + rhs.k)
    }
}

impl Neg for &RingScalar {
    type Output = RingScalar;
    fn neg(self) -> RingScalar {
        RingScalar::new(-&self.u, self.k)
    }
}

impl From<RingInt> for RingScalar {
    fn from(u: RingInt) -> Self {
        RingScalar::from_int(u)
    }
}

/// Sum of `|s_j|²` over a slice as an exact `(x + y√2) / 2^k`.
pub fn norm_sum(entries: &[RingScalar]) -> (RingReal, u32) {
    let k = entries.iter().map(|s| s.k).max().unwrap_or(0);
    let total = entries
        .iter()
        .map(|s| s.numerator_at(k).norm())
        .sum::<RingReal>();
    (total, k)
}

/// True iff the entries form an exact unit vector.
pub fn is_unit(entries: &[RingScalar]) -> bool {
    let (total, k) = norm_sum(entries);
    total == RingReal::from_int(BigInt::from(1) << k)
}
