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
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::{RingError, RingReal};

/// A cyclotomic integer `a + bω + cω² + dω³` with `ω = exp(iπ/4)`.
///
/// The basis `{1, ω, ω², ω³}` is reduced with `ω⁴ = -1`, so every element has
/// exactly one representation and derived equality is value equality. The
/// Gaussian integers sit inside as `a + cω²` since `i = ω²`, and `√2 = ω - ω³`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct RingInt {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
    pub d: BigInt,
}

/// Residue of a [`RingInt`] modulo `√2`: `r1 = (a + c) mod 2`, `r2 = (b + d) mod 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ResidueClass {
    pub r1: u8,
    pub r2: u8,
}

impl ResidueClass {
    pub const ZERO: ResidueClass = ResidueClass { r1: 0, r2: 0 };

    pub fn xor(self, other: ResidueClass) -> ResidueClass {
        ResidueClass {
            r1: self.r1 ^ other.r1,
            r2: self.r2 ^ other.r2,
        }
    }
}

fn bit(x: &BigInt) -> u8 {
    if x.is_odd() {
        1
    } else {
        0
    }
}

impl RingInt {
    pub fn new(a: BigInt, b: BigInt, c: BigInt, d: BigInt) -> Self {
        RingInt { a, b, c, d }
    }

    pub fn from_i64s(a: i64, b: i64, c: i64, d: i64) -> Self {
        RingInt::new(a.into(), b.into(), c.into(), d.into())
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        RingInt::new(n.into(), BigInt::zero(), BigInt::zero(), BigInt::zero())
    }

    /// Gaussian integer `re + i·im`.
    pub fn gaussian(re: impl Into<BigInt>, im: impl Into<BigInt>) -> Self {
        RingInt::new(re.into(), BigInt::zero(), im.into(), BigInt::zero())
    }

    pub fn zero() -> Self {
        RingInt::default()
    }

    pub fn one() -> Self {
        RingInt::from_i64s(1, 0, 0, 0)
    }

    pub fn omega() -> Self {
        RingInt::from_i64s(0, 1, 0, 0)
    }

    /// `ω^m` for any integer `m`.
    pub fn omega_pow(m: i64) -> Self {
        RingInt::one().omega_mul(m)
    }

    pub fn i() -> Self {
        RingInt::from_i64s(0, 0, 1, 0)
    }

    pub fn sqrt2() -> Self {
        RingInt::from_i64s(0, 1, 0, -1)
    }

    pub fn coeffs(&self) -> [&BigInt; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    /// Largest coefficient bit length, used to size numeric evaluation.
    pub fn max_bits(&self) -> u64 {
        self.coeffs().iter().map(|x| x.bits()).max().unwrap_or(0)
    }

    /// Complex conjugate: `ω̄ = ω⁷ = -ω³`, giving `(a, -d, -c, -b)`.
    pub fn conj(&self) -> Self {
        RingInt::new(self.a.clone(), -&self.d, -&self.c, -&self.b)
    }

    /// `|z|²` as `x + y√2` with `x = a²+b²+c²+d²`, `y = ab+bc+cd-ad`.
    pub fn norm(&self) -> RingReal {
        let (a, b, c, d) = (&self.a, &self.b, &self.c, &self.d);
        let x = a * a + b * b + c * c + d * d;
        let y = a * b + b * c + c * d - a * d;
        RingReal::new(x, y)
    }

    pub fn class(&self) -> ResidueClass {
        ResidueClass {
            r1: bit(&(&self.a + &self.c)),
            r2: bit(&(&self.b + &self.d)),
        }
    }

    pub fn divisible_by_sqrt2(&self) -> bool {
        self.class() == ResidueClass::ZERO
    }

    pub fn divisible_by_2(&self) -> bool {
        self.coeffs().iter().all(|x| x.is_even())
    }

    /// The unique `y` with `√2·y = self`.
    pub fn div_sqrt2(&self) -> Result<Self, RingError> {
        if !self.divisible_by_sqrt2() {
            return Err(RingError::NotDivisibleBySqrt2);
        }
        let (a, b, c, d) = (&self.a, &self.b, &self.c, &self.d);
        let two = BigInt::from(2);
        Ok(RingInt::new(
            (b - d) / &two,
            (a + c) / &two,
            (b + d) / &two,
            (c - a) / &two,
        ))
    }

    pub fn mul_sqrt2(&self) -> Self {
        let (a, b, c, d) = (&self.a, &self.b, &self.c, &self.d);
        RingInt::new(b - d, a + c, b + d, c - a)
    }

    /// Multiply by `√2^n`.
    pub fn mul_sqrt2_pow(&self, n: u32) -> Self {
        let mut out = self.scale(&(BigInt::from(1) << (n / 2)));
        if n % 2 == 1 {
            out = out.mul_sqrt2();
        }
        out
    }

    pub fn scale(&self, s: &BigInt) -> Self {
        RingInt::new(&self.a * s, &self.b * s, &self.c * s, &self.d * s)
    }

    /// `ω^m · self`. One step maps `(a,b,c,d)` to `(-d,a,b,c)`.
    pub fn omega_mul(&self, m: i64) -> Self {
        let m = m.rem_euclid(8);
        let mut out = self.clone();
        for _ in 0..m {
            out = RingInt::new(-out.d, out.a, out.b, out.c);
        }
        out
    }

    /// Residue modulo 2 as four parity bits `(a, b, c, d)` packed little-endian.
    pub fn residue_mod2(&self) -> u8 {
        self.coeffs()
            .iter()
            .enumerate()
            .fold(0u8, |acc, (i, x)| acc | (bit(x) << i))
    }

    /// Returns `l` when `self = ω^l`.
    pub fn as_omega_power(&self) -> Option<u8> {
        let one = BigInt::from(1);
        let nonzero: Vec<(usize, &BigInt)> = self
            .coeffs()
            .into_iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .collect();
        match nonzero.as_slice() {
            [(pos, x)] if x.abs() == one => {
                let pos = *pos as u8;
                Some(if x.is_positive() { pos } else { pos + 4 })
            }
            _ => None,
        }
    }
}

impl fmt::Debug for RingInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, {})", self.a, self.b, self.c, self.d)
    }
}

impl fmt::Display for RingInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}+{}ω+{}ω²+{}ω³", self.a, self.b, self.c, self.d)
    }
}

impl Add for &RingInt {
    type Output = RingInt;
    fn add(self, rhs: &RingInt) -> RingInt {
        RingInt::new(
            &self.a + &rhs.a,
            &self.b + &rhs.b,
            &self.c + &rhs.c,
            &self.d + &rhs.d,
        )
    }
}

impl Sub for &RingInt {
    type Output = RingInt;
    fn sub(self, rhs: &RingInt) -> RingInt {
        RingInt::new(
            &self.a - &rhs.a,
            &self.b - &rhs.b,
            &self.c - &rhs.c,
            &self.d - &rhs.d,
        )
    }
}

impl Neg for &RingInt {
    type Output = RingInt;
    fn neg(self) -> RingInt {
        RingInt::new(-&self.a, -&self.b, -&self.c, -&self.d)
    }
}

impl Mul for &RingInt {
    type Output = RingInt;
    fn mul(self, rhs: &RingInt) -> RingInt {
        let x = self.coeffs();
        let y = rhs.coeffs();
        let mut out: [BigInt; 4] = Default::default();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                let p = *xi * *yj;
                let e = i + j;
                if e < 4 {
                    out[e] += p;
                } else {
                    out[e - 4] -= p;
                }
            }
        }
        let [a, b, c, d] = out;
        RingInt::new(a, b, c, d)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for RingInt {
            type Output = RingInt;
            fn $f(self, rhs: RingInt) -> RingInt {
                (&self).$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for RingInt {
    type Output = RingInt;
    fn neg(self) -> RingInt {
        -&self
    }
}
