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

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// An element `x + y√2` of `Z[√2]`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct RingReal {
    pub x: BigInt,
    pub y: BigInt,
}

impl RingReal {
    pub fn new(x: BigInt, y: BigInt) -> Self {
        RingReal { x, y }
    }

    pub fn from_i64s(x: i64, y: i64) -> Self {
        RingReal::new(x.into(), y.into())
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        RingReal::new(n.into(), BigInt::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    /// Exact sign of `x + y√2`, decided by comparing `x²` with `2y²` when the
    /// two parts disagree in sign.
    pub fn signum(&self) -> Ordering {
        let sx = self.x.cmp(&BigInt::zero());
        let sy = self.y.cmp(&BigInt::zero());
        match (sx, sy) {
            (Ordering::Equal, s) | (s, Ordering::Equal) => s,
            (a, b) if a == b => a,
            (a, _) => {
                let x2 = &self.x * &self.x;
                let y2 = &self.y * &self.y * 2;
                match x2.cmp(&y2) {
                    Ordering::Greater => a,
                    Ordering::Less => a.reverse(),
                    // x² = 2y² has no nonzero integer solution
                    Ordering::Equal => unreachable!("irrational √2"),
                }
            }
        }
    }

    pub fn to_f64(&self) -> f64 {
        let x: f64 = self.x.to_string().parse().unwrap_or(f64::NAN);
        let y: f64 = self.y.to_string().parse().unwrap_or(f64::NAN);
        x + y * std::f64::consts::SQRT_2
    }

    pub fn is_negative(&self) -> bool {
        self.signum() == Ordering::Less
    }

    pub fn scale(&self, s: &BigInt) -> Self {
        RingReal::new(&self.x * s, &self.y * s)
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }
}

impl PartialOrd for RingReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for RingReal {
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).signum()
    }
}

impl fmt::Debug for RingReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}{}{}√2",
            self.x,
            if self.y.is_negative() { "" } else { "+" },
            self.y
        )
    }
}

impl Add for &RingReal {
    type Output = RingReal;
    fn add(self, rhs: &RingReal) -> RingReal {
        RingReal::new(&self.x + &rhs.x, &self.y + &rhs.y)
    }
}

impl Sub for &RingReal {
    type Output = RingReal;
    fn sub(self, rhs: &RingReal) -> RingReal {
        RingReal::new(&self.x - &rhs.x, &self.y - &rhs.y)
    }
}

impl Mul for &RingReal {
    type Output = RingReal;
    fn mul(self, rhs: &RingReal) -> RingReal {
        RingReal::new(
            &self.x * &rhs.x + &self.y * &rhs.y * 2,
            &self.x * &rhs.y + &self.y * &rhs.x,
        )
    }
}

impl Neg for &RingReal {
    type Output = RingReal;
    fn neg(self) -> RingReal {
        RingReal::new(-&self.x, -&self.y)
    }
}

impl Add for RingReal {
    type Output = RingReal;
    fn add(self, rhs: RingReal) -> RingReal {
        &self + &rhs
    }
}

impl Mul for RingReal {
    type Output = RingReal;
    fn mul(self, rhs: RingReal) -> RingReal {
        &self * &rhs
    }
}

impl std::iter::Sum for RingReal {
    fn sum<I: Iterator<Item = RingReal>>(iter: I) -> RingReal {
        iter.fold(RingReal::default(), |acc, x| &acc + &x)
    }
}
