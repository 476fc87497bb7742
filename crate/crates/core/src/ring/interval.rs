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

//! Outward-rounded interval arithmetic over dyadic rationals.
//!
//! Every operation here either is exact or rounds its lower endpoint down and
//! its upper endpoint up, so a certified bound never depends on how the host
//! rounds floating point.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{RingInt, RingScalar};

/// `mant · 2^exp`.
#[derive(Clone, Default)]
pub struct Dyadic {
    mant: BigInt,
    exp: i64,
}

fn shl(x: &BigInt, by: i64) -> BigInt {
    debug_assert!(by >= 0);
    x << (by as usize)
}

/// Floor of `x / 2^by` for `by >= 0`.
fn shr_floor(x: &BigInt, by: i64) -> BigInt {
    debug_assert!(by >= 0);
    x.div_floor(&(BigInt::one() << (by as usize)))
}

fn shr_ceil(x: &BigInt, by: i64) -> BigInt {
    -shr_floor(&-x, by)
}

impl Dyadic {
    pub fn new(mant: BigInt, exp: i64) -> Self {
        Dyadic { mant, exp }.trim()
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        Dyadic::new(n.into(), 0)
    }

    pub fn zero() -> Self {
        Dyadic::default()
    }

    pub fn one() -> Self {
        Dyadic::from_int(1)
    }

    fn trim(mut self) -> Self {
        if self.mant.is_zero() {
            self.exp = 0;
            return self;
        }
        let tz = self.mant.trailing_zeros().unwrap_or(0) as i64;
        if tz > 0 {
            self.mant >>= tz as usize;
            self.exp += tz;
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.mant.is_negative()
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.mant
    }

    pub fn exponent(&self) -> i64 {
        self.exp
    }

    /// Multiply by `2^e` exactly.
    pub fn ldexp(&self, e: i64) -> Self {
        Dyadic::new(self.mant.clone(), self.exp + e)
    }

    /// Largest multiple of `2^-prec` not above `self`.
    pub fn floor_to(&self, prec: i64) -> Self {
        let target = -prec;
        if self.exp >= target {
            return self.clone();
        }
        Dyadic::new(shr_floor(&self.mant, target - self.exp), target)
    }

    /// Smallest multiple of `2^-prec` not below `self`.
    pub fn ceil_to(&self, prec: i64) -> Self {
        let target = -prec;
        if self.exp >= target {
            return self.clone();
        }
        Dyadic::new(shr_ceil(&self.mant, target - self.exp), target)
    }

    pub fn floor(&self) -> BigInt {
        if self.exp >= 0 {
            shl(&self.mant, self.exp)
        } else {
            shr_floor(&self.mant, -self.exp)
        }
    }

    pub fn ceil(&self) -> BigInt {
        if self.exp >= 0 {
            shl(&self.mant, self.exp)
        } else {
            shr_ceil(&self.mant, -self.exp)
        }
    }

    /// Lower and upper neighbours of `num / den` on the `2^-prec` grid.
    pub fn rational_bounds(r: &BigRational, prec: i64) -> (Dyadic, Dyadic) {
        let (num, den) = (r.numer(), r.denom());
        let scaled = if prec >= 0 {
            shl(num, prec)
        } else {
            num.clone()
        };
        let den = if prec >= 0 {
            den.clone()
        } else {
            shl(den, -prec)
        };
        let (q, rem) = scaled.div_mod_floor(&den);
        let lo = Dyadic::new(q.clone(), -prec);
        let hi = if rem.is_zero() {
            lo.clone()
        } else {
            Dyadic::new(q + 1, -prec)
        };
        (lo, hi)
    }

    pub fn to_rational(&self) -> BigRational {
        if self.exp >= 0 {
            BigRational::from_integer(shl(&self.mant, self.exp))
        } else {
            BigRational::new(self.mant.clone(), BigInt::one() << (-self.exp) as usize)
        }
    }

    pub fn to_f64(&self) -> f64 {
        let bits = self.mant.bits() as i64;
        let drop = (bits - 60).max(0);
        let m = (&self.mant >> drop as usize).to_f64().unwrap_or(f64::NAN);
        m * 2f64.powi((self.exp + drop).clamp(-1100, 1100) as i32)
    }

    /// Upper bound on `√self` on the `2^-prec` grid; `self` must be nonnegative.
    pub fn sqrt_ceil(&self, prec: i64) -> Dyadic {
        assert!(!self.is_negative(), "square root of a negative bound");
        // √(v) · 2^prec = √(v · 4^prec)
        let scaled = self.ldexp(2 * prec).ceil();
        let mut r = scaled.sqrt();
        if &r * &r < scaled {
            r += 1;
        }
        Dyadic::new(r, -prec)
    }

    pub fn sqrt_floor(&self, prec: i64) -> Dyadic {
        if self.is_negative() || self.is_zero() {
            return Dyadic::zero();
        }
        let scaled = self.ldexp(2 * prec).floor();
        Dyadic::new(scaled.sqrt(), -prec)
    }

    pub fn max(self, other: Dyadic) -> Dyadic {
        if self >= other {
            self
        } else {
            other
        }
    }

    pub fn min(self, other: Dyadic) -> Dyadic {
        if self <= other {
            self
        } else {
            other
        }
    }

    pub fn abs(&self) -> Dyadic {
        Dyadic {
            mant: self.mant.abs(),
            exp: self.exp,
        }
    }

    /// Scientific decimal string with `digits` significant digits, rounded up.
    pub fn to_decimal_up(&self, digits: usize) -> String {
        decimal_string(&self.to_rational(), digits, true)
    }

    /// Scientific decimal string with `digits` significant digits, rounded down.
    pub fn to_decimal_down(&self, digits: usize) -> String {
        decimal_string(&self.to_rational(), digits, false)
    }
}

/// Scientific notation for an exact rational, rounded toward `+∞` when `up`
/// and toward `-∞` otherwise.
pub fn decimal_string(r: &BigRational, digits: usize, up: bool) -> String {
    assert!(digits >= 1);
    if r.is_zero() {
        return "0".to_string();
    }
    let neg = r.is_negative();
    let mag = r.abs();
    // Rounding the magnitude away from zero rounds a positive value up.
    let away = up != neg;
    let ten = BigInt::from(10);
    let mut e = (mag.numer().bits() as i64 - mag.denom().bits() as i64) * 30103 / 100000;
    let pow10 = |n: i64| -> BigRational {
        if n >= 0 {
            BigRational::from_integer(num_traits::pow(ten.clone(), n as usize))
        } else {
            BigRational::new(BigInt::one(), num_traits::pow(ten.clone(), (-n) as usize))
        }
    };
    // settle e so that 10^e <= mag < 10^(e+1)
    while pow10(e) > mag {
        e -= 1;
    }
    while pow10(e + 1) <= mag {
        e += 1;
    }
    let scaled = &mag * pow10(digits as i64 - 1 - e);
    let mut m = if away { scaled.ceil() } else { scaled.floor() }.to_integer();
    if m == num_traits::pow(ten.clone(), digits) {
        m /= &ten;
        e += 1;
    }
    let s = m.to_string();
    let (head, tail) = s.split_at(1);
    let tail = tail.trim_end_matches('0');
    let mut out = String::new();
    if neg {
        out.push('-');
    }
    out.push_str(head);
    if !tail.is_empty() {
        out.push('.');
        out.push_str(tail);
    }
    if e != 0 {
        out.push_str(&format!("e{e}"));
    }
    out
}

impl PartialEq for Dyadic {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Dyadic {}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let e = self.exp.min(other.exp);
        shl(&self.mant, self.exp - e).cmp(&shl(&other.mant, other.exp - e))
    }
}

impl fmt::Debug for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}·2^{} (≈{:e})", self.mant, self.exp, self.to_f64())
    }
}

impl Add for &Dyadic {
    type Output = Dyadic;
    fn add(self, rhs: &Dyadic) -> Dyadic {
        let e = self.exp.min(rhs.exp);
        Dyadic::new(
            shl(&self.mant, self.exp - e) + shl(&rhs.mant, rhs.exp - e),
            e,
        )
    }
}

impl Sub for &Dyadic {
    type Output = Dyadic;
    fn sub(self, rhs: &Dyadic) -> Dyadic {
        self + &(-rhs)
    }
}

impl Mul for &Dyadic {
    type Output = Dyadic;
    fn mul(self, rhs: &Dyadic) -> Dyadic {
        Dyadic::new(&self.mant * &rhs.mant, self.exp + rhs.exp)
    }
}

impl Neg for &Dyadic {
    type Output = Dyadic;
    fn neg(self) -> Dyadic {
        Dyadic {
            mant: -&self.mant,
            exp: self.exp,
        }
    }
}

/// A closed real interval `[lo, hi]` with dyadic endpoints.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct RealInterval {
    pub lo: Dyadic,
    pub hi: Dyadic,
}

impl RealInterval {
    pub fn new(lo: Dyadic, hi: Dyadic) -> Self {
        debug_assert!(lo <= hi, "inverted interval");
        RealInterval { lo, hi }
    }

    pub fn point(x: Dyadic) -> Self {
        RealInterval {
            lo: x.clone(),
            hi: x,
        }
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        RealInterval::point(Dyadic::from_int(n))
    }

    pub fn from_rational(r: &BigRational, prec: i64) -> Self {
        let (lo, hi) = Dyadic::rational_bounds(r, prec);
        RealInterval::new(lo, hi)
    }

    pub fn width(&self) -> Dyadic {
        &self.hi - &self.lo
    }

    pub fn contains(&self, x: &Dyadic) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_rational(&self, x: &BigRational) -> bool {
        &self.lo.to_rational() <= x && x <= &self.hi.to_rational()
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn round_outward(&self, prec: i64) -> Self {
        RealInterval::new(self.lo.floor_to(prec), self.hi.ceil_to(prec))
    }

    pub fn square(&self) -> Self {
        let lo2 = &self.lo * &self.lo;
        let hi2 = &self.hi * &self.hi;
        if !self.lo.is_negative() {
            RealInterval::new(lo2, hi2)
        } else if self.hi <= Dyadic::zero() {
            RealInterval::new(hi2, lo2)
        } else {
            RealInterval::new(Dyadic::zero(), lo2.max(hi2))
        }
    }

    /// Enclosure of `√x` over the nonnegative part of the interval.
    pub fn sqrt(&self, prec: i64) -> Self {
        let hi = if self.hi.is_negative() {
            Dyadic::zero()
        } else {
            self.hi.sqrt_ceil(prec)
        };
        RealInterval::new(self.lo.sqrt_floor(prec), hi)
    }

    pub fn scale_pow2(&self, e: i64) -> Self {
        RealInterval::new(self.lo.ldexp(e), self.hi.ldexp(e))
    }

    pub fn mul_int(&self, n: &BigInt) -> Self {
        let d = Dyadic::from_int(n.clone());
        let (a, b) = (&self.lo * &d, &self.hi * &d);
        if n.is_negative() {
            RealInterval::new(b, a)
        } else {
            RealInterval::new(a, b)
        }
    }

    /// Exact midpoint, for diagnostics.
    pub fn mid_f64(&self) -> f64 {
        (&self.lo + &self.hi).ldexp(-1).to_f64()
    }
}

impl Add for &RealInterval {
    type Output = RealInterval;
    fn add(self, rhs: &RealInterval) -> RealInterval {
        RealInterval::new(&self.lo + &rhs.lo, &self.hi + &rhs.hi)
    }
}

impl Sub for &RealInterval {
    type Output = RealInterval;
    fn sub(self, rhs: &RealInterval) -> RealInterval {
        RealInterval::new(&self.lo - &rhs.hi, &self.hi - &rhs.lo)
    }
}

impl Neg for &RealInterval {
    type Output = RealInterval;
    fn neg(self) -> RealInterval {
        RealInterval::new(-&self.hi, -&self.lo)
    }
}

impl Mul for &RealInterval {
    type Output = RealInterval;
    fn mul(self, rhs: &RealInterval) -> RealInterval {
        let p = [
            &self.lo * &rhs.lo,
            &self.lo * &rhs.hi,
            &self.hi * &rhs.lo,
            &self.hi * &rhs.hi,
        ];
        let lo = p.iter().min().cloned().unwrap_or_default();
        let hi = p.iter().max().cloned().unwrap_or_default();
        RealInterval::new(lo, hi)
    }
}

/// Rectangular enclosure of a complex number.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ComplexInterval {
    pub re: RealInterval,
    pub im: RealInterval,
}

impl ComplexInterval {
    pub fn new(re: RealInterval, im: RealInterval) -> Self {
        ComplexInterval { re, im }
    }

    pub fn zero() -> Self {
        ComplexInterval::default()
    }

    pub fn re_lo(&self) -> &Dyadic {
        &self.re.lo
    }

    pub fn re_hi(&self) -> &Dyadic {
        &self.re.hi
    }

    pub fn im_lo(&self) -> &Dyadic {
        &self.im.lo
    }

    pub fn im_hi(&self) -> &Dyadic {
        &self.im.hi
    }

    /// Enclosure of `|z|²`.
    pub fn norm_sq(&self) -> RealInterval {
        &self.re.square() + &self.im.square()
    }

    pub fn round_outward(&self, prec: i64) -> Self {
        ComplexInterval::new(self.re.round_outward(prec), self.im.round_outward(prec))
    }

    pub fn conj(&self) -> Self {
        ComplexInterval::new(self.re.clone(), -&self.im)
    }

    pub fn contains_f64(&self, re: f64, im: f64, tol: f64) -> bool {
        self.re.lo.to_f64() - tol <= re
            && re <= self.re.hi.to_f64() + tol
            && self.im.lo.to_f64() - tol <= im
            && im <= self.im.hi.to_f64() + tol
    }

    /// Largest of the two side widths.
    pub fn width(&self) -> Dyadic {
        self.re.width().max(self.im.width())
    }
}

impl Add for &ComplexInterval {
    type Output = ComplexInterval;
    fn add(self, rhs: &ComplexInterval) -> ComplexInterval {
        ComplexInterval::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub for &ComplexInterval {
    type Output = ComplexInterval;
    fn sub(self, rhs: &ComplexInterval) -> ComplexInterval {
        ComplexInterval::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul for &ComplexInterval {
    type Output = ComplexInterval;
    fn mul(self, rhs: &ComplexInterval) -> ComplexInterval {
        let re = &(&self.re * &rhs.re) - &(&self.im * &rhs.im);
        let im = &(&self.re * &rhs.im) + &(&self.im * &rhs.re);
        ComplexInterval::new(re, im)
    }
}

/// Enclosure of `1/√2` on the `2^-prec` grid.
pub fn inv_sqrt2(prec: i64) -> RealInterval {
    // floor(2^prec / √2) = isqrt(2^(2 prec - 1))
    let l = (BigInt::one() << (2 * prec - 1) as usize).sqrt();
    RealInterval::new(Dyadic::new(l.clone(), -prec), Dyadic::new(l + 1, -prec))
}

fn evaluate_int(u: &RingInt, prec: i64) -> ComplexInterval {
    let r = inv_sqrt2(prec);
    let re = &RealInterval::from_int(u.a.clone()) + &r.mul_int(&(&u.b - &u.d));
    let im = &RealInterval::from_int(u.c.clone()) + &r.mul_int(&(&u.b + &u.d));
    ComplexInterval::new(re, im)
}

/// Certified enclosure of a ring scalar with side widths at most `2^-precision_bits`.
pub fn evaluate(s: &RingScalar, precision_bits: u32) -> ComplexInterval {
    assert!(precision_bits >= 16, "precision below 16 bits");
    let prec = precision_bits as i64;
    let (u, k) = if s.k % 2 == 1 {
        (s.u.mul_sqrt2(), s.k + 1)
    } else {
        (s.u.clone(), s.k)
    };
    // u / 2^(k/2), with enough working bits that coefficient size is absorbed
    let working = prec + u.max_bits() as i64 + 8;
    let z = evaluate_int(&u, working);
    let shift = -((k / 2) as i64);
    let z = ComplexInterval::new(z.re.scale_pow2(shift), z.im.scale_pow2(shift));
    z.round_outward(prec + 2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn rounding_directions() {
        let x = Dyadic::new(BigInt::from(11), -3); // 1.375
        assert_eq!(x.floor_to(1), Dyadic::new(BigInt::from(1), 0));
        assert_eq!(x.ceil_to(1), Dyadic::new(BigInt::from(3), -1));
        assert_eq!(x.floor(), BigInt::from(1));
        assert_eq!(x.ceil(), BigInt::from(2));
        let y = -&x;
        assert_eq!(y.floor(), BigInt::from(-2));
        assert_eq!(y.ceil(), BigInt::from(-1));
    }

    #[test]
    fn rational_bounds_bracket() {
        let r = rat(1, 3);
        let (lo, hi) = Dyadic::rational_bounds(&r, 20);
        assert!(lo.to_rational() < r && r < hi.to_rational());
        let (lo, hi) = Dyadic::rational_bounds(&rat(3, 4), 20);
        assert_eq!(lo, hi);
    }

    #[test]
    fn sqrt_bounds() {
        let two = Dyadic::from_int(2);
        let lo = two.sqrt_floor(40);
        let hi = two.sqrt_ceil(40);
        assert!(&lo * &lo <= two && two <= &hi * &hi);
        assert!(&hi - &lo <= Dyadic::new(BigInt::one(), -40));
        assert_eq!(Dyadic::from_int(9).sqrt_ceil(10), Dyadic::from_int(3));
    }

    #[test]
    fn decimal_formatting() {
        assert_eq!(decimal_string(&rat(1, 3), 5, true), "3.3334e-1");
        assert_eq!(decimal_string(&rat(1, 3), 5, false), "3.3333e-1");
        assert_eq!(decimal_string(&rat(-1, 3), 5, true), "-3.3333e-1");
        assert_eq!(decimal_string(&rat(999999, 1), 3, true), "1e6");
        assert_eq!(decimal_string(&rat(5, 1), 4, true), "5");
        assert_eq!(decimal_string(&rat(0, 1), 4, true), "0");
    }

    #[test]
    fn evaluate_one() {
        let z = evaluate(&RingScalar::one(), 64);
        assert!(z.re.contains(&Dyadic::one()));
        assert!(z.im.contains(&Dyadic::zero()));
        assert!(z.width() < Dyadic::new(BigInt::one(), -60));
    }

    #[test]
    fn evaluate_omega() {
        let z = evaluate(&RingScalar::omega_pow(1), 64);
        let h = std::f64::consts::FRAC_1_SQRT_2;
        assert!(z.contains_f64(h, h, 1e-15));
        let r = inv_sqrt2(200);
        // the 64-bit enclosure must overlap the 200-bit one
        assert!(z.re.lo <= r.hi && r.lo <= z.re.hi);
    }

    #[test]
    fn evaluate_sqrt2_over_two() {
        let s = RingScalar::new(RingInt::sqrt2(), 2);
        let z = evaluate(&s, 64);
        assert!(z.contains_f64(std::f64::consts::FRAC_1_SQRT_2, 0.0, 1e-15));
        let reference = inv_sqrt2(256);
        assert!(z.re.lo <= reference.lo && reference.hi <= z.re.hi);
    }

    #[test]
    fn interval_square_straddling_zero() {
        let i = RealInterval::new(Dyadic::from_int(-1), Dyadic::from_int(2));
        assert_eq!(
            i.square(),
            RealInterval::new(Dyadic::zero(), Dyadic::from_int(4))
        );
    }
}
