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

//! Randomized four-square decomposition and the number theory under it.
//!
//! [`four_squares`] is Las Vegas: random choices reduce the problem to
//! splitting a probable prime `p ≡ 1 (mod 4)` into two squares through a
//! square root of `-1` and a Gaussian gcd. Every candidate is checked by
//! summation, so a Miller–Rabin false positive only costs a retry.

use num_bigint::{BigInt, Sign};
use num_integer::{Integer, Roots};
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

const MILLER_RABIN_ROUNDS: usize = 40;
const SQRT_MINUS_ONE_ATTEMPTS: usize = 128;
const BRUTE_FORCE_LIMIT: u64 = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum NumTheoryError {
    #[error("no square root of -1 found modulo {0}; the modulus is composite")]
    NoSqrtMinusOne(BigInt),
    #[error("{0} is not a sum of two squares by the Gaussian gcd route")]
    TwoSquaresFailed(BigInt),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

/// Deterministic stream of random integers seeded from a `u64`.
///
/// Backed by ChaCha8, whose output is specified independently of platform.
#[derive(Clone, Debug)]
pub struct RandomSource {
    seed: u64,
    rng: ChaCha8Rng,
}

impl RandomSource {
    pub fn new(seed: u64) -> Self {
        RandomSource {
            seed,
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn next_u64(&mut self) -> u64 {
        self.rng.next_u64()
    }

    /// Uniform in `[0, 1)` with 53 random bits.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 / (1u64 << 53) as f64
    }

    /// Uniform integer in `[0, n)`; `n` must be positive.
    pub fn below(&mut self, n: &BigInt) -> BigInt {
        assert!(n.is_positive(), "empty range");
        let bits = n.bits();
        let bytes = bits.div_ceil(8) as usize;
        let excess = bytes as u64 * 8 - bits;
        let mut buf = vec![0u8; bytes];
        loop {
            self.rng.fill_bytes(&mut buf);
            buf[0] &= 0xffu8 >> excess;
            let x = BigInt::from_bytes_be(Sign::Plus, &buf);
            if &x < n {
                return x;
            }
        }
    }

    /// Uniform integer in `[lo, hi]`.
    pub fn range_inclusive(&mut self, lo: &BigInt, hi: &BigInt) -> BigInt {
        assert!(lo <= hi, "empty range");
        lo + self.below(&(hi - lo + 1))
    }
}

/// A solution `a² + b² + c² + d² = M`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QuadSolution {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
    pub d: BigInt,
}

impl QuadSolution {
    pub fn new(a: BigInt, b: BigInt, c: BigInt, d: BigInt) -> Self {
        QuadSolution { a, b, c, d }
    }

    pub fn from_i64s(a: i64, b: i64, c: i64, d: i64) -> Self {
        QuadSolution::new(a.into(), b.into(), c.into(), d.into())
    }

    pub fn sum_of_squares(&self) -> BigInt {
        &self.a * &self.a + &self.b * &self.b + &self.c * &self.c + &self.d * &self.d
    }

    pub fn solves(&self, m: &BigInt) -> bool {
        &self.sum_of_squares() == m
    }

    /// Absolute values sorted in descending order.
    pub fn canonical(&self) -> [BigInt; 4] {
        let mut v = [self.a.abs(), self.b.abs(), self.c.abs(), self.d.abs()];
        v.sort_by(|x, y| y.cmp(x));
        v
    }
}

/// Bookkeeping from one [`four_squares_with_stats`] call.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct FourSquareStats {
    /// Random candidates drawn before success.
    pub trials: u64,
    /// Whether the brute-force fallback produced the answer.
    pub brute_force: bool,
}

const SMALL_PRIMES: [u32; 15] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47];

/// Miller–Rabin with 40 random bases. `false` means certainly composite.
pub fn is_probable_prime(n: &BigInt, rng: &mut RandomSource) -> bool {
    if n < &BigInt::from(2) {
        return false;
    }
    for &p in &SMALL_PRIMES {
        let p = BigInt::from(p);
        if n == &p {
            return true;
        }
        if (n % &p).is_zero() {
            return false;
        }
    }
    // no factor below 50 and n < 50²
    if n < &BigInt::from(2500) {
        return true;
    }
    let n_minus_1: BigInt = n - 1;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s as usize;
    let two = BigInt::from(2);
    let n_minus_2 = n - 2;
    'witness: for _ in 0..MILLER_RABIN_ROUNDS {
        let a = rng.range_inclusive(&two, &n_minus_2);
        let mut x = a.modpow(&d, n);
        if x.is_one() || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == n_minus_1 {
                continue 'witness;
            }
            if x.is_one() {
                return false;
            }
        }
        return false;
    }
    true
}

/// A `t` with `t² ≡ -1 (mod p)` for prime `p ≡ 1 (mod 4)`.
pub fn sqrt_minus_one(p: &BigInt, rng: &mut RandomSource) -> Result<BigInt, NumTheoryError> {
    if p.mod_floor(&BigInt::from(4)) != BigInt::one() || p < &BigInt::from(5) {
        return Err(NumTheoryError::InvalidArgument(format!(
            "{p} is not a prime congruent to 1 mod 4"
        )));
    }
    let exp: BigInt = (p - 1) / 4;
    let minus_one = p - 1;
    let lo = BigInt::from(2);
    let hi = p - 2;
    for _ in 0..SQRT_MINUS_ONE_ATTEMPTS {
        let u = rng.range_inclusive(&lo, &hi);
        let t = u.modpow(&exp, p);
        if (&t * &t) % p == minus_one {
            return Ok(t);
        }
    }
    Err(NumTheoryError::NoSqrtMinusOne(p.clone()))
}

/// Gaussian integer as `(re, im)`.
pub type Gaussian = (BigInt, BigInt);

fn round_div(n: &BigInt, d: &BigInt) -> BigInt {
    // nearest integer to n/d for d > 0, halves rounded up
    let num: BigInt = n * 2 + d;
    num.div_floor(&(d * 2))
}

/// Euclidean gcd in `Z[i]` with rounded quotients; unique up to a unit.
pub fn gauss_gcd(z: &Gaussian, w: &Gaussian) -> Gaussian {
    let mut x = z.clone();
    let mut y = w.clone();
    while !(y.0.is_zero() && y.1.is_zero()) {
        let norm = &y.0 * &y.0 + &y.1 * &y.1;
        // x · conj(y)
        let re = &x.0 * &y.0 + &x.1 * &y.1;
        let im = &x.1 * &y.0 - &x.0 * &y.1;
        let q = (round_div(&re, &norm), round_div(&im, &norm));
        let r = (
            &x.0 - (&q.0 * &y.0 - &q.1 * &y.1),
            &x.1 - (&q.0 * &y.1 + &q.1 * &y.0),
        );
        x = y;
        y = r;
    }
    x
}

/// `(c, d)` with `c² + d² = p` for `p ∈ {1, 2}` or a prime `p ≡ 1 (mod 4)`.
pub fn two_squares(p: &BigInt, rng: &mut RandomSource) -> Result<(BigInt, BigInt), NumTheoryError> {
    if p.is_one() {
        return Ok((BigInt::one(), BigInt::zero()));
    }
    if p == &BigInt::from(2) {
        return Ok((BigInt::one(), BigInt::one()));
    }
    let t = sqrt_minus_one(p, rng)?;
    let (c, d) = gauss_gcd(&(p.clone(), BigInt::zero()), &(t, BigInt::one()));
    let (c, d) = (c.abs(), d.abs());
    if &(&c * &c + &d * &d) == p {
        Ok((c, d))
    } else {
        Err(NumTheoryError::TwoSquaresFailed(p.clone()))
    }
}

/// Uniform random `x ∈ [0, limit]` with `x ≡ residue (mod modulus)`.
fn random_in_class(
    limit: &BigInt,
    residue: u32,
    modulus: u32,
    rng: &mut RandomSource,
) -> Option<BigInt> {
    let r = BigInt::from(residue);
    if limit < &r {
        return None;
    }
    let count = (limit - &r) / modulus + 1;
    Some(rng.below(&count) * modulus + r)
}

/// Splits a probable prime (or 1) into two squares, or reports a failed trial.
fn split_candidate(p: &BigInt, rng: &mut RandomSource) -> Option<(BigInt, BigInt)> {
    if !p.is_one() && !is_probable_prime(p, rng) {
        return None;
    }
    two_squares(p, rng).ok()
}

/// One random attempt on `m ≡ 3 (mod 8)`: `m = x² + 2q` with `q = c² + d²`,
/// and `2q = (c+d)² + (c-d)²`.
fn attempt_three_mod_eight(m: &BigInt, rng: &mut RandomSource) -> Option<[BigInt; 3]> {
    let x = random_in_class(&m.sqrt(), 1, 2, rng)?;
    let q: BigInt = (m - &x * &x) / 2;
    let (c, d) = split_candidate(&q, rng)?;
    Some([x, &c + &d, (&c - &d).abs()])
}

fn attempt(m: &BigInt, rng: &mut RandomSource) -> Option<[BigInt; 4]> {
    let zero = BigInt::zero();
    match m.mod_floor(&BigInt::from(8)).to_u32().unwrap_or(0) {
        r @ (1 | 2 | 5 | 6) => {
            // p = m - x1² - x2² ≡ 1 (mod 4)
            let x1_parity = if r % 4 == 2 { 1 } else { 0 };
            let x1 = random_in_class(&m.sqrt(), x1_parity, 2, rng)?;
            let rest = m - &x1 * &x1;
            let x2 = random_in_class(&rest.sqrt(), 0, 2, rng)?;
            let p = &rest - &x2 * &x2;
            let (c, d) = split_candidate(&p, rng)?;
            Some([x1, x2, c, d])
        }
        3 => attempt_three_mod_eight(m, rng).map(|[a, b, c]| [a, b, c, zero]),
        7 => {
            // x2 ≡ 2 (mod 4) drops m to 3 (mod 8); keep m - x2² >= 3
            let x2 = random_in_class(&(m - BigInt::from(3)).sqrt(), 2, 4, rng)?;
            let reduced = m - &x2 * &x2;
            attempt_three_mod_eight(&reduced, rng).map(|[a, b, c]| [a, b, c, x2])
        }
        _ => unreachable!("multiples of 4 are stripped before sampling"),
    }
}

/// Four-square decomposition of `m >= 0`.
pub fn four_squares(m: &BigInt, rng: &mut RandomSource) -> QuadSolution {
    four_squares_with_stats(m, rng).0
}

/// [`four_squares`] plus the number of random trials it took.
pub fn four_squares_with_stats(
    m: &BigInt,
    rng: &mut RandomSource,
) -> (QuadSolution, FourSquareStats) {
    assert!(!m.is_negative(), "four_squares of a negative number");
    let mut stats = FourSquareStats::default();
    if m.is_zero() {
        return (QuadSolution::from_i64s(0, 0, 0, 0), stats);
    }
    // m = 4^e · odd-ish part; each factor 4 doubles the solution
    let mut e = 0usize;
    let mut core = m.clone();
    let four = BigInt::from(4);
    while (&core % &four).is_zero() {
        core /= &four;
        e += 1;
    }
    let small = core < BigInt::from(BRUTE_FORCE_LIMIT);
    let cap = 64 * (core.bits() + 16);
    let parts = loop {
        if small && stats.trials >= cap {
            let q = four_squares_bruteforce(core.to_u64().unwrap_or(0));
            stats.brute_force = true;
            break [q.a, q.b, q.c, q.d];
        }
        stats.trials += 1;
        if let Some(parts) = attempt(&core, rng) {
            let sum: BigInt = parts.iter().map(|x| x * x).sum();
            if sum == core {
                break parts;
            }
        }
    };
    let [a, b, c, d] = parts.map(|x| x.abs() << e);
    let q = QuadSolution::new(a, b, c, d);
    debug_assert!(q.solves(m));
    (q, stats)
}

/// Exhaustive search returning the lexicographically greatest solution with
/// `a >= b >= c >= d >= 0`. Intended as a test oracle for `m <= 10⁶`.
pub fn four_squares_bruteforce(m: u64) -> QuadSolution {
    assert!(m <= 1_000_000_000_000, "brute force is for small inputs");
    let isqrt = |x: u64| -> u64 { x.sqrt() };
    let mut a = isqrt(m);
    loop {
        let ra = m - a * a;
        let mut b = a.min(isqrt(ra));
        loop {
            let rb = ra - b * b;
            let mut c = b.min(isqrt(rb));
            loop {
                let rc = rb - c * c;
                let d = isqrt(rc);
                if d * d == rc && d <= c {
                    return QuadSolution::from_i64s(a as i64, b as i64, c as i64, d as i64);
                }
                if c == 0 {
                    break;
                }
                c -= 1;
            }
            if b == 0 {
                break;
            }
            b -= 1;
        }
        // Lagrange guarantees a hit before a underflows
        a -= 1;
    }
}
