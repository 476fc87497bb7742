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

use proptest::prelude::*;
use sqct::ring::{evaluate, RingInt, RingScalar};

fn ring_int() -> impl Strategy<Value = RingInt> {
    prop::array::uniform4(-10_000i64..10_000)
        .prop_map(|c| RingInt::from_i64s(c[0], c[1], c[2], c[3]))
}

fn scalar() -> impl Strategy<Value = RingScalar> {
    (ring_int(), 0u32..12).prop_map(|(u, k)| RingScalar::new(u, k))
}

/// Complex value of `a + bω + cω² + dω³` in floating point.
fn to_complex(z: &RingInt) -> (f64, f64) {
    let c: Vec<f64> = z
        .coeffs()
        .iter()
        .map(|x| x.to_string().parse().unwrap())
        .collect();
    let r = std::f64::consts::FRAC_1_SQRT_2;
    (c[0] + r * (c[1] - c[3]), c[2] + r * (c[1] + c[3]))
}

proptest! {
    #[test]
    fn ring_axioms(p in ring_int(), q in ring_int(), r in ring_int()) {
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert_eq!(&(&p - &q) + &q, p.clone());
    }

    #[test]
    fn conjugation_and_norm(p in ring_int(), q in ring_int()) {
        prop_assert_eq!((&p * &q).conj(), &p.conj() * &q.conj());
        prop_assert_eq!(p.conj().conj(), p.clone());
        prop_assert_eq!((&p * &q).norm(), &p.norm() * &q.norm());
        prop_assert!(!p.norm().is_negative());
        let (re, im) = to_complex(&p);
        let n = p.norm().to_f64();
        prop_assert!((n - (re * re + im * im)).abs() <= 1e-6 * n.max(1.0));
    }

    #[test]
    fn sqrt2_division_round_trips(p in ring_int()) {
        let z = p.mul_sqrt2();
        prop_assert!(z.divisible_by_sqrt2());
        prop_assert_eq!(z.div_sqrt2().unwrap(), p.clone());
        prop_assert_eq!(p.divisible_by_sqrt2(), p.class() == sqct::ring::ResidueClass::ZERO);
    }

    #[test]
    fn omega_rotation(p in ring_int(), m in -16i64..16) {
        prop_assert_eq!(p.omega_mul(m), &p * &RingInt::omega_pow(m));
        prop_assert_eq!(p.omega_mul(m).norm(), p.norm());
    }

    #[test]
    fn scalar_normalization(s in scalar(), extra in 0u32..6) {
        let n = s.normalize();
        prop_assert_eq!(&n, &s);
        prop_assert!(n.k == 0 || !n.u.divisible_by_sqrt2());
        // same value at a larger exponent compares equal
        let wide = RingScalar::new(s.u.mul_sqrt2_pow(extra), s.k + extra);
        prop_assert_eq!(&wide, &s);
        prop_assert_eq!(wide.lde(), s.lde());
    }

    #[test]
    fn scalar_field_ops(a in scalar(), b in scalar()) {
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
    }

    #[test]
    fn enclosure_contains_value(s in scalar(), bits in 24u32..200) {
        let z = evaluate(&s, bits);
        let (re, im) = to_complex(&s.u);
        let scale = 2f64.powf(-(s.k as f64) / 2.0);
        prop_assert!(z.contains_f64(re * scale, im * scale, 1e-9 * (re.abs() + im.abs() + 1.0)));
        prop_assert!(z.width().to_f64() <= 2f64.powi(-(bits as i32)));
    }
}
