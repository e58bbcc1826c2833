//! Exact roots of unity.
//!
//! Galois actions on modular units move powers of e^{pi i / N^2} around;
//! tracking them in floating point would silently lose exactness. A
//! [`UnityRoot`] is zeta_m^k = e^{2 pi i k / m} held as integers.

use rug::Float;

use crate::numerics::BigComplex;

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn lcm(a: i64, b: i64) -> i64 {
    a / gcd(a, b) * b
}

/// zeta_m^k with 0 <= k < m and gcd(k, m) = 1 (m minimal), except the
/// identity which is stored as zeta_1^0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UnityRoot {
    order: i64,
    exponent: i64,
}

impl UnityRoot {
    pub fn new(order: i64, exponent: i64) -> Self {
        assert!(order > 0, "order must be positive");
        let k = exponent.rem_euclid(order);
        if k == 0 {
            return UnityRoot { order: 1, exponent: 0 };
        }
        let g = gcd(k, order);
        UnityRoot { order: order / g, exponent: k / g }
    }

    pub fn one() -> Self {
        UnityRoot { order: 1, exponent: 0 }
    }

    pub fn minus_one() -> Self {
        UnityRoot { order: 2, exponent: 1 }
    }

    pub fn order(&self) -> i64 {
        self.order
    }

    pub fn exponent(&self) -> i64 {
        self.exponent
    }

    pub fn is_one(&self) -> bool {
        self.order == 1
    }

    pub fn mul(&self, other: &UnityRoot) -> UnityRoot {
        let m = lcm(self.order, other.order);
        UnityRoot::new(m, self.exponent * (m / self.order) + other.exponent * (m / other.order))
    }

    pub fn pow(&self, e: i64) -> UnityRoot {
        // new() reduces e * exponent mod order; widen to i128 first
        let k = (self.exponent as i128 * e as i128).rem_euclid(self.order as i128);
        UnityRoot::new(self.order, k as i64)
    }

    pub fn inv(&self) -> UnityRoot {
        self.pow(-1)
    }

    pub fn conj(&self) -> UnityRoot {
        self.inv()
    }

    /// Exponent rewritten over a target order (must be a multiple).
    pub fn exponent_at_order(&self, order: i64) -> Option<i64> {
        if order % self.order != 0 {
            return None;
        }
        Some(self.exponent * (order / self.order))
    }

    /// Numeric value e^{2 pi i k/m} at the given precision.
    pub fn eval(&self, prec: u32) -> BigComplex {
        let two_pi = Float::with_val(prec, rug::float::Constant::Pi) * 2u32;
        let theta = two_pi * Float::with_val(prec, self.exponent) / Float::with_val(prec, self.order);
        BigComplex::cis(&theta)
    }
}

impl std::fmt::Display for UnityRoot {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_one() {
            write!(f, "1")
        } else if self.order == 2 {
            write!(f, "-1")
        } else {
            write!(f, "zeta_{}^{}", self.order, self.exponent)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalization() {
        assert_eq!(UnityRoot::new(8, 8), UnityRoot::one());
        assert_eq!(UnityRoot::new(8, 10), UnityRoot::new(4, 1));
        assert_eq!(UnityRoot::new(8, -1), UnityRoot::new(8, 7));
        assert_eq!(UnityRoot::new(6, 3), UnityRoot::minus_one());
    }

    #[test]
    fn group_laws() {
        let a = UnityRoot::new(8, 3);
        let b = UnityRoot::new(12, 5);
        let ab = a.mul(&b);
        assert_eq!(ab, UnityRoot::new(24, 19));
        assert!(a.mul(&a.inv()).is_one());
        assert_eq!(a.pow(3), UnityRoot::new(8, 1));
        assert_eq!(a.pow(-2), UnityRoot::new(4, 1));
    }

    #[test]
    fn numeric_evaluation() {
        let z8 = UnityRoot::new(8, 1).eval(128);
        let s = Float::with_val(128, 0.5f64).sqrt();
        assert!(Float::with_val(128, z8.re() - &s).abs() < 1e-30);
        assert!(Float::with_val(128, z8.im() - &s).abs() < 1e-30);
    }

    proptest::proptest! {
        #[test]
        fn mul_matches_exponent_arithmetic(m1 in 1i64..200, k1 in 0i64..400, m2 in 1i64..200, k2 in 0i64..400) {
            let a = UnityRoot::new(m1, k1);
            let b = UnityRoot::new(m2, k2);
            let c = a.mul(&b);
            // compare angles as exact fractions: k1/m1 + k2/m2 == kc/mc (mod 1)
            let lhs_num = k1.rem_euclid(m1) * m2 + k2.rem_euclid(m2) * m1;
            let lhs_den = m1 * m2;
            let rhs_num = c.exponent();
            let rhs_den = c.order();
            let diff_num = lhs_num * rhs_den - rhs_num * lhs_den;
            let diff_den = lhs_den * rhs_den;
            proptest::prop_assert_eq!(diff_num.rem_euclid(diff_den), 0);
        }
    }
}
