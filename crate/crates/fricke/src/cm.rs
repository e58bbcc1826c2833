//! Imaginary quadratic fields, reduced binary quadratic forms, and the
//! reciprocity matrix group W_{N,K}.
//!
//! A field is carried as its fundamental discriminant d_K together with the
//! minimal polynomial X^2 + bX + c of the standard CM point tau_K, chosen so
//! that O_K = [tau_K, 1]:
//!
//!   d_K = 1 mod 4:  tau_K = (-1 + sqrt(d_K))/2,  (b, c) = (1, (1 - d_K)/4),
//!   d_K = 0 mod 4:  tau_K = sqrt(d_K)/2,         (b, c) = (0, -d_K/4).
//!
//! Class numbers come from exhaustive reduced-form enumeration; the forms
//! double as the evaluation points for conjugation over K.

use rug::Float;

use crate::error::{Error, Result};
use crate::fricke_family::GLMatrix;
use crate::numerics::{BigComplex, EvalConfig};

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn is_squarefree(mut m: i64) -> bool {
    m = m.abs();
    if m == 0 {
        return false;
    }
    let mut d = 2;
    while d * d <= m {
        if m % (d * d) == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Imaginary quadratic field of fundamental discriminant d_K, excluding
/// Q(i) and Q(sqrt(-3)).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuadField {
    d: i64,
    b: i64,
    c: i64,
}

impl QuadField {
    pub fn discriminant(&self) -> i64 {
        self.d
    }

    /// Coefficient b of min(tau_K, Q) = X^2 + bX + c.
    pub fn b(&self) -> i64 {
        self.b
    }

    /// Coefficient c of min(tau_K, Q) = X^2 + bX + c.
    pub fn c(&self) -> i64 {
        self.c
    }

    /// tau_K at the working precision of `cfg`.
    pub fn tau(&self, cfg: &EvalConfig) -> BigComplex {
        let p = cfg.working_prec();
        let root = Float::with_val(p, self.d.unsigned_abs()).sqrt();
        if self.d.rem_euclid(4) == 1 {
            BigComplex::new(Float::with_val(p, -0.5f64), root / 2u32)
        } else {
            BigComplex::new(Float::new(p), root / 2u32)
        }
    }

    pub fn class_number(&self) -> usize {
        reduced_forms(self.d).expect("fundamental discriminant").len()
    }
}

/// Validate d as a fundamental discriminant and build the field data.
pub fn field_from_discriminant(d: i64) -> Result<QuadField> {
    if d >= 0 {
        return Err(Error::NotImaginary);
    }
    if d == -3 || d == -4 {
        return Err(Error::ExcludedField);
    }
    let fundamental = match d.rem_euclid(4) {
        1 => is_squarefree(d),
        0 => {
            let m = d / 4;
            is_squarefree(m) && matches!(m.rem_euclid(4), 2 | 3)
        }
        _ => false,
    };
    if !fundamental {
        return Err(Error::NotFundamental);
    }
    let (b, c) = if d.rem_euclid(4) == 1 {
        (1, (1 - d) / 4)
    } else {
        (0, -d / 4)
    };
    Ok(QuadField { d, b, c })
}

/// A reduced, primitive binary quadratic form (A, B, C) of negative
/// discriminant: |B| <= A <= C, B >= 0 when |B| = A or A = C, A > 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct QuadForm {
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

impl QuadForm {
    pub fn discriminant(&self) -> i64 {
        self.b * self.b - 4 * self.a * self.c
    }

    /// Root tau_Q = (-B + sqrt(d))/(2A) in the upper half plane.
    pub fn tau(&self, cfg: &EvalConfig) -> BigComplex {
        let p = cfg.working_prec();
        let root = Float::with_val(p, self.discriminant().unsigned_abs()).sqrt();
        BigComplex::new(
            Float::with_val(p, -self.b) / Float::with_val(p, 2 * self.a),
            root / Float::with_val(p, 2 * self.a),
        )
    }

    pub fn is_principal(&self) -> bool {
        self.a == 1
    }
}

impl std::fmt::Display for QuadForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.c)
    }
}

/// All reduced primitive forms of discriminant d < 0, sorted by (A, B).
/// The length is the class number h(d).
pub fn reduced_forms(d: i64) -> Result<Vec<QuadForm>> {
    if d >= 0 {
        return Err(Error::NotImaginary);
    }
    if d.rem_euclid(4) > 1 {
        return Err(Error::NotFundamental);
    }
    let mut forms = vec![];
    let mut a = 1i64;
    while 3 * a * a <= -d {
        for b in (-a + 1)..=a {
            if (b - d).rem_euclid(2) != 0 {
                continue;
            }
            let num = b * b - d;
            if num % (4 * a) != 0 {
                continue;
            }
            let c = num / (4 * a);
            if c < a {
                continue;
            }
            if a == c && b < 0 {
                continue;
            }
            if gcd(gcd(a, b), c) != 1 {
                continue;
            }
            forms.push(QuadForm { a, b, c });
        }
        a += 1;
    }
    forms.sort();
    Ok(forms)
}

/// Class number by reduced-form counting.
pub fn class_number(d: i64) -> Result<usize> {
    Ok(reduced_forms(d)?.len())
}

/// The group W_{N,K} / {+-I}: all classes of
/// [[t - bs, -cs], [s, t]] mod N with t^2 - bst + cs^2 invertible mod N.
pub fn wnk_group(field: &QuadField, n: i64) -> Vec<GLMatrix> {
    assert!(n >= 2);
    let mut set = std::collections::BTreeSet::new();
    for t in 0..n {
        for s in 0..n {
            if let Ok(m) = GLMatrix::new(t - field.b() * s, -field.c() * s, s, t, n) {
                set.insert(m);
            }
        }
    }
    set.into_iter().collect()
}

/// Matrix of the class [(s tau_K + t) O_K] in W_{N,K} / {+-I}.
/// Fails with NotCoprime when the norm t^2 - bst + cs^2 shares a factor
/// with N.
pub fn element_to_matrix(field: &QuadField, s: i64, t: i64, n: i64) -> Result<GLMatrix> {
    let norm = t * t - field.b() * s * t + field.c() * s * s;
    if gcd(norm, n) != 1 {
        return Err(Error::NotCoprime);
    }
    GLMatrix::new(t - field.b() * s, -field.c() * s, s, t, n).map_err(|_| Error::NotCoprime)
}

/// Reduce a product (s1 tau + t1)(s2 tau + t2) via tau^2 = -b tau - c.
pub fn element_product(field: &QuadField, s1: i64, t1: i64, s2: i64, t2: i64) -> (i64, i64) {
    let s3 = s1 * t2 + s2 * t1 - field.b() * s1 * s2;
    let t3 = t1 * t2 - field.c() * s1 * s2;
    (s3, t3)
}
