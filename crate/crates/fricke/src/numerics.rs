//! Arbitrary-precision complex arithmetic and q-series plumbing.
//!
//! Everything downstream evaluates in [`BigComplex`], a complex number on top
//! of MPFR reals with an explicit precision in bits. Arithmetic between two
//! values carries the minimum precision of the operands, so a low-precision
//! input can never masquerade as a high-precision result.

use rug::float::Constant;
use rug::ops::CompleteRound;
use rug::{Float, Rational};

use crate::error::{Error, Result};

/// Minimum precision accepted anywhere in the crate.
pub const MIN_PRECISION: u32 = 64;

/// Evaluation parameters: target precision, guard bits for intermediate
/// rounding, and an optional cap on series length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvalConfig {
    precision_bits: u32,
    guard_bits: u32,
    max_terms: Option<usize>,
}

impl Default for EvalConfig {
    fn default() -> Self {
        EvalConfig::new(192, 24, None)
    }
}

impl EvalConfig {
    pub fn new(precision_bits: u32, guard_bits: u32, max_terms: Option<usize>) -> Self {
        assert!(precision_bits >= MIN_PRECISION, "precision must be at least {MIN_PRECISION} bits");
        assert!(guard_bits < precision_bits, "guard bits must be below the precision");
        EvalConfig { precision_bits, guard_bits, max_terms }
    }

    pub fn with_precision(precision_bits: u32) -> Self {
        EvalConfig::new(precision_bits, 24.min(precision_bits - 1), None)
    }

    pub fn precision_bits(&self) -> u32 {
        self.precision_bits
    }

    pub fn guard_bits(&self) -> u32 {
        self.guard_bits
    }

    pub fn max_terms(&self) -> Option<usize> {
        self.max_terms
    }

    /// Precision used for intermediate computation.
    pub fn working_prec(&self) -> u32 {
        self.precision_bits + self.guard_bits
    }

    pub fn pi(&self) -> Float {
        Float::with_val(self.working_prec(), Constant::Pi)
    }
}

/// Complex number with explicit binary precision.
#[derive(Debug, Clone, PartialEq)]
pub struct BigComplex {
    re: Float,
    im: Float,
}

impl BigComplex {
    pub fn new(re: Float, im: Float) -> Self {
        let prec = re.prec().min(im.prec());
        assert!(prec >= MIN_PRECISION);
        let re = Float::with_val(prec, re);
        let im = Float::with_val(prec, im);
        BigComplex { re, im }
    }

    pub fn zero(prec: u32) -> Self {
        BigComplex::new(Float::new(prec), Float::new(prec))
    }

    pub fn one(prec: u32) -> Self {
        BigComplex::from_f64(prec, 1.0, 0.0)
    }

    pub fn from_f64(prec: u32, re: f64, im: f64) -> Self {
        BigComplex::new(Float::with_val(prec, re), Float::with_val(prec, im))
    }

    pub fn from_real(re: Float) -> Self {
        let prec = re.prec();
        BigComplex { im: Float::new(prec), re }
    }

    pub fn from_rationals(prec: u32, re: &Rational, im: &Rational) -> Self {
        BigComplex::new(Float::with_val(prec, re), Float::with_val(prec, im))
    }

    /// cos(theta) + i sin(theta).
    pub fn cis(theta: &Float) -> Self {
        let prec = theta.prec();
        let (sin, cos) = theta.clone().sin_cos(Float::new(prec));
        BigComplex { re: cos, im: sin }
    }

    pub fn re(&self) -> &Float {
        &self.re
    }

    pub fn im(&self) -> &Float {
        &self.im
    }

    pub fn prec(&self) -> u32 {
        self.re.prec()
    }

    pub fn is_finite(&self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }

    fn out_prec(&self, other: &Self) -> u32 {
        self.prec().min(other.prec())
    }

    pub fn add(&self, other: &Self) -> Self {
        let p = self.out_prec(other);
        BigComplex {
            re: (&self.re + &other.re).complete(p),
            im: (&self.im + &other.im).complete(p),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let p = self.out_prec(other);
        BigComplex {
            re: (&self.re - &other.re).complete(p),
            im: (&self.im - &other.im).complete(p),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let p = self.out_prec(other);
        let re = Float::with_val(p, &self.re * &other.re) - Float::with_val(p, &self.im * &other.im);
        let im = Float::with_val(p, &self.re * &other.im) + Float::with_val(p, &self.im * &other.re);
        BigComplex { re: Float::with_val(p, re), im: Float::with_val(p, im) }
    }

    pub fn div(&self, other: &Self) -> Self {
        self.mul(&other.recip())
    }

    pub fn neg(&self) -> Self {
        BigComplex {
            re: Float::with_val(self.re.prec(), -&self.re),
            im: Float::with_val(self.im.prec(), -&self.im),
        }
    }

    pub fn conj(&self) -> Self {
        BigComplex { re: self.re.clone(), im: Float::with_val(self.im.prec(), -&self.im) }
    }

    pub fn scale(&self, s: &Float) -> Self {
        let p = self.prec().min(s.prec());
        BigComplex {
            re: (&self.re * s).complete(p),
            im: (&self.im * s).complete(p),
        }
    }

    pub fn scale_i64(&self, s: i64) -> Self {
        let p = self.prec();
        BigComplex {
            re: (&self.re * s).complete(p),
            im: (&self.im * s).complete(p),
        }
    }

    /// Squared absolute value.
    pub fn abs_sqr(&self) -> Float {
        let p = self.prec();
        self.re.clone().square() + Float::with_val(p, self.im.clone().square())
    }

    pub fn abs(&self) -> Float {
        self.re.clone().hypot(&self.im)
    }

    pub fn recip(&self) -> Self {
        let p = self.prec();
        let n = self.abs_sqr();
        BigComplex {
            re: (&self.re / &n).complete(p),
            im: Float::with_val(p, -&self.im) / n,
        }
    }

    /// e^z = e^re (cos im + i sin im).
    pub fn exp(&self) -> Self {
        let p = self.prec();
        let r = self.re.clone().exp();
        let (sin, cos) = self.im.clone().sin_cos(Float::new(p));
        BigComplex { re: Float::with_val(p, &r * &cos), im: Float::with_val(p, &r * &sin) }
    }

    pub fn square(&self) -> Self {
        self.mul(self)
    }

    /// Integer power by binary exponentiation; negative exponents invert.
    pub fn powi(&self, e: i64) -> Self {
        if e == 0 {
            return BigComplex::one(self.prec());
        }
        let mut base = if e < 0 { self.recip() } else { self.clone() };
        let mut k = e.unsigned_abs();
        let mut acc = BigComplex::one(self.prec());
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.square();
            }
        }
        acc
    }

    /// Round to a (usually lower) precision.
    pub fn round_to(&self, prec: u32) -> Self {
        BigComplex::new(Float::with_val(prec, &self.re), Float::with_val(prec, &self.im))
    }
}

impl std::fmt::Display for BigComplex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({} + {}i)", self.re, self.im)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl std::ops::$trait<&BigComplex> for &BigComplex {
            type Output = BigComplex;
            fn $method(self, rhs: &BigComplex) -> BigComplex {
                BigComplex::$method(self, rhs)
            }
        }
        impl std::ops::$trait<&BigComplex> for BigComplex {
            type Output = BigComplex;
            fn $method(self, rhs: &BigComplex) -> BigComplex {
                BigComplex::$method(&self, rhs)
            }
        }
        impl std::ops::$trait<BigComplex> for BigComplex {
            type Output = BigComplex;
            fn $method(self, rhs: BigComplex) -> BigComplex {
                BigComplex::$method(&self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

/// tau as an exact rational point a + b i at the working precision.
pub fn tau_from_rationals(re: &Rational, im: &Rational, cfg: &EvalConfig) -> BigComplex {
    BigComplex::from_rationals(cfg.working_prec(), re, im)
}

fn require_upper_half(tau: &BigComplex) -> Result<()> {
    if tau.im().is_sign_positive() && !tau.im().is_zero() && tau.is_finite() {
        Ok(())
    } else {
        Err(Error::NotInUpperHalfPlane)
    }
}

/// q = e^{2 pi i tau}. Requires Im(tau) > 0, so |q| < 1.
pub fn nome(tau: &BigComplex, cfg: &EvalConfig) -> Result<BigComplex> {
    require_upper_half(tau)?;
    let p = cfg.working_prec();
    let two_pi = Float::with_val(p, Constant::Pi) * 2u32;
    let tau = tau.round_to(p);
    // 2 pi i tau = -2 pi Im(tau) + 2 pi Re(tau) i
    let z = BigComplex::new(
        Float::with_val(p, tau.im() * &two_pi) * -1,
        Float::with_val(p, tau.re() * &two_pi),
    );
    Ok(z.exp())
}

/// e^{2 pi i x tau} for exact rational x.
///
/// Fractional powers of q are always produced here, never as complex powers
/// of an already-computed q, so there is no branch-cut dependence.
pub fn fractional_q_power(tau: &BigComplex, x: &Rational, cfg: &EvalConfig) -> Result<BigComplex> {
    require_upper_half(tau)?;
    let p = cfg.working_prec();
    let xf = Float::with_val(p, x);
    let two_pi = Float::with_val(p, Constant::Pi) * 2u32;
    let scale = two_pi * xf;
    let tau = tau.round_to(p);
    let z = BigComplex::new(
        Float::with_val(p, tau.im() * &scale) * -1,
        Float::with_val(p, tau.re() * &scale),
    );
    Ok(z.exp())
}

/// Smallest n with |q|^n / (1 - |q|) < 2^{-(precision + guard)}.
///
/// Truncating any of the q-products in this crate after n factors then leaves
/// a relative tail below 2^{-precision}.
pub fn series_truncation_length(q_abs: &Float, cfg: &EvalConfig) -> Result<usize> {
    truncation_with_weight(q_abs, cfg, 0)
}

/// Like [`series_truncation_length`] but for series whose terms carry an
/// additional polynomial factor n^degree (divisor sums in Eisenstein series).
pub fn truncation_with_weight(q_abs: &Float, cfg: &EvalConfig, degree: u32) -> Result<usize> {
    let p = cfg.working_prec();
    if !(q_abs.is_finite() && q_abs.is_sign_positive()) || q_abs.clone() >= 1u32 {
        return Err(Error::DegenerateNome);
    }
    if q_abs.is_zero() {
        return Ok(1);
    }
    let ln_q = q_abs.clone().ln(); // negative
    let one_minus = Float::with_val(p, 1u32) - q_abs;
    let ln2 = Float::with_val(p, 2u32).ln();
    // admissible n: n ln|q| + degree ln n < -(P+G) ln 2 + ln(1-|q|)
    let bound = Float::with_val(p, -(cfg.working_prec() as i64)) * &ln2 + one_minus.ln();
    let admissible = |n: usize| {
        let nf = Float::with_val(p, n as u64);
        let lhs = if degree > 0 {
            nf.clone().ln() * degree + nf * &ln_q
        } else {
            nf * &ln_q
        };
        lhs < bound
    };
    // log-based first estimate, then walk to the exact boundary
    let mut n = {
        let est = (bound.clone() / &ln_q).to_f64().ceil();
        if est.is_finite() && est >= 1.0 {
            est as usize
        } else {
            1usize
        }
    };
    while !admissible(n) {
        n = n.saturating_mul(2).max(n + 1);
    }
    while n > 1 && admissible(n - 1) {
        n -= 1;
    }
    if let Some(cap) = cfg.max_terms() {
        n = n.min(cap.max(1));
    }
    Ok(n)
}
