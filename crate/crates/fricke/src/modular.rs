//! Modular functions and forms via q-expansions.
//!
//! Provides the Dedekind eta function, Siegel functions g_v by their
//! q-product, the Eisenstein forms g2, g3, the discriminant Delta, the
//! j-function, the Weierstrass wp at torsion points (q-expansion plus a
//! direct lattice-sum oracle) and the Fricke function f_v.
//!
//! Normalizations are tied together by Delta = g2^3 - 27 g3^2 = eta^24,
//! where eta carries the constant sqrt(2 pi) zeta_8; tests assert this
//! rather than assuming it.

use rug::float::Constant;
use rug::{Float, Rational};

use crate::error::{Error, Result};
use crate::numerics::{
    fractional_q_power, nome, series_truncation_length, truncation_with_weight, BigComplex,
    EvalConfig,
};

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// A torsion index v = (a/N, b/N), reduced mod Z^2 so that 0 <= a, b < N and
/// gcd(a, b, N) = 1. N is then the primitive denominator of v.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IndexVector {
    a: i64,
    b: i64,
    n: i64,
}

impl IndexVector {
    /// Build (a/n, b/n), reducing mod Z^2 and cancelling common factors.
    /// Vectors congruent to 0 mod Z^2 are rejected.
    pub fn new(a: i64, b: i64, n: i64) -> Result<Self> {
        if n <= 0 {
            return Err(Error::ZeroVector);
        }
        let a = a.rem_euclid(n);
        let b = b.rem_euclid(n);
        let g = gcd(gcd(a, b), n);
        let (a, b, n) = (a / g, b / g, n / g);
        if n == 1 {
            return Err(Error::ZeroVector);
        }
        Ok(IndexVector { a, b, n })
    }

    pub fn from_rationals(v1: &Rational, v2: &Rational) -> Result<Self> {
        let n = v1.denom().clone().lcm(v2.denom());
        let n_i: i64 = n.to_i64().ok_or(Error::ZeroVector)?;
        let a = (v1.numer().clone() * (&n / v1.denom().clone())).to_i64().ok_or(Error::ZeroVector)?;
        let b = (v2.numer().clone() * (&n / v2.denom().clone())).to_i64().ok_or(Error::ZeroVector)?;
        IndexVector::new(a, b, n_i)
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    pub fn b(&self) -> i64 {
        self.b
    }

    /// The primitive denominator N.
    pub fn denominator(&self) -> i64 {
        self.n
    }

    pub fn v1(&self) -> Rational {
        Rational::from((self.a, self.n))
    }

    pub fn v2(&self) -> Rational {
        Rational::from((self.b, self.n))
    }

    pub fn neg(&self) -> IndexVector {
        IndexVector::new(-self.a, -self.b, self.n).expect("negation preserves nonzero")
    }
}

impl std::fmt::Display for IndexVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}/{}, {}/{})", self.a, self.n, self.b, self.n)
    }
}

/// Second Bernoulli polynomial B2(x) = x^2 - x + 1/6, exactly.
pub fn bernoulli2(x: &Rational) -> Rational {
    x.clone().square() - x + Rational::from((1, 6))
}

/// Fractional part <x> with 0 <= <x> < 1 and x - <x> integral.
pub fn fractional_part(x: &Rational) -> Rational {
    let floor = x.clone().floor();
    x.clone() - floor
}

/// e^{2 pi i r} for exact rational r.
fn root_of_unity(r: &Rational, prec: u32) -> BigComplex {
    let two_pi = Float::with_val(prec, Constant::Pi) * 2u32;
    let theta = two_pi * Float::with_val(prec, r);
    BigComplex::cis(&theta)
}

/// Dedekind eta, including the constant sqrt(2 pi) zeta_8:
/// eta(tau) = sqrt(2 pi) zeta_8 q^{1/24} prod_{n>=1} (1 - q^n).
pub fn dedekind_eta(tau: &BigComplex, cfg: &EvalConfig) -> Result<BigComplex> {
    let p = cfg.working_prec();
    let q = nome(tau, cfg)?;
    let terms = series_truncation_length(&q.abs(), cfg)?;
    let mut prod = fractional_q_power(tau, &Rational::from((1, 24)), cfg)?;
    let one = BigComplex::one(p);
    let mut qn = one.clone();
    for _ in 0..terms {
        qn = qn.mul(&q);
        prod = prod.mul(&one.sub(&qn));
    }
    let sqrt_two_pi = (Float::with_val(p, Constant::Pi) * 2u32).sqrt();
    let zeta8 = root_of_unity(&Rational::from((1, 8)), p);
    Ok(prod.scale(&sqrt_two_pi).mul(&zeta8))
}

/// Siegel function g_v by its q-product:
///
/// g_v = -e^{pi i v2 (v1 - 1)} q^{B2(v1)/2} (1 - q^{v1} e^{2 pi i v2})
///       prod_{n>=1} (1 - q^{n+v1} e^{2 pi i v2}) (1 - q^{n-v1} e^{-2 pi i v2}),
///
/// with the representative 0 <= v1 < 1 enforced by `IndexVector`.
pub fn siegel(v: &IndexVector, tau: &BigComplex, cfg: &EvalConfig) -> Result<BigComplex> {
    let p = cfg.working_prec();
    let q = nome(tau, cfg)?;
    let terms = series_truncation_length(&q.abs(), cfg)?;
    let v1 = v.v1();
    let v2 = v.v2();

    // -e^{pi i v2 (v1-1)} as an exact angle
    let angle = Rational::from((v.b() * (v.a() - v.denominator()), 2 * v.denominator() * v.denominator()));
    let prefactor = root_of_unity(&angle, p).neg();

    let lead = fractional_q_power(tau, &(bernoulli2(&v1) / 2u32), cfg)?;
    let z = root_of_unity(&v2, p);
    let qv1 = fractional_q_power(tau, &v1, cfg)?;
    let w = qv1.mul(&z);
    let w_inv = w.recip();

    let one = BigComplex::one(p);
    let mut total = prefactor.mul(&lead).mul(&one.sub(&w));
    let mut qn = one.clone();
    for _ in 0..terms {
        qn = qn.mul(&q);
        let f1 = one.sub(&qn.mul(&w));
        let f2 = one.sub(&qn.mul(&w_inv));
        total = total.mul(&f1).mul(&f2);
    }
    Ok(total)
}

/// q-order of g_v: (1/2) B2(<v1>), exactly.
pub fn siegel_q_order(v: &IndexVector) -> Rational {
    bernoulli2(&fractional_part(&v.v1())) / 2u32
}

fn divisor_power_sums(k: u32, up_to: usize) -> Vec<u128> {
    // sums[n] = sigma_k(n); sieve over divisors
    let mut sums = vec![0u128; up_to + 1];
    for d in 1..=up_to {
        let dk = (d as u128).pow(k);
        let mut m = d;
        while m <= up_to {
            sums[m] += dk;
            m += d;
        }
    }
    sums
}

fn eisenstein_e(weight: u32, tau: &BigComplex, cfg: &EvalConfig) -> Result<BigComplex> {
    let p = cfg.working_prec();
    let q = nome(tau, cfg)?;
    let k = weight - 1; // divisor power
    let terms = truncation_with_weight(&q.abs(), cfg, weight + 1)?;
    let sums = divisor_power_sums(k, terms);
    let factor: i64 = match weight {
        4 => 240,
        6 => -504,
        _ => unreachable!("only weights 4 and 6 are used"),
    };
    let mut acc = BigComplex::one(p);
    let mut qn = BigComplex::one(p);
    for n in 1..=terms {
        qn = qn.mul(&q);
        let c = Float::with_val(p, sums[n]) * factor;
        acc = acc.add(&qn.scale(&c));
    }
    Ok(acc)
}

/// g2 = (4 pi^4 / 3) E4.
pub fn eisenstein_g2(tau: &BigComplex, cfg: &EvalConfig) -> Result<BigComplex> {
    let p = cfg.working_prec();
    let e4 = eisenstein_e(4, tau, cfg)?;
    let pi = Float::with_val(p, Constant::Pi);
    let c = pi.clone().square().square() * 4u32 / 3u32;
    Ok(e4.scale(&c))
}

/// g3 = (8 pi^6 / 27) E6.
pub fn eisenstein_g3(tau: &BigComplex, cfg: &EvalConfig) -> Result<BigComplex> {
    let p = cfg.working_prec();
    let e6 = eisenstein_e(6, tau, cfg)?;
    let pi = Float::with_val(p, Constant::Pi);
    let c = pi.clone().square().square() * pi.clone().square() * 8u32 / 27u32;
    Ok(e6.scale(&c))
}

/// Delta = g2^3 - 27 g3^2.
pub fn delta(tau: &BigComplex, cfg: &EvalConfig) -> Result<BigComplex> {
    let g2 = eisenstein_g2(tau, cfg)?;
    let g3 = eisenstein_g3(tau, cfg)?;
    Ok(g2.powi(3).sub(&g3.square().scale_i64(27)))
}

/// j = 1728 g2^3 / Delta, with expansion 1/q + 744 + 196884 q + ...
pub fn j_invariant(tau: &BigComplex, cfg: &EvalConfig) -> Result<BigComplex> {
    let g2 = eisenstein_g2(tau, cfg)?;
    let g3 = eisenstein_g3(tau, cfg)?;
    let g2c = g2.powi(3);
    let d = g2c.sub(&g3.square().scale_i64(27));
    Ok(g2c.scale_i64(1728).div(&d))
}

/// Weierstrass wp_v(tau) = wp(v1 tau + v2; [tau, 1]) by the q-expansion
///
/// wp/(2 pi i)^2 = 1/12 + u/(1-u)^2
///   + sum_{n>=1} [ q^n u/(1-q^n u)^2 + q^n u^{-1}/(1-q^n u^{-1})^2 - 2 q^n/(1-q^n)^2 ]
///
/// with u = q^{v1} e^{2 pi i v2}.
pub fn wp(v: &IndexVector, tau: &BigComplex, cfg: &EvalConfig) -> Result<BigComplex> {
    let p = cfg.working_prec();
    let q = nome(tau, cfg)?;
    let terms = series_truncation_length(&q.abs(), cfg)?;
    let u = fractional_q_power(tau, &v.v1(), cfg)?.mul(&root_of_unity(&v.v2(), p));
    let one = BigComplex::one(p);

    let mut acc = BigComplex::from_rationals(p, &Rational::from((1, 12)), &Rational::new());
    let omu = one.sub(&u);
    acc = acc.add(&u.div(&omu.square()));
    let u_inv = u.recip();
    let mut qn = one.clone();
    for _ in 0..terms {
        qn = qn.mul(&q);
        let a = qn.mul(&u);
        let b = qn.mul(&u_inv);
        let t1 = a.div(&one.sub(&a).square());
        let t2 = b.div(&one.sub(&b).square());
        let t3 = qn.div(&one.sub(&qn).square()).scale_i64(2);
        acc = acc.add(&t1).add(&t2).sub(&t3);
    }
    // (2 pi i)^2 = -4 pi^2
    let c = Float::with_val(p, Constant::Pi).square() * -4i32;
    Ok(acc.scale(&c))
}

/// Direct lattice sum 1/z^2 + sum_{0 < max(|m|,|n|) <= R} (1/(z-w)^2 - 1/w^2)
/// over w = m tau + n, summed over expanding square annuli.
///
/// The symmetric annulus order makes the error decay like 1/R^2; the
/// q-expansion is the production path and this sum is its independent check.
pub fn wp_lattice_oracle(
    v: &IndexVector,
    tau: &BigComplex,
    radius: usize,
    cfg: &EvalConfig,
) -> Result<BigComplex> {
    if !(tau.im().is_sign_positive() && !tau.im().is_zero()) {
        return Err(Error::NotInUpperHalfPlane);
    }
    let p = cfg.working_prec();
    let tau = tau.round_to(p);
    let z = tau
        .scale(&Float::with_val(p, v.v1()))
        .add(&BigComplex::from_rationals(p, &v.v2(), &Rational::new()));
    let mut acc = z.square().recip();
    let term = |m: i64, n: i64, acc: &mut BigComplex| {
        let w = tau
            .scale(&Float::with_val(p, m))
            .add(&BigComplex::from_f64(p, n as f64, 0.0));
        let t = z.sub(&w).square().recip().sub(&w.square().recip());
        *acc = acc.add(&t);
    };
    for r in 1..=(radius as i64) {
        for n in -r..=r {
            term(r, n, &mut acc);
            term(-r, n, &mut acc);
        }
        for m in (-r + 1)..=(r - 1) {
            term(m, r, &mut acc);
            term(m, -r, &mut acc);
        }
    }
    Ok(acc)
}

/// Fricke function (first Weber function):
/// f_v = -2^7 3^5 (g2 g3 / Delta) wp_v.
pub fn fricke(v: &IndexVector, tau: &BigComplex, cfg: &EvalConfig) -> Result<BigComplex> {
    let g2 = eisenstein_g2(tau, cfg)?;
    let g3 = eisenstein_g3(tau, cfg)?;
    let d = g2.powi(3).sub(&g3.square().scale_i64(27));
    let wp_val = wp(v, tau, cfg)?;
    Ok(g2.mul(&g3).div(&d).mul(&wp_val).scale_i64(-(1 << 7) * 243))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rug::ops::Pow;

    fn cfg() -> EvalConfig {
        EvalConfig::default()
    }

    fn tau_i(p: u32) -> BigComplex {
        BigComplex::from_f64(p, 0.0, 1.0)
    }

    fn tau_sqrt(d: u64, p: u32) -> BigComplex {
        BigComplex::new(Float::new(p), Float::with_val(p, d).sqrt())
    }

    fn rel_err(a: &BigComplex, b: &BigComplex) -> Float {
        a.sub(b).abs() / b.abs()
    }

    fn two_pow(e: i64) -> Float {
        Float::with_val(64, 2f64).pow(&Float::with_val(64, e))
    }

    #[test]
    fn index_vector_reduction() {
        let v = IndexVector::new(6, 9, 12).unwrap();
        assert_eq!((v.a(), v.b(), v.denominator()), (2, 3, 4));
        let v = IndexVector::new(-1, 5, 4).unwrap();
        assert_eq!((v.a(), v.b(), v.denominator()), (3, 1, 4));
        assert_eq!(IndexVector::new(0, 4, 4).unwrap_err(), Error::ZeroVector);
        assert_eq!(IndexVector::new(0, 0, 1).unwrap_err(), Error::ZeroVector);
    }

    #[test]
    fn bernoulli_and_fractional_part() {
        assert_eq!(bernoulli2(&Rational::from(0)), Rational::from((1, 6)));
        assert_eq!(bernoulli2(&Rational::from((1, 2))), Rational::from((-1, 12)));
        assert_eq!(bernoulli2(&Rational::from((1, 4))), Rational::from((-1, 48)));
        assert_eq!(fractional_part(&Rational::from((7, 4))), Rational::from((3, 4)));
        assert_eq!(fractional_part(&Rational::from((-1, 4))), Rational::from((3, 4)));
        assert_eq!(fractional_part(&Rational::from(2)), Rational::from(0));
    }

    #[test]
    fn q_orders() {
        let n = 8;
        let v = IndexVector::new(0, 1, n).unwrap();
        assert_eq!(siegel_q_order(&v), Rational::from((1, 12)));
        let v = IndexVector::new(4, 5, 8).unwrap();
        assert_eq!(siegel_q_order(&v), Rational::from((-1, 24)));
        let v = IndexVector::new(3, 1, 4).unwrap();
        assert_eq!(siegel_q_order(&v), Rational::from((-1, 96)));
    }

    #[test]
    fn delta_equals_eta_24() {
        let cfg = cfg();
        let p = cfg.working_prec();
        for tau in [
            tau_sqrt(10, p),
            BigComplex::from_f64(p, 0.5, 1.0),
            BigComplex::from_f64(p, -0.3, 0.8),
        ] {
            let d = delta(&tau, &cfg).unwrap();
            let eta24 = dedekind_eta(&tau, &cfg).unwrap().powi(24);
            assert!(rel_err(&d, &eta24) < two_pow(-((cfg.precision_bits() as i64) - 16)));
        }
    }

    #[test]
    fn delta_is_weight_12_modular() {
        let cfg = cfg();
        let p = cfg.working_prec();
        let tau = BigComplex::from_f64(p, 1.0 / 3.0, 1.0);
        let minus_inv = tau.recip().neg();
        let lhs = delta(&minus_inv, &cfg).unwrap();
        let rhs = delta(&tau, &cfg).unwrap().mul(&tau.powi(12));
        assert!(rel_err(&lhs, &rhs) < two_pow(-((cfg.precision_bits() as i64) - 16)));
    }

    #[test]
    fn eta_leading_behaviour() {
        // |eta(iy)| -> sqrt(2 pi) e^{-2 pi y / 24} for large y
        let cfg = cfg();
        let p = cfg.working_prec();
        let y = 40.0;
        let eta = dedekind_eta(&BigComplex::from_f64(p, 0.0, y), &cfg).unwrap();
        let pi = Float::with_val(p, Constant::Pi);
        let expect = (pi.clone() * 2u32).sqrt() * (pi * Float::with_val(p, -2.0 * y / 24.0)).exp();
        let rel = Float::with_val(p, eta.abs() - &expect).abs() / expect;
        assert!(rel < 1e-80);
    }

    #[test]
    fn siegel_at_i_is_imaginary_with_abs_2_pow_quarter() {
        // g_(0,1/2)(i) = i * 2^{1/4}: the product part is real by conjugate
        // symmetry on the imaginary axis, the prefactor is exactly i.
        let cfg = cfg();
        let v = IndexVector::new(0, 1, 2).unwrap();
        let g = siegel(&v, &tau_i(cfg.working_prec()), &cfg).unwrap();
        assert!(g.re().clone().abs() < 1e-50);
        let expect = Float::with_val(cfg.working_prec(), 2u32)
            .pow(&Float::with_val(64, 0.25f64));
        assert!(Float::with_val(cfg.working_prec(), g.im() - &expect).abs() < 1e-50);
    }

    #[test]
    fn siegel_twelve_n_depends_only_on_sign_class() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let cfg = EvalConfig::with_precision(128);
        let p = cfg.working_prec();
        for _ in 0..20 {
            let n = rng.gen_range(2..=9i64);
            let (a, b) = loop {
                let a = rng.gen_range(0..n);
                let b = rng.gen_range(0..n);
                if IndexVector::new(a, b, n).is_ok() {
                    break (a, b);
                }
            };
            let v = IndexVector::new(a, b, n).unwrap();
            let tau = BigComplex::from_f64(p, rng.gen_range(-0.5..0.5), rng.gen_range(0.7..1.5));
            let e = 12 * v.denominator();
            let g = siegel(&v, &tau, &cfg).unwrap().powi(e);
            let gm = siegel(&v.neg(), &tau, &cfg).unwrap().powi(e);
            assert!(rel_err(&g, &gm) < two_pow(-((cfg.precision_bits() as i64) - 24)));
        }
    }

    #[test]
    fn siegel_q_order_law_along_imaginary_axis() {
        let cfg = EvalConfig::with_precision(128);
        let p = cfg.working_prec();
        let y = 200.0;
        let v = IndexVector::new(1, 0, 4).unwrap();
        let g = siegel(&v, &BigComplex::from_f64(p, 0.0, y), &cfg).unwrap();
        let two_pi_y = Float::with_val(p, Constant::Pi) * 2u32 * Float::with_val(p, y);
        let ratio = g.abs().ln() / (-two_pi_y);
        let expect = Float::with_val(p, &siegel_q_order(&v));
        assert_eq!(siegel_q_order(&v), Rational::from((-1, 96)));
        assert!((ratio - expect).abs() < 1e-6);
    }

    #[test]
    fn j_special_values() {
        let cfg = cfg();
        let p = cfg.working_prec();
        let tol = two_pow(-((cfg.precision_bits() as i64) - 16));
        // j(i) = 1728
        let j1 = j_invariant(&tau_i(p), &cfg).unwrap();
        assert!(j1.sub(&BigComplex::from_f64(p, 1728.0, 0.0)).abs() < tol.clone() * 1728u32);
        // j(2i) = 287496 = 66^3
        let j2 = j_invariant(&BigComplex::from_f64(p, 0.0, 2.0), &cfg).unwrap();
        assert!(j2.sub(&BigComplex::from_f64(p, 287496.0, 0.0)).abs() < tol.clone() * 287496u32);
        // j((1 + i sqrt 7)/2) = -3375
        let t7 = BigComplex::new(Float::with_val(p, 0.5f64), Float::with_val(p, 7u32).sqrt() / 2u32);
        let j3 = j_invariant(&t7, &cfg).unwrap();
        assert!(j3.sub(&BigComplex::from_f64(p, -3375.0, 0.0)).abs() < tol.clone() * 3375u32);
        // periodicity
        let tau = BigComplex::from_f64(p, 0.37, 1.21);
        let jt = j_invariant(&tau, &cfg).unwrap();
        let jt1 = j_invariant(&tau.add(&BigComplex::one(p)), &cfg).unwrap();
        assert!(rel_err(&jt, &jt1) < tol);
    }

    #[test]
    fn wp_even_in_v() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(23);
        let cfg = EvalConfig::with_precision(128);
        let p = cfg.working_prec();
        for _ in 0..20 {
            let n = rng.gen_range(2..=9i64);
            let v = loop {
                let a = rng.gen_range(0..n);
                let b = rng.gen_range(0..n);
                if let Ok(v) = IndexVector::new(a, b, n) {
                    break v;
                }
            };
            let tau = BigComplex::from_f64(p, rng.gen_range(-0.5..0.5), rng.gen_range(0.7..1.5));
            let a = wp(&v, &tau, &cfg).unwrap();
            let b = wp(&v.neg(), &tau, &cfg).unwrap();
            assert!(rel_err(&a, &b) < two_pow(-100));
        }
    }

    #[test]
    fn wp_half_period_at_i() {
        // wp(1/2; Z[i]) is real; frozen high-precision value
        let cfg = cfg();
        let v = IndexVector::new(0, 1, 2).unwrap();
        let w = wp(&v, &tau_i(cfg.working_prec()), &cfg).unwrap();
        assert!(w.im().clone().abs() < 1e-50);
        let lit = Float::with_val(
            256,
            Float::parse("6.875185818020372827490095779810557197901").unwrap(),
        );
        assert!(Float::with_val(256, w.re() - &lit).abs() < 1e-36);
    }

    #[test]
    fn wp_matches_lattice_oracle_monotonically() {
        let cfg = EvalConfig::with_precision(128);
        let v = IndexVector::new(0, 1, 2).unwrap();
        let tau = tau_i(cfg.working_prec());
        let exact = wp(&v, &tau, &cfg).unwrap();
        let mut last: Option<Float> = None;
        for r in [50usize, 100, 200] {
            let approx = wp_lattice_oracle(&v, &tau, r, &cfg).unwrap();
            let err = approx.sub(&exact).abs();
            if let Some(prev) = last {
                assert!(err < prev, "lattice sum error must shrink with R");
            }
            last = Some(err);
        }
        // oracle is exactly even in v
        let o1 = wp_lattice_oracle(&v, &tau, 30, &cfg).unwrap();
        let o2 = wp_lattice_oracle(&v.neg(), &tau, 30, &cfg).unwrap();
        assert!(o1.sub(&o2).abs() < 1e-25);
        assert!(o1.im().clone().abs() < 1e-25, "wp_(0,1/2)(i) is real");
    }

    #[test]
    fn fricke_is_even_and_periodic() {
        let cfg = EvalConfig::with_precision(128);
        let p = cfg.working_prec();
        let tau = BigComplex::from_f64(p, 0.21, 1.03);
        let v = IndexVector::new(1, 2, 5).unwrap();
        let a = fricke(&v, &tau, &cfg).unwrap();
        let b = fricke(&v.neg(), &tau, &cfg).unwrap();
        assert!(rel_err(&a, &b) < two_pow(-100));
        // v + (1,0) and v + (0,1) reduce to the same IndexVector by construction
        let shifted = IndexVector::new(v.a() + v.denominator(), v.b(), v.denominator()).unwrap();
        assert_eq!(v, shifted);
    }

    #[test]
    fn g2_g3_nonzero_at_cm_point() {
        let cfg = cfg();
        let tau = tau_sqrt(10, cfg.working_prec());
        assert!(eisenstein_g2(&tau, &cfg).unwrap().abs() > 1u32);
        assert!(eisenstein_g3(&tau, &cfg).unwrap().abs() > 1u32);
    }

    proptest::proptest! {
        #[test]
        fn index_vector_canonical_range(a in -50i64..50, b in -50i64..50, n in 2i64..12) {
            if let Ok(v) = IndexVector::new(a, b, n) {
                proptest::prop_assert!(v.a() >= 0 && v.a() < v.denominator());
                proptest::prop_assert!(v.b() >= 0 && v.b() < v.denominator());
                let g = gcd(gcd(v.a(), v.b()), v.denominator());
                proptest::prop_assert_eq!(g, 1);
            }
        }
    }
}
