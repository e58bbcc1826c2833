//! Class-field invariants at CM points for the modulus N O_K.
//!
//! Ray classes are represented by W_{N,K} matrices throughout: the identity
//! class evaluates g and f at the vector (0, 1/N), a general class at the
//! transpose image of that vector. The small-exponent quotient invariant,
//! the discriminant evidence d_N(tau_K) and the magnitude bounds of the
//! extremal Siegel values round out the section.

use rug::Float;

use crate::cm::{class_number, QuadField};
use crate::error::Result;
use crate::fricke_family::{
    canonicalize, enumerate_vn_classes, transpose_action, CanonicalVector, GLMatrix,
};
use crate::modular::{fricke, siegel, IndexVector};
use crate::numerics::{BigComplex, EvalConfig};
use crate::unity::UnityRoot;

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Which invariant a report carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InvariantKind {
    Fricke,
    Siegel12N,
    Quotient,
}

/// Truth of the three standing assumptions of the small-exponent section:
/// N >= 4 even, d_K = 0 mod 4, |d_K| >= 4 N^{4/3}.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Hypotheses {
    pub n_even_ge_4: bool,
    pub disc_zero_mod_4: bool,
    pub disc_large_enough: bool,
}

impl Hypotheses {
    pub fn evaluate(field: &QuadField, n: i64) -> Self {
        let d = field.discriminant();
        Hypotheses {
            n_even_ge_4: n >= 4 && n % 2 == 0,
            disc_zero_mod_4: d.rem_euclid(4) == 0,
            // |d|^3 >= 64 N^4 is the exact integer form of |d| >= 4 N^{4/3}
            disc_large_enough: d.unsigned_abs().pow(3) >= 64 * (n.unsigned_abs().pow(4)),
        }
    }

    pub fn all(&self) -> bool {
        self.n_even_ge_4 && self.disc_zero_mod_4 && self.disc_large_enough
    }
}

/// Evaluated invariant with its provenance.
#[derive(Debug, Clone)]
pub struct InvariantReport {
    pub value: BigComplex,
    pub kind: InvariantKind,
    pub field: QuadField,
    pub level: i64,
    pub class_matrix: GLMatrix,
    pub hypotheses: Hypotheses,
}

fn base_vector(n: i64) -> IndexVector {
    IndexVector::new(0, 1, n).expect("(0, 1/N) is nonzero")
}

/// Vector carrying the class alpha: transpose(alpha) (0, 1/N).
pub fn class_vector(alpha: &GLMatrix, n: i64) -> Result<CanonicalVector> {
    transpose_action(alpha, &base_vector(n))
}

/// Siegel-Ramachandra invariant g_n^{12N}(C) for the class of alpha:
/// g_{t(alpha)(0,1/N)}(tau_K)^{12N}. For alpha = I this is g_n^{12N}(C_0).
pub fn siegel_ramachandra(
    field: &QuadField,
    n: i64,
    alpha: &GLMatrix,
    cfg: &EvalConfig,
) -> Result<BigComplex> {
    let v = class_vector(alpha, n)?;
    let tau = field.tau(cfg);
    Ok(siegel(v.vector(), &tau, cfg)?.powi(12 * n))
}

/// Fricke invariant f_n(C) for the class of alpha.
pub fn fricke_invariant(
    field: &QuadField,
    n: i64,
    alpha: &GLMatrix,
    cfg: &EvalConfig,
) -> Result<BigComplex> {
    let v = class_vector(alpha, n)?;
    let tau = field.tau(cfg);
    fricke(v.vector(), &tau, cfg)
}

/// The small-exponent invariant
/// zeta_{2N}^{-4/gcd(4,N)} (g_{(1/2, 1/2+1/N)}(tau_K) / g_{(0,1/N)}(tau_K))^{8/gcd(4,N)}.
///
/// Hypothesis flags are evaluated but the value is computed regardless, so
/// exploratory runs outside the theorem's range stay possible.
pub fn quotient_invariant(field: &QuadField, n: i64, cfg: &EvalConfig) -> Result<InvariantReport> {
    assert!(n >= 2);
    let tau = field.tau(cfg);
    let g4 = gcd(4, n);
    let exponent = 8 / g4;
    let zeta = UnityRoot::new(2 * n, -(4 / g4));
    // (1/2, 1/2 + 1/N) at level 2N covers odd N as well
    let num_v = IndexVector::new(n, n + 2, 2 * n)?;
    let den_v = base_vector(n);
    let num = siegel(&num_v, &tau, cfg)?;
    let den = siegel(&den_v, &tau, cfg)?;
    let value = zeta
        .eval(cfg.working_prec())
        .mul(&num.div(&den).powi(exponent));
    Ok(InvariantReport {
        value,
        kind: InvariantKind::Quotient,
        field: *field,
        level: n,
        class_matrix: GLMatrix::identity(n),
        hypotheses: Hypotheses::evaluate(field, n),
    })
}

/// d_N(tau_K): the product over unordered pairs of classes of
/// (g_v^{12N} - g_w^{12N})^2 at tau_K. Nonvanishing is the hypothesis under
/// which the Siegel-Ramachandra invariant generates the ray class field.
pub fn eval_dn(field: &QuadField, n: i64, cfg: &EvalConfig) -> Result<BigComplex> {
    let tau = field.tau(cfg);
    let classes = enumerate_vn_classes(n);
    let values: Vec<BigComplex> = classes
        .iter()
        .map(|v| Ok(siegel(v.vector(), &tau, cfg)?.powi(12 * n)))
        .collect::<Result<_>>()?;
    let mut acc = BigComplex::one(cfg.working_prec());
    for i in 0..values.len() {
        for j in (i + 1)..values.len() {
            acc = acc.mul(&values[i].sub(&values[j]).square());
        }
    }
    Ok(acc)
}

/// Per-class magnitude data for the extremal-value bounds.
#[derive(Debug, Clone)]
pub struct BoundsReport {
    pub hypotheses: Hypotheses,
    /// (class, |g_v(tau_K)|), in class enumeration order.
    pub magnitudes: Vec<(CanonicalVector, Float)>,
    pub minimizer: CanonicalVector,
    pub maximizer: CanonicalVector,
    /// min over v != (0,1/N) of |g_v| - |g_{(0,1/N)}| (strict bound margin).
    pub lower_margin: Float,
    /// min over v != (1/2,1/2+1/N) of |g_max| - |g_v|.
    pub upper_margin: Float,
    pub lower_bound_holds: bool,
    pub upper_bound_holds: bool,
}

/// Exhaustively verify over V_N/~ that (0, 1/N) minimizes and
/// (1/2, 1/2 + 1/N) maximizes |g_v(tau_K)|.
///
/// Hypothesis violations are reported, not fatal.
pub fn check_magnitude_bounds(field: &QuadField, n: i64, cfg: &EvalConfig) -> Result<BoundsReport> {
    let tau = field.tau(cfg);
    let classes = enumerate_vn_classes(n);
    let mut magnitudes = Vec::with_capacity(classes.len());
    for v in &classes {
        let g = siegel(v.vector(), &tau, cfg)?;
        magnitudes.push((*v, g.abs()));
    }
    let min_class = canonicalize(&base_vector(n));
    let max_class = canonicalize(&IndexVector::new(n / 2, n / 2 + 1, n).unwrap_or(base_vector(n)));
    let min_mag = magnitudes
        .iter()
        .find(|(v, _)| *v == min_class)
        .expect("(0,1/N) is a class")
        .1
        .clone();
    let max_mag = magnitudes
        .iter()
        .find(|(v, _)| *v == max_class)
        .expect("(1/2,1/2+1/N) is a class")
        .1
        .clone();

    let p = cfg.working_prec();
    let mut lower_margin = Float::with_val(p, f64::INFINITY);
    let mut upper_margin = Float::with_val(p, f64::INFINITY);
    let mut minimizer = min_class;
    let mut maximizer = max_class;
    let mut best_min = min_mag.clone();
    let mut best_max = max_mag.clone();
    for (v, m) in &magnitudes {
        if *v != min_class {
            let margin = Float::with_val(p, m - &min_mag);
            if margin < lower_margin {
                lower_margin = margin;
            }
        }
        if *v != max_class {
            let margin = Float::with_val(p, &max_mag - m);
            if margin < upper_margin {
                upper_margin = margin;
            }
        }
        if *m < best_min {
            best_min = m.clone();
            minimizer = *v;
        }
        if *m > best_max {
            best_max = m.clone();
            maximizer = *v;
        }
    }
    Ok(BoundsReport {
        hypotheses: Hypotheses::evaluate(field, n),
        magnitudes,
        minimizer,
        maximizer,
        lower_bound_holds: lower_margin.is_sign_positive() && !lower_margin.is_zero(),
        upper_bound_holds: upper_margin.is_sign_positive() || upper_margin.is_zero(),
        lower_margin,
        upper_margin,
    })
}

/// The class-number criterion h_K > N l_N (l_N - 1)/2.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CorollaryBound {
    pub class_number: usize,
    pub ell_n: usize,
    pub bound: i64,
    pub satisfied: bool,
}

pub fn corollary_bound(field: &QuadField, n: i64) -> Result<CorollaryBound> {
    let h = class_number(field.discriminant())?;
    let ell = enumerate_vn_classes(n).len();
    let bound = n * (ell as i64) * (ell as i64 - 1) / 2;
    Ok(CorollaryBound { class_number: h, ell_n: ell, bound, satisfied: (h as i64) > bound })
}
