//! Reciprocity action on modular-unit expressions and Galois orbits.
//!
//! A [`ModularUnitExpr`] is a formal product zeta * prod g_{v_i}^{m_i} at a
//! level N. The group GL2(Z/N)/{+-I} acts on these the way it acts on the
//! corresponding functions in F_N:
//!
//! * an SL2 class acts by composition with a lift to SL2(Z); the lift moves
//!   each index vector by the transpose action and contributes exact roots
//!   of unity from the eta-square multiplier and from reducing vectors back
//!   into [0,1)^2 and to canonical +- representatives;
//! * the determinant part [[1,0],[0,d]] acts on Fourier coefficients by
//!   zeta_N -> zeta_N^d, which on the product form sends v = (v1, v2) to
//!   (v1, d v2) and conjugates the constant.
//!
//! Orbits over the Hilbert class field come from W_{N,K}; orbits over K
//! additionally transport the expression to the CM point of each reduced
//! form through an explicit gluing matrix.



use crate::cm::{reduced_forms, QuadField, QuadForm};
use crate::error::{Error, Result};
use crate::fricke_family::{canonicalize, modularity_check, CanonicalVector, GLMatrix};
use crate::modular::{siegel, IndexVector};
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

fn mod_inv(a: i64, n: i64) -> Option<i64> {
    let (mut t, mut new_t) = (0i64, 1i64);
    let (mut r, mut new_r) = (n, a.rem_euclid(n));
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    if r != 1 {
        None
    } else {
        Some(t.rem_euclid(n))
    }
}

/// Prefactor of the Siegel q-product at (a/N, b/N):
/// -e^{pi i v2 (v1 - 1)} = zeta_2 zeta_{2N^2}^{ab - bN}.
fn siegel_prefactor(a: i64, b: i64, n: i64) -> UnityRoot {
    UnityRoot::minus_one().mul(&UnityRoot::new(2 * n * n, a * b - b * n))
}

/// Klein-form translation multiplier: g_{w + t} = eps(t, w) g_w for integer
/// t and w = (alpha/N, beta/N):
/// eps = (-1)^{t1 t2 + t1 + t2} e^{-pi i (t1 beta - t2 alpha)/N}.
fn translation_multiplier(t1: i64, t2: i64, alpha: i64, beta: i64, n: i64) -> UnityRoot {
    let sign = UnityRoot::new(2, t1 * t2 + t1 + t2);
    sign.mul(&UnityRoot::new(2 * n, -(t1 * beta - t2 * alpha)))
}

/// Reduce an exact level-N integer pair into [0, N)^2, returning the
/// multiplier eps with g_{(p/N, r/N)} = eps g_{(p mod N / N, r mod N / N)}.
fn reduce_pair(p: i64, r: i64, n: i64) -> ((i64, i64), UnityRoot) {
    let alpha = p.rem_euclid(n);
    let beta = r.rem_euclid(n);
    let t1 = (p - alpha) / n;
    let t2 = (r - beta) / n;
    ((alpha, beta), translation_multiplier(t1, t2, alpha, beta, n))
}

/// Canonicalize a pair in [0, N)^2 modulo +-, returning eps with
/// g_{(alpha,beta)/N} = eps g_{canonical/N}. Uses g_{-w} = -g_w.
fn canonical_pair(alpha: i64, beta: i64, n: i64) -> ((i64, i64), UnityRoot) {
    let neg = ((-alpha).rem_euclid(n), (-beta).rem_euclid(n));
    if (alpha, beta) <= neg {
        return ((alpha, beta), UnityRoot::one());
    }
    // g_{(alpha,beta)} = -g_{(-alpha,-beta)} = -eps2 g_{neg}
    let ((na, nb), eps2) = reduce_pair(-alpha, -beta, n);
    debug_assert_eq!((na, nb), neg);
    (neg, UnityRoot::minus_one().mul(&eps2))
}

/// Formal product zeta_m^k prod g_{v_i}^{m_i} of level N, factors keyed by
/// canonical vectors. The value of the product is preserved through every
/// re-keying: canonicalization multipliers are folded into the prefactor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModularUnitExpr {
    prefactor: UnityRoot,
    factors: Vec<(CanonicalVector, i64)>,
    level: i64,
}

impl ModularUnitExpr {
    /// Build from raw (vector, exponent) pairs; vectors of denominator
    /// dividing `level` are accepted.
    pub fn new(
        prefactor: UnityRoot,
        factors: impl IntoIterator<Item = (IndexVector, i64)>,
        level: i64,
    ) -> Result<Self> {
        assert!(level >= 2);
        let mut pref = prefactor;
        let mut acc: std::collections::BTreeMap<CanonicalVector, i64> = Default::default();
        for (v, m) in factors {
            if level % v.denominator() != 0 {
                return Err(Error::LevelMismatch { expected: level, found: v.denominator() });
            }
            let s = level / v.denominator();
            let ((ca, cb), eps) = canonical_pair(v.a() * s, v.b() * s, level);
            pref = pref.mul(&eps.pow(m));
            let key = canonicalize(&IndexVector::new(ca, cb, level)?);
            *acc.entry(key).or_insert(0) += m;
        }
        acc.retain(|_, m| *m != 0);
        Ok(ModularUnitExpr {
            prefactor: pref,
            factors: acc.into_iter().collect(),
            level,
        })
    }

    /// The quotient expression
    /// zeta_{2N}^{-4/gcd(4,N)} (g_{(1/2, 1/2 + 1/N)} / g_{(0, 1/N)})^{8/gcd(4,N)}
    /// for even N >= 2.
    pub fn quotient_expr(n: i64) -> Result<Self> {
        if n < 2 || n % 2 != 0 {
            return Err(Error::UnsupportedExpr);
        }
        let g4 = gcd(4, n);
        let e = 8 / g4;
        let pref = UnityRoot::new(2 * n, -(4 / g4));
        ModularUnitExpr::new(
            pref,
            [
                (IndexVector::new(n / 2, n / 2 + 1, n)?, e),
                (IndexVector::new(0, 1, n)?, -e),
            ],
            n,
        )
    }

    /// g_v^e as an expression at the vector's own level.
    pub fn siegel_power(v: &IndexVector, e: i64) -> Result<Self> {
        ModularUnitExpr::new(UnityRoot::one(), [(*v, e)], v.denominator())
    }

    pub fn prefactor(&self) -> &UnityRoot {
        &self.prefactor
    }

    pub fn factors(&self) -> &[(CanonicalVector, i64)] {
        &self.factors
    }

    pub fn level(&self) -> i64 {
        self.level
    }

    pub fn exponent_sum(&self) -> i64 {
        self.factors.iter().map(|(_, m)| m).sum()
    }

    /// The constant C = zeta prod(-e^{pi i v2 (v1-1)})^{m}. For an
    /// expression lying in F_N this is a root of unity of Q(zeta_N).
    fn leading_constant(&self) -> UnityRoot {
        let mut c = self.prefactor;
        for (v, m) in &self.factors {
            let s = self.level / v.vector().denominator();
            let (a, b) = (v.vector().a() * s, v.vector().b() * s);
            c = c.mul(&siegel_prefactor(a, b, self.level).pow(*m));
        }
        c
    }

    /// Whether the expression lies in F_N: the congruence criterion must
    /// pass and the leading constant must be a root of unity of Q(zeta_N).
    pub fn is_modular(&self) -> bool {
        let support: Vec<_> = self.factors.iter().map(|(v, m)| (*v.vector(), *m)).collect();
        if !modularity_check(&support, self.level).passes {
            return false;
        }
        let c = self.leading_constant();
        mu_order(self.level) % c.order() == 0
    }

    /// Numeric value at tau.
    pub fn evaluate(&self, tau: &BigComplex, cfg: &EvalConfig) -> Result<BigComplex> {
        let mut acc = self.prefactor.eval(cfg.working_prec());
        for (v, m) in &self.factors {
            acc = acc.mul(&siegel(v.vector(), tau, cfg)?.powi(*m));
        }
        Ok(acc)
    }
}

impl std::fmt::Display for ModularUnitExpr {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.prefactor)?;
        for (v, m) in &self.factors {
            write!(f, " * g{}^{}", v, m)?;
        }
        Ok(())
    }
}

/// Order of the group of roots of unity of Q(zeta_N).
fn mu_order(n: i64) -> i64 {
    if n % 2 == 0 {
        n
    } else {
        2 * n
    }
}

/// zeta_N -> zeta_N^d on a root of unity of Q(zeta_N).
fn sigma_d(c: &UnityRoot, d: i64, n: i64) -> Result<UnityRoot> {
    let m = mu_order(n);
    if m % c.order() != 0 {
        return Err(Error::UnsupportedExpr);
    }
    let mut dd = d.rem_euclid(m);
    if gcd(dd, m) != 1 {
        dd += n;
    }
    debug_assert_eq!(gcd(dd, m), 1);
    Ok(c.pow(dd))
}

// ---------------------------------------------------------------------------
// SL2(Z) machinery
// ---------------------------------------------------------------------------

type IntMatrix = [i64; 4];

/// Generator word for a matrix in SL2(Z): a sequence of T^k and S whose
/// left-to-right product is the matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Gen {
    T(i64),
    S,
}

fn sl2_word(m: &IntMatrix) -> Vec<Gen> {
    let [mut a, mut b, mut c, mut d] = *m;
    debug_assert_eq!(a * d - b * c, 1);
    let mut word = vec![];
    while c != 0 {
        // balanced quotient keeps entries small
        let k = if c > 0 {
            (2 * a + c).div_euclid(2 * c)
        } else {
            (2 * a - c).div_euclid(2 * c)
        };
        word.push(Gen::T(k));
        a -= k * c;
        b -= k * d;
        word.push(Gen::S);
        // S^{-1} [[a,b],[c,d]] = [[c, d], [-a, -b]]
        (a, b, c, d) = (c, d, -a, -b);
    }
    if a == 1 {
        word.push(Gen::T(b));
    } else {
        // a = d = -1: -I = S^2
        word.push(Gen::S);
        word.push(Gen::S);
        word.push(Gen::T(-b));
    }
    word
}

/// Multiplier of eta^2 under the matrix: eta^2(gamma tau) =
/// eps (c tau + d) eta^2(tau), a 12th root of unity. eps(T) = zeta_12,
/// eps(S) = -i; multiplicative along any generator word.
fn eta_sq_multiplier(m: &IntMatrix) -> UnityRoot {
    let mut e = UnityRoot::one();
    for g in sl2_word(m) {
        match g {
            Gen::T(k) => e = e.mul(&UnityRoot::new(12, k.rem_euclid(12))),
            Gen::S => e = e.mul(&UnityRoot::new(12, 9)),
        }
    }
    e
}

/// Deterministic lift of an SL2(Z/N) class to SL2(Z).
fn lift_sl2(x: i64, y: i64, z: i64, w: i64, n: i64) -> IntMatrix {
    let (x0, y0, mut z0, w0) =
        (x.rem_euclid(n), y.rem_euclid(n), z.rem_euclid(n), w.rem_euclid(n));
    debug_assert_eq!((x0 * w0 - y0 * z0).rem_euclid(n), 1);
    if z0 == 0 {
        z0 = n;
    }
    let mut x1 = x0;
    while gcd(x1, z0) != 1 {
        x1 += n;
    }
    // extended gcd: x1 p + z0 q = 1
    let (mut old_r, mut r) = (x1, z0);
    let (mut old_s, mut s) = (1i64, 0i64);
    let (mut old_t, mut t) = (0i64, 1i64);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
        (old_t, t) = (t, old_t - q * t);
    }
    debug_assert_eq!(old_r, 1);
    let (p, q) = (old_s, old_t);
    // base solution with det 1
    let (w1, y1) = (p, -q);
    // shift (y1, w1) by k (x1, z0) to hit (y0, w0) mod n
    let k = (p * (y0 - y1) + q * (w0 - w1)).rem_euclid(n);
    let lifted = [x1, y1 + k * x1, z0, w1 + k * z0];
    debug_assert_eq!(lifted[0] * lifted[3] - lifted[1] * lifted[2], 1);
    lifted
}

/// SL2(Z) part of the action: e composed with a lift of the matrix.
fn act_sl2(m: &IntMatrix, e: &ModularUnitExpr) -> Result<ModularUnitExpr> {
    let n = e.level();
    let [x, y, z, w] = *m;
    let mut pref = e.prefactor().mul(&eta_sq_multiplier(m).pow(e.exponent_sum()));
    let mut factors = vec![];
    for (v, mult) in e.factors() {
        let s = n / v.vector().denominator();
        let (a, b) = (v.vector().a() * s, v.vector().b() * s);
        // row action (a, b) gamma
        let (pa, pb) = (a * x + b * z, a * y + b * w);
        let ((ra, rb), eps) = reduce_pair(pa, pb, n);
        pref = pref.mul(&eps.pow(*mult));
        factors.push((IndexVector::new(ra, rb, n)?, *mult));
    }
    ModularUnitExpr::new(pref, factors, n)
}

/// Coefficient action of [[1, 0], [0, d]].
fn act_diag(d: i64, e: &ModularUnitExpr) -> Result<ModularUnitExpr> {
    let n = e.level();
    let c = sigma_d(&e.leading_constant(), d, n)?;
    let mut pref = c;
    let mut factors = vec![];
    for (v, mult) in e.factors() {
        let s = n / v.vector().denominator();
        let (a, b) = (v.vector().a() * s, (d * v.vector().b() * s).rem_euclid(n));
        pref = pref.mul(&siegel_prefactor(a, b, n).pow(-mult));
        factors.push((IndexVector::new(a, b, n)?, *mult));
    }
    ModularUnitExpr::new(pref, factors, n)
}

/// Right action of a GL2(Z/N) class on an expression: with d = det(gamma)
/// and gamma = gamma_1 [[1,0],[0,d]], applies the SL2 lift of gamma_1 and
/// then the coefficient action of d.
///
/// Raw (non-modular) expressions are only transformable by SL2 classes,
/// where the action is plain composition.
pub fn act(gamma: &GLMatrix, e: &ModularUnitExpr) -> Result<ModularUnitExpr> {
    let n = e.level();
    if gamma.level() != n {
        return Err(Error::LevelMismatch { expected: n, found: gamma.level() });
    }
    let [x, y, z, w] = gamma.entries();
    let d = gamma.det();
    if d == 1 {
        return act_sl2(&lift_sl2(x, y, z, w, n), e);
    }
    if !e.is_modular() {
        return Err(Error::UnsupportedExpr);
    }
    let dinv = mod_inv(d, n).ok_or(Error::SingularMatrix)?;
    let g1 = lift_sl2(x, (y * dinv).rem_euclid(n), z, (w * dinv).rem_euclid(n), n);
    act_diag(d, &act_sl2(&g1, e)?)
}

// ---------------------------------------------------------------------------
// Conjugate orbits
// ---------------------------------------------------------------------------

/// One Galois conjugate: the transformed expression and where it is
/// evaluated.
#[derive(Debug, Clone)]
pub struct Conjugate {
    /// Reduced form whose CM point carries this conjugate.
    pub form: QuadForm,
    /// Acting class (composed with the form transport when form is not
    /// principal).
    pub class: GLMatrix,
    /// Transformed expression.
    pub expr: ModularUnitExpr,
    /// Value at the form's CM point.
    pub value: BigComplex,
}

/// Conjugates of e(tau_K) over the Hilbert class field: one value per class
/// of W_{N,K}/{+-I}, in the group's enumeration order.
pub fn conjugates_over_hk(
    e: &ModularUnitExpr,
    field: &QuadField,
    n: i64,
    cfg: &EvalConfig,
) -> Result<Vec<BigComplex>> {
    let tau = field.tau(cfg);
    crate::cm::wnk_group(field, n)
        .iter()
        .map(|alpha| act(alpha, e)?.evaluate(&tau, cfg))
        .collect()
}

/// Gluing matrix transporting level-N expressions from tau_K to the CM
/// point of the form Q = (A, B, C): assembled by CRT from, at each prime
/// power p^e || N with t_w = (b_K - B)/2,
///
///   p doesn't divide A:   [[1, -t_w A^{-1}], [0, A^{-1}]],
///   p | A, p doesn't divide C:  [[t_w - b_K, -C], [1, 0]],
///   p | A and p | C:      [[t_w + A - b_K, -C - t_w], [1, 1]].
pub fn form_transport_matrix(field: &QuadField, form: &QuadForm, n: i64) -> Result<GLMatrix> {
    debug_assert_eq!(form.discriminant(), field.discriminant());
    let t_w = (field.b() - form.b) / 2;
    // factor n into prime powers
    let mut rem = n;
    let mut entries = [0i64; 4]; // assembled by CRT
    let mut modulus = 1i64;
    let mut p = 2i64;
    while rem > 1 {
        if rem % p == 0 {
            let mut pe = 1i64;
            while rem % p == 0 {
                rem /= p;
                pe *= p;
            }
            let local: [i64; 4] = if form.a % p != 0 {
                let ainv = mod_inv(form.a, pe).ok_or(Error::SingularMatrix)?;
                [1, (-t_w * ainv).rem_euclid(pe), 0, ainv]
            } else if form.c % p != 0 {
                [t_w - field.b(), -form.c, 1, 0]
            } else {
                [t_w + form.a - field.b(), -form.c - t_w, 1, 1]
            };
            // CRT combine entrywise: x = entries mod modulus, x = local mod pe
            let minv = mod_inv(modulus, pe).expect("coprime moduli");
            let mut combined = [0i64; 4];
            for i in 0..4 {
                let a = entries[i].rem_euclid(modulus);
                let b = local[i].rem_euclid(pe);
                let k = ((b - a).rem_euclid(pe) * minv).rem_euclid(pe);
                combined[i] = a + modulus * k;
            }
            entries = combined;
            modulus *= pe;
        }
        p += 1;
    }
    GLMatrix::new(entries[0], entries[1], entries[2], entries[3], n)
}

/// Conjugates of e(tau_K) over K: for each reduced form Q and each class
/// alpha of W_{N,K}/{+-I}, the expression e^{alpha u_Q} evaluated at tau_Q.
/// Total h_K |W| values, possibly with multiplicity.
pub fn conjugates_over_k(
    e: &ModularUnitExpr,
    field: &QuadField,
    n: i64,
    cfg: &EvalConfig,
) -> Result<Vec<Conjugate>> {
    let forms = reduced_forms(field.discriminant())?;
    let w = crate::cm::wnk_group(field, n);
    let mut out = vec![];
    for form in &forms {
        let u = form_transport_matrix(field, form, n)?;
        let tau_q = form.tau(cfg);
        for alpha in &w {
            let composed = alpha.mul(&u)?;
            let expr = act(&composed, e)?;
            let value = expr.evaluate(&tau_q, cfg)?;
            out.push(Conjugate { form: *form, class: composed, expr, value });
        }
    }
    Ok(out)
}

/// Collapse numerically equal values (absolute tolerance 2^{-P/2}).
pub fn dedup_values(values: &[BigComplex], cfg: &EvalConfig) -> Vec<BigComplex> {
    use rug::ops::Pow;
    let tol = rug::Float::with_val(64, 2f64)
        .pow(&rug::Float::with_val(64, -((cfg.precision_bits() / 2) as i64)));
    let mut out: Vec<BigComplex> = vec![];
    for v in values {
        if !out.iter().any(|u| u.sub(v).abs() < tol) {
            out.push(v.clone());
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cm::{field_from_discriminant, wnk_group};

    fn int_mul(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
        [
            a[0] * b[0] + a[1] * b[2],
            a[0] * b[1] + a[1] * b[3],
            a[2] * b[0] + a[3] * b[2],
            a[2] * b[1] + a[3] * b[3],
        ]
    }

    fn iv(a: i64, b: i64, n: i64) -> IndexVector {
        IndexVector::new(a, b, n).unwrap()
    }

    fn x_expr() -> ModularUnitExpr {
        // zeta_8^7 g_{(1/2, 3/4)}^2 g_{(0, 1/4)}^{-2}
        ModularUnitExpr::new(
            UnityRoot::new(8, 7),
            [(iv(2, 3, 4), 2), (iv(0, 1, 4), -2)],
            4,
        )
        .unwrap()
    }

    #[test]
    fn quotient_expr_is_the_small_invariant() {
        let e = ModularUnitExpr::quotient_expr(4).unwrap();
        assert_eq!(e, x_expr());
        assert!(e.is_modular());
        assert!(ModularUnitExpr::quotient_expr(5).is_err());
    }

    #[test]
    fn canonical_form_of_the_example_expression() {
        // (1/2, 3/4) canonicalizes to (1/2, 1/4), shifting the prefactor to zeta_8^5
        let e = x_expr();
        assert_eq!(e.prefactor(), &UnityRoot::new(8, 5));
        let keys: Vec<_> = e.factors().iter().map(|(v, m)| (v.vector().a(), v.vector().b(), *m)).collect();
        assert_eq!(keys, vec![(0, 1, -2), (2, 1, 2)]);
    }

    #[test]
    fn identity_acts_trivially() {
        let e = x_expr();
        let id = GLMatrix::identity(4);
        assert_eq!(act(&id, &e).unwrap(), e);
    }

    #[test]
    fn action_matches_paper_second_conjugate() {
        // element_to_matrix(s=1, t=1) sends x to
        // zeta_8^5 g_{(1/4, 3/4)}^2 / g_{(1/4, 1/4)}^2
        let k = field_from_discriminant(-40).unwrap();
        let m = crate::cm::element_to_matrix(&k, 1, 1, 4).unwrap();
        let image = act(&m, &x_expr()).unwrap();
        let expect = ModularUnitExpr::new(
            UnityRoot::new(8, 5),
            [(iv(1, 3, 4), 2), (iv(1, 1, 4), -2)],
            4,
        )
        .unwrap();
        assert_eq!(image, expect);
    }

    #[test]
    fn action_matches_quotient_lemma_vector() {
        // [[3,0],[2,3]] sends g_{(0,1/4)}^{48} to g_{(1/2,3/4)}^{48} with no
        // residual root of unity
        let e = ModularUnitExpr::siegel_power(&iv(0, 1, 4), 48).unwrap();
        let m = GLMatrix::new(3, 0, 2, 3, 4).unwrap();
        let image = act(&m, &e).unwrap();
        let expect = ModularUnitExpr::siegel_power(&iv(2, 3, 4), 48).unwrap();
        assert_eq!(image, expect);
        assert!(image.prefactor().is_one());
    }

    #[test]
    fn act_is_a_right_action_on_w() {
        let k = field_from_discriminant(-40).unwrap();
        let w = wnk_group(&k, 4);
        let e = x_expr();
        for m1 in &w {
            for m2 in &w {
                let lhs = act(&m1.mul(m2).unwrap(), &e).unwrap();
                let rhs = act(m2, &act(m1, &e).unwrap()).unwrap();
                assert_eq!(lhs, rhs, "e^(m1 m2) = (e^m1)^m2 for {m1}, {m2}");
            }
        }
    }

    #[test]
    fn raw_expressions_reject_determinant_actions() {
        let e = ModularUnitExpr::siegel_power(&iv(0, 1, 4), 1).unwrap();
        assert!(!e.is_modular());
        // det = 3 action must be refused
        let m = GLMatrix::new(1, 0, 0, 3, 4).unwrap();
        assert_eq!(act(&m, &e).unwrap_err(), Error::UnsupportedExpr);
        // SL2 action is fine
        let s = GLMatrix::new(0, -1, 1, 0, 4).unwrap();
        assert!(act(&s, &e).is_ok());
    }

    #[test]
    fn transport_matrix_for_the_example_form() {
        let k = field_from_discriminant(-40).unwrap();
        let forms = reduced_forms(-40).unwrap();
        assert!(form_transport_matrix(&k, &forms[0], 4).unwrap() == GLMatrix::identity(4));
        let u = form_transport_matrix(&k, &forms[1], 4).unwrap();
        assert_eq!(u, GLMatrix::new(0, 3, 1, 0, 4).unwrap());
    }

    #[test]
    fn sl2_lift_is_congruent_and_unimodular() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(19);
        for n in [2i64, 3, 4, 5, 6, 8, 12] {
            let mut found = 0;
            while found < 20 {
                let (x, y, z, w) = (
                    rng.gen_range(0..n),
                    rng.gen_range(0..n),
                    rng.gen_range(0..n),
                    rng.gen_range(0..n),
                );
                if (x * w - y * z).rem_euclid(n) != 1 {
                    continue;
                }
                let m = lift_sl2(x, y, z, w, n);
                assert_eq!(m[0] * m[3] - m[1] * m[2], 1);
                assert_eq!(m[0].rem_euclid(n), x);
                assert_eq!(m[1].rem_euclid(n), y);
                assert_eq!(m[2].rem_euclid(n), z);
                assert_eq!(m[3].rem_euclid(n), w);
                found += 1;
            }
        }
    }

    #[test]
    fn eta_multiplier_consistency() {
        // S^2 = -I has multiplier -1; S^4 = I has multiplier 1; words agree
        // with direct matrix products
        let s: IntMatrix = [0, -1, 1, 0];
        let t: IntMatrix = [1, 1, 0, 1];
        assert_eq!(eta_sq_multiplier(&int_mul(&s, &s)), UnityRoot::minus_one());
        assert_eq!(eta_sq_multiplier(&int_mul(&int_mul(&s, &s), &int_mul(&s, &s))), UnityRoot::one());
        assert_eq!(eta_sq_multiplier(&t), UnityRoot::new(12, 1));
        let st = int_mul(&s, &t);
        assert_eq!(eta_sq_multiplier(&st), eta_sq_multiplier(&s).mul(&eta_sq_multiplier(&t)));
    }
}
