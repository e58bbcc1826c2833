//! Index-vector classes and the level-N matrix action.
//!
//! Families {h_v} indexed by vectors with primitive denominator N satisfy
//! (F1) holomorphy on H, (F2) dependence only on +-v mod Z^2, and (F3)
//! Galois equivariance h_v^gamma = h_{transpose(gamma) v}. This module owns
//! the combinatorics: canonical representatives mod +-Z^2, enumeration of
//! the class set V_N/~, the transpose action, the modularity congruences
//! for products of Siegel functions, and a numeric SL2 compatibility check.

use rug::Float;

use crate::error::{Error, Result};
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

/// The chosen representative of the class {v, -v} mod Z^2: the
/// lexicographically smaller of (a, b) and (N-a, N-b) mod N.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalVector(IndexVector);

impl CanonicalVector {
    pub fn vector(&self) -> &IndexVector {
        &self.0
    }

    pub fn into_vector(self) -> IndexVector {
        self.0
    }
}

impl std::fmt::Display for CanonicalVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

/// Deterministic representative of +-v mod Z^2; idempotent.
pub fn canonicalize(v: &IndexVector) -> CanonicalVector {
    let n = v.denominator();
    let neg = ((-v.a()).rem_euclid(n), (-v.b()).rem_euclid(n));
    if (v.a(), v.b()) <= neg {
        CanonicalVector(*v)
    } else {
        CanonicalVector(IndexVector::new(neg.0, neg.1, n).expect("negation of nonzero vector"))
    }
}

/// An element of GL2(Z/N)/{+-I}: entries reduced mod N, the class
/// represented by the lexicographically smaller of M and -M.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GLMatrix {
    x: i64,
    y: i64,
    z: i64,
    w: i64,
    n: i64,
}

impl GLMatrix {
    /// [[x, y], [z, w]] mod n; rejects matrices with det not invertible mod n.
    pub fn new(x: i64, y: i64, z: i64, w: i64, n: i64) -> Result<Self> {
        assert!(n >= 2, "level must be at least 2");
        let (x, y, z, w) = (x.rem_euclid(n), y.rem_euclid(n), z.rem_euclid(n), w.rem_euclid(n));
        let det = (x * w - y * z).rem_euclid(n);
        if gcd(det, n) != 1 {
            return Err(Error::SingularMatrix);
        }
        let neg = ((-x).rem_euclid(n), (-y).rem_euclid(n), (-z).rem_euclid(n), (-w).rem_euclid(n));
        let (x, y, z, w) = if (x, y, z, w) <= neg { (x, y, z, w) } else { neg };
        Ok(GLMatrix { x, y, z, w, n })
    }

    pub fn identity(n: i64) -> Self {
        GLMatrix::new(1, 0, 0, 1, n).expect("identity is invertible")
    }

    pub fn entries(&self) -> [i64; 4] {
        [self.x, self.y, self.z, self.w]
    }

    pub fn level(&self) -> i64 {
        self.n
    }

    pub fn det(&self) -> i64 {
        (self.x * self.w - self.y * self.z).rem_euclid(self.n)
    }

    pub fn is_sl(&self) -> bool {
        self.det() == 1
    }

    pub fn mul(&self, other: &GLMatrix) -> Result<GLMatrix> {
        if self.n != other.n {
            return Err(Error::LevelMismatch { expected: self.n, found: other.n });
        }
        GLMatrix::new(
            self.x * other.x + self.y * other.z,
            self.x * other.y + self.y * other.w,
            self.z * other.x + self.w * other.z,
            self.z * other.y + self.w * other.w,
            self.n,
        )
    }

    pub fn inv(&self) -> GLMatrix {
        let d = self.det();
        let dinv = mod_inverse(d, self.n).expect("det is invertible by construction");
        GLMatrix::new(self.w * dinv, -self.y * dinv, -self.z * dinv, self.x * dinv, self.n)
            .expect("inverse of invertible matrix")
    }
}

impl std::fmt::Display for GLMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]] mod {}", self.x, self.y, self.z, self.w, self.n)
    }
}

pub(crate) fn mod_inverse(a: i64, n: i64) -> Option<i64> {
    let (mut t, mut new_t) = (0i64, 1i64);
    let (mut r, mut new_r) = (n, a.rem_euclid(n));
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    if r != 1 {
        return None;
    }
    Some(t.rem_euclid(n))
}

/// transpose(gamma) . v, reduced mod Z^2 and canonicalized.
///
/// The vector's denominator must divide the matrix level; vectors of lower
/// level are scaled up before acting.
pub fn transpose_action(gamma: &GLMatrix, v: &IndexVector) -> Result<CanonicalVector> {
    let n = gamma.level();
    if n % v.denominator() != 0 {
        return Err(Error::LevelMismatch { expected: n, found: v.denominator() });
    }
    let s = n / v.denominator();
    let (a, b) = (v.a() * s, v.b() * s);
    let [x, y, z, w] = gamma.entries();
    let va = x * a + z * b;
    let vb = y * a + w * b;
    let image = IndexVector::new(va.rem_euclid(n), vb.rem_euclid(n), n)?;
    Ok(canonicalize(&image))
}

/// All classes of V_N modulo +-Z^2, each exactly once, sorted.
pub fn enumerate_vn_classes(n: i64) -> Vec<CanonicalVector> {
    assert!(n >= 2);
    let mut set = std::collections::BTreeSet::new();
    for a in 0..n {
        for b in 0..n {
            if gcd(gcd(a, b), n) != 1 {
                continue;
            }
            let v = IndexVector::new(a, b, n).expect("primitive vector is nonzero");
            set.insert(canonicalize(&v));
        }
    }
    set.into_iter().collect()
}

/// Result of the modularity congruence test for zeta prod g_v^{m(v)}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModularityCheck {
    /// Whether the product (with the lemma's canonical zeta) lies in F_N.
    pub passes: bool,
    /// zeta = prod e^{pi i v2 (1 - v1) m(v)}, exactly, in <zeta_{2N^2}>.
    pub zeta: UnityRoot,
}

/// Congruence criterion for a finite exponent family m: V_N -> Z:
///
///   sum m (N v1)^2 = sum m (N v2)^2 = 0 mod gcd(2,N) N,
///   sum m (N v1)(N v2)               = 0 mod N,
///   gcd(12, N) sum m                  = 0 mod 12,
///
/// together with the exact root of unity zeta that makes the product modular.
/// Vectors of denominator properly dividing N are accepted and scaled.
pub fn modularity_check(m: &[(IndexVector, i64)], n: i64) -> ModularityCheck {
    let mut s11 = 0i64;
    let mut s22 = 0i64;
    let mut s12 = 0i64;
    let mut sm = 0i64;
    let mut zeta_exp = 0i64; // over zeta_{2 N^2}
    for (v, mult) in m {
        debug_assert_eq!(n % v.denominator(), 0, "vector level must divide N");
        let s = n / v.denominator();
        let (a, b) = (v.a() * s, v.b() * s);
        s11 += mult * a * a;
        s22 += mult * b * b;
        s12 += mult * a * b;
        sm += mult;
        zeta_exp += mult * b * (n - a);
    }
    let m2n = gcd(2, n) * n;
    let passes = s11.rem_euclid(m2n) == 0
        && s22.rem_euclid(m2n) == 0
        && s12.rem_euclid(n) == 0
        && (gcd(12, n) * sm).rem_euclid(12) == 0;
    ModularityCheck { passes, zeta: UnityRoot::new(2 * n * n, zeta_exp) }
}

/// Which Fricke family a compatibility check exercises.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyKind {
    /// f_v, invariant under the action on the nose.
    Fricke,
    /// g_v^{12N}, where every transformation root of unity dies.
    Siegel12N,
}

/// Relative residual |h_{t(gamma) v}(tau) - h_v(gamma tau)| / |h_v(gamma tau)|
/// for gamma in SL2(Z) given as an exact integer matrix with det 1.
pub fn sl2_compatibility_residual(
    gamma: &[i64; 4],
    v: &IndexVector,
    tau: &BigComplex,
    kind: FamilyKind,
    cfg: &EvalConfig,
) -> Result<Float> {
    let [x, y, z, w] = *gamma;
    if x * w - y * z != 1 {
        return Err(Error::SingularMatrix);
    }
    let p = cfg.working_prec();
    let n = v.denominator();
    // gamma tau = (x tau + y) / (z tau + w)
    let num = tau.scale_i64(x).add(&BigComplex::from_f64(p, y as f64, 0.0));
    let den = tau.scale_i64(z).add(&BigComplex::from_f64(p, w as f64, 0.0));
    let gtau = num.div(&den);
    let image = IndexVector::new((x * v.a() + z * v.b()).rem_euclid(n), (y * v.a() + w * v.b()).rem_euclid(n), n)?;
    let (lhs, rhs) = match kind {
        FamilyKind::Fricke => (fricke(&image, tau, cfg)?, fricke(v, &gtau, cfg)?),
        FamilyKind::Siegel12N => (
            siegel(&image, tau, cfg)?.powi(12 * n),
            siegel(v, &gtau, cfg)?.powi(12 * n),
        ),
    };
    Ok(lhs.sub(&rhs).abs() / rhs.abs())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(a: i64, b: i64, n: i64) -> IndexVector {
        IndexVector::new(a, b, n).unwrap()
    }

    #[test]
    fn canonical_representatives() {
        assert_eq!(canonicalize(&iv(3, 3, 4)).vector(), &iv(1, 1, 4));
        assert_eq!(canonicalize(&iv(0, 3, 4)).vector(), &iv(0, 1, 4));
        assert_eq!(canonicalize(&iv(2, 1, 4)).vector(), &iv(2, 1, 4));
        // idempotent
        let c = canonicalize(&iv(3, 1, 4));
        assert_eq!(canonicalize(c.vector()), c);
    }

    #[test]
    fn class_counts() {
        let l2 = enumerate_vn_classes(2);
        assert_eq!(l2.len(), 3);
        let expected: Vec<_> = [(0, 1), (1, 0), (1, 1)]
            .iter()
            .map(|&(a, b)| canonicalize(&iv(a, b, 2)))
            .collect();
        assert_eq!(l2, expected);
        assert_eq!(enumerate_vn_classes(3).len(), 4);
        assert_eq!(enumerate_vn_classes(4).len(), 6);
        assert_eq!(enumerate_vn_classes(5).len(), 12);
    }

    #[test]
    fn class_count_is_half_of_primitive_vectors() {
        for n in 3..=12i64 {
            let classes = enumerate_vn_classes(n);
            let mut primitive = 0;
            for a in 0..n {
                for b in 0..n {
                    if gcd(gcd(a, b), n) == 1 {
                        primitive += 1;
                    }
                }
            }
            assert_eq!(2 * classes.len(), primitive, "no +- fixed points for N = {n}");
        }
    }

    #[test]
    fn transpose_action_examples() {
        let n = 4;
        let id = GLMatrix::identity(n);
        let v = iv(1, 2, 4);
        assert_eq!(transpose_action(&id, &v).unwrap(), canonicalize(&v));

        let s = GLMatrix::new(0, -1, 1, 0, n).unwrap();
        let v = iv(0, 1, 4);
        assert_eq!(transpose_action(&s, &v).unwrap(), canonicalize(&iv(1, 0, 4)));

        // the class matrix of the quotient lemma for d = -40, N = 4
        let m = GLMatrix::new(3, 0, 2, 3, n).unwrap();
        let img = transpose_action(&m, &iv(0, 1, 4)).unwrap();
        assert_eq!(img, canonicalize(&iv(2, 3, 4)));
        assert_eq!(img.vector(), &iv(2, 1, 4));
    }

    #[test]
    fn transpose_action_is_group_action() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        let n = 8i64;
        let mut matrices = vec![];
        while matrices.len() < 30 {
            let m = GLMatrix::new(
                rng.gen_range(0..n),
                rng.gen_range(0..n),
                rng.gen_range(0..n),
                rng.gen_range(0..n),
                n,
            );
            if let Ok(m) = m {
                matrices.push(m);
            }
        }
        for _ in 0..100 {
            let g1 = matrices[rng.gen_range(0..matrices.len())];
            let g2 = matrices[rng.gen_range(0..matrices.len())];
            let v = loop {
                let a = rng.gen_range(0..n);
                let b = rng.gen_range(0..n);
                if let Ok(v) = IndexVector::new(a, b, n) {
                    break v;
                }
            };
            // t(g1 g2) v = t(g2) (t(g1) v)
            let lhs = transpose_action(&g1.mul(&g2).unwrap(), &v).unwrap();
            let mid = transpose_action(&g1, &v).unwrap();
            let rhs = transpose_action(&g2, mid.vector()).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn modularity_examples() {
        // the quotient-invariant support for N = 4
        let m = vec![(iv(2, 3, 4), 2i64), (iv(0, 1, 4), -2i64)];
        let r = modularity_check(&m, 4);
        assert!(r.passes);
        assert_eq!(r.zeta, UnityRoot::new(8, 1));

        // any single vector to the 12N-th power
        for (a, b, n) in [(0i64, 1i64, 4i64), (1, 1, 5), (2, 1, 6)] {
            let r = modularity_check(&[(iv(a, b, n), 12 * n)], n);
            assert!(r.passes, "12N-th powers form a family at level {n}");
        }

        // a bare Siegel function fails the weight congruence
        let r = modularity_check(&[(iv(0, 1, 4), 1)], 4);
        assert!(!r.passes);
    }

    #[test]
    fn singular_matrices_rejected() {
        assert_eq!(GLMatrix::new(2, 0, 0, 2, 4).unwrap_err(), Error::SingularMatrix);
        assert!(GLMatrix::new(1, 1, 0, 1, 4).is_ok());
    }

    #[test]
    fn matrix_class_identification() {
        let n = 5;
        let m = GLMatrix::new(1, 2, 3, 4, n).unwrap();
        let neg = GLMatrix::new(-1, -2, -3, -4, n).unwrap();
        assert_eq!(m, neg);
        let inv = m.inv();
        assert_eq!(m.mul(&inv).unwrap(), GLMatrix::identity(n));
    }

    proptest::proptest! {
        #[test]
        fn canonicalize_is_involution_invariant(a in 0i64..12, b in 0i64..12, n in 2i64..13) {
            if let Ok(v) = IndexVector::new(a, b, n) {
                let c = canonicalize(&v);
                proptest::prop_assert_eq!(canonicalize(&v.neg()), c);
                proptest::prop_assert_eq!(canonicalize(c.vector()), c);
            }
        }
    }
}
