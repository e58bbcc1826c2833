//! Integer minimal polynomials from floating-point Galois orbits.
//!
//! Expands prod (X - x_k) over a complete orbit in high precision, rounds
//! every coefficient to the nearest integer, and records the largest
//! rounding distance as the residual. A residual at or above 0.25 aborts:
//! either the precision is too low or the values are not a Galois orbit.
//!
//! Irreducibility is probed through factorization degree patterns modulo
//! small primes; the probe can return an honest `Inconclusive`.

use rug::{Float, Integer};

use crate::error::{Error, Result};
use crate::numerics::BigComplex;

/// Monic polynomial with exact integer coefficients recovered from a
/// floating-point orbit.
#[derive(Debug, Clone, PartialEq)]
pub struct IntegerPolynomial {
    /// Coefficients in ascending degree; leading coefficient 1.
    pub coefficients: Vec<Integer>,
    /// Largest distance from a computed coefficient to its integer.
    pub residual: f64,
    pub monic: bool,
}

impl IntegerPolynomial {
    pub fn degree(&self) -> usize {
        self.coefficients.len().saturating_sub(1)
    }

    pub fn constant(&self) -> &Integer {
        &self.coefficients[0]
    }

    /// Coefficient of X^k (zero beyond the degree).
    pub fn coefficient(&self, k: usize) -> Integer {
        self.coefficients.get(k).cloned().unwrap_or_default()
    }
}

impl std::fmt::Display for IntegerPolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for (k, c) in self.coefficients.iter().enumerate().rev() {
            if *c == 0u32 && self.degree() > 0 {
                continue;
            }
            let mag = c.clone().abs();
            if first {
                if *c < 0u32 {
                    write!(f, "-")?;
                }
                first = false;
            } else if *c < 0u32 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if mag != 1u32 {
                        write!(f, "{mag}*")?;
                    }
                    if k == 1 {
                        write!(f, "X")?;
                    } else {
                        write!(f, "X^{k}")?;
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Expand prod (X - x_k) and round to integers.
///
/// Values are presorted by (re, im), so the output is bit-identical under
/// permutation of the input.
pub fn minimal_polynomial(values: &[BigComplex]) -> Result<IntegerPolynomial> {
    assert!(!values.is_empty(), "orbit must be nonempty");
    let prec = values.iter().map(BigComplex::prec).min().unwrap();
    let mut sorted: Vec<&BigComplex> = values.iter().collect();
    sorted.sort_by(|a, b| {
        a.re()
            .partial_cmp(b.re())
            .unwrap()
            .then(a.im().partial_cmp(b.im()).unwrap())
    });

    // coeffs[k] = coefficient of X^k, ascending
    let mut coeffs = vec![BigComplex::one(prec)];
    for x in sorted {
        let mut next = vec![BigComplex::zero(prec); coeffs.len() + 1];
        for (k, c) in coeffs.iter().enumerate() {
            next[k] = next[k].sub(&c.mul(x));
            next[k + 1] = next[k + 1].add(c);
        }
        coeffs = next;
    }

    let mut residual = Float::new(prec);
    let mut out = Vec::with_capacity(coeffs.len());
    for c in &coeffs {
        let rounded = c.re().clone().round();
        let dist = Float::with_val(prec, c.re() - &rounded).abs().max(&c.im().clone().abs());
        if dist > residual {
            residual = dist;
        }
        out.push(rounded.to_integer().expect("finite coefficient"));
    }
    let residual_f = residual.to_f64();
    if !(residual_f < 0.25) {
        return Err(Error::RoundingFailure { residual: residual_f });
    }
    Ok(IntegerPolynomial { coefficients: out, residual: residual_f, monic: true })
}

/// A monic integer polynomial is a unit's minimal polynomial only when its
/// constant term is +-1.
pub fn unit_check(p: &IntegerPolynomial) -> bool {
    debug_assert!(p.monic);
    let c = p.constant();
    *c == 1u32 || *c == -1i32
}

/// Outcome of the mod-p irreducibility probe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IrreducibilityProbe {
    /// Irreducible, by a single prime with an irreducible reduction or by a
    /// degree-pattern obstruction across several primes.
    Irreducible(Certificate),
    /// Reducible with an explicit witness.
    Reducible(ReducibleWitness),
    /// The probe saw nothing decisive.
    Inconclusive { patterns: Vec<(u64, Vec<usize>)> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    /// f mod p is irreducible.
    IrreducibleModP { p: u64 },
    /// No nonempty proper subset sum of any observed degree pattern is
    /// shared by all observed patterns.
    DegreePattern { patterns: Vec<(u64, Vec<usize>)> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ReducibleWitness {
    /// An integer root r, so (X - r) divides.
    IntegerRoot { root: i64 },
}

const PROBE_PRIMES: &[u64] = &[3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53];

/// Probe irreducibility over Q by degree patterns of factorizations mod p.
pub fn irreducibility_probe(p: &IntegerPolynomial) -> IrreducibilityProbe {
    let deg = p.degree();
    if deg == 0 {
        return IrreducibilityProbe::Inconclusive { patterns: vec![] };
    }
    if deg == 1 {
        return IrreducibilityProbe::Irreducible(Certificate::DegreePattern { patterns: vec![] });
    }
    // cheap witness first: integer roots dividing the constant term
    if let Some(root) = integer_root(p) {
        return IrreducibilityProbe::Reducible(ReducibleWitness::IntegerRoot { root });
    }

    let mut patterns: Vec<(u64, Vec<usize>)> = vec![];
    // degrees d in 1..deg still possible for a proper factor
    let mut possible: std::collections::BTreeSet<usize> = (1..deg).collect();
    for &q in PROBE_PRIMES {
        let fp = match reduce_mod_p(p, q) {
            Some(f) => f,
            None => continue, // degree dropped mod q
        };
        if !is_squarefree_mod_p(&fp, q) {
            continue;
        }
        let pattern = factor_degrees_mod_p(&fp, q);
        if pattern.len() == 1 && pattern[0] == deg {
            return IrreducibilityProbe::Irreducible(Certificate::IrreducibleModP { p: q });
        }
        let sums = subset_sums(&pattern);
        possible.retain(|d| sums.contains(d));
        patterns.push((q, pattern));
        if possible.is_empty() {
            return IrreducibilityProbe::Irreducible(Certificate::DegreePattern { patterns });
        }
    }
    IrreducibilityProbe::Inconclusive { patterns }
}

fn integer_root(p: &IntegerPolynomial) -> Option<i64> {
    let constant = p.constant();
    if *constant == 0u32 {
        return Some(0);
    }
    // trial-divide |constant| to enumerate small divisors; give up beyond a
    // desk-scale bound
    let bound = 1_000_000i64;
    let mut divisors = vec![1i64];
    let mut m = constant.clone().abs();
    let mut d = Integer::from(2);
    while d.clone() * d.clone() <= m && d <= bound {
        while m.is_divisible(&d) {
            m /= &d;
            let dd = d.to_i64().unwrap();
            let mut extended: Vec<i64> = divisors
                .iter()
                .filter_map(|x| x.checked_mul(dd))
                .filter(|x| *x <= bound)
                .collect();
            divisors.append(&mut extended);
            divisors.sort_unstable();
            divisors.dedup();
        }
        d += 1;
    }
    if let Some(rest) = m.to_i64() {
        if rest > 1 && rest <= bound {
            let mut extended: Vec<i64> =
                divisors.iter().filter_map(|x| x.checked_mul(rest)).filter(|x| *x <= bound).collect();
            divisors.append(&mut extended);
            divisors.sort_unstable();
            divisors.dedup();
        }
    }
    for r in divisors {
        for root in [r, -r] {
            let mut acc = Integer::new();
            for c in p.coefficients.iter().rev() {
                acc = acc * root + c;
            }
            if acc == 0u32 {
                return Some(root);
            }
        }
    }
    None
}

fn reduce_mod_p(p: &IntegerPolynomial, q: u64) -> Option<Vec<u64>> {
    let coeffs: Vec<u64> = p
        .coefficients
        .iter()
        .map(|c| c.mod_u(q.try_into().expect("probe primes fit in u32")) as u64)
        .collect();
    if *coeffs.last().unwrap() == 0 {
        return None;
    }
    Some(coeffs)
}

// --- dense polynomial arithmetic over F_p (p < 2^31) ---

fn trim(f: &mut Vec<u64>) {
    while f.len() > 1 && *f.last().unwrap() == 0 {
        f.pop();
    }
}

fn poly_rem(mut a: Vec<u64>, b: &[u64], p: u64) -> Vec<u64> {
    let db = b.len() - 1;
    let lead_inv = mod_pow(b[db], p - 2, p);
    while a.len() > db {
        let da = a.len() - 1;
        let factor = a[da] * lead_inv % p;
        if factor != 0 {
            for i in 0..=db {
                let idx = da - db + i;
                a[idx] = (a[idx] + p - factor * b[i] % p) % p;
            }
        }
        a.pop();
        trim(&mut a);
        if a.iter().all(|&c| c == 0) {
            return vec![0];
        }
    }
    trim(&mut a);
    a
}

fn poly_gcd(mut a: Vec<u64>, mut b: Vec<u64>, p: u64) -> Vec<u64> {
    trim(&mut a);
    trim(&mut b);
    while !(b.len() == 1 && b[0] == 0) {
        let r = poly_rem(a, &b, p);
        a = b;
        b = r;
    }
    // normalize monic
    let lead = *a.last().unwrap();
    if lead > 1 {
        let inv = mod_pow(lead, p - 2, p);
        for c in &mut a {
            *c = *c * inv % p;
        }
    }
    a
}

fn poly_mul_mod(a: &[u64], b: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    poly_rem(out, f, p)
}

fn mod_pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

fn derivative_mod_p(f: &[u64], p: u64) -> Vec<u64> {
    if f.len() <= 1 {
        return vec![0];
    }
    let mut out: Vec<u64> = f.iter().enumerate().skip(1).map(|(i, &c)| (i as u64 % p) * c % p).collect();
    trim(&mut out);
    out
}

fn is_squarefree_mod_p(f: &[u64], p: u64) -> bool {
    let d = derivative_mod_p(f, p);
    if d.len() == 1 && d[0] == 0 {
        return false;
    }
    let g = poly_gcd(f.to_vec(), d, p);
    g.len() == 1
}

/// Multiset of irreducible factor degrees of a squarefree f mod p, by
/// distinct-degree factorization.
fn factor_degrees_mod_p(f: &[u64], p: u64) -> Vec<usize> {
    let mut rest = f.to_vec();
    // monic normalize
    let inv = mod_pow(*rest.last().unwrap(), p - 2, p);
    for c in &mut rest {
        *c = *c * inv % p;
    }
    let mut degrees = vec![];
    // h = x^(p^i) mod rest, tracked against the shrinking cofactor
    let mut h = vec![0u64, 1]; // x
    let mut i = 0usize;
    while rest.len() > 1 {
        i += 1;
        if 2 * i > rest.len() - 1 {
            degrees.push(rest.len() - 1);
            break;
        }
        // h <- h^p mod rest
        h = poly_pow_mod(&h, p, &rest, p);
        // gcd(h - x, rest)
        let mut hx = h.clone();
        if hx.len() < 2 {
            hx.resize(2, 0);
        }
        hx[1] = (hx[1] + p - 1) % p;
        trim(&mut hx);
        let g = poly_gcd(rest.clone(), hx, p);
        if g.len() > 1 {
            let count = (g.len() - 1) / i;
            for _ in 0..count {
                degrees.push(i);
            }
            rest = poly_div_exact(&rest, &g, p);
            h = poly_rem(h, &rest, p);
            if h.len() < 2 {
                h.resize(2, 0);
            }
        }
    }
    degrees.sort_unstable();
    degrees
}

fn poly_pow_mod(base: &[u64], e: u64, f: &[u64], p: u64) -> Vec<u64> {
    let mut acc = vec![1u64];
    let mut b = base.to_vec();
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            acc = poly_mul_mod(&acc, &b, f, p);
        }
        e >>= 1;
        if e > 0 {
            b = poly_mul_mod(&b, &b, f, p);
        }
    }
    acc
}

fn poly_div_exact(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    // long division, remainder known to vanish
    let mut rem = a.to_vec();
    let db = b.len() - 1;
    let mut quot = vec![0u64; a.len() - db];
    let lead_inv = mod_pow(b[db], p - 2, p);
    for k in (0..quot.len()).rev() {
        let idx = k + db;
        if idx >= rem.len() {
            continue;
        }
        let factor = rem[idx] * lead_inv % p;
        quot[k] = factor;
        if factor != 0 {
            for i in 0..=db {
                rem[k + i] = (rem[k + i] + p - factor * b[i] % p) % p;
            }
        }
    }
    trim(&mut quot);
    quot
}

fn subset_sums(pattern: &[usize]) -> std::collections::BTreeSet<usize> {
    let mut sums = std::collections::BTreeSet::new();
    sums.insert(0usize);
    for &d in pattern {
        let existing: Vec<usize> = sums.iter().copied().collect();
        for s in existing {
            sums.insert(s + d);
        }
    }
    sums
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(coeffs: &[i64]) -> IntegerPolynomial {
        IntegerPolynomial {
            coefficients: coeffs.iter().map(|&c| Integer::from(c)).collect(),
            residual: 0.0,
            monic: *coeffs.last().unwrap() == 1,
        }
    }

    #[test]
    fn zero_orbit_gives_x() {
        let p = minimal_polynomial(&[BigComplex::zero(128)]).unwrap();
        assert_eq!(p.coefficients, vec![Integer::new(), Integer::from(1)]);
        assert_eq!(p.residual, 0.0);
        assert!(!unit_check(&p));
    }

    #[test]
    fn golden_ratio_pair() {
        // x^2 - x - 1 from its two real roots
        let prec = 192;
        let s5 = Float::with_val(prec, 5u32).sqrt();
        let a = BigComplex::from_real(Float::with_val(prec, (Float::with_val(prec, 1u32) + &s5) / 2u32));
        let b = BigComplex::from_real(Float::with_val(prec, (Float::with_val(prec, 1u32) - &s5) / 2u32));
        let p = minimal_polynomial(&[a.clone(), b.clone()]).unwrap();
        assert_eq!(p.coefficients, vec![Integer::from(-1), Integer::from(-1), Integer::from(1)]);
        assert!(unit_check(&p));
        // permutation invariance, bit for bit
        let q = minimal_polynomial(&[b, a]).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn rounding_failure_on_non_orbit() {
        let v = BigComplex::from_f64(128, 0.5, 0.0);
        let err = minimal_polynomial(&[v]).unwrap_err();
        match err {
            Error::RoundingFailure { residual } => assert!(residual >= 0.25),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn probe_reducible_with_root() {
        let p = poly(&[-1, 0, 1]); // X^2 - 1
        match irreducibility_probe(&p) {
            IrreducibilityProbe::Reducible(ReducibleWitness::IntegerRoot { root }) => {
                assert!(root == 1 || root == -1)
            }
            other => panic!("expected reducible, got {other:?}"),
        }
    }

    #[test]
    fn probe_cyclotomic_quartic() {
        // X^2 + 1 is irreducible mod 3
        let p = poly(&[1, 0, 1]);
        match irreducibility_probe(&p) {
            IrreducibilityProbe::Irreducible(Certificate::IrreducibleModP { p: 3 }) => {}
            other => panic!("expected irreducible mod 3, got {other:?}"),
        }
    }

    #[test]
    fn probe_swinnerton_dyer_is_inconclusive() {
        // min poly of sqrt2 + sqrt3: x^4 - 10x^2 + 1, reducible mod every prime
        let p = poly(&[1, 0, -10, 0, 1]);
        match irreducibility_probe(&p) {
            IrreducibilityProbe::Inconclusive { patterns } => assert!(!patterns.is_empty()),
            other => panic!("expected inconclusive, got {other:?}"),
        }
    }

    #[test]
    fn probe_by_degree_pattern() {
        // x^4 - x - 1 has Galois group S4; small primes certify it
        let p = poly(&[-1, -1, 0, 0, 1]);
        match irreducibility_probe(&p) {
            IrreducibilityProbe::Irreducible(_) => {}
            other => panic!("expected a certificate, got {other:?}"),
        }
    }

    #[test]
    fn degree_pattern_extraction() {
        // (x^2+1)(x-1)(x-2) mod 7: degrees {1,1,2}
        let f = {
            let a = [1u64, 0, 1];
            let b = [6u64, 1]; // x - 1
            let c = [5u64, 1]; // x - 2
            let ab = naive_mul(&a, &b, 7);
            naive_mul(&ab, &c, 7)
        };
        assert!(is_squarefree_mod_p(&f, 7));
        assert_eq!(factor_degrees_mod_p(&f, 7), vec![1, 1, 2]);
    }

    fn naive_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x * y) % p;
            }
        }
        out
    }

    #[test]
    fn display_formatting() {
        let p = poly(&[1, -72, 12, 1]);
        assert_eq!(p.to_string(), "X^3 + 12*X^2 - 72*X + 1");
    }
}
