//! Arbitrary-precision evaluation of Siegel and Fricke modular functions,
//! Shimura reciprocity over imaginary quadratic fields, and recognition of
//! the integer minimal polynomials of class-field invariants.
//!
//! The crate is organized around the pipeline
//!
//! 1. [`numerics`] — complex arithmetic with explicit precision, nome and
//!    fractional q-powers, truncation control;
//! 2. [`modular`] — eta, Siegel g_v, Eisenstein g2/g3, Delta, j, the
//!    Weierstrass wp (q-expansion plus lattice-sum oracle) and Fricke f_v;
//! 3. [`fricke_family`] — index-vector classes mod +-Z^2, the GL2(Z/N)
//!    transpose action, and the modularity congruences for Siegel products;
//! 4. [`cm`] — imaginary quadratic fields, reduced forms and class numbers,
//!    the reciprocity group W_{N,K};
//! 5. [`invariants`] — Siegel-Ramachandra and Fricke invariants, the
//!    small-exponent quotient invariant, discriminant evidence and bounds;
//! 6. [`galois`] — the reciprocity action on formal modular-unit
//!    expressions and enumeration of Galois conjugates;
//! 7. [`minpoly`] — recognition of integer minimal polynomials from
//!    high-precision orbits, with unit and irreducibility probes.
//!
//! See the `examples/` directory for runnable walkthroughs of each area,
//! and the `fricke` binary for a JSON-reporting command line.

pub mod cm;
pub mod error;
pub mod fricke_family;
pub mod galois;
pub mod invariants;
pub mod minpoly;
pub mod modular;
pub mod numerics;
pub mod report;
pub mod unity;

pub use error::{Error, Result};
pub use numerics::{BigComplex, EvalConfig};
