//! Machine-readable run reports for the command line.
//!
//! Reports are JSON on standard output. Numbers travel as decimal strings
//! with enough digits to round-trip the binary precision; identical inputs
//! and precision therefore produce byte-identical reports. Timing is
//! volatile, so it is emitted only on request.

use rug::Float;
use serde::Serialize;

use crate::minpoly::IntegerPolynomial;
use crate::numerics::{BigComplex, EvalConfig};

/// Digits needed to round-trip `prec` binary digits.
fn decimal_digits(prec: u32) -> usize {
    (prec as f64 * std::f64::consts::LOG10_2).ceil() as usize + 2
}

/// A real number as a decimal string at full precision.
pub fn float_string(x: &Float) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    x.to_string_radix(10, Some(decimal_digits(x.prec())))
}

#[derive(Debug, Clone, Serialize)]
pub struct ComplexString {
    pub re: String,
    pub im: String,
    pub precision_bits: u32,
}

impl ComplexString {
    pub fn from_value(z: &BigComplex) -> Self {
        ComplexString {
            re: float_string(z.re()),
            im: float_string(z.im()),
            precision_bits: z.prec(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct PolynomialReport {
    /// Coefficients in descending degree, exact decimal integers.
    pub coefficients_desc: Vec<String>,
    pub degree: usize,
    pub residual: f64,
    pub monic: bool,
    pub constant_is_unit: bool,
    pub irreducibility: String,
}

impl PolynomialReport {
    pub fn new(p: &IntegerPolynomial) -> Self {
        let irr = match crate::minpoly::irreducibility_probe(p) {
            crate::minpoly::IrreducibilityProbe::Irreducible(cert) => match cert {
                crate::minpoly::Certificate::IrreducibleModP { p } => {
                    format!("irreducible (mod {p})")
                }
                crate::minpoly::Certificate::DegreePattern { .. } => {
                    "irreducible (degree patterns)".to_string()
                }
            },
            crate::minpoly::IrreducibilityProbe::Reducible(w) => format!("reducible ({w:?})"),
            crate::minpoly::IrreducibilityProbe::Inconclusive { .. } => "inconclusive".to_string(),
        };
        PolynomialReport {
            coefficients_desc: p.coefficients.iter().rev().map(|c| c.to_string()).collect(),
            degree: p.degree(),
            residual: p.residual,
            monic: p.monic,
            constant_is_unit: crate::minpoly::unit_check(p),
            irreducibility: irr,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub margin: Option<String>,
}

impl Check {
    pub fn new(name: impl Into<String>, pass: bool) -> Self {
        Check { name: name.into(), pass, margin: None }
    }

    pub fn with_margin(name: impl Into<String>, pass: bool, margin: &Float) -> Self {
        Check { name: name.into(), pass, margin: Some(float_string(margin)) }
    }
}

/// Top-level report printed by every subcommand.
#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub command: String,
    pub inputs: serde_json::Value,
    pub outputs: serde_json::Value,
    pub checks: Vec<Check>,
    pub precision_bits: u32,
    pub guard_bits: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u128>,
}

impl RunReport {
    pub fn new(command: &str, cfg: &EvalConfig) -> Self {
        RunReport {
            command: command.to_string(),
            inputs: serde_json::Value::Null,
            outputs: serde_json::Value::Null,
            checks: vec![],
            precision_bits: cfg.precision_bits(),
            guard_bits: cfg.guard_bits(),
            timing_ms: None,
        }
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
