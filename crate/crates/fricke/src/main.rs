//! Command-line front end: evaluation, invariants, minimal polynomials and
//! verification suites, reporting JSON on stdout.

use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rug::{Float, Rational};
use serde_json::json;

use fricke::cm::{field_from_discriminant, reduced_forms, QuadField};
use fricke::error::Error;
use fricke::fricke_family::{
    sl2_compatibility_residual, FamilyKind, GLMatrix,
};
use fricke::galois::{conjugates_over_k, ModularUnitExpr};
use fricke::invariants::{
    check_magnitude_bounds, corollary_bound, eval_dn, fricke_invariant, quotient_invariant,
    siegel_ramachandra,
};
use fricke::minpoly::{minimal_polynomial, unit_check};
use fricke::modular::{
    dedekind_eta, delta, eisenstein_g2, eisenstein_g3, fricke as fricke_fn, j_invariant, siegel,
    wp, IndexVector,
};
use fricke::numerics::{BigComplex, EvalConfig};
use fricke::report::{Check, ComplexString, PolynomialReport, RunReport};

#[derive(Parser)]
#[command(name = "fricke", version, about = "Siegel/Fricke modular units and class-field invariants")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Precision {
    /// Target precision in bits
    #[arg(long, default_value_t = 192)]
    prec_bits: u32,
    /// Guard bits for intermediate computation
    #[arg(long, default_value_t = 24)]
    guard_bits: u32,
    /// Cap on series length (default: chosen from the truncation bound)
    #[arg(long)]
    max_terms: Option<usize>,
    /// Include wall-clock timing in the report (makes output non-reproducible)
    #[arg(long, default_value_t = false)]
    timing: bool,
}

impl Precision {
    fn config(&self) -> EvalConfig {
        EvalConfig::new(self.prec_bits, self.guard_bits, self.max_terms)
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum EvalFunction {
    Eta,
    Siegel,
    Wp,
    Fricke,
    J,
    Delta,
    G2,
    G3,
}

#[derive(Clone, Copy, ValueEnum)]
enum InvariantKindArg {
    Fricke,
    #[value(name = "siegel12N", alias = "siegel12n")]
    Siegel12N,
    Quotient,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExprKind {
    Quotient,
    #[value(name = "siegel12N", alias = "siegel12n")]
    Siegel12N,
}

#[derive(Clone, Copy, ValueEnum)]
enum OverField {
    K,
    #[value(name = "HK", alias = "hk")]
    Hk,
}

#[derive(Clone, Copy, ValueEnum)]
enum VerifySuite {
    Bounds,
    #[value(name = "dN", alias = "dn")]
    DN,
    Axioms,
    Example,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a modular function at a point
    Eval {
        function: EvalFunction,
        /// Index vector a/N,b/N (required for siegel, wp, fricke)
        #[arg(long)]
        v: Option<String>,
        /// Evaluation point as a rational complex "re+imi", e.g. "1/2+2i"
        #[arg(long)]
        tau: Option<String>,
        /// Evaluate at tau_K of this fundamental discriminant
        #[arg(long, allow_hyphen_values = true)]
        disc: Option<i64>,
        /// Evaluate at the root of this form A,B,C of discriminant disc
        #[arg(long)]
        form: Option<String>,
        #[command(flatten)]
        precision: Precision,
    },
    /// Evaluate a class-field invariant
    Invariant {
        kind: InvariantKindArg,
        #[arg(long, allow_hyphen_values = true)]
        disc: i64,
        #[arg(short = 'N', long)]
        level: i64,
        /// Ray class as s,t for the generator s tau_K + t
        #[arg(long)]
        class: Option<String>,
        #[command(flatten)]
        precision: Precision,
    },
    /// Minimal polynomial of an invariant over K or over H_K
    Minpoly {
        #[arg(long, allow_hyphen_values = true)]
        disc: i64,
        #[arg(short = 'N', long)]
        level: i64,
        #[arg(long, value_enum)]
        expr: ExprKind,
        #[arg(long, value_enum, default_value = "K")]
        over: OverField,
        #[command(flatten)]
        precision: Precision,
    },
    /// Run a verification suite
    Verify {
        suite: VerifySuite,
        #[arg(long, allow_hyphen_values = true)]
        disc: Option<i64>,
        /// Level or comma-separated list of levels
        #[arg(short = 'N', long)]
        level: Option<String>,
        #[command(flatten)]
        precision: Precision,
    },
}

fn parse_vector(s: &str) -> Result<IndexVector, String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 2 {
        return Err(format!("expected a/N,b/N, got {s}"));
    }
    let r1: Rational = parts[0].trim().parse().map_err(|e| format!("bad rational: {e}"))?;
    let r2: Rational = parts[1].trim().parse().map_err(|e| format!("bad rational: {e}"))?;
    IndexVector::from_rationals(&r1, &r2).map_err(|e| e.to_string())
}

/// Parse "a+bi" with rational a, b ("i", "-i", "3/2i", "1/3-2i", "2").
fn parse_tau(s: &str, cfg: &EvalConfig) -> Result<BigComplex, String> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let (re, im) = parse_complex_rational(&s)?;
    Ok(fricke::numerics::tau_from_rationals(&re, &im, cfg))
}

fn parse_complex_rational(s: &str) -> Result<(Rational, Rational), String> {
    let bad = |s: &str| format!("cannot parse complex rational: {s}");
    if let Some(body) = s.strip_suffix('i') {
        // split into real and imaginary at the last +/- that is not leading
        // and not inside a fraction
        let mut split = None;
        for (idx, c) in body.char_indices().skip(1) {
            if c == '+' || c == '-' {
                split = Some(idx);
            }
        }
        match split {
            Some(idx) => {
                let re: Rational = body[..idx].parse().map_err(|_| bad(s))?;
                let ims = &body[idx..];
                let im: Rational = match ims {
                    "+" | "-" => format!("{ims}1").parse().map_err(|_| bad(s))?,
                    _ => ims.parse().map_err(|_| bad(s))?,
                };
                Ok((re, im))
            }
            None => {
                let im: Rational = match body {
                    "" => Rational::from(1),
                    "-" => Rational::from(-1),
                    _ => body.parse().map_err(|_| bad(s))?,
                };
                Ok((Rational::new(), im))
            }
        }
    } else {
        let re: Rational = s.parse().map_err(|_| bad(s))?;
        Ok((re, Rational::new()))
    }
}

fn parse_form(s: &str) -> Result<(i64, i64, i64), String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 3 {
        return Err(format!("expected A,B,C, got {s}"));
    }
    let nums: Result<Vec<i64>, _> = parts.iter().map(|p| p.trim().parse::<i64>()).collect();
    let nums = nums.map_err(|e| format!("bad integer: {e}"))?;
    Ok((nums[0], nums[1], nums[2]))
}

fn parse_class(s: &str) -> Result<(i64, i64), String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 2 {
        return Err(format!("expected s,t, got {s}"));
    }
    let s0 = parts[0].trim().parse::<i64>().map_err(|e| e.to_string())?;
    let t0 = parts[1].trim().parse::<i64>().map_err(|e| e.to_string())?;
    Ok((s0, t0))
}

fn error_code(e: &Error) -> u8 {
    match e {
        Error::NotFundamental => 3,
        Error::ExcludedField => 4,
        Error::NotCoprime => 5,
        Error::RoundingFailure { .. } => 6,
        _ => 7,
    }
}

fn fail(msg: &str, code: u8) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(code)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err((msg, code)) => fail(&msg, code),
    }
}

type CmdResult = Result<ExitCode, (String, u8)>;

fn lift_err<T>(r: Result<T, Error>) -> Result<T, (String, u8)> {
    r.map_err(|e| (e.to_string(), error_code(&e)))
}

fn run(cli: Cli) -> CmdResult {
    match cli.command {
        Command::Eval { function, v, tau, disc, form, precision } => {
            cmd_eval(function, v, tau, disc, form, precision)
        }
        Command::Invariant { kind, disc, level, class, precision } => {
            cmd_invariant(kind, disc, level, class, precision)
        }
        Command::Minpoly { disc, level, expr, over, precision } => {
            cmd_minpoly(disc, level, expr, over, precision)
        }
        Command::Verify { suite, disc, level, precision } => {
            cmd_verify(suite, disc, level, precision)
        }
    }
}

fn resolve_point(
    tau: Option<String>,
    disc: Option<i64>,
    form: Option<String>,
    cfg: &EvalConfig,
) -> Result<(BigComplex, serde_json::Value), (String, u8)> {
    match (tau, disc) {
        (Some(t), None) => {
            let point = parse_tau(&t, cfg).map_err(|m| (m, 2))?;
            Ok((point, json!({ "tau": t })))
        }
        (None, Some(d)) => {
            let field = lift_err(field_from_discriminant(d))?;
            match form {
                Some(fs) => {
                    let (a, b, c) = parse_form(&fs).map_err(|m| (m, 2))?;
                    let q = reduced_forms(d)
                        .ok()
                        .and_then(|forms| forms.into_iter().find(|f| (f.a, f.b, f.c) == (a, b, c)))
                        .ok_or_else(|| (format!("({a},{b},{c}) is not a reduced form of {d}"), 2))?;
                    Ok((q.tau(cfg), json!({ "disc": d, "form": fs })))
                }
                None => Ok((field.tau(cfg), json!({ "disc": d }))),
            }
        }
        _ => Err(("exactly one of --tau or --disc is required".to_string(), 2)),
    }
}

fn cmd_eval(
    function: EvalFunction,
    v: Option<String>,
    tau: Option<String>,
    disc: Option<i64>,
    form: Option<String>,
    precision: Precision,
) -> CmdResult {
    let start = Instant::now();
    let cfg = precision.config();
    let (point, input_echo) = resolve_point(tau, disc, form, &cfg)?;
    let needs_vector = matches!(function, EvalFunction::Siegel | EvalFunction::Wp | EvalFunction::Fricke);
    let vector = match (&v, needs_vector) {
        (Some(s), true) => Some(parse_vector(s).map_err(|m| (m, 2))?),
        (None, true) => return Err(("this function needs --v a/N,b/N".to_string(), 2)),
        (_, false) => None,
    };
    let q_abs = lift_err(fricke::numerics::nome(&point, &cfg))?.abs();
    let terms = lift_err(fricke::numerics::series_truncation_length(&q_abs, &cfg))?;
    let value = lift_err(match function {
        EvalFunction::Eta => dedekind_eta(&point, &cfg),
        EvalFunction::Siegel => siegel(&vector.unwrap(), &point, &cfg),
        EvalFunction::Wp => wp(&vector.unwrap(), &point, &cfg),
        EvalFunction::Fricke => fricke_fn(&vector.unwrap(), &point, &cfg),
        EvalFunction::J => j_invariant(&point, &cfg),
        EvalFunction::Delta => delta(&point, &cfg),
        EvalFunction::G2 => eisenstein_g2(&point, &cfg),
        EvalFunction::G3 => eisenstein_g3(&point, &cfg),
    })?;

    let mut report = RunReport::new("eval", &cfg);
    report.inputs = json!({
        "function": format!("{:?}", function as u8),
        "point": input_echo,
        "v": v,
    });
    report.outputs = json!({
        "value": ComplexString::from_value(&value),
        "series_terms": terms,
        "abs_q": fricke::report::float_string(&q_abs),
    });
    if precision.timing {
        report.timing_ms = Some(start.elapsed().as_millis());
    }
    println!("{}", report.to_json());
    Ok(ExitCode::SUCCESS)
}

fn cmd_invariant(
    kind: InvariantKindArg,
    disc: i64,
    level: i64,
    class: Option<String>,
    precision: Precision,
) -> CmdResult {
    let start = Instant::now();
    let cfg = precision.config();
    if level < 2 {
        return Err(("level must be at least 2".to_string(), 2));
    }
    let field = lift_err(field_from_discriminant(disc))?;
    let alpha = match &class {
        Some(s) => {
            let (cs, ct) = parse_class(s).map_err(|m| (m, 2))?;
            lift_err(fricke::cm::element_to_matrix(&field, cs, ct, level))?
        }
        None => GLMatrix::identity(level),
    };

    let mut report = RunReport::new("invariant", &cfg);
    report.inputs = json!({
        "disc": disc, "level": level, "class": class,
    });
    let mut warnings: Vec<String> = vec![];
    let value = match kind {
        InvariantKindArg::Fricke => lift_err(fricke_invariant(&field, level, &alpha, &cfg))?,
        InvariantKindArg::Siegel12N => lift_err(siegel_ramachandra(&field, level, &alpha, &cfg))?,
        InvariantKindArg::Quotient => {
            let inv = lift_err(quotient_invariant(&field, level, &cfg))?;
            let h = inv.hypotheses;
            for (ok, name) in [
                (h.n_even_ge_4, "N >= 4 and even"),
                (h.disc_zero_mod_4, "d_K = 0 mod 4"),
                (h.disc_large_enough, "|d_K| >= 4 N^(4/3)"),
            ] {
                report.checks.push(Check::new(format!("hypothesis: {name}"), ok));
                if !ok {
                    warnings.push(format!("hypothesis violated: {name}"));
                }
            }
            inv.value
        }
    };
    report.outputs = json!({
        "value": ComplexString::from_value(&value),
        "kind": match kind {
            InvariantKindArg::Fricke => "fricke",
            InvariantKindArg::Siegel12N => "siegel12N",
            InvariantKindArg::Quotient => "quotient",
        },
        "class_matrix": format!("{alpha}"),
        "warnings": warnings,
    });
    if precision.timing {
        report.timing_ms = Some(start.elapsed().as_millis());
    }
    println!("{}", report.to_json());
    for w in report.checks.iter().filter(|c| !c.pass) {
        eprintln!("warning: {}", w.name);
    }
    Ok(ExitCode::SUCCESS)
}

fn orbit_values(
    field: &QuadField,
    level: i64,
    expr: &ModularUnitExpr,
    over: OverField,
    cfg: &EvalConfig,
) -> Result<Vec<BigComplex>, (String, u8)> {
    match over {
        OverField::Hk => lift_err(fricke::galois::conjugates_over_hk(expr, field, level, cfg)),
        OverField::K => Ok(lift_err(conjugates_over_k(expr, field, level, cfg))?
            .into_iter()
            .map(|c| c.value)
            .collect()),
    }
}

fn cmd_minpoly(
    disc: i64,
    level: i64,
    expr: ExprKind,
    over: OverField,
    precision: Precision,
) -> CmdResult {
    let start = Instant::now();
    let cfg = precision.config();
    let field = lift_err(field_from_discriminant(disc))?;
    let e = lift_err(match expr {
        ExprKind::Quotient => ModularUnitExpr::quotient_expr(level),
        ExprKind::Siegel12N => ModularUnitExpr::siegel_power(
            &IndexVector::new(0, 1, level).map_err(|err| (err.to_string(), 2u8)).unwrap(),
            12 * level,
        ),
    })?;
    let values = orbit_values(&field, level, &e, over, &cfg)?;
    let poly = lift_err(minimal_polynomial(&values))?;

    let mut report = RunReport::new("minpoly", &cfg);
    report.inputs = json!({
        "disc": disc, "level": level,
        "expr": match expr { ExprKind::Quotient => "quotient", ExprKind::Siegel12N => "siegel12N" },
        "over": match over { OverField::K => "K", OverField::Hk => "HK" },
    });
    report.outputs = json!({
        "polynomial": PolynomialReport::new(&poly),
        "expression": e.to_string(),
        "orbit_size": values.len(),
    });
    report.checks.push(Check::new("residual < 0.25", poly.residual < 0.25));
    if precision.timing {
        report.timing_ms = Some(start.elapsed().as_millis());
    }
    println!("{}", report.to_json());
    Ok(ExitCode::SUCCESS)
}

fn parse_levels(level: Option<String>, default: &[i64]) -> Result<Vec<i64>, (String, u8)> {
    match level {
        None => Ok(default.to_vec()),
        Some(s) => s
            .split(',')
            .map(|p| p.trim().parse::<i64>().map_err(|e| (format!("bad level: {e}"), 2u8)))
            .collect(),
    }
}

fn cmd_verify(
    suite: VerifySuite,
    disc: Option<i64>,
    level: Option<String>,
    precision: Precision,
) -> CmdResult {
    let start = Instant::now();
    let cfg = precision.config();
    let mut report = RunReport::new("verify", &cfg);
    report.inputs = json!({
        "suite": match suite {
            VerifySuite::Bounds => "bounds",
            VerifySuite::DN => "dN",
            VerifySuite::Axioms => "axioms",
            VerifySuite::Example => "example",
        },
        "disc": disc,
        "level": level,
    });

    match suite {
        VerifySuite::Bounds => {
            let d = disc.unwrap_or(-40);
            let levels = parse_levels(level, &[4])?;
            let field = lift_err(field_from_discriminant(d))?;
            for n in levels {
                let b = lift_err(check_magnitude_bounds(&field, n, &cfg))?;
                if !b.hypotheses.all() {
                    eprintln!("warning: hypothesis violated for d={d}, N={n}");
                    report.checks.push(Check::new(format!("hypotheses hold (d={d}, N={n})"), false));
                }
                report.checks.push(Check::with_margin(
                    format!("(0,1/N) strictly minimal (d={d}, N={n})"),
                    b.lower_bound_holds,
                    &b.lower_margin,
                ));
                report.checks.push(Check::with_margin(
                    format!("(1/2,1/2+1/N) maximal (d={d}, N={n})"),
                    b.upper_bound_holds,
                    &b.upper_margin,
                ));
            }
        }
        VerifySuite::DN => {
            let d = disc.unwrap_or(-40);
            let levels = parse_levels(level, &[2, 3, 4, 5])?;
            let field = lift_err(field_from_discriminant(d))?;
            for n in levels {
                let v = lift_err(eval_dn(&field, n, &cfg))?;
                let c = lift_err(corollary_bound(&field, n))?;
                let nonzero = v.abs() > Float::with_val(64, 1e-30);
                report.checks.push(Check::with_margin(
                    format!("d_{n}(tau_K) != 0 (d={d}; h={}, l={}, bound={})", c.class_number, c.ell_n, c.bound),
                    nonzero,
                    &v.abs(),
                ));
            }
        }
        VerifySuite::Axioms => {
            let d = disc.unwrap_or(-40);
            let field = lift_err(field_from_discriminant(d))?;
            let tau = field.tau(&cfg);
            // (F2): dependence only on +-v
            for (a, b, n) in [(0i64, 1i64, 4i64), (1, 2, 4), (1, 1, 3)] {
                let v = lift_err(IndexVector::new(a, b, n))?;
                let g = lift_err(siegel(&v, &tau, &cfg))?.powi(12 * n);
                let gm = lift_err(siegel(&v.neg(), &tau, &cfg))?.powi(12 * n);
                let rel = (g.sub(&gm).abs() / g.abs()).to_f64();
                report.checks.push(Check::new(
                    format!("(F2) g_(-v)^12N = g_v^12N at v=({a}/{n},{b}/{n})"),
                    rel < 1e-40,
                ));
                let f = lift_err(fricke_fn(&v, &tau, &cfg))?;
                let fm = lift_err(fricke_fn(&v.neg(), &tau, &cfg))?;
                let rel = (f.sub(&fm).abs() / f.abs()).to_f64();
                report.checks.push(Check::new(
                    format!("(F2) f_(-v) = f_v at v=({a}/{n},{b}/{n})"),
                    rel < 1e-40,
                ));
            }
            // (F3) restricted to SL2: compatibility with composition
            let point = BigComplex::from_f64(cfg.working_prec(), 1.0 / 3.0, 1.0);
            for gamma in [[1i64, 1, 0, 1], [0, -1, 1, 0], [1, 0, 1, 1], [2, 1, 1, 1]] {
                for (a, b, n) in [(0i64, 1i64, 4i64), (1, 3, 4)] {
                    let v = lift_err(IndexVector::new(a, b, n))?;
                    for kind in [FamilyKind::Fricke, FamilyKind::Siegel12N] {
                        let r = lift_err(sl2_compatibility_residual(&gamma, &v, &point, kind, &cfg))?;
                        let label = match kind {
                            FamilyKind::Fricke => "fricke",
                            FamilyKind::Siegel12N => "siegel12N",
                        };
                        report.checks.push(Check::with_margin(
                            format!("(F3) {label} gamma={gamma:?} v=({a}/{n},{b}/{n})"),
                            r.clone().to_f64() < 1e-40,
                            &r,
                        ));
                    }
                }
            }
        }
        VerifySuite::Example => {
            verify_example(&mut report)?;
        }
    }

    if precision.timing {
        report.timing_ms = Some(start.elapsed().as_millis());
    }
    println!("{}", report.to_json());
    for c in &report.checks {
        eprintln!("[{}] {}", if c.pass { "PASS" } else { "FAIL" }, c.name);
    }
    if report.all_pass() {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(1))
    }
}

/// Reproduce both minimal polynomials of the worked example for
/// K = Q(sqrt(-10)), n = 4 O_K.
fn verify_example(report: &mut RunReport) -> Result<(), (String, u8)> {
    let field = lift_err(field_from_discriminant(-40))?;

    // small-coefficient polynomial of the quotient invariant, 192 bits
    let cfg = EvalConfig::new(192, 24, None);
    let e = lift_err(ModularUnitExpr::quotient_expr(4))?;
    let values = orbit_values(&field, 4, &e, OverField::K, &cfg)?;
    let poly = lift_err(minimal_polynomial(&values))?;
    let expected: Vec<i64> = vec![1, -72, 12, 72, 38, 72, 12, -72, 1];
    let got: Vec<String> = poly.coefficients.iter().rev().map(|c| c.to_string()).collect();
    let ok = got == expected.iter().map(|c| c.to_string()).collect::<Vec<_>>();
    report.checks.push(Check::new("quotient minimal polynomial (192 bits)", ok));
    report.checks.push(Check::new("quotient residual < 1e-20", poly.residual < 1e-20));
    report.checks.push(Check::new("quotient constant is a unit", unit_check(&poly)));

    // giant polynomial of g_(0,1/4)^48, 320 bits
    let cfg320 = EvalConfig::new(320, 24, None);
    let e48 = lift_err(ModularUnitExpr::siegel_power(
        &IndexVector::new(0, 1, 4).map_err(|err| (err.to_string(), 2u8)).unwrap(),
        48,
    ))?;
    let values = orbit_values(&field, 4, &e48, OverField::K, &cfg320)?;
    let poly48 = lift_err(minimal_polynomial(&values))?;
    let expected48 = [
        "1",
        "-181195540256817728",
        "-5775663114562606906112",
        "-27035464691637377457360896",
        "541339076030741096821545656320",
        "-124937615343087944795342556102656",
        "15661918473435227713231818559848448",
        "-32831816404527400323644148540243968",
        "16777216",
    ];
    let got48: Vec<String> = poly48.coefficients.iter().rev().map(|c| c.to_string()).collect();
    report.checks.push(Check::new(
        "Siegel-Ramachandra polynomial (320 bits)",
        got48 == expected48,
    ));
    report.checks.push(Check::new(
        "Siegel-Ramachandra constant is 2^24",
        poly48.constant().clone() == 16777216,
    ));

    report.outputs = json!({
        "quotient_polynomial": PolynomialReport::new(&poly),
        "siegel_polynomial": PolynomialReport::new(&poly48),
    });
    Ok(())
}
