//! The `qg` command line: normal ordering, verification certificates and matrices.

pub mod parse;

use crate::braid::{braid_check, hecke_polynomial, r21, rll_check, rtt_check, rtt_span_check, ybe_report};
use crate::error::Error;
use crate::hopf::{
    coassociativity_check, covariance_check, group_like_check, homomorphism_check, intertwiner_check,
    matrix_coproduct, opposite_coproduct_check, rep_property_check, uq_coproduct_algebra_check, Covariance, Variant,
};
use crate::jordanian::{fun_h_checks, h_zero_limit_check, uh_coproduct_check, uh_fundamental_check};
use crate::ncalg::{confluence_fuzz, inverse_check_2x2, make_preset, presets, t_matrix, NCPolynomial, PRESET_NAMES};
use crate::oscillator::{fock_rep, hamiltonian_spectrum, jordan_schwinger, sector_exactness_check, verify_qboson, verify_su_q2};
use crate::report::Report;
use crate::reps::{
    fundamental_r, l_matrices, parameter_abcd, spin_rep, t1_matrix, universal_r, universal_t, universal_t_vs_t1_check,
    verify_slq2, Spin,
};
use crate::scalars::{rational_sqrt, FieldElement, VarStyle};
use crate::tensor::{Field, FieldMatrix, Matrix, Ring};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::Serialize;
use std::io::Write;

pub const ENGINE_VERSION: &str = concat!("qgalg ", env!("CARGO_PKG_VERSION"));

/// Verification targets, in the order `verify all` runs them.
pub const TARGETS: &[&str] = &[
    "confluence",
    "covariance",
    "rtt",
    "rep-property",
    "universal-t",
    "intertwiner",
    "ybe",
    "braid",
    "rll",
    "qboson",
    "su_q2",
    "jordanian",
];

/// Objects printed by `qg matrix`.
pub const OBJECTS: &[&str] = &["rmatrix", "spinrep", "lmatrices", "universal-t", "fock", "sector"];

#[derive(Parser, Debug)]
#[command(name = "qg", version, about = "Exact checks for quantum groups and q-deformed algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Normal-order an expression in a preset algebra.
    Normalize {
        #[arg(long, default_value = "funq")]
        preset: String,
        expr: String,
        #[command(flatten)]
        out: OutputOpts,
        /// Spot-evaluate coefficients, e.g. `q=0.7`.
        #[arg(long)]
        eval: Option<String>,
    },
    /// Run a verification target and print its certificate.
    Verify {
        target: String,
        #[command(flatten)]
        params: Params,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Print an exact matrix object.
    Matrix {
        object: String,
        #[command(flatten)]
        params: Params,
        #[command(flatten)]
        out: OutputOpts,
        /// Spot-evaluate entries, e.g. `q=0.7`.
        #[arg(long)]
        eval: Option<String>,
    },
}

#[derive(Args, Debug, Clone, Default)]
pub struct Params {
    /// Comma-separated spins, e.g. `1/2,1`.
    #[arg(long)]
    pub spins: Option<String>,
    #[arg(long)]
    pub j: Option<String>,
    #[arg(long)]
    pub levels: Option<usize>,
    #[arg(long)]
    pub strands: Option<usize>,
    #[arg(long)]
    pub total: Option<usize>,
    /// `T` or `T1`.
    #[arg(long)]
    pub rep: Option<String>,
    #[arg(long)]
    pub preset: Option<String>,
    #[arg(long)]
    pub deformed: bool,
}

#[derive(Args, Debug, Clone, Default)]
struct OutputOpts {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Also write the JSON output to this file.
    #[arg(long)]
    out: Option<std::path::PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, Default, PartialEq, Eq)]
enum Format {
    #[default]
    Text,
    Json,
}

fn spins(params: &Params) -> Result<(Spin, Spin), Error> {
    let Some(s) = &params.spins else {
        return Ok((Spin::HALF, Spin::HALF));
    };
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    match parts.as_slice() {
        [a, b] => Ok((Spin::parse(a)?, Spin::parse(b)?)),
        _ => Err(Error::Usage(format!("--spins expects two comma-separated spins, got {s}"))),
    }
}

fn one_spin(params: &Params) -> Result<Spin, Error> {
    params.j.as_deref().map(Spin::parse).unwrap_or(Ok(Spin::HALF))
}

fn equal_spins(params: &Params, what: &str) -> Result<Spin, Error> {
    let (a, b) = spins(params)?;
    if a != b {
        return Err(Error::Usage(format!("{what} needs equal spins, got {a},{b}")));
    }
    Ok(a)
}

/// Runs one target.
pub fn verify(target: &str, params: &Params) -> Result<Report, Error> {
    let mut r = Report::new(target);
    match target {
        "confluence" => {
            let names: Vec<String> = match &params.preset {
                Some(p) => vec![p.clone()],
                None => PRESET_NAMES.iter().map(|s| s.to_string()).collect(),
            };
            for name in names {
                let rs = make_preset(&name)?;
                r.absorb(&format!("{}: ", rs.name()), confluence_fuzz(&rs, 6, 500, 1));
                if rs.det().is_some() {
                    r.absorb(&format!("{} det = 1: ", rs.name()), confluence_fuzz(rs.quotient()?, 6, 500, 2));
                }
            }
        }
        "covariance" => {
            for (label, kind) in [
                ("", Covariance::General),
                ("diagonal: ", Covariance::Diagonal),
                ("q = 1: ", Covariance::Classical),
                ("opposite-algebra inverse (diagnostic): ", Covariance::OppositeInverse),
            ] {
                r.absorb(label, covariance_check(kind)?);
            }
        }
        "rtt" => {
            let funq = presets::fun_q_sl2();
            let rm = fundamental_r();
            r.absorb("", rtt_check(&rm, &funq)?);
            r.absorb("span: ", rtt_span_check(&rm)?);
            let rt = r21(&rm)?;
            r.note("diagnostic: R21 = P R P satisfies R21 T1 T2 = T2 T1 R21");
            r.absorb("R21 (diagnostic): ", rtt_check(&rt, &funq)?);
            r.absorb("R21 span (diagnostic): ", rtt_span_check(&rt)?);
            r.push_detected("fun_h T violates RTT", !rtt_check(&rt, &presets::fun_h_sl2())?.passed());
        }
        "rep-property" => {
            let rs = presets::fun_q_sl2();
            let cm = matrix_coproduct(&rs)?;
            let abcd = ["A", "B", "C", "D"].map(|n| rs.gen(n).expect("fun_q generator"));
            match params.rep.as_deref().unwrap_or("T") {
                "T" => {
                    let t = t_matrix(&rs)?;
                    let t = Matrix::from_rows(t.iter().map(|row| row.to_vec()).collect())?;
                    r.absorb("T ", rep_property_check(&t, &cm, &rs)?);
                    r.absorb("", homomorphism_check(&cm, &rs)?);
                    r.absorb("", coassociativity_check(&cm, &rs)?);
                    r.absorb("", group_like_check(&cm, &rs)?);
                    r.push_bool("T^-1 T = T T^-1 = 1 (det = 1)", inverse_check_2x2(&rs)?, true);
                }
                "T1" => {
                    r.absorb("T1 ", rep_property_check(&t1_matrix(&rs, &abcd, true), &cm, &rs)?);
                    let bad = rep_property_check(&t1_matrix(&rs, &abcd, false), &cm, &rs)?;
                    r.push_detected("T1 without square roots", !bad.passed());
                }
                other => return Err(Error::Usage(format!("--rep must be T or T1, got {other}"))),
            }
        }
        "universal-t" => r.absorb("", universal_t_vs_t1_check()?),
        "intertwiner" => {
            let (a, b) = spins(params)?;
            let (ra, rb) = (spin_rep(a), spin_rep(b));
            r.absorb("", intertwiner_check(&ra, &rb, &universal_r(&ra, &rb)?)?);
            for v in [Variant::Q, Variant::QInverse] {
                r.absorb("", uq_coproduct_algebra_check(&ra, &rb, v)?);
            }
            if a == b {
                r.absorb("", opposite_coproduct_check(&ra)?);
            }
            if a == Spin::HALF && b == Spin::HALF {
                r.push(
                    "universal R = fundamental R",
                    crate::hopf::render_matrix(&universal_r(&ra, &rb)?),
                    crate::hopf::render_matrix(&fundamental_r()),
                );
            }
        }
        "ybe" => {
            let s = equal_spins(params, "ybe")?;
            let rep = spin_rep(s);
            r.absorb("", ybe_report(&universal_r(&rep, &rep)?)?);
        }
        "braid" => {
            let s = equal_spins(params, "braid")?;
            let rep = spin_rep(s);
            let rm = universal_r(&rep, &rep)?;
            r.absorb("", braid_check(&rm, params.strands.unwrap_or(3))?);
            let mp = hecke_polynomial(&rm)?;
            r.note(format!(
                "minimal polynomial of P R, constant term first: [{}]",
                mp.iter().map(|c| c.render(VarStyle::Q)).collect::<Vec<_>>().join(", ")
            ));
        }
        "rll" => {
            let j = one_spin(params)?;
            r.absorb("", rll_check(&spin_rep(j), &fundamental_r())?);
        }
        "qboson" => {
            let d = params.levels.unwrap_or(4);
            r.absorb("", verify_qboson(&fock_rep(d, true)?)?);
            r.absorb("q = 1: ", verify_qboson(&fock_rep(d, false)?)?);
            let sp = hamiltonian_spectrum(&fock_rep(d, false)?)?;
            let interior: Vec<String> = sp.interior.iter().map(|e| e.render(VarStyle::Q)).collect();
            let expect: Vec<String> = (0..d - 1).map(|n| format!("{}/2", 2 * n + 1)).collect();
            r.push("interior spectrum of (aa+ + a+a)/2", interior.join(", "), expect.join(", "));
            r.note(format!("top level eigenvalue {} is a truncation artifact", sp.top.render(VarStyle::Q)));
        }
        "su_q2" => {
            let total = params.total.unwrap_or(2);
            let deformed = jordan_schwinger(total, true)?;
            r.absorb("", verify_su_q2(&deformed, true)?);
            r.absorb("", verify_slq2(&deformed.as_spin_rep())?);
            r.absorb("", verify_su_q2(&jordan_schwinger(total, false)?, false)?);
            r.absorb("", sector_exactness_check(total, true)?);
        }
        "jordanian" => {
            r.absorb("", fun_h_checks()?);
            r.absorb("", uh_fundamental_check()?);
            r.absorb("", uh_coproduct_check()?);
            r.absorb("", h_zero_limit_check()?);
        }
        "all" => {
            for t in TARGETS {
                r.absorb(&format!("{t}: "), verify(t, &Params::default())?);
            }
        }
        other => return Err(Error::UnknownTarget(other.to_string())),
    }
    Ok(r)
}

/// A named matrix with rendered entries.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RenderedMatrix {
    pub name: String,
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<String>>,
}

fn rendered<R: Ring>(ring: &R, name: &str, m: &Matrix<R::Elem>) -> RenderedMatrix {
    RenderedMatrix {
        name: name.into(),
        rows: m.rows(),
        cols: m.cols(),
        entries: m.render(ring),
    }
}

/// Builds the matrices of one object. Field-valued matrices are also returned
/// raw so they can be spot-evaluated.
pub fn matrix_object(object: &str, params: &Params) -> Result<Vec<(RenderedMatrix, Option<FieldMatrix>)>, Error> {
    let f = &Field::Q;
    let field = |name: &str, m: FieldMatrix| (rendered(f, name, &m), Some(m));
    Ok(match object {
        "rmatrix" => {
            let (a, b) = spins(params)?;
            vec![field("R", universal_r(&spin_rep(a), &spin_rep(b))?)]
        }
        "spinrep" => {
            let rep = spin_rep(one_spin(params)?);
            vec![field("X0", rep.x0), field("X+", rep.xp), field("X-", rep.xm)]
        }
        "lmatrices" => {
            let (plus, minus) = l_matrices(&spin_rep(one_spin(params)?))?;
            vec![field("L+", plus), field("L-", minus)]
        }
        "universal-t" => {
            let rs = presets::parameter_algebra();
            let t = universal_t(&spin_rep(one_spin(params)?))?;
            let mut out = vec![(rendered(&rs, "T", &t), None)];
            if one_spin(params)? == Spin::ONE {
                let abcd = parameter_abcd(&rs);
                out.push((rendered(&rs, "T1(A, B, C, D)", &t1_matrix(&rs, &abcd, true)), None));
            }
            out
        }
        "fock" => {
            let fr = fock_rep(params.levels.unwrap_or(3), params.deformed)?;
            vec![field("A", fr.a), field("A+", fr.adag), field("N", fr.n)]
        }
        "sector" => {
            let sr = jordan_schwinger(params.total.unwrap_or(1), params.deformed)?;
            vec![field("J0", sr.j0), field("J+", sr.jplus), field("J-", sr.jminus)]
        }
        other => return Err(Error::UnknownObject(other.to_string())),
    })
}

/// `q=0.7`, `s=3/4` or `h=1/2` as the value of the base variable `s` (or `h`).
/// Exact when the base value is rational.
#[derive(Clone, Debug, PartialEq)]
pub enum EvalPoint {
    Exact(BigRational),
    Approx(f64),
}

pub fn parse_eval(spec: &str) -> Result<EvalPoint, Error> {
    let bad = || Error::Usage(format!("--eval expects q=<number>, s=<number> or h=<number>, got {spec}"));
    let (key, value) = spec.split_once('=').ok_or_else(bad)?;
    let value = parse_decimal(value.trim()).ok_or_else(bad)?;
    match key.trim() {
        "s" | "h" => Ok(EvalPoint::Exact(value)),
        "q" => Ok(match rational_sqrt(&value) {
            Some(s) => EvalPoint::Exact(s),
            None => EvalPoint::Approx(value.to_f64().ok_or_else(bad)?.sqrt()),
        }),
        _ => Err(bad()),
    }
}

/// `3`, `-0.75` or `7/10` as an exact rational.
fn parse_decimal(s: &str) -> Option<BigRational> {
    if let Some((n, d)) = s.split_once('/') {
        let (n, d): (BigInt, BigInt) = (n.trim().parse().ok()?, d.trim().parse().ok()?);
        return (d != BigInt::from(0)).then(|| BigRational::new(n, d));
    }
    let (neg, body) = match s.strip_prefix('-') {
        Some(b) => (true, b),
        None => (false, s),
    };
    let (int, frac) = body.split_once('.').unwrap_or((body, ""));
    if int.is_empty() && frac.is_empty() || !int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let digits: BigInt = format!("{int}{frac}").parse().ok()?;
    let v = BigRational::new(digits, BigInt::from(10).pow(frac.len() as u32));
    Some(if neg { -v } else { v })
}

pub fn eval_element(x: &FieldElement, at: &EvalPoint) -> String {
    if let Some(c) = x.as_rational() {
        return c.to_string();
    }
    match at {
        EvalPoint::Exact(s) => match x.evaluate(s) {
            Ok(v) => v.to_string(),
            // radicals at a rational point are generally irrational
            Err(_) => s
                .to_f64()
                .and_then(|sf| x.approx(sf))
                .map(|v| format!("~{v:.6}"))
                .unwrap_or_else(|| "undefined".into()),
        },
        EvalPoint::Approx(s) => x.approx(*s).map(|v| format!("~{v:.6}")).unwrap_or_else(|| "undefined".into()),
    }
}

fn eval_poly(p: &NCPolynomial, rs: &crate::ncalg::RewriteSystem, at: &EvalPoint) -> String {
    if p.is_zero() {
        return "0".into();
    }
    p.terms()
        .map(|(w, c)| {
            let v = eval_element(c, at);
            if w.is_empty() {
                v
            } else {
                format!("({v})*{}", rs.render_word(w))
            }
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

#[derive(Serialize)]
struct Certificate<'a> {
    command: &'a str,
    engine_version: &'a str,
    target: &'a str,
    #[serde(skip_serializing_if = "<[String]>::is_empty")]
    notes: &'a [String],
    checks: &'a [crate::report::Check],
    pass: bool,
}

fn certificate_text(command: &str, r: &Report) -> String {
    let mut s = format!("command: {command}\nengine: {ENGINE_VERSION}\ntarget: {}\n", r.target);
    for n in &r.notes {
        s.push_str(&format!("note: {n}\n"));
    }
    for c in &r.checks {
        if c.pass {
            s.push_str(&format!("PASS {}: {}\n", c.name, c.lhs));
        } else {
            s.push_str(&format!("FAIL {}\n  lhs: {}\n  rhs: {}\n", c.name, c.lhs, c.rhs));
        }
    }
    let passed = r.checks.iter().filter(|c| c.pass).count();
    let verdict = if r.passed() { "PASS" } else { "FAIL" };
    s.push_str(&format!("result: {verdict} ({passed}/{} checks)\n", r.checks.len()));
    s
}

fn emit(out: &mut dyn Write, opts: &OutputOpts, text: String, json: serde_json::Value) -> Result<(), Error> {
    let json_text = serde_json::to_string_pretty(&json).expect("serializable output") + "\n";
    if let Some(path) = &opts.out {
        std::fs::write(path, &json_text).map_err(|e| Error::Usage(format!("cannot write {}: {e}", path.display())))?;
    }
    let body = match opts.format {
        Format::Text => text,
        Format::Json => json_text,
    };
    out.write_all(body.as_bytes())
        .map_err(|e| Error::Usage(format!("cannot write output: {e}")))
}

fn execute(cli: Cli, command_line: &str, out: &mut dyn Write) -> Result<bool, Error> {
    match cli.command {
        Command::Normalize { preset, expr, out: opts, eval } => {
            let rs = make_preset(&preset)?;
            let parsed = parse::parse(&expr, &rs)?;
            let normal = parse::normalize(&expr, &rs)?;
            let mut text = format!("{normal}\n");
            let mut json = serde_json::json!({
                "command": command_line,
                "engine_version": ENGINE_VERSION,
                "preset": rs.name(),
                "input": expr,
                "normal_form": normal,
            });
            if let Some(spec) = eval {
                let at = parse_eval(&spec)?;
                let value = match parsed {
                    parse::Parsed::Poly(p) => eval_poly(&rs.normal_form(&p)?, &rs, &at),
                    parse::Parsed::Tensor { .. } => return Err(Error::Usage("--eval applies to polynomials only".into())),
                };
                text.push_str(&format!("at {spec}: {value}\n"));
                json["eval"] = serde_json::json!({ "at": spec, "value": value });
            }
            emit(out, &opts, text, json)?;
            Ok(true)
        }
        Command::Verify { target, params, out: opts } => {
            let r = verify(&target, &params)?;
            let cert = Certificate {
                command: command_line,
                engine_version: ENGINE_VERSION,
                target: &r.target,
                notes: &r.notes,
                checks: &r.checks,
                pass: r.passed(),
            };
            let json = serde_json::to_value(&cert).expect("serializable certificate");
            emit(out, &opts, certificate_text(command_line, &r), json)?;
            Ok(r.passed())
        }
        Command::Matrix { object, params, out: opts, eval } => {
            let mats = matrix_object(&object, &params)?;
            let at = eval.as_deref().map(parse_eval).transpose()?;
            let mut text = String::new();
            let mut list = Vec::new();
            for (m, raw) in &mats {
                text.push_str(&format!("{} ({}x{}):\n", m.name, m.rows, m.cols));
                for row in &m.entries {
                    text.push_str(&format!("  [{}]\n", row.join(", ")));
                }
                let mut j = serde_json::to_value(m).expect("serializable matrix");
                if let (Some(at), Some(raw)) = (&at, raw) {
                    let ev: Vec<Vec<String>> = (0..raw.rows())
                        .map(|i| (0..raw.cols()).map(|k| eval_element(raw.get(i, k), at)).collect())
                        .collect();
                    text.push_str(&format!("  at {}:\n", eval.as_deref().unwrap_or_default()));
                    for row in &ev {
                        text.push_str(&format!("  [{}]\n", row.join(", ")));
                    }
                    j["eval"] = serde_json::json!(ev);
                }
                list.push(j);
            }
            let json = serde_json::json!({
                "command": command_line,
                "engine_version": ENGINE_VERSION,
                "object": object,
                "matrices": list,
            });
            emit(out, &opts, text, json)?;
            Ok(true)
        }
    }
}

/// Runs the CLI on `args` (including the program name) and returns the exit code:
/// 0 when every check passes, 1 when any fails, 2 on usage, parse or engine errors.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let args: Vec<String> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let command_line = {
        let mut parts = vec!["qg".to_string()];
        parts.extend(args.iter().skip(1).cloned());
        parts.join(" ")
    };
    match execute(cli, &command_line, out) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}
