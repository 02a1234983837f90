//! Acceptance suite: one line per criterion.
//!
//! Criteria 1, 2 and 10 fail on their reference inputs (see README). The suite
//! exits successfully only when every other criterion passes and those three
//! fail in exactly the documented way, so a regression in either direction is
//! caught.

use num_rational::BigRational;
use num_traits::One;
use qgalg::braid::{braid_check, rll_check, rtt_check, rtt_span_check, ybe_check};
use qgalg::hopf::{
    coproduct, covariance_check, group_like_check, homomorphism_check, intertwiner_check, matrix_coproduct,
    opposite_coproduct_check, rep_property_check, uq_coproduct_algebra_check, Covariance, Variant,
};
use qgalg::jordanian::{h_zero_limit_check, uh_coproduct_check, uh_fundamental_check};
use qgalg::ncalg::{confluence_fuzz, inverse_check_2x2, inverse_check_with, presets, NCPolynomial, RewriteSystem};
use qgalg::oscillator::{fock_rep, hamiltonian_spectrum, jordan_schwinger, verify_qboson, verify_su_q2};
use qgalg::qseries::{phi10_exponential_coefficients, q_exponential_coefficients, q_number, QNumberConvention};
use qgalg::report::Report;
use qgalg::reps::{rho, spin_rep, t1_matrix, universal_r, universal_t, Spin};
use qgalg::scalars::FieldElement;
use qgalg::tensor::{Field, FieldMatrix, Matrix, Ring, TensorAlgebra, TensorElement};
use std::time::{Duration, Instant};

type Fe = FieldElement;

/// Failed sub-checks of one criterion. Empty means the criterion passed.
#[derive(Default)]
struct Outcome {
    failed: Vec<String>,
    items: usize,
}

impl Outcome {
    fn check(&mut self, name: impl Into<String>, ok: bool) {
        self.items += 1;
        if !ok {
            self.failed.push(name.into());
        }
    }

    fn report(&mut self, prefix: &str, r: &Report) {
        for c in &r.checks {
            self.check(format!("{prefix}{}", c.name), c.pass);
        }
    }
}

type Run = Result<Outcome, qgalg::Error>;

fn q() -> Fe {
    Fe::q()
}

fn qi() -> Fe {
    Fe::q_pow(-1)
}

/// R written out entry by entry: `q^-1/2 [[q,0,0,0],[0,1,q-q^-1,0],[0,0,1,0],[0,0,0,q]]`.
fn literal_r() -> FieldMatrix {
    let pre = Fe::s().inv().unwrap();
    let z = Fe::zero;
    let rows = vec![
        vec![q(), z(), z(), z()],
        vec![z(), Fe::one(), q() - qi(), z()],
        vec![z(), z(), Fe::one(), z()],
        vec![z(), z(), z(), q()],
    ];
    let rows = rows.into_iter().map(|r| r.into_iter().map(|x| x * &pre).collect()).collect();
    Matrix::from_rows(rows).unwrap()
}

/// `sqrt(1 + q^-2)`, checked by squaring.
fn root_one_plus_q_minus_two() -> Fe {
    let r = Fe::s().inv().unwrap() * rho(2);
    assert_eq!(&r * &r, Fe::one() + Fe::q_pow(-2));
    r
}

/// The 3x3 corepresentation written out from `A, B, C, D` in `rs`.
fn t1_literal(rs: &RewriteSystem, [a, b, c, d]: &[NCPolynomial; 4]) -> Matrix<NCPolynomial> {
    let r = root_one_plus_q_minus_two();
    let m = |x: &NCPolynomial, y: &NCPolynomial| rs.normal_form(&x.free_mul(y)).unwrap();
    let rows = vec![
        vec![m(a, a), m(a, b).scale(&r), m(b, b)],
        vec![m(a, c).scale(&r), m(a, d).add(&m(b, c).scale(&qi())), m(b, d).scale(&r)],
        vec![m(c, c), m(c, d).scale(&r), m(d, d)],
    ];
    Matrix::from_rows(rows).unwrap()
}

fn c1_quantum_plane() -> Run {
    let mut o = Outcome::default();
    let rs = presets::quantum_plane();
    assert_eq!(rs.relations().len(), 6);
    for rel in rs.relations() {
        let diff = rs.normal_form(&rel.lhs.sub(&rel.rhs))?;
        o.check(format!("rule {}", rel.name), diff.is_zero());
    }
    o.report("", &confluence_fuzz(&rs, 6, 500, 11));
    o.report("covariance: ", &covariance_check(Covariance::General)?);
    Ok(o)
}

fn c2_rtt() -> Run {
    let mut o = Outcome::default();
    let r = literal_r();
    let rtt = rtt_check(&r, &presets::fun_q_sl2())?;
    assert_eq!(rtt.checks.len(), 16);
    o.report("rtt ", &rtt);
    o.report("span: ", &rtt_span_check(&r)?);
    Ok(o)
}

fn c3_rep_property() -> Run {
    let mut o = Outcome::default();
    let rs = presets::fun_q_sl2();
    let cm = matrix_coproduct(&rs)?;
    let g = |n: &str| rs.gen(n).unwrap();
    let abcd = [g("A"), g("B"), g("C"), g("D")];
    let t = Matrix::from_rows(vec![vec![g("A"), g("B")], vec![g("C"), g("D")]])?;
    let rt = rep_property_check(&t, &cm, &rs)?;
    o.check("T has 4 entries", rt.checks.len() == 4);
    o.report("T ", &rt);

    let t1 = t1_matrix(&rs, &abcd, true);
    o.check("T1 matches its written form", t1 == t1_literal(&rs, &abcd));
    let r1 = rep_property_check(&t1, &cm, &rs)?;
    o.check("T1 has 9 entries", r1.checks.len() == 9);
    o.report("T1 ", &r1);

    // (T1 . T1)_11 = A^2 (x) A^2 + (1 + q^-2) AB (x) AC + B^2 (x) C^2 = (Delta A)^2
    let ta = TensorAlgebra::power(&rs, 2);
    let sq = |x: &NCPolynomial| x.free_mul(x);
    let expanded = ta
        .pure(&[sq(&abcd[0]), sq(&abcd[0])])
        .add(&ta.pure(&[abcd[0].free_mul(&abcd[1]), abcd[0].free_mul(&abcd[2])]).scale(&(Fe::one() + Fe::q_pow(-2))))
        .add(&ta.pure(&[sq(&abcd[1]), sq(&abcd[2])]));
    let da = coproduct(&abcd[0], &cm, &ta)?;
    let da2 = ta.normalize(&ta.mul(&da, &da));
    let entry = &r1.checks[0];
    o.check("(1,1) expansion = (Delta A)^2", ta.normalize(&expanded) == da2);
    o.check("(1,1) entry = (Delta A)^2", entry.lhs == ta.render(&da2));
    Ok(o)
}

fn c4_universal_t() -> Run {
    let mut o = Outcome::default();
    let rs = presets::parameter_algebra();
    let m = |names: &[&str]| rs.normal_form(&rs.monomial(names).unwrap()).unwrap();
    let abcd = [m(&["E"]), m(&["E", "beta"]), m(&["gamma", "E"]), m(&["Einv"]).add(&m(&["gamma", "E", "beta"]))];
    let half = universal_t(&spin_rep(Spin::HALF))?;
    for (k, expect) in abcd.iter().enumerate() {
        o.check(format!("j=1/2 entry ({},{})", k / 2 + 1, k % 2 + 1), half.get(k / 2, k % 2) == expect);
    }
    let one = universal_t(&spin_rep(Spin::ONE))?;
    let t1 = t1_literal(&rs, &abcd);
    for k in 0..9 {
        o.check(format!("j=1 entry ({},{})", k / 3 + 1, k % 3 + 1), one.get(k / 3, k % 3) == t1.get(k / 3, k % 3));
    }
    Ok(o)
}

fn c5_universal_r() -> Run {
    let mut o = Outcome::default();
    let half = spin_rep(Spin::HALF);
    let r = universal_r(&half, &half)?;
    o.check("R(1/2, 1/2) = written R", r == literal_r());
    o.check("YBE", ybe_check(&r)?);
    for n in [3, 4] {
        o.report(&format!("braid n={n}: "), &braid_check(&r, n)?);
    }
    o.report("", &intertwiner_check(&half, &half, &r)?);
    for j in [Spin::HALF, Spin::ONE] {
        o.report("", &rll_check(&spin_rep(j), &r)?);
    }
    Ok(o)
}

fn c6_opposite() -> Run {
    let mut o = Outcome::default();
    let half = spin_rep(Spin::HALF);
    o.report("", &opposite_coproduct_check(&half)?);
    for v in [Variant::Q, Variant::QInverse] {
        o.report("", &uq_coproduct_algebra_check(&half, &half, v)?);
    }
    Ok(o)
}

fn c7_qseries() -> Run {
    let mut o = Outcome::default();
    let one_minus_q = Fe::one() - q();
    for n in 0..=6u32 {
        // e_q^z coefficients 1/[k]_q! from [k]_q = (1 - q^k)/(1 - q)
        let direct: Vec<Fe> = (0..=n)
            .map(|k| {
                (1..=k as i64)
                    .map(|i| (Fe::one() - Fe::q_pow(i)).checked_div(&one_minus_q).unwrap())
                    .fold(Fe::one(), |acc, x| acc * x)
                    .inv()
                    .unwrap()
            })
            .collect();
        let phi = phi10_exponential_coefficients(n)?;
        o.check(format!("1phi0 partial sum N={n}"), phi == direct && q_exponential_coefficients(n) == direct);
    }
    let at_one = BigRational::one();
    for n in 0..=8i64 {
        let heine = q_number(n, QNumberConvention::Heine);
        let sym = q_number(n, QNumberConvention::Symmetric);
        let sym_formula = (Fe::q_pow(n) - Fe::q_pow(-n)).checked_div(&(q() - qi())).unwrap();
        o.check(format!("[[{n}]] formula"), sym == sym_formula);
        let n_rat = BigRational::from_integer(n.into());
        o.check(format!("[{n}] -> {n}"), heine.evaluate(&at_one).ok() == Some(n_rat.clone()));
        o.check(format!("[[{n}]] -> {n}"), sym.evaluate(&at_one).ok() == Some(n_rat));
        let next = q_number(n + 1, QNumberConvention::Symmetric);
        o.check(format!("[[{}]] - q[[{n}]] = q^-{n}", n + 1), next - q() * sym == Fe::q_pow(-n));
    }
    Ok(o)
}

fn c8_oscillators() -> Run {
    let mut o = Outcome::default();
    let at_one = BigRational::one();
    for d in 2..=6 {
        o.report("", &verify_qboson(&fock_rep(d, true)?)?);
        o.report("", &verify_qboson(&fock_rep(d, false)?)?);
        let deformed = fock_rep(d, true)?;
        let classical = fock_rep(d, false)?;
        o.check(format!("d={d} q-boson at q = 1 is the boson"), deformed.a.specialize(&at_one)? == classical.a);
        let sp = hamiltonian_spectrum(&classical)?;
        let expect: Vec<Fe> = (0..d as i64 - 1).map(|n| Fe::ratio(2 * n + 1, 2)).collect();
        o.check(format!("d={d} interior spectrum n + 1/2"), sp.interior == expect);
    }
    for total in 1..=3 {
        let sr = jordan_schwinger(total, true)?;
        o.report("", &verify_su_q2(&sr, true)?);
        o.report("", &verify_su_q2(&jordan_schwinger(total, false)?, false)?);
        let at_q1 = [&sr.j0, &sr.jplus, &sr.jminus].map(|m| m.specialize(&at_one).unwrap());
        let cl = jordan_schwinger(total, false)?;
        o.check(format!("total={total} at q = 1"), at_q1 == [cl.j0, cl.jplus, cl.jminus]);
    }
    let f = &Field::Q;
    let sr = jordan_schwinger(1, true)?;
    o.check("total=1 J0", sr.j0 == Matrix::diag(f, &[Fe::ratio(1, 2), Fe::ratio(-1, 2)]));
    o.check("total=1 J+", sr.jplus == FieldMatrix::from_ints(&[&[0, 1], &[0, 0]]));
    o.check("total=1 J-", sr.jminus == FieldMatrix::from_ints(&[&[0, 0], &[1, 0]]));
    Ok(o)
}

fn c9_jordanian() -> Run {
    let mut o = Outcome::default();
    let rs = presets::fun_h_sl2();
    let cm = matrix_coproduct(&rs)?;
    o.report("", &homomorphism_check(&cm, &rs)?);
    o.report("", &group_like_check(&cm, &rs)?);
    o.report("", &uh_fundamental_check()?);
    o.report("", &uh_coproduct_check()?);
    o.report("", &h_zero_limit_check()?);
    Ok(o)
}

fn c10_negative_controls() -> Run {
    let mut o = Outcome::default();
    let half = spin_rep(Spin::HALF);
    let r = literal_r();
    let zeroed = |i: usize, j: usize| {
        let mut m = r.clone();
        m.set(i, j, Fe::zero());
        m
    };
    // the listed control: entry (2,3) set to zero
    let z23 = zeroed(1, 2);
    o.check("R with (2,3) zeroed fails YBE", !ybe_check(&z23)?);
    o.check("R with (2,3) zeroed fails the intertwiner", !intertwiner_check(&half, &half, &z23)?.passed());
    for k in 0..4 {
        o.check(format!("R with ({0},{0}) zeroed fails YBE", k + 1), !ybe_check(&zeroed(k, k))?);
    }

    let rs = presets::fun_q_sl2();
    let mut cm = matrix_coproduct(&rs)?;
    let a = rs.gen("A")?;
    cm.images[0] = TensorElement::pure(&[a.clone(), a]);
    o.check("Delta(A) = A (x) A fails the homomorphism check", !homomorphism_check(&cm, &rs)?.passed());

    let g = |n: &str| rs.gen(n).unwrap();
    o.check("standard T^-1 passes", inverse_check_2x2(&rs)?);
    let swapped = [[g("D"), g("C").scale(&-q())], [g("B").scale(&-qi()), g("A")]];
    o.check("T^-1 with swapped entries fails", !inverse_check_with(&rs, &swapped)?);
    let diag_swapped = [[g("A"), g("B").scale(&-qi())], [g("C").scale(&-q()), g("D")]];
    o.check("T^-1 with swapped diagonal fails", !inverse_check_with(&rs, &diag_swapped)?);

    Ok(o)
}

struct Criterion {
    id: usize,
    title: &'static str,
    run: fn() -> Run,
    /// Sub-checks documented to fail on the reference inputs.
    known_failures: &'static [&'static str],
}

const CRITERIA: &[Criterion] = &[
    Criterion {
        id: 1,
        title: "quantum-plane calculus",
        run: c1_quantum_plane,
        known_failures: &[
            "covariance: dX Y = qY dX'",
            "covariance: dY X = qX dY'",
            "covariance: dX X - q^2 X dX = 1 + (q^2 - 1)Y dY'",
            "covariance: dY Y - q^2 Y dY = 1'",
        ],
    },
    Criterion {
        id: 2,
        title: "RTT gives the quantum-matrix relations",
        run: c2_rtt,
        known_failures: &[
            "rtt (1,2)",
            "rtt (1,3)",
            "rtt (2,1)",
            "rtt (2,2)",
            "rtt (2,4)",
            "rtt (3,1)",
            "rtt (3,3)",
            "rtt (3,4)",
            "rtt (4,2)",
            "rtt (4,3)",
            "span: rank of union",
            "span: AB = qBA in RTT span",
            "span: AC = qCA in RTT span",
            "span: BD = qDB in RTT span",
            "span: CD = qDC in RTT span",
            "span: AD - DA = (q - q^-1)BC in RTT span",
        ],
    },
    Criterion { id: 3, title: "representation property", run: c3_rep_property, known_failures: &[] },
    Criterion { id: 4, title: "universal T", run: c4_universal_t, known_failures: &[] },
    Criterion { id: 5, title: "universal R", run: c5_universal_r, known_failures: &[] },
    Criterion { id: 6, title: "opposite coproduct", run: c6_opposite, known_failures: &[] },
    Criterion { id: 7, title: "q-series", run: c7_qseries, known_failures: &[] },
    Criterion { id: 8, title: "q-boson and Jordan-Schwinger", run: c8_oscillators, known_failures: &[] },
    Criterion { id: 9, title: "Jordanian deformation", run: c9_jordanian, known_failures: &[] },
    Criterion {
        id: 10,
        title: "negative controls",
        run: c10_negative_controls,
        known_failures: &["R with (2,3) zeroed fails YBE"],
    },
];

const LIMIT: Duration = Duration::from_secs(30);

fn main() {
    let mut unexpected = 0;
    let mut passed = 0;
    for c in CRITERIA {
        let start = Instant::now();
        let result = (c.run)();
        let took = start.elapsed();
        let (line, as_documented) = match result {
            Err(e) => (format!("FAIL ({e})"), false),
            Ok(o) => {
                let ok = o.failed.is_empty() && took < LIMIT;
                passed += ok as usize;
                let status = if ok { "PASS".to_string() } else { format!("FAIL [{}]", o.failed.join("; ")) };
                let matches = o.failed == c.known_failures && took < LIMIT;
                (format!("{status} ({} checks, {:.2}s)", o.items, took.as_secs_f64()), matches)
            }
        };
        let tag = if as_documented { "" } else { "  <-- unexpected" };
        println!("criterion {:>2} {}: {line}{tag}", c.id, c.title);
        unexpected += !as_documented as usize;
    }
    println!("{passed}/{} criteria pass; criteria 1, 2 and 10 fail on their reference inputs", CRITERIA.len());
    if unexpected > 0 {
        println!("{unexpected} criteria deviate from the documented outcome");
        std::process::exit(1);
    }
}
