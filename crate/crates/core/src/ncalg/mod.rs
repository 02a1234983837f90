//! Noncommutative polynomials over the coefficient field and normal-ordering rewrite systems.

mod poly;
pub mod presets;
mod rewrite;

pub use poly::{NCPolynomial, Word};
pub use presets::{make_preset, PRESET_NAMES};
pub use rewrite::{
    DetQuotient, Generator, Relation, RewriteSystem, RewriteSystemBuilder, Strategy, DEFAULT_STEP_BUDGET,
};
pub(crate) use rewrite::render_terms;

use crate::report::Report;
use crate::scalars::{FieldElement, ScalarError};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NcError {
    #[error("unknown generator {0}")]
    UnknownGenerator(String),
    #[error("unknown preset {0}")]
    UnknownPreset(String),
    #[error("duplicate generator {0}")]
    DuplicateGenerator(String),
    #[error("{0} generators exceed the alphabet limit")]
    TooManyGenerators(usize),
    #[error("no rule for out-of-order pair {0}")]
    MissingRule(String),
    #[error("rule does not decrease in the term order: {0}")]
    RuleNotDecreasing(String),
    #[error("determinant {0} cannot be oriented as a pair rule")]
    BadDeterminant(String),
    #[error("reduction exceeded {steps} steps")]
    NonTerminating { steps: usize },
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// `[p, r]` in normal form.
pub fn commutator(p: &NCPolynomial, r: &NCPolynomial, rs: &RewriteSystem) -> Result<NCPolynomial, NcError> {
    rs.commutator(p, r)
}

/// True iff `z` commutes with every generator.
pub fn centrality_check(z: &NCPolynomial, rs: &RewriteSystem) -> Result<bool, NcError> {
    for g in 0..rs.len() as u8 {
        if !rs.commutator(z, &NCPolynomial::word(&[g]))?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `[[A, B], [C, D]]` for a system with those generators.
pub fn t_matrix(rs: &RewriteSystem) -> Result<[[NCPolynomial; 2]; 2], NcError> {
    Ok([[rs.gen("A")?, rs.gen("B")?], [rs.gen("C")?, rs.gen("D")?]])
}

/// `[[D, -q^-1 B], [-q C, A]]`.
pub fn standard_inverse(rs: &RewriteSystem) -> Result<[[NCPolynomial; 2]; 2], NcError> {
    Ok([
        [rs.gen("D")?, rs.gen("B")?.scale(&-FieldElement::q_pow(-1))],
        [rs.gen("C")?.scale(&-FieldElement::q()), rs.gen("A")?],
    ])
}

fn mul2(rs: &RewriteSystem, x: &[[NCPolynomial; 2]; 2], y: &[[NCPolynomial; 2]; 2]) -> Result<Vec<NCPolynomial>, NcError> {
    let mut out = Vec::with_capacity(4);
    for i in 0..2 {
        for j in 0..2 {
            let e = x[i][0].free_mul(&y[0][j]).add(&x[i][1].free_mul(&y[1][j]));
            out.push(rs.impose_det(&e)?);
        }
    }
    Ok(out)
}

/// Both `T * Tinv` and `Tinv * T` equal the identity once `det = 1`.
pub fn inverse_check_with(rs: &RewriteSystem, tinv: &[[NCPolynomial; 2]; 2]) -> Result<bool, NcError> {
    let t = t_matrix(rs)?;
    let id = [NCPolynomial::one(), NCPolynomial::zero(), NCPolynomial::zero(), NCPolynomial::one()];
    Ok(mul2(rs, &t, tinv)? == id && mul2(rs, tinv, &t)? == id)
}

/// [`inverse_check_with`] for the standard inverse of a quantum matrix.
pub fn inverse_check_2x2(rs: &RewriteSystem) -> Result<bool, NcError> {
    inverse_check_with(rs, &standard_inverse(rs)?)
}

/// Reduces random words with leftmost and rightmost strategies and compares.
pub fn confluence_fuzz(rs: &RewriteSystem, max_len: usize, trials: usize, seed: u64) -> Report {
    let mut report = Report::new(&format!("confluence {}", rs.name()));
    report.note(format!("{trials} random words of length 2..={max_len}, seed {seed}"));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rs.len() as u8;
    let mut bad = 0usize;
    for _ in 0..trials {
        let len = rng.random_range(2..=max_len.max(2));
        let w: Vec<u8> = (0..len).map(|_| rng.random_range(0..n)).collect();
        let p = NCPolynomial::word(&w);
        let l = rs.normal_form_with(&p, Strategy::Leftmost);
        let r = rs.normal_form_with(&p, Strategy::Rightmost);
        let show = |x: Result<NCPolynomial, NcError>| match x {
            Ok(x) => rs.render(&x),
            Err(e) => format!("error: {e}"),
        };
        let (ls, rs_) = (show(l), show(r));
        if ls != rs_ || ls.starts_with("error") {
            bad += 1;
            report.push(rs.render_word(&Word(w)), ls, rs_);
        }
    }
    report.push("counterexamples", bad.to_string(), "0");
    report
}

#[cfg(test)]
mod tests {
    use super::presets::*;
    use super::*;
    use std::collections::BTreeSet;

    fn q(k: i64) -> FieldElement {
        FieldElement::q_pow(k)
    }

    fn nf(rs: &RewriteSystem, names: &[&str]) -> String {
        rs.render(&rs.normal_form(&rs.monomial(names).unwrap()).unwrap())
    }

    #[test]
    fn funq_da() {
        let rs = fun_q_sl2();
        assert_eq!(nf(&rs, &["D", "A"]), "A*D - (q - q^-1)*B*C");
        assert_eq!(nf(&rs, &["C", "B", "A"]), "q^-2*A*B*C");
        assert_eq!(nf(&rs, &["A"]), "A");
    }

    // every possible sequence of single rewrites lands on the same polynomial
    fn all_normal_forms(rs: &RewriteSystem, p: &NCPolynomial, out: &mut BTreeSet<String>) {
        let mut stepped = false;
        for (w, c) in p.terms() {
            let l = w.letters();
            for i in 0..l.len().saturating_sub(1) {
                if let Some(rep) = rs.rule(l[i], l[i + 1]) {
                    stepped = true;
                    let left = NCPolynomial::word(&l[..i]);
                    let right = NCPolynomial::word(&l[i + 2..]);
                    let next = p
                        .sub(&NCPolynomial::monomial(w.clone(), c.clone()))
                        .add(&left.free_mul(rep).free_mul(&right).scale(c));
                    all_normal_forms(rs, &next, out);
                }
            }
        }
        if !stepped {
            out.insert(rs.render(p));
        }
    }

    #[test]
    fn cba_is_path_independent() {
        let rs = fun_q_sl2();
        let mut out = BTreeSet::new();
        all_normal_forms(&rs, &rs.monomial(&["C", "B", "A"]).unwrap(), &mut out);
        assert_eq!(out.into_iter().collect::<Vec<_>>(), vec!["q^-2*A*B*C".to_string()]);
        let mut out = BTreeSet::new();
        all_normal_forms(&rs, &rs.monomial(&["D", "C", "A"]).unwrap(), &mut out);
        assert_eq!(out.len(), 1);
    }

    #[test]
    fn quantum_plane_calculus() {
        let rs = quantum_plane();
        assert_eq!(nf(&rs, &["dX", "X"]), "1 + q^2*X*dX + (q^2 - 1)*Y*dY");
        let c = commutator(&rs.gen("dY").unwrap(), &rs.gen("Y").unwrap(), &rs).unwrap();
        assert_eq!(rs.render(&c), "1 + (q^2 - 1)*Y*dY");
        let f = fun_q_sl2();
        let c = commutator(&f.gen("B").unwrap(), &f.gen("C").unwrap(), &f).unwrap();
        assert!(c.is_zero());
    }

    #[test]
    fn oscillator_relation() {
        let rs = q_oscillator();
        let p = rs
            .monomial(&["a", "adag"])
            .unwrap()
            .sub(&rs.monomial(&["adag", "a"]).unwrap().scale(&q(1)));
        assert_eq!(rs.render(&rs.normal_form(&p).unwrap()), "kinv");
        assert_eq!(nf(&rs, &["k", "kinv"]), "1");
    }

    #[test]
    fn fun_h_rules() {
        let rs = fun_h_sl2();
        assert_eq!(nf(&rs, &["B", "A"]), "h - h*A*A + A*B");
    }

    #[test]
    fn determinants_are_central() {
        let f = fun_q_sl2();
        let det = f.det().unwrap().det.clone();
        assert!(centrality_check(&det, &f).unwrap());
        assert!(!centrality_check(&f.gen("A").unwrap(), &f).unwrap());
    }

    #[test]
    fn fun_h_det_commutators_lie_in_the_ideal() {
        let rs = fun_h_sl2();
        let det = rs.det().unwrap().det.clone();
        let dm1 = det.sub(&NCPolynomial::one());
        let g = |n: &str| rs.gen(n).unwrap();
        let hh = FieldElement::h();
        let com = |n: &str| rs.commutator(&det, &g(n)).unwrap();
        let via_c = rs.reduce(&dm1.free_mul(&g("C")).scale(&hh));
        assert_eq!(com("A"), via_c);
        assert_eq!(com("D"), via_c);
        assert!(com("C").is_zero());
        let b = rs.reduce(&g("A").free_mul(&dm1).add(&dm1.free_mul(&g("D"))).scale(&hh));
        assert_eq!(com("B"), b);
        assert!(!centrality_check(&det, &rs).unwrap());
        assert!(centrality_check(&det, rs.quotient().unwrap()).unwrap());
    }

    #[test]
    fn quotients_are_confluent() {
        for rs in [fun_q_sl2(), fun_h_sl2()] {
            let r = confluence_fuzz(rs.quotient().unwrap(), 6, 500, 11);
            assert!(r.passed(), "{}: {:?}", rs.name(), r.failures().collect::<Vec<_>>());
        }
    }

    #[test]
    fn quotient_handles_separated_determinant() {
        let rs = fun_q_sl2();
        // A*B*D = q*B*A*D = q*B*(1 + q*B*C)
        let lhs = rs.impose_det(&rs.monomial(&["A", "B", "D"]).unwrap()).unwrap();
        let rhs = rs
            .impose_det(&rs.gen("B").unwrap().scale(&q(1)).add(&rs.monomial(&["B", "B", "C"]).unwrap().scale(&q(2))))
            .unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn inverse_matrix() {
        let f = fun_q_sl2();
        assert!(inverse_check_2x2(&f).unwrap());
        let swapped = [
            [f.gen("D").unwrap(), f.gen("B").unwrap().scale(&-q(1))],
            [f.gen("C").unwrap().scale(&-q(-1)), f.gen("A").unwrap()],
        ];
        assert!(!inverse_check_with(&f, &swapped).unwrap());
        let c = f.specialize("funq1", &num_rational::BigRational::from_integer(1.into())).unwrap();
        let adj = [
            [c.gen("D").unwrap(), c.gen("B").unwrap().neg()],
            [c.gen("C").unwrap().neg(), c.gen("A").unwrap()],
        ];
        assert!(inverse_check_with(&c, &adj).unwrap());
    }

    #[test]
    fn presets_are_confluent() {
        for name in PRESET_NAMES {
            let rs = make_preset(name).unwrap();
            let r = confluence_fuzz(&rs, 6, 500, 7);
            assert!(r.passed(), "{name}: {:?}", r.failures().collect::<Vec<_>>());
        }
    }

    #[test]
    fn classical_specialization_sorts() {
        let rs = fun_q_sl2().specialize("c", &num_rational::BigRational::from_integer(1.into())).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..200 {
            let len = rng.random_range(1..7);
            let w: Vec<u8> = (0..len).map(|_| rng.random_range(0..4)).collect();
            let mut sorted = w.clone();
            sorted.sort();
            assert_eq!(rs.reduce(&NCPolynomial::word(&w)), NCPolynomial::word(&sorted));
        }
    }

    #[test]
    fn builder_rejects_bad_systems() {
        let err = RewriteSystemBuilder::new("x", &["A", "B"]).build().unwrap_err();
        assert!(matches!(err, NcError::MissingRule(_)));
        let err = RewriteSystemBuilder::new("x", &["A", "B"])
            .rule("B", "A", &[(FieldElement::one(), &["B", "B"])])
            .build()
            .unwrap_err();
        assert!(matches!(err, NcError::RuleNotDecreasing(_)));
        assert!(matches!(make_preset("nope"), Err(NcError::UnknownPreset(_))));
        let rs = fun_q_sl2();
        assert!(matches!(rs.normal_form(&NCPolynomial::word(&[9])), Err(NcError::UnknownGenerator(_))));
    }

    #[test]
    fn budget_is_enforced() {
        let rs = fun_q_sl2().with_budget(3);
        let w = rs.monomial(&["D", "D", "C", "B", "A", "A"]).unwrap();
        assert!(matches!(rs.normal_form(&w), Err(NcError::NonTerminating { .. })));
    }
}
