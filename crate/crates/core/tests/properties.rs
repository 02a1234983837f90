use proptest::prelude::*;
use qgalg::cli::parse::normalize;
use qgalg::hopf::{coproduct, matrix_coproduct};
use qgalg::ncalg::{make_preset, NCPolynomial, RewriteSystem, Strategy as Reduction, PRESET_NAMES};
use qgalg::qseries::sym;
use qgalg::scalars::FieldElement;
use qgalg::tensor::{Ring, TensorAlgebra};

type Fe = FieldElement;

/// Sum of `c_i q^e_i` with small integer data.
fn laurent() -> impl Strategy<Value = Fe> {
    prop::collection::vec((-3i64..=3, -4i64..=4), 0..4)
        .prop_map(|ts| ts.into_iter().fold(Fe::zero(), |acc, (c, e)| acc + Fe::from_int(c) * Fe::var_pow(e)))
}

fn nonzero_laurent() -> impl Strategy<Value = Fe> {
    laurent().prop_filter("nonzero", |x| !x.is_zero())
}

/// A polynomial over the generators of `rs`, given as (coefficient, letters) terms.
fn poly(rs: &RewriteSystem, terms: &[(i64, i64, Vec<u8>)]) -> NCPolynomial {
    let n = rs.len() as u8;
    terms.iter().fold(NCPolynomial::zero(), |acc, (c, e, w)| {
        let letters: Vec<u8> = w.iter().map(|l| l % n).collect();
        acc.add(&NCPolynomial::word(&letters).scale(&(Fe::from_int(*c) * Fe::var_pow(*e))))
    })
}

fn terms(max_len: usize) -> impl Strategy<Value = Vec<(i64, i64, Vec<u8>)>> {
    prop::collection::vec((-3i64..=3, -2i64..=2, prop::collection::vec(0u8..8, 0..=max_len)), 1..4)
}

fn preset() -> impl Strategy<Value = RewriteSystem> {
    prop::sample::select(PRESET_NAMES).prop_map(|n| make_preset(n).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(a in laurent(), b in laurent(), c in nonzero_laurent()) {
        prop_assert_eq!((&a + &b) * &c, &a * &c + &b * &c);
        prop_assert_eq!((&a * &b) * &c, &a * &(&b * &c));
        let inv = c.inv().unwrap();
        prop_assert_eq!(&c * &inv, Fe::one());
        prop_assert_eq!((&a * &c).checked_div(&c).unwrap(), a);
    }

    #[test]
    fn symmetric_q_number_addition(m in 0i64..12, n in 0i64..12) {
        // [[m + n]] = q^-n [[m]] + q^m [[n]]
        prop_assert_eq!(sym(m + n), Fe::q_pow(-n) * sym(m) + Fe::q_pow(m) * sym(n));
    }

    #[test]
    fn normal_form_is_idempotent_and_normal(rs in preset(), t in terms(5)) {
        let p = poly(&rs, &t);
        let nf = rs.normal_form(&p).unwrap();
        prop_assert_eq!(rs.normal_form(&nf).unwrap(), nf.clone());
        for (w, _) in nf.terms() {
            prop_assert!(rs.is_normal_word(w));
        }
    }

    #[test]
    fn reduction_order_does_not_matter(rs in preset(), t in terms(6)) {
        let p = poly(&rs, &t);
        let l = rs.normal_form_with(&p, Reduction::Leftmost).unwrap();
        let r = rs.normal_form_with(&p, Reduction::Rightmost).unwrap();
        prop_assert_eq!(l, r);
    }

    #[test]
    fn normal_form_is_multiplicative(rs in preset(), a in terms(3), b in terms(3)) {
        let (p, r) = (poly(&rs, &a), poly(&rs, &b));
        let whole = rs.normal_form(&p.free_mul(&r)).unwrap();
        let parts = rs.normal_form(&rs.normal_form(&p).unwrap().free_mul(&rs.normal_form(&r).unwrap())).unwrap();
        prop_assert_eq!(whole, parts);
    }

    #[test]
    fn render_parse_round_trip(rs in preset(), t in terms(4)) {
        let nf = rs.normal_form(&poly(&rs, &t)).unwrap();
        let text = rs.render(&nf);
        prop_assert_eq!(normalize(&text, &rs).unwrap(), text);
    }

    #[test]
    fn coproduct_is_multiplicative(a in terms(2), b in terms(2)) {
        let rs = make_preset("funq").unwrap();
        let cm = matrix_coproduct(&rs).unwrap();
        let ta = TensorAlgebra::power(&rs, 2);
        let (p, r) = (poly(&rs, &a), poly(&rs, &b));
        let whole = coproduct(&p.free_mul(&r), &cm, &ta).unwrap();
        let parts = ta.mul(&coproduct(&p, &cm, &ta).unwrap(), &coproduct(&r, &cm, &ta).unwrap());
        prop_assert_eq!(ta.normalize(&whole), ta.normalize(&parts));
    }
}
