//! Coproducts, representation-property checks, `U_q(sl(2))` coproducts on
//! representations and covariance of the quantum plane.

use crate::error::Error;
use crate::ncalg::{presets, NCPolynomial, RewriteSystem, RewriteSystemBuilder};
use crate::report::Report;
use crate::reps::{sym_2diag, SpinRep};
use crate::scalars::FieldElement;
use crate::tensor::{dotted_tensor, lift_matrix, Field, FieldMatrix, Matrix, Ring, TensorAlgebra, TensorElement};
use num_rational::BigRational;
use num_traits::One;

/// Images of the generators, extended multiplicatively and linearly.
#[derive(Clone, Debug)]
pub struct CoproductMap {
    pub images: Vec<TensorElement>,
}

/// `Delta(T_ij) = sum_l T_il (x) T_lj` on `A, B, C, D`.
pub fn matrix_coproduct(rs: &RewriteSystem) -> Result<CoproductMap, Error> {
    let t = crate::ncalg::t_matrix(rs)?;
    let tm = Matrix::from_rows(t.iter().map(|r| r.to_vec()).collect())?;
    let lt = lift_matrix(&tm);
    let d = dotted_tensor(&lt, &lt)?;
    let mut images = vec![TensorElement::zero(); rs.len()];
    for (i, name) in [(0, 0, "A"), (0, 1, "B"), (1, 0, "C"), (1, 1, "D")].map(|(i, j, n)| ((i, j), n)) {
        let g = rs.index_of(name).expect("generator present") as usize;
        images[g] = d.get(i.0, i.1).clone();
    }
    Ok(CoproductMap { images })
}

/// Applies the coproduct to `p`, normalizing in `ta`.
pub fn coproduct(p: &NCPolynomial, cm: &CoproductMap, ta: &TensorAlgebra) -> Result<TensorElement, Error> {
    let mut out = TensorElement::zero();
    for (w, c) in p.terms() {
        let mut acc = ta.one();
        for &g in w.letters() {
            let img = cm
                .images
                .get(g as usize)
                .ok_or_else(|| crate::ncalg::NcError::UnknownGenerator(format!("#{g}")))?;
            acc = ta.mul(&acc, img);
        }
        out = out.add(&acc.scale(c));
    }
    Ok(ta.normalize(&out))
}

fn pair(rs: &RewriteSystem, modulo_det: bool) -> Result<TensorAlgebra, Error> {
    let base = if modulo_det { rs.quotient()?.clone() } else { rs.clone() };
    Ok(TensorAlgebra::power(&base, 2))
}

/// `Delta(lhs) = Delta(rhs)` for every defining relation.
pub fn homomorphism_check(cm: &CoproductMap, rs: &RewriteSystem) -> Result<Report, Error> {
    let mut r = Report::new(&format!("homomorphism {}", rs.name()));
    let plain = pair(rs, false)?;
    let quotient = pair(rs, true)?;
    for rel in rs.relations() {
        let ta = if rel.modulo_det { &quotient } else { &plain };
        let name = if rel.modulo_det {
            format!("{} (det = 1)", rel.name)
        } else {
            rel.name.clone()
        };
        let l = coproduct(&rel.lhs, cm, ta)?;
        let rr = coproduct(&rel.rhs, cm, ta)?;
        r.push(name, ta.render(&l), ta.render(&rr));
    }
    Ok(r)
}

/// `(T (.) T)_ij = Delta(T_ij)` entrywise.
pub fn rep_property_check(t: &Matrix<NCPolynomial>, cm: &CoproductMap, rs: &RewriteSystem) -> Result<Report, Error> {
    let mut r = Report::new(&format!("rep-property {}x{}", t.rows(), t.cols()));
    let ta = pair(rs, false)?;
    let lt = lift_matrix(t);
    let d = dotted_tensor(&lt, &lt)?;
    for i in 0..t.rows() {
        for j in 0..t.cols() {
            let lhs = ta.normalize(d.get(i, j));
            let rhs = coproduct(t.get(i, j), cm, &ta)?;
            r.push(format!("({},{})", i + 1, j + 1), ta.render(&lhs), ta.render(&rhs));
        }
    }
    Ok(r)
}

/// `(Delta (x) id) Delta(g)` and `(id (x) Delta) Delta(g)` for every generator.
pub fn coassociativity_check(cm: &CoproductMap, rs: &RewriteSystem) -> Result<Report, Error> {
    let mut r = Report::new(&format!("coassociativity {}", rs.name()));
    let ta2 = TensorAlgebra::power(rs, 2);
    let ta3 = TensorAlgebra::power(rs, 3);
    for (g, img) in cm.images.iter().enumerate() {
        let mut left = TensorElement::zero();
        let mut right = TensorElement::zero();
        for (w, c) in img.terms() {
            let p0 = NCPolynomial::monomial(w[0].clone(), FieldElement::one());
            let p1 = NCPolynomial::monomial(w[1].clone(), FieldElement::one());
            left = left.add(&coproduct(&p0, cm, &ta2)?.outer(&TensorElement::lift(&p1)).scale(c));
            right = right.add(&TensorElement::lift(&p0).outer(&coproduct(&p1, cm, &ta2)?).scale(c));
        }
        r.push(
            format!("Delta {}", rs.generators()[g].name),
            ta3.render(&ta3.normalize(&left)),
            ta3.render(&ta3.normalize(&right)),
        );
    }
    Ok(r)
}

/// `Delta(det) = det (x) det`.
pub fn group_like_check(cm: &CoproductMap, rs: &RewriteSystem) -> Result<Report, Error> {
    let mut r = Report::new(&format!("group-like det {}", rs.name()));
    let det = &rs
        .det()
        .ok_or_else(|| Error::DimensionMismatch(format!("{} has no determinant", rs.name())))?
        .det;
    let modulo = rs.relations().iter().any(|rel| rel.modulo_det);
    if modulo {
        r.note("relations hold only modulo det = 1, so both slots are reduced there");
    }
    let ta = pair(rs, modulo)?;
    let lhs = coproduct(det, cm, &ta)?;
    let rhs = ta.pure(&[det.clone(), det.clone()]);
    r.push("Delta(det) = det (x) det", ta.render(&lhs), ta.render(&rhs));
    Ok(r)
}

/// Which coproduct on `U_q(sl(2))`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    Q,
    QInverse,
}

/// `Delta(X0)`, `Delta(X+)`, `Delta(X-)` on `rep1 (x) rep2` in Kronecker form.
pub fn uq_coproduct_rep(rep1: &SpinRep, rep2: &SpinRep, variant: Variant) -> Result<[FieldMatrix; 3], Error> {
    let f = &Field::Q;
    let k = match variant {
        Variant::Q => 1,
        Variant::QInverse => -1,
    };
    let (i1, i2) = (FieldMatrix::id(rep1.dim()), FieldMatrix::id(rep2.dim()));
    let dx0 = rep1.x0.kron(f, &i2).add(f, &i1.kron(f, &rep2.x0))?;
    let d = |x1: &FieldMatrix, x2: &FieldMatrix| -> Result<FieldMatrix, Error> {
        x1.kron(f, &rep2.q_pow_x0(k)?).add(f, &rep1.q_pow_x0(-k)?.kron(f, x2))
    };
    Ok([dx0, d(&rep1.xp, &rep2.xp)?, d(&rep1.xm, &rep2.xm)?])
}

/// Permutation `V1 (x) V2 -> V2 (x) V1`.
pub fn swap_between(d1: usize, d2: usize) -> FieldMatrix {
    Matrix::from_fn(d1 * d2, d1 * d2, |r, c| {
        // row indexes V2 (x) V1, column indexes V1 (x) V2
        let (b, a) = (r / d1, r % d1);
        if c == a * d2 + b {
            FieldElement::one()
        } else {
            FieldElement::zero()
        }
    })
}

/// `tau(M)` for an operator on `V1 (x) V2`, landing on `V2 (x) V1`.
pub fn flip_operator(m: &FieldMatrix, d1: usize, d2: usize) -> Result<FieldMatrix, Error> {
    let p = swap_between(d1, d2);
    let pinv = swap_between(d2, d1);
    FieldMatrix::product(&Field::Q, &[&p, m, &pinv])
}

fn render(m: &FieldMatrix) -> String {
    m.render(&Field::Q)
        .into_iter()
        .map(|r| format!("[{}]", r.join(", ")))
        .collect::<Vec<_>>()
        .join(", ")
}

pub(crate) fn render_matrix(m: &FieldMatrix) -> String {
    render(m)
}

/// `[Delta X0, Delta X+-] = +-Delta X+-` and `[Delta X+, Delta X-] = [[2 Delta X0]]`.
pub fn uq_coproduct_algebra_check(rep1: &SpinRep, rep2: &SpinRep, variant: Variant) -> Result<Report, Error> {
    let f = &Field::Q;
    let [x0, xp, xm] = uq_coproduct_rep(rep1, rep2, variant)?;
    let v = match variant {
        Variant::Q => "q",
        Variant::QInverse => "q^-1",
    };
    let mut r = Report::new(&format!("coproduct {v} j={} (x) j={}", rep1.spin, rep2.spin));
    r.push("[DX0, DX+] = DX+", render(&x0.commutator(f, &xp)?), render(&xp));
    r.push("[DX0, DX-] = -DX-", render(&x0.commutator(f, &xm)?), render(&xm.scale(f, &-FieldElement::one())));
    r.push("[DX+, DX-] = [[2 DX0]]", render(&xp.commutator(f, &xm)?), render(&sym_2diag(&x0)?));
    Ok(r)
}

/// `Delta_{q^-1} = tau Delta_q` and `Delta_q != tau Delta_q` on `rep (x) rep`.
pub fn opposite_coproduct_check(rep: &SpinRep) -> Result<Report, Error> {
    let d = rep.dim();
    let q = uq_coproduct_rep(rep, rep, Variant::Q)?;
    let qi = uq_coproduct_rep(rep, rep, Variant::QInverse)?;
    let mut r = Report::new(&format!("opposite coproduct j={}", rep.spin));
    for (name, a, b) in [("X0", &q[0], &qi[0]), ("X+", &q[1], &qi[1]), ("X-", &q[2], &qi[2])] {
        r.push(format!("Delta_q^-1({name}) = tau Delta_q({name})"), render(&flip_operator(a, d, d)?), render(b));
    }
    for (name, a) in [("X+", &q[1]), ("X-", &q[2])] {
        let differs = flip_operator(a, d, d)? != *a;
        r.push_bool(format!("Delta_q({name}) != tau Delta_q({name})"), differs, true);
    }
    Ok(r)
}

/// `R Delta_q(X) R^-1 = Delta_{q^-1}(X)` on `rep1 (x) rep2`.
pub fn intertwiner_check(rep1: &SpinRep, rep2: &SpinRep, rmat: &FieldMatrix) -> Result<Report, Error> {
    let f = &Field::Q;
    let rinv = rmat.inverse()?;
    let q = uq_coproduct_rep(rep1, rep2, Variant::Q)?;
    let qi = uq_coproduct_rep(rep1, rep2, Variant::QInverse)?;
    let mut r = Report::new(&format!("intertwiner j={} (x) j={}", rep1.spin, rep2.spin));
    for (name, a, b) in [("X0", &q[0], &qi[0]), ("X+", &q[1], &qi[1]), ("X-", &q[2], &qi[2])] {
        let lhs = FieldMatrix::product(f, &[rmat, a, &rinv])?;
        r.push(format!("R Delta_q({name}) R^-1 = Delta_q^-1({name})"), render(&lhs), render(b));
    }
    Ok(r)
}

/// Which transformation the covariance check uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Covariance {
    /// Quantum matrix entries `A, B, C, D`, derivatives by the transpose of
    /// `T^-1 = [[D, -q^-1 B], [-q C, A]]`.
    General,
    /// As `General`, but derivatives transform by the transpose of the inverse
    /// of `T` in the opposite algebra, `[[D, -q B], [-q^-1 C, A]]`.
    OppositeInverse,
    /// `T = diag(a, a^-1)` with `a` invertible.
    Diagonal,
    /// `q = 1`.
    Classical,
}

/// Quantum plane relations for primed coordinates and derivatives.
pub fn covariance_check(kind: Covariance) -> Result<Report, Error> {
    let plane = presets::quantum_plane();
    let mut r = Report::new(&format!("covariance {kind:?}").to_lowercase());
    r.note("A, B, C, D (or a, a^-1) are assumed to commute with X, Y, dX, dY");
    let (sys, primed) = match kind {
        Covariance::General | Covariance::OppositeInverse | Covariance::Classical => {
            let sys = presets::fun_q_sl2().commuting_union(&plane, "fun_q_sl2 + quantum_plane")?;
            let g = |n: &str| sys.gen(n).expect("combined generator");
            let m = |a: &str, b: &str| g(a).free_mul(&g(b));
            let (q, qi) = if kind == Covariance::OppositeInverse {
                (FieldElement::q_pow(-1), FieldElement::q())
            } else {
                (FieldElement::q(), FieldElement::q_pow(-1))
            };
            let primed = [
                m("A", "X").add(&m("B", "Y")),
                m("C", "X").add(&m("D", "Y")),
                m("D", "dX").sub(&m("C", "dY").scale(&q)),
                m("A", "dY").sub(&m("B", "dX").scale(&qi)),
            ];
            if kind == Covariance::Classical {
                let one = BigRational::one();
                let sys = sys.specialize("classical covariance", &one)?;
                let primed = primed
                    .iter()
                    .map(|p| p.map_coefficients(|c| c.specialize(&one)))
                    .collect::<Result<Vec<_>, _>>()?;
                (sys, primed)
            } else {
                (sys, primed.to_vec())
            }
        }
        Covariance::Diagonal => {
            let torus = RewriteSystemBuilder::new("torus", &["a", "ainv"])
                .rule("ainv", "a", &[(FieldElement::one(), &[])])
                .rule("a", "ainv", &[(FieldElement::one(), &[])])
                .build()?;
            let sys = torus.commuting_union(&plane, "torus + quantum_plane")?;
            let g = |n: &str| sys.gen(n).expect("combined generator");
            let m = |a: &str, b: &str| g(a).free_mul(&g(b));
            let primed = vec![m("a", "X"), m("ainv", "Y"), m("ainv", "dX"), m("a", "dY")];
            (sys, primed)
        }
    };
    let subst = |p: &NCPolynomial| -> NCPolynomial {
        let mut out = NCPolynomial::zero();
        for (w, c) in p.terms() {
            let term = w
                .letters()
                .iter()
                .fold(NCPolynomial::one(), |acc, &l| acc.free_mul(&primed[l as usize]));
            out = out.add(&term.scale(c));
        }
        out
    };
    let target = if kind == Covariance::Diagonal { sys.clone() } else { sys.quotient()?.clone() };
    for rel in plane.relations() {
        let spec = |p: &NCPolynomial| -> Result<NCPolynomial, Error> {
            if kind == Covariance::Classical {
                Ok(p.map_coefficients(|c| c.specialize(&BigRational::one()))?)
            } else {
                Ok(p.clone())
            }
        };
        let l = target.normal_form(&subst(&spec(&rel.lhs)?))?;
        let rr = target.normal_form(&subst(&spec(&rel.rhs)?))?;
        r.push(format!("{}'", rel.name), target.render(&l), target.render(&rr));
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncalg::presets::{fun_h_sl2, fun_q_sl2};
    use crate::reps::{fundamental_r, rho, spin_rep, t1_matrix, universal_r, Spin};

    fn abcd(rs: &RewriteSystem) -> [NCPolynomial; 4] {
        ["A", "B", "C", "D"].map(|n| rs.gen(n).unwrap())
    }

    #[test]
    fn coproduct_of_generators() {
        let rs = fun_q_sl2();
        let cm = matrix_coproduct(&rs).unwrap();
        let ta = TensorAlgebra::power(&rs, 2);
        assert_eq!(ta.render(&coproduct(&rs.gen("A").unwrap(), &cm, &ta).unwrap()), "A (x) A + B (x) C");
        assert_eq!(ta.render(&coproduct(&NCPolynomial::one(), &cm, &ta).unwrap()), "1 (x) 1");
        assert!(group_like_check(&cm, &rs).unwrap().passed());
    }

    #[test]
    fn homomorphisms() {
        for rs in [fun_q_sl2(), fun_h_sl2()] {
            let cm = matrix_coproduct(&rs).unwrap();
            let r = homomorphism_check(&cm, &rs).unwrap();
            assert_eq!(r.checks.len(), 7);
            assert!(r.passed(), "{}: {:?}", rs.name(), r.failures().collect::<Vec<_>>());
            assert!(coassociativity_check(&cm, &rs).unwrap().passed());
            let mut bad = cm.clone();
            let a = rs.gen("A").unwrap();
            bad.images[0] = TensorElement::pure(&[a.clone(), a]);
            assert!(!homomorphism_check(&bad, &rs).unwrap().passed());
        }
    }

    #[test]
    fn fun_h_det_group_like() {
        let rs = fun_h_sl2();
        let cm = matrix_coproduct(&rs).unwrap();
        let r = group_like_check(&cm, &rs).unwrap();
        assert!(r.passed(), "{:?}", r.failures().collect::<Vec<_>>());
        // without the quotient the defect is h AC (x) (det - 1)
        let ta = TensorAlgebra::power(&rs, 2);
        let det = rs.det().unwrap().det.clone();
        let lhs = coproduct(&det, &cm, &ta).unwrap();
        let dd = ta.pure(&[det.clone(), det.clone()]);
        let ac = rs.monomial(&["A", "C"]).unwrap().scale(&FieldElement::h());
        let defect = ta.pure(&[ac, det.sub(&NCPolynomial::one())]);
        assert_eq!(ta.sub(&lhs, &dd), ta.normalize(&defect));
    }

    #[test]
    fn rep_property() {
        let rs = fun_q_sl2();
        let cm = matrix_coproduct(&rs).unwrap();
        let [a, b, c, d] = abcd(&rs);
        let t = Matrix::from_rows(vec![vec![a.clone(), b.clone()], vec![c.clone(), d.clone()]]).unwrap();
        assert!(rep_property_check(&t, &cm, &rs).unwrap().passed());
        let t1 = t1_matrix(&rs, &[a.clone(), b.clone(), c.clone(), d.clone()], true);
        let r = rep_property_check(&t1, &cm, &rs).unwrap();
        assert_eq!(r.checks.len(), 9);
        assert!(r.passed(), "{:?}", r.failures().collect::<Vec<_>>());
        let bad = t1_matrix(&rs, &[a, b, c, d], false);
        assert!(!rep_property_check(&bad, &cm, &rs).unwrap().passed());
        let _ = rho(2);
    }

    #[test]
    fn opposite_coproducts() {
        let h = spin_rep(Spin::HALF);
        assert!(opposite_coproduct_check(&h).unwrap().passed());
        for v in [Variant::Q, Variant::QInverse] {
            assert!(uq_coproduct_algebra_check(&h, &h, v).unwrap().passed());
        }
        let one = spin_rep(Spin::ONE);
        assert!(uq_coproduct_algebra_check(&one, &one, Variant::Q).unwrap().passed());
        let [_, xp, _] = uq_coproduct_rep(&h, &h, Variant::Q).unwrap();
        let [_, yp, _] = uq_coproduct_rep(&h, &h, Variant::QInverse).unwrap();
        let one_pt = BigRational::one();
        assert_eq!(xp.specialize(&one_pt).unwrap(), yp.specialize(&one_pt).unwrap());
    }

    #[test]
    fn intertwiners() {
        let h = spin_rep(Spin::HALF);
        assert!(intertwiner_check(&h, &h, &fundamental_r()).unwrap().passed());
        let id = intertwiner_check(&h, &h, &FieldMatrix::id(4)).unwrap();
        assert!(!id.passed());
        for (a, b) in [(1, 1), (1, 2), (2, 1), (2, 2), (0, 1)] {
            let (r1, r2) = (spin_rep(Spin::from_twice(a)), spin_rep(Spin::from_twice(b)));
            let r = intertwiner_check(&r1, &r2, &universal_r(&r1, &r2).unwrap()).unwrap();
            assert!(r.passed(), "{a} {b}: {:?}", r.failures().collect::<Vec<_>>());
        }
    }

    #[test]
    fn covariance() {
        for kind in [Covariance::OppositeInverse, Covariance::Diagonal, Covariance::Classical] {
            let r = covariance_check(kind).unwrap();
            assert_eq!(r.checks.len(), 6);
            assert!(r.passed(), "{kind:?}: {:?}", r.failures().collect::<Vec<_>>());
        }
        // the transpose of the ordinary inverse misses T^-1 T = 1 by (q - q^-1)BC
        let r = covariance_check(Covariance::General).unwrap();
        let failed: Vec<_> = r.failures().map(|c| c.name.as_str()).collect();
        assert_eq!(failed.len(), 4);
        for name in ["dX Y = qY dX'", "dY X = qX dY'"] {
            assert!(failed.contains(&name), "{failed:?}");
        }
        assert!(failed.iter().all(|n| n.starts_with("dX") || n.starts_with("dY")));
    }
}
