//! The Jordanian deformation: `Fun_h(SL(2))` and `U_h(sl(2))` at the fundamental representation.

use crate::error::Error;
use crate::hopf::{coassociativity_check, group_like_check, homomorphism_check, matrix_coproduct};
use crate::ncalg::{confluence_fuzz, presets, NCPolynomial};
use crate::report::Report;
use crate::scalars::{factorial, FieldElement};
use crate::tensor::{Field, FieldMatrix, Matrix};
use num_rational::BigRational;
use num_traits::Zero;

const F: &Field = &Field::H;

fn render(m: &FieldMatrix) -> String {
    m.render(F)
        .into_iter()
        .map(|r| format!("[{}]", r.join(", ")))
        .collect::<Vec<_>>()
        .join(", ")
}

/// Which terms of the exponential series to keep.
#[derive(Clone, Copy)]
enum Parity {
    All,
    Even,
    Odd,
}

/// `sum c^k M^k / k!` over the kept `k`, truncated at the nilpotency index of `M`.
fn series(m: &FieldMatrix, c: &FieldElement, parity: Parity) -> Result<FieldMatrix, Error> {
    let n = m.nilpotency_index(F)?;
    let mut acc = FieldMatrix::zeros(F, m.rows(), m.cols());
    let mut p = FieldMatrix::id(m.rows());
    for k in 0..n {
        let keep = match parity {
            Parity::All => true,
            Parity::Even => k % 2 == 0,
            Parity::Odd => k % 2 == 1,
        };
        if keep {
            let coeff = c.pow(k) * factorial(k).inv()?;
            acc = acc.add(F, &p.scale(F, &coeff))?;
        }
        p = p.mul(F, m)?;
    }
    Ok(acc)
}

/// `exp(c M)` for nilpotent `M`.
pub fn exp_nilpotent(m: &FieldMatrix, c: &FieldElement) -> Result<FieldMatrix, Error> {
    series(m, c, Parity::All)
}

/// `cosh(h M)` for nilpotent `M`.
pub fn cosh_nilpotent(m: &FieldMatrix) -> Result<FieldMatrix, Error> {
    series(m, &FieldElement::h(), Parity::Even)
}

/// `sinh(h M) / h` for nilpotent `M`.
pub fn sinh_over_h_nilpotent(m: &FieldMatrix) -> Result<FieldMatrix, Error> {
    let s = series(m, &FieldElement::h(), Parity::Odd)?;
    Ok(s.scale(F, &FieldElement::h().inv()?))
}

/// The `U_h(sl(2))` relations for `(X0, X+, X-)`.
pub fn uh_relations(x0: &FieldMatrix, xp: &FieldMatrix, xm: &FieldMatrix, label: &str) -> Result<Report, Error> {
    let mut r = Report::new(label);
    let cosh = cosh_nilpotent(xp)?;
    r.push("[X0, X+] = sinh(hX+)/h", render(&x0.commutator(F, xp)?), render(&sinh_over_h_nilpotent(xp)?));
    let sym = xm.mul(F, &cosh)?.add(F, &cosh.mul(F, xm)?)?.scale(F, &FieldElement::ratio(-1, 2));
    r.push("[X0, X-] = -(X- cosh(hX+) + cosh(hX+) X-)/2", render(&x0.commutator(F, xm)?), render(&sym));
    r.push(
        "[X+, X-] = 2 X0",
        render(&xp.commutator(F, xm)?),
        render(&x0.scale(F, &FieldElement::from_int(2))),
    );
    Ok(r)
}

/// `X0 = diag(1/2, -1/2)`, `X+ = e12`, `X- = e21`.
pub fn fundamental() -> [FieldMatrix; 3] {
    let x0 = Matrix::diag(F, &[FieldElement::ratio(1, 2), FieldElement::ratio(-1, 2)]);
    [x0, FieldMatrix::from_ints(&[&[0, 1], &[0, 0]]), FieldMatrix::from_ints(&[&[0, 0], &[1, 0]])]
}

pub fn uh_fundamental_check() -> Result<Report, Error> {
    let [x0, xp, xm] = fundamental();
    let mut r = uh_relations(&x0, &xp, &xm, "U_h(sl(2)) fundamental")?;
    r.push("sinh(hX+)/h = X+", render(&sinh_over_h_nilpotent(&xp)?), render(&xp));
    r.push("cosh(hX+) = 1", render(&cosh_nilpotent(&xp)?), render(&FieldMatrix::id(2)));
    Ok(r)
}

/// `Delta(X0)`, `Delta(X+)`, `Delta(X-)` on the 4-dimensional space.
pub fn uh_coproduct() -> Result<[FieldMatrix; 3], Error> {
    let [x0, xp, xm] = fundamental();
    let id = FieldMatrix::id(2);
    let h = FieldElement::h();
    let ep = exp_nilpotent(&xp, &h)?;
    let em = exp_nilpotent(&xp, &-h)?;
    let dxp = xp.kron(F, &id).add(F, &id.kron(F, &xp))?;
    let dxm = xm.kron(F, &ep).add(F, &em.kron(F, &xm))?;
    let dx0 = x0.kron(F, &ep).add(F, &em.kron(F, &x0))?;
    Ok([dx0, dxp, dxm])
}

pub fn uh_coproduct_check() -> Result<Report, Error> {
    let [dx0, dxp, dxm] = uh_coproduct()?;
    let mut r = uh_relations(&dx0, &dxp, &dxm, "U_h(sl(2)) coproduct on 2 (x) 2")?;
    let [_, xp, _] = fundamental();
    r.push("(DX+)^3 = 0", render(&dxp.pow(F, 3)?), render(&FieldMatrix::zeros(F, 4, 4)));
    r.push("sinh(hDX+)/h = DX+", render(&sinh_over_h_nilpotent(&dxp)?), render(&dxp));
    let h2 = FieldElement::h().pow(2);
    let expect = FieldMatrix::id(4).add(F, &xp.kron(F, &xp).scale(F, &h2))?;
    r.push("cosh(hDX+) = 1 + h^2 X+ (x) X+", render(&cosh_nilpotent(&dxp)?), render(&expect));
    Ok(r)
}

/// `h -> 0`: the coproduct becomes primitive and the relations classical.
pub fn h_zero_limit_check() -> Result<Report, Error> {
    let zero = BigRational::zero();
    let [x0, xp, xm] = fundamental();
    let id = FieldMatrix::id(2);
    let prim = |x: &FieldMatrix| x.kron(F, &id).add(F, &id.kron(F, x));
    let mut r = Report::new("h -> 0");
    let d = uh_coproduct()?;
    for (name, dx, x) in [("X0", &d[0], &x0), ("X+", &d[1], &xp), ("X-", &d[2], &xm)] {
        r.push(format!("Delta({name}) at h = 0 is primitive"), render(&dx.specialize(&zero)?), render(&prim(x)?));
    }
    let c = crate::reps::verify_sl2_classical(&d[0].specialize(&zero)?, &d[1].specialize(&zero)?, &d[2].specialize(&zero)?, "")?;
    r.absorb("classical sl(2) on 2 (x) 2: ", c);
    let rs = presets::fun_h_sl2().specialize("fun_h at h = 0", &zero)?;
    for (a, b) in [("A", "B"), ("A", "C"), ("A", "D"), ("B", "C"), ("B", "D"), ("C", "D")] {
        let com = rs.commutator(&rs.monomial(&[a])?, &rs.monomial(&[b])?)?;
        r.push(format!("[{a}, {b}] at h = 0"), rs.render(&com), "0");
    }
    let det = rs.det().map(|d| rs.render(&d.det)).unwrap_or_default();
    r.push("det_h at h = 0", det, "A*D - B*C");
    Ok(r)
}

/// Coproduct homomorphism, coassociativity, group-like `det_h`, the ideal
/// identities for `[det_h, g]`, and confluence.
pub fn fun_h_checks() -> Result<Report, Error> {
    let rs = presets::fun_h_sl2();
    let cm = matrix_coproduct(&rs)?;
    let mut r = Report::new("Fun_h(SL(2))");
    r.note("det_h is central only modulo det_h = 1; its commutators are checked against the ideal");
    r.absorb("homomorphism: ", homomorphism_check(&cm, &rs)?);
    r.absorb("coassociativity: ", coassociativity_check(&cm, &rs)?);
    r.absorb("group-like: ", group_like_check(&cm, &rs)?);
    let ba = rs.normal_form(&rs.monomial(&["B", "A"])?)?;
    r.push("B*A", rs.render(&ba), "h - h*A*A + A*B");
    let det = rs.det().ok_or(Error::BadDimension(0))?.det.clone();
    let dm1 = det.sub(&NCPolynomial::one());
    let h = FieldElement::h();
    let g = |n: &str| rs.gen(n);
    let via_c = rs.normal_form(&dm1.free_mul(&g("C")?).scale(&h))?;
    let via_b = rs.normal_form(&g("A")?.free_mul(&dm1).add(&dm1.free_mul(&g("D")?)).scale(&h))?;
    for (n, expect) in [("A", &via_c), ("B", &via_b), ("C", &NCPolynomial::zero()), ("D", &via_c)] {
        let com = rs.commutator(&det, &g(n)?)?;
        r.push(format!("[det_h, {n}]"), rs.render(&com), rs.render(expect));
    }
    let q = rs.quotient()?;
    r.push_bool("det_h central modulo det_h = 1", crate::ncalg::centrality_check(&det, q)?, true);
    r.absorb("confluence: ", confluence_fuzz(&rs, 6, 500, 7));
    Ok(r)
}
