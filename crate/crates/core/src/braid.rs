//! Yang-Baxter, RTT, RLL and braid relations.

use crate::error::Error;
use crate::ncalg::{presets, t_matrix, NCPolynomial, RewriteSystem, Word};
use crate::report::Report;
use crate::reps::{l_matrices, SpinRep};
use crate::scalars::FieldElement;
use crate::tensor::{embed_3slot, swap_matrix, Field, FieldMatrix, Matrix, SlotPair};
use std::collections::BTreeMap;

const MAX_BRAID_DIM: usize = 512;

fn dim_of(r: &FieldMatrix) -> Result<usize, Error> {
    let n = r.rows();
    let d = (1..=n).find(|d| d * d == n).filter(|_| r.is_square());
    d.ok_or_else(|| Error::DimensionMismatch(format!("R is {}x{}, not dim^2 square", r.rows(), r.cols())))
}

fn render(m: &FieldMatrix) -> String {
    crate::hopf::render_matrix(m)
}

/// Both sides of `R12 R13 R23 = R23 R13 R12`.
pub fn ybe_report(r: &FieldMatrix) -> Result<Report, Error> {
    let dim = dim_of(r)?;
    let f = &Field::Q;
    let [r12, r13, r23] = [SlotPair::S12, SlotPair::S13, SlotPair::S23].map(|p| embed_3slot(r, p, dim));
    let (r12, r13, r23) = (r12?, r13?, r23?);
    let lhs = FieldMatrix::product(f, &[&r12, &r13, &r23])?;
    let rhs = FieldMatrix::product(f, &[&r23, &r13, &r12])?;
    let mut rep = Report::new(&format!("yang-baxter dim {dim}"));
    rep.push("R12 R13 R23 = R23 R13 R12", render(&lhs), render(&rhs));
    Ok(rep)
}

pub fn ybe_check(r: &FieldMatrix) -> Result<bool, Error> {
    Ok(ybe_report(r)?.passed())
}

fn lift_scalar(m: &FieldMatrix) -> Matrix<NCPolynomial> {
    m.map(|c| NCPolynomial::scalar(c.clone()))
}

/// `R T1 T2 - T2 T1 R` with entries normal-ordered in `rs`.
pub fn rtt_sides(r: &FieldMatrix, rs: &RewriteSystem) -> Result<(Matrix<NCPolynomial>, Matrix<NCPolynomial>), Error> {
    if r.rows() != 4 || r.cols() != 4 {
        return Err(Error::DimensionMismatch(format!("RTT needs a 4x4 R, got {}x{}", r.rows(), r.cols())));
    }
    let t = t_matrix(rs)?;
    let t = Matrix::from_rows(t.iter().map(|row| row.to_vec()).collect())?;
    let id = Matrix::identity(rs, 2);
    let t1 = t.kron(rs, &id);
    let t2 = id.kron(rs, &t);
    let rr = lift_scalar(r);
    let lhs = Matrix::product(rs, &[&rr, &t1, &t2])?;
    let rhs = Matrix::product(rs, &[&t2, &t1, &rr])?;
    Ok((lhs, rhs))
}

/// `R T1 T2 = T2 T1 R`, all 16 entries.
pub fn rtt_check(r: &FieldMatrix, rs: &RewriteSystem) -> Result<Report, Error> {
    let (lhs, rhs) = rtt_sides(r, rs)?;
    let mut rep = Report::new(&format!("rtt {}", rs.name()));
    rep.note("the 16 entry equations are the commutation relations of the T-matrix entries");
    for i in 0..4 {
        for j in 0..4 {
            rep.push(
                format!("({},{})", i + 1, j + 1),
                rs.render(lhs.get(i, j)),
                rs.render(rhs.get(i, j)),
            );
        }
    }
    Ok(rep)
}

fn span_rank(vectors: &[&NCPolynomial], basis: &[Word]) -> Result<usize, Error> {
    if vectors.is_empty() {
        return Ok(0);
    }
    let m = Matrix::from_fn(vectors.len(), basis.len(), |i, j| vectors[i].coefficient(&basis[j]));
    m.rank()
}

/// The entries of `R T1 T2 - T2 T1 R` over the free algebra on `A, B, C, D`
/// span exactly the quadratic `fun_q_sl2` relations.
pub fn rtt_span_check(r: &FieldMatrix) -> Result<Report, Error> {
    let free = presets::free_abcd();
    let funq = presets::fun_q_sl2();
    let (lhs, rhs) = rtt_sides(r, &free)?;
    let entries: Vec<NCPolynomial> = (0..16).map(|k| lhs.get(k / 4, k % 4).sub(rhs.get(k / 4, k % 4))).collect();
    let quadratic: Vec<_> = funq.relations().iter().filter(|rel| !rel.modulo_det).collect();
    let relations: Vec<NCPolynomial> = quadratic.iter().map(|rel| rel.lhs.sub(&rel.rhs)).collect();
    let mut words: BTreeMap<Word, ()> = BTreeMap::new();
    for p in entries.iter().chain(&relations) {
        for (w, _) in p.terms() {
            words.insert(w.clone(), ());
        }
    }
    let basis: Vec<Word> = words.into_keys().collect();
    let e: Vec<&NCPolynomial> = entries.iter().collect();
    let rl: Vec<&NCPolynomial> = relations.iter().collect();
    let both: Vec<&NCPolynomial> = e.iter().chain(&rl).copied().collect();
    let (re, rr, rb) = (span_rank(&e, &basis)?, span_rank(&rl, &basis)?, span_rank(&both, &basis)?);
    let mut rep = Report::new("rtt span");
    rep.push("rank of RTT entries", re.to_string(), rr.to_string());
    rep.push("rank of union", rb.to_string(), rr.to_string());
    rep.push("quadratic relations", rr.to_string(), relations.len().to_string());
    for (rel, p) in quadratic.iter().zip(&relations) {
        let with: Vec<&NCPolynomial> = e.iter().copied().chain([p]).collect();
        rep.push_bool(format!("{} in RTT span", rel.name), span_rank(&with, &basis)? == re, true);
    }
    Ok(rep)
}

/// `L` on `aux (x) rep` acting on `aux1 (x) aux2 (x) rep`, identity on `aux2`.
fn first_aux(l: &FieldMatrix, d: usize) -> FieldMatrix {
    let n = 4 * d;
    Matrix::from_fn(n, n, |a, b| {
        let (a1, a2, r) = (a / (2 * d), (a / d) % 2, a % d);
        let (b1, b2, s) = (b / (2 * d), (b / d) % 2, b % d);
        if a2 == b2 {
            l.get(a1 * d + r, b1 * d + s).clone()
        } else {
            FieldElement::zero()
        }
    })
}

/// The three RLL relations with `L(+-)` of `rep`.
pub fn rll_check(rep: &SpinRep, r: &FieldMatrix) -> Result<Report, Error> {
    if r.rows() != 4 || r.cols() != 4 {
        return Err(Error::DimensionMismatch(format!("RLL needs a 4x4 R, got {}x{}", r.rows(), r.cols())));
    }
    let f = &Field::Q;
    let d = rep.dim();
    let rinv = r.inverse()?.kron(f, &FieldMatrix::id(d));
    let (plus, minus) = l_matrices(rep)?;
    let i2 = FieldMatrix::id(2);
    let one = |l: &FieldMatrix| first_aux(l, d);
    let two = |l: &FieldMatrix| i2.kron(f, l);
    let mut out = Report::new(&format!("rll j={}", rep.spin));
    out.note("L1 acts on the first auxiliary space and the representation space, L2 on the second; ordering aux1 (x) aux2 (x) rep");
    for (name, a, b) in [("++", &plus, &plus), ("--", &minus, &minus), ("+-", &plus, &minus)] {
        let (l1, l2) = (one(a), two(b));
        let lhs = FieldMatrix::product(f, &[&rinv, &l1, &l2])?;
        let rhs = FieldMatrix::product(f, &[&l2, &l1, &rinv])?;
        out.push(format!("R^-1 L1 L2 = L2 L1 R^-1 ({name})"), render(&lhs), render(&rhs));
    }
    Ok(out)
}

/// `R21 = P R P`.
pub fn r21(r: &FieldMatrix) -> Result<FieldMatrix, Error> {
    let p = swap_matrix(dim_of(r)?);
    FieldMatrix::product(&Field::Q, &[&p, r, &p])
}

/// `R-check = P R`.
pub fn r_check(r: &FieldMatrix) -> Result<FieldMatrix, Error> {
    let dim = dim_of(r)?;
    swap_matrix(dim).mul(&Field::Q, r)
}

/// `sigma_1 .. sigma_{n-1}` on `dim^n`.
pub fn braid_generators(r: &FieldMatrix, n: usize) -> Result<Vec<FieldMatrix>, Error> {
    let dim = dim_of(r)?;
    if n < 3 {
        return Err(Error::DimensionMismatch(format!("braid check needs at least 3 strands, got {n}")));
    }
    let total = (0..n).try_fold(1usize, |acc, _| acc.checked_mul(dim));
    if total.is_none_or(|t| t > MAX_BRAID_DIM) {
        return Err(Error::TooLarge(format!("{dim}^{n} exceeds {MAX_BRAID_DIM}")));
    }
    let f = &Field::Q;
    let rc = r_check(r)?;
    Ok((0..n - 1)
        .map(|i| {
            let left = FieldMatrix::id(dim.pow(i as u32));
            let right = FieldMatrix::id(dim.pow((n - i - 2) as u32));
            left.kron(f, &rc).kron(f, &right)
        })
        .collect())
}

/// Braid relations, far commutation and invertibility of each generator.
pub fn braid_check(r: &FieldMatrix, n: usize) -> Result<Report, Error> {
    let f = &Field::Q;
    let s = braid_generators(r, n)?;
    let mut out = Report::new(&format!("braid n={n}"));
    for i in 0..s.len() {
        out.push_bool(format!("sigma_{} invertible", i + 1), s[i].inverse().is_ok(), true);
    }
    for i in 0..s.len() - 1 {
        let lhs = FieldMatrix::product(f, &[&s[i], &s[i + 1], &s[i]])?;
        let rhs = FieldMatrix::product(f, &[&s[i + 1], &s[i], &s[i + 1]])?;
        out.push(
            format!("sigma_{a} sigma_{b} sigma_{a} = sigma_{b} sigma_{a} sigma_{b}", a = i + 1, b = i + 2),
            render(&lhs),
            render(&rhs),
        );
    }
    for i in 0..s.len() {
        for j in i + 2..s.len() {
            out.push(
                format!("sigma_{a} sigma_{b} = sigma_{b} sigma_{a}", a = i + 1, b = j + 1),
                render(&s[i].mul(f, &s[j])?),
                render(&s[j].mul(f, &s[i])?),
            );
        }
    }
    Ok(out)
}

/// Monic minimal polynomial of `P R`, constant term first.
pub fn hecke_polynomial(r: &FieldMatrix) -> Result<Vec<FieldElement>, Error> {
    r_check(r)?.minimal_polynomial()
}
