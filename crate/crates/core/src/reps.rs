//! Finite-dimensional representations of `U_q(sl(2))`, universal R- and T-matrices, L-matrices.

use crate::error::Error;
use crate::ncalg::{presets, NCPolynomial, RewriteSystem};
use crate::qseries::{heine_factorial_base, sym};
use crate::report::Report;
use crate::scalars::{adjoin_radical, factorial, FieldElement};
use crate::tensor::{Field, FieldMatrix, Matrix, Ring};
use num_rational::BigRational;
use num_traits::One;
use std::fmt;

/// `rho_n` with `rho_n^2 = [[n]]`; `rho_1 = 1`, `rho_0 = 0`.
pub fn rho(n: u32) -> FieldElement {
    match n {
        0 => FieldElement::zero(),
        1 => FieldElement::one(),
        _ => adjoin_radical(&format!("rho{n}"), &sym(n as i64))
            .expect("rho radicals are registered consistently")
            .element(),
    }
}

/// Spin `j = j2 / 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Spin {
    pub j2: u32,
}

impl Spin {
    pub const HALF: Spin = Spin { j2: 1 };
    pub const ONE: Spin = Spin { j2: 2 };

    pub fn from_twice(j2: u32) -> Spin {
        Spin { j2 }
    }

    /// Parses `0`, `1`, `1/2`, `3/2`, ...
    pub fn parse(s: &str) -> Result<Spin, Error> {
        let s = s.trim();
        let bad = || Error::BadSpin(s.to_string());
        let r: BigRational = match s.split_once('/') {
            Some((n, d)) => {
                let n: i64 = n.trim().parse().map_err(|_| bad())?;
                let d: i64 = d.trim().parse().map_err(|_| bad())?;
                if d == 0 {
                    return Err(bad());
                }
                BigRational::new(n.into(), d.into())
            }
            None => BigRational::from_integer(s.parse::<i64>().map_err(|_| bad())?.into()),
        };
        if r < BigRational::from_integer(0.into()) {
            return Err(Error::NegativeSpin(s.to_string()));
        }
        let twice = r * BigRational::from_integer(2.into());
        if !twice.is_integer() {
            return Err(bad());
        }
        let j2 = twice.to_integer().try_into().map_err(|_| bad())?;
        Ok(Spin { j2 })
    }

    pub fn dim(&self) -> usize {
        self.j2 as usize + 1
    }
}

impl fmt::Display for Spin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.j2.is_multiple_of(2) {
            write!(f, "{}", self.j2 / 2)
        } else {
            write!(f, "{}/2", self.j2)
        }
    }
}

/// `X0`, `X+`, `X-` on the basis `m = j, j-1, ..., -j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpinRep {
    pub spin: Spin,
    pub x0: FieldMatrix,
    pub xp: FieldMatrix,
    pub xm: FieldMatrix,
}

/// Builds the spin-`j` representation.
///
/// `X+ e_m = rho_{j-m} rho_{j+m+1} s^-(2m+1) e_{m+1}` and `X-` carries the
/// inverse power of `s`; for `j = 1/2, 1` this is the standard form with the
/// `sqrt(q)` weights on `X-`.
pub fn spin_rep(spin: Spin) -> SpinRep {
    let dim = spin.dim();
    let j2 = spin.j2 as i64;
    // 2m for basis index i
    let m2 = |i: usize| j2 - 2 * i as i64;
    let x0 = Matrix::diag(&Field::Q, &(0..dim).map(|i| FieldElement::ratio(m2(i), 2)).collect::<Vec<_>>());
    let mut xp = FieldMatrix::zeros(&Field::Q, dim, dim);
    let mut xm = FieldMatrix::zeros(&Field::Q, dim, dim);
    for i in 1..dim {
        // column i has weight m, row i-1 has weight m+1
        let m = m2(i);
        let a = ((j2 - m) / 2) as u32;
        let b = ((j2 + m) / 2 + 1) as u32;
        let root = rho(a) * rho(b);
        let e = -(m + 1);
        xp.set(i - 1, i, &root * &FieldElement::var_pow(e));
        xm.set(i, i - 1, root * FieldElement::var_pow(-e));
    }
    SpinRep { spin, x0, xp, xm }
}

impl SpinRep {
    pub fn dim(&self) -> usize {
        self.spin.dim()
    }

    /// Twice the diagonal of `X0`, checked to be integers.
    pub fn weights2(&self) -> Result<Vec<i64>, Error> {
        if !self.x0.is_diagonal(&Field::Q) {
            return Err(Error::NonDiagonalX0);
        }
        self.x0
            .diagonal()
            .iter()
            .map(|x| {
                let r = (x * &FieldElement::from_int(2)).as_rational().ok_or(Error::NonDiagonalX0)?;
                crate::scalars::to_i64(&r).ok_or(Error::NonDiagonalX0)
            })
            .collect()
    }

    /// `q^(k X0)` as a diagonal of powers of `s`.
    pub fn q_pow_x0(&self, k: i64) -> Result<FieldMatrix, Error> {
        let d: Vec<FieldElement> = self.weights2()?.into_iter().map(|w| FieldElement::var_pow(k * w)).collect();
        Ok(Matrix::diag(&Field::Q, &d))
    }

    /// `[[2 X0]]_q` evaluated on the diagonal.
    pub fn sym_2x0(&self) -> Result<FieldMatrix, Error> {
        let d: Vec<FieldElement> = self.weights2()?.into_iter().map(sym).collect();
        Ok(Matrix::diag(&Field::Q, &d))
    }

    pub fn specialize(&self, point: &BigRational) -> Result<SpinRep, Error> {
        Ok(SpinRep {
            spin: self.spin,
            x0: self.x0.specialize(point)?,
            xp: self.xp.specialize(point)?,
            xm: self.xm.specialize(point)?,
        })
    }
}

/// `[[2 X]]_q` for a diagonal matrix with half-integer entries.
pub fn sym_2diag(m: &FieldMatrix) -> Result<FieldMatrix, Error> {
    if !m.is_diagonal(&Field::Q) {
        return Err(Error::NonDiagonalX0);
    }
    let d = m
        .diagonal()
        .iter()
        .map(|x| {
            let r = (x * &FieldElement::from_int(2)).as_rational().ok_or(Error::NonDiagonalX0)?;
            crate::scalars::to_i64(&r).map(sym).ok_or(Error::NonDiagonalX0)
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Matrix::diag(&Field::Q, &d))
}

fn render(m: &FieldMatrix) -> String {
    m.render(&Field::Q)
        .into_iter()
        .map(|r| format!("[{}]", r.join(", ")))
        .collect::<Vec<_>>()
        .join(", ")
}

/// `[X0, X+-] = +-X+-`, `[X+, X-] = [[2X0]]`, nilpotency and `q <-> q^-1` symmetry.
pub fn verify_slq2(rep: &SpinRep) -> Result<Report, Error> {
    let f = &Field::Q;
    let mut r = Report::new(&format!("slq2 j={}", rep.spin));
    r.push("[X0, X+] = X+", render(&rep.x0.commutator(f, &rep.xp)?), render(&rep.xp));
    r.push("[X0, X-] = -X-", render(&rep.x0.commutator(f, &rep.xm)?), render(&rep.xm.scale(f, &-FieldElement::one())));
    let s2 = rep.sym_2x0()?;
    r.push("[X+, X-] = [[2X0]]", render(&rep.xp.commutator(f, &rep.xm)?), render(&s2));
    r.push("[[2X0]] symmetric under q <-> q^-1", render(&s2.invert_variable()?), render(&s2));
    let zero = render(&FieldMatrix::zeros(f, rep.dim(), rep.dim()));
    let d = rep.dim() as u32;
    r.push("X+^dim = 0", render(&rep.xp.pow(f, d)?), zero.clone());
    r.push("X-^dim = 0", render(&rep.xm.pow(f, d)?), zero);
    Ok(r)
}

/// Factorial convention for [`q_exponential_of_nilpotent`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExpBase {
    /// `[n]_{q^2}!`
    QSquared,
    /// `[n]_{q^-2}!`
    QInverseSquared,
    /// `n!`
    Classical,
}

fn exp_factorial(n: u32, base: ExpBase) -> FieldElement {
    match base {
        ExpBase::QSquared => heine_factorial_base(n, &FieldElement::q_pow(2)),
        ExpBase::QInverseSquared => heine_factorial_base(n, &FieldElement::q_pow(-2)),
        ExpBase::Classical => factorial(n),
    }
}

/// `sum_n M^n / [n]!` over a nilpotent matrix, truncated at the nilpotency index.
pub fn q_exponential_of_nilpotent<R: Ring>(ring: &R, m: &Matrix<R::Elem>, base: ExpBase) -> Result<Matrix<R::Elem>, Error> {
    let k = m.nilpotency_index(ring)?;
    let mut acc = Matrix::zeros(ring, m.rows(), m.cols());
    let mut p = Matrix::identity(ring, m.rows());
    for n in 0..k {
        let c = exp_factorial(n, base).inv()?;
        acc = acc.add(ring, &p.scale(ring, &c))?;
        p = p.mul(ring, m)?;
    }
    Ok(acc)
}

/// `E^k` in the parameter algebra, `E^-1` for negative powers.
pub fn e_power(rs: &RewriteSystem, k: i64) -> NCPolynomial {
    let g = if k >= 0 { "E" } else { "Einv" };
    let w = vec![g; k.unsigned_abs() as usize];
    rs.monomial(&w).expect("parameter algebra has E and Einv")
}

fn param_times(rs: &RewriteSystem, name: &str, m: &FieldMatrix) -> Matrix<NCPolynomial> {
    let g = rs.gen(name).expect("parameter generator");
    m.map(|c| g.scale(c))
}

/// `e_{q^-2}^{gamma X-} diag(E^{2m}) e_{q^2}^{beta X+}` in the parameter algebra.
pub fn universal_t(rep: &SpinRep) -> Result<Matrix<NCPolynomial>, Error> {
    let rs = presets::parameter_algebra();
    universal_t_in(&rs, rep)
}

pub fn universal_t_in(rs: &RewriteSystem, rep: &SpinRep) -> Result<Matrix<NCPolynomial>, Error> {
    let w = rep.weights2()?;
    let left = q_exponential_of_nilpotent(rs, &param_times(rs, "gamma", &rep.xm), ExpBase::QInverseSquared)?;
    let mid = Matrix::diag(rs, &w.iter().map(|&k| e_power(rs, k)).collect::<Vec<_>>());
    let right = q_exponential_of_nilpotent(rs, &param_times(rs, "beta", &rep.xp), ExpBase::QSquared)?;
    Matrix::product(rs, &[&left, &mid, &right])
}

/// The entries `A = E`, `B = E beta`, `C = gamma E`, `D = E^-1 + gamma E beta`.
pub fn parameter_abcd(rs: &RewriteSystem) -> [NCPolynomial; 4] {
    let m = |n: &[&str]| rs.reduce(&rs.monomial(n).expect("parameter generator"));
    [
        m(&["E"]),
        m(&["E", "beta"]),
        m(&["gamma", "E"]),
        m(&["Einv"]).add(&m(&["gamma", "E", "beta"])),
    ]
}

/// The three-dimensional corepresentation built from `A, B, C, D` by `subst`.
pub fn t1_matrix<R: Ring>(ring: &R, abcd: &[R::Elem; 4], with_roots: bool) -> Matrix<R::Elem> {
    let [a, b, c, d] = abcd;
    let m = |x: &R::Elem, y: &R::Elem| ring.mul(x, y);
    let k = if with_roots {
        rho(2) * FieldElement::var_pow(-1)
    } else {
        FieldElement::one()
    };
    let r = |x: R::Elem| ring.scale(&x, &k);
    let mid = ring.add(&m(a, d), &ring.scale(&m(b, c), &FieldElement::q_pow(-1)));
    Matrix::from_rows(vec![
        vec![m(a, a), r(m(a, b)), m(b, b)],
        vec![r(m(a, c)), mid, r(m(b, d))],
        vec![m(c, c), r(m(c, d)), m(d, d)],
    ])
    .expect("3x3 literal")
}

/// `universal_T(j=1)` against the three-dimensional corepresentation under the
/// parametrization of `A, B, C, D`, and `universal_T(j=1/2)` against that parametrization.
pub fn universal_t_vs_t1_check() -> Result<Report, Error> {
    let rs = presets::parameter_algebra();
    let mut r = Report::new("universal-t");
    let abcd = parameter_abcd(&rs);
    let ut_half = universal_t_in(&rs, &spin_rep(Spin::HALF))?;
    let half = Matrix::from_rows(vec![vec![abcd[0].clone(), abcd[1].clone()], vec![abcd[2].clone(), abcd[3].clone()]])?;
    for i in 0..2 {
        for j in 0..2 {
            r.push(
                format!("j=1/2 ({},{})", i + 1, j + 1),
                rs.render(ut_half.get(i, j)),
                rs.render(half.get(i, j)),
            );
        }
    }
    let ut = universal_t_in(&rs, &spin_rep(Spin::ONE))?;
    let t1 = t1_matrix(&rs, &abcd, true);
    for i in 0..3 {
        for j in 0..3 {
            r.push(format!("j=1 ({},{})", i + 1, j + 1), rs.render(ut.get(i, j)), rs.render(t1.get(i, j)));
        }
    }
    Ok(r)
}

/// `q^{2 X0 (x) X0} sum_n (1-q^-2)^n / [[n]]! q^{n(n-1)/2} (q^{X0} X+ (x) q^{-X0} X-)^n`.
pub fn universal_r(rep1: &SpinRep, rep2: &SpinRep) -> Result<FieldMatrix, Error> {
    let f = &Field::Q;
    let w1 = rep1.weights2()?;
    let w2 = rep2.weights2()?;
    let mut d = Vec::with_capacity(w1.len() * w2.len());
    for a in &w1 {
        for b in &w2 {
            // q^{2 m1 m2} = s^{4 m1 m2} = s^{(2m1)(2m2)}
            d.push(FieldElement::var_pow(a * b));
        }
    }
    let cartan = Matrix::diag(f, &d);
    let x = rep1
        .q_pow_x0(1)?
        .mul(f, &rep1.xp)?
        .kron(f, &rep2.q_pow_x0(-1)?.mul(f, &rep2.xm)?);
    let k = x.nilpotency_index(f)?;
    let n_dim = x.rows();
    let mut series = FieldMatrix::zeros(f, n_dim, n_dim);
    let mut p = FieldMatrix::id(n_dim);
    let t = FieldElement::one() - FieldElement::q_pow(-2);
    for n in 0..k {
        let nn = n as i64;
        let c = t.pow(n) * FieldElement::q_pow(nn * (nn - 1) / 2) * crate::qseries::q_factorial(n, crate::qseries::QNumberConvention::Symmetric).inv()?;
        series = series.add(f, &p.scale(f, &c))?;
        p = p.mul(f, &x)?;
    }
    cartan.mul(f, &series)
}

/// The fundamental R-matrix written out by hand:
/// `s^-1 [[q,0,0,0],[0,1,q-q^-1,0],[0,0,1,0],[0,0,0,q]]`.
pub fn fundamental_r() -> FieldMatrix {
    let z = FieldElement::zero;
    let q = FieldElement::q;
    let one = FieldElement::one;
    let m = Matrix::from_rows(vec![
        vec![q(), z(), z(), z()],
        vec![z(), one(), q() - FieldElement::q_pow(-1), z()],
        vec![z(), z(), one(), z()],
        vec![z(), z(), z(), q()],
    ])
    .expect("4x4 literal");
    m.scale(&Field::Q, &FieldElement::var_pow(-1))
}

/// `L(+)` and `L(-)` flattened to `2 dim x 2 dim` scalar matrices.
pub fn l_matrices(rep: &SpinRep) -> Result<(FieldMatrix, FieldMatrix), Error> {
    let f = &Field::Q;
    let d = rep.dim();
    let qq = FieldElement::q() - FieldElement::q_pow(-1);
    let zero = FieldMatrix::zeros(f, d, d);
    let plus = Matrix::from_blocks(&[
        vec![rep.q_pow_x0(-1)?, rep.xm.scale(f, &(-(FieldElement::s() * &qq)))],
        vec![zero.clone(), rep.q_pow_x0(1)?],
    ])?;
    let minus = Matrix::from_blocks(&[
        vec![rep.q_pow_x0(1)?, zero],
        vec![rep.xp.scale(f, &(FieldElement::var_pow(-1) * qq)), rep.q_pow_x0(-1)?],
    ])?;
    Ok((plus, minus))
}

/// Classical `sl(2)`: `[X0, X+-] = +-X+-`, `[X+, X-] = 2 X0` for rational matrices.
pub fn verify_sl2_classical(x0: &FieldMatrix, xp: &FieldMatrix, xm: &FieldMatrix, label: &str) -> Result<Report, Error> {
    let f = &Field::Q;
    let mut r = Report::new(label);
    r.push("[X0, X+] = X+", render(&x0.commutator(f, xp)?), render(xp));
    r.push("[X0, X-] = -X-", render(&x0.commutator(f, xm)?), render(&xm.scale(f, &-FieldElement::one())));
    r.push("[X+, X-] = 2X0", render(&xp.commutator(f, xm)?), render(&x0.scale(f, &FieldElement::from_int(2))));
    Ok(r)
}

/// `q = 1`.
pub fn classical_point() -> BigRational {
    BigRational::one()
}
