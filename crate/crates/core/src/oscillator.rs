//! Truncated Fock spaces, q-bosons and the Jordan-Schwinger construction.

use crate::error::Error;
use crate::hopf::render_matrix as render;
use crate::qseries::sym;
use crate::report::Report;
use crate::reps::{rho, sym_2diag, Spin, SpinRep};
use crate::scalars::{sqrt_rational, FieldElement};
use crate::tensor::{Field, FieldMatrix, Matrix};
use num_bigint::BigInt;
use num_rational::BigRational;

/// `d` levels of a boson (`deformed = false`) or q-boson.
#[derive(Clone, Debug, PartialEq)]
pub struct FockRep {
    pub d: usize,
    pub deformed: bool,
    pub a: FieldMatrix,
    pub adag: FieldMatrix,
    pub n: FieldMatrix,
}

/// `sqrt([[n]])` or `sqrt(n)`.
fn root(n: usize, deformed: bool) -> Result<FieldElement, Error> {
    if deformed {
        Ok(rho(n as u32))
    } else {
        Ok(sqrt_rational(&BigRational::from_integer(BigInt::from(n)))?)
    }
}

pub fn fock_rep(d: usize, deformed: bool) -> Result<FockRep, Error> {
    if d < 2 {
        return Err(Error::BadDimension(d));
    }
    let mut adag = FieldMatrix::zeros(&Field::Q, d, d);
    for n in 1..d {
        adag.set(n, n - 1, root(n, deformed)?);
    }
    let a = adag.transpose();
    let n = Matrix::diag(&Field::Q, &(0..d).map(|k| FieldElement::from_int(k as i64)).collect::<Vec<_>>());
    Ok(FockRep { d, deformed, a, adag, n })
}

fn column(m: &FieldMatrix, j: usize) -> String {
    let col: Vec<String> = (0..m.rows()).map(|i| m.get(i, j).render(crate::scalars::VarStyle::Q)).collect();
    format!("[{}]", col.join(", "))
}

/// `AA+ - qA+A = q^-N` and `[N, A+] = A+` on the states below the top level;
/// classical Fock spaces use `q = 1`.
pub fn verify_qboson(f: &FockRep) -> Result<Report, Error> {
    let fq = &Field::Q;
    let q = if f.deformed { FieldElement::q() } else { FieldElement::one() };
    let aad = f.a.mul(fq, &f.adag)?;
    let ada = f.adag.mul(fq, &f.a)?;
    let lhs = aad.sub(fq, &ada.scale(fq, &q))?;
    let rhs = Matrix::diag(
        fq,
        &(0..f.d)
            .map(|n| if f.deformed { FieldElement::q_pow(-(n as i64)) } else { FieldElement::one() })
            .collect::<Vec<_>>(),
    );
    let comm = f.n.commutator(fq, &f.adag)?;
    let kind = if f.deformed { "q-boson" } else { "boson" };
    let mut r = Report::new(&format!("{kind} d={}", f.d));
    let top = f.d - 1;
    for n in 0..top {
        let name = if f.deformed { "(AA+ - qA+A)" } else { "[a, a+]" };
        r.push(format!("{name}|{n}>"), column(&lhs, n), column(&rhs, n));
        r.push(format!("[N, A+]|{n}>"), column(&comm, n), column(&f.adag, n));
    }
    r.note(format!(
        "top level |{top}> is outside the check: (AA+ - qA+A)|{top}> = {} vs {}",
        lhs.get(top, top).render(crate::scalars::VarStyle::Q),
        rhs.get(top, top).render(crate::scalars::VarStyle::Q)
    ));
    Ok(r)
}

/// The sector `n1 + n2 = total` with basis `|total, 0>, |total-1, 1>, ..., |0, total>`.
#[derive(Clone, Debug, PartialEq)]
pub struct SectorRep {
    pub total: usize,
    pub deformed: bool,
    pub j0: FieldMatrix,
    pub jplus: FieldMatrix,
    pub jminus: FieldMatrix,
}

impl SectorRep {
    pub fn dim(&self) -> usize {
        self.total + 1
    }

    /// The same matrices as a spin `total / 2` representation.
    pub fn as_spin_rep(&self) -> SpinRep {
        SpinRep {
            spin: Spin::from_twice(self.total as u32),
            x0: self.j0.clone(),
            xp: self.jplus.clone(),
            xm: self.jminus.clone(),
        }
    }
}

/// `J+ = A1+ A2`, `J- = A2+ A1`, `J0 = (N1 - N2)/2` on one sector.
pub fn jordan_schwinger(total: usize, deformed: bool) -> Result<SectorRep, Error> {
    if total == 0 {
        return Err(Error::BadSector(total));
    }
    let dim = total + 1;
    // basis index i holds n1 = total - i, n2 = i
    let j0 = Matrix::diag(
        &Field::Q,
        &(0..dim).map(|i| FieldElement::ratio(total as i64 - 2 * i as i64, 2)).collect::<Vec<_>>(),
    );
    let mut jplus = FieldMatrix::zeros(&Field::Q, dim, dim);
    for i in 1..dim {
        // |n1, n2> -> sqrt(n1 + 1) sqrt(n2) |n1 + 1, n2 - 1>
        let (n1, n2) = (total - i, i);
        jplus.set(i - 1, i, root(n1 + 1, deformed)? * root(n2, deformed)?);
    }
    let jminus = jplus.transpose();
    Ok(SectorRep { total, deformed, j0, jplus, jminus })
}

/// `J0`, `J+`, `J-` built on the full `(total+1)^2` two-mode space.
pub fn two_mode_generators(total: usize, deformed: bool) -> Result<[FieldMatrix; 3], Error> {
    let f = &Field::Q;
    let fock = fock_rep(total + 1, deformed)?;
    let id = FieldMatrix::id(total + 1);
    let (a1, a2) = (fock.a.kron(f, &id), id.kron(f, &fock.a));
    let (ad1, ad2) = (fock.adag.kron(f, &id), id.kron(f, &fock.adag));
    let (n1, n2) = (fock.n.kron(f, &id), id.kron(f, &fock.n));
    let half = FieldElement::ratio(1, 2);
    Ok([n1.sub(f, &n2)?.scale(f, &half), ad1.mul(f, &a2)?, ad2.mul(f, &a1)?])
}

/// `J+-` commute with `N1 + N2` on the two-mode space, and their restriction to
/// each sector `n1 + n2 = t <= total` is the sector representation.
pub fn sector_exactness_check(total: usize, deformed: bool) -> Result<Report, Error> {
    let d = total + 1;
    let [j0, jp, jm] = two_mode_generators(total, deformed)?;
    let mut r = Report::new(&format!("sector exactness total<={total}"));
    let index = |n1: usize, n2: usize| n1 * d + n2;
    for (name, m) in [("J+", &jp), ("J-", &jm)] {
        let mixes = (0..d * d).any(|a| {
            (0..d * d).any(|b| !m.get(a, b).is_zero() && a / d + a % d != b / d + b % d)
        });
        r.push_bool(format!("{name} preserves n1 + n2"), !mixes, true);
    }
    for t in 1..=total {
        let sector = jordan_schwinger(t, deformed)?;
        let idx: Vec<usize> = (0..=t).map(|i| index(t - i, i)).collect();
        let restrict = |m: &FieldMatrix| Matrix::from_fn(t + 1, t + 1, |a, b| m.get(idx[a], idx[b]).clone());
        for (name, full, small) in [("J0", &j0, &sector.j0), ("J+", &jp, &sector.jplus), ("J-", &jm, &sector.jminus)] {
            r.push(format!("{name} on sector {t}"), render(&restrict(full)), render(small));
        }
    }
    Ok(r)
}

/// `[J0, J+-] = +-J+-`, `[J+, J-] = [[2 J0]]` (or `2 J0`), and `J+^T = J-`.
pub fn verify_su_q2(sr: &SectorRep, deformed: bool) -> Result<Report, Error> {
    let f = &Field::Q;
    let (j0, jp, jm) = (&sr.j0, &sr.jplus, &sr.jminus);
    let algebra = if deformed { "su_q(2)" } else { "su(2)" };
    let mut r = Report::new(&format!("{algebra} total={}", sr.total));
    r.note("hermiticity is checked as transposition, valid for real q");
    r.push("[J0, J+] = J+", render(&j0.commutator(f, jp)?), render(jp));
    r.push("[J0, J-] = -J-", render(&j0.commutator(f, jm)?), render(&jm.scale(f, &-FieldElement::one())));
    let top = if deformed { sym_2diag(j0)? } else { j0.scale(f, &FieldElement::from_int(2)) };
    let label = if deformed { "[J+, J-] = [[2 J0]]" } else { "[J+, J-] = 2 J0" };
    r.push(label, render(&jp.commutator(f, jm)?), render(&top));
    r.push("J+^T = J-", render(&jp.transpose()), render(jm));
    r.push("J0^T = J0", render(&j0.transpose()), render(j0));
    Ok(r)
}

/// Eigenvalues of `(aa+ + a+a)/2`, split into the interior levels and the top one.
#[derive(Clone, Debug, PartialEq)]
pub struct Spectrum {
    pub interior: Vec<FieldElement>,
    /// Truncation artifact.
    pub top: FieldElement,
}

pub fn hamiltonian_spectrum(f: &FockRep) -> Result<Spectrum, Error> {
    let fq = &Field::Q;
    let h = f.a.mul(fq, &f.adag)?.add(fq, &f.adag.mul(fq, &f.a)?)?.scale(fq, &FieldElement::ratio(1, 2));
    debug_assert!(h.is_diagonal(fq));
    let mut diag = h.diagonal();
    let top = diag.pop().expect("d >= 2");
    Ok(Spectrum { interior: diag, top })
}

/// `(AA+ - qA+A)|n> = q^-n |n>` restated as `[[n+1]] - q [[n]] = q^-n`.
pub fn qboson_identity(n: i64) -> bool {
    sym(n + 1) - FieldElement::q() * sym(n) == FieldElement::q_pow(-n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::{uq_coproduct_rep, Variant};
    use crate::reps::{classical_point, spin_rep, verify_slq2};

    #[test]
    fn fock_matrices() {
        let f = fock_rep(3, true).unwrap();
        let ada = f.adag.mul(&Field::Q, &f.a).unwrap();
        let expect = Matrix::diag(&Field::Q, &[FieldElement::zero(), FieldElement::one(), FieldElement::q() + FieldElement::q_pow(-1)]);
        assert_eq!(ada, expect);
        assert_eq!(f.adag.transpose(), f.a);
        assert!(matches!(fock_rep(1, true), Err(Error::BadDimension(1))));
        let c = fock_rep(3, false).unwrap();
        let comm = c.a.commutator(&Field::Q, &c.adag).unwrap();
        assert_eq!(comm, Matrix::diag(&Field::Q, &[FieldElement::one(), FieldElement::one(), FieldElement::from_int(-2)]));
        let one = classical_point();
        assert_eq!(f.adag.specialize(&one).unwrap(), fock_rep(3, false).unwrap().adag);
    }

    #[test]
    fn qboson_interior() {
        for d in 2..=6 {
            for deformed in [true, false] {
                let r = verify_qboson(&fock_rep(d, deformed).unwrap()).unwrap();
                assert_eq!(r.checks.len(), 2 * (d - 1));
                assert!(r.passed(), "d={d}: {:?}", r.failures().collect::<Vec<_>>());
                assert!(r.notes[0].contains(&format!("|{}>", d - 1)));
            }
        }
        assert!((0..8).all(qboson_identity));
    }

    #[test]
    fn jordan_schwinger_sectors() {
        let s1 = jordan_schwinger(1, true).unwrap();
        let half = spin_rep(Spin::HALF);
        assert_eq!(s1.as_spin_rep(), half);
        assert_eq!(jordan_schwinger(1, false).unwrap().as_spin_rep(), half);
        for total in 1..=3 {
            for deformed in [true, false] {
                let s = jordan_schwinger(total, deformed).unwrap();
                let r = verify_su_q2(&s, deformed).unwrap();
                assert!(r.passed(), "{total} {deformed}: {:?}", r.failures().collect::<Vec<_>>());
                assert!(sector_exactness_check(total, deformed).unwrap().passed());
            }
        }
        let s2 = jordan_schwinger(2, true).unwrap();
        assert!(verify_slq2(&s2.as_spin_rep()).unwrap().passed());
        assert!(matches!(jordan_schwinger(0, true), Err(Error::BadSector(0))));
        // q = 1 specialization matches the classical construction
        let one = classical_point();
        let c = jordan_schwinger(3, false).unwrap();
        assert_eq!(jordan_schwinger(3, true).unwrap().jplus.specialize(&one).unwrap(), c.jplus);
    }

    #[test]
    fn spin_one_up_to_scaling() {
        // the sector and spin_rep(1) are related by a diagonal change of basis
        let s = jordan_schwinger(2, true).unwrap();
        let v = spin_rep(Spin::ONE);
        let f = &Field::Q;
        let prod_s = s.jplus.mul(f, &s.jminus).unwrap();
        let prod_v = v.xp.mul(f, &v.xm).unwrap();
        assert_eq!(prod_s, prod_v);
        assert_eq!(s.j0, v.x0);
    }

    #[test]
    fn corrupted_generator_fails() {
        let mut s = jordan_schwinger(3, true).unwrap();
        let doubled = s.jplus.get(0, 1) * &FieldElement::from_int(2);
        s.jplus.set(0, 1, doubled);
        assert!(!verify_su_q2(&s, true).unwrap().passed());
    }

    #[test]
    fn coproduct_from_sector() {
        let s = jordan_schwinger(1, true).unwrap().as_spin_rep();
        let h = spin_rep(Spin::HALF);
        for v in [Variant::Q, Variant::QInverse] {
            assert_eq!(uq_coproduct_rep(&s, &s, v).unwrap(), uq_coproduct_rep(&h, &h, v).unwrap());
        }
    }

    #[test]
    fn spectra() {
        let sp = hamiltonian_spectrum(&fock_rep(4, false).unwrap()).unwrap();
        assert_eq!(sp.interior, vec![FieldElement::ratio(1, 2), FieldElement::ratio(3, 2), FieldElement::ratio(5, 2)]);
        assert_eq!(sp.top, FieldElement::ratio(3, 2));
        assert_eq!(hamiltonian_spectrum(&fock_rep(2, false).unwrap()).unwrap().interior, vec![FieldElement::ratio(1, 2)]);
        let dq = hamiltonian_spectrum(&fock_rep(4, true).unwrap()).unwrap();
        for (n, e) in dq.interior.iter().enumerate() {
            let n = n as i64;
            assert_eq!(*e, (sym(n + 1) + sym(n)) * FieldElement::ratio(1, 2));
        }
    }
}
