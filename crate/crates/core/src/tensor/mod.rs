//! Matrices over rings and the tensor-product algebra of noncommutative polynomials.

mod element;
mod matrix;
mod ring;

pub use element::{TensorAlgebra, TensorElement};
pub use matrix::{FieldMatrix, Matrix};
pub use ring::{Field, Ring};

use crate::error::Error;
use crate::ncalg::NCPolynomial;
use crate::scalars::FieldElement;

/// Which pair of three tensor slots an operator acts on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SlotPair {
    S12,
    S13,
    S23,
}

/// Lifts a polynomial matrix to one-slot tensors.
pub fn lift_matrix(m: &Matrix<NCPolynomial>) -> Matrix<TensorElement> {
    m.map(TensorElement::lift)
}

/// `(T1 (.) T2)_ij = sum_l T1_il (x) T2_lj`. Slots are juxtaposed, so the
/// inputs may already be multi-slot.
pub fn dotted_tensor(t1: &Matrix<TensorElement>, t2: &Matrix<TensorElement>) -> Result<Matrix<TensorElement>, Error> {
    if !t1.is_square() || t1.rows() != t2.rows() || !t2.is_square() {
        return Err(Error::DimensionMismatch(format!(
            "dotted product of {}x{} and {}x{}",
            t1.rows(),
            t1.cols(),
            t2.rows(),
            t2.cols()
        )));
    }
    let n = t1.rows();
    Ok(Matrix::from_fn(n, n, |i, j| {
        (0..n).fold(TensorElement::zero(), |acc, l| acc.add(&t1.get(i, l).outer(t2.get(l, j))))
    }))
}

/// Entrywise slot flip.
pub fn flip_matrix(m: &Matrix<TensorElement>) -> Matrix<TensorElement> {
    m.map(TensorElement::flip)
}

/// Permutation `P e_i (x) e_k = e_k (x) e_i` on `dim^2`.
pub fn swap_matrix(dim: usize) -> FieldMatrix {
    let n = dim * dim;
    Matrix::from_fn(n, n, |r, c| {
        let (i, k) = (r / dim, r % dim);
        if c == k * dim + i {
            FieldElement::one()
        } else {
            FieldElement::zero()
        }
    })
}

/// `R` acting on two of three `dim`-dimensional slots, identity on the third.
pub fn embed_3slot(r: &FieldMatrix, pos: SlotPair, dim: usize) -> Result<FieldMatrix, Error> {
    let d2 = dim * dim;
    if r.rows() != d2 || r.cols() != d2 {
        return Err(Error::DimensionMismatch(format!(
            "expected {d2}x{d2}, got {}x{}",
            r.rows(),
            r.cols()
        )));
    }
    let n = d2 * dim;
    let split = |x: usize| (x / d2, (x / dim) % dim, x % dim);
    Ok(Matrix::from_fn(n, n, |a, b| {
        let (i1, i2, i3) = split(a);
        let (j1, j2, j3) = split(b);
        let (pi, pj, free) = match pos {
            SlotPair::S12 => ((i1, i2), (j1, j2), (i3, j3)),
            SlotPair::S13 => ((i1, i3), (j1, j3), (i2, j2)),
            SlotPair::S23 => ((i2, i3), (j2, j3), (i1, j1)),
        };
        if free.0 == free.1 {
            r.get(pi.0 * dim + pi.1, pj.0 * dim + pj.1).clone()
        } else {
            FieldElement::zero()
        }
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncalg::presets::fun_q_sl2;

    fn t_matrix() -> (crate::ncalg::RewriteSystem, Matrix<NCPolynomial>) {
        let rs = fun_q_sl2();
        let g = |n: &str| rs.gen(n).unwrap();
        let t = Matrix::from_rows(vec![vec![g("A"), g("B")], vec![g("C"), g("D")]]).unwrap();
        (rs, t)
    }

    #[test]
    fn kron_reproduces_t1_t2() {
        let (rs, t) = t_matrix();
        let id = Matrix::identity(&rs, 2);
        let t1 = t.kron(&rs, &id);
        let t2 = id.kron(&rs, &t);
        let p = t1.mul(&rs, &t2).unwrap();
        let r = p.render(&rs);
        assert_eq!(r[0], ["A*A", "A*B", "B*A", "B*B"].iter().map(|s| {
            rs.render(&rs.reduce(&rs.monomial(&s.split('*').collect::<Vec<_>>()).unwrap()))
        }).collect::<Vec<_>>());
        assert_eq!(r[3][3], "D*D");
        let i4 = Matrix::identity(&rs, 4);
        assert_eq!(id.kron(&rs, &id), i4);
    }

    #[test]
    fn dimension_mismatch() {
        let a = FieldMatrix::from_ints(&[&[1, 2, 3], &[4, 5, 6]]);
        let b = FieldMatrix::from_ints(&[&[1, 2], &[3, 4]]);
        assert!(matches!(a.mul(&Field::Q, &b), Err(Error::DimensionMismatch(_))));
        assert_eq!(FieldMatrix::id(2).mul(&Field::Q, &b).unwrap(), b);
    }

    #[test]
    fn dotted_entry() {
        let (rs, t) = t_matrix();
        let ta = TensorAlgebra::power(&rs, 2);
        let lt = lift_matrix(&t);
        let d = dotted_tensor(&lt, &lt).unwrap();
        assert_eq!(ta.render(d.get(0, 0)), "A (x) A + B (x) C");
        let id = lift_matrix(&Matrix::identity(&rs, 2));
        let did = dotted_tensor(&id, &id).unwrap();
        assert_eq!(ta.render(did.get(0, 0)), "1 (x) 1");
        assert!(did.get(0, 1).is_zero());
    }

    #[test]
    fn coassociative_at_matrix_level() {
        let (_, t) = t_matrix();
        let lt = lift_matrix(&t);
        let left = dotted_tensor(&dotted_tensor(&lt, &lt).unwrap(), &lt).unwrap();
        let right = dotted_tensor(&lt, &dotted_tensor(&lt, &lt).unwrap()).unwrap();
        assert_eq!(left, right);
    }

    #[test]
    fn embeddings() {
        let p = swap_matrix(2);
        assert_eq!(p, FieldMatrix::from_ints(&[&[1, 0, 0, 0], &[0, 0, 1, 0], &[0, 1, 0, 0], &[0, 0, 0, 1]]));
        let i2 = FieldMatrix::id(2);
        assert_eq!(embed_3slot(&p, SlotPair::S12, 2).unwrap(), p.kron(&Field::Q, &i2));
        assert_eq!(embed_3slot(&p, SlotPair::S23, 2).unwrap(), i2.kron(&Field::Q, &p));
        for pos in [SlotPair::S12, SlotPair::S13, SlotPair::S23] {
            assert_eq!(embed_3slot(&FieldMatrix::id(4), pos, 2).unwrap(), FieldMatrix::id(8));
        }
        // P13 = P23 P12 P23
        let p12 = embed_3slot(&p, SlotPair::S12, 2).unwrap();
        let p23 = embed_3slot(&p, SlotPair::S23, 2).unwrap();
        let p13 = embed_3slot(&p, SlotPair::S13, 2).unwrap();
        assert_eq!(FieldMatrix::product(&Field::Q, &[&p23, &p12, &p23]).unwrap(), p13);
    }

    #[test]
    fn inverse_and_minimal_polynomial() {
        let q = FieldElement::q();
        let m = Matrix::from_rows(vec![
            vec![q.clone(), FieldElement::one()],
            vec![FieldElement::zero(), FieldElement::q_pow(-1)],
        ])
        .unwrap();
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&Field::Q, &inv).unwrap(), FieldMatrix::id(2));
        let mp = m.minimal_polynomial().unwrap();
        // (x - q)(x - q^-1) = x^2 - (q + q^-1) x + 1
        assert_eq!(mp, vec![FieldElement::one(), -(q + FieldElement::q_pow(-1)), FieldElement::one()]);
        assert!(matches!(FieldMatrix::from_ints(&[&[1, 1], &[1, 1]]).inverse(), Err(Error::Singular)));
        assert_eq!(FieldMatrix::id(3).minimal_polynomial().unwrap().len(), 2);
    }
}
