use super::ring::{Field, Ring};
use crate::error::Error;
use crate::scalars::FieldElement;
use num_rational::BigRational;

/// Dense rectangular matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    entries: Vec<T>,
}

impl<T: Clone> Matrix<T> {
    pub fn new(rows: usize, cols: usize, entries: Vec<T>) -> Result<Self, Error> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(Matrix { rows, cols, entries })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Matrix { rows, cols, entries }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self, Error> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        if rows.iter().any(|x| x.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Matrix::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    pub fn map<U: Clone>(&self, f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn try_map<U: Clone, E>(&self, f: impl FnMut(&T) -> Result<U, E>) -> Result<Matrix<U>, E> {
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect::<Result<_, _>>()?,
        })
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// Flattens a grid of equally sized blocks.
    pub fn from_blocks(blocks: &[Vec<Matrix<T>>]) -> Result<Self, Error> {
        let br = blocks.len();
        let bc = blocks.first().map_or(0, |r| r.len());
        let first = blocks
            .first()
            .and_then(|r| r.first())
            .ok_or_else(|| Error::DimensionMismatch("empty block grid".into()))?;
        let (h, w) = (first.rows, first.cols);
        for row in blocks {
            if row.len() != bc || row.iter().any(|b| b.rows != h || b.cols != w) {
                return Err(Error::DimensionMismatch("blocks differ in shape".into()));
            }
        }
        Ok(Matrix::from_fn(br * h, bc * w, |i, j| blocks[i / h][j / w].get(i % h, j % w).clone()))
    }

    /// Block `(bi, bj)` of size `h x w`.
    pub fn block(&self, bi: usize, bj: usize, h: usize, w: usize) -> Self {
        Matrix::from_fn(h, w, |i, j| self.get(bi * h + i, bj * w + j).clone())
    }

    pub fn zeros<R: Ring<Elem = T>>(ring: &R, rows: usize, cols: usize) -> Self {
        Matrix::from_fn(rows, cols, |_, _| ring.zero())
    }

    pub fn identity<R: Ring<Elem = T>>(ring: &R, n: usize) -> Self {
        Matrix::from_fn(n, n, |i, j| if i == j { ring.one() } else { ring.zero() })
    }

    /// Diagonal matrix with the given entries.
    pub fn diag<R: Ring<Elem = T>>(ring: &R, d: &[T]) -> Self {
        Matrix::from_fn(d.len(), d.len(), |i, j| if i == j { d[i].clone() } else { ring.zero() })
    }

    /// `(AB)_ij = sum_l A_il B_lj`, left factor kept on the left.
    pub fn mul<R: Ring<Elem = T>>(&self, ring: &R, other: &Matrix<T>) -> Result<Self, Error> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zeros(ring, self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if ring.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(l, j);
                    if ring.is_zero(b) {
                        continue;
                    }
                    let idx = i * other.cols + j;
                    out.entries[idx] = ring.add(&out.entries[idx], &ring.mul(a, b));
                }
            }
        }
        Ok(out)
    }

    /// Product of a chain of matrices, left to right.
    pub fn product<R: Ring<Elem = T>>(ring: &R, ms: &[&Matrix<T>]) -> Result<Self, Error> {
        let (first, rest) = ms
            .split_first()
            .ok_or_else(|| Error::DimensionMismatch("empty product".into()))?;
        rest.iter().try_fold((*first).clone(), |acc, m| acc.mul(ring, m))
    }

    pub fn add<R: Ring<Elem = T>>(&self, ring: &R, other: &Matrix<T>) -> Result<Self, Error> {
        self.zip(other, |a, b| ring.add(a, b))
    }

    pub fn sub<R: Ring<Elem = T>>(&self, ring: &R, other: &Matrix<T>) -> Result<Self, Error> {
        self.zip(other, |a, b| ring.sub(a, b))
    }

    fn zip(&self, other: &Matrix<T>, f: impl Fn(&T, &T) -> T) -> Result<Self, Error> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| f(a, b)).collect(),
        })
    }

    pub fn scale<R: Ring<Elem = T>>(&self, ring: &R, c: &FieldElement) -> Self {
        self.map(|a| ring.scale(a, c))
    }

    /// `AB - BA`.
    pub fn commutator<R: Ring<Elem = T>>(&self, ring: &R, other: &Matrix<T>) -> Result<Self, Error> {
        self.mul(ring, other)?.sub(ring, &other.mul(ring, self)?)
    }

    pub fn pow<R: Ring<Elem = T>>(&self, ring: &R, k: u32) -> Result<Self, Error> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch("power of a non-square matrix".into()));
        }
        let mut acc = Matrix::identity(ring, self.rows);
        for _ in 0..k {
            acc = acc.mul(ring, self)?;
        }
        Ok(acc)
    }

    /// Kronecker product; row index `(i, k)` is `i * other.rows + k`.
    pub fn kron<R: Ring<Elem = T>>(&self, ring: &R, other: &Matrix<T>) -> Self {
        let (r2, c2) = (other.rows, other.cols);
        Matrix::from_fn(self.rows * r2, self.cols * c2, |i, j| {
            ring.mul(self.get(i / r2, j / c2), other.get(i % r2, j % c2))
        })
    }

    pub fn is_zero<R: Ring<Elem = T>>(&self, ring: &R) -> bool {
        self.entries.iter().all(|e| ring.is_zero(e))
    }

    pub fn is_diagonal<R: Ring<Elem = T>>(&self, ring: &R) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || ring.is_zero(self.get(i, j))))
    }

    pub fn diagonal(&self) -> Vec<T> {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i).clone()).collect()
    }

    /// Rendered entries, row by row.
    pub fn render<R: Ring<Elem = T>>(&self, ring: &R) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| ring.render(self.get(i, j))).collect())
            .collect()
    }

    /// Smallest power `k` with `M^k = 0`, probing up to the dimension.
    pub fn nilpotency_index<R: Ring<Elem = T>>(&self, ring: &R) -> Result<u32, Error> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch("nilpotency of a non-square matrix".into()));
        }
        let mut acc = Matrix::identity(ring, self.rows);
        for k in 0..=self.rows as u32 {
            if acc.is_zero(ring) {
                return Ok(k);
            }
            acc = acc.mul(ring, self)?;
        }
        Err(Error::NotNilpotent)
    }
}

/// Scalar matrices.
pub type FieldMatrix = Matrix<FieldElement>;

impl Matrix<FieldElement> {
    /// Integer matrix.
    pub fn from_ints(rows: &[&[i64]]) -> Self {
        let r: Vec<Vec<FieldElement>> = rows
            .iter()
            .map(|row| row.iter().map(|&x| FieldElement::from_int(x)).collect())
            .collect();
        Matrix::from_rows(r).expect("rectangular literal")
    }

    pub fn id(n: usize) -> Self {
        Matrix::identity(&Field::Q, n)
    }

    /// Gauss-Jordan inverse. Pivots must be invertible field elements, which
    /// rules out pivots with several radical terms.
    pub fn inverse(&self) -> Result<Self, Error> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Matrix::id(n);
        for col in 0..n {
            let (p, pinv) = (col..n)
                .find_map(|r| {
                    let x = a.get(r, col);
                    if x.is_zero() {
                        None
                    } else {
                        x.inv().ok().map(|i| (r, i))
                    }
                })
                .ok_or(Error::Singular)?;
            if p != col {
                for j in 0..n {
                    a.entries.swap(p * n + j, col * n + j);
                    inv.entries.swap(p * n + j, col * n + j);
                }
            }
            for j in 0..n {
                let x = &a.entries[col * n + j] * &pinv;
                a.entries[col * n + j] = x;
                let y = &inv.entries[col * n + j] * &pinv;
                inv.entries[col * n + j] = y;
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let f = a.get(r, col).clone();
                if f.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let x = &a.entries[r * n + j] - &(&f * &a.entries[col * n + j]);
                    a.entries[r * n + j] = x;
                    let y = &inv.entries[r * n + j] - &(&f * &inv.entries[col * n + j]);
                    inv.entries[r * n + j] = y;
                }
            }
        }
        Ok(inv)
    }

    /// Row rank by elimination; nonzero pivots must be invertible.
    pub fn rank(&self) -> Result<usize, Error> {
        let (n, m) = (self.rows, self.cols);
        let mut a = self.clone();
        let mut rank = 0;
        for col in 0..m {
            let Some(p) = (rank..n).find(|&r| !a.get(r, col).is_zero()) else {
                continue;
            };
            let pinv = a.get(p, col).inv()?;
            for j in 0..m {
                a.entries.swap(p * m + j, rank * m + j);
            }
            for r in rank + 1..n {
                let f = a.get(r, col) * &pinv;
                if f.is_zero() {
                    continue;
                }
                for j in col..m {
                    let x = &a.entries[r * m + j] - &(&f * &a.entries[rank * m + j]);
                    a.entries[r * m + j] = x;
                }
            }
            rank += 1;
        }
        Ok(rank)
    }

    pub fn specialize(&self, point: &BigRational) -> Result<Self, Error> {
        Ok(self.try_map(|x| x.specialize(point))?)
    }

    /// `q -> q^-1` entrywise.
    pub fn invert_variable(&self) -> Result<Self, Error> {
        Ok(self.try_map(|x| x.invert_variable())?)
    }

    /// Monic minimal polynomial, coefficients from the constant term upward.
    pub fn minimal_polynomial(&self) -> Result<Vec<FieldElement>, Error> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch("minimal polynomial of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut powers: Vec<Vec<FieldElement>> = vec![Matrix::id(n).entries];
        let mut cur = Matrix::id(n);
        for k in 1..=n {
            cur = cur.mul(&Field::Q, self)?;
            // solve sum_{i<k} c_i M^i = -M^k
            if let Some(c) = solve_combination(&powers, &cur.entries) {
                let mut out: Vec<FieldElement> = c.into_iter().map(|x| -x).collect();
                out.push(FieldElement::one());
                debug_assert_eq!(out.len(), k + 1);
                return Ok(out);
            }
            powers.push(cur.entries.clone());
        }
        Err(Error::Singular)
    }
}

/// Coefficients `c` with `sum c_i basis_i = target`, if any.
fn solve_combination(basis: &[Vec<FieldElement>], target: &[FieldElement]) -> Option<Vec<FieldElement>> {
    let k = basis.len();
    let m = target.len();
    // rows = coordinates, columns = basis vectors + target
    let mut rows: Vec<Vec<FieldElement>> = (0..m)
        .map(|r| {
            let mut row: Vec<FieldElement> = basis.iter().map(|b| b[r].clone()).collect();
            row.push(target[r].clone());
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r0 = 0;
    for col in 0..k {
        let Some(p) = (r0..m).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(r0, p);
        let inv = rows[r0][col].inv().ok()?;
        for x in rows[r0].iter_mut() {
            *x = &*x * &inv;
        }
        for r in 0..m {
            if r != r0 && !rows[r][col].is_zero() {
                let f = rows[r][col].clone();
                for j in 0..=k {
                    let v = &rows[r][j] - &(&f * &rows[r0][j]);
                    rows[r][j] = v;
                }
            }
        }
        pivots.push(col);
        r0 += 1;
    }
    if rows[r0..].iter().any(|row| !row[k].is_zero()) {
        return None;
    }
    let mut c = vec![FieldElement::zero(); k];
    for (i, &col) in pivots.iter().enumerate() {
        c[col] = rows[i][k].clone();
    }
    Some(c)
}
