//! Dense matrices over GF(q).
//!
//! Vectors are rows and matrices act on the right, `v ↦ v·A`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf::{Field, Fq};

pub type Vector = Vec<Fq>;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(try_from = "MatrixRepr", into = "MatrixRepr")]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Fq>,
}

#[derive(Serialize, Deserialize)]
struct MatrixRepr {
    rows: usize,
    cols: usize,
    entries: Vec<Fq>,
}

impl TryFrom<MatrixRepr> for Matrix {
    type Error = Error;

    fn try_from(r: MatrixRepr) -> Result<Matrix> {
        Matrix::new(r.rows, r.cols, r.entries)
    }
}

impl From<Matrix> for MatrixRepr {
    fn from(m: Matrix) -> MatrixRepr {
        MatrixRepr {
            rows: m.rows,
            cols: m.cols,
            entries: m.data,
        }
    }
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Fq>) -> Result<Matrix> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Matrix {
        Matrix {
            rows,
            cols,
            data: vec![Fq::ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Matrix {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Fq::ONE;
        }
        m
    }

    /// `E_ij`: 1 in position `(i, j)` (0-based), zero elsewhere.
    pub fn elem_unit(n: usize, i: usize, j: usize) -> Result<Matrix> {
        if i >= n || j >= n {
            return Err(Error::IndexOutOfRange(format!("({i}, {j}) in {n}x{n}")));
        }
        let mut m = Matrix::zeros(n, n);
        m.data[i * n + j] = Fq::ONE;
        Ok(m)
    }

    pub fn diag(entries: &[Fq]) -> Matrix {
        let n = entries.len();
        let mut m = Matrix::zeros(n, n);
        for (i, &e) in entries.iter().enumerate() {
            m.data[i * n + i] = e;
        }
        m
    }

    /// `A ⊕ B`.
    pub fn block_diag(a: &Matrix, b: &Matrix) -> Matrix {
        let rows = a.rows + b.rows;
        let cols = a.cols + b.cols;
        let mut m = Matrix::zeros(rows, cols);
        for i in 0..a.rows {
            for j in 0..a.cols {
                m.data[i * cols + j] = a.get(i, j);
            }
        }
        for i in 0..b.rows {
            for j in 0..b.cols {
                m.data[(a.rows + i) * cols + a.cols + j] = b.get(i, j);
            }
        }
        m
    }

    pub fn from_rows(rows: &[Vector]) -> Result<Matrix> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Ok(Matrix {
            rows: rows.len(),
            cols,
            data: rows.concat(),
        })
    }

    /// Empty matrix with `cols` columns.
    pub fn empty(cols: usize) -> Matrix {
        Matrix {
            rows: 0,
            cols,
            data: Vec::new(),
        }
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Fq {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Fq) {
        self.data[i * self.cols + j] = v;
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[Fq] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> Vec<Vector> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn entries(&self) -> &[Fq] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|e| e.is_zero())
    }

    pub fn transpose(&self) -> Matrix {
        let mut m = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.data[j * self.rows + i] = self.get(i, j);
            }
        }
        m
    }

    pub fn mul(&self, other: &Matrix, f: &Field) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut m = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let idx = i * other.cols + j;
                    m.data[idx] = f.add(m.data[idx], f.mul(a, other.get(k, j)));
                }
            }
        }
        Ok(m)
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, v: &[Fq], f: &Field) -> Result<Vector> {
        if v.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} times {}x{}",
                v.len(),
                self.rows,
                self.cols
            )));
        }
        let mut out = vec![Fq::ZERO; self.cols];
        for (k, &a) in v.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, o) in out.iter_mut().enumerate() {
                *o = f.add(*o, f.mul(a, self.get(k, j)));
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Matrix, f: &Field) -> Result<Matrix> {
        self.zip(other, |a, b| f.add(a, b))
    }

    pub fn sub(&self, other: &Matrix, f: &Field) -> Result<Matrix> {
        self.zip(other, |a, b| f.sub(a, b))
    }

    fn zip(&self, other: &Matrix, op: impl Fn(Fq, Fq) -> Fq) -> Result<Matrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch("shape mismatch".into()));
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| op(a, b))
            .collect();
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn scale(&self, c: Fq, f: &Field) -> Matrix {
        self.map(|a| f.mul(c, a))
    }

    pub fn map(&self, op: impl Fn(Fq) -> Fq) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&a| op(a)).collect(),
        }
    }

    /// Entrywise `a ↦ a^(p^i)`.
    pub fn frobenius(&self, i: i64, f: &Field) -> Matrix {
        if i.rem_euclid(f.degree() as i64) == 0 {
            return self.clone();
        }
        self.map(|a| f.frobenius(a, i))
    }

    pub fn det(&self, f: &Field) -> Result<Fq> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(
                "determinant of non-square matrix".into(),
            ));
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut det = Fq::ONE;
        for col in 0..n {
            let Some(piv) = (col..n).find(|&r| !a.get(r, col).is_zero()) else {
                return Ok(Fq::ZERO);
            };
            if piv != col {
                a.swap_rows(piv, col);
                det = f.neg(det);
            }
            let p = a.get(col, col);
            det = f.mul(det, p);
            let pinv = f.inv(p)?;
            for r in col + 1..n {
                let c = a.get(r, col);
                if c.is_zero() {
                    continue;
                }
                let factor = f.mul(c, pinv);
                for j in col..n {
                    let v = f.sub(a.get(r, j), f.mul(factor, a.get(col, j)));
                    a.set(r, j, v);
                }
            }
        }
        Ok(det)
    }

    pub fn inverse(&self, f: &Field) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(
                "inverse of non-square matrix".into(),
            ));
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, n + i, Fq::ONE);
        }
        let rank = aug.rref_in_place(f, n);
        if rank < n {
            return Err(Error::Singular);
        }
        let mut inv = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, aug.get(i, n + j));
            }
        }
        Ok(inv)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Gauss-Jordan on the first `pivot_cols` columns; returns the rank.
    fn rref_in_place(&mut self, f: &Field, pivot_cols: usize) -> usize {
        let mut r = 0;
        for col in 0..pivot_cols {
            if r == self.rows {
                break;
            }
            let Some(piv) = (r..self.rows).find(|&i| !self.get(i, col).is_zero()) else {
                continue;
            };
            self.swap_rows(piv, r);
            let pinv = f.inv(self.get(r, col)).expect("pivot nonzero");
            if pinv != Fq::ONE {
                for j in col..self.cols {
                    let v = f.mul(pinv, self.get(r, j));
                    self.set(r, j, v);
                }
            }
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let c = self.get(i, col);
                if c.is_zero() {
                    continue;
                }
                for j in col..self.cols {
                    let v = f.sub(self.get(i, j), f.mul(c, self.get(r, j)));
                    self.set(i, j, v);
                }
            }
            r += 1;
        }
        r
    }

    /// Reduced row echelon form with zero rows removed, and the rank.
    pub fn rref(&self, f: &Field) -> (Matrix, usize) {
        let mut a = self.clone();
        let rank = a.rref_in_place(f, a.cols);
        a.data.truncate(rank * a.cols);
        a.rows = rank;
        (a, rank)
    }

    pub fn rank(&self, f: &Field) -> usize {
        self.rref(f).1
    }

    /// Basis of `{v : A·v = 0}` (column vectors, returned as coordinate lists).
    pub fn right_kernel(&self, f: &Field) -> Vec<Vector> {
        let (r, rank) = self.rref(f);
        let mut pivots = Vec::with_capacity(rank);
        for i in 0..rank {
            let c = (0..r.cols)
                .find(|&j| !r.get(i, j).is_zero())
                .expect("nonzero row");
            pivots.push(c);
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|c| !pivots.contains(c)) {
            let mut v = vec![Fq::ZERO; self.cols];
            v[free] = Fq::ONE;
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(r.get(i, free));
            }
            basis.push(v);
        }
        basis
    }

    /// Basis of `{v : v·A = 0}`.
    pub fn left_kernel(&self, f: &Field) -> Vec<Vector> {
        self.transpose().right_kernel(f)
    }

    /// Coordinates `c` with `c·self = v`, if `v` lies in the row space.
    /// Rows of `self` must be linearly independent.
    pub fn coordinates(&self, v: &[Fq], f: &Field) -> Option<Vector> {
        // Solve selfᵀ c = v.
        let k = self.rows;
        let mut aug = Matrix::zeros(self.cols, k + 1);
        for j in 0..self.cols {
            for i in 0..k {
                aug.set(j, i, self.get(i, j));
            }
            aug.set(j, k, v[j]);
        }
        let rank = aug.rref_in_place(f, k + 1);
        let mut c = vec![Fq::ZERO; k];
        for i in 0..rank {
            let pc = (0..=k)
                .find(|&j| !aug.get(i, j).is_zero())
                .expect("nonzero row");
            if pc == k {
                return None;
            }
            c[pc] = aug.get(i, k);
        }
        Some(c)
    }

    /// Stacks the rows of `self` above those of `other`.
    pub fn vstack(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch("column counts differ".into()));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }
}

/// `Σ c_i v_i`.
pub fn lin_comb(coeffs: &[Fq], vectors: &[Vector], f: &Field) -> Vector {
    let n = vectors.first().map_or(0, Vec::len);
    let mut out = vec![Fq::ZERO; n];
    for (c, v) in coeffs.iter().zip(vectors) {
        if c.is_zero() {
            continue;
        }
        for (o, &x) in out.iter_mut().zip(v) {
            *o = f.add(*o, f.mul(*c, x));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(f: &Field, rows: &[&[u32]]) -> Matrix {
        let rows: Vec<Vector> = rows
            .iter()
            .map(|r| r.iter().map(|&c| f.elem(c).unwrap()).collect())
            .collect();
        Matrix::from_rows(&rows).unwrap()
    }

    #[test]
    fn inverse_gf3() {
        let f = Field::new(3, 1).unwrap();
        let a = m(&f, &[&[1, 1], &[0, 1]]);
        assert_eq!(a.inverse(&f).unwrap(), m(&f, &[&[1, 2], &[0, 1]]));
    }

    #[test]
    fn determinants() {
        let f = Field::new(5, 1).unwrap();
        assert_eq!(Matrix::identity(4).det(&f).unwrap(), Fq::ONE);
        for l in 0..3 {
            let h = Matrix::identity(4)
                .sub(&Matrix::elem_unit(4, l, 3).unwrap(), &f)
                .unwrap();
            assert_eq!(h.det(&f).unwrap(), Fq::ONE);
        }
        let f4 = Field::new(2, 2).unwrap();
        let d = Matrix::diag(&[f4.omega(), Fq::ONE]);
        assert_eq!(d.det(&f4).unwrap(), f4.omega());
        assert_eq!(m(&f, &[&[1, 2], &[2, 4]]).det(&f).unwrap(), Fq::ZERO);
        assert_eq!(m(&f, &[&[1, 2], &[2, 4]]).inverse(&f), Err(Error::Singular));
    }

    #[test]
    fn rref_cases() {
        let f = Field::new(2, 1).unwrap();
        let (r, rank) = m(&f, &[&[1, 1], &[0, 1]]).rref(&f);
        assert_eq!((r, rank), (Matrix::identity(2), 2));
        let (r, rank) = Matrix::zeros(3, 4).rref(&f);
        assert_eq!((r.rows(), rank), (0, 0));
        assert_eq!(Matrix::identity(3).rref(&f), (Matrix::identity(3), 3));
    }

    #[test]
    fn kernels() {
        let f = Field::new(3, 1).unwrap();
        assert!(Matrix::identity(3).right_kernel(&f).is_empty());
        assert_eq!(Matrix::zeros(1, 4).right_kernel(&f).len(), 4);
        let a = m(&f, &[&[1, 1, 1]]);
        let ker = a.right_kernel(&f);
        assert_eq!(ker.len(), 2);
        for v in ker {
            let col = Matrix::from_rows(&[v]).unwrap().transpose();
            assert!(a.mul(&col, &f).unwrap().is_zero());
        }
    }

    #[test]
    fn constructors() {
        let f = Field::new(2, 2).unwrap();
        assert_eq!(
            Matrix::elem_unit(2, 0, 1).unwrap(),
            m(&f, &[&[0, 1], &[0, 0]])
        );
        assert!(Matrix::elem_unit(2, 2, 0).is_err());
        let a = Matrix::diag(&[f.omega()]);
        assert_eq!(
            Matrix::block_diag(&a, &Matrix::identity(2)),
            Matrix::diag(&[f.omega(), Fq::ONE, Fq::ONE])
        );
    }

    #[test]
    fn coordinates_in_row_space() {
        let f = Field::new(5, 1).unwrap();
        let b = m(&f, &[&[1, 0, 2], &[0, 1, 3]]);
        let v = lin_comb(
            &[
                Fq::from_encoding_unchecked(2),
                Fq::from_encoding_unchecked(4),
            ],
            &b.row_vectors(),
            &f,
        );
        assert_eq!(
            b.coordinates(&v, &f).unwrap(),
            vec![
                Fq::from_encoding_unchecked(2),
                Fq::from_encoding_unchecked(4)
            ]
        );
        assert!(b.coordinates(&[Fq::ZERO, Fq::ZERO, Fq::ONE], &f).is_none());
    }
}
