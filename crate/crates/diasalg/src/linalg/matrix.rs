//! Dense matrices over an exact field, with reduced row echelon form as the
//! canonical normal form.
//!
//! RREF is unique for a given row space, so two matrices describe the same
//! space exactly when their RREFs are identical. All rank, kernel, and image
//! computations in the crate reduce to [`Matrix::rref`].

use std::fmt;
use std::ops::Index;

use crate::error::{Error, Result};
use crate::linalg::field::{pivot_weight, FieldSpec, Scalar};
use crate::linalg::subspace::Subspace;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>, // row-major
}

impl Matrix {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    /// Builds a matrix from explicit rows, rejecting ragged shapes and
    /// entries from a different field.
    pub fn from_rows(field: FieldSpec, rows: Vec<Vec<Scalar>>, cols: usize) -> Result<Matrix> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        let nrows = rows.len();
        for row in rows {
            if row.len() != cols {
                return Err(Error::ShapeError(format!(
                    "row of length {} in a {cols}-column matrix",
                    row.len()
                )));
            }
            for entry in row {
                if entry.field() != field {
                    return Err(Error::FieldMismatch(
                        field.to_string(),
                        entry.field().to_string(),
                    ));
                }
                data.push(entry);
            }
        }
        Ok(Matrix {
            field,
            rows: nrows,
            cols,
            data,
        })
    }

    pub fn from_fn(
        field: FieldSpec,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Scalar,
    ) -> Matrix {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix {
            field,
            rows,
            cols,
            data,
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        debug_assert_eq!(v.field(), self.field);
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.field, self.cols, self.rows, |r, c| {
            self.at(c, r).clone()
        })
    }

    pub fn vstack(&self, other: &Matrix) -> Result<Matrix> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(
                self.field.to_string(),
                other.field.to_string(),
            ));
        }
        if self.cols != other.cols {
            return Err(Error::ShapeError(format!(
                "vstack of {} and {} columns",
                self.cols, other.cols
            )));
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(Matrix {
            field: self.field,
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(
                self.field.to_string(),
                other.field.to_string(),
            ));
        }
        if self.cols != other.rows {
            return Err(Error::ShapeError(format!(
                "product of {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.at(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.at(i, j) + &(a * b);
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    /// Applies the matrix to a column vector.
    pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != self.cols {
            return Err(Error::ShapeError(format!(
                "vector of length {} against {} columns",
                v.len(),
                self.cols
            )));
        }
        let mut out = vec![self.field.zero(); self.rows];
        for i in 0..self.rows {
            for (k, x) in v.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                out[i] = &out[i] + &(a * x);
            }
        }
        Ok(out)
    }

    /// Reduced row echelon form together with the pivot columns.
    ///
    /// The output is canonical: leading entries are 1, pivot columns are
    /// cleared above and below, zero rows are dropped. Within a column the
    /// pivot row is chosen by smallest representation to keep rational
    /// intermediates from blowing up; the result does not depend on the
    /// choice.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut rows: Vec<Vec<Scalar>> = self
            .row_vecs()
            .into_iter()
            .filter(|r| r.iter().any(|x| !x.is_zero()))
            .collect();
        let mut pivots = Vec::new();
        let mut next = 0usize;
        for col in 0..self.cols {
            if next >= rows.len() {
                break;
            }
            let mut best: Option<(usize, usize)> = None;
            for (i, row) in rows.iter().enumerate().skip(next) {
                if !row[col].is_zero() {
                    let w = pivot_weight(&row[col]);
                    if best.map_or(true, |(_, bw)| w < bw) {
                        best = Some((i, w));
                    }
                }
            }
            let Some((pivot_row, _)) = best else { continue };
            rows.swap(next, pivot_row);
            let inv = rows[next][col].inv().expect("nonzero pivot");
            for x in rows[next].iter_mut() {
                if !x.is_zero() {
                    *x = &*x * &inv;
                }
            }
            let pivot = rows[next].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i == next || row[col].is_zero() {
                    continue;
                }
                let factor = row[col].clone();
                for (x, p) in row.iter_mut().zip(&pivot) {
                    if !p.is_zero() {
                        *x = &*x - &(&factor * p);
                    }
                }
            }
            pivots.push(col);
            next += 1;
        }
        rows.truncate(next);
        rows.retain(|r| r.iter().any(|x| !x.is_zero()));
        let m = Matrix::from_rows(self.field, rows, self.cols).expect("rows stay well-shaped");
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Null space of the matrix acting on column vectors, as a canonical
    /// subspace of the column coordinate space.
    pub fn kernel(&self) -> Subspace {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Vec::with_capacity(free.len());
        for &fc in &free {
            let mut v = vec![self.field.zero(); self.cols];
            v[fc] = self.field.one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -r.at(row, fc);
            }
            basis.push(v);
        }
        Subspace::from_row_vectors(self.field, self.cols, basis)
            .expect("kernel rows are well-shaped")
    }

    /// Column space of the matrix acting on column vectors, as a canonical
    /// subspace of the row coordinate space.
    pub fn image(&self) -> Subspace {
        Subspace::from_matrix(&self.transpose())
    }

    /// One particular solution of `self * x = b`, or `None` when the system
    /// is inconsistent.
    pub fn solve(&self, b: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
        if b.len() != self.rows {
            return Err(Error::ShapeError(format!(
                "rhs of length {} against {} rows",
                b.len(),
                self.rows
            )));
        }
        let mut aug = Matrix::zeros(self.field, self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.at(i, j).clone());
            }
            aug.set(i, self.cols, b[i].clone());
        }
        let (r, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![self.field.zero(); self.cols];
        for (row, &pc) in pivots.iter().enumerate() {
            x[pc] = r.at(row, self.cols).clone();
        }
        Ok(Some(x))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (r, c): (usize, usize)) -> &Scalar {
        self.at(r, c)
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qmat(rows: &[&[i64]]) -> Matrix {
        let f = FieldSpec::Rational;
        Matrix::from_rows(
            f,
            rows.iter()
                .map(|r| r.iter().map(|&x| f.from_i64(x)).collect())
                .collect(),
            rows.first().map_or(0, |r| r.len()),
        )
        .unwrap()
    }

    #[test]
    fn rref_identity_is_fixed() {
        let id = Matrix::identity(FieldSpec::Rational, 3);
        let (r, pivots) = id.rref();
        assert_eq!(r, id);
        assert_eq!(pivots, vec![0, 1, 2]);
    }

    #[test]
    fn rref_collapses_dependent_rows() {
        let m = qmat(&[&[2, 4], &[1, 2]]);
        let (r, pivots) = m.rref();
        assert_eq!(r, qmat(&[&[1, 2]]));
        assert_eq!(pivots, vec![0]);
    }

    #[test]
    fn rref_over_gf2() {
        let f = FieldSpec::prime(2).unwrap();
        let m = Matrix::from_rows(
            f,
            vec![
                vec![f.from_i64(1), f.from_i64(1)],
                vec![f.from_i64(1), f.from_i64(2)],
            ],
            2,
        )
        .unwrap();
        let (r, _) = m.rref();
        assert_eq!(r, Matrix::identity(f, 2));
    }

    #[test]
    fn rref_is_idempotent() {
        let m = qmat(&[&[3, 1, 2], &[6, 2, 4], &[1, 0, 1]]);
        let (r1, p1) = m.rref();
        let (r2, p2) = r1.rref();
        assert_eq!(r1, r2);
        assert_eq!(p1, p2);
    }

    #[test]
    fn kernel_of_zero_map_is_everything() {
        let m = Matrix::zeros(FieldSpec::Rational, 2, 3);
        let k = m.kernel();
        assert_eq!(k.dim(), 3);
        assert_eq!(k, Subspace::full(FieldSpec::Rational, 3));
    }

    #[test]
    fn image_of_identity_is_everything() {
        for n in 0..4 {
            let m = Matrix::identity(FieldSpec::Rational, n);
            assert_eq!(m.image(), Subspace::full(FieldSpec::Rational, n));
        }
    }

    #[test]
    fn kernel_of_sum_constraint() {
        let m = qmat(&[&[1, 1, 0]]);
        let k = m.kernel();
        let expected = Subspace::from_row_vectors(
            FieldSpec::Rational,
            3,
            vec![
                vec![
                    FieldSpec::Rational.from_i64(1),
                    FieldSpec::Rational.from_i64(-1),
                    FieldSpec::Rational.from_i64(0),
                ],
                vec![
                    FieldSpec::Rational.from_i64(0),
                    FieldSpec::Rational.from_i64(0),
                    FieldSpec::Rational.from_i64(1),
                ],
            ],
        )
        .unwrap();
        assert_eq!(k, expected);
    }

    #[test]
    fn rank_nullity_holds() {
        let m = qmat(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        assert_eq!(m.kernel().dim() + m.image().dim(), m.cols());
    }

    #[test]
    fn solve_finds_particular_solution() {
        let m = qmat(&[&[1, 2], &[3, 4]]);
        let f = FieldSpec::Rational;
        let b = vec![f.from_i64(5), f.from_i64(11)];
        let x = m.solve(&b).unwrap().unwrap();
        assert_eq!(m.mul_vec(&x).unwrap(), b);

        // inconsistent system
        let sing = qmat(&[&[1, 1], &[1, 1]]);
        let b = vec![f.from_i64(0), f.from_i64(1)];
        assert!(sing.solve(&b).unwrap().is_none());
    }

    #[test]
    fn from_rows_rejects_mixed_fields() {
        let f = FieldSpec::Rational;
        let g = FieldSpec::prime(7).unwrap();
        let err = Matrix::from_rows(f, vec![vec![f.from_i64(1), g.from_i64(1)]], 2);
        assert!(matches!(err, Err(Error::FieldMismatch(_, _))));
    }

    #[test]
    fn mul_shape_errors() {
        let a = qmat(&[&[1, 2]]);
        let b = qmat(&[&[1, 2]]);
        assert!(matches!(a.mul(&b), Err(Error::ShapeError(_))));
    }
}
