//! Subspaces of a fixed coordinate space, held in canonical form.
//!
//! A subspace stores its basis as the RREF of any spanning set, so equality
//! of subspaces is literal equality of basis matrices. Sums, intersections,
//! and complements all return canonical representatives, which keeps every
//! downstream exactness verdict reproducible.

use crate::error::{Error, Result};
use crate::linalg::field::{FieldSpec, Scalar};
use crate::linalg::matrix::Matrix;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    basis: Matrix, // RREF, no zero rows
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: FieldSpec, ambient: usize) -> Subspace {
        Subspace {
            basis: Matrix::zeros(field, 0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: FieldSpec, ambient: usize) -> Subspace {
        Subspace {
            basis: Matrix::identity(field, ambient),
            pivots: (0..ambient).collect(),
        }
    }

    /// Canonicalizes a spanning set given as matrix rows.
    pub fn from_matrix(spanning: &Matrix) -> Subspace {
        let (basis, pivots) = spanning.rref();
        Subspace { basis, pivots }
    }

    pub fn from_row_vectors(
        field: FieldSpec,
        ambient: usize,
        rows: Vec<Vec<Scalar>>,
    ) -> Result<Subspace> {
        let m = Matrix::from_rows(field, rows, ambient)?;
        Ok(Subspace::from_matrix(&m))
    }

    pub fn field(&self) -> FieldSpec {
        self.basis.field()
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_rows(&self) -> Vec<Vec<Scalar>> {
        self.basis.row_vecs()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.field() != other.field() {
            return Err(Error::FieldMismatch(
                self.field().to_string(),
                other.field().to_string(),
            ));
        }
        if self.ambient_dim() != other.ambient_dim() {
            return Err(Error::ShapeError(format!(
                "ambient dimensions {} and {} differ",
                self.ambient_dim(),
                other.ambient_dim()
            )));
        }
        Ok(())
    }

    /// Reduces `v` against the basis; the remainder is zero exactly when the
    /// vector lies in the subspace.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut v = v.to_vec();
        for (row, &pc) in self.pivots.iter().enumerate() {
            if v[pc].is_zero() {
                continue;
            }
            let factor = v[pc].clone();
            for (x, b) in v.iter_mut().zip(self.basis.row(row)) {
                if !b.is_zero() {
                    *x = &*x - &(&factor * b);
                }
            }
        }
        v
    }

    pub fn contains_vector(&self, v: &[Scalar]) -> bool {
        v.len() == self.ambient_dim() && self.reduce(v).iter().all(|x| x.is_zero())
    }

    pub fn contains(&self, other: &Subspace) -> Result<bool> {
        self.check_ambient(other)?;
        Ok((0..other.dim()).all(|r| self.contains_vector(other.basis.row(r))))
    }

    /// Coordinates of `v` in this basis, or `None` when `v` is outside.
    /// Because the basis is in RREF the coordinates are read off the pivot
    /// columns.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        if !self.contains_vector(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&pc| v[pc].clone()).collect())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        Ok(Subspace::from_matrix(&self.basis.vstack(&other.basis)?))
    }

    /// Intersection via the row-combination kernel: combinations of rows of
    /// `self` that are also combinations of rows of `other`.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(self.field(), self.ambient_dim()));
        }
        let stacked = self.basis.vstack(&other.basis)?;
        let combos = stacked.transpose().kernel();
        let mut rows = Vec::new();
        for combo in combos.basis_rows() {
            let mut v = vec![self.field().zero(); self.ambient_dim()];
            for (r, coeff) in combo.iter().take(self.dim()).enumerate() {
                if coeff.is_zero() {
                    continue;
                }
                for (x, b) in v.iter_mut().zip(self.basis.row(r)) {
                    if !b.is_zero() {
                        *x = &*x + &(coeff * b);
                    }
                }
            }
            rows.push(v);
        }
        Subspace::from_row_vectors(self.field(), self.ambient_dim(), rows)
    }

    /// Direct complement of `self` inside `within`, chosen deterministically:
    /// the rows of `within`'s canonical basis whose pivot columns are not
    /// pivot columns of `self`. Requires `self ⊆ within`.
    pub fn complement_in(&self, within: &Subspace) -> Result<Subspace> {
        self.check_ambient(within)?;
        if !within.contains(self)? {
            return Err(Error::NotContained);
        }
        let rows: Vec<Vec<Scalar>> = within
            .pivots
            .iter()
            .zip(within.basis_rows())
            .filter(|(pc, _)| !self.pivots.contains(pc))
            .map(|(_, row)| row)
            .collect();
        Subspace::from_row_vectors(self.field(), self.ambient_dim(), rows)
    }

    /// Matrix of the projection onto coset coordinates modulo this subspace:
    /// reduce a vector against the basis and keep the non-pivot coordinates.
    /// Composing with [`Subspace::coset_section`] gives the identity.
    pub fn coset_projection(&self) -> Matrix {
        let field = self.field();
        let n = self.ambient_dim();
        let free: Vec<usize> = (0..n).filter(|c| !self.pivots.contains(c)).collect();
        let mut projection = Matrix::zeros(field, free.len(), n);
        for i in 0..n {
            let mut e = vec![field.zero(); n];
            e[i] = field.one();
            let reduced = self.reduce(&e);
            for (q, &c) in free.iter().enumerate() {
                projection.set(q, i, reduced[c].clone());
            }
        }
        projection
    }

    /// The canonical linear section of [`Subspace::coset_projection`]: coset
    /// coordinates are lifted back onto the non-pivot axes.
    pub fn coset_section(&self) -> Matrix {
        let field = self.field();
        let n = self.ambient_dim();
        let free: Vec<usize> = (0..n).filter(|c| !self.pivots.contains(c)).collect();
        let mut section = Matrix::zeros(field, n, free.len());
        for (q, &c) in free.iter().enumerate() {
            section.set(c, q, field.one());
        }
        section
    }

    /// An alternative (generally different) complement basis: extend `self`
    /// greedily by rows of `within`'s basis taken in reverse order. The
    /// returned vectors are a basis of a direct complement but are not
    /// canonicalized, so the caller sees the chosen order.
    pub fn complement_basis_rev(&self, within: &Subspace) -> Result<Vec<Vec<Scalar>>> {
        self.check_ambient(within)?;
        if !within.contains(self)? {
            return Err(Error::NotContained);
        }
        let mut span = self.clone();
        let mut chosen = Vec::new();
        for row in within.basis_rows().into_iter().rev() {
            if !span.contains_vector(&row) {
                let single =
                    Subspace::from_row_vectors(self.field(), self.ambient_dim(), vec![row.clone()])?;
                span = span.sum(&single)?;
                chosen.push(row);
            }
        }
        debug_assert_eq!(chosen.len(), within.dim() - self.dim());
        Ok(chosen)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::Rational
    }

    fn span(rows: &[&[i64]], ambient: usize) -> Subspace {
        Subspace::from_row_vectors(
            q(),
            ambient,
            rows.iter()
                .map(|r| r.iter().map(|&x| q().from_i64(x)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn axis_spans_intersect_trivially() {
        let e1 = span(&[&[1, 0]], 2);
        let e2 = span(&[&[0, 1]], 2);
        assert!(e1.intersect(&e2).unwrap().is_zero());
    }

    #[test]
    fn sum_of_e1_and_diagonal_fills_plane() {
        let e1 = span(&[&[1, 0]], 2);
        let diag = span(&[&[1, 1]], 2);
        assert_eq!(e1.sum(&diag).unwrap(), Subspace::full(q(), 2));
    }

    #[test]
    fn complement_of_diagonal_uses_remaining_pivot() {
        let diag = span(&[&[1, 1]], 2);
        let c = diag.complement_in(&Subspace::full(q(), 2)).unwrap();
        assert_eq!(c, span(&[&[0, 1]], 2));
    }

    #[test]
    fn complement_direct_sums_back() {
        let a = span(&[&[1, 2, 0], &[0, 0, 1]], 3);
        let full = Subspace::full(q(), 3);
        let c = a.complement_in(&full).unwrap();
        assert_eq!(a.sum(&c).unwrap(), full);
        assert!(a.intersect(&c).unwrap().is_zero());
        assert_eq!(a.dim() + c.dim(), 3);
    }

    #[test]
    fn complement_requires_containment() {
        let a = span(&[&[1, 0]], 2);
        let b = span(&[&[0, 1]], 2);
        assert!(matches!(a.complement_in(&b), Err(Error::NotContained)));
    }

    #[test]
    fn dimension_formula_for_sum_and_intersection() {
        let a = span(&[&[1, 0, 0], &[0, 1, 0]], 3);
        let b = span(&[&[0, 1, 0], &[0, 0, 1]], 3);
        let s = a.sum(&b).unwrap();
        let i = a.intersect(&b).unwrap();
        assert_eq!(s.dim() + i.dim(), a.dim() + b.dim());
        assert_eq!(i, span(&[&[0, 1, 0]], 3));
    }

    #[test]
    fn coordinates_round_trip() {
        let a = span(&[&[1, 0, 2], &[0, 1, 3]], 3);
        let v: Vec<Scalar> = [5, -2, 4].iter().map(|&x| q().from_i64(x)).collect();
        let coords = a.coordinates(&v).unwrap();
        assert_eq!(coords, vec![q().from_i64(5), q().from_i64(-2)]);
        let outside: Vec<Scalar> = [1, 0, 0].iter().map(|&x| q().from_i64(x)).collect();
        assert!(a.coordinates(&outside).is_none());
    }

    #[test]
    fn reverse_complement_spans_a_true_complement() {
        let a = span(&[&[1, 1, 0]], 3);
        let full = Subspace::full(q(), 3);
        let rows = a.complement_basis_rev(&full).unwrap();
        assert_eq!(rows.len(), 2);
        let c = Subspace::from_row_vectors(q(), 3, rows).unwrap();
        assert_eq!(a.sum(&c).unwrap(), full);
        assert!(a.intersect(&c).unwrap().is_zero());
    }
}
