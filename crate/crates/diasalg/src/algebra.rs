//! Finite-dimensional diassociative algebras given by structure constants.
//!
//! An algebra carries two bilinear products, written `<|` (left) and `|>`
//! (right) in diagnostics. Products are stored sparsely per basis pair, so
//! large extension algebras whose products land in a small block stay cheap.
//!
//! Validity means the two products are associative and the three mixed
//! identities hold:
//!
//! ```text
//! x <| (y <| z) = x <| (y |> z)
//! (x |> y) <| z = x |> (y <| z)
//! (x <| y) |> z = (x |> y) |> z
//! ```
//!
//! Checking these on basis triples certifies them on all elements by
//! bilinearity.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::{FieldSpec, Matrix, Scalar, Subspace};

/// Which of the two products.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub const BOTH: [Side; 2] = [Side::Left, Side::Right];
}

/// Sparse structure tensor: `(i, j) -> [(k, coefficient)]` with the
/// convention `e_i * e_j = sum_k c * e_k`. Entries are sorted by `k` and
/// never zero.
pub type ProductTable = BTreeMap<(usize, usize), Vec<(usize, Scalar)>>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiasAlgebra {
    field: FieldSpec,
    dim: usize,
    left: ProductTable,
    right: ProductTable,
    labels: Option<Vec<String>>,
}

/// The five defining identities, named by shape.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axiom {
    AssocLeft,
    AssocRight,
    InnerSwapLeft,
    MiddleAssoc,
    OuterSwapRight,
}

impl Axiom {
    pub const ALL: [Axiom; 5] = [
        Axiom::AssocLeft,
        Axiom::AssocRight,
        Axiom::InnerSwapLeft,
        Axiom::MiddleAssoc,
        Axiom::OuterSwapRight,
    ];
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Axiom::AssocLeft => "(x <| y) <| z = x <| (y <| z)",
            Axiom::AssocRight => "(x |> y) |> z = x |> (y |> z)",
            Axiom::InnerSwapLeft => "x <| (y <| z) = x <| (y |> z)",
            Axiom::MiddleAssoc => "(x |> y) <| z = x |> (y <| z)",
            Axiom::OuterSwapRight => "(x <| y) |> z = (x |> y) |> z",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone)]
pub struct AxiomViolation {
    pub axiom: Axiom,
    pub triple: (usize, usize, usize),
    pub residual: Vec<Scalar>,
}

#[derive(Debug, Clone, Default)]
pub struct ValidationReport {
    pub violations: Vec<AxiomViolation>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// A candidate homomorphism between two algebras: `matrix` maps source
/// coordinates to target coordinates.
#[derive(Debug, Clone)]
pub struct AlgebraMorphismCheck {
    pub source: DiasAlgebra,
    pub target: DiasAlgebra,
    pub matrix: Matrix,
}

impl DiasAlgebra {
    /// Builds an algebra from sparse tensor entries `(i, j, k, value)`.
    /// Duplicate `(i, j, k)` slots accumulate; zero results are dropped.
    pub fn from_entries(
        field: FieldSpec,
        dim: usize,
        left: &[(usize, usize, usize, Scalar)],
        right: &[(usize, usize, usize, Scalar)],
    ) -> Result<DiasAlgebra> {
        let mut alg = DiasAlgebra {
            field,
            dim,
            left: ProductTable::new(),
            right: ProductTable::new(),
            labels: None,
        };
        for (side, entries) in [(Side::Left, left), (Side::Right, right)] {
            let mut dense: BTreeMap<(usize, usize), BTreeMap<usize, Scalar>> = BTreeMap::new();
            for (i, j, k, v) in entries {
                if *i >= dim || *j >= dim || *k >= dim {
                    return Err(Error::ShapeError(format!(
                        "tensor index ({i},{j},{k}) outside dimension {dim}"
                    )));
                }
                if v.field() != field {
                    return Err(Error::FieldMismatch(
                        field.to_string(),
                        v.field().to_string(),
                    ));
                }
                let slot = dense
                    .entry((*i, *j))
                    .or_default()
                    .entry(*k)
                    .or_insert_with(|| field.zero());
                *slot = &*slot + v;
            }
            let table = alg.table_mut(side);
            for ((i, j), coeffs) in dense {
                let row: Vec<(usize, Scalar)> =
                    coeffs.into_iter().filter(|(_, v)| !v.is_zero()).collect();
                if !row.is_empty() {
                    table.insert((i, j), row);
                }
            }
        }
        Ok(alg)
    }

    pub fn from_tables(
        field: FieldSpec,
        dim: usize,
        left: ProductTable,
        right: ProductTable,
    ) -> Result<DiasAlgebra> {
        let flatten = |table: &ProductTable| {
            let mut entries = Vec::new();
            for (&(i, j), row) in table {
                for (k, v) in row {
                    entries.push((i, j, *k, v.clone()));
                }
            }
            entries
        };
        DiasAlgebra::from_entries(field, dim, &flatten(&left), &flatten(&right))
    }

    pub fn zero_algebra(field: FieldSpec, dim: usize) -> DiasAlgebra {
        DiasAlgebra {
            field,
            dim,
            left: ProductTable::new(),
            right: ProductTable::new(),
            labels: None,
        }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<DiasAlgebra> {
        if labels.len() != self.dim {
            return Err(Error::ShapeError(format!(
                "{} labels for dimension {}",
                labels.len(),
                self.dim
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Structural equality: same field, dimension, and product tables,
    /// ignoring labels.
    pub fn same_structure(&self, other: &DiasAlgebra) -> bool {
        self.field == other.field
            && self.dim == other.dim
            && self.left == other.left
            && self.right == other.right
    }

    pub fn table(&self, side: Side) -> &ProductTable {
        match side {
            Side::Left => &self.left,
            Side::Right => &self.right,
        }
    }

    fn table_mut(&mut self, side: Side) -> &mut ProductTable {
        match side {
            Side::Left => &mut self.left,
            Side::Right => &mut self.right,
        }
    }

    /// `e_i * e_j` as a sparse coefficient list.
    pub fn basis_product(&self, side: Side, i: usize, j: usize) -> &[(usize, Scalar)] {
        self.table(side).get(&(i, j)).map_or(&[], |v| v)
    }

    /// `e_i * e_j` as a dense coordinate vector.
    pub fn basis_product_dense(&self, side: Side, i: usize, j: usize) -> Vec<Scalar> {
        let mut out = vec![self.field.zero(); self.dim];
        for (k, v) in self.basis_product(side, i, j) {
            out[*k] = v.clone();
        }
        out
    }

    /// Product of two coordinate vectors under the chosen side.
    pub fn multiply(&self, side: Side, u: &[Scalar], v: &[Scalar]) -> Result<Vec<Scalar>> {
        if u.len() != self.dim || v.len() != self.dim {
            return Err(Error::ShapeError(format!(
                "vectors of length {} and {} in dimension {}",
                u.len(),
                v.len(),
                self.dim
            )));
        }
        let mut out = vec![self.field.zero(); self.dim];
        for (&(i, j), row) in self.table(side) {
            if u[i].is_zero() || v[j].is_zero() {
                continue;
            }
            let coeff = &u[i] * &v[j];
            for (k, c) in row {
                out[*k] = &out[*k] + &(&coeff * c);
            }
        }
        Ok(out)
    }

    /// `(e_i * v)` for a coordinate vector `v`.
    fn mul_basis_vec(&self, side: Side, i: usize, v: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![self.field.zero(); self.dim];
        for (l, coeff) in v.iter().enumerate() {
            if coeff.is_zero() {
                continue;
            }
            for (k, c) in self.basis_product(side, i, l) {
                out[*k] = &out[*k] + &(coeff * c);
            }
        }
        out
    }

    /// `(v * e_j)` for a coordinate vector `v`.
    fn mul_vec_basis(&self, side: Side, v: &[Scalar], j: usize) -> Vec<Scalar> {
        let mut out = vec![self.field.zero(); self.dim];
        for (l, coeff) in v.iter().enumerate() {
            if coeff.is_zero() {
                continue;
            }
            for (k, c) in self.basis_product(side, l, j) {
                out[*k] = &out[*k] + &(coeff * c);
            }
        }
        out
    }

    /// Pairs `(i, j)` that carry a nonzero product on either side.
    fn support(&self) -> BTreeSet<(usize, usize)> {
        self.left.keys().chain(self.right.keys()).copied().collect()
    }

    /// Checks the five identities on every basis triple. Triples on which
    /// both sides of an identity are structurally zero (no product involved
    /// is supported) are skipped; the residual there is zero by inspection,
    /// so the verdict still covers all triples.
    pub fn validate_axioms(&self) -> ValidationReport {
        let supp = self.support();
        let mut report = ValidationReport::default();
        for axiom in Axiom::ALL {
            for (i, j, k) in self.candidate_triples(axiom, &supp) {
                let (lhs, rhs) = self.evaluate_axiom(axiom, i, j, k);
                let residual: Vec<Scalar> =
                    lhs.iter().zip(&rhs).map(|(a, b)| a - b).collect();
                if residual.iter().any(|x| !x.is_zero()) {
                    report.violations.push(AxiomViolation {
                        axiom,
                        triple: (i, j, k),
                        residual,
                    });
                }
            }
        }
        report
    }

    fn evaluate_axiom(
        &self,
        axiom: Axiom,
        i: usize,
        j: usize,
        k: usize,
    ) -> (Vec<Scalar>, Vec<Scalar>) {
        use Side::{Left, Right};
        let prod = |s: Side, a: usize, b: usize| self.basis_product_dense(s, a, b);
        match axiom {
            Axiom::AssocLeft => (
                self.mul_vec_basis(Left, &prod(Left, i, j), k),
                self.mul_basis_vec(Left, i, &prod(Left, j, k)),
            ),
            Axiom::AssocRight => (
                self.mul_vec_basis(Right, &prod(Right, i, j), k),
                self.mul_basis_vec(Right, i, &prod(Right, j, k)),
            ),
            Axiom::InnerSwapLeft => (
                self.mul_basis_vec(Left, i, &prod(Left, j, k)),
                self.mul_basis_vec(Left, i, &prod(Right, j, k)),
            ),
            Axiom::MiddleAssoc => (
                self.mul_vec_basis(Left, &prod(Right, i, j), k),
                self.mul_basis_vec(Right, i, &prod(Left, j, k)),
            ),
            Axiom::OuterSwapRight => (
                self.mul_vec_basis(Right, &prod(Left, i, j), k),
                self.mul_vec_basis(Right, &prod(Right, i, j), k),
            ),
        }
    }

    /// Triples on which some term of the identity can be nonzero: either the
    /// inner pair `(j, k)` or the outer pair `(i, j)` must carry a product.
    fn candidate_triples(
        &self,
        _axiom: Axiom,
        supp: &BTreeSet<(usize, usize)>,
    ) -> BTreeSet<(usize, usize, usize)> {
        let mut triples = BTreeSet::new();
        for &(a, b) in supp {
            for t in 0..self.dim {
                triples.insert((a, b, t)); // (i, j) supported, k free
                triples.insert((t, a, b)); // (j, k) supported, i free
            }
        }
        triples
    }

    /// Span of `a * b` over both products for `a` in `A`, `b` in `B`.
    pub fn box_product(&self, a: &Subspace, b: &Subspace) -> Result<Subspace> {
        self.check_subspace(a)?;
        self.check_subspace(b)?;
        let mut rows = Vec::new();
        for u in a.basis_rows() {
            for v in b.basis_rows() {
                for side in Side::BOTH {
                    rows.push(self.multiply(side, &u, &v)?);
                }
            }
        }
        Subspace::from_row_vectors(self.field, self.dim, rows)
    }

    /// The derived subalgebra: span of all basis products under both
    /// products.
    pub fn derived_subalgebra(&self) -> Subspace {
        let mut rows = Vec::new();
        for side in Side::BOTH {
            for ((i, j), _) in self.table(side) {
                rows.push(self.basis_product_dense(side, *i, *j));
            }
        }
        Subspace::from_row_vectors(self.field, self.dim, rows).expect("products are well-shaped")
    }

    /// The two-sided annihilating center: all `z` with
    /// `z * x = x * z = 0` for both products and all `x`.
    pub fn center(&self) -> Subspace {
        // One linear constraint per nonzero output coordinate of the four
        // multiplication operators; rows are collected sparsely so large
        // algebras with thin tables stay cheap.
        let mut constraints: BTreeMap<(u8, usize, usize), Vec<Scalar>> = BTreeMap::new();
        for (family_base, side) in [(0u8, Side::Left), (2u8, Side::Right)] {
            for (&(i, j), row) in self.table(side) {
                for (k, v) in row {
                    // z in the first slot: coefficient of z_i in (z * e_j)_k
                    let c = constraints
                        .entry((family_base, j, *k))
                        .or_insert_with(|| vec![self.field.zero(); self.dim]);
                    c[i] = &c[i] + v;
                    // z in the second slot: coefficient of z_j in (e_i * z)_k
                    let c = constraints
                        .entry((family_base + 1, i, *k))
                        .or_insert_with(|| vec![self.field.zero(); self.dim]);
                    c[j] = &c[j] + v;
                }
            }
        }
        let rows: Vec<Vec<Scalar>> = constraints.into_values().collect();
        if rows.is_empty() {
            return Subspace::full(self.field, self.dim);
        }
        let m = Matrix::from_rows(self.field, rows, self.dim).expect("constraint rows well-shaped");
        m.kernel()
    }

    pub fn is_ideal(&self, candidate: &Subspace) -> Result<bool> {
        self.check_subspace(candidate)?;
        for v in candidate.basis_rows() {
            for side in Side::BOTH {
                for i in 0..self.dim {
                    if !candidate.contains_vector(&self.mul_basis_vec(side, i, &v)) {
                        return Ok(false);
                    }
                    if !candidate.contains_vector(&self.mul_vec_basis(side, &v, i)) {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    pub fn is_central_ideal(&self, candidate: &Subspace) -> Result<bool> {
        Ok(self.is_ideal(candidate)? && self.center().contains(candidate)?)
    }

    /// Quotient by an ideal, with the canonical projection and section.
    ///
    /// The quotient basis is the set of coordinates away from the ideal's
    /// pivot columns; the section lifts those coordinates back unchanged, so
    /// `projection * section` is the identity on the quotient.
    pub fn quotient(&self, ideal: &Subspace) -> Result<(DiasAlgebra, Matrix, Matrix)> {
        if !self.is_ideal(ideal)? {
            return Err(Error::NotIdeal);
        }
        let free: Vec<usize> = (0..self.dim)
            .filter(|c| !ideal.pivots().contains(c))
            .collect();
        let qdim = free.len();
        let projection = ideal.coset_projection();
        let section = ideal.coset_section();
        let mut left_entries = Vec::new();
        let mut right_entries = Vec::new();
        for (side, sink) in [
            (Side::Left, &mut left_entries),
            (Side::Right, &mut right_entries),
        ] {
            for a in 0..qdim {
                for b in 0..qdim {
                    let prod = self.basis_product_dense(side, free[a], free[b]);
                    let projected = projection.mul_vec(&prod)?;
                    for (k, v) in projected.into_iter().enumerate() {
                        if !v.is_zero() {
                            sink.push((a, b, k, v));
                        }
                    }
                }
            }
        }
        let mut quotient =
            DiasAlgebra::from_entries(self.field, qdim, &left_entries, &right_entries)?;
        if let Some(labels) = &self.labels {
            quotient = quotient
                .with_labels(free.iter().map(|&c| labels[c].clone()).collect())?;
        }
        Ok((quotient, projection, section))
    }

    pub fn direct_sum(&self, other: &DiasAlgebra) -> Result<DiasAlgebra> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(
                self.field.to_string(),
                other.field.to_string(),
            ));
        }
        let dim = self.dim + other.dim;
        let mut left = Vec::new();
        let mut right = Vec::new();
        for (side, sink) in [(Side::Left, &mut left), (Side::Right, &mut right)] {
            for (&(i, j), row) in self.table(side) {
                for (k, v) in row {
                    sink.push((i, j, *k, v.clone()));
                }
            }
            for (&(i, j), row) in other.table(side) {
                for (k, v) in row {
                    sink.push((i + self.dim, j + self.dim, k + self.dim, v.clone()));
                }
            }
        }
        DiasAlgebra::from_entries(self.field, dim, &left, &right)
    }

    fn check_subspace(&self, s: &Subspace) -> Result<()> {
        if s.field() != self.field {
            return Err(Error::FieldMismatch(
                self.field.to_string(),
                s.field().to_string(),
            ));
        }
        if s.ambient_dim() != self.dim {
            return Err(Error::ShapeError(format!(
                "subspace of ambient {} in algebra of dimension {}",
                s.ambient_dim(),
                self.dim
            )));
        }
        Ok(())
    }
}

/// Verifies that `check.matrix` commutes with both products on basis pairs.
pub fn check_homomorphism(check: &AlgebraMorphismCheck) -> Result<bool> {
    let m = &check.matrix;
    if m.rows() != check.target.dim() || m.cols() != check.source.dim() {
        return Err(Error::ShapeError(format!(
            "morphism matrix {}x{} between dimensions {} -> {}",
            m.rows(),
            m.cols(),
            check.source.dim(),
            check.target.dim()
        )));
    }
    if check.source.field() != check.target.field() {
        return Err(Error::FieldMismatch(
            check.source.field().to_string(),
            check.target.field().to_string(),
        ));
    }
    let n = check.source.dim();
    let mt = m.transpose();
    let images: Vec<Vec<Scalar>> = (0..n).map(|i| mt.row(i).to_vec()).collect();
    for side in Side::BOTH {
        for i in 0..n {
            for j in 0..n {
                let prod = check.source.basis_product_dense(side, i, j);
                let mapped = m.mul_vec(&prod)?;
                let target_prod = check.target.multiply(side, &images[i], &images[j])?;
                if mapped != target_prod {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::Rational
    }

    /// dim 3 with x <| x = m and x |> x = s, everything else zero
    fn tiny_cover() -> DiasAlgebra {
        DiasAlgebra::from_entries(
            q(),
            3,
            &[(0, 0, 1, q().one())],
            &[(0, 0, 2, q().one())],
        )
        .unwrap()
    }

    /// the dual numbers with both products equal to multiplication
    fn dual_numbers() -> DiasAlgebra {
        let e = [
            (0, 0, 0, q().one()),
            (0, 1, 1, q().one()),
            (1, 0, 1, q().one()),
        ];
        DiasAlgebra::from_entries(q(), 2, &e, &e).unwrap()
    }

    #[test]
    fn abelian_validates() {
        for n in 0..4 {
            assert!(DiasAlgebra::zero_algebra(q(), n).validate_axioms().is_ok());
        }
    }

    #[test]
    fn tiny_cover_validates() {
        assert!(tiny_cover().validate_axioms().is_ok());
    }

    #[test]
    fn one_sided_square_violates_inner_swap() {
        // x <| x = x with zero right product: x <| (x <| x) = x but
        // x <| (x |> x) = 0
        let bad =
            DiasAlgebra::from_entries(q(), 1, &[(0, 0, 0, q().one())], &[]).unwrap();
        let report = bad.validate_axioms();
        assert!(!report.is_ok());
        assert!(report
            .violations
            .iter()
            .any(|v| v.axiom == Axiom::InnerSwapLeft && v.triple == (0, 0, 0)));
        for v in &report.violations {
            assert!(v.residual.iter().any(|x| !x.is_zero()));
        }
    }

    #[test]
    fn box_product_of_tiny_cover() {
        let k = tiny_cover();
        let full = Subspace::full(q(), 3);
        let derived = k.box_product(&full, &full).unwrap();
        assert_eq!(derived.dim(), 2);
        assert!(derived.contains_vector(&[q().zero(), q().one(), q().zero()]));
        assert!(derived.contains_vector(&[q().zero(), q().zero(), q().one()]));

        // the central block annihilates everything
        let m_line =
            Subspace::from_row_vectors(q(), 3, vec![vec![q().zero(), q().one(), q().zero()]])
                .unwrap();
        assert!(k.box_product(&m_line, &full).unwrap().is_zero());
    }

    #[test]
    fn abelian_box_product_is_zero() {
        let a = DiasAlgebra::zero_algebra(q(), 3);
        let full = Subspace::full(q(), 3);
        assert!(a.box_product(&full, &full).unwrap().is_zero());
    }

    #[test]
    fn derived_subalgebras() {
        assert!(DiasAlgebra::zero_algebra(q(), 2)
            .derived_subalgebra()
            .is_zero());
        assert_eq!(tiny_cover().derived_subalgebra().dim(), 2);
        // the dual numbers are generated by products: 1*1 = 1, 1*t = t
        assert_eq!(dual_numbers().derived_subalgebra().dim(), 2);
    }

    #[test]
    fn centers() {
        assert_eq!(DiasAlgebra::zero_algebra(q(), 3).center().dim(), 3);
        let z = tiny_cover().center();
        assert_eq!(z.dim(), 2);
        assert_eq!(z, tiny_cover().derived_subalgebra());
        // unital algebras have annihilator center zero
        assert!(dual_numbers().center().is_zero());
    }

    #[test]
    fn ideals() {
        let k = tiny_cover();
        let zero = Subspace::zero(q(), 3);
        assert!(k.is_ideal(&zero).unwrap());
        assert!(k.is_central_ideal(&zero).unwrap());
        let m = k.derived_subalgebra();
        assert!(k.is_ideal(&m).unwrap());
        assert!(k.is_central_ideal(&m).unwrap());

        // span{1} is not an ideal of the dual numbers: t * 1 = t
        let d = dual_numbers();
        let ones = Subspace::from_row_vectors(q(), 2, vec![vec![q().one(), q().zero()]]).unwrap();
        assert!(!d.is_ideal(&ones).unwrap());
    }

    #[test]
    fn quotient_by_zero_is_identity() {
        let k = tiny_cover();
        let (quot, proj, sect) = k.quotient(&Subspace::zero(q(), 3)).unwrap();
        assert_eq!(quot, k);
        assert_eq!(proj, Matrix::identity(q(), 3));
        assert_eq!(sect, Matrix::identity(q(), 3));
    }

    #[test]
    fn quotient_of_tiny_cover_by_center_is_abelian() {
        let k = tiny_cover();
        let m = k.center();
        let (quot, proj, sect) = k.quotient(&m).unwrap();
        assert_eq!(quot.dim(), 1);
        assert!(quot.table(Side::Left).is_empty());
        assert!(quot.table(Side::Right).is_empty());
        assert_eq!(proj.mul(&sect).unwrap(), Matrix::identity(q(), 1));
    }

    #[test]
    fn quotient_of_dual_numbers_by_nilpotents() {
        let d = dual_numbers();
        let t_line =
            Subspace::from_row_vectors(q(), 2, vec![vec![q().zero(), q().one()]]).unwrap();
        let (quot, _, _) = d.quotient(&t_line).unwrap();
        assert_eq!(quot.dim(), 1);
        // x <| x = x |> x = x
        assert_eq!(quot.basis_product(Side::Left, 0, 0), &[(0, q().one())]);
        assert_eq!(quot.basis_product(Side::Right, 0, 0), &[(0, q().one())]);
    }

    #[test]
    fn quotient_projection_is_a_homomorphism() {
        let k = tiny_cover();
        let m = k.center();
        let (quot, proj, _) = k.quotient(&m).unwrap();
        let check = AlgebraMorphismCheck {
            source: k,
            target: quot,
            matrix: proj,
        };
        assert!(check_homomorphism(&check).unwrap());
    }

    #[test]
    fn direct_sum_of_abelians_is_abelian() {
        let a = DiasAlgebra::zero_algebra(q(), 2);
        let b = DiasAlgebra::zero_algebra(q(), 3);
        let s = a.direct_sum(&b).unwrap();
        assert_eq!(s.dim(), 5);
        assert!(s.validate_axioms().is_ok());
        assert!(s.derived_subalgebra().is_zero());
    }

    #[test]
    fn identity_map_is_a_homomorphism() {
        let k = tiny_cover();
        let check = AlgebraMorphismCheck {
            source: k.clone(),
            target: k,
            matrix: Matrix::identity(q(), 3),
        };
        assert!(check_homomorphism(&check).unwrap());
    }

    #[test]
    fn derived_dim_bound_from_central_quotient() {
        // dim K' <= 2 * (dim K - dim Z(K))^2
        for alg in [tiny_cover(), dual_numbers()] {
            let n = alg.dim() - alg.center().dim();
            assert!(alg.derived_subalgebra().dim() <= 2 * n * n);
        }
    }
}
