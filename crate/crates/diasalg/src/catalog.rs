//! Built-in algebra families and seeded generators forming the test corpus.
//!
//! Every generator here is valid by construction: either the products vanish,
//! both products agree with an associative multiplication, or all products
//! land in a block that annihilates everything, which makes each of the five
//! identities hold because every doubled product is zero. Random tensors
//! almost never satisfy the identities, so the corpus is built from these
//! guaranteed families instead of rejection sampling.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{DiasAlgebra, Side};
use crate::error::{Error, Result};
use crate::linalg::{FieldSpec, Scalar, Subspace};

/// Where a recorded invariant value comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InvariantSource {
    /// Follows from the construction by a closed formula.
    Formula,
    /// Precomputed once and pinned as a constant.
    Pinned,
}

#[derive(Debug, Clone)]
pub struct KnownInvariant {
    pub name: &'static str,
    pub value: usize,
    pub source: InvariantSource,
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub id: String,
    pub algebra: DiasAlgebra,
    pub known: Vec<KnownInvariant>,
    /// Central ideals paired with this entry for sequence sweeps, each with a
    /// short role name.
    pub central_ideals: Vec<(String, Subspace)>,
}

/// The abelian algebra: both products zero.
pub fn abelian(n: usize, field: FieldSpec) -> DiasAlgebra {
    DiasAlgebra::zero_algebra(field, n)
}

/// Dimension `n + 2n^2` algebra with basis `x_1..x_n`, `m_11..m_nn`,
/// `s_11..s_nn` and only nonzero products `x_i <| x_j = m_ij` and
/// `x_i |> x_j = s_ij`. Its center and derived subalgebra both equal the
/// span of the `m` and `s` vectors.
pub fn example_cover(n: usize, field: FieldSpec) -> DiasAlgebra {
    let one = field.one();
    let mut left = Vec::new();
    let mut right = Vec::new();
    for i in 0..n {
        for j in 0..n {
            left.push((i, j, n + i * n + j, one.clone()));
            right.push((i, j, n + n * n + i * n + j, one.clone()));
        }
    }
    let alg = DiasAlgebra::from_entries(field, n + 2 * n * n, &left, &right)
        .expect("indices stay in range");
    let mut labels: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    for i in 1..=n {
        for j in 1..=n {
            labels.push(format!("m{i}{j}"));
        }
    }
    for i in 1..=n {
        for j in 1..=n {
            labels.push(format!("s{i}{j}"));
        }
    }
    alg.with_labels(labels).expect("label count matches")
}

/// Interprets an associative multiplication table as a diassociative algebra
/// with both products equal. Associativity of the input is verified first;
/// all five identities then reduce to it.
pub fn from_associative(
    field: FieldSpec,
    dim: usize,
    products: &[(usize, usize, usize, Scalar)],
) -> Result<DiasAlgebra> {
    let alg = DiasAlgebra::from_entries(field, dim, products, products)?;
    for i in 0..dim {
        for j in 0..dim {
            for k in 0..dim {
                let mut ei = vec![field.zero(); dim];
                ei[i] = field.one();
                let mut ek = vec![field.zero(); dim];
                ek[k] = field.one();
                let ij = alg.basis_product_dense(Side::Left, i, j);
                let jk = alg.basis_product_dense(Side::Left, j, k);
                let lhs = alg.multiply(Side::Left, &ij, &ek)?;
                let rhs = alg.multiply(Side::Left, &ei, &jk)?;
                if lhs != rhs {
                    return Err(Error::NotAssociative((i, j, k)));
                }
            }
        }
    }
    Ok(alg)
}

/// The dual numbers: basis `1, t` with `t^2 = 0`.
pub fn dual_numbers(field: FieldSpec) -> DiasAlgebra {
    let one = field.one();
    let products = [
        (0, 0, 0, one.clone()),
        (0, 1, 1, one.clone()),
        (1, 0, 1, one),
    ];
    from_associative(field, 2, &products)
        .expect("truncated polynomial multiplication is associative")
        .with_labels(vec!["1".into(), "t".into()])
        .expect("label count matches")
}

/// Truncated polynomials with basis `1, t, .., t^(k-1)` and `t^k = 0`.
pub fn truncated_polynomials(field: FieldSpec, k: usize) -> DiasAlgebra {
    let one = field.one();
    let mut products = Vec::new();
    for a in 0..k {
        for b in 0..k {
            if a + b < k {
                products.push((a, b, a + b, one.clone()));
            }
        }
    }
    let labels = (0..k)
        .map(|a| match a {
            0 => "1".to_string(),
            1 => "t".to_string(),
            _ => format!("t^{a}"),
        })
        .collect();
    from_associative(field, k, &products)
        .expect("truncated polynomial multiplication is associative")
        .with_labels(labels)
        .expect("label count matches")
}

/// The split pair of fields: two orthogonal idempotents.
pub fn field_pair(field: FieldSpec) -> DiasAlgebra {
    let one = field.one();
    let products = [(0, 0, 0, one.clone()), (1, 1, 1, one)];
    from_associative(field, 2, &products)
        .expect("diagonal multiplication is associative")
        .with_labels(vec!["e1".into(), "e2".into()])
        .expect("label count matches")
}

/// The strictly upper triangular 2x2 matrices: one nilpotent generator with
/// square zero, i.e. the 1-dimensional abelian algebra.
pub fn strictly_upper_2x2(field: FieldSpec) -> DiasAlgebra {
    from_associative(field, 1, &[])
        .expect("zero multiplication is associative")
        .with_labels(vec!["e12".into()])
        .expect("label count matches")
}

/// A two-step algebra `V (+) M`: basis `V` first, then an annihilating block
/// `M`, with products given by arbitrary bilinear maps `V x V -> M`. Valid
/// for any choice of maps: each doubled product lands in `M` and then dies.
/// Entries are `(i, j, k, value)` with `i, j < n` indexing `V` and `k < m`
/// indexing `M`.
pub fn two_step(
    n: usize,
    m: usize,
    field: FieldSpec,
    left: &[(usize, usize, usize, Scalar)],
    right: &[(usize, usize, usize, Scalar)],
) -> Result<DiasAlgebra> {
    let shift = |entries: &[(usize, usize, usize, Scalar)]| -> Result<Vec<_>> {
        entries
            .iter()
            .map(|(i, j, k, v)| {
                if *i >= n || *j >= n || *k >= m {
                    return Err(Error::ShapeError(format!(
                        "two-step entry ({i},{j},{k}) outside V dimension {n}, M dimension {m}"
                    )));
                }
                Ok((*i, *j, n + *k, v.clone()))
            })
            .collect()
    };
    DiasAlgebra::from_entries(field, n + m, &shift(left)?, &shift(right)?)
}

/// Seeded random instance of [`two_step`].
pub fn random_two_step(n: usize, m: usize, field: FieldSpec, seed: u64) -> DiasAlgebra {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let draw = |rng: &mut ChaCha8Rng| -> Scalar {
        match field {
            FieldSpec::Rational => field.from_i64(rng.gen_range(-3..=3)),
            FieldSpec::Prime(p) => field.from_i64(rng.gen_range(0..p) as i64),
        }
    };
    let mut left = Vec::new();
    let mut right = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..m {
                let v = draw(&mut rng);
                if !v.is_zero() {
                    left.push((i, j, k, v));
                }
                let v = draw(&mut rng);
                if !v.is_zero() {
                    right.push((i, j, k, v));
                }
            }
        }
    }
    two_step(n, m, field, &left, &right).expect("entries stay in range")
}

fn formula(name: &'static str, value: usize) -> KnownInvariant {
    KnownInvariant {
        name,
        value,
        source: InvariantSource::Formula,
    }
}

fn pinned(name: &'static str, value: usize) -> KnownInvariant {
    KnownInvariant {
        name,
        value,
        source: InvariantSource::Pinned,
    }
}

/// Central ideals paired with an algebra for the sweeps: the zero ideal, the
/// full center when nontrivial, and a line inside the center when the center
/// has dimension at least two. Every subspace of the center is automatically
/// a central ideal.
fn standard_ideals(alg: &DiasAlgebra) -> Vec<(String, Subspace)> {
    let mut out = vec![(
        "zero".to_string(),
        Subspace::zero(alg.field(), alg.dim()),
    )];
    let center = alg.center();
    if center.dim() > 0 {
        out.push(("center".to_string(), center.clone()));
    }
    if center.dim() >= 2 {
        let line = Subspace::from_row_vectors(
            alg.field(),
            alg.dim(),
            vec![center.basis_rows().remove(0)],
        )
        .expect("center basis row is well-shaped");
        out.push(("center-line".to_string(), line));
    }
    out
}

fn entry(id: String, algebra: DiasAlgebra, known: Vec<KnownInvariant>) -> CatalogEntry {
    let central_ideals = standard_ideals(&algebra);
    CatalogEntry {
        id,
        algebra,
        known,
        central_ideals,
    }
}

/// The whole built-in corpus over one field: abelian algebras, the explicit
/// covers, associative examples with both products equal, direct sums, and
/// twenty seeded two-step algebras.
pub fn corpus(field: FieldSpec) -> Vec<CatalogEntry> {
    let mut entries = Vec::new();
    for n in 0..=5 {
        entries.push(entry(
            format!("abelian_{n}"),
            abelian(n, field),
            vec![
                formula("derived_dim", 0),
                formula("center_dim", n),
                formula("multiplier_dim", 2 * n * n),
            ],
        ));
    }
    for n in 1..=3 {
        let mut known = vec![
            formula("derived_dim", 2 * n * n),
            formula("center_dim", 2 * n * n),
        ];
        if n == 1 {
            known.push(pinned("multiplier_dim", 3));
        }
        if n == 2 {
            known.push(pinned("multiplier_dim", 24));
        }
        entries.push(entry(
            format!("example_cover_{n}"),
            example_cover(n, field),
            known,
        ));
    }
    entries.push(entry(
        "dual_numbers".to_string(),
        dual_numbers(field),
        vec![
            pinned("derived_dim", 2),
            pinned("center_dim", 0),
            pinned("multiplier_dim", 0),
        ],
    ));
    entries.push(entry(
        "truncated_poly_3".to_string(),
        truncated_polynomials(field, 3),
        vec![
            pinned("derived_dim", 3),
            pinned("center_dim", 0),
            pinned("multiplier_dim", 0),
        ],
    ));
    entries.push(entry(
        "field_pair".to_string(),
        field_pair(field),
        vec![
            pinned("derived_dim", 2),
            pinned("center_dim", 0),
            pinned("multiplier_dim", 0),
        ],
    ));
    entries.push(entry(
        "strict_upper_2x2".to_string(),
        strictly_upper_2x2(field),
        vec![formula("derived_dim", 0), formula("center_dim", 1)],
    ));

    let sums: [(&str, DiasAlgebra); 3] = [
        (
            "dual_numbers+field_pair",
            dual_numbers(field)
                .direct_sum(&field_pair(field))
                .expect("same field"),
        ),
        (
            "dual_numbers+truncated_poly_3",
            dual_numbers(field)
                .direct_sum(&truncated_polynomials(field, 3))
                .expect("same field"),
        ),
        (
            "strict_upper_2x2+field_pair",
            strictly_upper_2x2(field)
                .direct_sum(&field_pair(field))
                .expect("same field"),
        ),
    ];
    for (id, algebra) in sums {
        entries.push(entry(id.to_string(), algebra, Vec::new()));
    }

    let shapes = [
        (1, 1),
        (1, 2),
        (2, 1),
        (2, 2),
        (2, 3),
        (3, 1),
        (3, 2),
        (3, 3),
        (4, 2),
        (4, 4),
    ];
    let mut seed = 1u64;
    for &(n, m) in &shapes {
        for _ in 0..2 {
            entries.push(entry(
                format!("two_step_n{n}_m{m}_s{seed}"),
                random_two_step(n, m, field, seed),
                Vec::new(),
            ));
            seed += 1;
        }
    }
    entries
}

/// Looks up or regenerates a catalog entry by id. Two-step ids accept an
/// explicit seed override.
pub fn by_id(id: &str, field: FieldSpec, seed: Option<u64>) -> Option<DiasAlgebra> {
    if let Some(rest) = id.strip_prefix("abelian_") {
        return rest.parse().ok().map(|n| abelian(n, field));
    }
    if let Some(rest) = id.strip_prefix("example_cover_") {
        return rest
            .parse()
            .ok()
            .filter(|&n| n >= 1)
            .map(|n| example_cover(n, field));
    }
    if let Some(rest) = id.strip_prefix("two_step_") {
        // two_step_n<k>_m<k>_s<k>
        let mut n = None;
        let mut m = None;
        let mut s = None;
        for part in rest.split('_') {
            if let Some(v) = part.strip_prefix('n') {
                n = v.parse().ok();
            } else if let Some(v) = part.strip_prefix('m') {
                m = v.parse().ok();
            } else if let Some(v) = part.strip_prefix('s') {
                s = v.parse().ok();
            }
        }
        let (n, m) = (n?, m?);
        let s = seed.or(s)?;
        return Some(random_two_step(n, m, field, s));
    }
    match id {
        "dual_numbers" => Some(dual_numbers(field)),
        "truncated_poly_3" => Some(truncated_polynomials(field, 3)),
        "field_pair" => Some(field_pair(field)),
        "strict_upper_2x2" => Some(strictly_upper_2x2(field)),
        _ => corpus(field)
            .into_iter()
            .find(|e| e.id == id)
            .map(|e| e.algebra),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extensions::multiplier;

    fn q() -> FieldSpec {
        FieldSpec::Rational
    }

    #[test]
    fn example_cover_shape() {
        for n in 1..=2 {
            let k = example_cover(n, q());
            assert_eq!(k.dim(), n + 2 * n * n);
            assert!(k.validate_axioms().is_ok());
            let derived = k.derived_subalgebra();
            assert_eq!(derived.dim(), 2 * n * n);
            assert_eq!(k.center(), derived);
        }
    }

    #[test]
    fn example_cover_quotient_by_center_is_abelian() {
        let k = example_cover(2, q());
        let (quot, _, _) = k.quotient(&k.center()).unwrap();
        assert!(quot.same_structure(&abelian(2, q())));
    }

    #[test]
    fn from_associative_rejects_non_associative_tables() {
        // e*e = f, f*e = e is not associative: (ee)e = ee = f, e(ee) = ef = 0
        let bad = [
            (0, 0, 1, q().one()),
            (1, 0, 0, q().one()),
        ];
        assert!(matches!(
            from_associative(q(), 2, &bad),
            Err(Error::NotAssociative(_))
        ));
    }

    #[test]
    fn associative_examples_validate() {
        for alg in [
            dual_numbers(q()),
            truncated_polynomials(q(), 3),
            field_pair(q()),
            strictly_upper_2x2(q()),
        ] {
            assert!(alg.validate_axioms().is_ok());
        }
        assert_eq!(dual_numbers(q()).derived_subalgebra().dim(), 2);
        assert!(field_pair(q()).center().is_zero());
        assert!(strictly_upper_2x2(q()).derived_subalgebra().is_zero());
    }

    #[test]
    fn random_two_step_always_validates() {
        let gf7 = FieldSpec::prime(7).unwrap();
        for seed in 0..30 {
            for field in [q(), gf7] {
                let alg = random_two_step(3, 2, field, seed);
                assert!(alg.validate_axioms().is_ok());
                // derived block sits inside the annihilator block inside the
                // center
                let derived = alg.derived_subalgebra();
                let block = Subspace::from_row_vectors(
                    field,
                    5,
                    (3..5)
                        .map(|k| {
                            let mut e = vec![field.zero(); 5];
                            e[k] = field.one();
                            e
                        })
                        .collect(),
                )
                .unwrap();
                assert!(block.contains(&derived).unwrap());
                assert!(alg.center().contains(&block).unwrap());
            }
        }
    }

    #[test]
    fn two_step_with_unit_values_matches_example_cover() {
        for n in 1..=2 {
            let mut left = Vec::new();
            let mut right = Vec::new();
            for i in 0..n {
                for j in 0..n {
                    left.push((i, j, i * n + j, q().one()));
                    right.push((i, j, n * n + i * n + j, q().one()));
                }
            }
            let alg = two_step(n, 2 * n * n, q(), &left, &right).unwrap();
            assert!(alg.same_structure(&example_cover(n, q())));
        }
    }

    #[test]
    fn corpus_is_large_and_valid() {
        let entries = corpus(q());
        assert!(entries.len() >= 30);
        for e in &entries {
            assert!(
                e.algebra.validate_axioms().is_ok(),
                "corpus entry {} violates the axioms",
                e.id
            );
            assert!(!e.central_ideals.is_empty());
        }
    }

    #[test]
    fn corpus_known_dims_match() {
        for e in corpus(q()) {
            for inv in &e.known {
                let actual = match inv.name {
                    "derived_dim" => e.algebra.derived_subalgebra().dim(),
                    "center_dim" => e.algebra.center().dim(),
                    "multiplier_dim" => multiplier(&e.algebra).0,
                    other => panic!("unknown invariant {other}"),
                };
                assert_eq!(actual, inv.value, "{} {}", e.id, inv.name);
            }
        }
    }

    #[test]
    fn by_id_round_trips() {
        for id in ["abelian_3", "example_cover_2", "dual_numbers", "two_step_n2_m2_s7"] {
            assert!(by_id(id, q(), None).is_some(), "{id}");
        }
        assert!(by_id("nope", q(), None).is_none());
    }
}
