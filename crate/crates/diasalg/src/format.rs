//! The on-disk algebra format and the machine-readable report envelope.
//!
//! Algebras are stored as sparse product lists with scalars serialized as
//! exact strings ("3/2", "5"), never floats. Omitted products are zero;
//! duplicate `(i, j)` slots are rejected. Emission is canonical, so
//! emit -> parse -> emit is byte-identical.

use std::fmt;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::algebra::{DiasAlgebra, Side};
use crate::error::Error;
use crate::linalg::{FieldSpec, Scalar};

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum FieldJson {
    Rational,
    Prime { p: u64 },
}

impl From<FieldSpec> for FieldJson {
    fn from(f: FieldSpec) -> FieldJson {
        match f {
            FieldSpec::Rational => FieldJson::Rational,
            FieldSpec::Prime(p) => FieldJson::Prime { p },
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct Term {
    pub k: usize,
    pub v: String,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct ProductEntry {
    pub i: usize,
    pub j: usize,
    pub c: Vec<Term>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct AlgebraFile {
    pub name: String,
    pub field: FieldJson,
    pub dim: usize,
    pub left: Vec<ProductEntry>,
    pub right: Vec<ProductEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

#[derive(Debug)]
pub enum FormatError {
    Json(String),
    BadField(String),
    BadIndex { what: &'static str, value: usize, dim: usize },
    BadScalar(String),
    DuplicatePair(usize, usize),
    DuplicateTerm { i: usize, j: usize, k: usize },
    LabelCount { got: usize, dim: usize },
    Algebra(Error),
}

impl fmt::Display for FormatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FormatError::Json(e) => write!(f, "malformed JSON: {e}"),
            FormatError::BadField(e) => write!(f, "bad field spec: {e}"),
            FormatError::BadIndex { what, value, dim } => {
                write!(f, "{what} index {value} outside dimension {dim}")
            }
            FormatError::BadScalar(s) => write!(f, "bad scalar {s:?}"),
            FormatError::DuplicatePair(i, j) => {
                write!(f, "duplicate product entry for pair ({i}, {j})")
            }
            FormatError::DuplicateTerm { i, j, k } => {
                write!(f, "duplicate term k={k} in product entry ({i}, {j})")
            }
            FormatError::LabelCount { got, dim } => {
                write!(f, "{got} labels for dimension {dim}")
            }
            FormatError::Algebra(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for FormatError {}

impl AlgebraFile {
    pub fn parse_str(text: &str) -> Result<AlgebraFile, FormatError> {
        serde_json::from_str(text).map_err(|e| FormatError::Json(e.to_string()))
    }

    pub fn to_json_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serialization cannot fail");
        s.push('\n');
        s
    }

    pub fn field_spec(&self) -> Result<FieldSpec, FormatError> {
        match &self.field {
            FieldJson::Rational => Ok(FieldSpec::Rational),
            FieldJson::Prime { p } => {
                FieldSpec::prime(*p).map_err(|e| FormatError::BadField(e.to_string()))
            }
        }
    }

    pub fn to_algebra(&self) -> Result<DiasAlgebra, FormatError> {
        let field = self.field_spec()?;
        let read_side = |entries: &[ProductEntry]| -> Result<Vec<(usize, usize, usize, Scalar)>, FormatError> {
            let mut sink = Vec::new();
            let mut seen_pairs = std::collections::BTreeSet::new();
            for entry in entries {
                if entry.i >= self.dim {
                    return Err(FormatError::BadIndex {
                        what: "row",
                        value: entry.i,
                        dim: self.dim,
                    });
                }
                if entry.j >= self.dim {
                    return Err(FormatError::BadIndex {
                        what: "column",
                        value: entry.j,
                        dim: self.dim,
                    });
                }
                if !seen_pairs.insert((entry.i, entry.j)) {
                    return Err(FormatError::DuplicatePair(entry.i, entry.j));
                }
                let mut seen_terms = std::collections::BTreeSet::new();
                for term in &entry.c {
                    if term.k >= self.dim {
                        return Err(FormatError::BadIndex {
                            what: "target",
                            value: term.k,
                            dim: self.dim,
                        });
                    }
                    if !seen_terms.insert(term.k) {
                        return Err(FormatError::DuplicateTerm {
                            i: entry.i,
                            j: entry.j,
                            k: term.k,
                        });
                    }
                    let v = field
                        .parse(&term.v)
                        .map_err(|_| FormatError::BadScalar(term.v.clone()))?;
                    sink.push((entry.i, entry.j, term.k, v));
                }
            }
            Ok(sink)
        };
        let left = read_side(&self.left)?;
        let right = read_side(&self.right)?;
        let mut alg = DiasAlgebra::from_entries(field, self.dim, &left, &right)
            .map_err(FormatError::Algebra)?;
        if let Some(labels) = &self.labels {
            if labels.len() != self.dim {
                return Err(FormatError::LabelCount {
                    got: labels.len(),
                    dim: self.dim,
                });
            }
            alg = alg.with_labels(labels.clone()).map_err(FormatError::Algebra)?;
        }
        Ok(alg)
    }

    pub fn from_algebra(name: &str, alg: &DiasAlgebra) -> AlgebraFile {
        let table = |side: Side| -> Vec<ProductEntry> {
            alg.table(side)
                .iter()
                .map(|(&(i, j), row)| ProductEntry {
                    i,
                    j,
                    c: row
                        .iter()
                        .map(|(k, v)| Term {
                            k: *k,
                            v: v.to_string(),
                        })
                        .collect(),
                })
                .collect()
        };
        AlgebraFile {
            name: name.to_string(),
            field: alg.field().into(),
            dim: alg.dim(),
            left: table(Side::Left),
            right: table(Side::Right),
            labels: alg.labels().map(|l| l.to_vec()),
        }
    }
}

/// Machine-readable wrapper for one command invocation. Timing is excluded
/// unless explicitly requested so that output stays byte-stable for a fixed
/// input, command, and seed.
#[derive(Debug, Clone, Serialize)]
pub struct ReportEnvelope {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input_digest: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub results: serde_json::Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u128>,
}

impl ReportEnvelope {
    pub fn new(command: &str, results: serde_json::Value) -> ReportEnvelope {
        ReportEnvelope {
            tool: "diasalg",
            version: env!("CARGO_PKG_VERSION"),
            command: command.to_string(),
            input_digest: None,
            seed: None,
            results,
            timing_ms: None,
        }
    }

    pub fn to_json_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serialization cannot fail");
        s.push('\n');
        s
    }
}

pub fn digest(bytes: &[u8]) -> String {
    let mut hasher = Sha256::new();
    hasher.update(bytes);
    format!("sha256:{:x}", hasher.finalize())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn q() -> FieldSpec {
        FieldSpec::Rational
    }

    #[test]
    fn round_trip_is_byte_identical() {
        let alg = catalog::example_cover(2, q());
        let file = AlgebraFile::from_algebra("example_cover_2", &alg);
        let text = file.to_json_string();
        let parsed = AlgebraFile::parse_str(&text).unwrap();
        assert_eq!(parsed.to_json_string(), text);
        assert!(parsed.to_algebra().unwrap().same_structure(&alg));
    }

    #[test]
    fn prime_field_round_trip() {
        let gf7 = FieldSpec::prime(7).unwrap();
        let alg = catalog::random_two_step(2, 2, gf7, 5);
        let file = AlgebraFile::from_algebra("t", &alg);
        let back = AlgebraFile::parse_str(&file.to_json_string())
            .unwrap()
            .to_algebra()
            .unwrap();
        assert!(back.same_structure(&alg));
    }

    #[test]
    fn rejects_duplicate_pairs() {
        let text = r#"{
            "name": "bad", "field": {"kind": "rational"}, "dim": 2,
            "left": [
                {"i": 0, "j": 0, "c": [{"k": 1, "v": "1"}]},
                {"i": 0, "j": 0, "c": [{"k": 1, "v": "2"}]}
            ],
            "right": []
        }"#;
        let file = AlgebraFile::parse_str(text).unwrap();
        assert!(matches!(
            file.to_algebra(),
            Err(FormatError::DuplicatePair(0, 0))
        ));
    }

    #[test]
    fn rejects_out_of_range_indices() {
        let text = r#"{
            "name": "bad", "field": {"kind": "rational"}, "dim": 1,
            "left": [{"i": 0, "j": 0, "c": [{"k": 3, "v": "1"}]}],
            "right": []
        }"#;
        let file = AlgebraFile::parse_str(text).unwrap();
        assert!(matches!(
            file.to_algebra(),
            Err(FormatError::BadIndex { .. })
        ));
    }

    #[test]
    fn rejects_bad_scalars_and_composite_moduli() {
        let text = r#"{
            "name": "bad", "field": {"kind": "prime", "p": 6}, "dim": 1,
            "left": [], "right": []
        }"#;
        let file = AlgebraFile::parse_str(text).unwrap();
        assert!(matches!(file.to_algebra(), Err(FormatError::BadField(_))));

        let text = r#"{
            "name": "bad", "field": {"kind": "rational"}, "dim": 1,
            "left": [{"i": 0, "j": 0, "c": [{"k": 0, "v": "1.5"}]}],
            "right": []
        }"#;
        let file = AlgebraFile::parse_str(text).unwrap();
        assert!(matches!(file.to_algebra(), Err(FormatError::BadScalar(_))));
    }

    #[test]
    fn malformed_json_is_a_parse_error() {
        assert!(matches!(
            AlgebraFile::parse_str("{not json"),
            Err(FormatError::Json(_))
        ));
    }

    #[test]
    fn digest_is_stable() {
        assert_eq!(digest(b"abc"), digest(b"abc"));
        assert_ne!(digest(b"abc"), digest(b"abd"));
        assert!(digest(b"").starts_with("sha256:"));
    }
}
