//! On-disk formats: the JSON complex file and bare matrices (plain text or
//! JSON). Integers are JSON numbers, or strings when they do not fit in 64
//! bits.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use tilecohom::{CellLabels, Complex, IntMatrix, SubstitutionComplex};

/// A failure to read or parse an input file. Always maps to exit code 2.
#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{0}")]
    Json(String),
    #[error("field `{field}`: {msg}")]
    Field { field: String, msg: String },
    #[error("{0}")]
    Text(#[from] tilecohom::linalg::ParseMatrixError),
}

impl From<serde_json::Error> for FormatError {
    fn from(e: serde_json::Error) -> Self {
        FormatError::Json(format!("line {} column {}: {e}", e.line(), e.column()))
    }
}

fn field(field: impl Into<String>, msg: impl Into<String>) -> FormatError {
    FormatError::Field {
        field: field.into(),
        msg: msg.into(),
    }
}

/// One matrix entry as it appears in JSON.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Entry {
    Small(i64),
    Big(String),
}

impl Entry {
    pub fn to_bigint(&self) -> Result<BigInt, String> {
        match self {
            Entry::Small(v) => Ok(BigInt::from(*v)),
            Entry::Big(s) => {
                BigInt::from_str(s.trim()).map_err(|_| format!("invalid integer {s:?}"))
            }
        }
    }
}

impl From<&BigInt> for Entry {
    fn from(v: &BigInt) -> Self {
        i64::try_from(v).map_or_else(|_| Entry::Big(v.to_string()), Entry::Small)
    }
}

pub type Rows = Vec<Vec<Entry>>;

pub fn rows_of(m: &IntMatrix) -> Rows {
    m.to_rows()
        .iter()
        .map(|r| r.iter().map(Entry::from).collect())
        .collect()
}

/// Converts row-of-rows data into a matrix of the stated shape.
pub fn matrix_from_rows(
    name: &str,
    rows: &[Vec<Entry>],
    expected: (usize, usize),
) -> Result<IntMatrix, FormatError> {
    let (r, c) = expected;
    // a matrix with no columns may be written as [] whatever its row count
    if c == 0 && rows.is_empty() {
        return Ok(IntMatrix::zeros(r, 0));
    }
    if rows.len() != r {
        return Err(field(
            name,
            format!("expected {r} rows, found {}", rows.len()),
        ));
    }
    let mut data = Vec::with_capacity(r * c);
    for (i, row) in rows.iter().enumerate() {
        if row.len() != c {
            return Err(field(
                format!("{name}[{i}]"),
                format!("expected {c} entries, found {}", row.len()),
            ));
        }
        for (j, e) in row.iter().enumerate() {
            data.push(
                e.to_bigint()
                    .map_err(|m| field(format!("{name}[{i}][{j}]"), m))?,
            );
        }
    }
    Ok(IntMatrix::new(r, c, data).expect("shape checked"))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LabelsFile {
    #[serde(default)]
    pub vertices: Vec<String>,
    #[serde(default)]
    pub edges: Vec<String>,
    #[serde(default)]
    pub faces: Vec<String>,
}

/// The complex file: boundary matrices in chain convention (`d1` is
/// `vertices x edges`, `d2` is `edges x faces`) and optional substitution
/// matrices on edges and faces.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexFile {
    #[serde(default)]
    pub name: String,
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    pub d1: Rows,
    pub d2: Rows,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gamma1: Option<Rows>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gamma2: Option<Rows>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<LabelsFile>,
}

/// A parsed complex file with every shape checked.
#[derive(Debug, Clone)]
pub struct LoadedComplex {
    pub name: String,
    pub complex: Complex,
    pub substitution: Option<(IntMatrix, IntMatrix)>,
}

impl LoadedComplex {
    pub fn substitution_complex(&self) -> Option<SubstitutionComplex> {
        self.substitution
            .as_ref()
            .map(|(b1, b2)| SubstitutionComplex::new(self.complex.clone(), b1.clone(), b2.clone()))
    }
}

impl ComplexFile {
    pub fn parse(text: &str) -> Result<Self, FormatError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn load(&self) -> Result<LoadedComplex, FormatError> {
        let (v, e, f) = (self.vertices, self.edges, self.faces);
        let d1 = matrix_from_rows("d1", &self.d1, (v, e))?;
        let d2 = matrix_from_rows("d2", &self.d2, (e, f))?;
        let mut complex = Complex::new(d1, d2).expect("shapes checked");
        if let Some(l) = &self.labels {
            for (name, got, want) in [
                ("labels.vertices", l.vertices.len(), v),
                ("labels.edges", l.edges.len(), e),
                ("labels.faces", l.faces.len(), f),
            ] {
                if got != 0 && got != want {
                    return Err(field(name, format!("expected {want} labels, found {got}")));
                }
            }
            complex.labels = Some(CellLabels {
                vertices: l.vertices.clone(),
                edges: l.edges.clone(),
                faces: l.faces.clone(),
            });
        }
        let substitution = match (&self.gamma1, &self.gamma2) {
            (None, None) => None,
            (Some(g1), Some(g2)) => Some((
                matrix_from_rows("gamma1", g1, (e, e))?,
                matrix_from_rows("gamma2", g2, (f, f))?,
            )),
            (Some(_), None) => return Err(field("gamma2", "required when gamma1 is present")),
            (None, Some(_)) => return Err(field("gamma1", "required when gamma2 is present")),
        };
        Ok(LoadedComplex {
            name: self.name.clone(),
            complex,
            substitution,
        })
    }
}

/// JSON form of a bare matrix.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixFile {
    pub rows: usize,
    pub cols: usize,
    pub data: Rows,
}

impl MatrixFile {
    pub fn from_matrix(m: &IntMatrix) -> Self {
        MatrixFile {
            rows: m.rows(),
            cols: m.cols(),
            data: rows_of(m),
        }
    }

    pub fn to_matrix(&self) -> Result<IntMatrix, FormatError> {
        matrix_from_rows("data", &self.data, (self.rows, self.cols))
    }
}

/// Reads a matrix in either format; JSON is recognised by a leading `{`.
pub fn parse_matrix(text: &str) -> Result<IntMatrix, FormatError> {
    if text.trim_start().starts_with('{') {
        let f: MatrixFile = serde_json::from_str(text)?;
        f.to_matrix()
    } else {
        Ok(IntMatrix::from_str(text)?)
    }
}

pub fn read_file(path: &str) -> Result<String, FormatError> {
    std::fs::read_to_string(path).map_err(|source| FormatError::Io {
        path: path.to_string(),
        source,
    })
}

pub fn load_complex(path: &str) -> Result<LoadedComplex, FormatError> {
    ComplexFile::parse(&read_file(path)?)?.load()
}

/// Renders a matrix as aligned rows, one per line.
pub struct Pretty<'a>(pub &'a IntMatrix);

impl fmt::Display for Pretty<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = self.0;
        if m.rows() == 0 || m.cols() == 0 {
            return writeln!(f, "({}x{} empty)", m.rows(), m.cols());
        }
        write!(f, "{m}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const TORUS: &str = r#"{"name": "torus", "vertices": 1, "edges": 2, "faces": 1,
        "d1": [[0, 0]], "d2": [[0], [0]]}"#;

    #[test]
    fn parses_torus() {
        let c = ComplexFile::parse(TORUS).unwrap().load().unwrap();
        assert_eq!(
            (c.complex.vertices(), c.complex.edges(), c.complex.faces()),
            (1, 2, 1)
        );
        assert!(c.substitution.is_none());
    }

    #[test]
    fn dimension_mismatch_names_the_field() {
        let bad = TORUS.replace(r#""d2": [[0], [0]]"#, r#""d2": [[0], [0], [0]]"#);
        let err = ComplexFile::parse(&bad).unwrap().load().unwrap_err();
        assert_eq!(err.to_string(), "field `d2`: expected 2 rows, found 3");
        let bad = TORUS.replace(r#""d2": [[0], [0]]"#, r#""d2": [[0], [0, 1]]"#);
        let err = ComplexFile::parse(&bad).unwrap().load().unwrap_err();
        assert_eq!(
            err.to_string(),
            "field `d2[1]`: expected 1 entries, found 2"
        );
    }

    #[test]
    fn syntax_errors_carry_position() {
        let err = ComplexFile::parse("{\n  \"vertices\": 1,\n  oops\n}").unwrap_err();
        assert!(err.to_string().starts_with("line 3 column"), "{err}");
        let err = ComplexFile::parse(r#"{"vertices": 1}"#).unwrap_err();
        assert!(err.to_string().contains("missing field"), "{err}");
    }

    #[test]
    fn big_entries_as_strings() {
        let m = parse_matrix(
            r#"{"rows": 1, "cols": 2, "data": [["123456789012345678901234567890", -3]]}"#,
        )
        .unwrap();
        assert_eq!(m[(0, 0)].to_string(), "123456789012345678901234567890");
        let back = MatrixFile::from_matrix(&m);
        assert_eq!(back.data[0][1], Entry::Small(-3));
        assert_eq!(back.to_matrix().unwrap(), m);
        let err = parse_matrix(r#"{"rows": 1, "cols": 1, "data": [["x1"]]}"#).unwrap_err();
        assert_eq!(
            err.to_string(),
            "field `data[0][0]`: invalid integer \"x1\""
        );
    }

    #[test]
    fn text_matrices() {
        let m = parse_matrix("2 2\n4 0\n0 6\n").unwrap();
        assert_eq!(m, IntMatrix::from_i64(2, 2, &[4, 0, 0, 6]));
        assert!(matches!(
            parse_matrix("2 2\n1 2 3\n"),
            Err(FormatError::Text(_))
        ));
    }

    #[test]
    fn gammas_come_in_pairs() {
        let half = TORUS.replace("\"d2\"", "\"gamma1\": [[1, 0], [0, 1]], \"d2\"");
        let err = ComplexFile::parse(&half).unwrap().load().unwrap_err();
        assert_eq!(
            err.to_string(),
            "field `gamma2`: required when gamma1 is present"
        );
    }

    #[test]
    fn empty_column_matrices() {
        // circle: no faces, d2 is 1x0
        let circle = r#"{"vertices": 1, "edges": 1, "faces": 0, "d1": [[0]], "d2": [[]]}"#;
        let c = ComplexFile::parse(circle).unwrap().load().unwrap();
        assert_eq!(c.complex.d2().shape(), (1, 0));
        let terse = circle.replace(r#""d2": [[]]"#, r#""d2": []"#);
        assert!(ComplexFile::parse(&terse).unwrap().load().is_ok());
    }
}
