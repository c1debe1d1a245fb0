//! JSON report shapes. Groups are rendered with the library's text form
//! (`Z[1/6] ⊕ Z^4`, `Z/2 ⊕ Z`, `0`); matrices as row-of-rows.

use serde::{Deserialize, Serialize};
use tilecohom::{CohomologyReport, HullCohomology, IntMatrix, SmithDecomposition};

use crate::format::{rows_of, MatrixFile, Rows};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidateJson {
    pub valid: bool,
    pub violations: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InducedMapsJson {
    #[serde(rename = "H0")]
    pub h0: Rows,
    #[serde(rename = "H1")]
    pub h1: Rows,
    #[serde(rename = "H2")]
    pub h2: Rows,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomologyJson {
    pub name: String,
    #[serde(rename = "H0")]
    pub h0: String,
    #[serde(rename = "H1")]
    pub h1: String,
    #[serde(rename = "H2")]
    pub h2: String,
    /// Induced maps in canonical coordinates, present with substitution data.
    pub maps: Option<InducedMapsJson>,
}

impl CohomologyJson {
    pub fn new(name: &str, r: &CohomologyReport) -> Self {
        CohomologyJson {
            name: name.to_string(),
            h0: r.h0.group.to_string(),
            h1: r.h1.group.to_string(),
            h2: r.h2.group.to_string(),
            maps: r.maps.as_ref().map(|m| InducedMapsJson {
                h0: rows_of(&m.g0.matrix),
                h1: rows_of(&m.g1.matrix),
                h2: rows_of(&m.g2.matrix),
            }),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HullJson {
    #[serde(rename = "H0")]
    pub h0: String,
    #[serde(rename = "H1")]
    pub h1: String,
    #[serde(rename = "H2")]
    pub h2: String,
    #[serde(rename = "K0")]
    pub k0: String,
    #[serde(rename = "K1")]
    pub k1: String,
    pub primitive: bool,
    /// Smallest positive power of the face substitution, `null` when none.
    pub witness_power: Option<usize>,
}

impl HullJson {
    pub fn new(h: &HullCohomology, primitive: (bool, Option<usize>)) -> Self {
        HullJson {
            h0: h.h0.to_string(),
            h1: h.h1.to_string(),
            h2: h.h2.to_string(),
            k0: h.k0.to_string(),
            k1: h.k1.to_string(),
            primitive: primitive.0,
            witness_power: primitive.1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SnfJson {
    #[serde(rename = "P")]
    pub p: Rows,
    #[serde(rename = "D")]
    pub d: Rows,
    #[serde(rename = "Q")]
    pub q: Rows,
    pub rank: usize,
    pub invariant_factors: Vec<crate::format::Entry>,
}

impl SnfJson {
    pub fn new(s: &SmithDecomposition) -> Self {
        SnfJson {
            p: rows_of(&s.p),
            d: rows_of(&s.d),
            q: rows_of(&s.q),
            rank: s.rank,
            invariant_factors: s.invariant_factors().iter().map(Into::into).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DirlimJson {
    /// One-line rendering; for a presentation, its first line.
    pub limit: String,
    pub classified: bool,
    /// The nonsingular matrix presenting the limit when it is not classified.
    pub reduced: Option<MatrixFile>,
}

impl DirlimJson {
    pub fn new(l: &tilecohom::DirectLimitResult) -> Self {
        let reduced: Option<&IntMatrix> = match l {
            tilecohom::DirectLimit::Presented { reduced } => Some(reduced),
            tilecohom::DirectLimit::Classified(_) => None,
        };
        DirlimJson {
            limit: l.to_string().lines().next().unwrap_or_default().to_string(),
            classified: l.is_classified(),
            reduced: reduced.map(MatrixFile::from_matrix),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::Entry;
    use serde::de::DeserializeOwned;
    use std::fmt::Debug;

    fn round_trip<T: Serialize + DeserializeOwned + PartialEq + Debug>(x: &T) {
        let s = serde_json::to_string(x).unwrap();
        assert_eq!(&serde_json::from_str::<T>(&s).unwrap(), x, "{s}");
    }

    #[test]
    fn hull_json_shape() {
        let h = HullJson {
            h0: "Z".into(),
            h1: "0".into(),
            h2: "Z[1/6] ⊕ Z^4".into(),
            k0: "Z[1/6] ⊕ Z^5".into(),
            k1: "0".into(),
            primitive: true,
            witness_power: Some(2),
        };
        let v: serde_json::Value = serde_json::to_value(&h).unwrap();
        let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
        let mut expected = vec!["H0", "H1", "H2", "K0", "K1", "primitive", "witness_power"];
        expected.sort_unstable();
        let mut keys = keys;
        keys.sort_unstable();
        assert_eq!(keys, expected);
        round_trip(&h);
        round_trip(&HullJson {
            witness_power: None,
            primitive: false,
            ..h
        });
    }

    #[test]
    fn other_reports_round_trip() {
        round_trip(&ValidateJson {
            valid: false,
            violations: vec!["d1*d2 = 0 fails at column 0".into()],
        });
        round_trip(&CohomologyJson {
            name: "rp2".into(),
            h0: "Z".into(),
            h1: "0".into(),
            h2: "Z/2".into(),
            maps: Some(InducedMapsJson {
                h0: vec![vec![Entry::Small(1)]],
                h1: vec![],
                h2: vec![vec![Entry::Big("123456789012345678901234567890".into())]],
            }),
        });
        let s = tilecohom::smith_normal_form(&IntMatrix::from_i64(2, 2, &[4, 0, 0, 6]));
        round_trip(&SnfJson::new(&s));
        let l = tilecohom::stationary_limit(&IntMatrix::from_i64(2, 2, &[2, 1, 1, 1])).unwrap();
        let d = DirlimJson::new(&l);
        assert!(!d.classified && d.reduced.is_some());
        round_trip(&d);
    }
}
