use std::fmt;

use crate::groups::{fmt_free, invariant_factors, AbelianGroup};
use crate::linalg::Matrix;
use crate::scalar::Scalar;

/// `Z[1/d_1] + ... + Z[1/d_k] + Z^f + torsion`.
///
/// Localized factors are kept as computed (sorted, never merged): `Z[1/2] + Z[1/3]`
/// is not rewritten in terms of `Z[1/6]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ClassifiedLimit<T> {
    localized: Vec<T>,
    free_rank: usize,
    torsion: Vec<T>,
}

impl<T: Scalar> ClassifiedLimit<T> {
    /// Normalizes signs, turns `Z[1/1]` into free summands and rewrites the
    /// torsion orders as invariant factors. Zero localizations are rejected.
    pub fn new(localized: &[T], free_rank: usize, torsion: &[T]) -> Self {
        assert!(
            localized.iter().all(|d| !d.is_zero()),
            "Z[1/0] is not a group"
        );
        let mut loc: Vec<T> = localized
            .iter()
            .map(|d| d.abs())
            .filter(|d| !d.is_one())
            .collect();
        loc.sort();
        let units = localized.len() - loc.len();
        ClassifiedLimit {
            localized: loc,
            free_rank: free_rank + units,
            torsion: invariant_factors(torsion),
        }
    }

    pub fn trivial() -> Self {
        ClassifiedLimit::new(&[], 0, &[])
    }

    pub fn from_group(g: &AbelianGroup<T>) -> Self {
        ClassifiedLimit::new(&[], g.free_rank(), g.torsion())
    }

    pub fn localized(&self) -> &[T] {
        &self.localized
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn torsion(&self) -> &[T] {
        &self.torsion
    }

    pub fn is_trivial(&self) -> bool {
        self.localized.is_empty() && self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Formal direct sum.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut loc = self.localized.clone();
        loc.extend(other.localized.iter().cloned());
        let mut tor = self.torsion.clone();
        tor.extend(other.torsion.iter().cloned());
        ClassifiedLimit::new(&loc, self.free_rank + other.free_rank, &tor)
    }
}

impl<T: Scalar> fmt::Display for ClassifiedLimit<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts: Vec<String> = self.localized.iter().map(|d| format!("Z[1/{d}]")).collect();
        if self.free_rank > 0 {
            parts.push(FreeRank(self.free_rank).to_string());
        }
        parts.extend(self.torsion.iter().map(|n| format!("Z/{n}")));
        write!(f, "{}", parts.join(" ⊕ "))
    }
}

struct FreeRank(usize);

impl fmt::Display for FreeRank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_free(f, self.0)
    }
}

/// A stationary direct limit, either identified up to isomorphism or left as
/// `lim(A', Z^m)` for a nonsingular `A'`, which is `union_k A'^-k Z^m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DirectLimit<T> {
    Classified(ClassifiedLimit<T>),
    Presented { reduced: Matrix<T> },
}

impl<T: Scalar> DirectLimit<T> {
    pub fn classified(&self) -> Option<&ClassifiedLimit<T>> {
        match self {
            DirectLimit::Classified(c) => Some(c),
            DirectLimit::Presented { .. } => None,
        }
    }

    pub fn is_classified(&self) -> bool {
        self.classified().is_some()
    }
}

impl<T: Scalar> From<ClassifiedLimit<T>> for DirectLimit<T> {
    fn from(c: ClassifiedLimit<T>) -> Self {
        DirectLimit::Classified(c)
    }
}

impl<T: Scalar> fmt::Display for DirectLimit<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DirectLimit::Classified(c) => write!(f, "{c}"),
            DirectLimit::Presented { reduced } => {
                let det = reduced.det().map_err(|_| fmt::Error)?;
                writeln!(f, "lim(A', Z^{}) with det A' = {det}", reduced.rows())?;
                write!(f, "{reduced}")
            }
        }
    }
}
