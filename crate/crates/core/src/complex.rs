//! Finite 2-dimensional CW-complexes, optionally with a cellular self-map
//! given by its cochain matrices on edges and faces.
//!
//! Boundary matrices are stored in chain convention (`d1: V x E`,
//! `d2: E x F`); the cochain matrices are their transposes, `A0 = d1^T` and
//! `A1 = d2^T`. Orientation signs come from the data, never inferred.

use std::fmt;

use crate::error::{Error, Result};
use crate::groups::{
    cokernel, induced_endo, kernel_group, kernel_mod_image, CanonicalEndo, GroupChart,
};
use crate::linalg::Matrix;
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CellLabels {
    pub vertices: Vec<String>,
    pub edges: Vec<String>,
    pub faces: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Complex2D<T> {
    d1: Matrix<T>,
    d2: Matrix<T>,
    pub labels: Option<CellLabels>,
}

impl<T: Scalar> Complex2D<T> {
    /// Checks only the shapes; use [`Complex2D::validate`] for the
    /// chain-complex identities.
    pub fn new(d1: Matrix<T>, d2: Matrix<T>) -> Result<Self> {
        if d1.cols() != d2.rows() {
            return Err(Error::Shape {
                op: "complex",
                left: d1.shape(),
                right: d2.shape(),
            });
        }
        Ok(Complex2D {
            d1,
            d2,
            labels: None,
        })
    }

    pub fn vertices(&self) -> usize {
        self.d1.rows()
    }

    pub fn edges(&self) -> usize {
        self.d1.cols()
    }

    pub fn faces(&self) -> usize {
        self.d2.cols()
    }

    pub fn d1(&self) -> &Matrix<T> {
        &self.d1
    }

    pub fn d2(&self) -> &Matrix<T> {
        &self.d2
    }

    /// Coboundary `C^0 -> C^1`.
    pub fn a0(&self) -> Matrix<T> {
        self.d1.transpose()
    }

    /// Coboundary `C^1 -> C^2`.
    pub fn a1(&self) -> Matrix<T> {
        self.d2.transpose()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertices() as i64 - self.edges() as i64 + self.faces() as i64
    }

    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        for j in 0..self.edges() {
            let sum = self.d1.column(j).into_iter().fold(T::zero(), |a, b| a + b);
            if !sum.is_zero() {
                out.push(Violation::EdgeBoundarySum { column: j });
            }
        }
        let dd = &self.d1 * &self.d2;
        if let Some(column) = first_nonzero_column(&dd) {
            out.push(Violation::BoundaryOfBoundary { column });
        }
        out
    }
}

fn first_nonzero_column<T: Scalar>(m: &Matrix<T>) -> Option<usize> {
    (0..m.cols()).find(|&j| (0..m.rows()).any(|i| !m[(i, j)].is_zero()))
}

/// A failed identity together with one offending column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// `d1 * d2 != 0`; column indexes faces.
    BoundaryOfBoundary { column: usize },
    /// A column of `d1` does not sum to zero; column indexes edges.
    EdgeBoundarySum { column: usize },
    /// `B1 * A0 != A0`; column indexes vertices.
    VertexCommutation { column: usize },
    /// `B2 * A1 != A1 * B1`; column indexes edges.
    FaceCommutation { column: usize },
    /// A substitution matrix has the wrong shape.
    SubstitutionShape {
        name: &'static str,
        expected: (usize, usize),
        got: (usize, usize),
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::BoundaryOfBoundary { column } => {
                write!(f, "d1*d2 = 0 fails at column {column}")
            }
            Violation::EdgeBoundarySum { column } => {
                write!(f, "d1 column sum = 0 fails at column {column}")
            }
            Violation::VertexCommutation { column } => {
                write!(f, "B1*A0 = A0 fails at column {column}")
            }
            Violation::FaceCommutation { column } => {
                write!(f, "B2*A1 = A1*B1 fails at column {column}")
            }
            Violation::SubstitutionShape {
                name,
                expected,
                got,
            } => write!(f, "{name} has shape {got:?}, expected {expected:?}"),
        }
    }
}

/// A complex with the cochain matrices of a cellular self-map on edges
/// (`b1`, `E x E`) and faces (`b2`, `F x F`). The vertex map is the identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubstitutionComplex<T> {
    pub complex: Complex2D<T>,
    pub b1: Matrix<T>,
    pub b2: Matrix<T>,
}

impl<T: Scalar> SubstitutionComplex<T> {
    pub fn new(complex: Complex2D<T>, b1: Matrix<T>, b2: Matrix<T>) -> Self {
        SubstitutionComplex { complex, b1, b2 }
    }

    /// The identity substitution.
    pub fn identity(complex: Complex2D<T>) -> Self {
        let b1 = Matrix::identity(complex.edges());
        let b2 = Matrix::identity(complex.faces());
        SubstitutionComplex { complex, b1, b2 }
    }

    pub fn validate(&self) -> Vec<Violation> {
        let mut out = self.complex.validate();
        let (e, f) = (self.complex.edges(), self.complex.faces());
        let mut shapes_ok = true;
        for (name, m, n) in [("gamma1", &self.b1, e), ("gamma2", &self.b2, f)] {
            if m.shape() != (n, n) {
                shapes_ok = false;
                out.push(Violation::SubstitutionShape {
                    name,
                    expected: (n, n),
                    got: m.shape(),
                });
            }
        }
        if !shapes_ok {
            return out;
        }
        let a0 = self.complex.a0();
        let a1 = self.complex.a1();
        if let Some(column) = first_nonzero_column(&(&(&self.b1 * &a0) - &a0)) {
            out.push(Violation::VertexCommutation { column });
        }
        if let Some(column) = first_nonzero_column(&(&(&self.b2 * &a1) - &(&a1 * &self.b1))) {
            out.push(Violation::FaceCommutation { column });
        }
        out
    }
}

/// `H^0`, `H^1`, `H^2` of a complex with their charts, and the induced maps
/// when substitution data is present.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CohomologyReport<T> {
    pub h0: GroupChart<T>,
    pub h1: GroupChart<T>,
    pub h2: GroupChart<T>,
    pub maps: Option<InducedMaps<T>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedMaps<T> {
    pub g0: CanonicalEndo<T>,
    pub g1: CanonicalEndo<T>,
    pub g2: CanonicalEndo<T>,
}

impl<T: Scalar> CohomologyReport<T> {
    pub fn groups(&self) -> [&GroupChart<T>; 3] {
        [&self.h0, &self.h1, &self.h2]
    }
}

fn ensure_valid(violations: Vec<Violation>) -> Result<()> {
    if violations.is_empty() {
        Ok(())
    } else {
        Err(Error::InvalidComplex(
            violations.iter().map(ToString::to_string).collect(),
        ))
    }
}

/// Cohomology groups only: `H^0 = ker A0`, `H^1 = ker A1 / im A0`, `H^2 = coker A1`.
pub fn cohomology_groups<T: Scalar>(c: &Complex2D<T>) -> Result<CohomologyReport<T>> {
    ensure_valid(c.validate())?;
    let a0 = c.a0();
    let a1 = c.a1();
    Ok(CohomologyReport {
        h0: kernel_group(&a0),
        h1: kernel_mod_image(&a0, &a1)?,
        h2: cokernel(&a1),
        maps: None,
    })
}

/// Cohomology groups and the maps induced by the substitution.
pub fn cohomology<T: Scalar>(sc: &SubstitutionComplex<T>) -> Result<CohomologyReport<T>> {
    ensure_valid(sc.validate())?;
    let mut report = cohomology_groups(&sc.complex)?;
    let vertex_map = Matrix::identity(sc.complex.vertices());
    report.maps = Some(InducedMaps {
        g0: induced_endo(&report.h0, &vertex_map)?,
        g1: induced_endo(&report.h1, &sc.b1)?,
        g2: induced_endo(&report.h2, &sc.b2)?,
    });
    Ok(report)
}

/// Whether a nonnegative square matrix has an entrywise positive power, and
/// the smallest such exponent. Powers up to the Wielandt bound `(n-1)^2 + 1`
/// are examined on the zero pattern alone.
pub fn primitivity<T: Scalar>(b: &Matrix<T>) -> Result<(bool, Option<usize>)> {
    if !b.is_square() {
        return Err(Error::NotSquare(b.shape()));
    }
    let n = b.rows();
    for i in 0..n {
        for j in 0..n {
            if b[(i, j)].is_negative() {
                return Err(Error::NegativeEntry { row: i, col: j });
            }
        }
    }
    if n == 0 {
        return Ok((false, None));
    }
    let pattern: Vec<Vec<bool>> = (0..n)
        .map(|i| (0..n).map(|j| !b[(i, j)].is_zero()).collect())
        .collect();
    let mut power = pattern.clone();
    let bound = (n - 1) * (n - 1) + 1;
    for k in 1..=bound {
        if power.iter().all(|row| row.iter().all(|&x| x)) {
            return Ok((true, Some(k)));
        }
        power = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..n).any(|m| power[i][m] && pattern[m][j]))
                    .collect()
            })
            .collect();
    }
    Ok((false, None))
}
