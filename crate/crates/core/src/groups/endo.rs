use crate::error::{Error, Result};
use crate::groups::{AbelianGroup, GroupChart};
use crate::linalg::Matrix;
use crate::scalar::Scalar;

/// An endomorphism of `group` written in its canonical coordinates. Torsion
/// rows are kept reduced modulo their factor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalEndo<T> {
    pub group: AbelianGroup<T>,
    pub matrix: Matrix<T>,
}

impl<T: Scalar> CanonicalEndo<T> {
    /// Builds an endomorphism, reducing torsion rows. Fails if the matrix does
    /// not define a homomorphism of the group.
    pub fn new(group: AbelianGroup<T>, matrix: Matrix<T>) -> Result<Self> {
        let n = group.rank();
        if matrix.shape() != (n, n) {
            return Err(Error::Shape {
                op: "endo",
                left: (n, n),
                right: matrix.shape(),
            });
        }
        let endo = CanonicalEndo {
            matrix: reduce_rows(&group, matrix),
            group,
        };
        if let Some(j) = endo.ill_defined_column() {
            let col = endo.matrix.column(j);
            let n_j = endo.group.factors()[j].clone();
            return Err(Error::DoesNotDescend {
                witness: col
                    .iter()
                    .map(|v| (v.clone() * n_j.clone()).to_string())
                    .collect(),
            });
        }
        Ok(endo)
    }

    pub fn identity(group: AbelianGroup<T>) -> Self {
        let n = group.rank();
        CanonicalEndo {
            group,
            matrix: Matrix::identity(n),
        }
    }

    pub fn zero(group: AbelianGroup<T>) -> Self {
        let n = group.rank();
        CanonicalEndo {
            group,
            matrix: Matrix::zeros(n, n),
        }
    }

    /// First torsion column `j` for which `matrix * (n_j e_j)` is not a relation.
    fn ill_defined_column(&self) -> Option<usize> {
        let factors = self.group.factors();
        (0..self.group.torsion().len()).find(|&j| {
            let n_j = &factors[j];
            (0..factors.len())
                .any(|i| !(self.matrix[(i, j)].clone() * n_j.clone()).is_zero_mod(&factors[i]))
        })
    }

    pub fn is_well_defined(&self) -> bool {
        self.ill_defined_column().is_none()
    }

    /// `self` after `other`.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.group, other.group, "compose: different groups");
        CanonicalEndo {
            group: self.group.clone(),
            matrix: reduce_rows(&self.group, &self.matrix * &other.matrix),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(CanonicalEndo::identity(self.group.clone()), |acc, _| {
            self.compose(&acc)
        })
    }

    /// Whether every torsion generator maps to zero.
    pub fn kills_torsion(&self) -> bool {
        let t = self.group.torsion().len();
        (0..t).all(|j| (0..self.group.rank()).all(|i| self.matrix[(i, j)].is_zero()))
    }

    pub fn is_identity(&self) -> bool {
        self.matrix == reduce_rows(&self.group, Matrix::identity(self.group.rank()))
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    /// The block acting on the free coordinates.
    pub fn free_block(&self) -> Matrix<T> {
        let t = self.group.torsion().len();
        let n = self.group.rank();
        self.matrix.submatrix(t..n, t..n)
    }
}

fn reduce_rows<T: Scalar>(group: &AbelianGroup<T>, mut m: Matrix<T>) -> Matrix<T> {
    for (i, n) in group.torsion().iter().enumerate() {
        for j in 0..m.cols() {
            m[(i, j)] = m[(i, j)].mod_floor(n);
        }
    }
    m
}

/// The endomorphism `raw` of the ambient lattice, pushed through the chart:
/// `to_canonical * raw * from_canonical`, computed as the full conjugate and
/// then restricted to the nontrivial slots.
///
/// Fails with a witness vector if `raw` does not preserve the domain or the
/// relation lattice.
pub fn induced_endo<T: Scalar>(chart: &GroupChart<T>, raw: &Matrix<T>) -> Result<CanonicalEndo<T>> {
    let n = chart.ambient_dim;
    if raw.shape() != (n, n) {
        return Err(Error::Shape {
            op: "induced_endo",
            left: (n, n),
            right: raw.shape(),
        });
    }
    let witness = |v: Vec<T>| Error::DoesNotDescend {
        witness: v.iter().map(|x| x.to_string()).collect(),
    };
    if let Some(c) = &chart.constraint {
        let image = raw * &chart.full_from;
        let check = c * &image;
        if let Some(j) = (0..check.cols()).find(|&j| check.column(j).iter().any(|v| !v.is_zero())) {
            return Err(witness(chart.full_from.column(j)));
        }
    }
    let moved = &(&chart.full_to * raw) * &chart.relations;
    for j in 0..moved.cols() {
        let bad = (0..moved.rows()).any(|i| !moved[(i, j)].is_zero_mod(&chart.full_factors[i]));
        if bad {
            return Err(witness(chart.relations.column(j)));
        }
    }
    let full = &(&chart.full_to * raw) * &chart.full_from;
    let restricted = full.select_rows(&chart.kept).select_cols(&chart.kept);
    CanonicalEndo::new(chart.group.clone(), restricted)
}
