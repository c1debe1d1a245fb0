//! Cokernels and subquotients `ker(d1) / im(d0)` with explicit coordinates.
//!
//! A chart carries the full-dimension isomorphism (one coordinate per SNF
//! diagonal slot, trivial `Z/1` slots included) as well as the canonical
//! restriction with the trivial slots deleted. Induced maps are conjugated
//! in full coordinates and only then restricted.

use crate::error::{Error, Result};
use crate::groups::AbelianGroup;
use crate::linalg::{kernel_basis, smith_normal_form, Matrix};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupChart<T> {
    pub group: AbelianGroup<T>,
    /// `c x ambient_dim`: ambient representative to canonical coordinates.
    pub to_canonical: Matrix<T>,
    /// `ambient_dim x c`: canonical coordinates to an ambient representative.
    pub from_canonical: Matrix<T>,
    pub ambient_dim: usize,
    /// Full-dimension chart, trivial slots included.
    pub full_to: Matrix<T>,
    pub full_from: Matrix<T>,
    /// Cyclic order of every full slot (0 for free slots, 1 for trivial ones).
    pub full_factors: Vec<T>,
    /// Indices of the full slots that survive into canonical coordinates.
    pub kept: Vec<usize>,
    /// Columns generate the relation lattice in the ambient space.
    pub relations: Matrix<T>,
    /// When present, the group lives on `ker(constraint)`.
    pub constraint: Option<Matrix<T>>,
}

impl<T: Scalar> GroupChart<T> {
    fn assemble(
        full_to: Matrix<T>,
        full_from: Matrix<T>,
        full_factors: Vec<T>,
        relations: Matrix<T>,
        constraint: Option<Matrix<T>>,
    ) -> Self {
        let kept: Vec<usize> = (0..full_factors.len())
            .filter(|&i| !full_factors[i].is_one())
            .collect();
        let kept_factors: Vec<T> = kept.iter().map(|&i| full_factors[i].clone()).collect();
        let free = kept_factors.iter().filter(|v| v.is_zero()).count();
        let group = AbelianGroup::new(&kept_factors, 0);
        debug_assert_eq!(group.free_rank(), free);
        debug_assert_eq!(
            group.factors(),
            kept_factors,
            "slots must already be canonical"
        );
        GroupChart {
            group,
            to_canonical: full_to.select_rows(&kept),
            from_canonical: full_from.select_cols(&kept),
            ambient_dim: full_to.cols(),
            full_to,
            full_from,
            full_factors,
            kept,
            relations,
            constraint,
        }
    }

    /// Canonical coordinate orders (torsion then zeros for free slots).
    pub fn factors(&self) -> Vec<T> {
        self.group.factors()
    }

    /// Brings canonical coordinates into normal form: torsion slots reduced into `[0, n)`.
    pub fn reduce(&self, coords: &[T]) -> Vec<T> {
        coords
            .iter()
            .zip(self.factors())
            .map(|(x, n)| {
                if n.is_zero() {
                    x.clone()
                } else {
                    x.mod_floor(&n)
                }
            })
            .collect()
    }

    /// Canonical coordinates of an ambient representative.
    pub fn coordinates(&self, x: &[T]) -> Vec<T> {
        let y = &self.to_canonical * &Matrix::column_vector(x.to_vec());
        self.reduce(&y.column(0))
    }

    /// An ambient representative of the class with these canonical coordinates.
    pub fn representative(&self, coords: &[T]) -> Vec<T> {
        (&self.from_canonical * &Matrix::column_vector(coords.to_vec())).column(0)
    }

    /// Whether an ambient vector (in the group's domain) represents zero.
    pub fn is_zero_class(&self, x: &[T]) -> bool {
        self.coordinates(x).iter().all(|v| v.is_zero())
    }

    /// Whether `x` lies in the domain of the group (all of `Z^n` for cokernels).
    pub fn in_domain(&self, x: &[T]) -> bool {
        match &self.constraint {
            None => true,
            Some(c) => (c * &Matrix::column_vector(x.to_vec())).is_zero(),
        }
    }
}

/// `Z^b / a Z^a` for a `b x a` matrix, charted by `x -> P x` and `y -> P^-1 y`
/// where `D = P a Q` is the Smith form.
pub fn cokernel<T: Scalar>(a: &Matrix<T>) -> GroupChart<T> {
    let s = smith_normal_form(a);
    let b = a.rows();
    let factors: Vec<T> = (0..b)
        .map(|i| {
            if i < s.rank {
                s.d[(i, i)].clone()
            } else {
                T::zero()
            }
        })
        .collect();
    GroupChart::assemble(s.p, s.p_inv, factors, a.clone(), None)
}

/// `ker(d1) / im(d0)` following the reduction through the Smith form of `d1`:
/// with `D = P d1 Q` of rank `r` and `J = [e_{r+1} ... e_E]`, the group is
/// the cokernel of `J^T Q^-1 d0`, charted by `x -> P~ J^T Q^-1 x` and
/// `y -> Q J P~^-1 y`.
pub fn kernel_mod_image<T: Scalar>(d0: &Matrix<T>, d1: &Matrix<T>) -> Result<GroupChart<T>> {
    let product = d1.try_mul(d0)?;
    if let Some(column) =
        (0..product.cols()).find(|&j| product.column(j).iter().any(|v| !v.is_zero()))
    {
        let shown: Vec<String> = product
            .column(column)
            .iter()
            .map(|v| v.to_string())
            .collect();
        return Err(Error::CochainCondition {
            column,
            product: format!("[{}]", shown.join(", ")),
        });
    }
    let e = d1.cols();
    let s = smith_normal_form(d1);
    let r = s.rank;
    let keep: Vec<usize> = (r..e).collect();
    // J^T Q^-1 and Q J
    let jt_qinv = s.q_inv.select_rows(&keep);
    let q_j = s.q.select_cols(&keep);
    let reduced = &jt_qinv * d0;
    let inner = cokernel(&reduced);
    let full_to = &inner.full_to * &jt_qinv;
    let full_from = &q_j * &inner.full_from;
    Ok(GroupChart::assemble(
        full_to,
        full_from,
        inner.full_factors,
        d0.clone(),
        Some(d1.clone()),
    ))
}

/// `ker(a)` as a free group, charted by an integer kernel basis `K` and a
/// left inverse `L` with `L K = I`.
pub fn kernel_group<T: Scalar>(a: &Matrix<T>) -> GroupChart<T> {
    let k = kernel_basis(a);
    let s = smith_normal_form(&k);
    // P K Q = [I; 0] since the kernel is saturated, so L = Q [I 0] P.
    let rows: Vec<usize> = (0..k.cols()).collect();
    let left = &s.q * &s.p.select_rows(&rows);
    debug_assert_eq!(&left * &k, Matrix::identity(k.cols()));
    GroupChart::assemble(
        left,
        k.clone(),
        vec![T::zero(); k.cols()],
        Matrix::zeros(a.cols(), 0),
        Some(a.clone()),
    )
}
