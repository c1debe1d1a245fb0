//! Column-style Hermite normal form, and the lattice routines built on it
//! (integer kernels and exact solving over the integers).

use crate::linalg::smith::Tracked;
use crate::linalg::Matrix;
use crate::scalar::Scalar;

/// `h = a * u` with `u` unimodular. `h` is a lower staircase: the pivot of
/// column `k` sits at row `pivots[k]`, rows strictly increase with `k`, pivots
/// are positive, entries to the left of a pivot lie in `[0, pivot)`, and
/// columns `pivots.len()..` are zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HermiteForm<T> {
    pub h: Matrix<T>,
    pub u: Matrix<T>,
    pub u_inv: Matrix<T>,
    pub pivots: Vec<usize>,
}

impl<T: Scalar> HermiteForm<T> {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

pub fn hermite_form<T: Scalar>(a: &Matrix<T>) -> HermiteForm<T> {
    let (rows, cols) = a.shape();
    let mut h = a.clone();
    let mut u = Tracked::identity(cols);
    let mut pivots = Vec::new();
    let mut pc = 0;

    for i in 0..rows {
        if pc == cols {
            break;
        }
        loop {
            let best = (pc..cols)
                .filter(|&j| !h[(i, j)].is_zero())
                .min_by(|&x, &y| h[(i, x)].abs().cmp(&h[(i, y)].abs()));
            let Some(j) = best else { break };
            h.swap_cols(pc, j);
            u.right_swap(pc, j);
            let pivot = h[(i, pc)].clone();
            let mut clean = true;
            for j in pc + 1..cols {
                if h[(i, j)].is_zero() {
                    continue;
                }
                let c = -h[(i, j)].div_floor(&pivot);
                h.add_col_multiple(j, pc, &c);
                u.right_add(j, pc, &c);
                clean &= h[(i, j)].is_zero();
            }
            if clean {
                break;
            }
        }
        if h[(i, pc)].is_zero() {
            continue;
        }
        if h[(i, pc)].is_negative() {
            h.negate_col(pc);
            u.right_negate(pc);
        }
        let pivot = h[(i, pc)].clone();
        for j in 0..pc {
            let c = -h[(i, j)].div_floor(&pivot);
            h.add_col_multiple(j, pc, &c);
            u.right_add(j, pc, &c);
        }
        pivots.push(i);
        pc += 1;
    }

    HermiteForm {
        h,
        u: u.m,
        u_inv: u.inv,
        pivots,
    }
}

/// `(h, u)` with `h = a * u` in column Hermite form.
pub fn hermite_normal_form<T: Scalar>(a: &Matrix<T>) -> (Matrix<T>, Matrix<T>) {
    let f = hermite_form(a);
    (f.h, f.u)
}

/// Columns form a basis of the integer kernel `{x : a x = 0}`.
pub fn kernel_basis<T: Scalar>(a: &Matrix<T>) -> Matrix<T> {
    let f = hermite_form(a);
    let r = f.rank();
    f.u.submatrix(0..a.cols(), r..a.cols())
}

impl<T: Scalar> HermiteForm<T> {
    /// Integer solution of `a x = v`, if one exists.
    pub fn solve(&self, v: &[T]) -> Option<Vec<T>> {
        let (rows, cols) = self.h.shape();
        if v.len() != rows {
            return None;
        }
        let mut y = vec![T::zero(); cols];
        let mut k = 0;
        for (i, vi) in v.iter().enumerate() {
            let mut residual = vi.clone();
            for (j, yj) in y.iter().enumerate().take(k) {
                residual = residual - self.h[(i, j)].clone() * yj.clone();
            }
            if k < self.pivots.len() && self.pivots[k] == i {
                y[k] = residual.exact_div(&self.h[(i, k)])?;
                k += 1;
            } else if !residual.is_zero() {
                return None;
            }
        }
        let x = &self.u * &Matrix::column_vector(y);
        Some(x.column(0))
    }

    /// Whether `v` lies in the column lattice of the input.
    pub fn contains(&self, v: &[T]) -> bool {
        self.solve(v).is_some()
    }
}

/// Integer solution of `a x = v`, if one exists.
pub fn solve_integer<T: Scalar>(a: &Matrix<T>, v: &[T]) -> Option<Vec<T>> {
    hermite_form(a).solve(v)
}
