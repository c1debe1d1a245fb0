//! Smith normal form with explicit unimodular transforms.
//!
//! We keep both each transform and its inverse while eliminating, since the
//! group charts downstream need `P^-1` and `Q^-1` and inverting afterwards
//! would cost another elimination.

use crate::linalg::Matrix;
use crate::scalar::Scalar;

/// `d = p * a * q` with `p`, `q` unimodular and `d` diagonal. The diagonal
/// is nonnegative, nonzero entries come first, and each nonzero entry
/// divides the next.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithDecomposition<T> {
    pub p: Matrix<T>,
    pub p_inv: Matrix<T>,
    pub d: Matrix<T>,
    pub q: Matrix<T>,
    pub q_inv: Matrix<T>,
    pub rank: usize,
}

impl<T: Scalar> SmithDecomposition<T> {
    /// The nonzero diagonal entries `d_1 | d_2 | ... | d_r`.
    pub fn invariant_factors(&self) -> Vec<T> {
        (0..self.rank).map(|i| self.d[(i, i)].clone()).collect()
    }

    /// Checks every structural property against the input matrix.
    pub fn verify(&self, a: &Matrix<T>) -> bool {
        let (b, n) = a.shape();
        if self.p.shape() != (b, b) || self.q.shape() != (n, n) || self.d.shape() != (b, n) {
            return false;
        }
        if &(&self.p * a) * &self.q != self.d {
            return false;
        }
        if &self.p * &self.p_inv != Matrix::identity(b)
            || &self.q * &self.q_inv != Matrix::identity(n)
        {
            return false;
        }
        if !self.p.is_unimodular() || !self.q.is_unimodular() {
            return false;
        }
        for i in 0..b {
            for j in 0..n {
                if i != j && !self.d[(i, j)].is_zero() {
                    return false;
                }
            }
        }
        let diag = self.d.diagonal_entries();
        let nonzero = diag.iter().take_while(|v| !v.is_zero()).count();
        if nonzero != self.rank || diag[nonzero..].iter().any(|v| !v.is_zero()) {
            return false;
        }
        diag[..nonzero].iter().all(|v| v.is_positive())
            && diag[..nonzero]
                .windows(2)
                .all(|w| w[1].is_multiple_of(&w[0]))
    }
}

/// A unimodular transform together with its inverse.
#[derive(Clone)]
pub(crate) struct Tracked<T> {
    pub m: Matrix<T>,
    pub inv: Matrix<T>,
}

impl<T: Scalar> Tracked<T> {
    pub fn identity(n: usize) -> Self {
        Tracked {
            m: Matrix::identity(n),
            inv: Matrix::identity(n),
        }
    }

    // Left transforms: m <- E m, inv <- inv E^-1.

    pub fn left_swap(&mut self, a: usize, b: usize) {
        self.m.swap_rows(a, b);
        self.inv.swap_cols(a, b);
    }

    pub fn left_add(&mut self, target: usize, src: usize, c: &T) {
        self.m.add_row_multiple(target, src, c);
        self.inv.add_col_multiple(src, target, &-c.clone());
    }

    pub fn left_negate(&mut self, i: usize) {
        self.m.negate_row(i);
        self.inv.negate_col(i);
    }

    // Right transforms: m <- m F, inv <- F^-1 inv.

    pub fn right_swap(&mut self, a: usize, b: usize) {
        self.m.swap_cols(a, b);
        self.inv.swap_rows(a, b);
    }

    pub fn right_add(&mut self, target: usize, src: usize, c: &T) {
        self.m.add_col_multiple(target, src, c);
        self.inv.add_row_multiple(src, target, &-c.clone());
    }

    pub fn right_negate(&mut self, j: usize) {
        self.m.negate_col(j);
        self.inv.negate_row(j);
    }
}

/// Nonzero entry of minimal absolute value in the trailing block `[t.., t..]`.
fn min_pivot<T: Scalar>(w: &Matrix<T>, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<((usize, usize), T)> = None;
    for i in t..w.rows() {
        for j in t..w.cols() {
            let v = &w[(i, j)];
            if v.is_zero() {
                continue;
            }
            let a = v.abs();
            if best.as_ref().is_none_or(|(_, b)| a < *b) {
                let unit = a.is_one();
                best = Some(((i, j), a));
                if unit {
                    return best.map(|(pos, _)| pos);
                }
            }
        }
    }
    best.map(|(pos, _)| pos)
}

pub fn smith_normal_form<T: Scalar>(a: &Matrix<T>) -> SmithDecomposition<T> {
    let (b, n) = a.shape();
    let mut w = a.clone();
    let mut left = Tracked::identity(b);
    let mut right = Tracked::identity(n);
    let mut rank = 0;

    for t in 0..b.min(n) {
        let Some(_) = min_pivot(&w, t) else { break };
        loop {
            let (pi, pj) = min_pivot(&w, t).expect("block is nonzero");
            w.swap_rows(t, pi);
            left.left_swap(t, pi);
            w.swap_cols(t, pj);
            right.right_swap(t, pj);

            let pivot = w[(t, t)].clone();
            let mut dirty = false;
            for i in t + 1..b {
                if w[(i, t)].is_zero() {
                    continue;
                }
                let q = w[(i, t)].div_floor(&pivot);
                let c = -q;
                w.add_row_multiple(i, t, &c);
                left.left_add(i, t, &c);
                dirty |= !w[(i, t)].is_zero();
            }
            for j in t + 1..n {
                if w[(t, j)].is_zero() {
                    continue;
                }
                let q = w[(t, j)].div_floor(&pivot);
                let c = -q;
                w.add_col_multiple(j, t, &c);
                right.right_add(j, t, &c);
                dirty |= !w[(t, j)].is_zero();
            }
            if dirty {
                continue;
            }
            // Pivot row and column are clear; enforce divisibility of the rest.
            let offender =
                (t + 1..b).find(|&i| (t + 1..n).any(|j| !w[(i, j)].is_multiple_of(&pivot)));
            match offender {
                Some(i) => {
                    let one = T::one();
                    w.add_row_multiple(t, i, &one);
                    left.left_add(t, i, &one);
                }
                None => break,
            }
        }
        if w[(t, t)].is_negative() {
            w.negate_row(t);
            left.left_negate(t);
        }
        rank += 1;
    }

    SmithDecomposition {
        p: left.m,
        p_inv: left.inv,
        d: w,
        q: right.m,
        q_inv: right.inv,
        rank,
    }
}

/// Rank of an integer matrix (over the rationals).
pub fn rank<T: Scalar>(a: &Matrix<T>) -> usize {
    smith_normal_form(a).rank
}
