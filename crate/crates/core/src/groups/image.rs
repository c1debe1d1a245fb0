use crate::error::{Error, Result};
use crate::linalg::{smith_normal_form, Matrix};
use crate::scalar::Scalar;

/// Coordinates on the image lattice `a Z^n`, which is free of rank `r`.
///
/// With `D = P a Q` and `D' = diag(l_1..l_r)` the nonzero block, the backward
/// map is `bwd = P^-1 i D'` (`n x r`, integral) and the forward map is
/// `fwd = D'^-1 i^T P`. The forward map has rational entries in general, so it
/// is stored as the integral numerator `i^T P` plus the row divisors `l_i`;
/// it is integral on `a Z^n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ImageReduction<T> {
    pub rank: usize,
    pub fwd_numerator: Matrix<T>,
    pub fwd_divisors: Vec<T>,
    pub bwd: Matrix<T>,
}

impl<T: Scalar> ImageReduction<T> {
    /// `fwd * m` for a matrix whose columns lie in the image lattice.
    pub fn forward(&self, m: &Matrix<T>) -> Result<Matrix<T>> {
        let mut out = self.fwd_numerator.try_mul(m)?;
        for (i, l) in self.fwd_divisors.iter().enumerate() {
            for j in 0..out.cols() {
                out[(i, j)] = out[(i, j)]
                    .exact_div(l)
                    .ok_or_else(|| Error::DoesNotDescend {
                        witness: m.column(j).iter().map(|v| v.to_string()).collect(),
                    })?;
            }
        }
        Ok(out)
    }

    /// The restriction of `a` to its image, in image coordinates:
    /// `fwd * a * bwd`, an `r x r` integer matrix.
    pub fn restrict(&self, a: &Matrix<T>) -> Result<Matrix<T>> {
        self.forward(&a.try_mul(&self.bwd)?)
    }
}

/// `a Z^n ~= Z^r` for a square `a`, with explicit isomorphisms satisfying
/// `bwd * fwd * a = a` and `fwd * bwd = I_r`.
pub fn image_reduction<T: Scalar>(a: &Matrix<T>) -> Result<ImageReduction<T>> {
    if !a.is_square() {
        return Err(Error::NotSquare(a.shape()));
    }
    let s = smith_normal_form(a);
    let r = s.rank;
    let kept: Vec<usize> = (0..r).collect();
    let divisors = s.invariant_factors();
    let bwd = &s.p_inv.select_cols(&kept) * &Matrix::diagonal(&divisors);
    Ok(ImageReduction {
        rank: r,
        fwd_numerator: s.p.select_rows(&kept),
        fwd_divisors: divisors,
        bwd,
    })
}
