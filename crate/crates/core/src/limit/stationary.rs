//! Stationary direct limits `lim(A, Z^n)` of `Z^n -A-> Z^n -A-> ...`.
//!
//! The pipeline shrinks a singular `A` to its action on the image lattice
//! until it is nonsingular, conjugates it to upper triangular form one
//! integer eigenvector at a time, and then reads off `Z[1/l_1] + ...` when the
//! triangular form is diagonalizable over the localized integers.

use std::cmp::Reverse;

use crate::error::{Error, Result};
use crate::groups::image_reduction;
use crate::limit::{ClassifiedLimit, DirectLimit};
use crate::linalg::{hermite_form, integer_eigenspaces, smith_normal_form, Matrix};
use crate::scalar::Scalar;

/// `[z]` at stage `stage >= 1` of the system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LimitElement<T> {
    pub stage: usize,
    pub vector: Vec<T>,
}

impl<T: Scalar> LimitElement<T> {
    pub fn new(stage: usize, vector: Vec<T>) -> Self {
        assert!(stage >= 1, "stages are numbered from 1");
        LimitElement { stage, vector }
    }
}

/// Whether two elements name the same point of `lim(a, Z^n)`, i.e.
/// `a^(k-i) z_i = a^(k-j) z_j` for some `k >= i, j`.
///
/// Kernels of powers of `a` stabilize after `n` steps, so `k <= max(i, j) + n`
/// decides the question.
pub fn same_limit_class<T: Scalar>(
    a: &Matrix<T>,
    e1: &LimitElement<T>,
    e2: &LimitElement<T>,
) -> Result<bool> {
    if !a.is_square() {
        return Err(Error::NotSquare(a.shape()));
    }
    let n = a.rows();
    for v in [&e1.vector, &e2.vector] {
        if v.len() != n {
            return Err(Error::Shape {
                op: "same_limit_class",
                left: a.shape(),
                right: (v.len(), 1),
            });
        }
    }
    let start = e1.stage.max(e2.stage);
    let advance = |e: &LimitElement<T>| -> Matrix<T> {
        let mut v = Matrix::column_vector(e.vector.clone());
        for _ in e.stage..start {
            v = a * &v;
        }
        v
    };
    let mut x = advance(e1);
    let mut y = advance(e2);
    for _ in 0..=n {
        if x == y {
            return Ok(true);
        }
        x = a * &x;
        y = a * &y;
    }
    Ok(x == y)
}

/// A unimodular change of basis with its inverse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Conjugator<T> {
    pub g: Matrix<T>,
    pub g_inv: Matrix<T>,
}

impl<T: Scalar> Conjugator<T> {
    /// `g^-1 a g`.
    pub fn apply(&self, a: &Matrix<T>) -> Matrix<T> {
        &(&self.g_inv * a) * &self.g
    }
}

/// Unimodular `G` with `G^-1 a G e_1 = lambda e_1`, built from an integer
/// eigenvector `x` with some entry `+-1`.
///
/// When `x_1 = 1` this is `G = [x, e_2, ..., e_n]`. Otherwise `x` is
/// rescaled by the sign of its first unit entry and that coordinate is
/// swapped into first position, so `G = S [Sx, e_2, ..., e_n]` for the
/// transposition `S`.
pub fn eigen_extend<T: Scalar>(a: &Matrix<T>, lambda: &T, x: &[T]) -> Result<Conjugator<T>> {
    if !a.is_square() {
        return Err(Error::NotSquare(a.shape()));
    }
    let n = a.rows();
    if x.len() != n {
        return Err(Error::Shape {
            op: "eigen_extend",
            left: a.shape(),
            right: (x.len(), 1),
        });
    }
    let ax = a * &Matrix::column_vector(x.to_vec());
    let is_eigen = ax
        .column(0)
        .iter()
        .zip(x)
        .all(|(l, r)| *l == r.clone() * lambda.clone());
    if !is_eigen || x.iter().all(|v| v.is_zero()) {
        return Err(Error::NotEigenvector {
            lambda: lambda.to_string(),
        });
    }
    let p = x
        .iter()
        .position(|v| v.abs().is_one())
        .ok_or(Error::NoUnitEntry)?;
    let sign = x[p].clone();
    let mut y: Vec<T> = x.iter().map(|v| v.clone() * sign.clone()).collect();
    y.swap(0, p);

    let mut g_prime = Matrix::identity(n);
    let mut g_prime_inv = Matrix::identity(n);
    for (i, v) in y.iter().enumerate() {
        g_prime[(i, 0)] = v.clone();
        // [2 e_1 - y, e_2, ..., e_n]
        g_prime_inv[(i, 0)] = if i == 0 { T::one() } else { -v.clone() };
    }
    let mut g = g_prime;
    g.swap_rows(0, p);
    let mut g_inv = g_prime_inv;
    g_inv.swap_cols(0, p);
    Ok(Conjugator { g, g_inv })
}

/// `V_k = U^k D^-k` if it is an integer matrix, where `D = diag(U)`.
pub fn scaled_power<T: Scalar>(u: &Matrix<T>, k: u32) -> Result<Option<Matrix<T>>> {
    let mut v = u.pow(k)?;
    let diag = u.diagonal_entries();
    for (j, l) in diag.iter().enumerate() {
        let lk = (0..k).fold(T::one(), |acc, _| acc * l.clone());
        for i in 0..v.rows() {
            match v[(i, j)].exact_div(&lk) {
                Some(q) => v[(i, j)] = q,
                None => return Ok(None),
            }
        }
    }
    Ok(Some(v))
}

/// Upper bound on the lattice-chain length in [`all_scaled_powers_integral`];
/// the chain is provably finite, this only guards pathological inputs.
const CHAIN_CAP: usize = 4096;

/// Decides whether `U^k D^-k` is integral for every `k >= 1`.
///
/// Column `j` of `V_k` is `v_k = (U / l_j) v_{k-1}` with `v_0 = e_j`. If all
/// of them are integral they generate an ascending chain of sublattices of
/// `Z^n`, which must stall; once `v_{k+1}` lies in the span of
/// `v_0..v_k` that span is invariant under `U / l_j`, certifying every
/// later column too. A non-integral `v_k` refutes directly.
fn all_scaled_powers_integral<T: Scalar>(u: &Matrix<T>) -> Option<bool> {
    let n = u.rows();
    for j in 0..n {
        let lambda = u[(j, j)].clone();
        let mut e = vec![T::zero(); n];
        e[j] = T::one();
        let mut span = Matrix::column_vector(e.clone());
        let mut v = Matrix::column_vector(e);
        let mut settled = false;
        for _ in 0..CHAIN_CAP {
            let w = u * &v;
            let mut next = Vec::with_capacity(n);
            for x in w.column(0) {
                match x.exact_div(&lambda) {
                    Some(q) => next.push(q),
                    None => return Some(false),
                }
            }
            if hermite_form(&span).contains(&next) {
                settled = true;
                break;
            }
            v = Matrix::column_vector(next);
            span = span.hstack(&v).expect("same height");
        }
        if !settled {
            return None;
        }
    }
    Some(true)
}

/// `lim(U, Z^n)` for an upper triangular `U` with nonzero diagonal.
///
/// Classified as `Z[1/l_1] + ... + Z[1/l_n]` when `l_2 = ... = l_n = +-1`, or
/// more generally whenever `U^k D^-k` is integral for all `k`; otherwise the
/// matrix is returned as a presentation.
pub fn triangular_limit<T: Scalar>(u: &Matrix<T>) -> Result<DirectLimit<T>> {
    if !u.is_square() {
        return Err(Error::NotSquare(u.shape()));
    }
    if let Some((row, col)) = u.first_below_diagonal() {
        return Err(Error::NotUpperTriangular { row, col });
    }
    let diag = u.diagonal_entries();
    if let Some(i) = diag.iter().position(|v| v.is_zero()) {
        return Err(Error::ZeroDiagonal(i));
    }
    let tail_units = diag.iter().skip(1).all(|v| v.abs().is_one());
    if tail_units || all_scaled_powers_integral(u) == Some(true) {
        return Ok(ClassifiedLimit::new(&diag, 0, &[]).into());
    }
    Ok(DirectLimit::Presented { reduced: u.clone() })
}

/// `A` conjugated to upper triangular form, `u = g^-1 A g`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triangularization<T> {
    pub upper: Matrix<T>,
    pub conjugator: Conjugator<T>,
}

/// Unimodular `G` whose first column is the primitive vector `x`, read off
/// the Smith form `P x Q = e_1` of `x` as a column: `G = P^-1` up to the
/// sign `Q`.
pub fn unimodular_completion<T: Scalar>(x: &[T]) -> Result<Conjugator<T>> {
    let s = smith_normal_form(&Matrix::column_vector(x.to_vec()));
    if s.rank != 1 || !s.d[(0, 0)].is_one() {
        return Err(Error::NotPrimitive(
            x.iter().map(|v| v.to_string()).collect(),
        ));
    }
    let q = s.q[(0, 0)].clone();
    let mut g = s.p_inv;
    let mut g_inv = s.p;
    for i in 0..g.rows() {
        g[(i, 0)] = g[(i, 0)].clone() * q.clone();
        g_inv[(0, i)] = g_inv[(0, i)].clone() * q.clone();
    }
    Ok(Conjugator { g, g_inv })
}

/// Repeatedly splits off an integer eigenvector, working on the lower right
/// block, largest `|lambda|` first, then shrinks the entries above the
/// diagonal. `None` if some block has no integer eigenvalue.
///
/// An eigenvector with a unit entry is completed by [`eigen_extend`]; any
/// other primitive eigenvector by [`unimodular_completion`].
pub fn triangularize<T: Scalar>(a: &Matrix<T>) -> Result<Option<Triangularization<T>>> {
    if !a.is_square() {
        return Err(Error::NotSquare(a.shape()));
    }
    let n = a.rows();
    let mut upper = a.clone();
    let mut g = Matrix::identity(n);
    let mut g_inv = Matrix::identity(n);
    for t in 0..n {
        let block = upper.submatrix(t..n, t..n);
        let mut spaces = integer_eigenspaces(&block)?;
        spaces.sort_by_key(|s| (Reverse(s.value.abs()), Reverse(s.value.clone())));
        let Some(space) = spaces.first() else {
            return Ok(None);
        };
        let columns: Vec<Vec<T>> = (0..space.basis.cols())
            .map(|j| space.basis.column(j))
            .collect();
        let step = match columns.iter().find(|x| x.iter().any(|v| v.abs().is_one())) {
            Some(x) => eigen_extend(&block, &space.value, x)?,
            None => unimodular_completion(&columns[0])?,
        };
        let lift = Matrix::identity(t).block_diag(&step.g);
        let lift_inv = Matrix::identity(t).block_diag(&step.g_inv);
        upper = &(&lift_inv * &upper) * &lift;
        g = &g * &lift;
        g_inv = &lift_inv * &g_inv;
    }
    debug_assert!(upper.is_upper_triangular());
    reduce_above_diagonal(&mut upper, &mut g, &mut g_inv);
    Ok(Some(Triangularization {
        upper,
        conjugator: Conjugator { g, g_inv },
    }))
}

/// Conjugating by `I + t E_ij` (`i < j`) moves `u_ij` by `t (u_ii - u_jj)`
/// and otherwise only touches row `i` right of `j` and column `j` above `i`.
/// Sweeping columns left to right and rows bottom up therefore reduces every
/// entry modulo its diagonal difference; entries divisible by it vanish.
fn reduce_above_diagonal<T: Scalar>(u: &mut Matrix<T>, g: &mut Matrix<T>, g_inv: &mut Matrix<T>) {
    let n = u.rows();
    for j in 1..n {
        for i in (0..j).rev() {
            let delta = u[(i, i)].clone() - u[(j, j)].clone();
            if delta.is_zero() {
                continue;
            }
            let t = -u[(i, j)].div_floor(&delta);
            if t.is_zero() {
                continue;
            }
            u.add_col_multiple(j, i, &t);
            u.add_row_multiple(i, j, &-t.clone());
            g.add_col_multiple(j, i, &t);
            g_inv.add_row_multiple(i, j, &-t);
        }
    }
}

/// Every intermediate of [`stationary_limit`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StationaryAnalysis<T> {
    /// Sizes of the successive image reductions, starting from the input size.
    pub sizes: Vec<usize>,
    /// The nonsingular matrix left after image reductions.
    pub reduced: Matrix<T>,
    pub triangular: Option<Triangularization<T>>,
    pub limit: DirectLimit<T>,
}

pub fn analyze_stationary<T: Scalar>(a: &Matrix<T>) -> Result<StationaryAnalysis<T>> {
    if !a.is_square() {
        return Err(Error::NotSquare(a.shape()));
    }
    let mut m = a.clone();
    let mut sizes = vec![m.rows()];
    while m.rows() > 0 && m.det()?.is_zero() {
        let red = image_reduction(&m)?;
        m = red.restrict(&m)?;
        sizes.push(m.rows());
    }
    if m.rows() == 0 {
        return Ok(StationaryAnalysis {
            sizes,
            reduced: m,
            triangular: None,
            limit: ClassifiedLimit::trivial().into(),
        });
    }
    let triangular = triangularize(&m)?;
    let limit = match &triangular {
        Some(t) => match triangular_limit(&t.upper)? {
            c @ DirectLimit::Classified(_) => c,
            DirectLimit::Presented { .. } => DirectLimit::Presented { reduced: m.clone() },
        },
        None => DirectLimit::Presented { reduced: m.clone() },
    };
    Ok(StationaryAnalysis {
        sizes,
        reduced: m,
        triangular,
        limit,
    })
}

/// `lim(a, Z^n)`.
pub fn stationary_limit<T: Scalar>(a: &Matrix<T>) -> Result<DirectLimit<T>> {
    Ok(analyze_stationary(a)?.limit)
}
