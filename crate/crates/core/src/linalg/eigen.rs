use crate::error::{Error, Result};
use crate::linalg::{kernel_basis, Matrix};
use crate::scalar::{gcd_all, Scalar};

/// Characteristic polynomial `det(xI - a)` as coefficients `c[0] + c[1] x + ... + x^n`.
///
/// Faddeev-LeVerrier; every division by `k` is exact over the integers.
pub fn characteristic_polynomial<T: Scalar>(a: &Matrix<T>) -> Result<Vec<T>> {
    if !a.is_square() {
        return Err(Error::NotSquare(a.shape()));
    }
    let n = a.rows();
    let mut coeffs = vec![T::zero(); n + 1];
    coeffs[n] = T::one();
    let mut m = Matrix::zeros(n, n);
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{n-k+1} I
        m = &(a * &m) + &Matrix::identity(n).scale(&coeffs[n - k + 1]);
        let am = a * &m;
        let trace = (0..n).fold(T::zero(), |acc, i| acc + am[(i, i)].clone());
        coeffs[n - k] = -(trace / T::from(k as i64));
    }
    Ok(coeffs)
}

fn eval<T: Scalar>(coeffs: &[T], x: &T) -> T {
    coeffs
        .iter()
        .rev()
        .fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
}

/// Distinct integer roots of an integer polynomial, by testing divisors of
/// the lowest nonzero coefficient.
pub fn integer_roots<T: Scalar>(coeffs: &[T]) -> Vec<T> {
    let Some(low) = coeffs.iter().position(|c| !c.is_zero()) else {
        return Vec::new();
    };
    let mut roots = Vec::new();
    if low > 0 {
        roots.push(T::zero());
    }
    let reduced = &coeffs[low..];
    if reduced.len() <= 1 {
        return roots;
    }
    let c0 = reduced[0].abs();
    let mut d = T::one();
    while d.clone() * d.clone() <= c0 {
        if c0.is_multiple_of(&d) {
            let other = c0.clone() / d.clone();
            for cand in [d.clone(), other] {
                for r in [cand.clone(), -cand] {
                    if !roots.contains(&r) && eval(reduced, &r).is_zero() {
                        roots.push(r);
                    }
                }
            }
        }
        d = d + T::one();
    }
    roots
}

/// Scales a nonzero integer vector to gcd 1 with its first nonzero entry positive.
pub fn primitive_vector<T: Scalar>(v: &[T]) -> Vec<T> {
    let g = gcd_all(v);
    if g.is_zero() {
        return v.to_vec();
    }
    let sign = v
        .iter()
        .find(|x| !x.is_zero())
        .map_or(T::one(), |x| x.signum());
    v.iter()
        .map(|x| x.clone() / g.clone() * sign.clone())
        .collect()
}

/// A distinct integer eigenvalue with a basis of its integer eigenspace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerEigenspace<T> {
    pub value: T,
    /// Columns span the eigenspace; each column is primitive.
    pub basis: Matrix<T>,
}

impl<T: Scalar> IntegerEigenspace<T> {
    pub fn vector(&self) -> Vec<T> {
        self.basis.column(0)
    }
}

/// Every integer eigenvalue of `a` with its integer eigenspace.
pub fn integer_eigenspaces<T: Scalar>(a: &Matrix<T>) -> Result<Vec<IntegerEigenspace<T>>> {
    let poly = characteristic_polynomial(a)?;
    let n = a.rows();
    let mut out = Vec::new();
    for lambda in integer_roots(&poly) {
        let shifted = a - &Matrix::identity(n).scale(&lambda);
        let k = kernel_basis(&shifted);
        if k.cols() == 0 {
            continue;
        }
        let cols: Vec<Vec<T>> = (0..k.cols())
            .map(|j| primitive_vector(&k.column(j)))
            .collect();
        let mut basis = Matrix::zeros(n, cols.len());
        for (j, c) in cols.iter().enumerate() {
            for (i, v) in c.iter().enumerate() {
                basis[(i, j)] = v.clone();
            }
        }
        out.push(IntegerEigenspace {
            value: lambda,
            basis,
        });
    }
    Ok(out)
}

/// Integer eigenvalues of `a`, each paired with one primitive integer eigenvector.
pub fn integer_eigen<T: Scalar>(a: &Matrix<T>) -> Result<Vec<(T, Vec<T>)>> {
    Ok(integer_eigenspaces(a)?
        .into_iter()
        .map(|s| {
            let v = s.vector();
            (s.value, v)
        })
        .collect())
}
