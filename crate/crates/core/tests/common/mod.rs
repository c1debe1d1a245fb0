#![allow(dead_code)]

use tilecohom::{BigInt, IntMatrix, Matrix};
use tilecohom_testkit::Mat;

pub fn big(rows: usize, cols: usize, a: &Mat) -> IntMatrix {
    let flat: Vec<i64> = a.iter().flatten().copied().collect();
    IntMatrix::from_i64(rows, cols, &flat)
}

pub fn small(m: &IntMatrix) -> Mat {
    m.to_rows()
        .iter()
        .map(|r| r.iter().map(|x| i64::try_from(x).expect("fits")).collect())
        .collect()
}

pub fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

pub fn i64_matrix(rows: usize, cols: usize, a: &Mat) -> Matrix<i64> {
    let flat: Vec<i64> = a.iter().flatten().copied().collect();
    Matrix::from_i64(rows, cols, &flat)
}

/// Strategy for a small matrix with independently drawn dimensions.
pub fn matrix_strategy(
    max_rows: usize,
    max_cols: usize,
    bound: i64,
) -> impl proptest::strategy::Strategy<Value = (usize, usize, Mat)> {
    use proptest::prelude::*;
    (0..=max_rows, 0..=max_cols).prop_flat_map(move |(r, c)| {
        prop::collection::vec(prop::collection::vec(-bound..=bound, c), r)
            .prop_map(move |m| (r, c, m))
    })
}

pub fn square_strategy(
    max_n: usize,
    bound: i64,
) -> impl proptest::strategy::Strategy<Value = (usize, Mat)> {
    use proptest::prelude::*;
    (1..=max_n).prop_flat_map(move |n| {
        prop::collection::vec(prop::collection::vec(-bound..=bound, n), n).prop_map(move |m| (n, m))
    })
}
