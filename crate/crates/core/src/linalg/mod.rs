//! Exact integer matrix arithmetic and normal forms.

mod eigen;
mod hermite;
mod matrix;
mod smith;

pub use eigen::{
    characteristic_polynomial, integer_eigen, integer_eigenspaces, integer_roots, primitive_vector,
    IntegerEigenspace,
};
pub use hermite::{hermite_form, hermite_normal_form, kernel_basis, solve_integer, HermiteForm};
pub use matrix::{Matrix, ParseMatrixError};
pub use smith::{rank, smith_normal_form, SmithDecomposition};
