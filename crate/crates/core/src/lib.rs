//! Exact integer cohomology of finite 2-dimensional CW-complexes, stationary
//! direct limits of finitely generated abelian groups, and the resulting
//! cohomology and K-theory of substitution tiling spaces.
//!
//! Every algorithm is generic over [`Scalar`], a signed Euclidean integer
//! type. The aliases at the crate root fix the scalar to arbitrary-precision
//! [`BigInt`], which is what the command-line tool and the tiling pipeline
//! use; intermediate Smith form entries outgrow machine words quickly.
//!
//! ```
//! use tilecohom::{stationary_limit, IntMatrix};
//!
//! let a = IntMatrix::from_i64(2, 2, &[2, 1, 0, 1]);
//! assert_eq!(stationary_limit(&a).unwrap().to_string(), "Z[1/2] ⊕ Z");
//! ```

pub mod complex;
pub mod error;
pub mod groups;
pub mod hull;
pub mod limit;
pub mod linalg;
pub mod scalar;

pub use complex::{
    cohomology, cohomology_groups, primitivity, CellLabels, Complex2D, InducedMaps, Violation,
};
pub use error::{Error, Result};
pub use groups::{
    cokernel, image_reduction, induced_endo, kernel_group, kernel_mod_image, AbelianGroup,
};
pub use hull::{hull_cohomology, k_theory, HullReport};
pub use limit::{
    eigen_extend, same_limit_class, stationary_limit, torsion_killing_limit, triangular_limit,
    ClassifiedLimit, DirectLimit, LimitElement,
};
pub use linalg::{hermite_normal_form, integer_eigen, kernel_basis, smith_normal_form, Matrix};
pub use num_bigint::BigInt;
pub use scalar::Scalar;

/// Arbitrary-precision integer matrix.
pub type IntMatrix = Matrix<BigInt>;
/// Smith decomposition over arbitrary-precision integers.
pub type SmithDecomposition = linalg::SmithDecomposition<BigInt>;
pub type Group = AbelianGroup<BigInt>;
pub type GroupChart = groups::GroupChart<BigInt>;
pub type CanonicalEndo = groups::CanonicalEndo<BigInt>;
pub type DirectLimitResult = DirectLimit<BigInt>;
pub type Complex = Complex2D<BigInt>;
pub type SubstitutionComplex = complex::SubstitutionComplex<BigInt>;
pub type CohomologyReport = complex::CohomologyReport<BigInt>;
pub type HullCohomology = HullReport<BigInt>;
