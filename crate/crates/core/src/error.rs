use thiserror::Error;

/// Shape of a matrix as `(rows, cols)`.
pub type Shape = (usize, usize);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("shape mismatch in {op}: {left:?} vs {right:?}")]
    Shape {
        op: &'static str,
        left: Shape,
        right: Shape,
    },

    #[error("expected a square matrix, got {0:?}")]
    NotSquare(Shape),

    #[error("row {row} has {got} entries, expected {expected}")]
    RaggedRows {
        row: usize,
        expected: usize,
        got: usize,
    },

    #[error("cochain condition violated: d1*d0 is nonzero in column {column} ({product})")]
    CochainCondition { column: usize, product: String },

    #[error("vector is not an eigenvector for eigenvalue {lambda}")]
    NotEigenvector { lambda: String },

    #[error("no unit entry in eigenvector")]
    NoUnitEntry,

    #[error("vector [{}] is not primitive", .0.join(", "))]
    NotPrimitive(Vec<String>),

    #[error("not upper triangular: entry ({row}, {col}) is nonzero")]
    NotUpperTriangular { row: usize, col: usize },

    #[error("zero diagonal entry at index {0}")]
    ZeroDiagonal(usize),

    #[error("map does not descend to quotient; witness {witness:?}")]
    DoesNotDescend { witness: Vec<String> },

    #[error("torsion not eventually annihilated after {iterations} iterations")]
    TorsionNotAnnihilated { iterations: usize },

    #[error("negative entry at ({row}, {col})")]
    NegativeEntry { row: usize, col: usize },

    #[error("unclassified input: {0} is only presented, cannot combine")]
    UnclassifiedInput(&'static str),

    #[error("invalid complex: {}", .0.join("; "))]
    InvalidComplex(Vec<String>),

    #[error("missing substitution data: {0}")]
    MissingSubstitution(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
