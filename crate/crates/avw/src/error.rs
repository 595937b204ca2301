use thiserror::Error;

/// Errors surfaced by constructors, the algebra factory and the structure lab.
///
/// Core arithmetic (`cd_mul`, `inner`, `Algebra::mul`, ...) treats a dimension
/// mismatch as a caller bug and panics instead; everything reachable from
/// user-supplied input returns `Result`.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension {0} is not one of 1, 2, 4, 8")]
    BadDim(usize),
    #[error("dimension mismatch: {0} vs {1}")]
    DimMismatch(usize, usize),
    #[error("invalid rational literal {0:?} (expected \"p\" or \"p/q\", no decimals)")]
    BadRational(String),
    #[error("parameter {name} must have unit norm, got squared norm {norm_sq}")]
    NotUnit { name: &'static str, norm_sq: String },
    #[error("element must be purely imaginary (zero first coordinate)")]
    NotImaginary,
    #[error("matrix must be {expected}x{expected}, got {rows}x{cols}")]
    BadMatrixShape {
        expected: usize,
        rows: usize,
        cols: usize,
    },
    #[error("matrix is not orthogonal (f^T f != I)")]
    NotOrthogonal,
    #[error("matrix does not fix the unit element")]
    DoesNotFixUnit,
    #[error("seed matrix is not skew-symmetric with zero first row and column")]
    BadSkewSeed,
    #[error("constructed structure tensor for {0} is not norm-multiplicative")]
    NormNotMultiplicative(String),
    #[error("element is not a nonzero central idempotent of {0}")]
    NotCentralIdempotent(String),
    #[error("element is not a nonzero flexible idempotent of {0}")]
    NotFlexibleIdempotent(String),
    #[error("the map x -> 2(x|e)e - x is not an involution of {0}")]
    NotAnInvolution(String),
    #[error("the dimension-2 algebra with product conj(x)conj(y) has no unique involution; rejected")]
    ConjBothDim2Excluded,
    #[error("no rational common eigenvector of L_e and R_e exists for {0}")]
    NoRationalEigenvector(String),
    #[error("basis vectors are linearly dependent")]
    DependentBasis,
    #[error("operation requires a principal isotope spec, got {0}")]
    NotAnIsotope(String),
    #[error("invalid algebra spec: {0}")]
    BadSpec(String),
    #[error("invalid identity selector {0:?} (expected \"p,q,r\" with p,q,r in {{1,2}} or \"x2yx2\")")]
    BadIdentity(String),
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Usage(String),
}

pub type Result<T> = std::result::Result<T, Error>;
