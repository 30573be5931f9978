//! Exact arithmetic in real algebraic number fields.
//!
//! A field `Q(θ)` is given by the minimal polynomial of `θ` and a rational
//! interval isolating the real root `θ`. Elements are coordinate vectors in
//! the power basis `1, θ, ..., θ^(d-1)`. Comparisons and floors first try an
//! exact decision and fall back to interval refinement of `θ`, which always
//! terminates on non-zero quantities.

mod embedding;
mod field;
pub mod interval;
pub mod linalg;
mod pattern;
mod poly;
pub mod roots;

use thiserror::Error;

pub use embedding::{conjugate_embeddings, EmbeddedValue, FieldEmbedding};
pub use field::{FieldElement, FieldRef, Irreducibility, RealAlgebraicField};
pub use interval::{ComplexBox, Interval};
pub use pattern::{classify_root_pattern, RootPattern};
pub use poly::{count_roots_in, RationalPolynomial};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraicError {
    #[error("polynomial must have degree at least 1")]
    ConstantPolynomial,
    #[error("polynomial is not squarefree")]
    NotSquarefree,
    #[error("polynomial is reducible over the rationals")]
    NotIrreducible,
    #[error("root interval contains {roots} roots of the polynomial, expected exactly 1")]
    AmbiguousInterval { roots: usize },
    #[error("root interval has lower end above upper end")]
    InvertedInterval,
    #[error("division by zero")]
    DivisionByZero,
    #[error("elements belong to different fields")]
    FieldMismatch,
    #[error("coordinate vector has length {got}, field degree is {expected}")]
    CoordinateLength { expected: usize, got: usize },
    #[error("dominant real root is not greater than 1")]
    NotGreaterThanOne,
    #[error("root isolation did not converge")]
    RootIsolationFailed,
}
