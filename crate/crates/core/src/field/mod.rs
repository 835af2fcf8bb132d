//! Exact arithmetic in `Q(m)` and in quadratic extensions `Q(m)[s]/(s^2 - u)`.

mod poly;
mod quad;
mod ratfunc;

pub use poly::Poly;
pub use quad::QuadExt;
pub use ratfunc::RatFunc;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("division by the zero rational function")]
    DivisionByZeroRatFunc,
    #[error("quadratic extensions with different moduli: {left} vs {right}")]
    ModulusMismatch { left: String, right: String },
    #[error("element has zero norm and no inverse")]
    ZeroNormInverse,
}
