//! Registry of the `Pi_q` and `psi` identities as expression trees, a small
//! DSL for writing them, and the series-level verification driver.

mod eval;
mod expr;
mod parse;
mod registry;
mod verify;

pub use eval::{evaluate, Evaluator, MIN_ORDER};
pub use expr::{Expr, ValuationBound};
pub use parse::{parse, ParseError};
pub use registry::{
    audit_homogeneity, identities, instantiate, list_identities, lookup, normalize_id, Form,
    HomogeneityAudit, IdentityRecord, Sign, PRINTED_21_6_RHS,
};
pub use verify::{verify, verify_all, verify_record, FirstFailure, Status, VerifyReport};

use thiserror::Error;

use crate::series::SeriesError;
use crate::theta::BuilderError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("unknown identity {0:?}")]
    UnknownIdentity(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("insufficient precision at order {order}: need at least {needed}")]
    InsufficientPrecision { order: i64, needed: i64 },
    #[error("evaluating {node} at {path}: {source}")]
    Eval {
        path: String,
        node: String,
        source: BuilderError,
    },
    #[error(transparent)]
    Series(#[from] SeriesError),
}
