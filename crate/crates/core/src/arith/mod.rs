//! Exact arithmetic substrate: arbitrary-precision rationals, symbol tables
//! and sparse multivariate polynomials with exact division.

mod poly;
pub(crate) mod rational;
mod symbol;

pub use poly::Poly;
pub use rational::{parse_rational, rational, rational_to_f64, sqrt_rational, Rational};
pub use symbol::{SymbolId, SymbolTable};

use thiserror::Error;

/// Errors raised by the exact-arithmetic layer.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum ArithError {
    #[error("polynomials belong to different symbol tables")]
    SymbolTableMismatch,
    #[error("polynomial division is not exact: {context}")]
    NotDivisible { context: String },
    #[error("division by zero polynomial")]
    DivisionByZero,
    #[error("no value assigned to symbol `{name}`")]
    MissingSymbol { name: String },
    #[error("duplicate symbol name `{name}`")]
    DuplicateSymbol { name: String },
    #[error("symbol `{name}` does not exist in the target table")]
    UnknownSymbol { name: String },
    #[error("invalid rational literal `{text}`")]
    BadRational { text: String },
}
