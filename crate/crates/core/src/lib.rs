//! Exact symbolic-numeric engine for bivariate homogeneous symmetric means.
//!
//! The crate has three layers:
//!
//! * exact arithmetic — arbitrary-precision rationals and sparse multivariate
//!   polynomials ([`arith`]);
//! * truncated asymptotic series of means in the canonical form
//!   `M(x-t, x+t) = Σ k_n t^{2n} x^{-2n+1}` together with quotient, power and
//!   mean-composition transforms ([`series`]);
//! * the mean catalog (arithmetic, geometric, harmonic and the one-parameter
//!   `L_c` family), both symmetry operators on the set of means — the
//!   group-structure symmetry `S` and the Gauss-equation symmetry `σ` — in
//!   numeric ([`symmetry::numeric`]) and coefficient form
//!   ([`symmetry::series`]), and the coefficient-comparison pipeline that
//!   rediscovers the Catalan-patterned coefficient family ([`discovery`]).
//!
//! [`verify`] bundles the full verification grid behind a deterministic,
//! machine-readable report.

pub mod arith;
pub mod discovery;
pub mod means;
pub mod series;
pub mod symmetry;
pub mod verify;

pub use arith::{Poly, Rational, SymbolId, SymbolTable};
pub use means::NumericMean;
pub use series::{MeanSeries, PlainSeries};
