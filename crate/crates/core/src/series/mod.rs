//! Truncated asymptotic series and the three transformations used throughout
//! the crate: quotient, real power, and composition of means.
//!
//! Everything is generic over the coefficient scalar: [`Rational`] for
//! numeric-mode series, [`Poly`] for symbolic-mode series. The two modes
//! never mix inside one series — the type parameter enforces it.

mod compose;
mod mean;
mod plain;

pub(crate) use compose::PowerTables;
pub use compose::{compose_means, compose_means_detailed, ComposeInfo};
pub use mean::MeanSeries;
pub use plain::PlainSeries;

use thiserror::Error;

use crate::arith::{ArithError, Poly, Rational};

#[derive(Debug, Clone, Error, PartialEq)]
pub enum SeriesError {
    #[error("series holds {available} coefficients but order {required} is required")]
    InsufficientOrder { available: usize, required: usize },
    #[error("leading series coefficient is zero")]
    ZeroLeadingCoefficient,
    #[error("operation requires a unit leading coefficient")]
    NonUnitLeading,
    #[error("mean series must start with coefficient 1")]
    LeadingNotOne,
    #[error("symbolic leading coefficient `{0}` is not invertible")]
    NonInvertibleLeading(String),
    #[error("z = 1 assumption violated: first-order coefficients coincide")]
    Z1Violation,
    #[error(transparent)]
    Arith(#[from] ArithError),
}

/// Coefficient scalar of a truncated series: exact ring operations plus
/// rational scaling (the power-lemma recursion multiplies by rationals).
pub trait SeriesScalar: Clone + PartialEq + std::fmt::Display {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn add(&self, rhs: &Self) -> Result<Self, SeriesError>;
    fn sub(&self, rhs: &Self) -> Result<Self, SeriesError>;
    fn mul(&self, rhs: &Self) -> Result<Self, SeriesError>;
    /// Exact division; fails when the quotient does not exist in the ring.
    fn div_exact(&self, rhs: &Self) -> Result<Self, SeriesError>;
    fn scale(&self, k: &Rational) -> Self;
}

impl SeriesScalar for Rational {
    fn zero_like(&self) -> Self {
        num_traits::Zero::zero()
    }
    fn one_like(&self) -> Self {
        num_traits::One::one()
    }
    fn is_zero(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
    fn is_one(&self) -> bool {
        num_traits::One::is_one(self)
    }
    fn add(&self, rhs: &Self) -> Result<Self, SeriesError> {
        Ok(self + rhs)
    }
    fn sub(&self, rhs: &Self) -> Result<Self, SeriesError> {
        Ok(self - rhs)
    }
    fn mul(&self, rhs: &Self) -> Result<Self, SeriesError> {
        Ok(self * rhs)
    }
    fn div_exact(&self, rhs: &Self) -> Result<Self, SeriesError> {
        if SeriesScalar::is_zero(rhs) {
            return Err(SeriesError::ZeroLeadingCoefficient);
        }
        Ok(self / rhs)
    }
    fn scale(&self, k: &Rational) -> Self {
        self * k
    }
}

impl SeriesScalar for Poly {
    fn zero_like(&self) -> Self {
        Poly::zero(self.table())
    }
    fn one_like(&self) -> Self {
        Poly::constant(self.table(), num_traits::One::one())
    }
    fn is_zero(&self) -> bool {
        Poly::is_zero(self)
    }
    fn is_one(&self) -> bool {
        Poly::is_one(self)
    }
    fn add(&self, rhs: &Self) -> Result<Self, SeriesError> {
        Ok(self.checked_add(rhs)?)
    }
    fn sub(&self, rhs: &Self) -> Result<Self, SeriesError> {
        Ok(self.checked_sub(rhs)?)
    }
    fn mul(&self, rhs: &Self) -> Result<Self, SeriesError> {
        Ok(self.checked_mul(rhs)?)
    }
    fn div_exact(&self, rhs: &Self) -> Result<Self, SeriesError> {
        if Poly::is_zero(rhs) {
            return Err(SeriesError::ZeroLeadingCoefficient);
        }
        Ok(self.exact_div(rhs)?)
    }
    fn scale(&self, k: &Rational) -> Self {
        Poly::scale(self, k)
    }
}
