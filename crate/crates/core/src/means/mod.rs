//! Closed-form bivariate means (A, G, H and the one-parameter family L_c),
//! their exact expansion coefficients, Catalan numbers, and high-precision
//! rational evaluation for truncation studies.

mod catalan;
mod lc;
mod precise;

pub use catalan::catalan;
pub use lc::{
    classic_series, lc_coefficient, lc_coefficient_poly, lc_eval, lc_limit_checks, lc_series_num,
    lc_series_sym, Classic, LcParams, LimitChecks,
};
pub use precise::PreciseMean;

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::arith::{parse_rational, rational_to_f64};

#[derive(Debug, Clone, Error, PartialEq)]
pub enum CatalogError {
    #[error("unknown mean `{0}` (expected A, G, H or Lc:<value>)")]
    UnknownMean(String),
    #[error("parameter c = {0} is outside [-1, ∞)")]
    ParameterOutOfRange(f64),
    #[error("mean evaluation needs positive arguments, got ({0}, {1})")]
    DomainViolation(f64, f64),
    #[error("numerical breakdown evaluating {name} at ({a}, {b})")]
    NumericalBreakdown { name: String, a: f64, b: f64 },
}

/// Declared properties of a numeric mean.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MeanFlags {
    pub symmetric: bool,
    pub homogeneous: bool,
    pub strict: bool,
}

impl MeanFlags {
    pub const ALL: MeanFlags = MeanFlags {
        symmetric: true,
        homogeneous: true,
        strict: true,
    };
}

/// A pure bivariate real-valued mean on the positive quadrant.
///
/// Evaluators are total on positive inputs; numerical breakdown inside
/// composed operators surfaces as a non-finite value, which
/// [`NumericMean::try_eval`] converts into an error.
#[derive(Clone)]
pub struct NumericMean {
    name: String,
    flags: MeanFlags,
    eval: Arc<dyn Fn(f64, f64) -> f64 + Send + Sync>,
}

impl fmt::Debug for NumericMean {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("NumericMean")
            .field("name", &self.name)
            .field("flags", &self.flags)
            .finish()
    }
}

impl NumericMean {
    pub fn from_fn(
        name: impl Into<String>,
        flags: MeanFlags,
        eval: impl Fn(f64, f64) -> f64 + Send + Sync + 'static,
    ) -> NumericMean {
        NumericMean {
            name: name.into(),
            flags,
            eval: Arc::new(eval),
        }
    }

    pub fn arithmetic() -> NumericMean {
        NumericMean::from_fn("A", MeanFlags::ALL, |a, b| (a + b) / 2.0)
    }

    pub fn geometric() -> NumericMean {
        NumericMean::from_fn("G", MeanFlags::ALL, |a, b| (a * b).sqrt())
    }

    pub fn harmonic() -> NumericMean {
        NumericMean::from_fn("H", MeanFlags::ALL, |a, b| 2.0 * a * b / (a + b))
    }

    /// The L_c mean for `c >= -1`; `c = -1` dispatches to the harmonic mean.
    pub fn lc(c: f64) -> Result<NumericMean, CatalogError> {
        let params = LcParams::new(c)?;
        Ok(NumericMean::from_fn(
            format!("Lc:{c}"),
            MeanFlags::ALL,
            move |a, b| lc_eval(&params, a, b),
        ))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn flags(&self) -> MeanFlags {
        self.flags
    }

    pub fn eval(&self, a: f64, b: f64) -> f64 {
        debug_assert!(a > 0.0 && b > 0.0, "mean arguments must be positive");
        (self.eval)(a, b)
    }

    pub fn try_eval(&self, a: f64, b: f64) -> Result<f64, CatalogError> {
        if !(a > 0.0 && b > 0.0) {
            return Err(CatalogError::DomainViolation(a, b));
        }
        let v = (self.eval)(a, b);
        if v.is_finite() {
            Ok(v)
        } else {
            Err(CatalogError::NumericalBreakdown {
                name: self.name.clone(),
                a,
                b,
            })
        }
    }
}

/// Resolves the CLI-facing mean names: `A`, `G`, `H`, `Lc:<value>` where the
/// value may be a decimal or an exact fraction.
pub fn parse_mean(name: &str) -> Result<NumericMean, CatalogError> {
    match name {
        "A" => Ok(NumericMean::arithmetic()),
        "G" => Ok(NumericMean::geometric()),
        "H" => Ok(NumericMean::harmonic()),
        _ => {
            if let Some(value) = name.strip_prefix("Lc:") {
                let c = parse_rational(value)
                    .map(|q| rational_to_f64(&q))
                    .map_err(|_| CatalogError::UnknownMean(name.to_string()))?;
                NumericMean::lc(c)
            } else {
                Err(CatalogError::UnknownMean(name.to_string()))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classic_means() {
        assert_eq!(NumericMean::arithmetic().eval(1.0, 3.0), 2.0);
        assert_eq!(NumericMean::geometric().eval(1.0, 4.0), 2.0);
        assert!((NumericMean::harmonic().eval(1.0, 2.0) - 4.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn parse_names() {
        assert_eq!(parse_mean("A").unwrap().name(), "A");
        assert!(parse_mean("Lc:0.3").is_ok());
        assert!(parse_mean("Lc:-1/2").is_ok());
        assert!(matches!(
            parse_mean("Lc:-2"),
            Err(CatalogError::ParameterOutOfRange(_))
        ));
        assert!(matches!(parse_mean("Q"), Err(CatalogError::UnknownMean(_))));
    }

    #[test]
    fn domain_guard() {
        let a = NumericMean::arithmetic();
        assert!(matches!(
            a.try_eval(-1.0, 2.0),
            Err(CatalogError::DomainViolation(..))
        ));
        assert!(a.try_eval(1.0, 2.0).is_ok());
    }
}
