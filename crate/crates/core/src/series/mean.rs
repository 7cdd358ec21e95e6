//! Expansions of symmetric homogeneous means in the canonical shape
//! `M(x-t, x+t) = Σ_{n=0}^{N} k_n t^{2n} x^{-2n+1}` with `k_0 = 1`.
//!
//! Only even powers of `t` are stored: symmetry of the mean kills the odd
//! ones. The coefficient list is exactly the object every recursion in this
//! crate manipulates.

use num_traits::Zero;
use serde_json::json;

use crate::arith::{parse_rational, rational_to_f64, Poly, Rational};

use super::{PlainSeries, SeriesError, SeriesScalar};

#[derive(Debug, Clone, PartialEq)]
pub struct MeanSeries<T> {
    coeffs: Vec<T>,
}

impl<T: SeriesScalar> MeanSeries<T> {
    /// Wraps a coefficient list `k_0 ... k_N`; `k_0` must be 1.
    pub fn new(coeffs: Vec<T>) -> Result<MeanSeries<T>, SeriesError> {
        match coeffs.first() {
            Some(k0) if k0.is_one() => Ok(MeanSeries { coeffs }),
            _ => Err(SeriesError::LeadingNotOne),
        }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &T {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    pub fn truncated(&self, order: usize) -> Result<MeanSeries<T>, SeriesError> {
        if self.order() < order {
            return Err(SeriesError::InsufficientOrder {
                available: self.order(),
                required: order,
            });
        }
        Ok(MeanSeries {
            coeffs: self.coeffs[..=order].to_vec(),
        })
    }

    /// The coefficient list viewed as a plain series in `y = t^2/x^2` (the
    /// factor-`x` normalization used by all internal quotients).
    pub fn as_plain(&self) -> PlainSeries<T> {
        PlainSeries::new(self.coeffs.clone())
    }

    pub fn from_plain(series: PlainSeries<T>) -> Result<MeanSeries<T>, SeriesError> {
        MeanSeries::new(series.into_coeffs())
    }

    pub fn map<U: SeriesScalar>(
        &self,
        f: impl FnMut(&T) -> U,
    ) -> Result<MeanSeries<U>, SeriesError> {
        MeanSeries::new(self.coeffs.iter().map(f).collect())
    }

    /// Serializes as `{order, mode, coeffs}` with exact coefficient strings.
    pub fn to_json(&self, mode: &str) -> serde_json::Value {
        json!({
            "order": self.order(),
            "mode": mode,
            "coeffs": self.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        })
    }
}

impl MeanSeries<Rational> {
    pub fn json(&self) -> serde_json::Value {
        self.to_json("numeric")
    }

    /// Exact partial sum `Σ k_n t^{2n} x^{-2n+1}`.
    pub fn eval_rational(&self, x: &Rational, t: &Rational) -> Rational {
        let y = (t * t) / (x * x);
        let mut acc = Rational::zero();
        for k in self.coeffs.iter().rev() {
            acc = acc * &y + k;
        }
        acc * x
    }

    pub fn eval_f64(&self, x: f64, t: f64) -> f64 {
        let y = (t * t) / (x * x);
        let mut acc = 0.0;
        for k in self.coeffs.iter().rev() {
            acc = acc * y + rational_to_f64(k);
        }
        acc * x
    }

    /// Parses the `{order, mode, coeffs}` JSON form (numeric mode only).
    pub fn from_json(value: &serde_json::Value) -> Result<MeanSeries<Rational>, String> {
        let coeffs = value
            .get("coeffs")
            .and_then(|c| c.as_array())
            .ok_or_else(|| "series JSON needs a `coeffs` array".to_string())?;
        let mode = value
            .get("mode")
            .and_then(|m| m.as_str())
            .unwrap_or("numeric");
        if mode != "numeric" {
            return Err(format!("unsupported series mode `{mode}`"));
        }
        let mut parsed = Vec::with_capacity(coeffs.len());
        for c in coeffs {
            let text = c
                .as_str()
                .ok_or_else(|| "coefficients must be strings".to_string())?;
            parsed.push(parse_rational(text).map_err(|e| e.to_string())?);
        }
        MeanSeries::new(parsed).map_err(|e| e.to_string())
    }
}

impl MeanSeries<Poly> {
    pub fn json(&self) -> serde_json::Value {
        self.to_json("symbolic")
    }

    /// Specializes every coefficient at an exact assignment, producing a
    /// numeric-mode series.
    pub fn eval_coeffs(
        &self,
        assignment: &std::collections::HashMap<crate::arith::SymbolId, Rational>,
    ) -> Result<MeanSeries<Rational>, SeriesError> {
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            out.push(c.eval(assignment)?);
        }
        MeanSeries::new(out)
    }
}

/// Builds a numeric mean series from integer-pair coefficients.
#[cfg(test)]
pub(crate) fn mean_series_from_pairs(pairs: &[(i64, i64)]) -> MeanSeries<Rational> {
    MeanSeries::new(
        pairs
            .iter()
            .map(|&(n, d)| Rational::new(n.into(), d.into()))
            .collect(),
    )
    .unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational;

    #[test]
    fn leading_coefficient_must_be_one() {
        assert!(MeanSeries::new(vec![rational(2, 1)]).is_err());
        assert!(MeanSeries::new(vec![rational(1, 1), rational(-1, 2)]).is_ok());
    }

    #[test]
    fn evaluation_matches_horner() {
        let s = mean_series_from_pairs(&[(1, 1), (-1, 2), (-1, 8)]);
        let x = rational(10, 1);
        let t = rational(1, 1);
        // 10 - (1/2)/10 - (1/8)/1000
        let expect = rational(10, 1) - rational(1, 20) - rational(1, 8000);
        assert_eq!(s.eval_rational(&x, &t), expect);
        assert!((s.eval_f64(10.0, 1.0) - 9.949875).abs() < 1e-12);
    }

    #[test]
    fn json_round_trip() {
        let s = mean_series_from_pairs(&[(1, 1), (3, 10), (-7, 2)]);
        let v = s.json();
        assert_eq!(v["mode"], "numeric");
        assert_eq!(v["order"], 2);
        let back = MeanSeries::from_json(&v).unwrap();
        assert_eq!(back, s);
    }
}
