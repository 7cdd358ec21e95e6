//! The one-parameter mean family
//!
//! ```text
//! L_c(a,b) = (a+b)/2 · (1+2c)/(2(1+c)) + 1/(2(1+c)) · √(((a+b)/2)² + 4c(1+c)((b-a)/2)²)
//! ```
//!
//! defined for `c > -1` and extended to `c = -1` by the harmonic mean. The
//! family interpolates H (c = -1), G (c = -1/2) and A (c = 0); its expansion
//! coefficients are `k_n = (-1)^{n-1} C_{n-1} c^n (1+c)^{n-1}` with `C_n` the
//! Catalan numbers.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::One;

use crate::arith::{Poly, Rational, SymbolId, SymbolTable};
use crate::series::{MeanSeries, SeriesError};

use super::catalan::catalan;
use super::CatalogError;

/// Validated parameter for the mean family: `c >= -1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LcParams {
    c: f64,
}

impl LcParams {
    pub fn new(c: f64) -> Result<LcParams, CatalogError> {
        if c.is_finite() && c >= -1.0 {
            Ok(LcParams { c })
        } else {
            Err(CatalogError::ParameterOutOfRange(c))
        }
    }

    pub fn c(&self) -> f64 {
        self.c
    }
}

/// Closed-form evaluation. `c = -1` dispatches to the harmonic mean because
/// the closed form divides by `1 + c`.
pub fn lc_eval(params: &LcParams, a: f64, b: f64) -> f64 {
    lc_closed_form(params.c, a, b)
}

/// The raw closed form without the `c >= -1` restriction; only the limit
/// evidence uses the `c < -1` branch, where L_c is not a mean. On that
/// branch the principal (larger) root of the defining quadratic is taken,
/// i.e. the square-root term carries `|1+c|`, which is what the limit and
/// monotonicity statements refer to; for `c > -1` the two forms agree.
pub(crate) fn lc_closed_form(c: f64, a: f64, b: f64) -> f64 {
    if c == -1.0 {
        return 2.0 * a * b / (a + b);
    }
    let s = (a + b) / 2.0;
    let d = (b - a) / 2.0;
    let mut radicand = s * s + 4.0 * c * (1.0 + c) * d * d;
    // The radicand equals ((1+2c)²(a-b)² + 4ab)/4 > 0; a negative value can
    // only be floating noise, so clamp it.
    if radicand < 0.0 && radicand >= -1e-13 * (a + b) * (a + b) {
        radicand = 0.0;
    }
    let root = radicand.sqrt();
    if c > -1.0 && c < -0.5 {
        // (1+2c)s and the root nearly cancel at extreme ratios a/b; the
        // conjugate form -2c·ab / (root - (1+2c)s) sums two positive terms.
        return -2.0 * c * a * b / (root - (1.0 + 2.0 * c) * s);
    }
    s * (1.0 + 2.0 * c) / (2.0 * (1.0 + c)) + root / (2.0 * (1.0 + c).abs())
}

/// Expansion coefficient `k_n` of L_c at an exact parameter value.
pub fn lc_coefficient(c: &Rational, n: usize) -> Rational {
    if n == 0 {
        return Rational::one();
    }
    let sign = if n.is_multiple_of(2) { -1 } else { 1 };
    let cat = Rational::from_integer(catalan(n as u32 - 1) * BigInt::from(sign));
    let mut value = cat;
    for _ in 0..n {
        value *= c;
    }
    let one_plus = Rational::one() + c;
    for _ in 0..n - 1 {
        value *= &one_plus;
    }
    value
}

/// Expansion coefficient `k_n` as a polynomial in the symbol `c_sym`.
pub fn lc_coefficient_poly(table: &Arc<SymbolTable>, c_sym: SymbolId, n: usize) -> Poly {
    if n == 0 {
        return Poly::constant(table, Rational::one());
    }
    let sign: i64 = if n.is_multiple_of(2) { -1 } else { 1 };
    let cat = Rational::from_integer(catalan(n as u32 - 1) * BigInt::from(sign));
    let c = Poly::symbol(table, c_sym);
    let one_plus = Poly::int(table, 1).checked_add(&c).expect("same table");
    c.pow(n as u32)
        .scale(&cat)
        .checked_mul(&one_plus.pow(n as u32 - 1))
        .expect("same table")
}

/// Numeric-mode series of L_c to the given order.
pub fn lc_series_num(c: &Rational, order: usize) -> MeanSeries<Rational> {
    MeanSeries::new((0..=order).map(|n| lc_coefficient(c, n)).collect())
        .expect("k_0 = 1 by construction")
}

/// Symbolic-mode series of L_c in the symbol `c_sym`.
pub fn lc_series_sym(
    table: &Arc<SymbolTable>,
    c_sym: SymbolId,
    order: usize,
) -> Result<MeanSeries<Poly>, SeriesError> {
    MeanSeries::new(
        (0..=order)
            .map(|n| lc_coefficient_poly(table, c_sym, n))
            .collect(),
    )
}

/// The three classic means with closed-form coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Classic {
    Arithmetic,
    Geometric,
    Harmonic,
}

pub fn classic_series(which: Classic, order: usize) -> MeanSeries<Rational> {
    let coeffs: Vec<Rational> = (0..=order)
        .map(|n| match which {
            Classic::Arithmetic => {
                if n == 0 {
                    Rational::one()
                } else {
                    num_traits::Zero::zero()
                }
            }
            Classic::Harmonic => match n {
                0 => Rational::one(),
                1 => -Rational::one(),
                _ => num_traits::Zero::zero(),
            },
            Classic::Geometric => {
                if n == 0 {
                    Rational::one()
                } else {
                    let den = BigInt::from(2u32).pow(2 * n as u32 - 1);
                    -Rational::new(catalan(n as u32 - 1), den)
                }
            }
        })
        .collect();
    MeanSeries::new(coeffs).expect("k_0 = 1 by construction")
}

/// Numeric evidence for the limit behavior of `c ↦ L_c(a, b)`.
#[derive(Debug, Clone, PartialEq)]
pub struct LimitChecks {
    pub at_large_positive_c: f64,
    pub at_large_negative_c: f64,
    pub above_minus_one: f64,
    pub below_minus_one: f64,
    pub max_ab: f64,
    pub harmonic: f64,
    /// both `c = ±10^6` values within 1e-3 of max(a, b)
    pub approaches_max: bool,
    /// `c = -1 + 10^-8` within 1e-6 of H(a, b)
    pub approaches_harmonic: bool,
    /// `c = -1 - 10^-8` exceeds 10^6
    pub diverges_below_minus_one: bool,
}

pub fn lc_limit_checks(a: f64, b: f64) -> LimitChecks {
    assert!(
        a > 0.0 && b > 0.0 && a != b,
        "limit evidence needs positive a != b"
    );
    let max_ab = a.max(b);
    let harmonic = 2.0 * a * b / (a + b);
    let at_large_positive_c = lc_closed_form(1e6, a, b);
    let at_large_negative_c = lc_closed_form(-1e6, a, b);
    let above_minus_one = lc_closed_form(-1.0 + 1e-8, a, b);
    let below_minus_one = lc_closed_form(-1.0 - 1e-8, a, b);
    LimitChecks {
        at_large_positive_c,
        at_large_negative_c,
        above_minus_one,
        below_minus_one,
        max_ab,
        harmonic,
        approaches_max: (at_large_positive_c - max_ab).abs() <= 1e-3
            && (at_large_negative_c - max_ab).abs() <= 1e-3,
        approaches_harmonic: (above_minus_one - harmonic).abs() <= 1e-6,
        diverges_below_minus_one: below_minus_one > 1e6,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational;

    #[test]
    fn special_point_values() {
        // c = 0 is the arithmetic mean
        let p = LcParams::new(0.0).unwrap();
        assert!((lc_eval(&p, 1.0, 3.0) - 2.0).abs() < 1e-15);
        // c = -1/2 is the geometric mean
        let p = LcParams::new(-0.5).unwrap();
        assert!((lc_eval(&p, 1.0, 4.0) - 2.0).abs() < 1e-15);
        // c = -1 is the harmonic mean
        let p = LcParams::new(-1.0).unwrap();
        assert!((lc_eval(&p, 1.0, 2.0) - 4.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn rejects_c_below_minus_one() {
        assert!(LcParams::new(-1.5).is_err());
        assert!(LcParams::new(f64::NAN).is_err());
    }

    #[test]
    fn coefficient_table() {
        let c = rational(1, 1);
        assert_eq!(lc_coefficient(&c, 0), rational(1, 1));
        assert_eq!(lc_coefficient(&c, 1), rational(1, 1));
        // at c = 1: k_n = (-1)^{n-1} C_{n-1} 2^{n-1}
        assert_eq!(lc_coefficient(&c, 2), rational(-2, 1));
        assert_eq!(lc_coefficient(&c, 3), rational(8, 1));
        // c = 0 keeps only k_0
        let z = rational(0, 1);
        assert_eq!(
            lc_series_num(&z, 4).coeffs()[1..],
            [
                rational(0, 1),
                rational(0, 1),
                rational(0, 1),
                rational(0, 1)
            ]
        );
        // c = -1/2 reproduces the geometric coefficients
        let g = rational(-1, 2);
        for n in 0..=7 {
            assert_eq!(
                lc_coefficient(&g, n),
                *classic_series(Classic::Geometric, 7).coeff(n)
            );
        }
    }

    #[test]
    fn symbolic_second_coefficient() {
        let t = SymbolTable::new(["c"]).unwrap();
        let k2 = lc_coefficient_poly(&t, t.id("c").unwrap(), 2);
        assert_eq!(k2.to_string(), "-c^2 - c^3");
    }

    #[test]
    fn classic_coefficients() {
        let h = classic_series(Classic::Harmonic, 5);
        assert_eq!(*h.coeff(1), rational(-1, 1));
        assert!(h.coeffs()[2..].iter().all(num_traits::Zero::is_zero));

        let a = classic_series(Classic::Arithmetic, 5);
        assert!(a.coeffs()[1..].iter().all(num_traits::Zero::is_zero));

        let g = classic_series(Classic::Geometric, 3);
        assert_eq!(*g.coeff(3), rational(-1, 16));
    }

    #[test]
    fn limit_evidence() {
        let r = lc_limit_checks(1.0, 2.0);
        assert!(r.approaches_max);
        assert!(r.approaches_harmonic);
        assert!(r.diverges_below_minus_one);
        assert!((r.at_large_positive_c - 2.0).abs() <= 1e-3);
        assert!((r.above_minus_one - 4.0 / 3.0).abs() <= 1e-6);
        assert!(r.below_minus_one > 1e6);
    }

    #[test]
    fn quadratic_identity_sample() {
        // 2(1+c)L² - (a+b)(1+2c)L + 2abc = 0
        for &(c, a, b) in &[(0.3, 2.0, 7.0), (5.0, 0.1, 10.0), (-0.75, 1.0, 2.0)] {
            let l = lc_closed_form(c, a, b);
            let residual =
                2.0 * (1.0 + c) * l * l - (a + b) * (1.0 + 2.0 * c) * l + 2.0 * a * b * c;
            assert!(
                residual.abs() < 1e-10 * (a + b) * (a + b),
                "c={c}: {residual}"
            );
        }
    }
}
