//! Exact rational scalars.
//!
//! `Rational` is `num_rational::BigRational`: always stored in lowest terms
//! with a positive denominator, which is exactly the canonical form the rest
//! of the crate relies on.

use num_bigint::{BigInt, Sign};
use num_traits::{Signed, Zero};

use super::ArithError;

pub type Rational = num_rational::BigRational;

/// Shorthand for small rational constants.
pub fn rational(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Parses `"p/q"`, an integer literal, or a plain decimal such as `"-0.75"`.
pub fn parse_rational(text: &str) -> Result<Rational, ArithError> {
    let bad = || ArithError::BadRational {
        text: text.to_string(),
    };
    let s = text.trim();
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num.trim().parse().map_err(|_| bad())?;
        let d: BigInt = den.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        return Ok(Rational::new(n, d));
    }
    if let Some((int, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let negative = int.trim_start().starts_with('-');
        let whole: BigInt = if int.is_empty() || int == "-" || int == "+" {
            BigInt::zero()
        } else {
            int.parse().map_err(|_| bad())?
        };
        let digits: BigInt = frac.parse().map_err(|_| bad())?;
        let scale = BigInt::from(10u32).pow(frac.len() as u32);
        let frac_part = Rational::new(digits, scale);
        let whole_part = Rational::from(whole);
        return Ok(if negative {
            whole_part - frac_part
        } else {
            whole_part + frac_part
        });
    }
    let n: BigInt = s.parse().map_err(|_| bad())?;
    Ok(Rational::from(n))
}

/// Rational to f64 conversion that stays correct for numerators and
/// denominators far beyond the f64 range (both huge and tiny quotients).
pub fn rational_to_f64(r: &Rational) -> f64 {
    if r.is_zero() {
        return 0.0;
    }
    let negative = r.is_negative();
    let num = r.numer().abs();
    let den = r.denom().clone();
    // Shift the numerator so the integer quotient keeps ~80 significant bits,
    // then scale back with exp2.
    let shift: i64 = 80 + den.bits() as i64 - num.bits() as i64;
    let scaled = if shift >= 0 {
        num << shift as u64
    } else {
        num >> (-shift) as u64
    };
    let (_, digits) = (scaled / den).to_u64_digits();
    let mut q = 0.0f64;
    for (i, d) in digits.iter().enumerate() {
        q += (*d as f64) * (i as f64 * 64.0).exp2();
    }
    let value = q * (-shift as f64).exp2();
    if negative {
        -value
    } else {
        value
    }
}

/// Integer square root based rational sqrt: the result differs from the true
/// square root by at most a few units in the 10^-digits place. `r` must be
/// non-negative.
pub fn sqrt_rational(r: &Rational, digits: u32) -> Rational {
    assert!(!r.is_negative(), "sqrt of negative rational");
    if r.is_zero() {
        return Rational::zero();
    }
    let scale = BigInt::from(10u32).pow(digits);
    let scaled: BigInt = (r.numer() * &scale * &scale) / r.denom();
    let root = isqrt(&scaled);
    Rational::new(root, scale)
}

fn isqrt(n: &BigInt) -> BigInt {
    debug_assert!(n.sign() != Sign::Minus);
    n.sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn parse_forms() {
        assert_eq!(parse_rational("3/4").unwrap(), rational(3, 4));
        assert_eq!(parse_rational("-2/6").unwrap(), rational(-1, 3));
        assert_eq!(parse_rational("5").unwrap(), rational(5, 1));
        assert_eq!(parse_rational("-0.75").unwrap(), rational(-3, 4));
        assert_eq!(parse_rational("0.3").unwrap(), rational(3, 10));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
    }

    #[test]
    fn canonical_form_after_ops() {
        let a = rational(6, -4);
        assert_eq!(a, rational(-3, 2));
        assert!(a.denom() > &num_bigint::BigInt::zero());
        let b = rational(1, 3) + rational(1, 6);
        assert_eq!(b, rational(1, 2));
    }

    #[test]
    fn big_ratio_to_f64() {
        let tiny = Rational::new(BigInt::one(), BigInt::from(10u32).pow(40));
        let v = rational_to_f64(&tiny);
        assert!((v - 1e-40).abs() < 1e-52);

        let huge_parts = Rational::new(
            BigInt::from(3u32) * BigInt::from(10u32).pow(400),
            BigInt::from(2u32) * BigInt::from(10u32).pow(400),
        );
        assert!((rational_to_f64(&huge_parts) - 1.5).abs() < 1e-15);

        assert_eq!(rational_to_f64(&Rational::zero()), 0.0);
        assert!((rational_to_f64(&rational(-7, 8)) + 0.875).abs() < 1e-16);
    }

    #[test]
    fn sqrt_precision() {
        let two = rational(2, 1);
        let s = sqrt_rational(&two, 50);
        let err = (&s * &s - two).abs();
        assert!(err < Rational::new(BigInt::one(), BigInt::from(10u32).pow(48)));
        assert_eq!(sqrt_rational(&Rational::zero(), 30), Rational::zero());
    }
}
