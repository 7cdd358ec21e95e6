//! High-precision rational evaluation of the catalog means.
//!
//! Truncation-order checks compare a mean against its partial sums down to
//! magnitudes like x^{-17}, far below f64 resolution, so the reference value
//! must be computed exactly: every catalog mean is rational except for one
//! square root, which is taken to a configurable number of decimal digits.

use num_traits::One;

use crate::arith::{sqrt_rational, Rational};

/// A catalog mean evaluated in exact rational arithmetic.
#[derive(Debug, Clone, PartialEq)]
pub enum PreciseMean {
    Arithmetic,
    Geometric,
    Harmonic,
    Lc(Rational),
}

impl PreciseMean {
    /// Evaluation with the square root carried to `digits` decimal places;
    /// the result differs from the true mean by at most a few units in the
    /// last place of the root.
    pub fn eval(&self, a: &Rational, b: &Rational, digits: u32) -> Rational {
        match self {
            PreciseMean::Arithmetic => (a + b) / Rational::from_integer(2.into()),
            PreciseMean::Harmonic => harmonic(a, b),
            PreciseMean::Geometric => sqrt_rational(&(a * b), digits),
            PreciseMean::Lc(c) => {
                let minus_one = -Rational::one();
                if *c == minus_one {
                    return harmonic(a, b);
                }
                let two = Rational::from_integer(2.into());
                let s = (a + b) / &two;
                let d = (b - a) / &two;
                let one_plus = Rational::one() + c;
                let radicand = &s * &s + Rational::from_integer(4.into()) * c * &one_plus * &d * &d;
                let root = sqrt_rational(&radicand, digits);
                let denom = &two * &one_plus;
                (s * (Rational::one() + &two * c) + root) / denom
            }
        }
    }
}

fn harmonic(a: &Rational, b: &Rational) -> Rational {
    Rational::from_integer(2.into()) * a * b / (a + b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rational, rational_to_f64};
    use crate::means::lc::lc_closed_form;
    use num_traits::Signed;

    #[test]
    fn exact_cases() {
        let a = rational(1, 1);
        let b = rational(4, 1);
        assert_eq!(PreciseMean::Arithmetic.eval(&a, &b, 30), rational(5, 2));
        assert_eq!(PreciseMean::Harmonic.eval(&a, &b, 30), rational(8, 5));
        // √(1·4) is exact even through the digit scaling
        assert_eq!(PreciseMean::Geometric.eval(&a, &b, 30), rational(2, 1));
    }

    #[test]
    fn lc_reduces_to_special_cases() {
        let a = rational(1, 1);
        let b = rational(4, 1);
        assert_eq!(
            PreciseMean::Lc(rational(0, 1)).eval(&a, &b, 40),
            rational(5, 2)
        );
        assert_eq!(
            PreciseMean::Lc(rational(-1, 1)).eval(&a, &b, 40),
            rational(8, 5)
        );
        let g = PreciseMean::Lc(rational(-1, 2)).eval(&a, &b, 40);
        assert!((&g - rational(2, 1)).abs() < rational(1, 1_000_000_000));
    }

    #[test]
    fn agrees_with_f64_closed_form() {
        for &(cn, cd, an, bn) in &[(3i64, 10i64, 2i64, 7i64), (5, 1, 1, 10), (-3, 4, 1, 2)] {
            let c = rational(cn, cd);
            let precise = PreciseMean::Lc(c.clone()).eval(&rational(an, 1), &rational(bn, 1), 50);
            let float = lc_closed_form(rational_to_f64(&c), an as f64, bn as f64);
            assert!((rational_to_f64(&precise) - float).abs() < 1e-12);
        }
    }
}
