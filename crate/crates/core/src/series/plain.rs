//! General truncated asymptotic series `Σ k_n x^{-n}` and the quotient and
//! power transforms.

use crate::arith::Rational;
use num_traits::{One, Zero};

use super::{SeriesError, SeriesScalar};

/// Truncated series `Σ_{n=0}^{N} k_n x^{-n}`.
#[derive(Debug, Clone, PartialEq)]
pub struct PlainSeries<T> {
    coeffs: Vec<T>,
}

impl<T: SeriesScalar> PlainSeries<T> {
    pub fn new(coeffs: Vec<T>) -> PlainSeries<T> {
        assert!(
            !coeffs.is_empty(),
            "series needs at least the order-0 coefficient"
        );
        PlainSeries { coeffs }
    }

    /// Highest stored order N (the series holds N+1 coefficients).
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

    fn require(&self, order: usize) -> Result<(), SeriesError> {
        if self.order() < order {
            Err(SeriesError::InsufficientOrder {
                available: self.order(),
                required: order,
            })
        } else {
            Ok(())
        }
    }

    /// Truncated Cauchy product up to order `n`.
    pub fn mul(&self, other: &PlainSeries<T>, order: usize) -> Result<PlainSeries<T>, SeriesError> {
        self.require(order)?;
        other.require(order)?;
        let mut coeffs = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut acc = self.coeffs[0].zero_like();
            for j in 0..=n {
                acc = acc.add(&self.coeffs[j].mul(&other.coeffs[n - j])?)?;
            }
            coeffs.push(acc);
        }
        Ok(PlainSeries::new(coeffs))
    }

    /// Quotient `self / other` up to order `n`, by the recursion
    /// `q_n = (f_n - Σ_{k<n} g_{n-k} q_k) / g_0`.
    pub fn quotient(
        &self,
        other: &PlainSeries<T>,
        order: usize,
    ) -> Result<PlainSeries<T>, SeriesError> {
        self.require(order)?;
        other.require(order)?;
        let g0 = &other.coeffs[0];
        if g0.is_zero() {
            return Err(SeriesError::ZeroLeadingCoefficient);
        }
        let mut q: Vec<T> = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut acc = self.coeffs[n].clone();
            for (k, qk) in q.iter().enumerate() {
                acc = acc.sub(&other.coeffs[n - k].mul(qk)?)?;
            }
            q.push(if g0.is_one() { acc } else { acc.div_exact(g0)? });
        }
        Ok(PlainSeries::new(q))
    }

    /// `self^r` for rational `r`, up to order `n`, by the recursion
    /// `P[n,r] = (1/(n k_0)) Σ_{m=1}^{n} [m(1+r) - n] k_m P[n-m,r]`.
    ///
    /// Restricted to unit leading coefficient so that every step stays in
    /// the coefficient ring; general `k_0^r` has no meaning for symbolic
    /// coefficients. Use [`PlainSeries::int_pow`] for non-unit leading terms
    /// with integer exponents.
    pub fn power(&self, r: &Rational, order: usize) -> Result<PlainSeries<T>, SeriesError> {
        self.require(order)?;
        if !self.coeffs[0].is_one() {
            return Err(SeriesError::NonUnitLeading);
        }
        let mut p: Vec<T> = Vec::with_capacity(order + 1);
        p.push(self.coeffs[0].one_like());
        for n in 1..=order {
            let mut acc = self.coeffs[0].zero_like();
            for m in 1..=n {
                let factor = Rational::from_integer(m.into()) * (Rational::one() + r)
                    - Rational::from_integer(n.into());
                if num_traits::Zero::is_zero(&factor) {
                    continue;
                }
                acc = acc.add(&self.coeffs[m].mul(&p[n - m])?.scale(&factor))?;
            }
            p.push(acc.scale(&Rational::new(1.into(), n.into())));
        }
        Ok(PlainSeries::new(p))
    }

    /// Integer power by repeated truncated multiplication; works for any
    /// leading coefficient.
    pub fn int_pow(&self, exp: u32, order: usize) -> Result<PlainSeries<T>, SeriesError> {
        self.require(order)?;
        let one = self.coeffs[0].one_like();
        let mut zeros = vec![one];
        zeros.resize(order + 1, self.coeffs[0].zero_like());
        let mut out = PlainSeries::new(zeros);
        for _ in 0..exp {
            out = out.mul(self, order)?;
        }
        Ok(out)
    }
}

impl PlainSeries<Rational> {
    /// Evaluates `Σ k_n x^{-n}` exactly.
    pub fn eval_rational(&self, x: &Rational) -> Rational {
        let inv = Rational::one() / x;
        let mut acc = Rational::zero();
        for k in self.coeffs.iter().rev() {
            acc = acc * &inv + k;
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational;

    fn series(vals: &[i64]) -> PlainSeries<Rational> {
        PlainSeries::new(vals.iter().map(|&v| rational(v, 1)).collect())
    }

    #[test]
    fn cauchy_product() {
        // geometric times (1 - y) telescopes
        let f = series(&[1, 1, 1, 1]);
        let g = series(&[1, -1, 0, 0]);
        assert_eq!(f.mul(&g, 3).unwrap(), series(&[1, 0, 0, 0]));

        // identity
        let h = series(&[3, 1, 4, 1]);
        assert_eq!(h.mul(&series(&[1, 0, 0, 0]), 3).unwrap(), h);

        // binomial
        let b = series(&[1, 1, 0]);
        assert_eq!(b.mul(&b, 2).unwrap(), series(&[1, 2, 1]));
    }

    #[test]
    fn quotient_examples() {
        let f = series(&[1, 7, -2, 5]);
        assert_eq!(f.quotient(&f, 3).unwrap(), series(&[1, 0, 0, 0]));

        // 1 / (1 - y) is the geometric series; checked against the product oracle
        let one = series(&[1, 0, 0, 0, 0]);
        let g = series(&[1, -1, 0, 0, 0]);
        let q = one.quotient(&g, 4).unwrap();
        assert_eq!(q, series(&[1, 1, 1, 1, 1]));
        assert_eq!(q.mul(&g, 4).unwrap(), one);
    }

    #[test]
    fn quotient_rejects_zero_leading() {
        let f = series(&[1, 1]);
        let g = series(&[0, 1]);
        assert!(matches!(
            f.quotient(&g, 1),
            Err(SeriesError::ZeroLeadingCoefficient)
        ));
    }

    #[test]
    fn power_examples() {
        let s = series(&[1, 1, 0]);
        // r = 1 leaves the series unchanged
        assert_eq!(s.power(&rational(1, 1), 2).unwrap(), s);
        // (1 + y)^2 against the binomial oracle
        assert_eq!(s.power(&rational(2, 1), 2).unwrap(), series(&[1, 2, 1]));
        // (1 + y)^{-1} against the quotient oracle
        let inv = series(&[1, 0, 0]).quotient(&s, 2).unwrap();
        assert_eq!(s.power(&rational(-1, 1), 2).unwrap(), inv);
        // r = 0 gives the unit series
        assert_eq!(s.power(&rational(0, 1), 2).unwrap(), series(&[1, 0, 0]));
        // half-integer power squares back
        let root = s.power(&rational(1, 2), 2).unwrap();
        assert_eq!(root.mul(&root, 2).unwrap(), s);
    }

    #[test]
    fn power_requires_unit_leading() {
        let s = series(&[2, 1]);
        assert!(matches!(
            s.power(&rational(2, 1), 1),
            Err(SeriesError::NonUnitLeading)
        ));
        // but integer powers are fine
        assert_eq!(s.int_pow(2, 1).unwrap(), series(&[4, 4]));
    }

    #[test]
    fn insufficient_order() {
        let s = series(&[1, 1]);
        assert!(matches!(
            s.mul(&s, 5),
            Err(SeriesError::InsufficientOrder {
                available: 1,
                required: 5
            })
        ));
    }
}
