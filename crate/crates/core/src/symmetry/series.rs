//! Coefficient recursions for both symmetries.
//!
//! Writing `M0(x-t,x+t) = Σ c_n t^{2n} x^{-2n+1}` and
//! `M1(x-t,x+t) = Σ a_n t^{2n} x^{-2n+1}`:
//!
//! * `S = S_{M0}(M1)` expands with coefficients `b_n^S` obtained from the
//!   explicit quotient form `S = x + t²x^{-1}·NUM(y)/DEN(y)`, `y = t²/x²`,
//!   where
//!   `NUM_m = 2c_{m+1} - a_{m+1} - [C²·Ā]_{m-1}` and
//!   `DEN_m = [C·(C - 2Ā)]_{m-1}` over the shifted sequences
//!   `C_i = c_{i+1}`, `Ā_i = a_{i+1}`; then `b_n^S = NUM/DEN` quotient
//!   coefficient `n-1`.
//! * `σ = σ_{M0}(M1)` solves the Gauss equation at series level: in the
//!   composed-coefficient identity the unknown `b_n^σ` enters only the
//!   `k = j = 0` term with weight 1/2, so each stage is linear:
//!   `b_n^σ = 2(c_n - T_n')- a_n` with `T_n'` the k ≥ 1 part of the
//!   composition sum over already-solved entries.
//!
//! Both recursions run in symbolic (polynomial) or numeric (rational) mode.

use crate::arith::Rational;
use crate::series::{MeanSeries, PowerTables, SeriesError, SeriesScalar};

fn require_order<T: SeriesScalar>(s: &MeanSeries<T>, order: usize) -> Result<(), SeriesError> {
    if s.order() < order {
        Err(SeriesError::InsufficientOrder {
            available: s.order(),
            required: order,
        })
    } else {
        Ok(())
    }
}

/// Expansion coefficients `b_0^S .. b_order^S` of the group symmetry.
pub fn s_coeffs<T: SeriesScalar>(
    m0: &MeanSeries<T>,
    m1: &MeanSeries<T>,
    order: usize,
) -> Result<MeanSeries<T>, SeriesError> {
    require_order(m0, order)?;
    require_order(m1, order)?;
    let one = m0.coeff(0).one_like();
    if order == 0 {
        return MeanSeries::new(vec![one]);
    }
    let two = Rational::from_integer(2.into());
    let c = |i: usize| m0.coeff(i);
    let a = |i: usize| m1.coeff(i);

    // csq[k] = Σ_{j=0}^{k} c_{j+1} c_{k-j+1}
    let mut csq: Vec<T> = Vec::new();
    if order >= 2 {
        for k in 0..=order - 2 {
            let mut acc = one.zero_like();
            for j in 0..=k {
                acc = acc.add(&c(j + 1).mul(c(k - j + 1))?)?;
            }
            csq.push(acc);
        }
    }

    // num[m] = 2c_{m+1} - a_{m+1} - Σ_{k=0}^{m-1} csq[k] a_{m-k}
    let mut num: Vec<T> = Vec::with_capacity(order);
    for m in 0..order {
        let mut acc = c(m + 1).scale(&two).sub(a(m + 1))?;
        for (k, csq_k) in csq.iter().enumerate().take(m) {
            acc = acc.sub(&csq_k.mul(a(m - k))?)?;
        }
        num.push(acc);
    }

    // den[m] = Σ_{k=0}^{m-1} c_{k+1} (c_{m-k} - 2a_{m-k}),  m >= 1; den_0 = 1
    let mut den: Vec<T> = vec![one.clone()];
    for m in 1..order {
        let mut acc = one.zero_like();
        for k in 0..m {
            acc = acc.add(&c(k + 1).mul(&c(m - k).sub(&a(m - k).scale(&two))?)?)?;
        }
        den.push(acc);
    }

    // quotient recursion with unit leading denominator; b_n^S = q_{n-1}
    let mut q: Vec<T> = Vec::with_capacity(order);
    for m in 0..order {
        let mut acc = num[m].clone();
        for (k, qk) in q.iter().enumerate().take(m) {
            acc = acc.sub(&den[m - k].mul(qk)?)?;
        }
        q.push(acc);
    }

    let mut coeffs = Vec::with_capacity(order + 1);
    coeffs.push(one);
    coeffs.extend(q);
    MeanSeries::new(coeffs)
}

/// Expansion coefficients `b_0^σ .. b_order^σ` of the functional symmetry.
///
/// Requires the z = 1 case, i.e. `a_1 ≠ c_1`; for symbolic inputs a nonzero
/// difference polynomial is accepted in the generic-case sense.
pub fn sigma_coeffs<T: SeriesScalar>(
    m0: &MeanSeries<T>,
    m1: &MeanSeries<T>,
    order: usize,
) -> Result<MeanSeries<T>, SeriesError> {
    require_order(m0, order)?;
    require_order(m1, order)?;
    let one = m0.coeff(0).one_like();
    if order == 0 {
        return MeanSeries::new(vec![one]);
    }
    if m1.coeff(1) == m0.coeff(1) {
        return Err(SeriesError::Z1Violation);
    }
    let half = Rational::new(1.into(), 2.into());
    let two = Rational::from_integer(2.into());
    let mut tables = PowerTables::new(one.clone());
    let mut b: Vec<T> = vec![one.clone()];
    for n in 1..=order {
        // k >= 1 part of the composition sum; the solved prefix b_1..b_{n-1}
        // fills the d and average sequences up to the indices it touches.
        let mut tprime = one.zero_like();
        for k in 1..=n / 2 {
            let mut inner = one.zero_like();
            for j in 0..=(n - 2 * k) {
                let dp = tables.d_int_pow(2 * k as u32, j)?;
                if dp.is_zero() {
                    continue;
                }
                inner = inner.add(&dp.mul(&tables.c_neg_pow(k as u32, n - 2 * k - j)?)?)?;
            }
            tprime = tprime.add(&m0.coeff(k).mul(&inner)?)?;
        }
        let an = m1.coeff(n);
        let bn = m0.coeff(n).sub(&tprime)?.scale(&two).sub(an)?;
        tables.push_chalf(an.add(&bn)?.scale(&half));
        tables.push_d(an.sub(&bn)?.scale(&half));
        b.push(bn);
    }
    MeanSeries::new(b)
}

/// Both symmetry expansions of the same `(M0, M1)` pair.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricExpansionPair<T> {
    pub m0: MeanSeries<T>,
    pub m1: MeanSeries<T>,
    pub s: MeanSeries<T>,
    pub sigma: MeanSeries<T>,
    pub order: usize,
}

pub fn expansion_pair<T: SeriesScalar>(
    m0: &MeanSeries<T>,
    m1: &MeanSeries<T>,
    order: usize,
) -> Result<SymmetricExpansionPair<T>, SeriesError> {
    Ok(SymmetricExpansionPair {
        m0: m0.truncated(order)?,
        m1: m1.truncated(order)?,
        s: s_coeffs(m0, m1, order)?,
        sigma: sigma_coeffs(m0, m1, order)?,
        order,
    })
}

/// Checks the second-order composition identity
/// `c_2 = ½(a_2 + b_2) + ¼(a_1 - b_1)² c_1` exactly.
pub fn verify_c2_relation<T: SeriesScalar>(a: &[T], b: &[T], c: &[T]) -> bool {
    assert!(
        a.len() >= 3 && b.len() >= 3 && c.len() >= 3,
        "need coefficients up to index 2"
    );
    let half = Rational::new(1.into(), 2.into());
    let quarter = Rational::new(1.into(), 4.into());
    let rhs = (|| -> Result<T, SeriesError> {
        let avg = a[2].add(&b[2])?.scale(&half);
        let diff = a[1].sub(&b[1])?;
        avg.add(&diff.mul(&diff)?.mul(&c[1])?.scale(&quarter))
    })();
    match rhs {
        Ok(rhs) => c[2] == rhs,
        Err(_) => false,
    }
}
