//! Composition of mean expansions: coefficients of `H = F(M, N)`.
//!
//! Writing `c_m = (a_m + b_m)/2` and `d_m = (a_{m+z} - b_{m+z})/2`, with `z`
//! the first index where the two inner expansions differ, the composed
//! coefficients are
//!
//! ```text
//! h_n = Σ_{k=0}^{⌊n/2z⌋} γ_k Σ_{j=0}^{n-2zk} P[j, 2k, (d_m)] · P[n-2zk-j, 1-2k, (c_m)]
//! ```
//!
//! The `d`-side powers have non-negative integer exponents and are computed
//! by truncated multiplication (exact in any coefficient ring); the `c`-side
//! powers have a unit leading coefficient, so the rational power recursion
//! applies verbatim. Both tables are memoized because the sigma-coefficient
//! solver replays them stage by stage.

use std::collections::HashMap;

use num_traits::One;

use crate::arith::Rational;

use super::{MeanSeries, SeriesError, SeriesScalar};

/// Memoized power tables over a difference sequence `d` and an average
/// sequence `chalf` (which must start with 1). Both sequences may grow;
/// previously computed entries stay valid because table entries only ever
/// read the prefix below their index.
pub(crate) struct PowerTables<T> {
    d: Vec<T>,
    chalf: Vec<T>,
    dpow: HashMap<(u32, usize), T>,
    cpow: HashMap<(u32, usize), T>,
    one: T,
}

impl<T: SeriesScalar> PowerTables<T> {
    pub fn new(one: T) -> PowerTables<T> {
        debug_assert!(one.is_one());
        PowerTables {
            d: Vec::new(),
            chalf: vec![one.clone()],
            dpow: HashMap::new(),
            cpow: HashMap::new(),
            one,
        }
    }

    pub fn push_d(&mut self, v: T) {
        self.d.push(v);
    }

    pub fn push_chalf(&mut self, v: T) {
        self.chalf.push(v);
    }

    /// Coefficient `j` of `(Σ d_m y^m)^exp`.
    pub fn d_int_pow(&mut self, exp: u32, j: usize) -> Result<T, SeriesError> {
        if exp == 0 {
            return Ok(if j == 0 {
                self.one.clone()
            } else {
                self.one.zero_like()
            });
        }
        if let Some(v) = self.dpow.get(&(exp, j)) {
            return Ok(v.clone());
        }
        for e in 1..=exp {
            for jj in 0..=j {
                if self.dpow.contains_key(&(e, jj)) {
                    continue;
                }
                let mut acc = self.one.zero_like();
                for i in 0..=jj {
                    let prev = if e == 1 {
                        if jj - i == 0 {
                            self.one.clone()
                        } else {
                            continue;
                        }
                    } else {
                        self.dpow[&(e - 1, jj - i)].clone()
                    };
                    acc = acc.add(&self.d[i].mul(&prev)?)?;
                }
                self.dpow.insert((e, jj), acc);
            }
        }
        Ok(self.dpow[&(exp, j)].clone())
    }

    /// Power-lemma coefficient `P[i, 1-2k, (chalf_m)]` for `k >= 1`.
    pub fn c_neg_pow(&mut self, k: u32, i: usize) -> Result<T, SeriesError> {
        if i == 0 {
            return Ok(self.one.clone());
        }
        if let Some(v) = self.cpow.get(&(k, i)) {
            return Ok(v.clone());
        }
        let r = Rational::one() - Rational::from_integer((2 * k as i64).into());
        for ii in 1..=i {
            if self.cpow.contains_key(&(k, ii)) {
                continue;
            }
            let mut acc = self.one.zero_like();
            for m in 1..=ii {
                let factor = Rational::from_integer(m.into()) * (Rational::one() + &r)
                    - Rational::from_integer(ii.into());
                if num_traits::Zero::is_zero(&factor) {
                    continue;
                }
                let prev = if ii - m == 0 {
                    self.one.clone()
                } else {
                    self.cpow[&(k, ii - m)].clone()
                };
                acc = acc.add(&self.chalf[m].mul(&prev)?.scale(&factor))?;
            }
            let val = acc.scale(&Rational::new(1.into(), ii.into()));
            self.cpow.insert((k, ii), val);
        }
        Ok(self.cpow[&(k, i)].clone())
    }
}

/// How the composition resolved the offset `z`.
///
/// In symbolic mode a nonzero difference polynomial is taken as nonzero even
/// if it could vanish for special parameter values (generic-case semantics);
/// the chosen `z` and the leading half-difference are reported so callers can
/// record the decision.
#[derive(Debug, Clone, PartialEq)]
pub struct ComposeInfo<T> {
    /// `None` when the inner expansions coincide up to the requested order.
    pub z: Option<usize>,
    pub leading_half_difference: Option<T>,
}

pub fn compose_means<T: SeriesScalar>(
    outer: &MeanSeries<T>,
    m: &MeanSeries<T>,
    n: &MeanSeries<T>,
    order: usize,
) -> Result<MeanSeries<T>, SeriesError> {
    compose_means_detailed(outer, m, n, order).map(|(series, _)| series)
}

pub fn compose_means_detailed<T: SeriesScalar>(
    outer: &MeanSeries<T>,
    m: &MeanSeries<T>,
    n: &MeanSeries<T>,
    order: usize,
) -> Result<(MeanSeries<T>, ComposeInfo<T>), SeriesError> {
    for s in [outer, m, n] {
        if s.order() < order {
            return Err(SeriesError::InsufficientOrder {
                available: s.order(),
                required: order,
            });
        }
    }
    // Identical inner means: F(M, M) = M by the mean property.
    let z = (1..=order).find(|&i| m.coeff(i) != n.coeff(i));
    let Some(z) = z else {
        return Ok((
            m.truncated(order)?,
            ComposeInfo {
                z: None,
                leading_half_difference: None,
            },
        ));
    };

    let one = m.coeff(0).one_like();
    let half = Rational::new(1.into(), 2.into());
    let mut tables = PowerTables::new(one.clone());
    for i in 1..=order {
        tables.push_chalf(m.coeff(i).add(n.coeff(i))?.scale(&half));
    }
    for i in 0..=(order - z) {
        tables.push_d(m.coeff(i + z).sub(n.coeff(i + z))?.scale(&half));
    }
    let info = ComposeInfo {
        z: Some(z),
        leading_half_difference: Some(tables.d[0].clone()),
    };

    let mut h = Vec::with_capacity(order + 1);
    h.push(one.clone());
    for nn in 1..=order {
        // k = 0 contributes P[nn, 1, (c_m)] = c_nn directly.
        let mut acc = tables.chalf[nn].clone();
        for k in 1..=(nn / (2 * z)) {
            let mut inner = one.zero_like();
            for j in 0..=(nn - 2 * z * k) {
                let dp = tables.d_int_pow(2 * k as u32, j)?;
                if dp.is_zero() {
                    continue;
                }
                let cp = tables.c_neg_pow(k as u32, nn - 2 * z * k - j)?;
                inner = inner.add(&dp.mul(&cp)?)?;
            }
            acc = acc.add(&outer.coeff(k).mul(&inner)?)?;
        }
        h.push(acc);
    }
    Ok((MeanSeries::new(h)?, info))
}
