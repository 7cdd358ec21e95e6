//! Coefficient-comparison pipeline.
//!
//! Keep `M1` fully symbolic (free coefficients `a_1, a_2, …`) and give `M0`
//! the expansion `(1, c, k_2, k_3, …)` with the `k_n` as sequential unknowns.
//! Equating the two symmetry expansions order by order forces each `k_n`:
//! at step `n` the difference `b_{n+1}^S - b_{n+1}^σ` is linear in the fresh
//! unknown, divisible by `(a_1 - c)²`, and the quotient pins `k_n` to a
//! polynomial in `c` alone. Running the pipeline reproduces the
//! Catalan-patterned family `k_n = (-1)^{n-1} C_{n-1} c^n (1+c)^{n-1}`.
//!
//! Divisibility or linearity failures abort with the step log intact: they
//! would mean the comparison does not force a unique coefficient the way the
//! derivation predicts.

use thiserror::Error;

use num_traits::One;

use crate::arith::{rational_to_f64, ArithError, Poly, Rational, SymbolTable};
use crate::means::{catalan, lc_coefficient_poly};
use crate::series::{MeanSeries, SeriesError};
use crate::symmetry::series::{s_coeffs, sigma_coeffs};

#[derive(Debug, Clone, Error, PartialEq)]
pub enum DiscoveryError {
    #[error("order must lie in [2, {max}], got {got}")]
    OrderOutOfRange { got: usize, max: usize },
    #[error(
        "step {n}: difference has degree {degree} in the unknown, expected a linear condition"
    )]
    NotLinear { n: usize, degree: u32 },
    #[error("step {n}: condition is not divisible as predicted: {context}")]
    NotDivisible { n: usize, context: String },
    #[error("step {n}: lower-order coefficients left a residual condition")]
    UnexpectedResidual { n: usize },
    #[error("point {y} lies outside the convergence disc |y| < 1/4")]
    OutsideDisc { y: String },
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Arith(#[from] ArithError),
}

/// One solved step of the pipeline.
#[derive(Debug, Clone, PartialEq)]
pub struct DiscoveryStep {
    /// Index of the coefficient solved at this step.
    pub n: usize,
    /// Raw difference `b_{n+1}^S - b_{n+1}^σ` before factoring.
    pub difference: Poly,
    /// The difference with the `(a_1 - c)²` factor removed.
    pub condition: Poly,
    /// The solved coefficient (a polynomial in `c`, in the pipeline table).
    pub solved: Poly,
}

/// Result of a pipeline run: solved coefficients (polynomials in the single
/// symbol `c`) plus the per-step log.
#[derive(Debug, Clone, PartialEq)]
pub struct DiscoveryState {
    pub target_order: usize,
    /// `solved[n]` is the forced n-th expansion coefficient of `M0`, in a
    /// one-symbol table `{c}`; `solved[0] = 1`, `solved[1] = c`.
    pub solved: Vec<Poly>,
    pub steps: Vec<DiscoveryStep>,
}

pub const MAX_DISCOVERY_ORDER: usize = 10;

/// Runs the comparison pipeline up to coefficient `order` (2 ≤ order ≤ 10).
pub fn run_discovery(order: usize) -> Result<DiscoveryState, DiscoveryError> {
    if !(2..=MAX_DISCOVERY_ORDER).contains(&order) {
        return Err(DiscoveryError::OrderOutOfRange {
            got: order,
            max: MAX_DISCOVERY_ORDER,
        });
    }
    let mut names = vec!["c".to_string()];
    for i in 1..=order + 1 {
        names.push(format!("a{i}"));
    }
    names.push("u".to_string());
    let table = SymbolTable::new(names)?;
    let c_sym = table.require("c")?;
    let u_sym = table.require("u")?;
    let a1 = Poly::symbol(&table, table.require("a1")?);
    let c = Poly::symbol(&table, c_sym);
    let u = Poly::symbol(&table, u_sym);
    let factor = (&a1 - &c).pow(2);

    let m1 = {
        let mut coeffs = vec![Poly::int(&table, 1)];
        for i in 1..=order + 1 {
            coeffs.push(Poly::symbol(&table, table.require(&format!("a{i}"))?));
        }
        MeanSeries::new(coeffs)?
    };

    // solved coefficients of M0, kept in the pipeline table while running
    let mut solved: Vec<Poly> = vec![Poly::int(&table, 1), c.clone()];
    let mut steps: Vec<DiscoveryStep> = Vec::new();

    for n in 2..=order {
        // M0 = (1, c, solved.., u, 0): the unknown sits at index n; the
        // index-(n+1) placeholder cancels between the two expansions.
        let mut coeffs = solved.clone();
        coeffs.push(u.clone());
        coeffs.push(Poly::zero(&table));
        let m0 = MeanSeries::new(coeffs)?;

        let s = s_coeffs(&m0, &m1, n + 1)?;
        let sigma = sigma_coeffs(&m0, &m1, n + 1)?;
        for k in 0..=n {
            if s.coeff(k) != sigma.coeff(k) {
                return Err(DiscoveryError::UnexpectedResidual { n });
            }
        }
        let difference = s.coeff(n + 1).checked_sub(sigma.coeff(n + 1))?;

        if let Some((degree, _)) = difference.collect_by(u_sym).iter().find(|(e, _)| *e >= 2) {
            return Err(DiscoveryError::NotLinear { n, degree: *degree });
        }
        let condition =
            difference
                .exact_div(&factor)
                .map_err(|e| DiscoveryError::NotDivisible {
                    n,
                    context: e.to_string(),
                })?;

        let cond_by_u = condition.collect_by(u_sym);
        let linear = cond_by_u
            .iter()
            .find(|(e, _)| *e == 1)
            .map(|(_, p)| p.clone());
        let constant = cond_by_u
            .iter()
            .find(|(e, _)| *e == 0)
            .map(|(_, p)| p.clone())
            .unwrap_or_else(|| Poly::zero(&table));
        let Some(linear) = linear else {
            return Err(DiscoveryError::NotLinear { n, degree: 0 });
        };
        let value =
            constant
                .negated()
                .exact_div(&linear)
                .map_err(|e| DiscoveryError::NotDivisible {
                    n,
                    context: e.to_string(),
                })?;

        steps.push(DiscoveryStep {
            n,
            difference,
            condition,
            solved: value.clone(),
        });
        solved.push(value);
    }

    // Publish the solved list in a clean one-symbol table.
    let c_table = SymbolTable::new(["c"])?;
    let solved = solved
        .iter()
        .map(|p| p.reembed(&c_table))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(DiscoveryState {
        target_order: order,
        solved,
        steps,
    })
}

/// Does every solved coefficient match `(-1)^{n-1} C_{n-1} c^n (1+c)^{n-1}`?
pub fn check_hypothesis(state: &DiscoveryState) -> bool {
    let Ok(table) = SymbolTable::new(["c"]) else {
        return false;
    };
    let Some(c_sym) = table.id("c") else {
        return false;
    };
    state
        .solved
        .iter()
        .enumerate()
        .all(|(n, p)| match p.reembed(&table) {
            Ok(p) => p == lc_coefficient_poly(&table, c_sym, n),
            Err(_) => false,
        })
}

/// Checks the Catalan generating function `Σ C_n y^n = (1-√(1-4y))/(2y)` at
/// an exact point: the partial sum to `order` must agree with the closed
/// form within the geometric tail bound `(4|y|)^{order+1} / (1 - 4|y|)`.
pub fn catalan_gf_check(order: usize, y: &Rational) -> Result<bool, DiscoveryError> {
    let four = Rational::from_integer(4.into());
    let abs4y = rational_to_f64(&(&four * y)).abs();
    if abs4y >= 1.0 {
        return Err(DiscoveryError::OutsideDisc { y: y.to_string() });
    }
    if num_traits::Zero::is_zero(y) {
        // limit convention: the closed form tends to C_0 = 1
        return Ok(true);
    }
    let mut partial = Rational::from_integer(0.into());
    let mut y_pow = Rational::one();
    for n in 0..=order {
        partial += Rational::from_integer(catalan(n as u32)) * &y_pow;
        y_pow *= y;
    }
    let yf = rational_to_f64(y);
    let closed = (1.0 - (1.0 - 4.0 * yf).sqrt()) / (2.0 * yf);
    let tail = abs4y.powi(order as i32 + 1) / (1.0 - abs4y);
    // small slack over the tail bound for the f64 closed-form evaluation
    Ok((rational_to_f64(&partial) - closed).abs() <= tail + 1e-12 * closed.abs())
}
