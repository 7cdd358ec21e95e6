//! Exact (polynomial-identity) checks: the discovery reproduction, the
//! series-level coincidence of the two symmetries, the printed coefficient
//! regressions, and the randomized series-operation oracles. Residuals count
//! failed exact identities, so the pinned threshold is zero.

use std::sync::Arc;

use crate::arith::{rational, Poly, Rational, SymbolTable};
use crate::discovery::{check_hypothesis, run_discovery};
use crate::means::{lc_coefficient_poly, lc_series_sym};
use crate::series::{compose_means, MeanSeries, PlainSeries};
use crate::symmetry::series::{s_coeffs, sigma_coeffs, verify_c2_relation};

use super::support::SplitMix64;
use super::{CheckRecord, VerifyConfig};

/// Criterion: `discover --order 6` reproduces the Catalan table
/// c_n = (-1)^{n-1} C_{n-1} c^n (1+c)^{n-1} exactly, every step divisible by
/// (a_1 - c)² (the pipeline aborts otherwise).
pub fn check_discovery_catalan_table(cfg: &VerifyConfig) -> CheckRecord {
    let residual = match run_discovery(6) {
        Err(_) => 1.0 + 6.0,
        Ok(state) => {
            let table = SymbolTable::new(["c"]).unwrap();
            let c_sym = table.id("c").unwrap();
            let mut mismatches = 0usize;
            for (n, solved) in state.solved.iter().enumerate() {
                if *solved != lc_coefficient_poly(&table, c_sym, n) {
                    mismatches += 1;
                }
            }
            if !check_hypothesis(&state) {
                mismatches += 1;
            }
            mismatches as f64
        }
    };
    cfg.record("discovery_catalan_table", residual, 0.0)
}

fn symbolic_pair(order: usize) -> (Arc<SymbolTable>, MeanSeries<Poly>, MeanSeries<Poly>) {
    let mut names = vec!["c".to_string()];
    for i in 1..=order {
        names.push(format!("a{i}"));
    }
    let table = SymbolTable::new(names).unwrap();
    let c_sym = table.id("c").unwrap();
    let m0 = lc_series_sym(&table, c_sym, order).unwrap();
    let mut coeffs = vec![Poly::int(&table, 1)];
    for i in 1..=order {
        coeffs.push(Poly::symbol(&table, table.id(&format!("a{i}")).unwrap()));
    }
    (table, m0, MeanSeries::new(coeffs).unwrap())
}

/// Criterion: with M0 the symbolic L_c series and M1 fully symbolic,
/// b_n^S - b_n^σ = 0 as polynomials for every n up to the configured order.
pub fn check_series_coincidence(cfg: &VerifyConfig) -> CheckRecord {
    let order = cfg.series_order.min(12);
    let (_, m0, m1) = symbolic_pair(order);
    let residual = match (s_coeffs(&m0, &m1, order), sigma_coeffs(&m0, &m1, order)) {
        (Ok(s), Ok(sigma)) => (0..=order)
            .filter(|&n| s.coeff(n) != sigma.coeff(n))
            .count() as f64,
        _ => (order + 1) as f64,
    };
    cfg.record("series_coincidence", residual, 0.0)
}

/// Criterion: the closed forms of b_1^S, b_2^S, b_3^S over free coefficients
/// and the exact second-order relation of the sigma recursion.
pub fn check_printed_coefficient_forms(cfg: &VerifyConfig) -> CheckRecord {
    let mut names = Vec::new();
    for i in 1..=3 {
        names.push(format!("a{i}"));
    }
    for i in 1..=3 {
        names.push(format!("c{i}"));
    }
    let t = SymbolTable::new(names).unwrap();
    let sym = |n: &str| Poly::symbol(&t, t.id(n).unwrap());
    let (a1, a2, a3) = (sym("a1"), sym("a2"), sym("a3"));
    let (c1, c2, c3) = (sym("c1"), sym("c2"), sym("c3"));
    let two = rational(2, 1);
    let three = rational(3, 1);

    let m0 = MeanSeries::new(vec![Poly::int(&t, 1), c1.clone(), c2.clone(), c3.clone()]).unwrap();
    let m1 = MeanSeries::new(vec![Poly::int(&t, 1), a1.clone(), a2.clone(), a3.clone()]).unwrap();

    let mut mismatches = 0usize;
    match s_coeffs(&m0, &m1, 3) {
        Err(_) => mismatches += 4,
        Ok(b) => {
            let golden1 = &c1.scale(&two) - &a1;
            let golden2 = &(&c2.scale(&two) - &a2) - &(&c1 * &(&a1 - &c1).pow(2)).scale(&two);
            let inner = &(&(&a2 * &c1).scale(&two)
                + &(&c1.pow(2)
                    * &(&(&a1.pow(2).scale(&two) - &(&a1 * &c1).scale(&three)) + &c1.pow(2))))
                + &(&(&a1 - &c1.scale(&three)) * &c2);
            let golden3 = &(&c3.scale(&two) - &a3) - &(&(&a1 - &c1) * &inner).scale(&two);
            for (n, golden) in [(1usize, golden1), (2, golden2), (3, golden3)] {
                if *b.coeff(n) != golden {
                    mismatches += 1;
                }
            }
        }
    }
    match sigma_coeffs(&m0, &m1, 2) {
        Err(_) => mismatches += 1,
        Ok(sigma) => {
            if !verify_c2_relation(m1.coeffs(), sigma.coeffs(), m0.coeffs()) {
                mismatches += 1;
            }
        }
    }
    cfg.record("printed_coefficient_forms", mismatches as f64, 0.0)
}

fn random_poly(rng: &mut SplitMix64, table: &Arc<SymbolTable>) -> Poly {
    let mut p = Poly::zero(table);
    for _ in 0..=(rng.next_u64() % 3) {
        let coeff = (rng.next_u64() % 7) as i64 - 3;
        let mut term = Poly::int(table, coeff);
        for id in table.symbols() {
            let e = (rng.next_u64() % 3) as u32;
            term = term.checked_mul(&Poly::symbol_pow(table, id, e)).unwrap();
        }
        p = p.checked_add(&term).unwrap();
    }
    p
}

fn random_unit_series(
    rng: &mut SplitMix64,
    table: &Arc<SymbolTable>,
    order: usize,
) -> PlainSeries<Poly> {
    let mut coeffs = vec![Poly::int(table, 1)];
    for _ in 0..order {
        coeffs.push(random_poly(rng, table));
    }
    PlainSeries::new(coeffs)
}

/// Criterion: the series-operation oracles on random symbolic inputs —
/// quotient inverts multiplication, powers add exponents, and composing with
/// the arithmetic outer mean averages coefficients. All identities exact.
pub fn check_series_oracles(cfg: &VerifyConfig) -> CheckRecord {
    let order = cfg.series_order.min(8);
    let table = SymbolTable::new(["p", "q"]).unwrap();
    let mut rng = SplitMix64::new(cfg.seed ^ 0x5E1E5);
    let mut failures = 0usize;

    // quotient round trip: mul(quotient(f, g), g) = f
    for _ in 0..4 {
        let f = random_unit_series(&mut rng, &table, order);
        let g = random_unit_series(&mut rng, &table, order);
        match f.quotient(&g, order).and_then(|q| q.mul(&g, order)) {
            Ok(back) => {
                if back != f {
                    failures += 1;
                }
            }
            Err(_) => failures += 1,
        }
    }

    // power additivity: s^r1 · s^r2 = s^(r1+r2)
    let exponents: [Rational; 6] = [
        rational(-2, 1),
        rational(-1, 1),
        rational(1, 2),
        rational(1, 1),
        rational(2, 1),
        rational(3, 1),
    ];
    let s = random_unit_series(&mut rng, &table, order);
    for r1 in &exponents {
        for r2 in &exponents {
            let lhs = s
                .power(r1, order)
                .and_then(|p1| s.power(r2, order).and_then(|p2| p1.mul(&p2, order)));
            let rhs = s.power(&(r1 + r2), order);
            match (lhs, rhs) {
                (Ok(l), Ok(r)) => {
                    if l != r {
                        failures += 1;
                    }
                }
                _ => failures += 1,
            }
        }
    }
    // s^0 is the unit series
    if let Ok(p0) = s.power(&rational(0, 1), order) {
        if p0.coeffs()[1..].iter().any(|c| !c.is_zero()) || !p0.coeff(0).is_one() {
            failures += 1;
        }
    } else {
        failures += 1;
    }

    // composing under the arithmetic outer mean averages the coefficients
    let a_series = {
        let mut coeffs = vec![Poly::int(&table, 1)];
        coeffs.resize(order + 1, Poly::zero(&table));
        MeanSeries::new(coeffs).unwrap()
    };
    for _ in 0..3 {
        let m = MeanSeries::from_plain(random_unit_series(&mut rng, &table, order)).unwrap();
        let n = MeanSeries::from_plain(random_unit_series(&mut rng, &table, order)).unwrap();
        match compose_means(&a_series, &m, &n, order) {
            Ok(h) => {
                let half = rational(1, 2);
                for i in 0..=order {
                    let avg = m.coeff(i).checked_add(n.coeff(i)).unwrap().scale(&half);
                    if *h.coeff(i) != avg {
                        failures += 1;
                    }
                }
            }
            Err(_) => failures += 1,
        }
    }

    cfg.record("series_oracles", failures as f64, 0.0)
}
