//! Floating-point grid checks and the high-precision truncation studies.
//!
//! Residuals are scaled the way each acceptance criterion states them
//! (per max(a,b), per value, or per (a+b)²); thresholds are pinned here.

use crate::arith::{rational, rational_to_f64};
use crate::means::{classic_series, lc_series_num, parse_mean, Classic, NumericMean, PreciseMean};
use crate::series::compose_means;
use crate::symmetry::numeric::{
    functional_symmetry, functional_symmetry_lc, group_symmetry, phi, phi_inverse, star,
    GaussSolverConfig,
};
use crate::symmetry::series::{s_coeffs, sigma_coeffs};

use super::support::{precise_group_symmetry, precise_sigma_lc, SplitMix64};
use super::{CheckRecord, VerifyConfig};

const PRECISE_DIGITS: u32 = 60;

fn probe_means(cfg: &VerifyConfig) -> Vec<NumericMean> {
    cfg.probe_means
        .iter()
        .map(|n| parse_mean(n).expect("probe mean name"))
        .collect()
}

fn finite_or_inf(v: f64) -> f64 {
    if v.is_finite() {
        v
    } else {
        f64::INFINITY
    }
}

/// Criterion: the two symmetries with respect to L_c coincide numerically,
/// |S - σ| / max(a,b) over the full (a, b, c, M) grid.
pub fn check_coincidence_grid(cfg: &VerifyConfig) -> CheckRecord {
    let means = probe_means(cfg);
    let mut worst: f64 = 0.0;
    for &c in &cfg.c_list {
        if c < -1.0 {
            continue;
        }
        let lc = NumericMean::lc(c).expect("c >= -1");
        for m in &means {
            let s = group_symmetry(&lc, m);
            let sigma = functional_symmetry_lc(c, m).expect("c >= -1");
            for &(a, b) in &cfg.pairs() {
                let gap = (s.eval(a, b) - sigma.eval(a, b)).abs() / a.max(b);
                worst = worst.max(finite_or_inf(gap));
            }
        }
    }
    cfg.record("coincidence_grid", worst, 1e-9)
}

/// Criterion: the closed form of σ_{L_c} and the Gauss root solver agree,
/// |σ_closed - σ_solver| / max(a,b).
pub fn check_sigma_two_routes(cfg: &VerifyConfig) -> CheckRecord {
    let means = probe_means(cfg);
    let solver_cfg = GaussSolverConfig::default();
    let mut worst: f64 = 0.0;
    for &c in &cfg.c_list {
        if c < -1.0 {
            continue;
        }
        let lc = NumericMean::lc(c).expect("c >= -1");
        for m in &means {
            let closed = functional_symmetry_lc(c, m).expect("c >= -1");
            let solved = functional_symmetry(&lc, m, solver_cfg);
            for &(a, b) in &cfg.pairs() {
                let gap = (closed.eval(a, b) - solved.eval(a, b)).abs() / a.max(b);
                worst = worst.max(finite_or_inf(gap));
            }
        }
    }
    cfg.record("sigma_two_routes", worst, 1e-10)
}

/// Criterion: L_{-1} = H, L_{-1/2} = G, L_0 = A on the grid, relative.
pub fn check_special_cases_grid(cfg: &VerifyConfig) -> CheckRecord {
    let cases = [
        (-1.0, NumericMean::harmonic()),
        (-0.5, NumericMean::geometric()),
        (0.0, NumericMean::arithmetic()),
    ];
    let mut worst: f64 = 0.0;
    for (c, reference) in cases {
        let lc = NumericMean::lc(c).expect("c >= -1");
        for &(a, b) in &cfg.pairs() {
            let expect = reference.eval(a, b);
            let gap = (lc.eval(a, b) - expect).abs() / expect;
            worst = worst.max(finite_or_inf(gap));
        }
    }
    cfg.record("special_cases_grid", worst, 1e-12)
}

/// Criterion: exact coefficient equality of the L_c series with the classic
/// series at c ∈ {-1, -1/2, 0}.
pub fn check_special_cases_coefficients(cfg: &VerifyConfig) -> CheckRecord {
    let order = cfg.series_order.min(12);
    let cases = [
        (rational(-1, 1), Classic::Harmonic),
        (rational(-1, 2), Classic::Geometric),
        (rational(0, 1), Classic::Arithmetic),
    ];
    let mut mismatches = 0usize;
    for (c, classic) in cases {
        let lc = lc_series_num(&c, order);
        let reference = classic_series(classic, order);
        mismatches += (0..=order)
            .filter(|&n| lc.coeff(n) != reference.coeff(n))
            .count();
    }
    cfg.record("special_cases_coefficients", mismatches as f64, 0.0)
}

type PointForm = Box<dyn Fn(f64, f64, f64) -> f64>;

fn classic_forms_worst(
    cfg: &VerifyConfig,
    symmetry_of: impl Fn(&NumericMean, &NumericMean) -> NumericMean,
) -> f64 {
    let means = probe_means(cfg);
    let a_mean = NumericMean::arithmetic();
    let g_mean = NumericMean::geometric();
    let h_mean = NumericMean::harmonic();
    let mut worst: f64 = 0.0;
    for m in &means {
        let cases: [(NumericMean, PointForm); 3] = [
            (
                a_mean.clone(),
                Box::new(|a: f64, b: f64, mv: f64| a + b - mv),
            ),
            (
                g_mean.clone(),
                Box::new(|a: f64, b: f64, mv: f64| a * b / mv),
            ),
            (
                h_mean.clone(),
                Box::new(|a: f64, b: f64, mv: f64| {
                    let h = 2.0 * a * b / (a + b);
                    h * mv / (2.0 * mv - h)
                }),
            ),
        ];
        for (m0, expected) in cases {
            let op = symmetry_of(&m0, m);
            for &(a, b) in &cfg.pairs() {
                let reference = expected(a, b, m.eval(a, b));
                let gap = (op.eval(a, b) - reference).abs() / reference.abs();
                worst = worst.max(finite_or_inf(gap));
            }
        }
    }
    worst
}

/// Criterion: S_A(M) = 2A - M, S_G(M) = G²/M, S_H(M) = HM/(2M - H).
pub fn check_classic_forms_s(cfg: &VerifyConfig) -> CheckRecord {
    let worst = classic_forms_worst(cfg, group_symmetry);
    cfg.record("classic_forms_s", worst, 1e-10)
}

/// Criterion: the same closed forms realized by the Gauss root solver.
pub fn check_classic_forms_sigma(cfg: &VerifyConfig) -> CheckRecord {
    let solver = GaussSolverConfig::default();
    let worst = classic_forms_worst(cfg, |m0, m1| functional_symmetry(m0, m1, solver));
    cfg.record("classic_forms_sigma", worst, 1e-10)
}

/// Criterion: |2(1+c)L² - (a+b)(1+2c)L + 2abc| ≤ tol · (a+b)².
pub fn check_quadratic_identity(cfg: &VerifyConfig) -> CheckRecord {
    let mut worst: f64 = 0.0;
    for &c in &cfg.c_list {
        if c < -1.0 {
            continue;
        }
        let lc = NumericMean::lc(c).expect("c >= -1");
        for &(a, b) in &cfg.pairs() {
            let l = lc.eval(a, b);
            let residual =
                2.0 * (1.0 + c) * l * l - (a + b) * (1.0 + 2.0 * c) * l + 2.0 * a * b * c;
            worst = worst.max(finite_or_inf(residual.abs() / ((a + b) * (a + b))));
        }
    }
    cfg.record("quadratic_identity", worst, 1e-10)
}

/// Criterion: strict betweenness plus symmetry and homogeneity of L_c on
/// random samples; the residual counts violations.
pub fn check_mean_axioms(cfg: &VerifyConfig) -> CheckRecord {
    let mut rng = SplitMix64::new(cfg.seed);
    let mut violations = 0usize;
    let c_choices: Vec<f64> = cfg.c_list.iter().copied().filter(|&c| c >= -1.0).collect();
    for _ in 0..cfg.samples {
        let a = 10.0 * (1.0 - rng.next_f64());
        let b = 10.0 * (1.0 - rng.next_f64());
        let c = c_choices[(rng.next_u64() % c_choices.len() as u64) as usize];
        let lc = NumericMean::lc(c).expect("c >= -1");
        let v = lc.eval(a, b);
        let (lo, hi) = (a.min(b), a.max(b));
        if !(lo <= v && v <= hi) {
            violations += 1;
            continue;
        }
        // strictness, outside a narrow diagonal band where f64 cannot resolve it
        if (a - b).abs() > 1e-9 * (a + b) && !(lo < v && v < hi) {
            violations += 1;
        }
        // symmetry and homogeneity to 1e-12 relative
        if (lc.eval(b, a) - v).abs() > 1e-12 * v.abs() {
            violations += 1;
        }
        let lambda = 0.1 + 9.9 * rng.next_f64();
        if (lc.eval(lambda * a, lambda * b) - lambda * v).abs() > 1e-12 * lambda * v.abs() {
            violations += 1;
        }
    }
    cfg.record("mean_axioms", violations as f64, 0.0)
}

/// Criterion: c ↦ L_c(a,b) is strictly increasing on (-1, ∞): sampled pairs
/// c₁ < c₂ (gap ≥ 1e-4) must give L_{c₁} < L_{c₂}.
pub fn check_parameter_monotonicity(cfg: &VerifyConfig) -> CheckRecord {
    let mut rng = SplitMix64::new(cfg.seed ^ 0xA5A5_A5A5);
    let mut violations = 0usize;
    for _ in 0..cfg.samples {
        let a = 10.0 * (1.0 - rng.next_f64());
        let b = 10.0 * (1.0 - rng.next_f64());
        if (a - b).abs() < 1e-3 * (a + b) {
            continue;
        }
        let c1 = -0.999_999 + 51.0 * rng.next_f64();
        let c2 = -0.999_999 + 51.0 * rng.next_f64();
        if (c1 - c2).abs() < 1e-4 {
            continue;
        }
        let (lo_c, hi_c) = if c1 < c2 { (c1, c2) } else { (c2, c1) };
        let v1 = NumericMean::lc(lo_c).expect("c > -1").eval(a, b);
        let v2 = NumericMean::lc(hi_c).expect("c > -1").eval(a, b);
        if v1.partial_cmp(&v2) != Some(std::cmp::Ordering::Less) {
            violations += 1;
        }
    }
    cfg.record("parameter_monotonicity", violations as f64, 0.0)
}

/// Criterion: the truncation error of the partial sums decays like
/// x^{-2N-1}: the log-error slope between x = 50 and x = 200 must equal
/// -(2N+1) within 0.3, for N ∈ {3,5,8} and c ∈ {-1/2, 1}.
pub fn check_truncation_slope(cfg: &VerifyConfig) -> CheckRecord {
    let t = rational(1, 1);
    let mut worst: f64 = 0.0;
    for c in [rational(-1, 2), rational(1, 1)] {
        let precise = PreciseMean::Lc(c.clone());
        for n in [3usize, 5, 8] {
            let series = lc_series_num(&c, n);
            let err_at = |x: i64| -> f64 {
                let xq = rational(x, 1);
                let reference = precise.eval(&(&xq - &t), &(&xq + &t), PRECISE_DIGITS);
                let partial = series.eval_rational(&xq, &t);
                rational_to_f64(&(reference - partial)).abs()
            };
            let (e50, e200) = (err_at(50), err_at(200));
            let slope = (e200 / e50).ln() / 4.0f64.ln();
            let target = -(2.0 * n as f64 + 1.0);
            worst = worst.max(finite_or_inf((slope - target).abs()));
        }
    }
    cfg.record("truncation_slope", worst, 0.3)
}

/// Criterion: the defining relation of the group symmetry,
/// star(M1, S_{M0}(M1)) = star(M0, M0), scaled by max(a,b).
pub fn check_group_defining_relation(cfg: &VerifyConfig) -> CheckRecord {
    let means = probe_means(cfg);
    let mut worst: f64 = 0.0;
    for m0 in &means {
        let rhs = star(m0, m0);
        for m1 in &means {
            let s = group_symmetry(m0, m1);
            let lhs = star(m1, &s);
            for &(a, b) in &cfg.pairs() {
                let gap = (lhs.eval(a, b) - rhs.eval(a, b)).abs() / a.max(b);
                worst = worst.max(finite_or_inf(gap));
            }
        }
    }
    cfg.record("group_defining_relation", worst, 1e-9)
}

/// Criterion: the explicit composition law agrees with the transported sum
/// φ^{-1}(φ(M1) + φ(M2)); commutativity and A-neutrality ride along.
pub fn check_star_phi_sum(cfg: &VerifyConfig) -> CheckRecord {
    let means = probe_means(cfg);
    let a_mean = NumericMean::arithmetic();
    let mut worst: f64 = 0.0;
    for m1 in &means {
        for m2 in &means {
            let direct = star(m1, m2);
            let flipped = star(m2, m1);
            for &(a, b) in &cfg.pairs() {
                let via_phi = phi_inverse(phi(m1, a, b) + phi(m2, a, b), a, b);
                let v = direct.eval(a, b);
                let gap = (v - via_phi).abs().max((v - flipped.eval(a, b)).abs()) / a.max(b);
                worst = worst.max(finite_or_inf(gap));
            }
        }
        let neutral = star(m1, &a_mean);
        for &(a, b) in &cfg.pairs() {
            let gap = (neutral.eval(a, b) - m1.eval(a, b)).abs() / a.max(b);
            worst = worst.max(finite_or_inf(gap));
        }
    }
    cfg.record("star_phi_sum", worst, 1e-9)
}

/// Invariant: φ(M, x, y) + φ(M, y, x) = 0 up to f64 roundoff.
pub fn check_phi_antisymmetry(cfg: &VerifyConfig) -> CheckRecord {
    let means = probe_means(cfg);
    let mut worst: f64 = 0.0;
    for m in &means {
        if m.name() == "A" {
            continue; // φ(A) is identically zero
        }
        for &(a, b) in &cfg.pairs() {
            worst = worst.max(finite_or_inf((phi(m, a, b) + phi(m, b, a)).abs()));
        }
    }
    cfg.record("phi_antisymmetry", worst, 1e-14)
}

/// Invariant: σ is a complement: σ_{M0}(σ_{M0}(M1)) = M1 pointwise.
pub fn check_sigma_involution(cfg: &VerifyConfig) -> CheckRecord {
    let solver = GaussSolverConfig::default();
    let outer = [parse_mean("G").unwrap(), parse_mean("Lc:0.3").unwrap()];
    let inner = [parse_mean("A").unwrap(), parse_mean("H").unwrap()];
    let mut worst: f64 = 0.0;
    for m0 in &outer {
        for m1 in &inner {
            let once = functional_symmetry(m0, m1, solver);
            let twice = functional_symmetry(m0, &once, solver);
            for &(a, b) in &cfg.pairs() {
                let gap = (twice.eval(a, b) - m1.eval(a, b)).abs() / m1.eval(a, b);
                worst = worst.max(finite_or_inf(gap));
            }
        }
    }
    cfg.record("sigma_involution", worst, 1e-8)
}

const AGREEMENT_ORDER: usize = 6;
/// Safety margin on the empirically fitted truncation constant.
const FIT_MARGIN: f64 = 2.0;
/// Deviations below this are the square-root precision floor of the exact
/// reference path, not truncation error: genuine truncation residuals at
/// x ≤ 200 and order 6 stay above 1e-34, the 60-digit roots below 1e-55.
/// Some pairs (e.g. σ_G(H) = A) have identically polynomial symmetries, so
/// their residuals sit on this floor at every x.
const PRECISION_FLOOR: f64 = 1e-50;

fn bound_ratio(err: f64, k: f64, x: f64) -> f64 {
    if err <= PRECISION_FLOOR {
        return 0.0;
    }
    let bound = FIT_MARGIN * k * x.powi(-(2 * AGREEMENT_ORDER as i32 + 1));
    if bound == 0.0 {
        f64::INFINITY
    } else {
        err / bound
    }
}

/// Invariant: evaluating the b^S and b^σ coefficient series at x = 100, 200
/// matches the exact numeric operators within K·x^{-2N-1}, with K fitted at
/// x = 50. Exercised over all distinct pairs from {G, H, L_{0.3}, L_1}.
pub fn check_series_numeric_agreement(cfg: &VerifyConfig) -> CheckRecord {
    let params = [
        rational(-1, 2),
        rational(-1, 1),
        rational(3, 10),
        rational(1, 1),
    ];
    let t = rational(1, 1);
    let xs = [50i64, 100, 200];
    let mut worst: f64 = 0.0;
    for c0 in &params {
        for c1 in &params {
            if c0 == c1 {
                continue;
            }
            let m0 = lc_series_num(c0, AGREEMENT_ORDER);
            let m1 = lc_series_num(c1, AGREEMENT_ORDER);
            let (Ok(bs), Ok(bsig)) = (
                s_coeffs(&m0, &m1, AGREEMENT_ORDER),
                sigma_coeffs(&m0, &m1, AGREEMENT_ORDER),
            ) else {
                worst = f64::INFINITY;
                continue;
            };
            let p0 = PreciseMean::Lc(c0.clone());
            let p1 = PreciseMean::Lc(c1.clone());
            let mut errs_s = Vec::new();
            let mut errs_sig = Vec::new();
            for &x in &xs {
                let xq = rational(x, 1);
                let (a, b) = (&xq - &t, &xq + &t);
                let ref_s = precise_group_symmetry(&p0, &p1, &a, &b, PRECISE_DIGITS);
                let ref_sig = precise_sigma_lc(c0, &p1, &a, &b, PRECISE_DIGITS);
                errs_s.push(rational_to_f64(&(ref_s - bs.eval_rational(&xq, &t))).abs());
                errs_sig.push(rational_to_f64(&(ref_sig - bsig.eval_rational(&xq, &t))).abs());
            }
            for errs in [errs_s, errs_sig] {
                let k = errs[0] * (xs[0] as f64).powi(2 * AGREEMENT_ORDER as i32 + 1);
                for (i, &x) in xs.iter().enumerate().skip(1) {
                    worst = worst.max(bound_ratio(errs[i], k, x as f64));
                }
            }
        }
    }
    cfg.record("series_numeric_agreement", worst, 1.0)
}

/// Invariant: the composed coefficient series of F(M, N) evaluated at
/// x = 100, 200 agrees with the exact composition within the same fitted
/// truncation bound.
pub fn check_compose_numeric_consistency(cfg: &VerifyConfig) -> CheckRecord {
    // (F, M, N) triples; classic identifications G = L_{-1/2}, A = L_0, H = L_{-1}
    let combos = [
        (rational(3, 10), rational(0, 1), rational(-1, 2)),
        (rational(-1, 2), rational(0, 1), rational(1, 1)),
        (rational(-1, 2), rational(0, 1), rational(-1, 1)),
    ];
    let t = rational(1, 1);
    let xs = [50i64, 100, 200];
    let mut worst: f64 = 0.0;
    for (cf, cm, cn) in combos {
        let f_series = lc_series_num(&cf, AGREEMENT_ORDER);
        let m_series = lc_series_num(&cm, AGREEMENT_ORDER);
        let n_series = lc_series_num(&cn, AGREEMENT_ORDER);
        let Ok(h_series) = compose_means(&f_series, &m_series, &n_series, AGREEMENT_ORDER) else {
            worst = f64::INFINITY;
            continue;
        };
        let pf = PreciseMean::Lc(cf.clone());
        let pm = PreciseMean::Lc(cm.clone());
        let pn = PreciseMean::Lc(cn.clone());
        let mut errs = Vec::new();
        for &x in &xs {
            let xq = rational(x, 1);
            let (a, b) = (&xq - &t, &xq + &t);
            let mv = pm.eval(&a, &b, PRECISE_DIGITS);
            let nv = pn.eval(&a, &b, PRECISE_DIGITS);
            let reference = pf.eval(&mv, &nv, PRECISE_DIGITS);
            errs.push(rational_to_f64(&(reference - h_series.eval_rational(&xq, &t))).abs());
        }
        let k = errs[0] * (xs[0] as f64).powi(2 * AGREEMENT_ORDER as i32 + 1);
        for (i, &x) in xs.iter().enumerate().skip(1) {
            worst = worst.max(bound_ratio(errs[i], k, x as f64));
        }
    }
    cfg.record("compose_numeric_consistency", worst, 1.0)
}
