//! Mean selectors: `A | G | H | Lc-sym | Lc:<value> | file:<path>` for base
//! means and additionally `symbolic` for the probe mean. Symbolic requests
//! run over a polynomial coefficient ring; numeric requests stay exact
//! rational.

use std::sync::Arc;

use serde_json::Value;

use meanforge_core::arith::{parse_rational, rational, Poly, Rational, SymbolTable};
use meanforge_core::means::{classic_series, lc_series_num, lc_series_sym, Classic};
use meanforge_core::series::MeanSeries;
use meanforge_core::symmetry::series::{s_coeffs, sigma_coeffs};

/// Symbolic runs beyond this order are rejected to bound runtime.
pub const SYMBOLIC_ORDER_CAP: usize = 12;

fn lc_parameter(text: &str) -> Result<Rational, String> {
    let c = parse_rational(text).map_err(|e| e.to_string())?;
    if c < rational(-1, 1) {
        return Err(format!("parameter c = {c} is outside [-1, ∞)"));
    }
    Ok(c)
}

fn numeric_series(name: &str, order: usize) -> Result<MeanSeries<Rational>, String> {
    match name {
        "A" => Ok(classic_series(Classic::Arithmetic, order)),
        "G" => Ok(classic_series(Classic::Geometric, order)),
        "H" => Ok(classic_series(Classic::Harmonic, order)),
        _ => {
            if let Some(value) = name.strip_prefix("Lc:") {
                return Ok(lc_series_num(&lc_parameter(value)?, order));
            }
            if let Some(path) = name.strip_prefix("file:") {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| format!("cannot read `{path}`: {e}"))?;
                let value: Value = serde_json::from_str(&text)
                    .map_err(|e| format!("`{path}` is not JSON: {e}"))?;
                let series = MeanSeries::from_json(&value)?;
                return series.truncated(order).map_err(|_| {
                    format!(
                        "`{path}` holds order {} but order {order} was requested",
                        series.order()
                    )
                });
            }
            Err(format!(
                "unknown mean `{name}` (expected A, G, H, Lc-sym, Lc:<value> or file:<path>)"
            ))
        }
    }
}

/// The expansion of `--m0` itself, as a `{order, mode, coeffs}` JSON value.
pub fn series_of(m0: &str, order: usize) -> Result<Value, String> {
    if m0 == "Lc-sym" {
        if order > SYMBOLIC_ORDER_CAP {
            return Err(format!(
                "symbolic order {order} exceeds the cap of {SYMBOLIC_ORDER_CAP}"
            ));
        }
        let table = SymbolTable::new(["c"]).map_err(|e| e.to_string())?;
        let c = table.id("c").expect("fresh table");
        let series = lc_series_sym(&table, c, order).map_err(|e| e.to_string())?;
        return Ok(series.json());
    }
    Ok(numeric_series(m0, order)?.json())
}

fn symbolic_inputs(
    m0: &str,
    m1: &str,
    order: usize,
) -> Result<(MeanSeries<Poly>, MeanSeries<Poly>), String> {
    let mut names: Vec<String> = Vec::new();
    if m0 == "Lc-sym" {
        names.push("c".to_string());
    }
    if m1 == "symbolic" {
        for i in 1..=order {
            names.push(format!("a{i}"));
        }
    }
    let table: Arc<SymbolTable> = SymbolTable::new(names).map_err(|e| e.to_string())?;

    let constant_series = |name: &str| -> Result<MeanSeries<Poly>, String> {
        let numeric = numeric_series(name, order)?;
        numeric
            .map(|c| Poly::constant(&table, c.clone()))
            .map_err(|e| e.to_string())
    };
    let series0 = if m0 == "Lc-sym" {
        let c = table.id("c").expect("declared above");
        lc_series_sym(&table, c, order).map_err(|e| e.to_string())?
    } else {
        constant_series(m0)?
    };
    let series1 = if m1 == "symbolic" {
        let mut coeffs = vec![Poly::int(&table, 1)];
        for i in 1..=order {
            coeffs.push(Poly::symbol(
                &table,
                table.id(&format!("a{i}")).expect("declared above"),
            ));
        }
        MeanSeries::new(coeffs).map_err(|e| e.to_string())?
    } else {
        constant_series(m1)?
    };
    Ok((series0, series1))
}

/// The `b^S` and/or `b^σ` coefficient series for the `(m0, m1)` pair.
pub fn operator_series(
    m0: &str,
    m1: &str,
    order: usize,
    need_s: bool,
    need_sigma: bool,
) -> Result<(Option<Value>, Option<Value>), String> {
    let symbolic = m0 == "Lc-sym" || m1 == "symbolic";
    if symbolic && order > SYMBOLIC_ORDER_CAP {
        return Err(format!(
            "symbolic order {order} exceeds the cap of {SYMBOLIC_ORDER_CAP}"
        ));
    }
    if symbolic {
        let (series0, series1) = symbolic_inputs(m0, m1, order)?;
        let s = need_s
            .then(|| s_coeffs(&series0, &series1, order).map(|v| v.json()))
            .transpose()
            .map_err(|e| e.to_string())?;
        let sigma = need_sigma
            .then(|| sigma_coeffs(&series0, &series1, order).map(|v| v.json()))
            .transpose()
            .map_err(|e| e.to_string())?;
        Ok((s, sigma))
    } else {
        let series0 = numeric_series(m0, order)?;
        let series1 = numeric_series(m1, order)?;
        let s = need_s
            .then(|| s_coeffs(&series0, &series1, order).map(|v| v.json()))
            .transpose()
            .map_err(|e| e.to_string())?;
        let sigma = need_sigma
            .then(|| sigma_coeffs(&series0, &series1, order).map(|v| v.json()))
            .transpose()
            .map_err(|e| e.to_string())?;
        Ok((s, sigma))
    }
}
