//! Python bindings: the mean catalog, both symmetry operators, coefficient
//! series and the discovery pipeline, exposed as the `meanforge` module.
//!
//! Exact values (series coefficients, solved polynomials) cross the boundary
//! as strings in the same rendering the CLI uses; numeric evaluation crosses
//! as floats.

use num_bigint::BigInt;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};

use meanforge_core::arith::parse_rational;
use meanforge_core::discovery;
use meanforge_core::means::{self, parse_mean, NumericMean};
use meanforge_core::symmetry::numeric as sym;
use meanforge_core::verify;

fn value_error(message: impl ToString) -> PyErr {
    PyValueError::new_err(message.to_string())
}

/// A bivariate mean on the positive quadrant.
///
/// Construct by name (`Mean("A")`, `Mean("G")`, `Mean("H")`, `Mean("Lc:0.3")`)
/// or via `Mean.lc(c)`. The symmetry operators return new `Mean` objects, so
/// they compose.
#[pyclass(frozen, skip_from_py_object)]
#[derive(Clone)]
struct Mean {
    inner: NumericMean,
}

#[pymethods]
impl Mean {
    #[new]
    fn new(name: &str) -> PyResult<Self> {
        Ok(Mean {
            inner: parse_mean(name).map_err(value_error)?,
        })
    }

    /// The L_c family member for c >= -1.
    #[staticmethod]
    fn lc(c: f64) -> PyResult<Self> {
        Ok(Mean {
            inner: NumericMean::lc(c).map_err(value_error)?,
        })
    }

    #[getter]
    fn name(&self) -> String {
        self.inner.name().to_string()
    }

    fn eval(&self, a: f64, b: f64) -> PyResult<f64> {
        self.inner.try_eval(a, b).map_err(value_error)
    }

    fn __call__(&self, a: f64, b: f64) -> PyResult<f64> {
        self.eval(a, b)
    }

    fn __repr__(&self) -> String {
        format!("Mean({:?})", self.inner.name())
    }
}

/// n-th Catalan number as an arbitrary-precision integer.
#[pyfunction]
fn catalan(n: u32) -> BigInt {
    means::catalan(n)
}

/// Closed-form L_c(a, b).
#[pyfunction]
fn lc_eval(c: f64, a: f64, b: f64) -> PyResult<f64> {
    Mean::lc(c)?.eval(a, b)
}

/// φ(M)(x, y): the antisymmetric transport of a mean.
#[pyfunction]
fn phi(mean: &Mean, x: f64, y: f64) -> f64 {
    sym::phi(&mean.inner, x, y)
}

/// Inverse of φ in its first argument.
#[pyfunction]
fn phi_inverse(v: f64, x: f64, y: f64) -> f64 {
    sym::phi_inverse(v, x, y)
}

/// The composition law M1 ∗ M2.
#[pyfunction]
fn star(m1: &Mean, m2: &Mean) -> Mean {
    Mean {
        inner: sym::star(&m1.inner, &m2.inner),
    }
}

/// Group symmetry S_{M0}(M1).
#[pyfunction]
fn symmetry_s(m0: &Mean, m1: &Mean) -> Mean {
    Mean {
        inner: sym::group_symmetry(&m0.inner, &m1.inner),
    }
}

/// Functional (Gauss-equation) symmetry σ_{M0}(M1), by bracketed bisection.
#[pyfunction]
fn symmetry_sigma(m0: &Mean, m1: &Mean) -> Mean {
    Mean {
        inner: sym::functional_symmetry(&m0.inner, &m1.inner, sym::GaussSolverConfig::default()),
    }
}

/// Closed form of σ_{L_c}(M).
#[pyfunction]
fn sigma_lc(c: f64, m: &Mean) -> PyResult<Mean> {
    Ok(Mean {
        inner: sym::functional_symmetry_lc(c, &m.inner).map_err(value_error)?,
    })
}

/// (|S - σ| gap, factorization residual) of the coincidence identity at one
/// point.
#[pyfunction]
fn coincidence_residual(c: f64, m: &Mean, a: f64, b: f64) -> PyResult<(f64, f64)> {
    let r = sym::coincidence_residual(c, &m.inner, a, b).map_err(value_error)?;
    Ok((r.s_sigma_gap, r.factorization))
}

fn series_to_strings(value: &serde_json::Value) -> Vec<String> {
    value["coeffs"]
        .as_array()
        .map(|coeffs| {
            coeffs
                .iter()
                .filter_map(|c| c.as_str().map(str::to_string))
                .collect()
        })
        .unwrap_or_default()
}

fn named_series(name: &str, order: usize) -> Result<serde_json::Value, String> {
    use meanforge_core::arith::SymbolTable;
    use meanforge_core::means::{classic_series, lc_series_num, lc_series_sym, Classic};
    match name {
        "A" => Ok(classic_series(Classic::Arithmetic, order).json()),
        "G" => Ok(classic_series(Classic::Geometric, order).json()),
        "H" => Ok(classic_series(Classic::Harmonic, order).json()),
        "Lc-sym" => {
            let table = SymbolTable::new(["c"]).map_err(|e| e.to_string())?;
            let c = table.id("c").expect("fresh table");
            Ok(lc_series_sym(&table, c, order)
                .map_err(|e| e.to_string())?
                .json())
        }
        _ => {
            if let Some(value) = name.strip_prefix("Lc:") {
                let c = parse_rational(value).map_err(|e| e.to_string())?;
                return Ok(lc_series_num(&c, order).json());
            }
            Err(format!("unknown series name `{name}`"))
        }
    }
}

/// Expansion coefficients of a catalog mean (`A`, `G`, `H`, `Lc:<value>`,
/// or `Lc-sym` for the symbolic family) as exact strings.
#[pyfunction]
fn mean_series(name: &str, order: usize) -> PyResult<Vec<String>> {
    named_series(name, order)
        .map(|v| series_to_strings(&v))
        .map_err(value_error)
}

/// Coefficients of the symmetry expansion (`which` is "S" or "sigma") of the
/// named base mean against a fully symbolic probe mean.
#[pyfunction]
fn symmetry_series(m0: &str, which: &str, order: usize) -> PyResult<Vec<String>> {
    use meanforge_core::arith::{Poly, SymbolTable};
    use meanforge_core::means::{lc_series_num, lc_series_sym};
    use meanforge_core::series::MeanSeries;
    use meanforge_core::symmetry::series::{s_coeffs, sigma_coeffs};

    if order > 12 {
        return Err(value_error("symbolic order exceeds the cap of 12"));
    }
    let mut names: Vec<String> = Vec::new();
    if m0 == "Lc-sym" {
        names.push("c".to_string());
    }
    for i in 1..=order {
        names.push(format!("a{i}"));
    }
    let table = SymbolTable::new(names).map_err(value_error)?;
    let m0_series = if m0 == "Lc-sym" {
        let c = table.id("c").expect("declared above");
        lc_series_sym(&table, c, order).map_err(value_error)?
    } else {
        let numeric = match m0 {
            "A" => lc_series_num(&parse_rational("0").unwrap(), order),
            "G" => lc_series_num(&parse_rational("-1/2").unwrap(), order),
            "H" => lc_series_num(&parse_rational("-1").unwrap(), order),
            _ => {
                let value = m0
                    .strip_prefix("Lc:")
                    .ok_or_else(|| value_error(format!("unknown mean `{m0}`")))?;
                lc_series_num(&parse_rational(value).map_err(value_error)?, order)
            }
        };
        numeric
            .map(|c| Poly::constant(&table, c.clone()))
            .map_err(value_error)?
    };
    let mut coeffs = vec![Poly::int(&table, 1)];
    for i in 1..=order {
        coeffs.push(Poly::symbol(
            &table,
            table.id(&format!("a{i}")).expect("declared above"),
        ));
    }
    let m1_series = MeanSeries::new(coeffs).map_err(value_error)?;
    let series = match which {
        "S" => s_coeffs(&m0_series, &m1_series, order).map_err(value_error)?,
        "sigma" => sigma_coeffs(&m0_series, &m1_series, order).map_err(value_error)?,
        _ => return Err(value_error("`which` must be \"S\" or \"sigma\"")),
    };
    Ok(series.coeffs().iter().map(|c| c.to_string()).collect())
}

/// Runs the coefficient-comparison pipeline and returns a dict with the
/// solved coefficients, the step log, and the hypothesis flag.
#[pyfunction]
fn discover(py: Python<'_>, order: usize) -> PyResult<Py<PyDict>> {
    let state = discovery::run_discovery(order).map_err(value_error)?;
    let out = PyDict::new(py);
    out.set_item("order", state.target_order)?;
    out.set_item("matches_hypothesis", discovery::check_hypothesis(&state))?;
    let solved: Vec<String> = state.solved.iter().map(|p| p.to_string()).collect();
    out.set_item("solved", solved)?;
    let steps = PyList::empty(py);
    for step in &state.steps {
        let d = PyDict::new(py);
        d.set_item("n", step.n)?;
        d.set_item("difference", step.difference.to_string())?;
        d.set_item("condition", step.condition.to_string())?;
        d.set_item("solved", step.solved.to_string())?;
        steps.append(d)?;
    }
    out.set_item("steps", steps)?;
    Ok(out.into())
}

/// Checks the Catalan generating-function identity at an exact point given
/// as a rational string such as "1/8".
#[pyfunction]
fn catalan_gf_check(order: usize, y: &str) -> PyResult<bool> {
    let y = parse_rational(y).map_err(value_error)?;
    discovery::catalan_gf_check(order, &y).map_err(value_error)
}

/// Runs the verification catalog and returns the report as a JSON string.
#[pyfunction]
#[pyo3(signature = (seed=42, samples=10_000, series_order=8))]
fn verify_report_json(seed: u64, samples: usize, series_order: usize) -> PyResult<String> {
    let cfg = verify::VerifyConfig {
        seed,
        samples,
        series_order,
        ..verify::VerifyConfig::default()
    };
    let report = verify::run_all(&cfg);
    serde_json::to_string_pretty(&report).map_err(value_error)
}

#[pymodule]
fn meanforge(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Mean>()?;
    m.add_function(wrap_pyfunction!(catalan, m)?)?;
    m.add_function(wrap_pyfunction!(lc_eval, m)?)?;
    m.add_function(wrap_pyfunction!(phi, m)?)?;
    m.add_function(wrap_pyfunction!(phi_inverse, m)?)?;
    m.add_function(wrap_pyfunction!(star, m)?)?;
    m.add_function(wrap_pyfunction!(symmetry_s, m)?)?;
    m.add_function(wrap_pyfunction!(symmetry_sigma, m)?)?;
    m.add_function(wrap_pyfunction!(sigma_lc, m)?)?;
    m.add_function(wrap_pyfunction!(coincidence_residual, m)?)?;
    m.add_function(wrap_pyfunction!(mean_series, m)?)?;
    m.add_function(wrap_pyfunction!(symmetry_series, m)?)?;
    m.add_function(wrap_pyfunction!(discover, m)?)?;
    m.add_function(wrap_pyfunction!(catalan_gf_check, m)?)?;
    m.add_function(wrap_pyfunction!(verify_report_json, m)?)?;
    Ok(())
}
