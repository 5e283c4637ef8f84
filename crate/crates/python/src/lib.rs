//! Python bindings. Curves are passed as two integer lists `q`, `p`;
//! polynomials and words come back in their text forms.

use num_complex::Complex64;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use plumbing_trace::coords::{self, FlpTriple};
use plumbing_trace::fuzz::{chord_diagram_oracle, random_coords as sample_coords, FuzzConfig};
use plumbing_trace::holonomy::{self, evaluate_word};
use plumbing_trace::position::{compile_word, components_of};
use plumbing_trace::{verify as top, DtCoordinates, HolonomyWord, PantsDecomposition};

fn err(e: plumbing_trace::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// A validated pants decomposition.
#[pyclass(name = "Surface", frozen)]
struct Surface {
    inner: PantsDecomposition,
}

#[pymethods]
impl Surface {
    /// Parses a surface spec given as text.
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        Ok(Surface { inner: PantsDecomposition::parse(text).map_err(err)? })
    }

    #[staticmethod]
    fn builtin(name: &str) -> PyResult<Self> {
        PantsDecomposition::builtin(name)
            .map(|inner| Surface { inner })
            .ok_or_else(|| PyValueError::new_err(format!("unknown built-in surface `{name}`")))
    }

    #[staticmethod]
    fn from_file(path: &str) -> PyResult<Self> {
        Ok(Surface { inner: PantsDecomposition::from_file(std::path::Path::new(path)).map_err(err)? })
    }

    #[getter]
    fn genus(&self) -> usize {
        self.inner.genus()
    }

    #[getter]
    fn boundary(&self) -> usize {
        self.inner.boundary()
    }

    #[getter]
    fn xi(&self) -> usize {
        self.inner.xi()
    }

    #[getter]
    fn pants_count(&self) -> usize {
        self.inner.pants_count()
    }

    fn __repr__(&self) -> String {
        format!("Surface(genus={}, boundary={}, xi={})", self.inner.genus(), self.inner.boundary(), self.inner.xi())
    }
}

fn dt(q: Vec<i64>, p: Vec<i64>) -> DtCoordinates {
    DtCoordinates::new(q, p)
}

/// Canonical trace of each component.
#[pyfunction]
fn trace(surface: &Surface, q: Vec<i64>, p: Vec<i64>) -> PyResult<Vec<String>> {
    Ok(holonomy::trace_of_curve(&surface.inner, &dt(q, p)).map_err(err)?.iter().map(|t| t.to_string()).collect())
}

/// Holonomy word of each component; pants-curve components give `None`.
#[pyfunction]
fn word(surface: &Surface, q: Vec<i64>, p: Vec<i64>) -> PyResult<Vec<Option<String>>> {
    let cc = components_of(&surface.inner, &dt(q, p)).map_err(err)?;
    cc.components
        .iter()
        .map(|c| match c.pants_curve {
            Some(_) => Ok(None),
            None => Ok(Some(compile_word(&surface.inner, c).map_err(err)?.to_string())),
        })
        .collect()
}

/// Canonical trace and matrix of a word in text form.
#[pyfunction]
fn eval_word(text: &str) -> PyResult<(String, String)> {
    let w: HolonomyWord = text.parse().map_err(err)?;
    let m = evaluate_word(&w).map_err(err)?;
    Ok((m.trace().canonical_sign().map_err(err)?.to_string(), m.to_string()))
}

/// Top-term check for a connected curve.
#[pyfunction]
fn verify<'py>(py: Python<'py>, surface: &Surface, q: Vec<i64>, p: Vec<i64>) -> PyResult<Bound<'py, PyDict>> {
    let r = top::verify(&surface.inner, &dt(q, p)).map_err(err)?;
    let d = PyDict::new(py);
    d.set_item("pass", r.pass)?;
    d.set_item("trace", &r.trace)?;
    d.set_item("h", r.h)?;
    d.set_item("leading", &r.leading_coefficient)?;
    d.set_item("predicted_leading", &r.predicted_leading)?;
    d.set_item("failures", r.failures())?;
    Ok(d)
}

#[pyfunction]
fn component_count(surface: &Surface, q: Vec<i64>, p: Vec<i64>) -> PyResult<(usize, usize)> {
    let c = dt(q, p);
    let ours = components_of(&surface.inner, &c).map_err(err)?.len();
    let oracle = chord_diagram_oracle(&surface.inner, &c).map_err(err)?.components;
    Ok((ours, oracle))
}

#[pyfunction]
fn dt_to_penner(surface: &Surface, q: Vec<i64>, p: Vec<i64>) -> PyResult<Vec<i64>> {
    Ok(coords::dt_to_penner(&surface.inner, &dt(q, p)).map_err(err)?.p_hat)
}

#[pyfunction]
fn penner_to_dt(surface: &Surface, q: Vec<i64>, p_hat: Vec<i64>) -> PyResult<Vec<i64>> {
    Ok(coords::penner_to_dt(&surface.inner, &q, &p_hat).map_err(err)?.p)
}

/// Arc counts of pants `k`: arcs between slots s and s+1, and scc arcs at each slot.
#[pyfunction]
fn arc_counts(surface: &Surface, q: Vec<i64>, k: usize) -> PyResult<(Vec<i64>, Vec<i64>)> {
    let all = coords::pants_arc_counts(&surface.inner, &q).map_err(err)?;
    let a = all.get(k).ok_or_else(|| PyValueError::new_err(format!("no pants {k}")))?;
    Ok((a.dcc.to_vec(), a.scc.to_vec()))
}

#[pyfunction]
fn flp_from_dt(q: i64, p: i64) -> PyResult<(i64, i64, i64)> {
    let f = coords::flp_from_dt(q, p).map_err(err)?;
    Ok((f.m, f.s, f.t))
}

#[pyfunction]
fn dt_from_flp(m: i64, s: i64, t: i64) -> PyResult<(i64, i64)> {
    coords::dt_from_flp(FlpTriple { m, s, t }).map_err(err)
}

#[pyfunction]
fn kra_tau(tk: Complex64) -> PyResult<Complex64> {
    holonomy::kra_tau(tk).map_err(err)
}

#[pyfunction]
fn kra_tk(tau: Complex64) -> Complex64 {
    holonomy::kra_tk(tau)
}

#[pyfunction]
#[pyo3(signature = (surface, seed, count, max_q=4, max_abs_p=6, connected=true))]
fn random_coords(surface: &Surface, seed: u64, count: usize, max_q: i64, max_abs_p: i64, connected: bool) -> PyResult<Vec<(Vec<i64>, Vec<i64>)>> {
    let mut cfg = FuzzConfig::new(surface.inner.clone(), seed, max_q, count).map_err(err)?;
    cfg.max_abs_p = max_abs_p;
    cfg.connected_only = connected;
    Ok(sample_coords(&cfg).map_err(err)?.into_iter().map(|c| (c.q, c.p)).collect())
}

#[pymodule]
fn plumbtrace(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Surface>()?;
    m.add_function(wrap_pyfunction!(trace, m)?)?;
    m.add_function(wrap_pyfunction!(word, m)?)?;
    m.add_function(wrap_pyfunction!(eval_word, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(component_count, m)?)?;
    m.add_function(wrap_pyfunction!(dt_to_penner, m)?)?;
    m.add_function(wrap_pyfunction!(penner_to_dt, m)?)?;
    m.add_function(wrap_pyfunction!(arc_counts, m)?)?;
    m.add_function(wrap_pyfunction!(flp_from_dt, m)?)?;
    m.add_function(wrap_pyfunction!(dt_from_flp, m)?)?;
    m.add_function(wrap_pyfunction!(kra_tau, m)?)?;
    m.add_function(wrap_pyfunction!(kra_tk, m)?)?;
    m.add_function(wrap_pyfunction!(random_coords, m)?)?;
    Ok(())
}
