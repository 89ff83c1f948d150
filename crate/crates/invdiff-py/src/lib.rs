//! Python bindings. Results that the CLI emits as JSON come back as the same
//! dicts (integers as decimal strings); `Form` exposes the exact invariants.

use invdiff::arith::Rat;
use invdiff::classgrp::{class_group as cg, sqrt_inverse_different, DISC_CAP};
use invdiff::etale::RfOrder;
use invdiff::forms::{discriminant, height, real_signature};
use invdiff::localfield::{global_sqrt_criterion, is_maximal};
use invdiff::orbits::{construct_pair, det_pencil, trivial_datum};
use invdiff::{BinaryForm, Error};
use num_bigint::BigInt;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use serde_json::{json, Value};

fn err(e: Error) -> PyErr {
    match e {
        Error::InvalidInput(_) => PyValueError::new_err(e.to_string()),
        _ => PyRuntimeError::new_err(e.to_string()),
    }
}

fn to_py<'py>(py: Python<'py>, v: &Value) -> PyResult<Bound<'py, PyAny>> {
    py.import("json")?.call_method1("loads", (v.to_string(),))
}

#[pyclass(name = "Form", frozen)]
struct PyForm {
    inner: BinaryForm,
}

#[pymethods]
impl PyForm {
    /// Coefficients f_0, …, f_n of Σ f_i x^{n−i} z^i.
    #[new]
    fn new(coeffs: Vec<BigInt>) -> PyResult<PyForm> {
        Ok(PyForm { inner: BinaryForm::new(coeffs).map_err(err)? })
    }

    #[getter]
    fn coeffs(&self) -> Vec<BigInt> {
        self.inner.coeffs.clone()
    }

    #[getter]
    fn degree(&self) -> usize {
        self.inner.degree()
    }

    fn discriminant(&self) -> BigInt {
        discriminant(&self.inner)
    }

    /// (r1, r2)
    fn signature(&self) -> PyResult<(usize, usize)> {
        let s = real_signature(&self.inner).map_err(err)?;
        Ok((s.r1, s.r2))
    }

    fn is_maximal(&self) -> PyResult<bool> {
        is_maximal(&self.inner).map_err(err)
    }

    /// Exact test H(F) < X for a rational X given as a string such as "7/2".
    fn height_below(&self, x: &str) -> PyResult<bool> {
        let x: Rat = x.parse().map_err(|_| PyValueError::new_err(format!("{x} is not a rational")))?;
        Ok(height(&self.inner).map_err(err)?.less_than(&x))
    }

    /// "guaranteed", "obstructed" or "unknown" (odd degree).
    fn sqrt_criterion(&self) -> PyResult<String> {
        Ok(format!("{:?}", global_sqrt_criterion(&self.inner).map_err(err)?).to_lowercase())
    }

    /// (A, B) for the canonical datum: (R_F, 1) for monic F, (I_F^{(n−2)/2}, 1) for even n.
    fn golden_pair(&self) -> PyResult<(Vec<Vec<BigInt>>, Vec<Vec<BigInt>>)> {
        let ord = RfOrder::new(&self.inner).map_err(err)?;
        let p = construct_pair(&ord, &trivial_datum(&ord).map_err(err)?).map_err(err)?;
        Ok((p.a, p.b))
    }

    fn __repr__(&self) -> String {
        let c: Vec<String> = self.inner.coeffs.iter().map(|x| x.to_string()).collect();
        format!("Form([{}])", c.join(", "))
    }
}

/// Coefficients of det(xA + zB).
#[pyfunction]
fn pencil(a: Vec<Vec<BigInt>>, b: Vec<Vec<BigInt>>) -> Vec<BigInt> {
    det_pencil(&invdiff::orbits::SymPair { a, b })
}

#[pyfunction]
#[pyo3(signature = (coeffs, disc_cap = DISC_CAP))]
fn class_group<'py>(py: Python<'py>, coeffs: Vec<BigInt>, disc_cap: u64) -> PyResult<Bound<'py, PyAny>> {
    let f = BinaryForm::new(coeffs).map_err(err)?;
    let d = cg(&f, disc_cap).map_err(err)?;
    let s = sqrt_inverse_different(&d).map_err(err)?;
    to_py(py, &d.to_json(Some(s)))
}

#[pyfunction]
fn census<'py>(py: Python<'py>, n: usize, p: u64, nu: u32) -> PyResult<Bound<'py, PyAny>> {
    to_py(py, &invdiff::densities::census_mod_p2(n, p, nu).map_err(err)?.to_json())
}

#[pyfunction]
#[pyo3(signature = (n, f0, height, cl2 = false))]
fn enumerate<'py>(py: Python<'py>, n: usize, f0: i64, height: &str, cl2: bool) -> PyResult<Bound<'py, PyAny>> {
    use invdiff::enumerate::{classify_forms, forms_below, summarize};
    let x: Rat = height.parse().map_err(|_| PyValueError::new_err(format!("{height} is not a rational")))?;
    let forms = forms_below(n, f0, &x).map_err(err)?;
    let rows = classify_forms(&forms, cl2, DISC_CAP).map_err(err)?;
    let v = json!({
        "forms": rows.iter().map(|r| r.to_json()).collect::<Vec<_>>(),
        "summary": summarize(forms.len(), &rows).to_json(n, f0),
    });
    to_py(py, &v)
}

#[pyfunction]
#[pyo3(signature = (form, p, r = 1))]
fn ff_orbits<'py>(py: Python<'py>, form: [u64; 3], p: u64, r: u64) -> PyResult<Bound<'py, PyAny>> {
    let f = [1, form[0] % p, form[1] % p, form[2] % p];
    let t = invdiff::ffcensus::enumerate_orbits(&f, p, r).map_err(err)?;
    to_py(py, &t.to_json())
}

#[pyfunction]
#[pyo3(signature = (suite, seed = invdiff::suites::DEFAULT_SEED))]
fn verify<'py>(py: Python<'py>, suite: &str, seed: u64) -> PyResult<Bound<'py, PyAny>> {
    to_py(py, &invdiff::suites::run(suite, seed).map_err(err)?.to_json())
}

#[pymodule]
fn invdiff_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyForm>()?;
    m.add_function(wrap_pyfunction!(pencil, m)?)?;
    m.add_function(wrap_pyfunction!(class_group, m)?)?;
    m.add_function(wrap_pyfunction!(census, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate, m)?)?;
    m.add_function(wrap_pyfunction!(ff_orbits, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add("SUITES", invdiff::suites::SUITES.to_vec())?;
    Ok(())
}
