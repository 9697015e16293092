//! Python bindings: free-superalgebra elements, the forms map, and the
//! workbench commands returning plain dicts.

use lcs_cli::{run, Command, JobSpec};
use lcs_core::algebra::{
    right_nested_bracket, star, super_bracket, symmetrize, AlgebraElement, GeneratorSet, Word,
};
use lcs_core::forms::phi_map;
use lcs_core::lcs::{compute_ideals, compute_lcs, SeriesName};
use lcs_core::linalg::{ratio, Rational};
use lcs_core::schur::{hook_schur, Partition};
use lcs_core::series::TruncatedSeries;
use lcs_core::LcsError;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyInt, PyTuple};

fn err(e: LcsError) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn fraction<'py>(py: Python<'py>, q: &Rational) -> PyResult<Bound<'py, PyAny>> {
    // big integers cross as decimal strings
    let int = py.get_type::<PyInt>();
    let num = int.call1((q.numer().to_string(),))?;
    let den = int.call1((q.denom().to_string(),))?;
    py.import("fractions")?
        .getattr("Fraction")?
        .call1((num, den))
}

/// A homogeneous-or-not element of the free superalgebra on `m` even and
/// `n` odd letters, with exact rational coefficients.
#[pyclass(name = "Element", module = "lcs_workbench", frozen, from_py_object)]
#[derive(Clone)]
struct PyElement {
    inner: AlgebraElement,
}

impl PyElement {
    fn same_gens(&self, other: &PyElement) -> PyResult<()> {
        if self.inner.gens() == other.inner.gens() {
            Ok(())
        } else {
            Err(PyValueError::new_err("elements live in different algebras"))
        }
    }
}

#[pymethods]
impl PyElement {
    /// The word `letters` (0-based: x's first, then y's) with coefficient 1.
    #[new]
    #[pyo3(signature = (m, n, letters=Vec::new()))]
    fn new(m: usize, n: usize, letters: Vec<u8>) -> PyResult<Self> {
        let gens = GeneratorSet::new(m, n).map_err(err)?;
        if let Some(&bad) = letters.iter().find(|&&l| l as usize >= gens.len()) {
            return Err(PyValueError::new_err(format!("letter {bad} out of range")));
        }
        Ok(Self {
            inner: AlgebraElement::from_word(gens, Word(letters)),
        })
    }

    #[staticmethod]
    fn zero(m: usize, n: usize) -> PyResult<Self> {
        let gens = GeneratorSet::new(m, n).map_err(err)?;
        Ok(Self {
            inner: AlgebraElement::zero(gens),
        })
    }

    /// Super-symmetrization of a word.
    #[staticmethod]
    fn symmetrized(m: usize, n: usize, letters: Vec<u8>) -> PyResult<Self> {
        let gens = GeneratorSet::new(m, n).map_err(err)?;
        Ok(Self {
            inner: symmetrize(&gens, &Word(letters)),
        })
    }

    /// Right-nested super bracket `[a1, [a2, ..., ak]]`.
    #[staticmethod]
    fn nested(items: Vec<PyElement>) -> PyResult<Self> {
        let inner: Vec<_> = items.into_iter().map(|e| e.inner).collect();
        Ok(Self {
            inner: right_nested_bracket(&inner).map_err(err)?,
        })
    }

    fn bracket(&self, other: &PyElement) -> PyResult<Self> {
        self.same_gens(other)?;
        Ok(Self {
            inner: super_bracket(&self.inner, &other.inner).map_err(err)?,
        })
    }

    fn star(&self, other: &PyElement) -> PyResult<Self> {
        self.same_gens(other)?;
        Ok(Self {
            inner: star(&self.inner, &other.inner),
        })
    }

    fn scale(&self, num: i64, den: i64) -> PyResult<Self> {
        if den == 0 {
            return Err(PyValueError::new_err("zero denominator"));
        }
        Ok(Self {
            inner: self.inner.scale(&ratio(num, den)),
        })
    }

    /// Image under the map to even differential forms, rendered as text.
    fn phi(&self) -> String {
        phi_map(&self.inner).to_string()
    }

    fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    /// 0 or 1, or None for a parity-inhomogeneous element.
    fn parity(&self) -> Option<u8> {
        self.inner.parity()
    }

    fn degree(&self) -> Option<Vec<usize>> {
        self.inner.degree().map(|d| d.0)
    }

    /// `{tuple(letters): Fraction}`
    fn terms<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let out = PyDict::new(py);
        for (w, c) in self.inner.terms() {
            out.set_item(PyTuple::new(py, w.letters())?, fraction(py, c)?)?;
        }
        Ok(out)
    }

    fn __add__(&self, other: &PyElement) -> PyResult<Self> {
        self.same_gens(other)?;
        Ok(Self {
            inner: &self.inner + &other.inner,
        })
    }

    fn __sub__(&self, other: &PyElement) -> PyResult<Self> {
        self.same_gens(other)?;
        Ok(Self {
            inner: &self.inner - &other.inner,
        })
    }

    fn __mul__(&self, other: &PyElement) -> PyResult<Self> {
        self.same_gens(other)?;
        Ok(Self {
            inner: &self.inner * &other.inner,
        })
    }

    fn __neg__(&self) -> Self {
        Self {
            inner: -&self.inner,
        }
    }

    fn __eq__(&self, other: &PyElement) -> bool {
        self.inner == other.inner
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Element({})", self.inner)
    }
}

fn series_dict<'py>(py: Python<'py>, s: &TruncatedSeries) -> PyResult<Bound<'py, PyDict>> {
    let out = PyDict::new(py);
    for (k, c) in s.terms() {
        out.set_item(PyTuple::new(py, &k.degree.0)?, fraction(py, c)?)?;
    }
    Ok(out)
}

/// `{"B1": {(a, b, ...): dim}, ..., "N1": ..., "Bbar1": ..., "Z": ...}` up to total degree `max_degree`.
#[pyfunction]
#[pyo3(signature = (m, n, max_degree, k=3, budget=lcs_core::lcs::DEFAULT_BUDGET))]
fn dims<'py>(
    py: Python<'py>,
    m: usize,
    n: usize,
    max_degree: usize,
    k: usize,
    budget: usize,
) -> PyResult<Bound<'py, PyDict>> {
    let gens = GeneratorSet::new(m, n).map_err(err)?;
    let (lie, ideals) = py
        .detach(|| {
            let lie = compute_lcs(gens, max_degree, (k + 1).max(3), budget)?;
            let ideals = compute_ideals(&lie);
            Ok::<_, LcsError>((lie, ideals))
        })
        .map_err(err)?;
    let mut table = lcs_core::lcs::bk_dims(&lie);
    table.merge(lcs_core::lcs::nk_dims(&ideals));
    table.merge(lcs_core::lcs::bbar1_dims(&lie, &ideals).map_err(err)?);
    let out = PyDict::new(py);
    for name in table.series_names() {
        if matches!(name, SeriesName::B(j) | SeriesName::N(j) if j > k) {
            continue;
        }
        let inner = PyDict::new(py);
        for (d, v) in table.series(name) {
            inner.set_item(PyTuple::new(py, &d.0)?, v)?;
        }
        out.set_item(name.to_string(), inner)?;
    }
    Ok(out)
}

/// Hook Schur function `s_λ(u; v)` truncated at total degree `max_degree`.
#[pyfunction]
fn schur<'py>(
    py: Python<'py>,
    parts: Vec<usize>,
    m: usize,
    n: usize,
    max_degree: usize,
) -> PyResult<Bound<'py, PyDict>> {
    let lambda = Partition::new(parts).map_err(err)?;
    series_dict(py, &hook_schur(&lambda, m, n, max_degree))
}

fn parse_command(name: &str) -> PyResult<Command> {
    Ok(match name {
        "dims" => Command::Dims,
        "series" => Command::Series,
        "verify" => Command::Verify,
        "schur" => Command::Schur,
        "conjecture" => Command::Conjecture,
        other => return Err(PyValueError::new_err(format!("unknown command '{other}'"))),
    })
}

/// Runs a workbench job and returns `{"manifest": ..., "rows": [...], "ok": bool}`.
#[pyfunction]
#[pyo3(signature = (command, m, n, max_degree, target=None, k=None, j=None, checks=Vec::new(), seed=0, samples=lcs_core::properties::DEFAULT_SAMPLES, budget=lcs_core::lcs::DEFAULT_BUDGET))]
#[allow(clippy::too_many_arguments)]
fn run_job<'py>(
    py: Python<'py>,
    command: &str,
    m: usize,
    n: usize,
    max_degree: usize,
    target: Option<String>,
    k: Option<usize>,
    j: Option<usize>,
    checks: Vec<String>,
    seed: u64,
    samples: usize,
    budget: usize,
) -> PyResult<Bound<'py, PyAny>> {
    let mut job = JobSpec::new(parse_command(command)?, m, n, max_degree);
    job.target = target;
    job.k = k;
    job.j = j;
    job.checks = checks;
    job.seed = seed;
    job.samples = samples;
    job.budget = budget;
    job.no_cache = true;
    let report = py
        .detach(|| run(&job))
        .map_err(|e| PyRuntimeError::new_err(e.to_string()))?;
    let mut value =
        serde_json::to_value(&report).map_err(|e| PyRuntimeError::new_err(e.to_string()))?;
    value["ok"] = serde_json::Value::Bool(report.ok);
    let text = serde_json::to_string(&value).map_err(|e| PyRuntimeError::new_err(e.to_string()))?;
    py.import("json")?.call_method1("loads", (text,))
}

#[pymodule]
fn lcs_workbench(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("__version__", lcs_core::VERSION)?;
    m.add_class::<PyElement>()?;
    m.add_function(wrap_pyfunction!(dims, m)?)?;
    m.add_function(wrap_pyfunction!(schur, m)?)?;
    m.add_function(wrap_pyfunction!(run_job, m)?)?;
    Ok(())
}
