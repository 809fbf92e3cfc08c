//! Python bindings. Graphs cross the boundary as `Graph` objects or graph6
//! strings; reports come back as JSON strings.

use clawtrace_core as core;
use core::families::{FamilyKind, FamilySpec};
use core::verify::{Corpus, TheoremId, Tolerances, VerifyOptions};
use core::{hamilton, spectral, structure};
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

fn err(e: core::Error) -> PyErr {
    match e {
        core::Error::NotConverged => PyRuntimeError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

/// Simple undirected graph on at most 64 vertices.
#[pyclass(name = "Graph", module = "clawtrace", frozen, eq, hash, from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PyGraph(core::Graph);

#[pymethods]
impl PyGraph {
    #[new]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        core::Graph::from_edges(n, &edges).map(PyGraph).map_err(err)
    }

    #[staticmethod]
    fn from_graph6(s: &str) -> PyResult<Self> {
        core::Graph::from_graph6(s).map(PyGraph).map_err(err)
    }

    fn to_graph6(&self) -> String {
        self.0.to_graph6()
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    #[getter]
    fn m(&self) -> usize {
        self.0.m()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.0.edges().collect()
    }

    fn degrees(&self) -> Vec<usize> {
        self.0.degrees()
    }

    fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.0.n() && v < self.0.n() && self.0.has_edge(u, v)
    }

    fn complement(&self) -> Self {
        PyGraph(self.0.complement())
    }

    fn is_connected(&self) -> bool {
        self.0.is_connected()
    }

    fn is_two_connected(&self) -> bool {
        self.0.is_two_connected()
    }

    fn is_claw_free(&self) -> bool {
        structure::is_claw_free(&self.0)
    }

    /// `(centre, (a, b, c))` or None.
    fn find_claw(&self) -> Option<(usize, (usize, usize, usize))> {
        structure::find_claw(&self.0).map(|(c, [a, b, d])| (c, (a, b, d)))
    }

    fn is_closed(&self) -> PyResult<bool> {
        structure::is_closed(&self.0).map_err(err)
    }

    fn closure(&self) -> PyResult<Self> {
        structure::closure(&self.0).map(|r| PyGraph(r.closed)).map_err(err)
    }

    /// Vertices of an induced copy of `pattern`, or None.
    fn find_induced(&self, pattern: &PyGraph) -> PyResult<Option<Vec<usize>>> {
        structure::find_induced(&self.0, &pattern.0)
            .map(|s| s.map(|s| s.to_vec()))
            .map_err(err)
    }

    #[pyo3(signature = (tol = spectral::DEFAULT_TOL, max_iter = spectral::DEFAULT_MAX_ITER))]
    fn spectral_radius(&self, tol: f64, max_iter: usize) -> PyResult<f64> {
        let est = spectral::spectral_radius(&self.0, tol, max_iter);
        if !est.converged {
            return Err(err(core::Error::NotConverged));
        }
        Ok(est.value)
    }

    fn hong_bound(&self) -> PyResult<f64> {
        spectral::hong_bound(&self.0).map_err(err)
    }

    fn hofmeister_bound(&self) -> f64 {
        spectral::hofmeister_bound(&self.0)
    }

    fn is_traceable(&self) -> bool {
        hamilton::is_traceable(&self.0)
    }

    fn is_hamiltonian(&self) -> PyResult<bool> {
        hamilton::has_hamilton_cycle(&self.0).map_err(err)
    }

    /// Vertex order of a Hamilton path, or None.
    fn hamilton_path(&self) -> Option<Vec<usize>> {
        hamilton::search_hamilton_path(&self.0).map(|w| w.order)
    }

    fn __len__(&self) -> usize {
        self.0.n()
    }

    fn __repr__(&self) -> String {
        format!("Graph.from_graph6({:?})", self.0.to_graph6())
    }
}

/// Builds a named graph, e.g. `construct("n-graph", 9)` or
/// `construct("brousek", "T", "T", 4)`.
#[pyfunction]
#[pyo3(signature = (family, *params))]
fn construct(family: &str, params: Vec<Bound<'_, PyAny>>) -> PyResult<PyGraph> {
    let kind: FamilyKind = family.parse().map_err(err)?;
    let text: Vec<String> = params
        .iter()
        .map(|p| p.str().map(|s| s.to_string()))
        .collect::<PyResult<_>>()?;
    let refs: Vec<&str> = text.iter().map(String::as_str).collect();
    let spec = FamilySpec::parse(kind, &refs).map_err(err)?;
    spec.make().map(PyGraph).map_err(err)
}

/// Names accepted by `construct`.
#[pyfunction]
fn families() -> Vec<&'static str> {
    FamilyKind::ALL.iter().map(|k| k.name()).collect()
}

/// Names accepted by `verify`.
#[pyfunction]
fn theorems() -> Vec<&'static str> {
    TheoremId::ALL.iter().map(|t| t.name()).collect()
}

/// Runs a verifier and returns its report as a JSON string. Passing `seed`
/// switches to sampled mode with `count` samples.
#[pyfunction]
#[pyo3(signature = (theorem, n_min, n_max, *, seed = None, count = 1000, workers = None))]
fn verify(
    py: Python<'_>,
    theorem: &str,
    n_min: usize,
    n_max: usize,
    seed: Option<u64>,
    count: usize,
    workers: Option<usize>,
) -> PyResult<String> {
    let theorem: TheoremId = theorem.parse().map_err(err)?;
    let corpus = match seed {
        Some(seed) => Corpus::Sampled { count, seed },
        None => Corpus::Exhaustive,
    };
    let opts = VerifyOptions {
        workers,
        tol: Tolerances::default(),
    };
    let report = py
        .detach(|| core::verify::verify(theorem, n_min, n_max, corpus, &opts))
        .map_err(err)?;
    serde_json::to_string(&report).map_err(|e| PyRuntimeError::new_err(e.to_string()))
}

/// All connected claw-free graphs of order `n`, one per isomorphism class.
#[pyfunction]
#[pyo3(signature = (n, *, workers = None))]
fn enumerate_claw_free(py: Python<'_>, n: usize, workers: Option<usize>) -> PyResult<Vec<PyGraph>> {
    let spec = core::enumerate::EnumSpec::claw_free(n);
    let graphs = py
        .detach(|| core::enumerate::enumerate_parallel(&spec, workers))
        .map_err(err)?;
    Ok(graphs.into_iter().map(PyGraph).collect())
}

#[pymodule]
fn clawtrace(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(construct, m)?)?;
    m.add_function(wrap_pyfunction!(families, m)?)?;
    m.add_function(wrap_pyfunction!(theorems, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_claw_free, m)?)?;
    Ok(())
}
