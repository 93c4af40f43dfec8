//! Python bindings: Cayley tables, inclusion graphs, invariants, symmetry,
//! Boolean-model constructions and the check suite.

use std::path::PathBuf;

use idealgraph::combinat::subset_label;
use idealgraph::constructions as cons;
use idealgraph::invariants::{invariant_report, ReportOptions, Selection};
use idealgraph::semigroup::DEFAULT_IDEAL_CAP;
use idealgraph::suite::{self, Scope, SuiteOptions};
use idealgraph::symmetry::{automorphism_group, DEFAULT_AUT_CAP};
use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

create_exception!(idealgraph_py, IdealGraphError, PyValueError);

fn err(e: idealgraph::Error) -> PyErr {
    IdealGraphError::new_err(e.to_string())
}

fn from_json<'py>(py: Python<'py>, text: &str) -> PyResult<Bound<'py, PyAny>> {
    py.import("json")?.call_method1("loads", (text,))
}

fn indices(s: &idealgraph::ElementSet) -> Vec<usize> {
    s.iter().collect()
}

/// A finite semigroup given by its multiplication table.
#[pyclass(name = "CayleyTable", module = "idealgraph_py", frozen)]
pub struct PyCayleyTable {
    pub inner: idealgraph::CayleyTable,
}

#[pymethods]
impl PyCayleyTable {
    #[new]
    #[pyo3(signature = (rows, labels=None))]
    fn new(rows: Vec<Vec<usize>>, labels: Option<Vec<String>>) -> PyResult<Self> {
        idealgraph::CayleyTable::new(rows, labels)
            .map(|inner| Self { inner })
            .map_err(err)
    }

    /// Parses the text table format.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        idealgraph::CayleyTable::parse(text)
            .map(|inner| Self { inner })
            .map_err(err)
    }

    #[staticmethod]
    fn right_zero(n: usize) -> Self {
        Self {
            inner: idealgraph::CayleyTable::right_zero(n),
        }
    }

    #[staticmethod]
    fn null(m: usize) -> Self {
        Self {
            inner: idealgraph::CayleyTable::null(m),
        }
    }

    #[staticmethod]
    fn cyclic_group(m: usize) -> Self {
        Self {
            inner: idealgraph::CayleyTable::cyclic_group(m),
        }
    }

    #[getter]
    fn order(&self) -> usize {
        self.inner.order()
    }

    fn rows(&self) -> Vec<Vec<usize>> {
        self.inner.rows()
    }

    fn mul(&self, a: usize, b: usize) -> PyResult<usize> {
        let m = self.inner.order();
        if a >= m || b >= m {
            return Err(err(idealgraph::Error::UnknownVertex(a.max(b))));
        }
        Ok(self.inner.mul(a, b))
    }

    fn serialize(&self) -> String {
        self.inner.serialize()
    }

    fn with_identity(&self) -> Self {
        Self {
            inner: self.inner.with_identity(),
        }
    }

    fn is_completely_simple(&self) -> bool {
        self.inner.is_completely_simple()
    }

    /// Nontrivial left ideals as sorted element lists.
    #[pyo3(signature = (cap=DEFAULT_IDEAL_CAP))]
    fn left_ideals(&self, cap: usize) -> PyResult<Vec<Vec<usize>>> {
        let fam = idealgraph::enumerate_left_ideals(&self.inner, cap);
        if fam.truncated {
            return Err(err(idealgraph::Error::TruncatedFamily { cap }));
        }
        Ok(fam.ideals.iter().map(|i| indices(i.members())).collect())
    }

    fn minimal_left_ideals(&self) -> Vec<Vec<usize>> {
        self.inner
            .minimal_left_ideals()
            .iter()
            .map(indices)
            .collect()
    }

    fn l_classes(&self) -> Vec<Vec<usize>> {
        self.inner
            .l_classes()
            .iter()
            .map(|c| indices(&c.members))
            .collect()
    }

    fn __repr__(&self) -> String {
        format!("CayleyTable(order={})", self.inner.order())
    }
}

/// Inclusion graph of nontrivial left ideals.
#[pyclass(name = "InclusionGraph", module = "idealgraph_py", frozen)]
pub struct PyInclusionGraph {
    pub inner: idealgraph::InclusionGraph,
}

#[pymethods]
impl PyInclusionGraph {
    /// Boolean model on the nonempty proper subsets of `[n]`.
    #[staticmethod]
    fn boolean(n: u32) -> PyResult<Self> {
        idealgraph::InclusionGraph::boolean(n)
            .map(|inner| Self { inner })
            .map_err(err)
    }

    #[staticmethod]
    #[pyo3(signature = (table, cap=DEFAULT_IDEAL_CAP))]
    fn from_table(table: &PyCayleyTable, cap: usize) -> PyResult<Self> {
        let fam = idealgraph::enumerate_left_ideals(&table.inner, cap);
        idealgraph::InclusionGraph::from_family(&fam)
            .map(|inner| Self { inner })
            .map_err(err)
    }

    #[getter]
    fn vertex_count(&self) -> usize {
        self.inner.vertex_count()
    }

    #[getter]
    fn edge_count(&self) -> u128 {
        self.inner.edge_count()
    }

    fn __len__(&self) -> usize {
        self.inner.vertex_count()
    }

    fn vertex_names(&self) -> Vec<String> {
        (0..self.inner.vertex_count())
            .map(|v| self.inner.vertex_name(v))
            .collect()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edge_list()
    }

    fn neighbors(&self, v: usize) -> PyResult<Vec<usize>> {
        if v >= self.inner.vertex_count() {
            return Err(err(idealgraph::Error::UnknownVertex(v)));
        }
        Ok(self.inner.neighbors(v))
    }

    fn is_adjacent(&self, u: usize, v: usize) -> PyResult<bool> {
        let n = self.inner.vertex_count();
        if u >= n || v >= n {
            return Err(err(idealgraph::Error::UnknownVertex(u.max(v))));
        }
        Ok(self.inner.is_adjacent(u, v))
    }

    fn to_dot(&self) -> String {
        self.inner.to_dot()
    }

    fn to_json<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        from_json(py, &self.inner.to_json().to_string())
    }

    /// Invariant report as a dict. `select` names a subset of: diameter,
    /// girth, clique, chromatic, independence, matching, domination,
    /// planarity, perfect, flags.
    #[pyo3(signature = (select=None, perfect_max_len=None, timings=false))]
    fn invariants<'py>(
        &self,
        py: Python<'py>,
        select: Option<Vec<String>>,
        perfect_max_len: Option<usize>,
        timings: bool,
    ) -> PyResult<Bound<'py, PyAny>> {
        let selection = match select {
            None => Selection::all(),
            Some(names) => {
                let mut s = Selection::default();
                for name in names {
                    let slot = match name.as_str() {
                        "diameter" => &mut s.diameter,
                        "girth" => &mut s.girth,
                        "clique" => &mut s.clique,
                        "chromatic" => &mut s.chromatic,
                        "independence" => &mut s.independence,
                        "matching" => &mut s.matching,
                        "domination" => &mut s.domination,
                        "planarity" => &mut s.planarity,
                        "perfect" => &mut s.perfect,
                        "flags" => &mut s.flags,
                        other => {
                            return Err(IdealGraphError::new_err(format!(
                                "unknown invariant {other:?}"
                            )))
                        }
                    };
                    *slot = true;
                }
                s
            }
        };
        let opts = ReportOptions {
            selection,
            perfect_max_len,
            timings,
            ..ReportOptions::default()
        };
        let report = py
            .detach(|| invariant_report(&self.inner, &opts))
            .map_err(err)?;
        from_json(py, &report.to_json_string())
    }

    /// Automorphism group order, generators, structure tag and orbit counts.
    #[pyo3(signature = (cap=DEFAULT_AUT_CAP))]
    fn automorphisms<'py>(&self, py: Python<'py>, cap: usize) -> PyResult<Bound<'py, PyAny>> {
        let simple = self.inner.to_simple(cap).map_err(err)?;
        let report = py
            .detach(|| automorphism_group(&self.inner, cap))
            .map_err(err)?;
        let vertex_orbits = report.orbits(simple.vertex_count()).len();
        let edge_orbits = report.edge_orbits(&simple).len();
        let body = serde_json::json!({
            "group": report,
            "vertex_orbits": vertex_orbits,
            "edge_orbits": edge_orbits,
            "vertex_transitive": vertex_orbits <= 1,
            "edge_transitive": edge_orbits <= 1,
        });
        from_json(py, &body.to_string())
    }

    fn __repr__(&self) -> String {
        format!(
            "InclusionGraph(vertices={}, edges={})",
            self.inner.vertex_count(),
            self.inner.edge_count()
        )
    }
}

/// Subset `{1,...}` label of a bitmask over `[n]`.
#[pyfunction]
fn label(mask: u64) -> String {
    subset_label(mask)
}

/// Perfect matching of the Boolean model as mask pairs.
#[pyfunction]
fn perfect_matching(n: u32) -> PyResult<Vec<(u64, u64)>> {
    cons::perfect_matching(n).map_err(err)
}

#[pyfunction]
fn dominating_set(n: u32) -> PyResult<Vec<u64>> {
    cons::canonical_dominating_set(n)
        .map(|s| s.to_vec())
        .map_err(err)
}

#[pyfunction]
fn maximum_chain(n: u32) -> PyResult<Vec<u64>> {
    cons::canonical_maximum_chain(n).map_err(err)
}

/// Matching between layers `k` and `k + 1` saturating the smaller one.
#[pyfunction]
fn layer_matching(n: u32, k: u32) -> PyResult<Vec<(u64, u64)>> {
    cons::layer_matching(n, k).map(|m| m.pairs).map_err(err)
}

/// Rewrites an antichain of masks into the middle layer, preserving its size.
#[pyfunction]
fn normalize_independent_set(n: u32, masks: Vec<u64>) -> PyResult<Vec<u64>> {
    cons::normalize_independent_set(n, &masks).map_err(err)
}

#[pyfunction]
fn check_ids() -> Vec<&'static str> {
    suite::registry_ids()
}

/// Runs the check suite. With no scope arguments, runs the default scope.
#[pyfunction]
#[pyo3(signature = (boolean=None, corpus=None, semigroups=false, seed=suite::DEFAULT_SEED, samples=suite::DEFAULT_ORDER4_SAMPLES))]
fn verify<'py>(
    py: Python<'py>,
    boolean: Option<(u32, u32)>,
    corpus: Option<PathBuf>,
    semigroups: bool,
    seed: u64,
    samples: usize,
) -> PyResult<Bound<'py, PyAny>> {
    let scope = match (boolean, corpus, semigroups) {
        (Some((lo, hi)), _, _) => Scope::Boolean { lo, hi },
        (None, Some(dir), _) => Scope::Corpus(dir),
        (None, None, true) => Scope::Semigroups,
        (None, None, false) => Scope::All,
    };
    let opts = SuiteOptions {
        seed,
        order4_samples: samples,
        timings: false,
    };
    let report = py.detach(|| suite::run_suite(&scope, &opts)).map_err(err)?;
    from_json(py, &report.to_json_string())
}

#[pymodule]
fn idealgraph_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    register(m)
}

/// Adds every class and function to `m`.
pub fn register(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("IdealGraphError", m.py().get_type::<IdealGraphError>())?;
    m.add_class::<PyCayleyTable>()?;
    m.add_class::<PyInclusionGraph>()?;
    m.add_function(wrap_pyfunction!(label, m)?)?;
    m.add_function(wrap_pyfunction!(perfect_matching, m)?)?;
    m.add_function(wrap_pyfunction!(dominating_set, m)?)?;
    m.add_function(wrap_pyfunction!(maximum_chain, m)?)?;
    m.add_function(wrap_pyfunction!(layer_matching, m)?)?;
    m.add_function(wrap_pyfunction!(normalize_independent_set, m)?)?;
    m.add_function(wrap_pyfunction!(check_ids, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
