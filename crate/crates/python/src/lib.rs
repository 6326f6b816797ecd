//! Python bindings. Scalars cross the boundary as anything whose `str()` is
//! an integer or "p/q" (ints, `fractions.Fraction`, strings) and come back
//! as "p/q" strings. Reports come back as plain dicts.

use pyo3::create_exception;
use pyo3::exceptions::PyException;
use pyo3::prelude::*;

use invder_core::axioms::{self, AxiomId};
use invder_core::constructions::{self, Functor, RotaBaxterOp};
use invder_core::search::{counterexample_search, Family, SearchConfig};
use invder_core::{catalog, AlgebraFile, Kind, Rational, SearchBounds, Vector};

create_exception!(invder, InvDerError, PyException);

fn err(e: invder_core::Error) -> PyErr {
    InvDerError::new_err(e.to_string())
}

fn parse<T: std::str::FromStr>(s: &str) -> PyResult<T>
where
    T::Err: std::fmt::Display,
{
    s.parse().map_err(|e: T::Err| InvDerError::new_err(e.to_string()))
}

fn rational(x: &Bound<'_, PyAny>) -> PyResult<Rational> {
    parse(&x.str()?.to_cow()?)
}

fn loads<'py>(py: Python<'py>, text: String) -> PyResult<Bound<'py, PyAny>> {
    py.import("json")?.call_method1("loads", (text,))
}

fn json<'py>(py: Python<'py>, value: &impl serde::Serialize) -> PyResult<Bound<'py, PyAny>> {
    loads(py, serde_json::to_string(value).map_err(|e| InvDerError::new_err(e.to_string()))?)
}

#[pyclass(module = "invder", frozen, skip_from_py_object)]
#[derive(Clone)]
struct LinearMap(invder_core::LinearMap);

#[pymethods]
impl LinearMap {
    /// `columns[j]` is the image of the j-th basis vector.
    #[new]
    fn new(columns: Vec<Vec<Bound<'_, PyAny>>>) -> PyResult<Self> {
        let cols = columns
            .iter()
            .map(|c| c.iter().map(rational).collect::<PyResult<Vec<_>>>().map(Vector::new))
            .collect::<PyResult<Vec<_>>>()?;
        invder_core::LinearMap::from_columns(&cols).map(LinearMap).map_err(err)
    }

    #[staticmethod]
    fn identity(n: usize) -> Self {
        LinearMap(invder_core::LinearMap::identity(n))
    }

    #[staticmethod]
    fn diagonal(entries: Vec<Bound<'_, PyAny>>) -> PyResult<Self> {
        let d = entries.iter().map(rational).collect::<PyResult<Vec<_>>>()?;
        Ok(LinearMap(invder_core::LinearMap::diagonal(&d)))
    }

    #[getter]
    fn dim(&self) -> usize {
        self.0.dim()
    }

    fn columns(&self) -> Vec<Vec<String>> {
        self.0.columns().iter().map(|c| c.iter().map(ToString::to_string).collect()).collect()
    }

    fn det(&self) -> String {
        self.0.det().to_string()
    }

    fn is_invertible(&self) -> bool {
        self.0.is_invertible()
    }

    fn inverse(&self) -> PyResult<Self> {
        self.0.inverse().map(LinearMap).map_err(err)
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.0 == other.0
    }

    fn __repr__(&self) -> String {
        format!("LinearMap({:?})", self.columns())
    }
}

#[pyclass(module = "invder", frozen)]
struct Algebra {
    file: AlgebraFile,
}

impl Algebra {
    fn map_arg(&self, map: &Bound<'_, PyAny>) -> PyResult<invder_core::LinearMap> {
        if let Ok(m) = map.cast::<LinearMap>() {
            return Ok(m.get().0.clone());
        }
        let name: String = map.extract()?;
        self.file.map(&name).cloned().map_err(err)
    }

    fn algebra(&self) -> &invder_core::Algebra {
        &self.file.algebra
    }
}

#[pymethods]
impl Algebra {
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        AlgebraFile::from_json(text).map(|file| Algebra { file }).map_err(err)
    }

    #[staticmethod]
    fn load(path: std::path::PathBuf) -> PyResult<Self> {
        AlgebraFile::load(path).map(|file| Algebra { file }).map_err(err)
    }

    /// A built-in example algebra with its named maps.
    #[staticmethod]
    fn catalog(id: &str) -> PyResult<Self> {
        catalog::entry(id).map(|e| Algebra { file: e.to_file() }).map_err(err)
    }

    fn to_json(&self) -> String {
        self.file.to_json()
    }

    fn save(&self, path: std::path::PathBuf) -> PyResult<()> {
        self.file.save(path).map_err(err)
    }

    #[getter]
    fn name(&self) -> &str {
        self.algebra().name()
    }

    #[getter]
    fn dim(&self) -> usize {
        self.algebra().dim()
    }

    #[getter]
    fn basis(&self) -> Vec<String> {
        self.algebra().basis().to_vec()
    }

    #[getter]
    fn kind(&self) -> Option<&'static str> {
        self.algebra().kind().map(Kind::as_str)
    }

    #[getter]
    fn ops(&self) -> Vec<String> {
        self.algebra().ops().keys().cloned().collect()
    }

    #[getter]
    fn maps(&self) -> Vec<String> {
        self.file.maps.keys().cloned().collect()
    }

    fn map(&self, name: &str) -> PyResult<LinearMap> {
        self.file.map(name).cloned().map(LinearMap).map_err(err)
    }

    /// Coordinates of `e_i e_j` under `op`.
    #[pyo3(signature = (i, j, op=None))]
    fn product(&self, i: usize, j: usize, op: Option<&str>) -> PyResult<Vec<String>> {
        let name = match op {
            Some(o) => o,
            None => self.algebra().default_op_name().map_err(err)?,
        };
        let op = self.algebra().op(name).map_err(err)?;
        if i >= op.dim() || j >= op.dim() {
            return Err(InvDerError::new_err(format!("index out of range for dimension {}", op.dim())));
        }
        Ok(op.product(i, j).iter().map(ToString::to_string).collect())
    }

    /// Check one identity; `map` is a `LinearMap` or the name of a map in the file.
    #[pyo3(signature = (axiom, op=None, map=None))]
    fn check<'py>(
        &self,
        py: Python<'py>,
        axiom: &str,
        op: Option<&str>,
        map: Option<&Bound<'py, PyAny>>,
    ) -> PyResult<Bound<'py, PyAny>> {
        let axiom: AxiomId = parse(axiom)?;
        let map = map.map(|m| self.map_arg(m)).transpose()?;
        json(py, &axioms::check(self.algebra(), axiom, op, map.as_ref()).map_err(err)?)
    }

    /// Basis of the derivation space.
    #[pyo3(signature = (op=None))]
    fn derivations(&self, op: Option<&str>) -> PyResult<Vec<LinearMap>> {
        let space = invder_core::derivation_space(self.algebra(), op).map_err(err)?;
        Ok(space.basis().iter().cloned().map(LinearMap).collect())
    }

    fn is_invder<'py>(&self, py: Python<'py>, map: &Bound<'py, PyAny>) -> PyResult<Bound<'py, PyAny>> {
        json(py, &invder_core::is_invder(&self.map_arg(map)?, self.algebra()).map_err(err)?)
    }

    #[pyo3(signature = (seed=0, samples=10_000, range=3))]
    fn invder_search(&self, seed: u64, samples: usize, range: i64) -> PyResult<Option<LinearMap>> {
        let bounds = SearchBounds { range, max_samples: samples, seed };
        let outcome = invder_core::invder_search(self.algebra(), None, bounds).map_err(err)?;
        Ok(outcome.found().cloned().map(LinearMap))
    }

    /// Returns the twisted algebra (carrying the map as "delta") and the
    /// verification reports.
    #[pyo3(signature = (map, op=None, force=false))]
    fn twist<'py>(
        &self,
        py: Python<'py>,
        map: &Bound<'py, PyAny>,
        op: Option<&str>,
        force: bool,
    ) -> PyResult<(Algebra, Bound<'py, PyAny>)> {
        let result = constructions::twist(self.algebra(), op, &self.map_arg(map)?, force).map_err(err)?;
        let report = loads(py, result.to_json())?;
        Ok((Algebra { file: result.to_file() }, report))
    }

    /// Apply a named passage (e.g. "commutator-lie", "zinbiel-to-assoc").
    #[pyo3(signature = (functor, operator=None, weight=None, delta=None, op=None, force=false))]
    #[allow(clippy::too_many_arguments)]
    fn transform<'py>(
        &self,
        py: Python<'py>,
        functor: &str,
        operator: Option<&Bound<'py, PyAny>>,
        weight: Option<&Bound<'py, PyAny>>,
        delta: Option<&Bound<'py, PyAny>>,
        op: Option<&str>,
        force: bool,
    ) -> PyResult<(Algebra, Bound<'py, PyAny>)> {
        let functor: Functor = parse(functor)?;
        let weight = weight.map(rational).transpose()?.unwrap_or_else(Rational::zero);
        let operator = operator.map(|m| self.map_arg(m)).transpose()?.map(|m| RotaBaxterOp::with_weight(m, weight));
        let delta = delta.map(|m| self.map_arg(m)).transpose()?;
        let result = functor
            .apply(self.algebra(), op, operator.as_ref(), delta.as_ref(), force)
            .map_err(err)?;
        let report = loads(py, result.to_json())?;
        Ok((Algebra { file: result.to_file() }, report))
    }

    fn __repr__(&self) -> String {
        format!("Algebra({:?}, dim={})", self.name(), self.dim())
    }
}

#[pyfunction]
fn catalog_ids() -> Vec<String> {
    catalog::catalog().into_iter().map(|e| e.id.to_string()).collect()
}

#[pyfunction]
#[pyo3(signature = (family, max_dim=6, seed=0, samples=200, range=3, tables=8))]
fn search_counterexample<'py>(
    py: Python<'py>,
    family: &str,
    max_dim: usize,
    seed: u64,
    samples: usize,
    range: i64,
    tables: usize,
) -> PyResult<Bound<'py, PyAny>> {
    let config = SearchConfig {
        family: parse::<Family>(family)?,
        max_dim,
        coefficient_range: range,
        max_samples: samples,
        seed,
        tables_per_dim: tables,
    };
    json(py, &counterexample_search(&config).map_err(err)?)
}

#[pymodule]
pub fn invder(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Algebra>()?;
    m.add_class::<LinearMap>()?;
    m.add_function(wrap_pyfunction!(catalog_ids, m)?)?;
    m.add_function(wrap_pyfunction!(search_counterexample, m)?)?;
    m.add("InvDerError", m.py().get_type::<InvDerError>())?;
    Ok(())
}
