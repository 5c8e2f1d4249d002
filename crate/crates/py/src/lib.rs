//! Python bindings: exact matrices, fusion data and module-category fixtures.
//!
//! Reports and other structured results cross over as plain Python objects
//! decoded from the same JSON the command-line tool prints.

use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyModule;

use monocat_core::exactla::{Field, Matrix};
use monocat_core::expr::ObjectExpr;
use monocat_core::fixtures::{self, CheckSet, Fixture, FixtureKind, WattsFixture};
use monocat_core::fusion::{self, FusionData, Object};
use monocat_core::report::CoherenceReport;

create_exception!(monocat, MonocatError, PyValueError, "Raised when input is malformed or rejected.");

fn err(e: impl std::fmt::Display) -> PyErr {
    MonocatError::new_err(e.to_string())
}

fn to_python(py: Python<'_>, value: &serde_json::Value) -> PyResult<Py<PyAny>> {
    let text = serde_json::to_string(value).map_err(err)?;
    Ok(PyModule::import(py, "json")?.call_method1("loads", (text,))?.unbind())
}

/// A dense matrix over the rationals (characteristic 0) or a prime field.
#[pyclass(name = "Matrix", module = "monocat", frozen)]
struct PyMatrix(Matrix);

#[pymethods]
impl PyMatrix {
    /// Entries may be ints, `fractions.Fraction`s or strings such as `"-3/4"`.
    #[new]
    #[pyo3(signature = (rows, characteristic = 0))]
    fn new(rows: Vec<Vec<Bound<'_, PyAny>>>, characteristic: u32) -> PyResult<Self> {
        let field = Field::from_characteristic(characteristic).map_err(err)?;
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(err("rows have different lengths"));
        }
        let mut m = Matrix::zeros(field, rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                m.set(i, j, &field.parse(&x.str()?.to_string()).map_err(err)?);
            }
        }
        Ok(PyMatrix(m))
    }

    #[staticmethod]
    #[pyo3(signature = (n, characteristic = 0))]
    fn identity(n: usize, characteristic: u32) -> PyResult<Self> {
        Ok(PyMatrix(Matrix::identity(Field::from_characteristic(characteristic).map_err(err)?, n)))
    }

    #[getter]
    fn shape(&self) -> (usize, usize) {
        self.0.shape()
    }

    #[getter]
    fn characteristic(&self) -> u32 {
        self.0.field().characteristic()
    }

    fn rank(&self) -> usize {
        self.0.rank()
    }

    /// Columns spanning the null space.
    fn kernel(&self) -> Self {
        PyMatrix(self.0.kernel())
    }

    fn inverse(&self) -> Option<Self> {
        self.0.inverse().map(PyMatrix)
    }

    /// A solution `x` of `self @ x == rhs`, if one exists.
    fn solve(&self, rhs: &PyMatrix) -> PyResult<Option<Self>> {
        self.same_field(rhs)?;
        if rhs.0.rows() != self.0.rows() {
            return Err(err("row counts differ"));
        }
        Ok(self.0.solve(&rhs.0).map(PyMatrix))
    }

    fn transpose(&self) -> Self {
        PyMatrix(self.0.transpose())
    }

    fn kron(&self, other: &PyMatrix) -> PyResult<Self> {
        self.same_field(other)?;
        Ok(PyMatrix(self.0.kron(&other.0)))
    }

    /// Entries as strings, exact in every field.
    fn tolist(&self) -> Vec<Vec<String>> {
        (0..self.0.rows()).map(|i| (0..self.0.cols()).map(|j| self.0.get(i, j).to_text()).collect()).collect()
    }

    fn __matmul__(&self, other: &PyMatrix) -> PyResult<Self> {
        self.0.checked_mul(&other.0).map(PyMatrix).map_err(err)
    }

    fn __add__(&self, other: &PyMatrix) -> PyResult<Self> {
        self.same_shape(other)?;
        Ok(PyMatrix(self.0.add(&other.0)))
    }

    fn __sub__(&self, other: &PyMatrix) -> PyResult<Self> {
        self.same_shape(other)?;
        Ok(PyMatrix(self.0.sub(&other.0)))
    }

    fn __neg__(&self) -> Self {
        PyMatrix(self.0.neg())
    }

    fn __eq__(&self, other: &PyMatrix) -> bool {
        self.0 == other.0
    }

    fn __repr__(&self) -> String {
        format!("Matrix({:?}, characteristic={})", self.tolist(), self.characteristic())
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }
}

impl PyMatrix {
    fn same_field(&self, other: &PyMatrix) -> PyResult<()> {
        if self.0.field() == other.0.field() {
            Ok(())
        } else {
            Err(err(format!("fields differ: {} and {}", self.0.field(), other.0.field())))
        }
    }

    fn same_shape(&self, other: &PyMatrix) -> PyResult<()> {
        self.same_field(other)?;
        if self.0.shape() == other.0.shape() {
            Ok(())
        } else {
            Err(err(format!("shapes differ: {:?} and {:?}", self.0.shape(), other.0.shape())))
        }
    }
}

/// Outcome of a batch of named checks.
#[pyclass(name = "Report", module = "monocat", frozen)]
struct PyReport(CoherenceReport);

#[pymethods]
impl PyReport {
    #[getter]
    fn passed(&self) -> bool {
        self.0.passed()
    }

    #[getter]
    fn subject(&self) -> &str {
        &self.0.subject
    }

    /// Names of the required checks that failed.
    fn failing(&self) -> Vec<String> {
        self.0.checks().filter(|c| !c.passed() && c.kind == monocat_core::report::CheckKind::Required).map(|c| c.name.clone()).collect()
    }

    fn to_dict(&self, py: Python<'_>) -> PyResult<Py<PyAny>> {
        to_python(py, &self.0.to_json())
    }

    fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.0.to_json()).expect("serializable")
    }

    fn __bool__(&self) -> bool {
        self.0.passed()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("<Report {:?}: {}>", self.0.subject, if self.0.passed() { "passed" } else { "failed" })
    }
}

/// Multiplicities and dimensions of a semisimple monoidal category.
///
/// Objects are written as expressions over the simple labels,
/// such as `"tau"`, `"1 + 2tau"` or `"(sigma*sigma)^2"`.
#[pyclass(name = "FusionData", module = "monocat")]
struct PyFusionData(FusionData);

#[pymethods]
impl PyFusionData {
    /// One of the built-in tables; see `fusion_names()`.
    #[staticmethod]
    fn bundled(name: &str) -> PyResult<Self> {
        fusion::bundled(name).map(PyFusionData).map_err(err)
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        FusionData::from_json(text).map(PyFusionData).map_err(err)
    }

    /// A fixture file path or the name of a bundled fusion fixture.
    #[staticmethod]
    fn load(name_or_path: &str) -> PyResult<Self> {
        match fixtures::load_path(&fixtures::resolve(name_or_path).map_err(err)?).map_err(err)? {
            Fixture::Fusion(fd) => Ok(PyFusionData(fd)),
            Fixture::Watts(_) => Err(err(format!("{name_or_path} holds a module category, not fusion data"))),
        }
    }

    fn to_json(&self) -> String {
        self.0.to_json()
    }

    #[getter]
    fn simples(&self) -> Vec<String> {
        self.0.simples().to_vec()
    }

    #[getter]
    fn unit(&self) -> String {
        self.0.simples()[self.0.unit()].clone()
    }

    #[getter]
    fn rank(&self) -> usize {
        self.0.rank()
    }

    fn dual(&self, label: &str) -> PyResult<String> {
        Ok(self.0.simples()[self.0.dual(self.0.index_of(label).map_err(err)?)].clone())
    }

    fn endo_dim(&self, label: &str) -> PyResult<u64> {
        Ok(self.0.endo_dim(self.0.index_of(label).map_err(err)?))
    }

    /// Multiplicity of `k` in `i ⊗ j`.
    fn multiplicity(&self, i: &str, j: &str, k: &str) -> PyResult<u64> {
        let idx = |s| self.0.index_of(s).map_err(err);
        Ok(self.0.c(idx(i)?, idx(k)?, idx(j)?))
    }

    /// Overwrites the multiplicity of `k` in `i ⊗ j`; useful for building broken data.
    fn set_multiplicity(&mut self, i: &str, j: &str, k: &str, value: u64) -> PyResult<()> {
        let idx = |s| self.0.index_of(s).map_err(err);
        let (i, j, k) = (idx(i)?, idx(j)?, idx(k)?);
        self.0.set_c(i, k, j, value);
        Ok(())
    }

    /// Multiplicity of each simple in an object expression.
    fn parse(&self, expr: &str) -> PyResult<Vec<u128>> {
        self.object(expr)
    }

    fn format(&self, multiplicities: Object) -> PyResult<String> {
        self.check_len(&multiplicities)?;
        Ok(self.0.format_object(&multiplicities))
    }

    fn tensor(&self, x: &str, y: &str) -> PyResult<String> {
        let t = self.0.tensor(&self.object(x)?, &self.object(y)?).map_err(err)?;
        Ok(self.0.format_object(&t))
    }

    fn validate(&self) -> PyReport {
        PyReport(self.0.validate())
    }

    /// Block dimensions of the image of an object, as a dict.
    fn embed(&self, py: Python<'_>, expr: &str) -> PyResult<Py<PyAny>> {
        let v = self.0.embed_object(&self.object(expr)?).map_err(err)?;
        to_python(py, &v.to_json())
    }

    fn end_dimension(&self, expr: &str) -> PyResult<u128> {
        self.0.end_dimension(&self.object(expr)?).map_err(err)
    }

    fn growth_bound(&self, expr: &str) -> PyResult<u128> {
        self.0.growth_bound(&self.object(expr)?).map_err(err)
    }

    /// Report and rows `(n, dim End(X^n), bound)` for `n = 1..=n_max`.
    #[pyo3(signature = (expr, n_max = 5))]
    fn growth_table(&self, expr: &str, n_max: u32) -> PyResult<(PyReport, Vec<(u32, u128, u128)>)> {
        let (report, rows) = self.0.check_growth_bound(&self.object(expr)?, n_max).map_err(err)?;
        Ok((PyReport(report), rows.into_iter().map(|r| (r.n, r.end_dim, r.bound)).collect()))
    }

    fn __eq__(&self, other: &PyFusionData) -> bool {
        self.0 == other.0
    }

    fn __repr__(&self) -> String {
        format!("FusionData(simples={:?})", self.0.simples())
    }
}

impl PyFusionData {
    fn object(&self, expr: &str) -> PyResult<Object> {
        ObjectExpr::parse(expr).and_then(|e| e.evaluate(&self.0)).map_err(err)
    }

    fn check_len(&self, x: &Object) -> PyResult<()> {
        if x.len() == self.0.rank() {
            Ok(())
        } else {
            Err(err(format!("expected {} multiplicities, got {}", self.0.rank(), x.len())))
        }
    }
}

/// A monoidal structure on a module category, with the checks it should pass.
#[pyclass(name = "WattsFixture", module = "monocat", frozen)]
struct PyWattsFixture(WattsFixture);

#[pymethods]
impl PyWattsFixture {
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        WattsFixture::from_json(text).map(PyWattsFixture).map_err(err)
    }

    /// A fixture file path or the name of a bundled module-category fixture.
    #[staticmethod]
    fn load(name_or_path: &str) -> PyResult<Self> {
        match fixtures::load_path(&fixtures::resolve(name_or_path).map_err(err)?).map_err(err)? {
            Fixture::Watts(w) => Ok(PyWattsFixture(*w)),
            Fixture::Fusion(_) => Err(err(format!("{name_or_path} holds fusion data, not a module category"))),
        }
    }

    #[getter]
    fn name(&self) -> &str {
        &self.0.name
    }

    #[getter]
    fn description(&self) -> &str {
        &self.0.description
    }

    /// The deliberate defect, if any, as a dict.
    #[getter]
    fn mutation(&self, py: Python<'_>) -> PyResult<Option<Py<PyAny>>> {
        self.0.mutation.as_ref().map(|m| to_python(py, &serde_json::to_value(m).expect("serializable"))).transpose()
    }

    /// `checks` is `"all"` or a comma-separated subset of
    /// axioms, T, functor, embedding, rigidity.
    #[pyo3(signature = (checks = "all", seed = 0))]
    fn run(&self, py: Python<'_>, checks: &str, seed: u64) -> PyResult<PyReport> {
        let checks: CheckSet = checks.parse().map_err(err)?;
        Ok(PyReport(py.detach(|| self.0.run(&checks, seed))))
    }

    fn __repr__(&self) -> String {
        format!("WattsFixture({:?})", self.0.name)
    }
}

/// Names of the built-in fusion tables.
#[pyfunction]
fn fusion_names() -> Vec<&'static str> {
    fusion::bundled_names().to_vec()
}

/// Every bundled fixture as `(name, kind, path, mutant)`.
#[pyfunction]
fn bundled_fixtures() -> PyResult<Vec<(String, &'static str, String, bool)>> {
    Ok(fixtures::bundled_fixtures()
        .map_err(err)?
        .into_iter()
        .map(|e| {
            let kind = match e.kind {
                FixtureKind::Fusion => "fusion",
                FixtureKind::Watts => "watts",
            };
            (e.name, kind, e.path.display().to_string(), e.mutant)
        })
        .collect())
}

#[pymodule]
fn monocat(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("MonocatError", m.py().get_type::<MonocatError>())?;
    m.add_class::<PyMatrix>()?;
    m.add_class::<PyReport>()?;
    m.add_class::<PyFusionData>()?;
    m.add_class::<PyWattsFixture>()?;
    m.add_function(wrap_pyfunction!(fusion_names, m)?)?;
    m.add_function(wrap_pyfunction!(bundled_fixtures, m)?)?;
    Ok(())
}
