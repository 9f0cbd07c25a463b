use std::sync::Arc;

use engine::schubert::type_a_double_schubert;
use engine::verify::{self, Engines, Suite};
use engine::{
    parse_gamma, CartanType, Family, Flavor, GammaElement, SchubertEngine, SignedPermutation,
};
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

fn err(e: engine::Error) -> PyErr {
    match e {
        engine::Error::Cache(_)
        | engine::Error::RecursionLimit(_)
        | engine::Error::WindowExceeded(_) => PyRuntimeError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn cartan(name: &str) -> PyResult<CartanType> {
    match name {
        "B" | "b" => Ok(CartanType::B),
        "C" | "c" => Ok(CartanType::C),
        "D" | "d" => Ok(CartanType::D),
        _ => Err(PyValueError::new_err(format!(
            "unknown type '{name}', expected B, C or D"
        ))),
    }
}

/// A signed permutation in one-line notation.
#[pyclass(
    name = "Permutation",
    frozen,
    skip_from_py_object,
    module = "eqschubert"
)]
#[derive(Clone)]
struct PyPermutation(SignedPermutation);

#[pymethods]
impl PyPermutation {
    /// `family` is "BC" (the default) or "D".
    #[new]
    #[pyo3(signature = (text, family = "BC"))]
    fn new(text: &str, family: &str) -> PyResult<Self> {
        let family = match family {
            "BC" | "B" | "C" => Family::BC,
            "D" => Family::D,
            _ => return Err(PyValueError::new_err(format!("unknown family '{family}'"))),
        };
        SignedPermutation::parse(text, family)
            .map(PyPermutation)
            .map_err(err)
    }

    #[getter]
    fn images(&self) -> Vec<i32> {
        self.0.images().to_vec()
    }

    fn length(&self) -> usize {
        self.0.length()
    }

    fn inverse(&self) -> Self {
        PyPermutation(self.0.inverse())
    }

    fn __mul__(&self, other: &Self) -> Self {
        PyPermutation(self.0.compose(&other.0))
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.0 == other.0
    }

    fn __hash__(&self) -> u64 {
        use std::hash::{Hash, Hasher};
        let mut h = std::collections::hash_map::DefaultHasher::new();
        self.0.hash(&mut h);
        h.finish()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Permutation('{}')", self.0)
    }
}

/// An element of the Q (or P) function ring over Z[z, t].
#[pyclass(
    name = "GammaElement",
    frozen,
    skip_from_py_object,
    module = "eqschubert"
)]
#[derive(Clone)]
struct PyGamma(Arc<GammaElement>);

#[pymethods]
impl PyGamma {
    #[new]
    #[pyo3(signature = (expr, flavor = "Q"))]
    fn new(expr: &str, flavor: &str) -> PyResult<Self> {
        parse(expr, flavor)
    }

    #[getter]
    fn flavor(&self) -> &'static str {
        match self.0.flavor() {
            Flavor::Q => "Q",
            Flavor::P => "P",
        }
    }

    /// `(partition, coefficient)` pairs, coefficients as text.
    fn terms(&self) -> Vec<(Vec<u32>, String)> {
        self.0
            .terms()
            .into_iter()
            .map(|(l, c)| (l.parts().to_vec(), c.to_string()))
            .collect()
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn latex(&self) -> String {
        self.0.to_latex()
    }

    fn to_json(&self) -> PyResult<String> {
        serde_json::to_string(&*self.0).map_err(|e| PyRuntimeError::new_err(e.to_string()))
    }

    fn __add__(&self, other: &Self) -> PyResult<Self> {
        self.same_flavor(other)?;
        Ok(PyGamma(Arc::new(&*self.0 + &*other.0)))
    }

    fn __sub__(&self, other: &Self) -> PyResult<Self> {
        self.same_flavor(other)?;
        Ok(PyGamma(Arc::new(&*self.0 - &*other.0)))
    }

    fn __mul__(&self, other: &Self) -> PyResult<Self> {
        self.same_flavor(other)?;
        Ok(PyGamma(Arc::new(&*self.0 * &*other.0)))
    }

    fn __neg__(&self) -> Self {
        PyGamma(Arc::new(-&*self.0))
    }

    fn __eq__(&self, other: &Self) -> bool {
        *self.0 == *other.0
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("GammaElement('{}')", self.0)
    }
}

impl PyGamma {
    fn same_flavor(&self, other: &Self) -> PyResult<()> {
        if self.0.flavor() != other.0.flavor() {
            return Err(PyValueError::new_err("cannot combine Q and P elements"));
        }
        Ok(())
    }
}

/// Computes and memoizes double Schubert polynomials of one type.
#[pyclass(name = "Engine", frozen, module = "eqschubert")]
struct PyEngine(SchubertEngine);

impl PyEngine {
    fn perm(&self, text: &str) -> PyResult<SignedPermutation> {
        SignedPermutation::parse(text, self.0.cartan_type().family()).map_err(err)
    }
}

#[pymethods]
impl PyEngine {
    #[new]
    fn new(cartan_type: &str) -> PyResult<Self> {
        Ok(PyEngine(SchubertEngine::new(cartan(cartan_type)?)))
    }

    #[getter]
    fn cartan_type(&self) -> String {
        self.0.cartan_type().to_string()
    }

    fn double_schubert(&self, py: Python<'_>, perm: &str) -> PyResult<PyGamma> {
        let w = self.perm(perm)?;
        py.detach(|| self.0.double_schubert(&w))
            .map(PyGamma)
            .map_err(err)
    }

    /// Specialization at t = 0.
    fn billey_haiman(&self, py: Python<'_>, perm: &str) -> PyResult<PyGamma> {
        let w = self.perm(perm)?;
        py.detach(|| self.0.billey_haiman(&w))
            .map(|g| PyGamma(Arc::new(g)))
            .map_err(err)
    }

    /// Specialization at z = t = 0.
    fn stanley(&self, py: Python<'_>, perm: &str) -> PyResult<PyGamma> {
        let w = self.perm(perm)?;
        py.detach(|| self.0.stanley(&w))
            .map(|g| PyGamma(Arc::new(g)))
            .map_err(err)
    }

    /// The restriction of the polynomial of `perm` to the fixed point `at`.
    fn localize(&self, py: Python<'_>, perm: &str, at: &str) -> PyResult<String> {
        let (w, v) = (self.perm(perm)?, self.perm(at)?);
        py.detach(|| self.0.localize(&w, &v))
            .map(|p| p.to_string())
            .map_err(err)
    }

    /// Schubert expansion of an element or expression, as `(perm, coefficient)` pairs.
    fn expand(&self, py: Python<'_>, f: &Bound<'_, PyAny>) -> PyResult<Vec<(String, String)>> {
        let g = if let Ok(g) = f.cast::<PyGamma>() {
            g.get().0.clone()
        } else {
            let flavor = self.0.cartan_type().flavor();
            Arc::new(parse_gamma(&f.extract::<String>()?, flavor).map_err(err)?)
        };
        let terms = py.detach(|| self.0.expand(&g)).map_err(err)?;
        Ok(terms
            .into_iter()
            .map(|(w, c)| (w.to_string(), c.to_string()))
            .collect())
    }

    /// `(perm, polynomial)` for every element of rank `n`.
    fn table(&self, py: Python<'_>, n: u32) -> PyResult<Vec<(String, PyGamma)>> {
        let elems = SignedPermutation::elements(self.0.cartan_type().family(), n);
        py.detach(|| {
            elems
                .into_iter()
                .map(|w| {
                    self.0
                        .double_schubert(&w)
                        .map(|g| (w.to_string(), PyGamma(g)))
                })
                .collect::<Result<Vec<_>, _>>()
        })
        .map_err(err)
    }
}

/// Parses an expression such as "(z1 - t1)*Q[1] + Q[2,1]".
#[pyfunction]
#[pyo3(signature = (expr, flavor = "Q"))]
fn parse(expr: &str, flavor: &str) -> PyResult<PyGamma> {
    let flavor = match flavor {
        "Q" => Flavor::Q,
        "P" => Flavor::P,
        _ => return Err(PyValueError::new_err(format!("unknown flavor '{flavor}'"))),
    };
    parse_gamma(expr, flavor)
        .map(|g| PyGamma(Arc::new(g)))
        .map_err(err)
}

/// Ordinary double Schubert polynomial of a permutation, as text.
#[pyfunction]
fn type_a(perm: &str) -> PyResult<String> {
    let w = SignedPermutation::parse(perm, Family::BC).map_err(err)?;
    type_a_double_schubert(&w)
        .map(|p| p.to_string())
        .map_err(err)
}

/// Runs a self-check suite; returns `(suite, check, passed, total)` rows.
#[pyfunction]
#[pyo3(signature = (suite = "all", n = 3))]
fn run_verify(
    py: Python<'_>,
    suite: &str,
    n: u32,
) -> PyResult<Vec<(String, String, usize, usize)>> {
    let suite: Suite = suite.parse().map_err(err)?;
    let reports = py
        .detach(|| verify::run(suite, n, &Engines::default()))
        .map_err(err)?;
    Ok(reports
        .into_iter()
        .flat_map(|r| {
            let name = r.suite.name().to_string();
            r.checks
                .into_iter()
                .map(move |c| (name.clone(), c.name, c.passed, c.total))
        })
        .collect())
}

#[pymodule]
#[pyo3(name = "eqschubert")]
fn eqschubert_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPermutation>()?;
    m.add_class::<PyGamma>()?;
    m.add_class::<PyEngine>()?;
    m.add_function(wrap_pyfunction!(parse, m)?)?;
    m.add_function(wrap_pyfunction!(type_a, m)?)?;
    m.add_function(wrap_pyfunction!(run_verify, m)?)?;
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    Ok(())
}
