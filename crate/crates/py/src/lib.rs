//! Python bindings: diagrams and gradings as classes, everything else as
//! functions returning plain lists and dicts.

use graded_orbits::diagrams::{canonicalize, enumerate_diagrams, FilledDiagram, Sign};
use graded_orbits::oracle;
use graded_orbits::orbits::{self, Case, GradingSpec};
use graded_orbits::series::{self, Family};
use graded_orbits::sheaves;
use num_bigint::BigInt;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use serde::Serialize;

fn err(e: graded_orbits::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// Round-trips through `json.loads` so the Python side sees the same schema as the CLI.
fn to_py<'py, T: Serialize>(py: Python<'py>, value: &T) -> PyResult<Bound<'py, PyAny>> {
    let text = serde_json::to_string(value).map_err(|e| PyValueError::new_err(e.to_string()))?;
    py.import("json")?.call_method1("loads", (text,))
}

fn parse_sign(sign: &str) -> PyResult<Sign> {
    match sign {
        "+" | "plus" => Ok(Sign::Plus),
        "-" | "minus" => Ok(Sign::Minus),
        other => Err(PyValueError::new_err(format!("sign must be '+' or '-', got {other:?}"))),
    }
}

#[pyclass(name = "Diagram", frozen, skip_from_py_object, eq, hash, module = "graded_orbits_py")]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyDiagram {
    inner: FilledDiagram,
}

#[pymethods]
impl PyDiagram {
    /// `Diagram(modulus, rows, sign="+")` with rows given as `(length, start)` pairs.
    #[new]
    #[pyo3(signature = (modulus, rows, sign = "+"))]
    fn new(modulus: usize, rows: Vec<(usize, usize)>, sign: &str) -> PyResult<Self> {
        let inner = canonicalize(&rows, modulus, parse_sign(sign)?).map_err(err)?;
        Ok(PyDiagram { inner })
    }

    #[getter]
    fn modulus(&self) -> usize {
        self.inner.modulus()
    }

    #[getter]
    fn sign(&self) -> &'static str {
        self.inner.sign().symbol()
    }

    #[getter]
    fn rows(&self) -> Vec<(usize, usize)> {
        self.inner.rows().iter().map(|r| (r.len, r.start)).collect()
    }

    fn size(&self) -> usize {
        self.inner.size()
    }

    fn dimension_vector(&self) -> Vec<usize> {
        self.inner.dimension_vector().entries().to_vec()
    }

    fn partition(&self) -> Vec<usize> {
        self.inner.partition().parts().to_vec()
    }

    /// `d_λ`, the gcd of the row lengths (0 for the empty diagram).
    fn gcd_of_parts(&self) -> usize {
        self.inner.gcd_of_parts()
    }

    fn dual(&self) -> PyDiagram {
        PyDiagram {
            inner: orbits::duality(&self.inner),
        }
    }

    fn to_json(&self) -> PyResult<String> {
        serde_json::to_string(&self.inner).map_err(|e| PyValueError::new_err(e.to_string()))
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Diagram('{}', sign='{}', modulus={})", self.inner, self.inner.sign(), self.inner.modulus())
    }
}

#[pyclass(name = "Grading", frozen, skip_from_py_object, eq, module = "graded_orbits_py")]
#[derive(Clone, PartialEq, Eq)]
struct PyGrading {
    inner: GradingSpec,
}

#[pymethods]
impl PyGrading {
    /// `Grading(case, modulus, dims)`; `modulus` is `m0` for AII.
    #[new]
    fn new(case: &str, modulus: usize, dims: Vec<usize>) -> PyResult<Self> {
        let case: Case = case.parse().map_err(err)?;
        let inner = GradingSpec::new(case, modulus, dims).map_err(err)?;
        Ok(PyGrading { inner })
    }

    #[getter]
    fn case(&self) -> &'static str {
        self.inner.case().name()
    }

    #[getter]
    fn modulus(&self) -> usize {
        self.inner.modulus()
    }

    #[getter]
    fn dims(&self) -> Vec<usize> {
        self.inner.dims().entries().to_vec()
    }

    fn total(&self) -> usize {
        self.inner.total()
    }

    fn rank(&self) -> usize {
        self.inner.rank()
    }

    fn dim_g1(&self) -> usize {
        self.inner.dim_g1()
    }

    fn __repr__(&self) -> String {
        format!("Grading('{}')", self.inner)
    }
}

/// Orbits of the grading as diagrams in the given convention, in canonical order.
#[pyfunction]
#[pyo3(signature = (grading, sign = "+"))]
fn orbits_of(grading: &PyGrading, sign: &str) -> PyResult<Vec<PyDiagram>> {
    let g = &grading.inner;
    Ok(enumerate_diagrams(g.modulus(), parse_sign(sign)?, g.dims())
        .into_iter()
        .filter(|lam| orbits::admissible_for_case(g.case(), lam))
        .map(|inner| PyDiagram { inner })
        .collect())
}

#[pyfunction]
fn is_admissible(diagram: &PyDiagram, grading: &PyGrading) -> PyResult<bool> {
    orbits::admissible(&diagram.inner, &grading.inner).map_err(err)
}

/// `⁰ₐΣ` membership in AI; the `min p ≤ 1` criterion in type II (`a` ignored).
#[pyfunction]
#[pyo3(signature = (diagram, grading, a = 1))]
fn is_distinguished(diagram: &PyDiagram, grading: &PyGrading, a: usize) -> PyResult<bool> {
    let g = &grading.inner;
    if g.case() == Case::AI {
        Ok(orbits::is_distinguished_ai(&diagram.inner, a, g.modulus()))
    } else {
        orbits::is_distinguished_ii(&diagram.inner, g).map_err(err)
    }
}

#[pyfunction]
fn component_group_order(diagram: &PyDiagram, grading: &PyGrading) -> usize {
    orbits::component_group_order(&diagram.inner, &grading.inner)
}

#[pyfunction]
fn orbit_dim(diagram: &PyDiagram, grading: &PyGrading) -> PyResult<usize> {
    oracle::orbit_dim(&diagram.inner, &grading.inner).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (diagram, grading, trials = oracle::DEFAULT_TRIALS, seed = 0))]
fn is_distinguished_oracle(
    diagram: &PyDiagram,
    grading: &PyGrading,
    trials: usize,
    seed: u64,
) -> PyResult<bool> {
    oracle::is_distinguished_oracle(&diagram.inner, &grading.inner, trials, seed).map_err(err)
}

/// Blocks of the matrix representative as `"p/q"` strings.
#[pyfunction]
fn representative<'py>(py: Python<'py>, diagram: &PyDiagram, grading: &PyGrading) -> PyResult<Bound<'py, PyAny>> {
    let x = oracle::build_representative(&diagram.inner, &grading.inner).map_err(err)?;
    to_py(py, &x.dump())
}

fn family(name: &str, l: Option<usize>, m: Option<usize>, a: Option<usize>) -> PyResult<Family> {
    let need = |v: Option<usize>, what: &str| {
        v.ok_or_else(|| PyValueError::new_err(format!("{what} is required for family {name}")))
    };
    Ok(match name {
        "A" => Family::A { l: need(l, "l")? },
        "C" => Family::C { l: need(l, "l")? },
        "D" => Family::D { l: need(l, "l")? },
        "dist-A" => Family::DistA { l: need(l, "l")? },
        "dist-C" => Family::DistC { l: need(l, "l")? },
        "dist-D" => Family::DistD { l: need(l, "l")? },
        "dist-AI" => Family::DistAI {
            m: need(m, "m")?,
            a: need(a, "a")?,
        },
        other => return Err(PyValueError::new_err(format!("unknown family {other:?}"))),
    })
}

/// Coefficients `c_0..=c_n` of a family's generating function.
#[pyfunction]
#[pyo3(signature = (name, n, l = None, m = None, a = None))]
fn generating_function(name: &str, n: usize, l: Option<usize>, m: Option<usize>, a: Option<usize>) -> PyResult<Vec<BigInt>> {
    let s = series::gf(family(name, l, m, a)?, n).map_err(err)?;
    Ok(s.coeffs().to_vec())
}

/// Rows comparing generating-function coefficients, weight sums and enumeration.
#[pyfunction]
#[pyo3(signature = (name, n, l = None, m = None, a = None))]
fn count_table<'py>(
    py: Python<'py>,
    name: &str,
    n: usize,
    l: Option<usize>,
    m: Option<usize>,
    a: Option<usize>,
) -> PyResult<Bound<'py, PyAny>> {
    let rows = series::count_table(family(name, l, m, a)?, n).map_err(err)?;
    to_py(py, &rows)
}

/// Stratum labels: AI needs `a`, type II ignores it.
#[pyfunction]
#[pyo3(signature = (grading, a = None))]
fn strata<'py>(py: Python<'py>, grading: &PyGrading, a: Option<usize>) -> PyResult<Bound<'py, PyAny>> {
    let g = &grading.inner;
    if g.case() == Case::AI {
        let a = a.ok_or_else(|| PyValueError::new_err("a is required for AI"))?;
        to_py(py, &orbits::enumerate_strata_ai(g, a).map_err(err)?)
    } else {
        to_py(py, &orbits::enumerate_strata_ii(g).map_err(err)?)
    }
}

/// Character-sheaf labels in the CLI's JSON schema.
#[pyfunction]
#[pyo3(signature = (grading, a = None))]
fn catalog<'py>(py: Python<'py>, grading: &PyGrading, a: Option<usize>) -> PyResult<Bound<'py, PyAny>> {
    let g = &grading.inner;
    if g.case() == Case::AI {
        let a = a.ok_or_else(|| PyValueError::new_err("a is required for AI"))?;
        to_py(py, &sheaves::catalog_ai(g, a).map_err(err)?)
    } else {
        to_py(py, &sheaves::catalog_ii(g).map_err(err)?)
    }
}

#[pyfunction]
#[pyo3(signature = (grading, a = 1))]
fn verify_bijection<'py>(py: Python<'py>, grading: &PyGrading, a: usize) -> PyResult<Bound<'py, PyAny>> {
    to_py(py, &sheaves::verify_bijection(&grading.inner, a).map_err(err)?)
}

#[pyfunction]
fn cuspidal<'py>(py: Python<'py>, grading: &PyGrading) -> PyResult<Bound<'py, PyAny>> {
    to_py(py, &sheaves::cuspidal_ai(&grading.inner).map_err(err)?)
}

#[pymodule]
fn graded_orbits_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyDiagram>()?;
    m.add_class::<PyGrading>()?;
    m.add_function(wrap_pyfunction!(orbits_of, m)?)?;
    m.add_function(wrap_pyfunction!(is_admissible, m)?)?;
    m.add_function(wrap_pyfunction!(is_distinguished, m)?)?;
    m.add_function(wrap_pyfunction!(component_group_order, m)?)?;
    m.add_function(wrap_pyfunction!(orbit_dim, m)?)?;
    m.add_function(wrap_pyfunction!(is_distinguished_oracle, m)?)?;
    m.add_function(wrap_pyfunction!(representative, m)?)?;
    m.add_function(wrap_pyfunction!(generating_function, m)?)?;
    m.add_function(wrap_pyfunction!(count_table, m)?)?;
    m.add_function(wrap_pyfunction!(strata, m)?)?;
    m.add_function(wrap_pyfunction!(catalog, m)?)?;
    m.add_function(wrap_pyfunction!(verify_bijection, m)?)?;
    m.add_function(wrap_pyfunction!(cuspidal, m)?)?;
    Ok(())
}
