use std::path::PathBuf;
use std::time::Duration;

use pyo3::exceptions::{PyOSError, PyTimeoutError, PyValueError};
use pyo3::prelude::*;

use secantlab::groebner::{self, Budget};
use secantlab::hilbert;
use secantlab::modres;
use secantlab::oracle::{self, VarietyDescriptor};
use secantlab::poly::{parse_poly, Field, MonomialOrder, Ring};
use secantlab::variety::{self as var, EmbeddedVariety, PointOnVariety};
use secantlab::Error;

fn py_err(e: Error) -> PyErr {
    match e {
        Error::Timeout { .. } | Error::Truncated { .. } => PyTimeoutError::new_err(e.to_string()),
        Error::Io(_) => PyOSError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

trait IntoPy<T> {
    fn py(self) -> PyResult<T>;
}

impl<T> IntoPy<T> for secantlab::Result<T> {
    fn py(self) -> PyResult<T> {
        self.map_err(py_err)
    }
}

fn budget(timeout: Option<f64>, degree_cap: Option<u32>) -> PyResult<Budget> {
    let b = match timeout {
        None => Budget::unlimited(),
        Some(t) if t > 0.0 && t.is_finite() => Budget::with_timeout(Duration::from_secs_f64(t)),
        Some(_) => return Err(PyValueError::new_err("timeout must be positive")),
    };
    Ok(b.degree_cap(degree_cap))
}

fn field(s: &str) -> PyResult<Field> {
    s.parse().py()
}

fn to_py(py: Python<'_>, v: &serde_json::Value) -> PyResult<Py<PyAny>> {
    let json = py.import("json")?;
    Ok(json.call_method1("loads", (v.to_string(),))?.unbind())
}

/// Polynomial ideal over QQ or F_p, generators given as strings.
#[pyclass(name = "Ideal", module = "secantlab_py", frozen, skip_from_py_object)]
struct PyIdeal {
    inner: groebner::Ideal,
}

#[pymethods]
impl PyIdeal {
    #[new]
    #[pyo3(signature = (vars, gens, field = "qq"))]
    fn new(vars: Vec<String>, gens: Vec<String>, field: &str) -> PyResult<Self> {
        let ring = Ring::new(self::field(field)?, &vars).py()?;
        let gens: Vec<&str> = gens.iter().map(String::as_str).collect();
        Ok(PyIdeal {
            inner: groebner::Ideal::parse(&ring, &gens).py()?,
        })
    }

    #[getter]
    fn vars(&self) -> Vec<String> {
        self.inner.ring().names().to_vec()
    }

    #[getter]
    fn field(&self) -> String {
        self.inner.ring().field().to_string()
    }

    #[getter]
    fn gens(&self) -> Vec<String> {
        self.inner.gens().iter().map(|g| g.to_string()).collect()
    }

    fn is_homogeneous(&self) -> bool {
        self.inner.is_homogeneous()
    }

    /// Reduced Gröbner basis as strings.
    #[pyo3(signature = (order = "grevlex", timeout = None, degree_cap = None))]
    fn groebner(&self, order: &str, timeout: Option<f64>, degree_cap: Option<u32>) -> PyResult<Vec<String>> {
        let order: MonomialOrder = order.parse().py()?;
        let gb = self.inner.groebner(&order, &budget(timeout, degree_cap)?).py()?;
        if gb.truncated {
            return Err(PyTimeoutError::new_err("degree cap reached; basis is partial"));
        }
        Ok(gb.basis.iter().map(|g| g.to_string()).collect())
    }

    fn contains(&self, f: &str) -> PyResult<bool> {
        let f = parse_poly(self.inner.ring(), f).py()?;
        let gb = self.inner.groebner(&MonomialOrder::Grevlex, &Budget::unlimited()).py()?;
        gb.contains(&f).py()
    }

    fn normal_form(&self, f: &str) -> PyResult<String> {
        let f = parse_poly(self.inner.ring(), f).py()?;
        let gb = self.inner.groebner(&MonomialOrder::Grevlex, &Budget::unlimited()).py()?;
        Ok(gb.normal_form(&f).py()?.to_string())
    }

    /// `{"dim", "krull_dim", "degree", "hilbert_numerator"}` of a homogeneous ideal.
    #[pyo3(signature = (timeout = None))]
    fn hilbert(&self, py: Python<'_>, timeout: Option<f64>) -> PyResult<Py<PyAny>> {
        let h = hilbert::dim_degree(&self.inner, &budget(timeout, None)?).py()?;
        to_py(py, &h.to_json())
    }

    /// Graded Betti numbers as `(i, j, beta_ij)` triples.
    #[pyo3(signature = (timeout = None))]
    fn betti(&self, timeout: Option<f64>) -> PyResult<Vec<(i64, i64, i64)>> {
        let r = modres::free_resolution(&self.inner, true, &budget(timeout, None)?).py()?;
        Ok(r.betti().triples().into_iter().map(|[i, j, b]| (i, j, b)).collect())
    }

    #[pyo3(signature = (timeout = None))]
    fn depth(&self, timeout: Option<f64>) -> PyResult<usize> {
        modres::graded_depth(&self.inner, &budget(timeout, None)?).py()
    }

    fn __eq__(&self, other: &PyIdeal) -> PyResult<bool> {
        if self.inner.ring() != other.inner.ring() {
            return Ok(false);
        }
        self.inner.same_ideal(&other.inner, &Budget::unlimited()).py()
    }

    fn __repr__(&self) -> String {
        format!("Ideal({} gens in {} over {})", self.inner.gens().len(), self.vars().join(","), self.field())
    }
}

/// Projective variety given by a homogeneous ideal with embedding metadata.
#[pyclass(name = "Variety", module = "secantlab_py", frozen, skip_from_py_object)]
struct PyVariety {
    inner: EmbeddedVariety,
}

fn point(x: &EmbeddedVariety, coords: &str) -> PyResult<PointOnVariety> {
    PointOnVariety::parse(x.ring().field(), coords).py()
}

#[pymethods]
impl PyVariety {
    #[staticmethod]
    #[pyo3(signature = (d, field = "fp:32003"))]
    fn rational_normal_curve(d: usize, field: &str) -> PyResult<Self> {
        let p = var::rational_normal_curve(d, self::field(field)?).py()?;
        Ok(PyVariety {
            inner: var::implicitize(&p, &Budget::unlimited()).py()?,
        })
    }

    #[staticmethod]
    #[pyo3(signature = (k, field = "fp:32003"))]
    fn veronese(k: u32, field: &str) -> PyResult<Self> {
        let p = var::veronese(k, self::field(field)?).py()?;
        Ok(PyVariety {
            inner: var::implicitize(&p, &Budget::unlimited()).py()?,
        })
    }

    /// Plane curve `f(x, y, z) = 0` re-embedded by `O(k)`.
    #[staticmethod]
    #[pyo3(signature = (f, k = 2, field = "fp:32003", vars = vec!["x".to_string(), "y".to_string(), "z".to_string()]))]
    fn plane_curve_embed(f: &str, k: u32, field: &str, vars: Vec<String>) -> PyResult<Self> {
        let ring = Ring::new(self::field(field)?, &vars).py()?;
        let f = parse_poly(&ring, f).py()?;
        Ok(PyVariety {
            inner: var::plane_curve_embed(&f, k, &Budget::unlimited()).py()?,
        })
    }

    #[staticmethod]
    fn read(path: PathBuf) -> PyResult<Self> {
        Ok(PyVariety {
            inner: var::read_fixture(&path).py()?.variety,
        })
    }

    /// Writes `<stem>.ideal` and `<stem>.meta.json` into `dir`; returns the ideal path.
    fn write(&self, dir: PathBuf, stem: &str) -> PyResult<PathBuf> {
        var::write_fixture(&dir, stem, &self.inner).py()
    }

    #[getter]
    fn ideal(&self) -> PyIdeal {
        PyIdeal {
            inner: self.inner.ideal.clone(),
        }
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.meta.n
    }

    #[getter]
    fn degree_l(&self) -> i64 {
        self.inner.meta.ln
    }

    #[getter]
    fn genus(&self) -> Option<u32> {
        self.inner.meta.genus
    }

    #[pyo3(signature = (timeout = None, degree_cap = None))]
    fn secant(&self, py: Python<'_>, timeout: Option<f64>, degree_cap: Option<u32>) -> PyResult<Self> {
        let b = budget(timeout, degree_cap)?;
        let x = self.inner.clone();
        let s = py.detach(move || var::secant_join(&x, &b)).py()?;
        Ok(PyVariety { inner: s })
    }

    fn contains_point(&self, coords: &str) -> PyResult<bool> {
        point(&self.inner, coords)?.lies_on(&self.inner.ideal).py()
    }

    #[pyo3(signature = (coords, timeout = None))]
    fn multiplicity_at(&self, coords: &str, timeout: Option<f64>) -> PyResult<u64> {
        let p = point(&self.inner, coords)?;
        var::multiplicity_at(&self.inner, &p, &budget(timeout, None)?).py()
    }

    #[pyo3(signature = (coords, timeout = None))]
    fn depth_at(&self, coords: &str, timeout: Option<f64>) -> PyResult<usize> {
        let p = point(&self.inner, coords)?;
        var::depth_at(&self.inner, &p, &budget(timeout, None)?).py()
    }

    fn __repr__(&self) -> String {
        format!(
            "Variety(n={}, Ln={}, {} gens in P^{})",
            self.inner.meta.n,
            self.inner.meta.ln,
            self.inner.ideal.gens().len(),
            self.inner.ambient_dim()
        )
    }
}

fn descriptor(json: &str) -> PyResult<VarietyDescriptor> {
    let d: VarietyDescriptor = serde_json::from_str(json).map_err(|e| PyValueError::new_err(e.to_string()))?;
    d.validate().py()?;
    Ok(d)
}

/// Oracle verdict for a JSON descriptor, as a dict.
#[pyfunction]
fn predict(py: Python<'_>, descriptor_json: &str) -> PyResult<Py<PyAny>> {
    let v = oracle::predict(&descriptor(descriptor_json)?).py()?;
    to_py(py, &serde_json::to_value(v).map_err(|e| PyValueError::new_err(e.to_string()))?)
}

/// Predicted-versus-computed report, as a dict.
#[pyfunction]
#[pyo3(signature = (descriptor_json, variety, coords, timeout = None))]
fn verify(
    py: Python<'_>,
    descriptor_json: &str,
    variety: &PyVariety,
    coords: &str,
    timeout: Option<f64>,
) -> PyResult<Py<PyAny>> {
    let d = descriptor(descriptor_json)?;
    let p = point(&variety.inner, coords)?;
    let b = budget(timeout, None)?;
    let x = variety.inner.clone();
    let r = py.detach(move || oracle::verify(&d, &x, &p, &b)).py()?;
    to_py(py, &serde_json::to_value(r).map_err(|e| PyValueError::new_err(e.to_string()))?)
}

#[pymodule]
fn secantlab_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyIdeal>()?;
    m.add_class::<PyVariety>()?;
    m.add_function(wrap_pyfunction!(predict, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    Ok(())
}
