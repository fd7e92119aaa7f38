//! Python bindings.
//!
//! ```python
//! import frontal_py as fp
//! h3 = fp.Algebra([[2, 2, 2], [0, 2, 2], [0, 1, 2]], one=2, zero=0, labels=["0", "a", "1"])
//! h3.find_operator("succ")   # [1, 2, 2]
//! h3.extension().len()       # 3
//! ```

use pyo3::create_exception;
use pyo3::exceptions::PyException;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use frontal::document::{emit_algebra, parse_algebra, parse_algebra_unchecked};
use frontal::{
    build_extension, check_axioms, classify, enumerate_algebras, extend_frontal, find_operator, lift_hom, spectrum,
    universal_factor, verify, AxiomClass, FiniteHilbertAlgebra, FrontalAlgebra, Guards, Homomorphism, OperatorKind,
    OperatorSearch, Signature, UnaryMap,
};

create_exception!(frontal_py, FrontalError, PyException);

fn err(e: frontal::Error) -> PyErr {
    FrontalError::new_err(e.to_string())
}

fn parse<T: std::str::FromStr<Err = frontal::Error>>(s: &str) -> PyResult<T> {
    s.parse().map_err(err)
}

fn guards() -> Guards {
    Guards::from_env()
}

/// A finite Hilbert algebra given by its implication table.
#[pyclass(name = "Algebra", module = "frontal_py", frozen, skip_from_py_object)]
#[derive(Clone)]
pub struct PyAlgebra {
    inner: FiniteHilbertAlgebra,
}

impl PyAlgebra {
    fn tau(&self, tau: Vec<usize>) -> PyResult<UnaryMap> {
        UnaryMap::new(tau, self.inner.len()).map_err(err)
    }
}

#[pymethods]
impl PyAlgebra {
    #[new]
    #[pyo3(signature = (imp, one, zero=None, meet=None, labels=None))]
    fn new(
        imp: Vec<Vec<usize>>,
        one: usize,
        zero: Option<usize>,
        meet: Option<Vec<Vec<usize>>>,
        labels: Option<Vec<String>>,
    ) -> PyResult<Self> {
        let mut a = FiniteHilbertAlgebra::new(imp, one).map_err(err)?;
        if let Some(l) = labels {
            a = a.with_labels(l).map_err(err)?;
        }
        if let Some(z) = zero {
            a = a.with_zero(z).map_err(err)?;
        }
        if let Some(m) = meet {
            a = a.with_meet(m).map_err(err)?;
        }
        Ok(Self { inner: a })
    }

    /// Loads a JSON algebra document; a `tau` field is ignored here.
    #[staticmethod]
    #[pyo3(signature = (text, checked=true))]
    fn from_json(text: &str, checked: bool) -> PyResult<Self> {
        let loaded = if checked { parse_algebra(text, true) } else { parse_algebra_unchecked(text) };
        Ok(Self { inner: loaded.map_err(err)?.algebra })
    }

    #[pyo3(signature = (tau=None, name=None))]
    fn to_json(&self, tau: Option<Vec<usize>>, name: Option<&str>) -> PyResult<String> {
        let t = tau.map(|t| self.tau(t)).transpose()?;
        Ok(emit_algebra(&self.inner, t.as_ref(), name))
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn __repr__(&self) -> String {
        format!("Algebra(size={}, class={})", self.inner.len(), AxiomClass::declared_by(&self.inner))
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }

    #[getter]
    fn one(&self) -> usize {
        self.inner.one()
    }

    #[getter]
    fn zero(&self) -> Option<usize> {
        self.inner.zero()
    }

    #[getter]
    fn labels(&self) -> Vec<String> {
        self.inner.elements().map(|i| self.inner.label(i)).collect()
    }

    fn imp(&self, a: usize, b: usize) -> PyResult<usize> {
        let n = self.inner.len();
        if a >= n || b >= n {
            return Err(pyo3::exceptions::PyIndexError::new_err("element out of range"));
        }
        Ok(self.inner.imp(a, b))
    }

    fn imp_table(&self) -> Vec<Vec<usize>> {
        self.inner.imp_table()
    }

    fn meet_table(&self) -> Option<Vec<Vec<usize>>> {
        self.inner.meet_table()
    }

    fn leq(&self, a: usize, b: usize) -> PyResult<bool> {
        Ok(self.imp(a, b)? == self.inner.one())
    }

    /// Axiom class declared by the optional fields.
    fn declared_class(&self) -> &'static str {
        AxiomClass::declared_by(&self.inner).name()
    }

    /// List of `(law, witness)` violations; empty when the class holds.
    #[pyo3(signature = (class_=None))]
    fn check(&self, class_: Option<&str>) -> PyResult<Vec<(String, Vec<usize>)>> {
        let class = match class_ {
            Some(c) => parse(c)?,
            None => AxiomClass::declared_by(&self.inner),
        };
        let report = check_axioms(&self.inner, class).map_err(err)?;
        Ok(report.violations.iter().map(|v| (v.law.to_string(), v.witness.clone())).collect())
    }

    /// Irreducible filters as sorted element lists.
    fn spectrum(&self) -> PyResult<Vec<Vec<usize>>> {
        let s = spectrum(&self.inner, &guards()).map_err(err)?;
        Ok(s.filters().iter().map(|f| f.to_vec()).collect())
    }

    fn extension(&self) -> PyResult<PyExtension> {
        Ok(PyExtension {
            inner: build_extension(&self.inner, &guards()).map_err(err)?,
        })
    }

    /// The canonical operator `succ`, `gamma` or `gabbay`, or None when absent.
    fn find_operator(&self, op: &str) -> PyResult<Option<Vec<usize>>> {
        let kind: OperatorKind = parse(op)?;
        Ok(match find_operator(&self.inner, kind).map_err(err)? {
            OperatorSearch::Exists(t) => Some(t.into_vec()),
            OperatorSearch::Absent(_) => None,
        })
    }

    /// `{"frontal": bool, "succ": bool|None, "gamma": ..., "gabbay": ...}`.
    fn classify<'py>(&self, py: Python<'py>, tau: Vec<usize>) -> PyResult<Bound<'py, PyDict>> {
        let t = self.tau(tau)?;
        let c = classify(&self.inner, &t).map_err(err)?;
        let d = PyDict::new(py);
        d.set_item("frontal", c.frontal.passes())?;
        for (kind, verdict) in &c.verdicts {
            d.set_item(kind.name(), verdict.as_ref().map(|r| r.passes()))?;
        }
        Ok(d)
    }

    /// Runs the invariant suite; returns `(name, passed, detail)` per check.
    #[pyo3(signature = (tau=None))]
    fn verify(&self, tau: Option<Vec<usize>>) -> PyResult<Vec<(String, bool, Option<String>)>> {
        let t = tau.map(|t| self.tau(t)).transpose()?;
        let report = verify(&self.inner, t.as_ref(), &guards()).map_err(err)?;
        Ok(report.checks.into_iter().map(|c| (c.name, c.passed, c.detail)).collect())
    }
}

/// The free implicative semilattice extension L(H).
#[pyclass(name = "Extension", module = "frontal_py", frozen)]
pub struct PyExtension {
    inner: frontal::Extension,
}

#[pymethods]
impl PyExtension {
    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn len(&self) -> usize {
        self.inner.len()
    }

    /// Elements as sets of spectrum points.
    fn elements(&self) -> Vec<Vec<usize>> {
        self.inner.elements().iter().map(|s| s.to_vec()).collect()
    }

    fn gens(&self, i: usize) -> PyResult<Vec<usize>> {
        if i >= self.inner.len() {
            return Err(pyo3::exceptions::PyIndexError::new_err("element out of range"));
        }
        Ok(self.inner.gens(i).to_vec())
    }

    /// Index in L(H) of the image of `a`.
    fn phi(&self, a: usize) -> PyResult<usize> {
        if a >= self.inner.source().len() {
            return Err(pyo3::exceptions::PyIndexError::new_err("element out of range"));
        }
        Ok(self.inner.phi_index(a))
    }

    fn algebra(&self) -> PyAlgebra {
        PyAlgebra {
            inner: self.inner.algebra().clone(),
        }
    }

    /// Extends a frontal operator on H to L(H).
    fn extend_frontal(&self, tau: Vec<usize>) -> PyResult<Vec<usize>> {
        let h = self.inner.source();
        let t = UnaryMap::new(tau, h.len()).map_err(err)?;
        let f = FrontalAlgebra::new(h.clone(), t).map_err(err)?;
        Ok(extend_frontal(&self.inner, &f).map_err(err)?.into_vec())
    }

    /// Lifts a homomorphism from this source to `target`'s source.
    fn lift(&self, target: &PyExtension, map: Vec<usize>) -> PyResult<Vec<usize>> {
        let h = Homomorphism::new(self.inner.source(), target.inner.source(), map, Signature::HILBERT);
        Ok(lift_hom(&h, &self.inner, &target.inner).map_err(err)?.map)
    }

    /// Factors a homomorphism into an implicative semilattice through L(H).
    fn factor(&self, target: &PyAlgebra, map: Vec<usize>) -> PyResult<Vec<usize>> {
        let h = Homomorphism::new(self.inner.source(), &target.inner, map, Signature::HILBERT);
        Ok(universal_factor(&self.inner, &target.inner, &h).map_err(err)?.map)
    }
}

/// Algebras of a size and class up to isomorphism, optionally only those
/// lacking an operator.
#[pyfunction]
#[pyo3(signature = (size, class_="hilbert", without=None))]
fn search(size: usize, class_: &str, without: Option<&str>) -> PyResult<Vec<PyAlgebra>> {
    let class: AxiomClass = parse(class_)?;
    let without: Option<OperatorKind> = without.map(parse).transpose()?;
    let mut out = Vec::new();
    for alg in enumerate_algebras(size, class, &guards()).map_err(err)? {
        if let Some(op) = without {
            if find_operator(&alg, op).map_err(err)?.map().is_some() {
                continue;
            }
        }
        out.push(PyAlgebra { inner: alg });
    }
    Ok(out)
}

#[pymodule]
fn frontal_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyAlgebra>()?;
    m.add_class::<PyExtension>()?;
    m.add_function(wrap_pyfunction!(search, m)?)?;
    m.add("FrontalError", m.py().get_type::<FrontalError>())?;
    Ok(())
}
