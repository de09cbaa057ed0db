//! Python module `ipf`: elements, composition, parsing, the group
//! quotient, congruences, equation solving and the property suites.

use std::collections::BTreeMap;

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use ipf_core::congruence::CongruenceDescriptor;
use ipf_core::suites::{run_suite, Suite, SuiteConfig, DEFAULT_SEED};
use ipf_core::words::literal_dim;
use ipf_core::{IpfElement, IpfError, Point};

fn err(e: IpfError) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// An order isomorphism `↑x → ↑y`, `z ↦ (z − x)σ + y`.
#[pyclass(name = "Element", module = "ipf", frozen, eq, hash, ord, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct Element(IpfElement);

#[pymethods]
impl Element {
    /// `sigma` is a 1-based one-line permutation.
    #[new]
    fn new(sigma: Vec<i64>, x: Vec<i64>, y: Vec<i64>) -> PyResult<Self> {
        IpfElement::from_parts(&sigma, &x, &y).map(Element).map_err(err)
    }

    #[staticmethod]
    fn identity(n: usize) -> Self {
        Element(IpfElement::identity(n))
    }

    #[staticmethod]
    fn idempotent_on(x: Vec<i64>) -> PyResult<Self> {
        Ok(Element(IpfElement::idempotent_on(Point::new(x).map_err(err)?)))
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.dim()
    }

    #[getter]
    fn sigma(&self) -> Vec<i64> {
        self.0.sigma().one_line()
    }

    #[getter]
    fn x(&self) -> Vec<i64> {
        self.0.x().coords().to_vec()
    }

    #[getter]
    fn y(&self) -> Vec<i64> {
        self.0.y().coords().to_vec()
    }

    /// Apply `self` first, then `other`.
    fn compose(&self, other: &Element) -> PyResult<Element> {
        self.0.compose(&other.0).map(Element).map_err(err)
    }

    fn __mul__(&self, other: &Element) -> PyResult<Element> {
        self.compose(other)
    }

    fn inverse(&self) -> Element {
        Element(self.0.inverse())
    }

    fn is_idempotent(&self) -> bool {
        self.0.is_idempotent()
    }

    fn apply(&self, z: Vec<i64>) -> PyResult<Vec<i64>> {
        let z = Point::new(z).map_err(err)?;
        Ok(self.0.apply(&z).map_err(err)?.into_inner())
    }

    fn natural_leq(&self, other: &Element) -> PyResult<bool> {
        self.0.natural_leq(&other.0).map_err(err)
    }

    fn mg_related(&self, other: &Element) -> PyResult<bool> {
        ipf_core::mg_related(&self.0, &other.0).map_err(err)
    }

    /// Green's relations as a dict with keys `L`, `R`, `H`, `D`, `J`.
    fn green(&self, other: &Element) -> PyResult<BTreeMap<&'static str, bool>> {
        let g = self.0.green_relations(&other.0).map_err(err)?;
        Ok(BTreeMap::from([("L", g.l), ("R", g.r), ("H", g.h), ("D", g.d), ("J", g.j)]))
    }

    /// Image in the group quotient as `(sigma, z)`.
    fn upsilon(&self) -> PyResult<(Vec<i64>, Vec<i64>)> {
        let q = ipf_core::upsilon(&self.0).map_err(err)?;
        Ok((q.sigma.one_line(), q.z))
    }

    /// Image in the semidirect product as `(sigma, [(i, j), ...])`.
    fn psi(&self) -> (Vec<i64>, Vec<(i64, i64)>) {
        let p = ipf_core::psi(&self.0);
        (p.sigma.one_line(), p.pairs)
    }

    fn top_of_class(&self) -> Element {
        Element(ipf_core::top_of_class(&self.0))
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("ipf.eval({:?})", self.0.to_string())
    }
}

/// Congruence generated by a pair of elements.
#[pyclass(name = "Congruence", module = "ipf", frozen)]
struct Congruence(CongruenceDescriptor);

#[pymethods]
impl Congruence {
    #[getter]
    fn kind(&self) -> &'static str {
        match self.0 {
            CongruenceDescriptor::Identity { .. } => "identity",
            CongruenceDescriptor::Group(_) => "group",
        }
    }

    /// HNF rows of the translation lattice (empty for the identity).
    #[getter]
    fn lattice(&self) -> Vec<Vec<i64>> {
        self.0
            .subgroup()
            .map(|g| g.lattice().rows().to_vec())
            .unwrap_or_default()
    }

    fn relates(&self, c: &Element, d: &Element) -> PyResult<bool> {
        self.0.relates(&c.0, &d.0).map_err(err)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }
}

/// Evaluates an expression; `n` may be omitted when a literal fixes it.
#[pyfunction]
#[pyo3(signature = (text, n=None))]
fn eval(text: &str, n: Option<usize>) -> PyResult<Element> {
    let expr = ipf_core::parse(text).map_err(err)?;
    let n = n
        .or_else(|| literal_dim(&expr))
        .ok_or_else(|| PyValueError::new_err("cannot infer the dimension; pass n"))?;
    ipf_core::evaluate(&expr, n).map(Element).map_err(err)
}

#[pyfunction]
fn congruence(a: &Element, b: &Element) -> PyResult<Congruence> {
    ipf_core::congruence_from_pair(&a.0, &b.0)
        .map(Congruence)
        .map_err(err)
}

/// All `chi` with `chi * a == b`.
#[pyfunction]
fn solve_left(a: &Element, b: &Element) -> PyResult<Vec<Element>> {
    Ok(ipf_core::solve_left(&a.0, &b.0)
        .map_err(err)?
        .into_iter()
        .map(Element)
        .collect())
}

/// All `chi` with `a * chi == b`.
#[pyfunction]
fn solve_right(a: &Element, b: &Element) -> PyResult<Vec<Element>> {
    Ok(ipf_core::solve_right(&a.0, &b.0)
        .map_err(err)?
        .into_iter()
        .map(Element)
        .collect())
}

#[pyfunction]
fn units(n: usize) -> PyResult<Vec<Element>> {
    Ok(ipf_core::enumerate_units(n)
        .map_err(err)?
        .into_iter()
        .map(Element)
        .collect())
}

/// `(id, passed, cases, detail)` for one criterion.
type Report = (String, bool, u64, Option<String>);

/// Runs a property suite; returns one report tuple per criterion.
#[pyfunction]
#[pyo3(signature = (suite="all", n=2, max=3, seed=DEFAULT_SEED))]
fn check(
    py: Python<'_>,
    suite: &str,
    n: usize,
    max: i64,
    seed: u64,
) -> PyResult<Vec<Report>> {
    let suite: Suite = suite.parse().map_err(err)?;
    let cfg = SuiteConfig { n, max, seed };
    let reports = py.detach(|| run_suite(suite, &cfg)).map_err(err)?;
    Ok(reports
        .into_iter()
        .map(|r| (r.id.to_string(), r.passed, r.cases, r.detail))
        .collect())
}

#[pymodule]
#[pyo3(name = "ipf")]
fn ipf_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Element>()?;
    m.add_class::<Congruence>()?;
    m.add_function(wrap_pyfunction!(eval, m)?)?;
    m.add_function(wrap_pyfunction!(congruence, m)?)?;
    m.add_function(wrap_pyfunction!(solve_left, m)?)?;
    m.add_function(wrap_pyfunction!(solve_right, m)?)?;
    m.add_function(wrap_pyfunction!(units, m)?)?;
    m.add_function(wrap_pyfunction!(check, m)?)?;
    Ok(())
}
