//! Python bindings: rings from specs, element arithmetic, classification,
//! decompositions, the check suite and the counterexample hunter.
//!
//! Elements are plain integers (their ids). Reports are returned as JSON
//! strings with the same shape as the CLI's `--format json` output.

use std::collections::BTreeMap;

use finring::classify::{self, decompositions, uniquely_weakly_flag, Interpretation, Mode};
use finring::harness::{self, Catalog};
use finring::hunt::{self, HuntCaps, Target};
use finring::spec::build_ring;
use finring::{ElementId, Limits};
use pyo3::exceptions::{PyIndexError, PyValueError};
use pyo3::prelude::*;

fn value_error(e: impl ToString) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn to_json<T: serde::Serialize>(value: &T) -> PyResult<String> {
    serde_json::to_string(value).map_err(value_error)
}

fn parse_mode(mode: &str) -> PyResult<Mode> {
    match mode {
        "nil-clean" => Ok(Mode::NilClean),
        "weakly" => Ok(Mode::Weakly),
        "strongly" => Ok(Mode::Strongly),
        "strongly-weakly" => Ok(Mode::StronglyWeakly),
        other => Err(value_error(format!(
            "unknown mode `{other}` (nil-clean, weakly, strongly, strongly-weakly)"
        ))),
    }
}

fn load_catalog(catalog: Option<&str>, budget: Option<usize>) -> PyResult<Catalog> {
    let c = match catalog {
        None => Catalog::default_catalog(),
        Some(text) => Catalog::parse(text).map_err(value_error)?,
    };
    Ok(match budget {
        Some(b) => c.with_budget(b),
        None => c,
    })
}

/// A finite ring built from a spec such as `"T2(Z4)"` or `"K(2)(Z4)"`.
#[pyclass(name = "Ring", frozen, module = "finring_py")]
struct PyRing {
    ring: finring::Ring,
}

impl PyRing {
    fn elt(&self, x: u32) -> PyResult<ElementId> {
        let id = ElementId(x);
        if self.ring.contains(id) {
            Ok(id)
        } else {
            Err(PyIndexError::new_err(format!(
                "{x} is not an element of {}",
                self.ring.label()
            )))
        }
    }
}

#[pymethods]
impl PyRing {
    #[new]
    fn new(spec: &str) -> PyResult<Self> {
        let ring = build_ring(spec, &Limits::default()).map_err(value_error)?;
        Ok(PyRing { ring })
    }

    #[getter]
    fn label(&self) -> String {
        self.ring.label().to_string()
    }

    #[getter]
    fn order(&self) -> usize {
        self.ring.order()
    }

    #[getter]
    fn zero(&self) -> u32 {
        self.ring.zero().0
    }

    #[getter]
    fn one(&self) -> u32 {
        self.ring.one().0
    }

    fn __len__(&self) -> usize {
        self.ring.order()
    }

    fn __repr__(&self) -> String {
        format!("Ring('{}')", self.ring.label())
    }

    fn add(&self, a: u32, b: u32) -> PyResult<u32> {
        Ok(self.ring.add(self.elt(a)?, self.elt(b)?).0)
    }

    fn mul(&self, a: u32, b: u32) -> PyResult<u32> {
        Ok(self.ring.mul(self.elt(a)?, self.elt(b)?).0)
    }

    fn neg(&self, a: u32) -> PyResult<u32> {
        Ok(self.ring.neg(self.elt(a)?).0)
    }

    fn sub(&self, a: u32, b: u32) -> PyResult<u32> {
        Ok(self.ring.sub(self.elt(a)?, self.elt(b)?).0)
    }

    /// Element id from a literal such as `"2"`, `"[[0,1],[1,1]]"` or `"(1,0)"`.
    fn element(&self, text: &str) -> PyResult<u32> {
        Ok(self.ring.parse_element(text).map_err(value_error)?.0)
    }

    fn describe(&self, x: u32) -> PyResult<String> {
        Ok(self.ring.describe(self.elt(x)?))
    }

    fn inverse(&self, x: u32) -> PyResult<Option<u32>> {
        Ok(self.ring.inverse(self.elt(x)?).map(|y| y.0))
    }

    fn is_unit(&self, x: u32) -> PyResult<bool> {
        Ok(self.ring.is_unit(self.elt(x)?))
    }

    fn is_nilpotent(&self, x: u32) -> PyResult<bool> {
        Ok(self.ring.is_nilpotent(self.elt(x)?))
    }

    fn units(&self) -> Vec<u32> {
        self.ring.units().ids()
    }

    fn idempotents(&self) -> Vec<u32> {
        self.ring.idempotents().ids()
    }

    fn nilpotents(&self) -> Vec<u32> {
        self.ring.nilpotents().ids()
    }

    fn jacobson_radical(&self) -> Vec<u32> {
        self.ring.jacobson_radical().ids()
    }

    fn center(&self) -> Vec<u32> {
        self.ring.center().ids()
    }

    /// Ring-class flags by name.
    fn flags(&self) -> BTreeMap<&'static str, bool> {
        classify::profile(&self.ring).flags.entries().into_iter().collect()
    }

    /// Full profile (flags, facts, sets, refutations) as JSON.
    fn classify(&self, py: Python<'_>) -> PyResult<String> {
        let profile = py.detach(|| classify::classify_ring(&self.ring));
        to_json(&profile)
    }

    /// Both readings of "uniquely weakly nil-clean" as JSON.
    fn uniqueness(&self) -> PyResult<String> {
        to_json(&[
            uniquely_weakly_flag(&self.ring, Interpretation::RingLevel),
            uniquely_weakly_flag(&self.ring, Interpretation::ElementLevel),
        ])
    }

    /// `(sign, idempotent, nilpotent)` triples with `x = sign·e + n`.
    #[pyo3(signature = (x, mode = "weakly"))]
    fn decompose(&self, x: u32, mode: &str) -> PyResult<Vec<(i8, u32, u32)>> {
        let mode = parse_mode(mode)?;
        Ok(decompositions(&self.ring, self.elt(x)?, mode)
            .into_iter()
            .map(|w| (w.sign, w.idempotent.0, w.nilpotent.0))
            .collect())
    }

    /// Element profile as JSON.
    fn classify_element(&self, x: u32) -> PyResult<String> {
        to_json(&classify::classify_element(&self.ring, self.elt(x)?))
    }

    /// Whether every ring axiom holds.
    fn audit(&self) -> bool {
        self.ring.audit().passed()
    }
}

/// Runs registered checks (all when `checks` is empty) and returns the
/// suite report as JSON. `catalog` is catalog file text.
#[pyfunction]
#[pyo3(signature = (checks = Vec::new(), catalog = None, budget = None))]
fn verify(py: Python<'_>, checks: Vec<String>, catalog: Option<&str>, budget: Option<usize>) -> PyResult<String> {
    let catalog = load_catalog(catalog, budget)?;
    let report = py.detach(|| {
        let ids: Vec<&str> = checks.iter().map(String::as_str).collect();
        let (entries, ctx) = harness::prepare(&catalog);
        harness::suite_from(entries, &ctx, &ids)
    });
    to_json(&report.map_err(value_error)?)
}

/// Runs the hunter on one target and returns its report as JSON.
#[pyfunction(name = "hunt")]
#[pyo3(signature = (target, max_zn = 100, families = true, catalog = None, budget = None))]
fn run_hunt(
    py: Python<'_>,
    target: &str,
    max_zn: u32,
    families: bool,
    catalog: Option<&str>,
    budget: Option<usize>,
) -> PyResult<String> {
    let target: Target = target.parse().map_err(value_error)?;
    let catalog = load_catalog(catalog, budget)?;
    let caps = HuntCaps { max_zn, families };
    let report = py.detach(|| hunt::hunt(target, &catalog, &caps));
    to_json(&report)
}

/// Registered check ids with their statements.
#[pyfunction]
fn checks() -> Vec<(&'static str, &'static str)> {
    harness::registry().iter().map(|c| (c.id, c.statement)).collect()
}

#[pymodule]
fn finring_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyRing>()?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(run_hunt, m)?)?;
    m.add_function(wrap_pyfunction!(checks, m)?)?;
    Ok(())
}
