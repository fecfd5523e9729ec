//! Python bindings: a `System` class wrapping a parsed polynomial
//! system, with methods for each pipeline stage. Structured results come
//! back as plain Python dicts mirroring the CLI's JSON document.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyAny, PyDict, PyList};

use cbb_core::compsys::{self, GenericBranchPayload, VanishingMode};
use cbb_core::context::Block;
use cbb_core::domain::QQ;
use cbb_core::error::Error;
use cbb_core::groebner;
use cbb_core::parametric::TermOrderBorderBasis;
use cbb_core::parse::{parse_specialization, parse_system, SystemFile};
use cbb_core::render::{self, StructuredDoc};

fn to_py_err(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn vanishing_mode(name: &str) -> PyResult<VanishingMode> {
    match name {
        "squares" => Ok(VanishingMode::Squares),
        "linear-univariate" => Ok(VanishingMode::LinearUnivariate),
        other => Err(PyValueError::new_err(format!(
            "unknown vanishing mode `{other}`"
        ))),
    }
}

fn generic_branch(name: &str) -> PyResult<GenericBranchPayload> {
    match name {
        "f" => Ok(GenericBranchPayload::Generators),
        "eliminant" => Ok(GenericBranchPayload::Eliminant),
        other => Err(PyValueError::new_err(format!(
            "unknown generic branch `{other}`"
        ))),
    }
}

fn json_to_py(py: Python<'_>, value: &serde_json::Value) -> Py<PyAny> {
    match value {
        serde_json::Value::Null => py.None(),
        serde_json::Value::Bool(b) => b.into_pyobject(py).unwrap().to_owned().into_any().unbind(),
        serde_json::Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                i.into_pyobject(py).unwrap().into_any().unbind()
            } else {
                n.as_f64()
                    .unwrap()
                    .into_pyobject(py)
                    .unwrap()
                    .into_any()
                    .unbind()
            }
        }
        serde_json::Value::String(s) => s.into_pyobject(py).unwrap().into_any().unbind(),
        serde_json::Value::Array(items) => {
            let list = PyList::empty(py);
            for item in items {
                list.append(json_to_py(py, item)).unwrap();
            }
            list.into_any().unbind()
        }
        serde_json::Value::Object(map) => {
            let dict = PyDict::new(py);
            for (k, v) in map {
                dict.set_item(k, json_to_py(py, v)).unwrap();
            }
            dict.into_any().unbind()
        }
    }
}

fn doc_to_py(py: Python<'_>, doc: &StructuredDoc) -> Py<PyAny> {
    let value = serde_json::to_value(doc).expect("serializable");
    json_to_py(py, &value)
}

/// A parsed polynomial system over main variables and parameters.
#[pyclass]
struct System {
    file: SystemFile,
}

#[pymethods]
impl System {
    /// Parse a system from its text form.
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        Ok(System {
            file: parse_system(text).map_err(to_py_err)?,
        })
    }

    #[getter]
    fn main_vars(&self) -> Vec<String> {
        self.file.ctx.main_names().to_vec()
    }

    #[getter]
    fn params(&self) -> Vec<String> {
        self.file.ctx.param_names().to_vec()
    }

    #[getter]
    fn order(&self) -> String {
        self.file.order_name.clone()
    }

    /// Canonical text of the generators.
    fn polys(&self) -> Vec<String> {
        self.file
            .polys
            .iter()
            .map(|p| render::render_poly(p, self.file.order))
            .collect()
    }

    /// Reduced Gröbner basis in the declared order.
    fn groebner_basis(&self) -> PyResult<Vec<String>> {
        let gb = groebner::reduced_groebner_basis(&QQ, &self.file.polys, self.file.order)
            .map_err(to_py_err)?;
        Ok(gb
            .gens
            .iter()
            .map(|g| render::render_poly(g, self.file.order))
            .collect())
    }

    /// Generators of the parameter elimination ideal.
    fn eliminate(&self) -> PyResult<Vec<String>> {
        let elim = groebner::elimination_ideal(&self.file.polys).map_err(to_py_err)?;
        Ok(elim
            .iter()
            .map(|g| render::render_poly(g, self.file.order))
            .collect())
    }

    /// Rational points of the parameter variety, as lists of rational
    /// strings.
    fn rational_variety(&self) -> PyResult<Vec<Vec<String>>> {
        let elim = groebner::elimination_ideal(&self.file.polys).map_err(to_py_err)?;
        let variety = cbb_core::rational_variety(&elim).map_err(to_py_err)?;
        Ok(variety
            .iter()
            .map(|s| {
                s.values()
                    .iter()
                    .map(cbb_core::domain::rat_to_string)
                    .collect()
            })
            .collect())
    }

    /// Border basis at a specialization, e.g. `border_basis("z=4")`.
    /// Returns (order_ideal, basis) as lists of strings.
    #[pyo3(signature = (at=None))]
    fn border_basis(&self, at: Option<&str>) -> PyResult<(Vec<String>, Vec<String>)> {
        let sigma = match at {
            Some(text) => parse_specialization(text, &self.file.ctx).map_err(to_py_err)?,
            None if self.file.ctx.n_params() == 0 => cbb_core::Specialization::new(Vec::new()),
            None => {
                return Err(PyValueError::new_err(
                    "an assignment is required when the system has parameters",
                ))
            }
        };
        let specialized =
            compsys::specialize_generators(&self.file.polys, &sigma).map_err(to_py_err)?;
        let nonzero: Vec<_> = specialized.into_iter().filter(|f| !f.is_zero()).collect();
        let gb =
            groebner::reduced_groebner_basis(&QQ, &nonzero, self.file.order).map_err(to_py_err)?;
        let bb =
            cbb_core::gb_to_border_basis(&QQ, &gb, self.file.ctx.n_main()).map_err(to_py_err)?;
        let oi = bb
            .order_ideal
            .iter()
            .map(|m| render::render_monomial(m, &self.file.ctx, Block::Main))
            .collect();
        let els = bb
            .elements
            .iter()
            .map(|e| render::render_poly(e, self.file.order))
            .collect();
        Ok((oi, els))
    }

    /// Border system as a structured dict.
    #[pyo3(signature = (generic_branch_payload="f"))]
    fn border_system(&self, py: Python<'_>, generic_branch_payload: &str) -> PyResult<Py<PyAny>> {
        let bs = compsys::compute_border_system_with(
            &self.file.polys,
            self.file.order,
            generic_branch(generic_branch_payload)?,
            &TermOrderBorderBasis,
        )
        .map_err(to_py_err)?;
        let mut doc = StructuredDoc::new(&self.file.ctx, &self.file.order_name);
        render::border_system_doc(&bs, &mut doc);
        Ok(doc_to_py(py, &doc))
    }

    /// Border system plus comprehensive border basis as a structured dict.
    #[pyo3(signature = (vanishing="squares", generic_branch_payload="f"))]
    fn cbb(
        &self,
        py: Python<'_>,
        vanishing: &str,
        generic_branch_payload: &str,
    ) -> PyResult<Py<PyAny>> {
        let bs = compsys::compute_border_system_with(
            &self.file.polys,
            self.file.order,
            generic_branch(generic_branch_payload)?,
            &TermOrderBorderBasis,
        )
        .map_err(to_py_err)?;
        let cbb = compsys::compute_cbb(&bs, vanishing_mode(vanishing)?).map_err(to_py_err)?;
        let mut doc = StructuredDoc::new(&self.file.ctx, &self.file.order_name);
        render::border_system_doc(&bs, &mut doc);
        render::cbb_doc(&cbb, &mut doc);
        Ok(doc_to_py(py, &doc))
    }

    /// Specialize the comprehensive border basis at a point. Returns
    /// (order_ideal, basis) as lists of strings.
    #[pyo3(signature = (at, vanishing="squares"))]
    fn specialize_cbb(&self, at: &str, vanishing: &str) -> PyResult<(Vec<String>, Vec<String>)> {
        let sigma = parse_specialization(at, &self.file.ctx).map_err(to_py_err)?;
        let bs =
            compsys::compute_border_system(&self.file.polys, self.file.order).map_err(to_py_err)?;
        let cbb = compsys::compute_cbb(&bs, vanishing_mode(vanishing)?).map_err(to_py_err)?;
        let sb = compsys::specialize_cbb(&cbb, &sigma).map_err(to_py_err)?;
        let oi = sb
            .order_ideal
            .iter()
            .map(|m| render::render_monomial(m, &self.file.ctx, Block::Main))
            .collect();
        let els = sb
            .elements
            .iter()
            .map(|e| render::render_poly(e, self.file.order))
            .collect();
        Ok((oi, els))
    }

    /// Run the verification oracle. Returns a dict with `passed` and a
    /// list of per-point report lines.
    #[pyo3(signature = (mode, samples=10, seed=0, vanishing="squares"))]
    fn verify(
        &self,
        py: Python<'_>,
        mode: &str,
        samples: usize,
        seed: u64,
        vanishing: &str,
    ) -> PyResult<Py<PyAny>> {
        let report = match mode {
            "bs" => {
                let bs = compsys::compute_border_system(&self.file.polys, self.file.order)
                    .map_err(to_py_err)?;
                compsys::verify_border_system(&bs, &self.file.polys, samples, seed)
            }
            "cbb" => {
                let bs = compsys::compute_border_system(&self.file.polys, self.file.order)
                    .map_err(to_py_err)?;
                let cbb =
                    compsys::compute_cbb(&bs, vanishing_mode(vanishing)?).map_err(to_py_err)?;
                compsys::verify_cbb(&cbb, &self.file.polys, samples, seed)
            }
            other => return Err(PyValueError::new_err(format!("unknown mode `{other}`"))),
        };
        let dict = PyDict::new(py);
        dict.set_item("passed", report.all_ok())?;
        let mut doc = StructuredDoc::new(&self.file.ctx, &self.file.order_name);
        render::report_doc(&report, &mut doc);
        let value = serde_json::to_value(&doc).expect("serializable");
        dict.set_item("report", json_to_py(py, &value["report"]))?;
        Ok(dict.into_any().unbind())
    }

    fn __repr__(&self) -> String {
        format!(
            "System(main_vars={:?}, params={:?}, order={}, polys={})",
            self.file.ctx.main_names(),
            self.file.ctx.param_names(),
            self.file.order_name,
            self.file.polys.len()
        )
    }
}

/// Normal form of one polynomial against a list of generators, all given
/// as expression strings over the same variables.
#[pyfunction]
#[pyo3(signature = (system_text, poly, generators))]
fn normal_form(system_text: &str, poly: &str, generators: Vec<String>) -> PyResult<String> {
    let file = parse_system(system_text).map_err(to_py_err)?;
    let f = cbb_core::parse_poly(poly, &file.ctx, 1, 1).map_err(to_py_err)?;
    let gens: Vec<_> = generators
        .iter()
        .map(|g| cbb_core::parse_poly(g, &file.ctx, 1, 1))
        .collect::<Result<_, _>>()
        .map_err(to_py_err)?;
    let nf = groebner::normal_form(&QQ, &f, &gens, file.order);
    Ok(render::render_poly(&nf, file.order))
}

#[pymodule]
fn cbb_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    m.add_class::<System>()?;
    m.add_function(wrap_pyfunction!(normal_form, m)?)?;
    Ok(())
}
