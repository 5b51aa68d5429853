//! Python bindings: `import llt_schur`.

use pyo3::create_exception;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyTuple};

use llt_core::algebra::lam::DEFAULT_CLASS_CAP;
use llt_core::algebra::relations::{equal_in_quotient_capped, DEFAULT_SPAN_CAP};
use llt_core::llt::DEFAULT_WORD_CAP;
use llt_core::ncsf::FlagSpec;
use llt_core::rsst::{EnumerationSpec, DEFAULT_READING_CAP};
use llt_core::words::{Letter, Word};
use llt_core::{AlgebraElement, ArrowKind, CanonicalForm, Error, Partition, RelationSystem};

create_exception!(llt_schur, GuardError, PyRuntimeError, "A resource guard was exceeded; the instance is too large.");

fn py_err(e: Error) -> PyErr {
    if e.is_guard() {
        GuardError::new_err(e.to_string())
    } else {
        PyValueError::new_err(e.to_string())
    }
}

fn partition(parts: Vec<usize>) -> PyResult<Partition> {
    Partition::new(parts).map_err(py_err)
}

fn element(terms: &Bound<'_, PyDict>) -> PyResult<AlgebraElement> {
    let mut f = AlgebraElement::zero();
    for (w, c) in terms.iter() {
        let w: Word = w.extract()?;
        let c: i64 = c.extract()?;
        f.add_term(w, &llt_core::LaurentPoly::from(c));
    }
    Ok(f)
}

/// A Laurent polynomial in `q` with rational coefficients.
#[pyclass(name = "LaurentPoly", frozen, eq, from_py_object)]
#[derive(Clone, PartialEq)]
pub struct PyLaurentPoly(llt_core::LaurentPoly);

#[pymethods]
impl PyLaurentPoly {
    /// `[(exponent, Fraction)]` in increasing exponent.
    fn terms<'py>(&self, py: Python<'py>) -> PyResult<Vec<(i32, Bound<'py, PyAny>)>> {
        self.0.terms().map(|(e, c)| Ok((e, c.clone().into_pyobject(py)?.into_any()))).collect()
    }

    fn eval_at_one<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        Ok(self.0.eval_at_one().into_pyobject(py)?.into_any())
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// Whether every coefficient is a nonnegative integer and every exponent nonnegative.
    fn is_in_natural_polynomials(&self) -> bool {
        self.0.is_in_natural_polynomials()
    }

    /// `e` with `self = q^e * other`, if there is one.
    fn monomial_ratio(&self, other: &PyLaurentPoly) -> Option<i32> {
        self.0.monomial_ratio(&other.0)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("LaurentPoly({})", self.0)
    }
}

/// A tuple of skew shapes, one per residue class.
#[pyclass(name = "SkewTuple", frozen, from_py_object)]
#[derive(Clone)]
pub struct PySkewTuple(llt_core::SkewTuple);

#[pymethods]
impl PySkewTuple {
    /// From a JSON list of `{"outer": [...], "inner": [...], "shift": s}`.
    #[staticmethod]
    fn from_json(s: &str) -> PyResult<Self> {
        serde_json::from_str(s).map(PySkewTuple).map_err(|e| PyValueError::new_err(e.to_string()))
    }

    /// From `[(outer, inner)]` and one diagonal shift per component.
    #[staticmethod]
    #[pyo3(signature = (pairs, shifts=None))]
    fn from_partitions(pairs: Vec<(Vec<usize>, Vec<usize>)>, shifts: Option<Vec<i32>>) -> PyResult<Self> {
        let shifts = shifts.unwrap_or_else(|| vec![0; pairs.len()]);
        let pairs = pairs
            .into_iter()
            .map(|(o, i)| Ok((partition(o)?, partition(i)?)))
            .collect::<PyResult<Vec<_>>>()?;
        llt_core::SkewTuple::from_partitions(&pairs, &shifts).map(PySkewTuple).map_err(py_err)
    }

    fn to_json(&self) -> String {
        serde_json::to_string(&self.0).expect("tuples serialize")
    }

    #[getter]
    fn k(&self) -> usize {
        self.0.k()
    }

    fn __len__(&self) -> usize {
        self.0.size()
    }

    fn contains_word(&self, word: Word) -> bool {
        self.0.contains_word(&word)
    }

    #[pyo3(signature = (cap=DEFAULT_WORD_CAP))]
    fn words(&self, cap: usize) -> PyResult<Vec<Word>> {
        self.0.words(cap).map_err(py_err)
    }

    fn __repr__(&self) -> String {
        format!("SkewTuple({})", self.to_json())
    }
}

/// A restricted semistandard tableau.
#[pyclass(name = "Rsst", frozen, from_py_object)]
#[derive(Clone)]
pub struct PyRsst(llt_core::Rsst);

#[pymethods]
impl PyRsst {
    /// From `{"shape": {"outer": [column lengths], "carved": [...]}, "rows": [[...]]}`.
    #[staticmethod]
    fn from_json(s: &str) -> PyResult<Self> {
        serde_json::from_str(s).map(PyRsst).map_err(|e| PyValueError::new_err(e.to_string()))
    }

    /// The ordinary tableau with the given rows.
    #[staticmethod]
    fn from_rows(rows: Vec<Vec<Letter>>) -> PyResult<Self> {
        llt_core::Rsst::from_partition_rows(&rows).map(PyRsst).map_err(py_err)
    }

    fn to_json(&self) -> String {
        serde_json::to_string(&self.0).expect("tableaux serialize")
    }

    fn rows(&self) -> Vec<Vec<Option<Letter>>> {
        self.0.rows()
    }

    fn is_valid(&self) -> bool {
        self.0.validate()
    }

    fn sqread(&self) -> Word {
        self.0.sqread()
    }

    #[pyo3(signature = (square_respecting=true, cap=DEFAULT_READING_CAP))]
    fn reading_words(&self, square_respecting: bool, cap: usize) -> PyResult<Vec<Word>> {
        self.0.reading_words(square_respecting, cap).map_err(py_err)
    }

    /// `[(kind, (row, col) tail, (row, col) head)]` with kind "nw" or "se".
    fn arrows(&self) -> Vec<(&'static str, (i32, i32), (i32, i32))> {
        self.0
            .arrows()
            .into_iter()
            .map(|a| {
                let kind = match a.kind {
                    ArrowKind::NorthWest => "nw",
                    ArrowKind::SouthEast => "se",
                };
                (kind, (a.tail.row, a.tail.col), (a.head.row, a.head.col))
            })
            .collect()
    }

    fn invi(&self) -> usize {
        self.0.invi3()
    }

    fn desi(&self) -> Vec<(Letter, Letter)> {
        self.0.desi3()
    }

    fn is_nonzero(&self) -> bool {
        self.0.is_nonzero()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }
}

/// `(rep, power)` with `v = q^power * rep` in Lam's quotient, or `None` if `v = 0`.
#[pyfunction]
fn canonical_form(word: Word, k: i32) -> Option<(Word, i32)> {
    match llt_core::canonical_form(&word, k) {
        CanonicalForm::Zero => None,
        CanonicalForm::Term { rep, power } => Some((rep, power)),
    }
}

#[pyfunction]
fn is_nonzero_word(word: Word, k: i32) -> bool {
    llt_core::words::is_nonzero_word(&word, k)
}

#[pyfunction]
#[pyo3(signature = (word, k, cap=DEFAULT_CLASS_CAP))]
fn equivalence_class(word: Word, k: i32, cap: usize) -> PyResult<Vec<Word>> {
    llt_core::equivalence_class(&word, k, cap).map_err(py_err)
}

/// Whether two integer combinations of words (dicts `{word tuple: coefficient}`) are
/// equal in the quotient named by `algebra` ("lam", "lam-le", "rot-le" or "bij").
#[pyfunction]
#[pyo3(signature = (f, g, algebra="lam", k=3, span_cap=DEFAULT_SPAN_CAP))]
fn equal_in_quotient(
    f: &Bound<'_, PyDict>,
    g: &Bound<'_, PyDict>,
    algebra: &str,
    k: i32,
    span_cap: usize,
) -> PyResult<bool> {
    let system = RelationSystem::from_name(algebra, k).map_err(py_err)?;
    equal_in_quotient_capped(&element(f)?, &element(g)?, &system, span_cap).map_err(py_err)
}

/// `(core, quotient, runner charges)`.
#[pyfunction]
fn core_quotient(parts: Vec<usize>, k: usize) -> PyResult<(Vec<usize>, Vec<Vec<usize>>, Vec<i64>)> {
    let lambda = partition(parts)?;
    let (core, quotient) = lambda.core_and_quotient(k);
    Ok((
        core.parts().to_vec(),
        quotient.iter().map(|p| p.parts().to_vec()).collect(),
        lambda.runner_charges(k),
    ))
}

/// `(μ, spin)` from adding the ribbons of `word` to `nu`, or `None`.
#[pyfunction]
fn act_on_partition(nu: Vec<usize>, word: Word, k: usize) -> PyResult<Option<(Vec<usize>, usize)>> {
    Ok(llt_core::act_on_partition_spin(&partition(nu)?, &word, k).map(|(mu, s)| (mu.parts().to_vec(), s)))
}

fn word_dict<'py, I>(py: Python<'py>, terms: I) -> PyResult<Bound<'py, PyDict>>
where
    I: IntoIterator<Item = (Word, llt_core::LaurentPoly)>,
{
    let d = PyDict::new(py);
    for (w, c) in terms {
        d.set_item(PyTuple::new(py, w)?, PyLaurentPoly(c))?;
    }
    Ok(d)
}

fn partition_dict<'py, I>(py: Python<'py>, terms: I) -> PyResult<Bound<'py, PyDict>>
where
    I: IntoIterator<Item = (Partition, llt_core::LaurentPoly)>,
{
    let d = PyDict::new(py);
    for (l, c) in terms {
        d.set_item(PyTuple::new(py, l.parts())?, PyLaurentPoly(c))?;
    }
    Ok(d)
}

/// `J_α^n` as `{word: coefficient}`; reduced in Lam's quotient when `k` is given.
#[pyfunction]
#[pyo3(signature = (alpha, flags, k=None))]
fn flagged_schur<'py>(py: Python<'py>, alpha: Vec<i64>, flags: Vec<i64>, k: Option<i32>) -> PyResult<Bound<'py, PyDict>> {
    let spec = FlagSpec::flagged(&alpha, &flags).map_err(py_err)?;
    match k {
        Some(k) => word_dict(py, llt_core::ncsf::flagged_schur_lam(&spec, k).sorted_terms()),
        None => {
            let f = llt_core::ncsf::flagged_schur(&spec);
            word_dict(py, f.terms().map(|(w, c)| (w.clone(), c.clone())))
        }
    }
}

/// Whether `J_{λ'}^n` equals the sum of sqread words over RSST of shape `λ` in `lam_3`.
#[pyfunction]
fn verify_main(lambda: Vec<usize>, flags: Vec<i64>) -> PyResult<(bool, usize)> {
    let cmp = llt_core::ncsf::verify_main(&partition(lambda)?, &flags).map_err(py_err)?;
    Ok((cmp.equal, cmp.tableaux))
}

/// RSST of ordinary shape `rows` with column-`c` entries in `[flags[c]]`.
#[pyfunction]
fn enumerate_rsst(rows: Vec<usize>, flags: Vec<i64>) -> PyResult<Vec<PyRsst>> {
    let spec = EnumerationSpec::flagged(&partition(rows)?, &flags);
    Ok(llt_core::rsst::enumerate(&spec).map_err(py_err)?.into_iter().map(PyRsst).collect())
}

/// Schur expansion `{λ: coefficient}` of the LLT polynomial of `beta`.
#[pyfunction]
#[pyo3(signature = (beta, cap=DEFAULT_WORD_CAP))]
fn llt_schur_expansion<'py>(py: Python<'py>, beta: &PySkewTuple, cap: usize) -> PyResult<Bound<'py, PyDict>> {
    let f = llt_core::llt::llt_polynomial(&beta.0, cap).map_err(py_err)?;
    partition_dict(py, f.schur_expand().map_err(py_err)?)
}

/// Schur expansion of the spin LLT polynomial of a ribbon-tileable `μ/ν`.
#[pyfunction]
#[pyo3(signature = (mu, nu, k, cap=DEFAULT_WORD_CAP))]
fn spin_schur_expansion<'py>(
    py: Python<'py>,
    mu: Vec<usize>,
    nu: Vec<usize>,
    k: usize,
    cap: usize,
) -> PyResult<Bound<'py, PyDict>> {
    let f = llt_core::llt::spin_llt(&partition(mu)?, &partition(nu)?, k, cap).map_err(py_err)?;
    partition_dict(py, f.schur_expand().map_err(py_err)?)
}

/// Nonzero q-LR coefficients of a 3-tuple, counted with RSST.
#[pyfunction]
fn qlr_coefficients<'py>(py: Python<'py>, beta: &PySkewTuple) -> PyResult<Bound<'py, PyDict>> {
    partition_dict(py, llt_core::llt::qlr_coefficients(&beta.0).map_err(py_err)?)
}

#[pyfunction]
fn qlr_coefficient(beta: &PySkewTuple, lambda: Vec<usize>) -> PyResult<PyLaurentPoly> {
    llt_core::llt::qlr_coefficient(&beta.0, &partition(lambda)?).map(PyLaurentPoly).map_err(py_err)
}

#[pyfunction]
fn qlr_tableaux(beta: &PySkewTuple, lambda: Vec<usize>) -> PyResult<Vec<PyRsst>> {
    let ts = llt_core::llt::qlr_tableaux(&beta.0, &partition(lambda)?).map_err(py_err)?;
    Ok(ts.into_iter().map(PyRsst).collect())
}

/// `[(name, passed)]` for every recorded worked example.
#[pyfunction]
fn golden_suite() -> Vec<(String, bool)> {
    llt_core::golden::golden_suite().into_iter().map(|c| (c.name.to_string(), c.passed)).collect()
}

#[pymodule]
fn llt_schur(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("GuardError", m.py().get_type::<GuardError>())?;
    m.add_class::<PyLaurentPoly>()?;
    m.add_class::<PySkewTuple>()?;
    m.add_class::<PyRsst>()?;
    m.add_function(wrap_pyfunction!(canonical_form, m)?)?;
    m.add_function(wrap_pyfunction!(is_nonzero_word, m)?)?;
    m.add_function(wrap_pyfunction!(equivalence_class, m)?)?;
    m.add_function(wrap_pyfunction!(equal_in_quotient, m)?)?;
    m.add_function(wrap_pyfunction!(core_quotient, m)?)?;
    m.add_function(wrap_pyfunction!(act_on_partition, m)?)?;
    m.add_function(wrap_pyfunction!(flagged_schur, m)?)?;
    m.add_function(wrap_pyfunction!(verify_main, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_rsst, m)?)?;
    m.add_function(wrap_pyfunction!(llt_schur_expansion, m)?)?;
    m.add_function(wrap_pyfunction!(spin_schur_expansion, m)?)?;
    m.add_function(wrap_pyfunction!(qlr_coefficients, m)?)?;
    m.add_function(wrap_pyfunction!(qlr_coefficient, m)?)?;
    m.add_function(wrap_pyfunction!(qlr_tableaux, m)?)?;
    m.add_function(wrap_pyfunction!(golden_suite, m)?)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn module_round_trip() {
        Python::initialize();
        Python::attach(|py| {
            let m = PyModule::new(py, "llt_schur").unwrap();
            llt_schur(&m).unwrap();
            let nf = m.getattr("canonical_form").unwrap().call1((vec![2, 1], 3)).unwrap();
            assert_eq!(nf.extract::<(Word, i32)>().unwrap(), (vec![1, 2], 1));
            let beta = PySkewTuple::from_partitions(
                vec![(vec![2], vec![1]), (vec![3, 3], vec![1, 1]), (vec![3, 3], vec![2, 1])],
                None,
            )
            .unwrap();
            let c = qlr_coefficient(&beta, vec![4, 3, 1]).unwrap();
            assert_eq!(c.__str__(), "q^4 + 2*q^5");
            let err = partition(vec![1, 2]).unwrap_err();
            assert!(err.is_instance_of::<PyValueError>(py));
        });
    }
}
