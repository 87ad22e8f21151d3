use num_bigint::BigUint;
use pyo3::create_exception;
use pyo3::exceptions::{PyException, PyValueError};
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyTuple};
use pyo3::IntoPyObjectExt;

use wpn_core::oracle::{count_binary_pn_with_bound, verify_suite, SuiteConfig, BINARY_PN_BOUND};
use wpn_core::{
    Alphabet, EquivalenceVerdict, MonoidKind, MonoidValue, NormalFormResult, Word, DEFAULT_LIMIT,
};

create_exception!(wpn, CapacityExceeded, PyException, "A result set is larger than the requested limit.");

fn to_py_err(e: wpn_core::Error) -> PyErr {
    match e {
        wpn_core::Error::CapacityExceeded { .. } => CapacityExceeded::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn value_to_py<'py>(py: Python<'py>, v: &MonoidValue) -> PyResult<Bound<'py, PyAny>> {
    match (v.as_nat(), v.as_pair()) {
        (Some(n), _) => n.clone().into_bound_py_any(py),
        (_, Some((a, b))) => (a.clone(), b.clone()).into_bound_py_any(py),
        _ => unreachable!("every value is a natural or a pair"),
    }
}

/// Accepts an int, a pair of ints, or the textual form used in measure files.
fn value_from_py(kind: MonoidKind, obj: &Bound<'_, PyAny>) -> PyResult<MonoidValue> {
    if let Ok(n) = obj.extract::<BigUint>() {
        return match kind {
            MonoidKind::NatSum => Ok(MonoidValue::nat_sum(n)),
            MonoidKind::NatProduct => MonoidValue::nat_product(n).map_err(to_py_err),
            MonoidKind::Vec2LexSum => Err(PyValueError::new_err("vec2-lex values are pairs")),
        };
    }
    if let Ok((a, b)) = obj.extract::<(BigUint, BigUint)>() {
        return match kind {
            MonoidKind::Vec2LexSum => Ok(MonoidValue::vec2(a, b)),
            _ => Err(PyValueError::new_err(format!("{kind} values are integers"))),
        };
    }
    let text: String = obj.str()?.extract()?;
    kind.parse_value(&text).map_err(to_py_err)
}

type PyValues<'py> = Vec<Bound<'py, PyAny>>;

fn values_to_py<'py>(py: Python<'py>, vs: &[MonoidValue]) -> PyResult<PyValues<'py>> {
    vs.iter().map(|v| value_to_py(py, v)).collect()
}

/// A weight measure over a finite ordered alphabet.
#[pyclass(name = "WeightMeasure", module = "wpn", frozen)]
struct PyWeightMeasure {
    inner: wpn_core::WeightMeasure,
}

impl PyWeightMeasure {
    fn word(&self, text: &str) -> PyResult<Word> {
        self.inner.alphabet().parse_word(text).map_err(to_py_err)
    }

    fn render(&self, w: &Word) -> String {
        self.inner.alphabet().render(w)
    }

    fn renders(&self, ws: &[Word]) -> Vec<String> {
        ws.iter().map(|w| self.render(w)).collect()
    }
}

fn alphabet_from(letters: &Bound<'_, PyAny>) -> PyResult<Alphabet> {
    let alphabet = match letters.extract::<String>() {
        Ok(s) => Alphabet::from_chars(&s),
        Err(_) => Alphabet::new(letters.extract::<Vec<String>>()?),
    };
    alphabet.map_err(to_py_err)
}

#[pymethods]
impl PyWeightMeasure {
    /// `letters` is a string of single-character letters or a list of
    /// tokens; `weights` holds one value per letter.
    #[new]
    #[pyo3(signature = (letters, weights, monoid = "nat-sum"))]
    fn new(letters: &Bound<'_, PyAny>, weights: Vec<Bound<'_, PyAny>>, monoid: &str) -> PyResult<Self> {
        let kind: MonoidKind = monoid.parse().map_err(to_py_err)?;
        let alphabet = alphabet_from(letters)?;
        let values = weights
            .iter()
            .map(|w| value_from_py(kind, w))
            .collect::<PyResult<Vec<_>>>()?;
        let inner = wpn_core::WeightMeasure::new(alphabet, kind, values).map_err(to_py_err)?;
        Ok(PyWeightMeasure { inner })
    }

    /// Parses the measure-file format.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        let inner = wpn_core::WeightMeasure::parse(text).map_err(to_py_err)?;
        Ok(PyWeightMeasure { inner })
    }

    /// The sum measure giving the i-th letter weight i.
    #[staticmethod]
    fn standard(letters: &Bound<'_, PyAny>) -> PyResult<Self> {
        Ok(PyWeightMeasure {
            inner: wpn_core::WeightMeasure::standard(alphabet_from(letters)?),
        })
    }

    #[getter]
    fn letters(&self) -> Vec<String> {
        self.inner.alphabet().letters().to_vec()
    }

    #[getter]
    fn monoid(&self) -> &'static str {
        self.inner.kind().name()
    }

    #[getter]
    fn weights<'py>(&self, py: Python<'py>) -> PyResult<Vec<Bound<'py, PyAny>>> {
        values_to_py(py, self.inner.base_weights())
    }

    fn to_spec(&self) -> String {
        self.inner.to_spec_string()
    }

    fn weight<'py>(&self, py: Python<'py>, word: &str) -> PyResult<Bound<'py, PyAny>> {
        value_to_py(py, &self.inner.weight(&self.word(word)?))
    }

    /// `(prefix weights, factor weights)` for lengths `0..=len(word)`.
    fn profile<'py>(
        &self,
        py: Python<'py>,
        word: &str,
    ) -> PyResult<(PyValues<'py>, PyValues<'py>)> {
        let prof = wpn_core::profile(&self.inner, &self.word(word)?);
        Ok((values_to_py(py, prof.prefix())?, values_to_py(py, prof.factor())?))
    }

    fn is_prefix_normal(&self, word: &str) -> PyResult<bool> {
        Ok(wpn_core::is_prefix_normal(&self.inner, &self.word(word)?))
    }

    fn maxpos(&self, word: &str, value: &Bound<'_, PyAny>) -> PyResult<usize> {
        let prof = wpn_core::profile(&self.inner, &self.word(word)?);
        prof.maxpos(&value_from_py(self.inner.kind(), value)?).map_err(to_py_err)
    }

    fn minpos(&self, word: &str, value: &Bound<'_, PyAny>) -> PyResult<usize> {
        let prof = wpn_core::profile(&self.inner, &self.word(word)?);
        prof.minpos(&value_from_py(self.inner.kind(), value)?).map_err(to_py_err)
    }

    /// A dict with `kind` one of `unique`, `multiple`, `none`, and the
    /// matching `word`, `projected` and `count`, or `gap_index`.
    fn prefix_normal_form<'py>(&self, py: Python<'py>, word: &str) -> PyResult<Bound<'py, PyDict>> {
        let d = PyDict::new(py);
        match wpn_core::prefix_normal_form(&self.inner, &self.word(word)?) {
            NormalFormResult::Unique(w) => {
                d.set_item("kind", "unique")?;
                d.set_item("word", self.render(&w))?;
                d.set_item("count", 1)?;
            }
            NormalFormResult::Multiple { projection, projected, count } => {
                d.set_item("kind", "multiple")?;
                d.set_item("projected", projection.measure().alphabet().render(&projected))?;
                d.set_item("count", count)?;
            }
            NormalFormResult::NoneFound { index, .. } => {
                d.set_item("kind", "none")?;
                d.set_item("gap_index", index)?;
                d.set_item("count", 0)?;
            }
        }
        Ok(d)
    }

    #[pyo3(signature = (word, limit = DEFAULT_LIMIT))]
    fn pn_set(&self, word: &str, limit: u64) -> PyResult<Vec<String>> {
        let ws = wpn_core::pn_set(&self.inner, &self.word(word)?, limit).map_err(to_py_err)?;
        Ok(self.renders(&ws))
    }

    fn count_pn(&self, word: &str) -> PyResult<BigUint> {
        Ok(wpn_core::count_pn(&self.inner, &self.word(word)?))
    }

    #[pyo3(signature = (word, limit = DEFAULT_LIMIT))]
    fn equivalence_class(&self, word: &str, limit: u64) -> PyResult<Vec<String>> {
        let ws = wpn_core::equivalence_class(&self.inner, &self.word(word)?, limit).map_err(to_py_err)?;
        Ok(self.renders(&ws))
    }

    fn is_gapfree(&self) -> bool {
        wpn_core::decide_gapfree(&self.inner).is_gapfree()
    }

    /// Every classification flag, with the gap witness as `(word, index)`.
    #[pyo3(signature = (check_len = 6))]
    fn classify<'py>(&self, py: Python<'py>, check_len: usize) -> PyResult<Bound<'py, PyDict>> {
        let c = wpn_core::classify(&self.inner, check_len);
        let d = PyDict::new(py);
        d.set_item("injective", c.injective)?;
        d.set_item("alphabetically_ordered", c.alphabetically_ordered)?;
        d.set_item("binary", c.binary)?;
        d.set_item("unary", c.unary)?;
        d.set_item("prime", c.prime)?;
        let stepped = c.stepped.as_ref().map(|s| value_to_py(py, s)).transpose()?;
        d.set_item("stepped", stepped)?;
        d.set_item("gapfree", c.gapfree)?;
        let witness = c.gap_witness.as_ref().map(|(w, i)| (self.render(w), *i));
        d.set_item("gap_witness", witness)?;
        d.set_item("oracle_agrees", c.oracle_agrees)?;
        Ok(d)
    }

    /// `None` if the measures order all words up to `max_len` alike,
    /// otherwise a pair of words they order differently.
    #[pyo3(signature = (other, max_len = 6))]
    fn inequivalence_witness(&self, other: &PyWeightMeasure, max_len: usize) -> PyResult<Option<(String, String)>> {
        match wpn_core::measures_equivalent_bounded(&self.inner, &other.inner, max_len).map_err(to_py_err)? {
            EquivalenceVerdict::Equivalent { .. } => Ok(None),
            EquivalenceVerdict::Inequivalent { left, right } => Ok(Some((self.render(&left), self.render(&right)))),
        }
    }

    fn __repr__(&self) -> String {
        format!("WeightMeasure({})", self.inner.to_inline_spec())
    }

    fn __eq__(&self, other: &PyWeightMeasure) -> bool {
        self.inner == other.inner
    }
}

#[pyfunction]
#[pyo3(signature = (n, bound = BINARY_PN_BOUND))]
fn count_binary_pn(n: usize, bound: usize) -> PyResult<u64> {
    count_binary_pn_with_bound(n, bound).map_err(to_py_err)
}

/// Runs a verification suite; returns `(passed, cases, replay lines)`.
#[pyfunction]
#[pyo3(signature = (suite, seed = None, max_len = None, cases = None, measures = None))]
fn verify<'py>(
    py: Python<'py>,
    suite: &str,
    seed: Option<u64>,
    max_len: Option<usize>,
    cases: Option<usize>,
    measures: Option<usize>,
) -> PyResult<Bound<'py, PyTuple>> {
    let mut config = SuiteConfig::default();
    config.seed = seed.unwrap_or(config.seed);
    config.max_len = max_len;
    config.cases = cases.unwrap_or(config.cases);
    config.measures = measures.unwrap_or(config.measures);
    let report = py.detach(|| verify_suite(suite, &config)).map_err(to_py_err)?;
    let replays: Vec<String> = report.violations.iter().map(|v| v.replay_line()).collect();
    PyTuple::new(py, [
        report.passed().into_bound_py_any(py)?,
        report.cases.into_bound_py_any(py)?,
        replays.into_bound_py_any(py)?,
    ])
}

#[pymodule]
fn wpn(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyWeightMeasure>()?;
    m.add_function(wrap_pyfunction!(count_binary_pn, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add("CapacityExceeded", m.py().get_type::<CapacityExceeded>())?;
    Ok(())
}
