//! Python bindings. Words cross the boundary as lists of ints.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use debruijn_gsr::reference;
use debruijn_gsr::verify::run_suites;
use debruijn_gsr::{Format, Params, SequenceStream, Symbol, Variant};

fn value_error(e: debruijn_gsr::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse_variant(s: &str) -> PyResult<Variant> {
    s.parse().map_err(PyValueError::new_err)
}

fn parse_format(s: Option<&str>, p: &Params) -> PyResult<Format> {
    match s {
        None => Ok(Format::default_for(p)),
        Some(s) => s.parse().map_err(PyValueError::new_err),
    }
}

/// The prefer-min or prefer-max De Bruijn sequence for fixed `n` and `k`.
#[pyclass(module = "pydebruijn", frozen)]
pub struct DeBruijn {
    params: Params,
    variant: Variant,
}

#[pymethods]
impl DeBruijn {
    #[new]
    #[pyo3(signature = (n, k, variant = "min"))]
    fn py_new(n: usize, k: usize, variant: &str) -> PyResult<Self> {
        Ok(DeBruijn {
            params: Params::new(n, k).map_err(value_error)?,
            variant: parse_variant(variant)?,
        })
    }

    #[getter]
    fn n(&self) -> usize {
        self.params.n()
    }

    #[getter]
    fn k(&self) -> usize {
        self.params.k()
    }

    #[getter]
    fn variant(&self) -> String {
        self.variant.to_string()
    }

    /// Period `k**n`, or None if it does not fit in a machine word.
    fn period(&self) -> Option<usize> {
        self.params.period_capped(usize::MAX)
    }

    /// The `count` symbols that follow `word` in the cyclic sequence.
    fn gsr(&self, word: Vec<Symbol>, count: usize) -> PyResult<Vec<Symbol>> {
        debruijn_gsr::gsr_variant(&word, count, &self.params, self.variant)
            .map(|w| w.into_vec())
            .map_err(value_error)
    }

    /// The symbol that follows `word`.
    fn next(&self, word: Vec<Symbol>) -> PyResult<Symbol> {
        let out =
            debruijn_gsr::gsr_variant(&word, 1, &self.params, self.variant).map_err(value_error)?;
        Ok(out[0])
    }

    /// `(lyndon, fill)` for `word` in the prefer-min block sequence.
    fn ftg(&self, word: Vec<Symbol>) -> PyResult<(Vec<Symbol>, Vec<Symbol>)> {
        let gap = debruijn_gsr::filling_the_gap(&word, &self.params).map_err(value_error)?;
        Ok((gap.lyndon.into_vec(), gap.fill.into_vec()))
    }

    /// Next Lyndon word whose length divides n; wraps from `[k-1]` to `[0]`.
    fn lnext(&self, word: Vec<Symbol>) -> PyResult<Vec<Symbol>> {
        debruijn_gsr::lnext(&word, &self.params)
            .map(|w| w.into_vec())
            .map_err(value_error)
    }

    /// Iterator over the sequence; one period unless `limit` is given.
    #[pyo3(signature = (limit = None))]
    fn stream(&self, limit: Option<u64>) -> SequenceIter {
        SequenceIter {
            inner: SequenceStream::new(&self.params, self.variant, limit),
        }
    }

    fn __iter__(&self) -> SequenceIter {
        self.stream(None)
    }

    /// Runs the oracle suites; returns `(name, checked, mismatches)` tuples.
    #[pyo3(signature = (exhaustive = false))]
    fn verify(&self, py: Python<'_>, exhaustive: bool) -> PyResult<Vec<(String, u64, u64)>> {
        let p = self.params;
        let reports = py
            .detach(|| run_suites(&p, exhaustive))
            .map_err(value_error)?;
        Ok(reports
            .into_iter()
            .map(|r| (r.name.to_string(), r.checked, r.mismatches))
            .collect())
    }

    #[pyo3(signature = (text, format = None))]
    fn parse(&self, text: &str, format: Option<&str>) -> PyResult<Vec<Symbol>> {
        let format = parse_format(format, &self.params)?;
        debruijn_gsr::parse_word(text, &self.params, format)
            .map(|w| w.into_vec())
            .map_err(value_error)
    }

    #[pyo3(signature = (word, format = None))]
    fn format(&self, word: Vec<Symbol>, format: Option<&str>) -> PyResult<String> {
        let format = parse_format(format, &self.params)?;
        self.params.check_symbols(&word).map_err(value_error)?;
        debruijn_gsr::format_word(&word, &self.params, format).map_err(value_error)
    }

    fn __repr__(&self) -> String {
        format!(
            "DeBruijn(n={}, k={}, variant='{}')",
            self.params.n(),
            self.params.k(),
            self.variant
        )
    }
}

#[pyclass(module = "pydebruijn")]
pub struct SequenceIter {
    inner: SequenceStream,
}

#[pymethods]
impl SequenceIter {
    fn __iter__(slf: PyRef<'_, Self>) -> PyRef<'_, Self> {
        slf
    }

    fn __next__(mut slf: PyRefMut<'_, Self>) -> Option<Symbol> {
        slf.inner.next()
    }

    /// Up to `size` further symbols; an empty list once exhausted.
    fn take(&mut self, size: usize) -> Vec<Symbol> {
        let mut buf = Vec::with_capacity(size.min(1 << 20));
        self.inner.fill_chunk(&mut buf, size);
        buf
    }
}

/// Lyndon factorization into non-increasing Lyndon words.
#[pyfunction]
fn cfl(word: Vec<Symbol>) -> PyResult<Vec<Vec<Symbol>>> {
    let f = debruijn_gsr::cfl(&word).map_err(value_error)?;
    Ok(f.into_factors().into_iter().map(|w| w.into_vec()).collect())
}

#[pyfunction]
fn is_lyndon(word: Vec<Symbol>) -> PyResult<bool> {
    debruijn_gsr::is_lyndon(&word).map_err(value_error)
}

/// Lexicographically least rotation.
#[pyfunction]
fn find_min_rot(word: Vec<Symbol>) -> PyResult<Vec<Symbol>> {
    debruijn_gsr::find_min_rot(&word)
        .map(|w| w.into_vec())
        .map_err(value_error)
}

/// Shortest `x` with `word == x * t`.
#[pyfunction]
fn find_root(word: Vec<Symbol>) -> PyResult<Vec<Symbol>> {
    debruijn_gsr::find_root(&word)
        .map(|w| w.into_vec())
        .map_err(value_error)
}

/// True iff every n-word over `0..k` occurs exactly once in `seq` read cyclically.
#[pyfunction]
fn is_de_bruijn(seq: Vec<Symbol>, n: usize, k: usize) -> PyResult<bool> {
    let p = Params::new(n, k).map_err(value_error)?;
    reference::is_de_bruijn(&seq, &p).map_err(value_error)
}

/// Greedy (brute-force) sequence for cross-checking.
#[pyfunction]
#[pyo3(signature = (n, k, variant = "min"))]
fn greedy_sequence(n: usize, k: usize, variant: &str) -> PyResult<Vec<Symbol>> {
    let p = Params::new(n, k).map_err(value_error)?;
    let seq = match parse_variant(variant)? {
        Variant::Min => reference::greedy_prefer_min(&p),
        Variant::Max => reference::greedy_prefer_max(&p),
    };
    seq.map(|w| w.into_vec()).map_err(value_error)
}

#[pymodule]
pub fn pydebruijn(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<DeBruijn>()?;
    m.add_class::<SequenceIter>()?;
    m.add_function(wrap_pyfunction!(cfl, m)?)?;
    m.add_function(wrap_pyfunction!(is_lyndon, m)?)?;
    m.add_function(wrap_pyfunction!(find_min_rot, m)?)?;
    m.add_function(wrap_pyfunction!(find_root, m)?)?;
    m.add_function(wrap_pyfunction!(is_de_bruijn, m)?)?;
    m.add_function(wrap_pyfunction!(greedy_sequence, m)?)?;
    Ok(())
}
