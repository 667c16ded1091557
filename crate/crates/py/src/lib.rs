//! Python bindings. Coefficients cross the boundary as `fractions.Fraction`,
//! intersection numbers of integral problems as `int`.
//!
//! Errors map to `NotImplementedError` when no rule is known for a request
//! and to `ValueError` otherwise.

use num_bigint::BigInt;
use pyo3::exceptions::{PyNotImplementedError, PyValueError};
use pyo3::prelude::*;

use hilb2_core as h;
use hilb2_core::{BasisId, Family, GradedClass, Grading, PairingConfig, Rational};

fn err(e: h::Error) -> PyErr {
    let msg = format!("{}: {e}", e.kind());
    if e.is_unsupported() {
        PyNotImplementedError::new_err(msg)
    } else {
        PyValueError::new_err(msg)
    }
}

trait OrRaise<T> {
    fn py(self) -> PyResult<T>;
}

impl<T> OrRaise<T> for h::Result<T> {
    fn py(self) -> PyResult<T> {
        self.map_err(err)
    }
}

fn grading(dim: Option<u32>, codim: Option<u32>) -> PyResult<Grading> {
    match (dim, codim) {
        (Some(_), Some(_)) => Err(PyValueError::new_err("give at most one of dim and codim")),
        (Some(k), None) => Ok(Grading::Dim(k)),
        (None, Some(k)) => Ok(Grading::Codim(k)),
        (None, None) => Ok(Grading::All),
    }
}

fn config(ap_a_diagonal: u64) -> PyResult<PairingConfig> {
    PairingConfig::new(ap_a_diagonal).py()
}

/// A basis symbol `F_{i,j}` on `P^{n[2]}`.
#[pyclass(name = "Symbol", module = "hilb2", frozen, eq, hash, from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PySymbol(h::BasisSymbol);

#[pymethods]
impl PySymbol {
    #[new]
    fn new(family: &str, i: i64, j: i64, n: i64) -> PyResult<Self> {
        let f: Family = family.parse().py()?;
        h::validate_symbol(f, i, j, n).py().map(PySymbol)
    }

    #[getter]
    fn family(&self) -> &'static str {
        self.0.family().label()
    }

    #[getter]
    fn i(&self) -> u32 {
        self.0.i()
    }

    #[getter]
    fn j(&self) -> u32 {
        self.0.j()
    }

    #[getter]
    fn n(&self) -> u32 {
        self.0.n()
    }

    #[getter]
    fn dim(&self) -> u32 {
        self.0.dimension()
    }

    #[getter]
    fn codim(&self) -> u32 {
        self.0.codimension()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!(
            "Symbol({:?}, {}, {}, n={})",
            self.family(),
            self.0.i(),
            self.0.j(),
            self.0.n()
        )
    }
}

/// An exact rational combination of basis symbols.
#[pyclass(name = "Class", module = "hilb2", frozen, eq, from_py_object)]
#[derive(Clone, PartialEq, Eq)]
struct PyClass(GradedClass);

#[derive(FromPyObject)]
enum Operand {
    Symbol(PySymbol),
    Class(PyClass),
}

impl Operand {
    fn class(self) -> GradedClass {
        match self {
            Operand::Symbol(s) => GradedClass::from_symbol(s.0),
            Operand::Class(c) => c.0,
        }
    }
}

#[derive(FromPyObject)]
enum Scalar {
    Int(BigInt),
    Fraction(Rational),
}

impl Scalar {
    fn value(self) -> Rational {
        match self {
            Scalar::Int(v) => Rational::from_integer(v),
            Scalar::Fraction(q) => q,
        }
    }
}

#[pymethods]
impl PyClass {
    /// `Class(n, [(symbol, coeff), ...])`; coefficients are ints or Fractions.
    #[new]
    #[pyo3(signature = (n, terms = Vec::new()))]
    fn new(n: u32, terms: Vec<(PySymbol, Scalar)>) -> PyResult<Self> {
        GradedClass::from_terms(n, terms.into_iter().map(|(s, q)| (s.0, q.value())))
            .py()
            .map(PyClass)
    }

    #[staticmethod]
    fn from_symbol(symbol: PySymbol) -> Self {
        PyClass(GradedClass::from_symbol(symbol.0))
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        h::parse_class(text).py().map(PyClass)
    }

    fn to_json(&self) -> String {
        h::emit_class(&self.0)
    }

    #[getter]
    fn n(&self) -> u32 {
        self.0.n()
    }

    /// Dimension if the class is homogeneous and nonzero, else `None`.
    #[getter]
    fn dim(&self) -> Option<u32> {
        self.0.homogeneous_dimension().ok().flatten()
    }

    fn terms(&self) -> Vec<(PySymbol, Rational)> {
        self.0
            .iter()
            .map(|(s, q)| (PySymbol(*s), q.clone()))
            .collect()
    }

    fn coeff(&self, symbol: PySymbol) -> Rational {
        self.0.coeff(&symbol.0)
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn __add__(&self, other: Operand) -> PyResult<Self> {
        let mut out = self.0.clone();
        out.add_scaled(&Rational::from_integer(1.into()), &other.class())
            .py()?;
        Ok(PyClass(out))
    }

    fn __sub__(&self, other: Operand) -> PyResult<Self> {
        let mut out = self.0.clone();
        out.add_scaled(&Rational::from_integer((-1).into()), &other.class())
            .py()?;
        Ok(PyClass(out))
    }

    fn __neg__(&self) -> Self {
        PyClass(self.0.scaled(&Rational::from_integer((-1).into())))
    }

    fn __mul__(&self, c: Scalar) -> Self {
        PyClass(self.0.scaled(&c.value()))
    }

    fn __rmul__(&self, c: Scalar) -> Self {
        self.__mul__(c)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Class(n={}, {})", self.0.n(), self.0)
    }
}

#[pyfunction]
fn validate_symbol(family: &str, i: i64, j: i64, n: i64) -> PyResult<PySymbol> {
    PySymbol::new(family, i, j, n)
}

#[pyfunction]
fn chow_rank(n: u32, k: u32) -> PyResult<u64> {
    h::chow_rank(n, k).py()
}

#[pyfunction]
#[pyo3(signature = (n, basis = "MS", dim = None, codim = None))]
fn enumerate_basis(
    n: u32,
    basis: &str,
    dim: Option<u32>,
    codim: Option<u32>,
) -> PyResult<Vec<PySymbol>> {
    let b: BasisId = basis.parse().py()?;
    Ok(h::enumerate_basis(n, b, grading(dim, codim)?)
        .py()?
        .into_iter()
        .map(PySymbol)
        .collect())
}

type FixedPointRow = (String, Vec<String>, PySymbol, u32);

/// Torus-fixed points as `(label, generators, cell, cell_dim)`.
#[pyfunction]
fn fixed_points(n: u32) -> PyResult<Vec<FixedPointRow>> {
    Ok(h::enumerate_fixed_points(n)
        .py()?
        .iter()
        .map(|fp| {
            let (cell, dim) = h::bb_cell_of(fp);
            (fp.to_string(), fp.generators(), PySymbol(cell), dim)
        })
        .collect())
}

#[pyfunction]
#[pyo3(signature = (x, y, ap_a_diagonal = 1))]
fn pair(x: Operand, y: Operand, ap_a_diagonal: u64) -> PyResult<Rational> {
    h::pair_classes(&x.class(), &y.class(), &config(ap_a_diagonal)?).py()
}

type MatrixParts = (Vec<PySymbol>, Vec<PySymbol>, Vec<Vec<Rational>>);

/// `(rows, cols, entries)` for dimension-`k` rows against codimension-`k` columns.
#[pyfunction]
#[pyo3(signature = (n, k, rows = "ES", cols = "MS", ap_a_diagonal = 1))]
fn intersection_matrix(
    n: u32,
    k: u32,
    rows: &str,
    cols: &str,
    ap_a_diagonal: u64,
) -> PyResult<MatrixParts> {
    let m = h::intersection_matrix(
        n,
        k,
        rows.parse().py()?,
        cols.parse().py()?,
        &config(ap_a_diagonal)?,
    )
    .py()?;
    Ok((
        m.rows.into_iter().map(PySymbol).collect(),
        m.cols.into_iter().map(PySymbol).collect(),
        m.entries,
    ))
}

#[pyfunction]
fn is_nef(x: Operand, k: u32) -> PyResult<bool> {
    h::is_nef(&x.class(), k).py()
}

#[pyfunction]
#[pyo3(signature = (x, k, ap_a_diagonal = 1))]
fn is_effective(x: Operand, k: u32, ap_a_diagonal: u64) -> PyResult<bool> {
    h::is_effective(&x.class(), k, &config(ap_a_diagonal)?).py()
}

#[pyfunction]
#[pyo3(signature = (x, k, ap_a_diagonal = 1))]
fn effective_pairings(x: Operand, k: u32, ap_a_diagonal: u64) -> PyResult<Vec<Rational>> {
    h::effective_pairings(&x.class(), k, &config(ap_a_diagonal)?).py()
}

#[pyfunction]
fn to_ms(symbol: PySymbol) -> PyResult<PyClass> {
    h::to_ms(&symbol.0).py().map(PyClass)
}

#[pyfunction]
fn mul_bprime_top(x: Operand) -> PyResult<PyClass> {
    h::mul_bprime_top(&x.class()).py().map(PyClass)
}

#[pyfunction]
fn mul_c_top(x: Operand) -> PyResult<PyClass> {
    h::mul_c_top(&x.class()).py().map(PyClass)
}

#[pyfunction]
fn bprime_top_power(n: u32, k: u32) -> PyResult<PyClass> {
    h::bprime_top_power(n, k).py().map(PyClass)
}

#[pyfunction]
#[pyo3(signature = (n, a, b = 0))]
fn eval_monomial(n: u32, a: u32, b: u32) -> PyResult<PyClass> {
    h::eval_monomial(&h::MonomialSpec::new(n, a, b).py()?)
        .py()
        .map(PyClass)
}

/// `(c1, c2)` of `O(d)^[2]`.
#[pyfunction]
fn chern_taut(n: u32, d: u32) -> PyResult<(PyClass, PyClass)> {
    let (c1, c2) = h::chern_taut(&h::TautBundle::new(n, d).py()?).py()?;
    Ok((PyClass(c1), PyClass(c2)))
}

fn problem(n: u32, degrees: Vec<u32>, mu1: u32, variant: &str) -> PyResult<h::SecantProblem> {
    let variant: h::ExponentVariant = variant.parse().py()?;
    Ok(h::SecantProblem::new(n, degrees)
        .py()?
        .with_mu1(mu1)
        .py()?
        .with_variant(variant))
}

#[pyfunction]
#[pyo3(signature = (n, degrees, mu1 = 1, variant = "proof"))]
fn secant_degree(n: u32, degrees: Vec<u32>, mu1: u32, variant: &str) -> PyResult<Rational> {
    h::secant_degree(&problem(n, degrees, mu1, variant)?).py()
}

#[pyfunction]
#[pyo3(signature = (n, degrees, variant = "proof"))]
fn secant_degree_mu_closed(n: u32, degrees: Vec<u32>, variant: &str) -> PyResult<BigInt> {
    h::secant_degree_mu_closed(&problem(n, degrees, 1, variant)?).py()
}

#[pyfunction]
fn secant_degree_mu_intersection(n: u32, degrees: Vec<u32>) -> PyResult<BigInt> {
    h::secant_degree_mu_intersection(&problem(n, degrees, 1, "proof")?).py()
}

/// Classical count for points and curves; `None` when `dim X >= 2`.
#[pyfunction]
fn secant_oracle(n: u32, degrees: Vec<u32>) -> PyResult<Option<BigInt>> {
    h::secant_oracle(&problem(n, degrees, 1, "proof")?).py()
}

#[pymodule]
pub fn hilb2(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PySymbol>()?;
    m.add_class::<PyClass>()?;
    m.add_function(wrap_pyfunction!(validate_symbol, m)?)?;
    m.add_function(wrap_pyfunction!(chow_rank, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_basis, m)?)?;
    m.add_function(wrap_pyfunction!(fixed_points, m)?)?;
    m.add_function(wrap_pyfunction!(pair, m)?)?;
    m.add_function(wrap_pyfunction!(intersection_matrix, m)?)?;
    m.add_function(wrap_pyfunction!(is_nef, m)?)?;
    m.add_function(wrap_pyfunction!(is_effective, m)?)?;
    m.add_function(wrap_pyfunction!(effective_pairings, m)?)?;
    m.add_function(wrap_pyfunction!(to_ms, m)?)?;
    m.add_function(wrap_pyfunction!(mul_bprime_top, m)?)?;
    m.add_function(wrap_pyfunction!(mul_c_top, m)?)?;
    m.add_function(wrap_pyfunction!(bprime_top_power, m)?)?;
    m.add_function(wrap_pyfunction!(eval_monomial, m)?)?;
    m.add_function(wrap_pyfunction!(chern_taut, m)?)?;
    m.add_function(wrap_pyfunction!(secant_degree, m)?)?;
    m.add_function(wrap_pyfunction!(secant_degree_mu_closed, m)?)?;
    m.add_function(wrap_pyfunction!(secant_degree_mu_intersection, m)?)?;
    m.add_function(wrap_pyfunction!(secant_oracle, m)?)?;
    Ok(())
}
