// pyo3 0.22 macro expansion trips this lint on every `PyResult` function.
#![allow(clippy::useless_conversion)]

use pyo3::create_exception;
use pyo3::exceptions::{PyArithmeticError, PyTypeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyInt;

use exact_reals::creal::{self, compare_approx, CReal, Comparison};
use exact_reals::digits::format_digits;
use exact_reals::elementary::{self, Elementary};
use exact_reals::error::Error;
use exact_reals::expr;
use exact_reals::rational::{
    parse_rational, simplest_in_interval as simplest, Gauge, Integer, Rational,
};

create_exception!(
    exact_reals,
    ParseError,
    PyValueError,
    "The expression could not be parsed."
);
create_exception!(
    exact_reals,
    DomainError,
    PyValueError,
    "An argument lies outside a function's domain."
);
create_exception!(
    exact_reals,
    SeparationError,
    PyArithmeticError,
    "A divisor could not be shown to be nonzero."
);

fn to_py(err: Error) -> PyErr {
    match err {
        Error::Parse(e) => ParseError::new_err((e.to_string(), e.offset)),
        Error::Domain(_) => DomainError::new_err(err.to_string()),
        Error::CannotSeparate { .. } => SeparationError::new_err(err.to_string()),
        other => PyValueError::new_err(other.to_string()),
    }
}

fn rational_arg(text: &str) -> PyResult<Rational> {
    parse_rational(text.trim())
        .ok_or_else(|| PyValueError::new_err(format!("not a rational number: {text:?}")))
}

fn ctx() -> Elementary {
    Elementary::default()
}

/// An exact real number. Construct from an int, or from a string holding a
/// rational or any expression accepted by the command-line tool.
#[pyclass(module = "exact_reals", frozen)]
#[derive(Clone)]
struct Real {
    inner: CReal,
}

fn coerce(value: &Bound<'_, PyAny>) -> PyResult<CReal> {
    if let Ok(r) = value.downcast::<Real>() {
        return Ok(r.get().inner.clone());
    }
    if value.is_instance_of::<PyInt>() {
        let text = value.str()?.to_string();
        let n: Integer = text
            .parse()
            .map_err(|_| PyValueError::new_err("bad integer"))?;
        return Ok(CReal::from_rational(Rational::from(n)));
    }
    if let Ok(text) = value.extract::<String>() {
        return expr::parse_and_evaluate(&text, &ctx()).map_err(to_py);
    }
    Err(PyTypeError::new_err("expected Real, int or str"))
}

fn wrap(inner: CReal) -> Real {
    Real { inner }
}

#[pymethods]
impl Real {
    #[new]
    fn new(value: &Bound<'_, PyAny>) -> PyResult<Self> {
        coerce(value).map(wrap)
    }

    /// `n` digits after the point, within `10^-n` of the true value.
    #[pyo3(signature = (n, raw = false))]
    fn digits(&self, n: usize, raw: bool) -> String {
        let out = format_digits(&self.inner, n);
        if raw {
            out.raw()
        } else {
            out.to_string()
        }
    }

    /// The approximation at gauge `eps`, as a `"p/q"` string.
    fn approximate(&self, eps: &str) -> PyResult<String> {
        let eps = Gauge::new(rational_arg(eps)?).map_err(to_py)?;
        Ok(self.inner.approximate(&eps).to_string())
    }

    fn __repr__(&self) -> String {
        format!("Real('{}...')", self.digits(20, false))
    }

    fn __str__(&self) -> String {
        self.digits(20, false)
    }

    fn __add__(&self, other: &Bound<'_, PyAny>) -> PyResult<Real> {
        Ok(wrap(creal::add(&self.inner, &coerce(other)?)))
    }

    fn __radd__(&self, other: &Bound<'_, PyAny>) -> PyResult<Real> {
        self.__add__(other)
    }

    fn __sub__(&self, other: &Bound<'_, PyAny>) -> PyResult<Real> {
        Ok(wrap(creal::sub(&self.inner, &coerce(other)?)))
    }

    fn __rsub__(&self, other: &Bound<'_, PyAny>) -> PyResult<Real> {
        Ok(wrap(creal::sub(&coerce(other)?, &self.inner)))
    }

    fn __mul__(&self, other: &Bound<'_, PyAny>) -> PyResult<Real> {
        Ok(wrap(creal::mult(&self.inner, &coerce(other)?)))
    }

    fn __rmul__(&self, other: &Bound<'_, PyAny>) -> PyResult<Real> {
        self.__mul__(other)
    }

    fn __truediv__(&self, other: &Bound<'_, PyAny>) -> PyResult<Real> {
        ctx()
            .div(&self.inner, &coerce(other)?)
            .map(wrap)
            .map_err(to_py)
    }

    fn __rtruediv__(&self, other: &Bound<'_, PyAny>) -> PyResult<Real> {
        ctx()
            .div(&coerce(other)?, &self.inner)
            .map(wrap)
            .map_err(to_py)
    }

    fn __pow__(
        &self,
        exponent: &Bound<'_, PyAny>,
        modulo: Option<&Bound<'_, PyAny>>,
    ) -> PyResult<Real> {
        if modulo.is_some() {
            return Err(PyTypeError::new_err("three-argument pow is not supported"));
        }
        if let Ok(n) = exponent.extract::<i64>() {
            return ctx()
                .powi(&self.inner, &Integer::from(n))
                .map(wrap)
                .map_err(to_py);
        }
        ctx()
            .pow(&self.inner, &coerce(exponent)?)
            .map(wrap)
            .map_err(to_py)
    }

    fn __neg__(&self) -> Real {
        wrap(creal::negate(&self.inner))
    }

    fn __abs__(&self) -> Real {
        wrap(creal::abs(&self.inner))
    }

    /// -1 or 1 if the two values are told apart at tolerance `eps`, else None.
    #[pyo3(signature = (other, eps = "1/1000000000000"))]
    fn compare(&self, other: &Bound<'_, PyAny>, eps: &str) -> PyResult<Option<i32>> {
        let eps = Gauge::new(rational_arg(eps)?).map_err(to_py)?;
        Ok(match compare_approx(&self.inner, &coerce(other)?, &eps) {
            Comparison::Less => Some(-1),
            Comparison::Greater => Some(1),
            Comparison::Indistinguishable(_) => None,
        })
    }
}

/// Square root of a non-negative real.
#[pyfunction]
fn sqrt(x: &Bound<'_, PyAny>) -> PyResult<Real> {
    Ok(wrap(ctx().sqrt(&coerce(x)?)))
}

#[pyfunction]
fn exp(x: &Bound<'_, PyAny>) -> PyResult<Real> {
    Ok(wrap(ctx().exp(&coerce(x)?)))
}

#[pyfunction]
fn sin(x: &Bound<'_, PyAny>) -> PyResult<Real> {
    Ok(wrap(ctx().sin(&coerce(x)?)))
}

#[pyfunction]
fn cos(x: &Bound<'_, PyAny>) -> PyResult<Real> {
    Ok(wrap(ctx().cos(&coerce(x)?)))
}

#[pyfunction]
fn atan(x: &Bound<'_, PyAny>) -> PyResult<Real> {
    Ok(wrap(ctx().atan(&coerce(x)?)))
}

/// Natural logarithm of a positive real.
#[pyfunction]
fn ln(x: &Bound<'_, PyAny>) -> PyResult<Real> {
    ctx().ln(&coerce(x)?).map(wrap).map_err(to_py)
}

/// Tangent.
#[pyfunction]
fn tan(x: &Bound<'_, PyAny>) -> PyResult<Real> {
    ctx().tan(&coerce(x)?).map(wrap).map_err(to_py)
}

#[pyfunction]
fn pi() -> Real {
    wrap(elementary::pi())
}

#[pyfunction]
fn e() -> Real {
    wrap(ctx().e())
}

/// Evaluates an expression to `digits` places, exactly as the CLI does.
#[pyfunction]
#[pyo3(signature = (source, digits, max_halvings = 5000))]
fn evaluate(source: &str, digits: usize, max_halvings: u32) -> PyResult<String> {
    let ctx = Elementary::new(Default::default(), Some(max_halvings));
    let value = expr::parse_and_evaluate(source, &ctx).map_err(to_py)?;
    Ok(format_digits(&value, digits).to_string())
}

/// The rational with least denominator in `[lo, hi]`, as `"p/q"` (or `"p"`).
#[pyfunction]
fn simplest_in_interval(lo: &str, hi: &str) -> PyResult<String> {
    simplest(&rational_arg(lo)?, &rational_arg(hi)?)
        .map(|q| q.to_string())
        .map_err(to_py)
}

#[pymodule]
#[pyo3(name = "exact_reals")]
fn exact_reals_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Real>()?;
    m.add("ParseError", m.py().get_type_bound::<ParseError>())?;
    m.add("DomainError", m.py().get_type_bound::<DomainError>())?;
    m.add(
        "SeparationError",
        m.py().get_type_bound::<SeparationError>(),
    )?;
    m.add_function(wrap_pyfunction!(sqrt, m)?)?;
    m.add_function(wrap_pyfunction!(exp, m)?)?;
    m.add_function(wrap_pyfunction!(ln, m)?)?;
    m.add_function(wrap_pyfunction!(sin, m)?)?;
    m.add_function(wrap_pyfunction!(cos, m)?)?;
    m.add_function(wrap_pyfunction!(tan, m)?)?;
    m.add_function(wrap_pyfunction!(atan, m)?)?;
    m.add_function(wrap_pyfunction!(pi, m)?)?;
    m.add_function(wrap_pyfunction!(e, m)?)?;
    m.add_function(wrap_pyfunction!(evaluate, m)?)?;
    m.add_function(wrap_pyfunction!(simplest_in_interval, m)?)?;
    Ok(())
}
