use std::fmt;
use std::sync::Arc;

use crate::completion::Approximator;
use crate::rational::{Gauge, Rational};

type TermSource = Arc<dyn Fn() -> Box<dyn Iterator<Item = Rational>> + Send + Sync>;

/// An alternating series with strictly decreasing terms tending to zero.
///
/// The terms are regenerated from scratch by every query, so the source
/// closure must be pure. Nothing here checks the alternating property; each
/// generator guarantees it through its domain.
#[derive(Clone)]
pub struct AlternatingSeries {
    source: TermSource,
}

impl fmt::Debug for AlternatingSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("AlternatingSeries(..)")
    }
}

impl AlternatingSeries {
    pub fn new<I>(source: impl Fn() -> I + Send + Sync + 'static) -> Self
    where
        I: Iterator<Item = Rational> + 'static,
    {
        AlternatingSeries {
            source: Arc::new(move || Box::new(source())),
        }
    }

    pub fn terms(&self) -> Box<dyn Iterator<Item = Rational>> {
        (self.source)()
    }

    /// `a - a^3/3! + a^5/5! - ...` via `t <- -t a^2 / (n^2 + n)`, `n = 2, 4, ...`.
    pub fn sine(a: Rational) -> Self {
        AlternatingSeries::new(move || {
            let a_sq = Rational::from(a.square_ref());
            std::iter::successors(Some((a.clone(), 2u64)), move |(t, n)| {
                let next = -Rational::from(t * &a_sq) / Rational::from(n * n + n);
                Some((next, n + 2))
            })
            .map(|(t, _)| t)
        })
    }

    /// `(a-1) - (a-1)^2/2 + (a-1)^3/3 - ...`, valid for `1 <= a < 2`.
    pub fn log(a: Rational) -> Self {
        AlternatingSeries::new(move || {
            let shift = Rational::from(&a - 1u32);
            let step = Rational::from(-&shift);
            std::iter::successors(Some((shift.clone(), 1u64)), move |(p, i)| {
                Some((Rational::from(p * &step), i + 1))
            })
            .map(|(p, i)| p / Rational::from(i))
        })
    }

    /// `a - a^3/3 + a^5/5 - ...`, valid for `|a| < 1`.
    pub fn arctan(a: Rational) -> Self {
        AlternatingSeries::new(move || {
            let step = -Rational::from(a.square_ref());
            std::iter::successors(Some((a.clone(), 1u64)), move |(p, k)| {
                Some((Rational::from(p * &step), k + 2))
            })
            .map(|(p, k)| p / Rational::from(k))
        })
    }
}

/// `sum(eps)` adds the terms while `|term| > eps`; the first dropped term
/// bounds the remainder, so the result is within `eps` of the full sum.
pub fn alternating_sum(series: &AlternatingSeries) -> Approximator<Rational> {
    let series = series.clone();
    Approximator::new(move |eps: &Gauge| {
        let mut sum = Rational::new();
        for t in series.terms() {
            if Rational::from(t.abs_ref()) <= *eps.value() {
                break;
            }
            sum += t;
        }
        sum
    })
}
