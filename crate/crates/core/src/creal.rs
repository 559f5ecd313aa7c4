//! Real numbers as the completion of the rationals.
//!
//! A [`CReal`] wraps a regular rational approximator together with an
//! integer within one of the value, computed on first use. Every
//! operation compresses its inputs before lifting a [`UniformMap`] over
//! them, which keeps the rationals flowing through a computation small.

use std::cell::Cell;
use std::cmp::Ordering;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock};

use crate::completion::{self, Approximator, UniformMap};
use crate::error::{Error, Result};
use crate::rational::{self, Gauge, Integer, Rational};
use rug::ops::Pow;

thread_local! {
    static COMPRESSION: Cell<bool> = const { Cell::new(true) };
}

/// Runs `f` with input compression turned off for every `CReal` built on
/// this thread inside it. Only useful for checking that compression does not
/// change results.
#[doc(hidden)]
pub fn with_compression_disabled<R>(f: impl FnOnce() -> R) -> R {
    let previous = COMPRESSION.with(|c| c.replace(false));
    let out = f();
    COMPRESSION.with(|c| c.set(previous));
    out
}

/// `compress(x)(eps) = approx(x(eps/2), eps/2)`.
pub fn compress(x: &Approximator<Rational>) -> Approximator<Rational> {
    let x = x.clone();
    Approximator::new(move |eps| {
        let half = eps.half();
        rational::approx(&x.at(&half), &half)
    })
}

#[derive(Clone, Debug)]
pub struct CReal {
    approx: Approximator<Rational>,
    raw: Approximator<Rational>,
    int_approx: Arc<OnceLock<Integer>>,
}

fn int_approx_of(raw: &Approximator<Rational>, cell: &OnceLock<Integer>) -> Integer {
    cell.get_or_init(|| rational::round_nearest(&raw.at(&Gauge::ratio(1, 2))))
        .clone()
}

/// Wraps a regular approximator. `round(x(1/2))` is memoised on first use
/// and answers every query at a gauge of at least 1.
pub fn make_real(x: Approximator<Rational>) -> CReal {
    let cell = Arc::new(OnceLock::new());
    let (raw, shared) = (x.clone(), Arc::clone(&cell));
    let approx = Approximator::new(move |eps: &Gauge| {
        if *eps.value() >= 1 {
            Rational::from(int_approx_of(&raw, &shared))
        } else {
            raw.at(eps)
        }
    });
    CReal {
        approx,
        raw: x,
        int_approx: cell,
    }
}

impl CReal {
    pub fn from_rational(q: Rational) -> Self {
        make_real(completion::unit(q))
    }

    pub fn from_int(n: i64) -> Self {
        CReal::from_rational(Rational::from(n))
    }

    pub fn zero() -> Self {
        CReal::from_int(0)
    }

    pub fn approximate(&self, eps: &Gauge) -> Rational {
        self.approx.at(eps)
    }

    pub fn approximator(&self) -> &Approximator<Rational> {
        &self.approx
    }

    pub fn int_approx(&self) -> &Integer {
        self.int_approx
            .get_or_init(|| rational::round_nearest(&self.raw.at(&Gauge::ratio(1, 2))))
    }

    /// `|int_approx| + 1`, an upper bound on `|self|`.
    pub fn bound(&self) -> Rational {
        Rational::from(self.int_approx().clone().abs() + 1u32)
    }

    /// The compressed approximator fed to every lifted operation.
    pub fn squish(&self) -> Approximator<Rational> {
        if COMPRESSION.with(Cell::get) {
            compress(&self.approx)
        } else {
            self.approx.clone()
        }
    }

    /// `(x(eps) - eps, x(eps) + eps)`, an interval containing the value.
    pub fn approx_range(&self, eps: &Gauge) -> (Rational, Rational) {
        let r = self.approximate(eps);
        (
            Rational::from(&r - eps.value()),
            Rational::from(&r + eps.value()),
        )
    }
}

pub fn lift(f: &UniformMap<Rational, Rational>, x: &CReal) -> CReal {
    make_real(completion::map(f, &x.squish()))
}

pub fn lift_bind(f: &UniformMap<Rational, Approximator<Rational>>, x: &CReal) -> CReal {
    make_real(completion::bind(f, &x.squish()))
}

pub fn lift2(
    f: &UniformMap<Rational, UniformMap<Rational, Rational>>,
    x: &CReal,
    y: &CReal,
) -> CReal {
    make_real(completion::map2(f, &x.squish(), &y.squish()))
}

/// The uniformly continuous rational maps behind the arithmetic.
pub mod maps {
    use super::*;

    fn everywhere() -> &'static str {
        "all rationals"
    }

    fn clamp(b: &Rational, lo: &Rational, hi: &Rational) -> Rational {
        if b < lo {
            lo.clone()
        } else if b > hi {
            hi.clone()
        } else {
            b.clone()
        }
    }

    pub fn negate() -> UniformMap<Rational, Rational> {
        UniformMap::new(everywhere(), Gauge::clone, |b: &Rational| {
            Rational::from(-b)
        })
    }

    pub fn translate(a: Rational) -> UniformMap<Rational, Rational> {
        UniformMap::new(everywhere(), Gauge::clone, move |b: &Rational| {
            Rational::from(&a + b)
        })
    }

    /// `b |-> a b` with modulus `eps / |a|`; constant when `a = 0`.
    pub fn scale(a: Rational) -> UniformMap<Rational, Rational> {
        if a == 0 {
            return UniformMap::new(
                everywhere(),
                |_: &Gauge| Gauge::one(),
                |_: &Rational| Rational::new(),
            );
        }
        let size = a.clone().abs();
        UniformMap::new(
            everywhere(),
            move |eps: &Gauge| eps.divided(&size),
            move |b: &Rational| Rational::from(&a * b),
        )
    }

    pub fn abs() -> UniformMap<Rational, Rational> {
        UniformMap::new(everywhere(), Gauge::clone, |b: &Rational| b.clone().abs())
    }

    pub fn max_with(a: Rational) -> UniformMap<Rational, Rational> {
        UniformMap::new(everywhere(), Gauge::clone, move |b: &Rational| {
            if *b > a {
                b.clone()
            } else {
                a.clone()
            }
        })
    }

    pub fn min_with(a: Rational) -> UniformMap<Rational, Rational> {
        UniformMap::new(everywhere(), Gauge::clone, move |b: &Rational| {
            if *b < a {
                b.clone()
            } else {
                a.clone()
            }
        })
    }

    /// Curried addition; both moduli are the identity.
    pub fn add() -> UniformMap<Rational, UniformMap<Rational, Rational>> {
        UniformMap::new(everywhere(), Gauge::clone, |a: &Rational| {
            translate(a.clone())
        })
    }

    /// Curried `a |-> b |-> a b` for `|b| <= bound`. The inner argument is
    /// clamped into `[-bound, bound]`, which makes `eps / bound` a modulus
    /// for the outer one.
    pub fn mult(bound: Rational) -> UniformMap<Rational, UniformMap<Rational, Rational>> {
        assert!(bound > 0, "multiplication bound must be positive");
        let outer = bound.clone();
        let hi = bound;
        let lo = Rational::from(-&hi);
        UniformMap::new(
            format!("|inner| <= {hi}"),
            move |eps: &Gauge| eps.divided(&outer),
            move |a: &Rational| {
                let scaled = scale(a.clone());
                let (lo, hi) = (lo.clone(), hi.clone());
                UniformMap::new(
                    "inner argument, clamped to the bound",
                    move |eps: &Gauge| scaled.modulus(eps),
                    {
                        let a = a.clone();
                        move |b: &Rational| Rational::from(&a * &clamp(b, &lo, &hi))
                    },
                )
            },
        )
    }

    /// `b |-> 1/b` on `[t, oo)` for `t > 0`, or `(-oo, t]` for `t < 0`,
    /// with modulus `eps t^2`.
    pub fn recip(t: Rational) -> UniformMap<Rational, Rational> {
        assert!(t != 0, "reciprocal needs a nonzero witness");
        let t_sq = Rational::from(t.square_ref());
        let positive = t > 0;
        let domain = if positive {
            format!("[{t}, oo)")
        } else {
            format!("(-oo, {t}]")
        };
        UniformMap::new(
            domain,
            move |eps: &Gauge| eps.scaled(&t_sq),
            move |b: &Rational| {
                let clamped = if positive == (*b > t) {
                    b.clone()
                } else {
                    t.clone()
                };
                clamped.recip()
            },
        )
    }

    /// `b |-> b^n` on `[-bound, bound]` with modulus `eps / (n bound^(n-1))`.
    pub fn power(bound: Rational, n: u32) -> UniformMap<Rational, Rational> {
        if n == 0 {
            return UniformMap::new(
                everywhere(),
                |_: &Gauge| Gauge::one(),
                |_: &Rational| Rational::from(1),
            );
        }
        assert!(bound > 0, "power bound must be positive");
        let slope = bound.clone().pow(n - 1) * n;
        let hi = bound;
        let lo = Rational::from(-&hi);
        UniformMap::new(
            format!("[{lo}, {hi}]"),
            move |eps: &Gauge| eps.divided(&slope),
            move |b: &Rational| clamp(b, &lo, &hi).pow(n),
        )
    }

    /// Polynomial with coefficients `p[0] + p[1] b + ...` on `[-bound, bound]`,
    /// with modulus `eps / max_slope`, where `max_slope` is `sum |p'_i|` evaluated at
    /// `max(1, bound)`.
    pub fn polynomial(bound: Rational, p: Vec<Rational>) -> UniformMap<Rational, Rational> {
        if p.is_empty() {
            return UniformMap::new(
                everywhere(),
                |_: &Gauge| Gauge::one(),
                |_: &Rational| Rational::new(),
            );
        }
        let at = if bound > 1 {
            bound.clone()
        } else {
            Rational::from(1)
        };
        let derivative_abs: Vec<Rational> = p
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| Rational::from(c * i as u32).abs())
            .collect();
        let max_slope = horner(&derivative_abs, &at);
        if max_slope == 0 {
            let c = p[0].clone();
            return UniformMap::new(
                everywhere(),
                |_: &Gauge| Gauge::one(),
                move |_: &Rational| c.clone(),
            );
        }
        let hi = bound;
        let lo = Rational::from(-&hi);
        UniformMap::new(
            format!("[{lo}, {hi}]"),
            move |eps: &Gauge| eps.divided(&max_slope),
            move |b: &Rational| horner(&p, &clamp(b, &lo, &hi)),
        )
    }

    pub(crate) fn horner(p: &[Rational], x: &Rational) -> Rational {
        p.iter()
            .rev()
            .fold(Rational::new(), |acc, c| Rational::from(&acc * x) + c)
    }
}

pub fn negate(x: &CReal) -> CReal {
    lift(&maps::negate(), x)
}

pub fn translate(a: Rational, x: &CReal) -> CReal {
    lift(&maps::translate(a), x)
}

pub fn scale(a: Rational, x: &CReal) -> CReal {
    if a == 0 {
        return CReal::zero();
    }
    lift(&maps::scale(a), x)
}

pub fn abs(x: &CReal) -> CReal {
    lift(&maps::abs(), x)
}

/// `max(a, x)`: injects `x` into `[a, oo)`.
pub fn max_rational(a: Rational, x: &CReal) -> CReal {
    lift(&maps::max_with(a), x)
}

/// `min(a, x)`: injects `x` into `(-oo, a]`.
pub fn min_rational(a: Rational, x: &CReal) -> CReal {
    lift(&maps::min_with(a), x)
}

pub fn add(x: &CReal, y: &CReal) -> CReal {
    lift2(&maps::add(), x, y)
}

pub fn sub(x: &CReal, y: &CReal) -> CReal {
    add(x, &negate(y))
}

/// Computes `y x` with `x` bounded by `|int_approx(x)| + 1`.
pub fn mult(x: &CReal, y: &CReal) -> CReal {
    lift2(&maps::mult(x.bound()), y, x)
}

/// A rational `t` with `0 < |t| <= |x|` and the sign of `x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ApartnessWitness(Rational);

impl ApartnessWitness {
    /// Caller asserts `0 < |value| <= |x|` for the real it will be used with.
    pub fn new_unchecked(value: Rational) -> Self {
        assert!(value != 0, "a witness is never zero");
        ApartnessWitness(value)
    }

    pub fn value(&self) -> &Rational {
        &self.0
    }

    pub fn is_positive(&self) -> bool {
        self.0 > 0
    }
}

/// Searches gauges `2^-k` for `k = 0, 1, 2, 4, 8, ...` until the
/// approximation interval excludes zero. With `max_halvings = Some(cap)` the
/// last gauge tried is `2^-cap`; with `None` it never returns on zero.
pub fn prove_nonzero(x: &CReal, max_halvings: Option<u32>) -> Result<ApartnessWitness> {
    let mut halvings = 0u32;
    loop {
        let (lo, hi) = x.approx_range(&Gauge::pow2(halvings));
        if hi < 0 {
            return Ok(ApartnessWitness(hi));
        }
        if lo > 0 {
            return Ok(ApartnessWitness(lo));
        }
        let next = if halvings == 0 {
            1
        } else {
            halvings.saturating_mul(2)
        };
        halvings = match max_halvings {
            Some(cap) if halvings >= cap => return Err(Error::CannotSeparate { halvings }),
            Some(cap) => next.min(cap),
            None => next,
        };
    }
}

pub fn recip_with_witness(x: &CReal, t: &ApartnessWitness) -> CReal {
    lift(&maps::recip(t.value().clone()), x)
}

pub fn recip(x: &CReal, max_halvings: Option<u32>) -> Result<CReal> {
    let t = prove_nonzero(x, max_halvings)?;
    Ok(recip_with_witness(x, &t))
}

pub fn div(x: &CReal, y: &CReal, max_halvings: Option<u32>) -> Result<CReal> {
    Ok(mult(x, &recip(y, max_halvings)?))
}

pub fn power_int(x: &CReal, n: u32) -> CReal {
    if n == 0 {
        return CReal::from_int(1);
    }
    lift(&maps::power(x.bound(), n), x)
}

/// `x^n` for a caller-supplied `bound >= |x|`, skipping the query that
/// [`power_int`] spends finding one.
pub fn power_int_bounded(x: &CReal, n: u32, bound: Rational) -> CReal {
    if n == 0 {
        return CReal::from_int(1);
    }
    lift(&maps::power(bound, n), x)
}

pub fn poly_eval(p: &[Rational], x: &CReal) -> CReal {
    lift(&maps::polynomial(x.bound(), p.to_vec()), x)
}

/// [`poly_eval`] with a caller-supplied `bound >= |x|`.
pub fn poly_eval_bounded(p: &[Rational], x: &CReal, bound: Rational) -> CReal {
    lift(&maps::polynomial(bound, p.to_vec()), x)
}

/// Sums a list by querying every term at `eps / n`.
pub fn sum_list(xs: &[CReal]) -> CReal {
    if xs.is_empty() {
        return CReal::zero();
    }
    let terms: Vec<Approximator<Rational>> = xs.iter().map(CReal::squish).collect();
    let n = terms.len() as u64;
    make_real(Approximator::new(move |eps: &Gauge| {
        let each = eps.div_int(n);
        terms
            .iter()
            .fold(Rational::new(), |acc, t| acc + t.at(&each))
    }))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Comparison {
    Less,
    Greater,
    /// The two values may differ by less than this gauge.
    Indistinguishable(Gauge),
}

/// Decides the order of `x` and `y` unless they are within `eps`.
pub fn compare_approx(x: &CReal, y: &CReal, eps: &Gauge) -> Comparison {
    let half = eps.half();
    let d = sub(x, y).approximate(&half);
    if Rational::from(&d + half.value()) < 0 {
        Comparison::Less
    } else if Rational::from(&d - half.value()) > 0 {
        Comparison::Greater
    } else {
        Comparison::Indistinguishable(eps.clone())
    }
}

impl Comparison {
    pub fn ordering(&self) -> Option<Ordering> {
        match self {
            Comparison::Less => Some(Ordering::Less),
            Comparison::Greater => Some(Ordering::Greater),
            Comparison::Indistinguishable(_) => None,
        }
    }
}

impl Add for &CReal {
    type Output = CReal;
    fn add(self, rhs: &CReal) -> CReal {
        add(self, rhs)
    }
}

impl Sub for &CReal {
    type Output = CReal;
    fn sub(self, rhs: &CReal) -> CReal {
        sub(self, rhs)
    }
}

impl Mul for &CReal {
    type Output = CReal;
    fn mul(self, rhs: &CReal) -> CReal {
        mult(self, rhs)
    }
}

impl Neg for &CReal {
    type Output = CReal;
    fn neg(self) -> CReal {
        negate(self)
    }
}

impl From<Rational> for CReal {
    fn from(q: Rational) -> Self {
        CReal::from_rational(q)
    }
}
