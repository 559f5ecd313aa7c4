use rug::ops::Pow;

use super::SeriesRadius;
use crate::completion::{Approximator, UniformMap};
use crate::creal::{self, make_real, CReal};
use crate::rational::{Gauge, Integer, Rational};

/// Taylor sum of `exp(a)` for `|a| <= 1/2`, keeping terms while
/// `m |t| >= eps`. For `a <= 0` the series alternates and `m = 1`; for
/// `a > 0` consecutive terms shrink by at least half, so the tail is at most
/// twice the first dropped term and `m = 2`.
fn small_exp(a: Rational) -> CReal {
    debug_assert!(Rational::from(a.abs_ref()) <= (1, 2));
    let m = if a <= 0 { 1u32 } else { 2u32 };
    make_real(Approximator::new(move |eps: &Gauge| {
        let mut sum = Rational::new();
        let mut term = Rational::from(1);
        let mut i = 1u64;
        while Rational::from(term.abs_ref()) * m >= *eps.value() {
            sum += &term;
            term = Rational::from(&term * &a) / Rational::from(i);
            i += 1;
        }
        sum
    }))
}

/// An upper bound on `exp(h)`: 1 for `h <= 0`, 2 up to `1/2`, else `3^ceil(h)`.
fn exp_bound(h: &Rational) -> Rational {
    if *h <= 0 {
        Rational::from(1)
    } else if *h <= (1, 2) {
        Rational::from(2)
    } else {
        let k = Rational::from(h.ceil_ref())
            .numer()
            .to_u32()
            .expect("exponent fits in u32");
        Rational::from(Integer::from(3).pow(k))
    }
}

/// `exp(a)`: halve `a` below the radius, sum the series, then square once
/// per halving.
pub fn exp_rational(a: &Rational, radius: &SeriesRadius) -> CReal {
    let mut reduced = a.clone();
    let mut halvings = 0u32;
    while Rational::from(reduced.abs_ref()) > *radius.threshold() {
        reduced /= 2u32;
        halvings += 1;
    }
    let mut x = small_exp(reduced.clone());
    for _ in 0..halvings {
        x = creal::power_int_bounded(&x, 2, exp_bound(&reduced));
        reduced *= 2u32;
    }
    x
}

/// `2^-a` for `a <= 0`, else `3^-a`: the factor `exp`'s modulus applies to
/// `eps` on `(-oo, a]`.
pub fn exp_modulus_factor(upper: &Integer) -> Rational {
    if *upper <= 0 {
        let k = upper
            .clone()
            .abs()
            .to_u32()
            .expect("exponent bound fits in u32");
        Rational::from(Integer::from(1) << k)
    } else {
        let k = upper.to_u32().expect("exponent bound fits in u32");
        Rational::from((Integer::from(1), Integer::from(3).pow(k)))
    }
}

/// `exp` on `(-oo, upper]`; inputs above `upper` are clamped to it.
pub fn exp_map(
    upper: Integer,
    radius: SeriesRadius,
) -> UniformMap<Rational, Approximator<Rational>> {
    let factor = exp_modulus_factor(&upper);
    let top = Rational::from(&upper);
    UniformMap::new(
        format!("(-oo, {upper}]"),
        move |eps: &Gauge| eps.scaled(&factor),
        move |b: &Rational| {
            let b = if *b > top { top.clone() } else { b.clone() };
            exp_rational(&b, &radius).approximator().clone()
        },
    )
}

pub fn exp_real(x: &CReal, radius: &SeriesRadius) -> CReal {
    let upper = Integer::from(x.int_approx() + 1u32);
    creal::lift_bind(&exp_map(upper, radius.clone()), x)
}
