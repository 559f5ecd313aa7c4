use super::series::{alternating_sum, AlternatingSeries};
use super::{pi_scaled, SeriesRadius};
use crate::completion::{Approximator, UniformMap};
use crate::creal::{self, make_real, ApartnessWitness, CReal};
use crate::rational::{Gauge, Rational};

/// `sin(a)`: while `|a|` is at least the radius, use
/// `sin(a) = 3 sin(a/3) - 4 sin^3(a/3)`; below it, sum the series. Every
/// level is bounded by 1, so no level queries the one below to find a bound.
pub fn sin_rational(a: &Rational, radius: &SeriesRadius) -> CReal {
    let mut reduced = a.clone();
    let mut levels = 0u32;
    while Rational::from(reduced.abs_ref()) >= *radius.threshold() {
        reduced /= 3u32;
        levels += 1;
    }
    let triple = [0, 3, 0, -4].map(Rational::from);
    let mut x = make_real(alternating_sum(&AlternatingSeries::sine(reduced)));
    for _ in 0..levels {
        x = creal::poly_eval_bounded(&triple, &x, Rational::from(1));
    }
    x
}

/// `cos(a) = 1 - 2 sin^2(a/2)`.
pub fn cos_rational(a: &Rational, radius: &SeriesRadius) -> CReal {
    let half = Rational::from(a / 2u32);
    let sine = sin_rational(&half, radius);
    creal::poly_eval_bounded(&[1, 0, -2].map(Rational::from), &sine, Rational::from(1))
}

pub fn sin_map(radius: SeriesRadius) -> UniformMap<Rational, Approximator<Rational>> {
    UniformMap::new("all rationals", Gauge::clone, move |b: &Rational| {
        sin_rational(b, &radius).approximator().clone()
    })
}

pub fn cos_map(radius: SeriesRadius) -> UniformMap<Rational, Approximator<Rational>> {
    UniformMap::new("all rationals", Gauge::clone, move |b: &Rational| {
        cos_rational(b, &radius).approximator().clone()
    })
}

/// `x = x' + n pi/2` with `n` within one of `x / (pi/2)`; returns
/// `(n mod 4, x')`.
fn quadrant(x: &CReal) -> (u32, CReal) {
    let half_pi = pi_scaled(&Rational::from((1, 2)));
    // pi/2 > 1, so 1 witnesses it apart from zero.
    let inv = creal::recip_with_witness(
        &half_pi,
        &ApartnessWitness::new_unchecked(Rational::from(1)),
    );
    let n = creal::mult(x, &inv).int_approx().clone();
    let m = n.mod_u(4);
    let reduced = creal::sub(x, &creal::scale(Rational::from(&n), &half_pi));
    (m, reduced)
}

pub fn sin_real(x: &CReal, radius: &SeriesRadius) -> CReal {
    let (m, reduced) = quadrant(x);
    let slow_sin = || creal::lift_bind(&sin_map(radius.clone()), &reduced);
    let slow_cos = || creal::lift_bind(&cos_map(radius.clone()), &reduced);
    match m {
        0 => slow_sin(),
        1 => slow_cos(),
        2 => creal::negate(&slow_sin()),
        _ => creal::negate(&slow_cos()),
    }
}

pub fn cos_real(x: &CReal, radius: &SeriesRadius) -> CReal {
    let (m, reduced) = quadrant(x);
    let slow_sin = || creal::lift_bind(&sin_map(radius.clone()), &reduced);
    let slow_cos = || creal::lift_bind(&cos_map(radius.clone()), &reduced);
    match m {
        0 => slow_cos(),
        1 => creal::negate(&slow_sin()),
        2 => creal::negate(&slow_cos()),
        _ => slow_sin(),
    }
}
