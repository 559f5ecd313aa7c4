mod common;

use common::{q, schedule, within_gauge_of};
use exact_reals::completion::approx_equal_check;
use exact_reals::creal::{self, CReal};
use exact_reals::digits::format_digits;
use exact_reals::elementary::*;
use exact_reals::error::Error;
use exact_reals::rational::{Gauge, Integer, Rational};

fn r() -> SeriesRadius {
    SeriesRadius::default()
}

fn ctx() -> Elementary {
    Elementary::default()
}

fn real(n: i64, d: i64) -> CReal {
    CReal::from_rational(q(n, d))
}

fn same(x: &CReal, y: &CReal) -> bool {
    approx_equal_check(x.approximator(), y.approximator(), &schedule())
}

/// Within one unit of the ten-digit truncation `expected`.
fn ten_digits(x: &CReal, expected: i64) -> bool {
    let m = format_digits(x, 10);
    Integer::from(m.mantissa() - expected).abs() <= 1
}

#[test]
fn exp_examples() {
    assert!(within_gauge_of(&exp_rational(&q(0, 1), &r()), &q(1, 1)));
    assert!(ten_digits(&exp_rational(&q(1, 1), &r()), 27_182_818_284));
    let product = creal::mult(
        &exp_rational(&q(-1, 1), &r()),
        &exp_rational(&q(1, 1), &r()),
    );
    assert!(same(&product, &real(1, 1)));
    assert!(same(&exp_real(&CReal::zero(), &r()), &real(1, 1)));
    let five = ln_real(&real(5, 1), Some(100)).unwrap();
    assert!(same(&exp_real(&five, &r()), &real(5, 1)));
}

#[test]
fn exp_modulus() {
    assert_eq!(exp_modulus_factor(&Integer::from(-2)), q(4, 1));
    assert_eq!(exp_modulus_factor(&Integer::from(0)), q(1, 1));
    assert_eq!(exp_modulus_factor(&Integer::from(2)), q(1, 9));
    let eps = Gauge::ratio(1, 100);
    assert_eq!(
        exp_map(Integer::from(-2), r()).modulus(&eps),
        Gauge::ratio(4, 100)
    );
}

#[test]
fn sine_and_cosine_of_rationals() {
    assert!(within_gauge_of(&sin_rational(&q(0, 1), &r()), &q(0, 1)));
    assert!(ten_digits(&sin_rational(&q(1, 1), &r()), 8_414_709_848));
    assert!(same(
        &sin_rational(&q(-2, 3), &r()),
        &creal::negate(&sin_rational(&q(2, 3), &r()))
    ));
    assert!(within_gauge_of(&cos_rational(&q(0, 1), &r()), &q(1, 1)));
    assert!(ten_digits(&cos_rational(&q(3, 5), &r()), 8_253_356_149));
    let s = sin_rational(&q(1, 1), &r());
    let c = cos_rational(&q(1, 1), &r());
    let pythagoras = creal::add(&creal::power_int(&s, 2), &creal::power_int(&c, 2));
    assert!(same(&pythagoras, &real(1, 1)));
}

#[test]
fn sine_of_reals_reduces_by_quadrant() {
    assert!(same(&sin_real(&CReal::zero(), &r()), &CReal::zero()));
    assert!(same(&sin_real(&pi(), &r()), &CReal::zero()));
    let far = creal::translate(q(1, 1), &creal::scale(q(100, 1), &pi()));
    assert!(same(&sin_real(&far, &r()), &sin_rational(&q(1, 1), &r())));
    // Each quadrant of the dispatch table.
    for k in -4..8 {
        let x = creal::translate(q(1, 3), &pi_scaled(&q(k, 2)));
        let a = q(1, 3);
        let (s, c) = (sin_rational(&a, &r()), cos_rational(&a, &r()));
        let (want_sin, want_cos) = match k.rem_euclid(4) {
            0 => (s.clone(), c.clone()),
            1 => (c.clone(), creal::negate(&s)),
            2 => (creal::negate(&s), creal::negate(&c)),
            _ => (creal::negate(&c), s.clone()),
        };
        assert!(same(&sin_real(&x, &r()), &want_sin), "sin, k = {k}");
        assert!(same(&cos_real(&x, &r()), &want_cos), "cos, k = {k}");
    }
}

#[test]
fn logarithms() {
    assert!(within_gauge_of(&ln_rational(&q(1, 1)).unwrap(), &q(0, 1)));
    assert!(ten_digits(&ln_rational(&q(2, 1)).unwrap(), 6_931_471_805));
    assert!(same(
        &ln_rational(&q(1, 2)).unwrap(),
        &creal::negate(&ln_rational(&q(2, 1)).unwrap())
    ));
    assert!(matches!(ln_rational(&q(0, 1)), Err(Error::Domain(_))));
    assert!(matches!(ln_rational(&q(-3, 2)), Err(Error::Domain(_))));

    assert!(same(
        &ln_real(&real(1, 1), Some(50)).unwrap(),
        &CReal::zero()
    ));
    let e2 = exp_real(&real(2, 1), &r());
    assert!(same(&ln_real(&e2, Some(50)).unwrap(), &real(2, 1)));
    assert_eq!(
        ln_map(q(1, 4)).modulus(&Gauge::ratio(1, 10)),
        Gauge::ratio(1, 40)
    );
    assert!(matches!(
        ln_real_with_witness(&real(-1, 1), &q(-1, 2)),
        Err(Error::Domain(_))
    ));
    assert!(matches!(
        ln_real(&CReal::zero(), Some(30)),
        Err(Error::CannotSeparate { halvings: 30 })
    ));
}

#[test]
fn arctangent_and_pi() {
    assert!(within_gauge_of(&arctan_rational(&q(0, 1)), &q(0, 1)));
    assert!(same(
        &arctan_rational(&q(1, 1)),
        &creal::scale(q(1, 4), &pi())
    ));
    assert!(same(
        &arctan_rational(&q(-3, 4)),
        &creal::negate(&arctan_rational(&q(3, 4)))
    ));
    assert!(ten_digits(&pi(), 31_415_926_535));
    assert!(same(&pi_scaled(&q(1, 2)), &creal::scale(q(1, 2), &pi())));
    assert!(same(&arctan_real(&real(1, 1)), &pi_scaled(&q(1, 4))));
}

#[test]
fn square_roots() {
    assert!(within_gauge_of(&sqrt_rational(&q(0, 1)).unwrap(), &q(0, 1)));
    let trace: Vec<Rational> = newton_iterates(&q(2, 1)).take(3).map(|(b, _)| b).collect();
    assert_eq!(trace, vec![q(3, 2), q(3, 2), q(7, 5)]);
    assert!(matches!(sqrt_rational(&q(-1, 1)), Err(Error::Domain(_))));
    assert!(same(&sqrt_real(&CReal::zero()), &CReal::zero()));
    let root2 = sqrt_real(&real(2, 1));
    assert!(same(&creal::mult(&root2, &root2), &real(2, 1)));
    assert!(same(&sqrt_real(&real(4, 1)), &real(2, 1)));
    // Range reduction both ways.
    assert!(same(&sqrt_rational(&q(1, 64)).unwrap(), &real(1, 8)));
    assert!(same(&sqrt_rational(&q(900, 1)).unwrap(), &real(30, 1)));
    assert_eq!(
        sqrt_map().modulus(&Gauge::ratio(1, 10)),
        Gauge::ratio(1, 100)
    );
}

#[test]
fn derived_functions() {
    let c = ctx();
    assert!(same(&c.tanh(&CReal::zero()), &CReal::zero()));
    assert!(same(
        &c.pow(&real(2, 1), &real(10, 1)).unwrap(),
        &real(1024, 1)
    ));
    assert!(same(&c.acos(&CReal::zero()).unwrap(), &pi_scaled(&q(1, 2))));
    assert!(same(&c.asin(&real(1, 2)).unwrap(), &pi_scaled(&q(1, 6))));
    assert!(same(&c.tan(&pi_scaled(&q(1, 4))).unwrap(), &real(1, 1)));
    assert!(same(&c.atanh(&CReal::zero()).unwrap(), &CReal::zero()));
    assert!(same(&c.acosh(&real(1, 1)).unwrap(), &CReal::zero()));
    assert!(same(&c.asinh(&c.sinh(&real(3, 2))).unwrap(), &real(3, 2)));
    let cosh_sq = creal::power_int(&c.cosh(&real(1, 3)), 2);
    let sinh_sq = creal::power_int(&c.sinh(&real(1, 3)), 2);
    assert!(same(&creal::sub(&cosh_sq, &sinh_sq), &real(1, 1)));
    assert!(same(
        &c.powi(&real(3, 2), &Integer::from(-2)).unwrap(),
        &real(4, 9)
    ));
}

#[test]
fn series_radius_is_configurable() {
    assert!(SeriesRadius::new(q(0, 1)).is_err());
    assert!(SeriesRadius::new(q(3, 4)).is_err());
    let coarse = SeriesRadius::pow2(4).unwrap();
    assert!(same(
        &exp_rational(&q(3, 1), &coarse),
        &exp_rational(&q(3, 1), &r())
    ));
    assert!(same(
        &sin_rational(&q(5, 2), &coarse),
        &sin_rational(&q(5, 2), &r())
    ));
}
