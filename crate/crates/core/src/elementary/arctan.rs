use super::series::{alternating_sum, AlternatingSeries};
use crate::completion::{Approximator, UniformMap};
use crate::creal::{self, make_real, CReal};
use crate::rational::{Gauge, Rational};

/// Series for `|a| < 1/2`.
fn small_arctan(a: Rational) -> CReal {
    debug_assert!(Rational::from(a.abs_ref()) < (1, 2));
    make_real(alternating_sum(&AlternatingSeries::arctan(a)))
}

/// For `a > -1/2`.
fn positive_arctan(a: Rational) -> CReal {
    if a > 2 {
        creal::sub(
            &pi_scaled(&Rational::from((1, 2))),
            &small_arctan(a.recip()),
        )
    } else if a >= (1, 2) {
        let shifted = Rational::from(&a - 1u32) / Rational::from(&a + 1u32);
        creal::add(&pi_scaled(&Rational::from((1, 4))), &small_arctan(shifted))
    } else {
        small_arctan(a)
    }
}

pub fn arctan_rational(a: &Rational) -> CReal {
    if *a <= (-1, 2) {
        creal::negate(&positive_arctan(Rational::from(-a)))
    } else {
        positive_arctan(a.clone())
    }
}

pub fn arctan_map() -> UniformMap<Rational, Approximator<Rational>> {
    UniformMap::new("all rationals", Gauge::clone, |b: &Rational| {
        arctan_rational(b).approximator().clone()
    })
}

pub fn arctan_real(x: &CReal) -> CReal {
    creal::lift_bind(&arctan_map(), x)
}

/// `k pi`, from
/// `pi = 48 atan(1/38) + 80 atan(1/57) + 28 atan(1/239) + 96 atan(1/268)`.
pub fn pi_scaled(k: &Rational) -> CReal {
    let parts = [(48, 38), (80, 57), (28, 239), (96, 268)]
        .map(|(c, d)| creal::scale(Rational::from(k * c), &small_arctan(Rational::from((1, d)))));
    creal::sum_list(&parts)
}

pub fn pi() -> CReal {
    pi_scaled(&Rational::from(1))
}
