use crate::completion::{Approximator, UniformMap};
use crate::creal::{self, make_real, CReal};
use crate::error::{Error, Result};
use crate::rational::{self, Gauge, Integer, Rational};

/// Newton iterates `(b_n, err_n)` for `sqrt(a)`, `1 <= a < 4`.
///
/// `b_0 = (a + 1)/2` with `err_0 = 1/2`; each step takes the simplest
/// rational within `err^2 / 2` of the Newton update and squares the error
/// bound, so `|b_n - sqrt(a)| <= err_n = 2^-(2^n)`.
pub fn newton_iterates(a: &Rational) -> impl Iterator<Item = (Rational, Rational)> {
    let a = a.clone();
    let start = (Rational::from(&a + 1u32) / 2u32, Rational::from((1, 2)));
    std::iter::successors(Some(start), move |(b, err)| {
        let update = (Rational::from(b.square_ref()) + &a) / Rational::from(b * 2u32);
        let tolerance = Rational::from(err.square_ref()) / 2u32;
        let next = rational::approx(&update, &Gauge::new(tolerance.clone()).expect("positive"));
        Some((next, tolerance * 2u32))
    })
}

fn newton_sqrt(a: Rational) -> CReal {
    make_real(Approximator::new(move |eps: &Gauge| {
        newton_iterates(&a)
            .find(|(_, err)| err <= eps.value())
            .map(|(b, _)| b)
            .expect("iterates converge")
    }))
}

pub fn sqrt_rational(a: &Rational) -> Result<CReal> {
    if *a < 0 {
        return Err(Error::Domain(format!(
            "square root of negative rational {a}"
        )));
    }
    if *a == 0 {
        return Ok(CReal::zero());
    }
    // Find m with 1 <= 4^m a < 4.
    let mut reduced = a.clone();
    let mut m = 0i64;
    while reduced < 1 {
        reduced *= 4u32;
        m += 1;
    }
    while reduced >= 4 {
        reduced /= 4u32;
        m -= 1;
    }
    let root = newton_sqrt(reduced);
    if m == 0 {
        return Ok(root);
    }
    let shift = u32::try_from(m.unsigned_abs()).expect("exponent fits in u32");
    let power = Integer::from(1) << shift;
    let factor = if m > 0 {
        Rational::from((Integer::from(1), power))
    } else {
        Rational::from(power)
    };
    Ok(creal::scale(factor, &root))
}

/// `sqrt` on the non-negative rationals with modulus `eps^2`; negative
/// inputs are clamped to 0.
pub fn sqrt_map() -> UniformMap<Rational, Approximator<Rational>> {
    UniformMap::new("[0, oo)", Gauge::squared, |b: &Rational| {
        let b = if *b < 0 { Rational::new() } else { b.clone() };
        sqrt_rational(&b)
            .expect("clamped input is non-negative")
            .approximator()
            .clone()
    })
}

pub fn sqrt_real(x: &CReal) -> CReal {
    creal::lift_bind(&sqrt_map(), x)
}
