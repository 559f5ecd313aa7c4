use super::series::{alternating_sum, AlternatingSeries};
use crate::completion::{Approximator, UniformMap};
use crate::creal::{self, make_real, CReal};
use crate::error::{Error, Result};
use crate::rational::{Gauge, Rational};

/// Series for `1 <= a <= 3/2`.
fn small_ln(a: Rational) -> CReal {
    debug_assert!(a >= 1 && a <= (3, 2));
    make_real(alternating_sum(&AlternatingSeries::log(a)))
}

/// Good for `1 <= a <= 2`, using `ln(a) = ln(3a/4) + ln(4/3)` above 3/2.
fn wide_ln(a: Rational) -> CReal {
    if a <= (3, 2) {
        small_ln(a)
    } else {
        let shrunk = a * Rational::from((3, 4));
        creal::add(&small_ln(shrunk), &small_ln(Rational::from((4, 3))))
    }
}

/// For `a >= 1`: halve into `[1, 2]` and add back multiples of `ln 2`.
fn positive_ln(a: Rational) -> CReal {
    let mut reduced = a;
    let mut halvings = 0u32;
    while reduced > 2 {
        reduced /= 2u32;
        halvings += 1;
    }
    if halvings == 0 {
        return wide_ln(reduced);
    }
    let ln2 = wide_ln(Rational::from(2));
    creal::add(
        &wide_ln(reduced),
        &creal::scale(Rational::from(halvings), &ln2),
    )
}

pub fn ln_rational(a: &Rational) -> Result<CReal> {
    if *a <= 0 {
        return Err(Error::Domain(format!("ln of non-positive rational {a}")));
    }
    if *a < 1 {
        Ok(creal::negate(&positive_ln(a.clone().recip())))
    } else {
        Ok(positive_ln(a.clone()))
    }
}

/// `ln` on `[t, oo)` with modulus `eps t`; smaller inputs are clamped to `t`.
pub fn ln_map(t: Rational) -> UniformMap<Rational, Approximator<Rational>> {
    assert!(t > 0, "ln needs a positive lower bound");
    let lower = t.clone();
    UniformMap::new(
        format!("[{t}, oo)"),
        move |eps: &Gauge| eps.scaled(&t),
        move |b: &Rational| {
            let b = if *b < lower { lower.clone() } else { b.clone() };
            ln_rational(&b)
                .expect("clamped input is positive")
                .approximator()
                .clone()
        },
    )
}

/// `ln x` given a rational `0 < t <= x`.
pub fn ln_real_with_witness(x: &CReal, t: &Rational) -> Result<CReal> {
    if *t <= 0 {
        return Err(Error::Domain("ln of a negative real".into()));
    }
    Ok(creal::lift_bind(&ln_map(t.clone()), x))
}

pub fn ln_real(x: &CReal, max_halvings: Option<u32>) -> Result<CReal> {
    let t = creal::prove_nonzero(x, max_halvings)?;
    ln_real_with_witness(x, t.value())
}
