//! Rational numbers, gauges, and the number-theoretic helpers used by the
//! rest of the crate.
//!
//! `Rational` and `Integer` are GMP-backed and always kept in lowest terms
//! with a positive denominator.

use std::fmt;

pub use rug::{Integer, Rational};

use crate::error::{Error, Result};

/// A strictly positive rational: the accuracy asked of an approximation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Gauge(Rational);

impl Gauge {
    pub fn new(value: Rational) -> Result<Self> {
        if value > 0 {
            Ok(Gauge(value))
        } else {
            Err(Error::NonPositiveGauge(value.to_string()))
        }
    }

    /// `num / den`; panics unless both are positive.
    pub fn ratio(num: i64, den: i64) -> Self {
        assert!(num > 0 && den > 0, "gauge {num}/{den} is not positive");
        Gauge(Rational::from((num, den)))
    }

    pub fn one() -> Self {
        Gauge(Rational::from(1))
    }

    /// `2^-k`.
    pub fn pow2(k: u32) -> Self {
        Gauge(Rational::from((Integer::from(1), Integer::from(1) << k)))
    }

    pub fn value(&self) -> &Rational {
        &self.0
    }

    pub fn into_rational(self) -> Rational {
        self.0
    }

    pub fn half(&self) -> Self {
        Gauge(Rational::from(&self.0 / 2u32))
    }

    /// Multiplies by a positive factor; panics otherwise.
    pub fn scaled(&self, factor: &Rational) -> Self {
        assert!(*factor > 0, "gauge scale factor {factor} is not positive");
        Gauge(Rational::from(&self.0 * factor))
    }

    /// Divides by a positive divisor; panics otherwise.
    pub fn divided(&self, divisor: &Rational) -> Self {
        assert!(*divisor > 0, "gauge divisor {divisor} is not positive");
        Gauge(Rational::from(&self.0 / divisor))
    }

    pub fn div_int(&self, n: u64) -> Self {
        assert!(n > 0);
        Gauge(Rational::from(&self.0 / Integer::from(n)))
    }

    pub fn squared(&self) -> Self {
        Gauge(Rational::from(self.0.square_ref()))
    }
}

impl TryFrom<Rational> for Gauge {
    type Error = Error;

    fn try_from(value: Rational) -> Result<Self> {
        Gauge::new(value)
    }
}

impl fmt::Display for Gauge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// The rational in `[lo, hi]` with the smallest denominator, ties going to
/// the smallest absolute numerator.
///
/// For a positive interval this is the shallowest Stern-Brocot node inside
/// it, which minimises numerator and denominator at once, so the
/// continued-fraction walk below returns it directly.
pub fn simplest_in_interval(lo: &Rational, hi: &Rational) -> Result<Rational> {
    if lo > hi {
        return Err(Error::EmptyInterval {
            lo: lo.to_string(),
            hi: hi.to_string(),
        });
    }
    if *lo <= 0 && *hi >= 0 {
        return Ok(Rational::new());
    }
    if *hi < 0 {
        let lo_pos = Rational::from(-hi);
        let hi_pos = Rational::from(-lo);
        return Ok(-simplest_positive(&lo_pos, &hi_pos));
    }
    Ok(simplest_positive(lo, hi))
}

fn simplest_positive(lo: &Rational, hi: &Rational) -> Rational {
    // lo = a/b, hi = c/d, kept as unreduced integer pairs through the walk.
    let (mut a, mut b) = (lo.numer().clone(), lo.denom().clone());
    let (mut c, mut d) = (hi.numer().clone(), hi.denom().clone());
    let mut terms: Vec<Integer> = Vec::new();
    loop {
        let (q, r) = a.div_rem_floor_ref(&b).into();
        let q: Integer = q;
        let r: Integer = r;
        if r == 0 {
            terms.push(q);
            break;
        }
        let ceil = Integer::from(&q + 1u32);
        if Integer::from(&ceil * &d) <= c {
            terms.push(ceil);
            break;
        }
        // Both endpoints lie strictly inside (q, q + 1): recurse on the
        // reciprocals of their fractional parts, which swaps their order.
        let c_frac = &c - Integer::from(&q * &d);
        terms.push(q);
        // (a, b, c, d) <- (d, c - q d, b, r)
        let old_b = std::mem::replace(&mut b, c_frac);
        a = std::mem::replace(&mut d, r);
        c = old_b;
    }
    from_continued_fraction(&terms)
}

fn from_continued_fraction(terms: &[Integer]) -> Rational {
    let (mut h_prev, mut h) = (Integer::from(0), Integer::from(1));
    let (mut k_prev, mut k) = (Integer::from(1), Integer::from(0));
    for t in terms {
        let h_next = Integer::from(t * &h) + &h_prev;
        let k_next = Integer::from(t * &k) + &k_prev;
        h_prev = std::mem::replace(&mut h, h_next);
        k_prev = std::mem::replace(&mut k, k_next);
    }
    Rational::from((h, k))
}

/// The simplest rational within `eps` of `a` (closed ball).
pub fn approx(a: &Rational, eps: &Gauge) -> Rational {
    let lo = Rational::from(a - eps.value());
    let hi = Rational::from(a + eps.value());
    simplest_in_interval(&lo, &hi).expect("a - eps <= a + eps")
}

/// Nearest integer, ties to even.
pub fn round_nearest(a: &Rational) -> Integer {
    let (floor, rem) = a.numer().div_rem_floor_ref(a.denom()).into();
    let floor: Integer = floor;
    let rem: Integer = rem;
    let twice = Integer::from(&rem << 1u32);
    match twice.cmp(a.denom()) {
        std::cmp::Ordering::Less => floor,
        std::cmp::Ordering::Greater => floor + 1u32,
        std::cmp::Ordering::Equal => {
            if floor.is_even() {
                floor
            } else {
                floor + 1u32
            }
        }
    }
}

pub fn floor(a: &Rational) -> Integer {
    let (floor, _rem) = a.numer().div_rem_floor_ref(a.denom()).into();
    floor
}

/// `x^0, x^1, x^2, ...`, each one multiplication from the last.
pub fn powers(x: &Rational) -> impl Iterator<Item = Rational> + Clone {
    let x = x.clone();
    std::iter::successors(Some(Rational::from(1)), move |p| {
        Some(Rational::from(p * &x))
    })
}

/// `0!, 1!, 2!, ...`.
pub fn factorials() -> impl Iterator<Item = Integer> + Clone {
    std::iter::successors(Some((Integer::from(1), 1u32)), |(f, i)| {
        Some((Integer::from(f * *i), i + 1))
    })
    .map(|(f, _)| f)
}

/// Parses `p`, `p/q`, or a decimal such as `-3.14`, exactly.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    if let Some((int_part, frac_part)) = text.split_once('.') {
        let negative = int_part.starts_with('-');
        let int_digits = int_part.trim_start_matches(['-', '+']);
        if !int_digits.chars().all(|c| c.is_ascii_digit())
            || !frac_part.chars().all(|c| c.is_ascii_digit())
            || (int_digits.is_empty() && frac_part.is_empty())
        {
            return None;
        }
        let digits = format!("{int_digits}{frac_part}");
        let num = Integer::from_str_radix(&digits, 10).ok()?;
        let den = Integer::from(Integer::u_pow_u(10, frac_part.len() as u32));
        let r = Rational::from((num, den));
        return Some(if negative { -r } else { r });
    }
    text.parse::<Rational>().ok()
}
