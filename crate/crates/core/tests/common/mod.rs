#![allow(dead_code)]

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

use exact_reals::completion::{join, map, unit, Approximator, GaugeSchedule, UniformMap};
use exact_reals::creal::{self, compress, make_real, CReal};
use exact_reals::elementary::sqrt_real;
use exact_reals::rational::{Gauge, Integer, Rational};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn q(n: i64, d: i64) -> Rational {
    Rational::from((n, d))
}

pub fn schedule() -> GaugeSchedule {
    GaugeSchedule::default()
}

/// Uniform over `[lo, hi]` on a grid of `steps` points.
pub fn rational_in(rng: &mut impl Rng, lo: &Rational, hi: &Rational, steps: u32) -> Rational {
    let k = rng.gen_range(0..=steps);
    let width = Rational::from(hi - lo);
    lo + width * Rational::from((k, steps))
}

/// A rational with numerator and denominator up to the given sizes.
pub fn random_rational(rng: &mut impl Rng, max_num: i64, max_den: i64) -> Rational {
    q(
        rng.gen_range(-max_num..=max_num),
        rng.gen_range(1..=max_den),
    )
}

/// A deterministic value in `[-1, 1]` keyed by a seed and a gauge.
fn wobble(seed: u64, eps: &Gauge) -> Rational {
    let mut h = DefaultHasher::new();
    seed.hash(&mut h);
    eps.value().to_string().hash(&mut h);
    q((h.finish() % 2001) as i64 - 1000, 1000)
}

/// `x(eps) = c + w(eps) eps / 2` with a pseudo-random `w` in `[-1, 1]`.
pub fn wobbly(center: Rational, seed: u64) -> Approximator<Rational> {
    Approximator::new(move |eps: &Gauge| {
        (wobble(seed, eps) * eps.value()) / 2u32 + &center
    })
}

pub fn shifted(x: &Approximator<Rational>, c: Rational) -> Approximator<Rational> {
    let x = x.clone();
    Approximator::new(move |eps: &Gauge| x.at(eps) + &c)
}

/// A regular function over the rationals, built from units, wobbly
/// approximations, compression chains and lifted arithmetic.
pub fn random_regular(rng: &mut impl Rng) -> Approximator<Rational> {
    let center = random_rational(rng, 400, 60);
    regular_near(rng, center)
}

/// A regular function whose limit lies within `1/100` of `center`.
pub fn regular_near(rng: &mut impl Rng, center: Rational) -> Approximator<Rational> {
    let seed: u64 = rng.gen();
    match rng.gen_range(0..6) {
        0 => unit(center),
        1 => wobbly(center, seed),
        2 => {
            let mut x = wobbly(center, seed);
            for _ in 0..rng.gen_range(1..4) {
                x = compress(&x);
            }
            x
        }
        3 => {
            let part = random_rational(rng, 50, 7);
            let rest = Rational::from(&center - &part);
            creal::add(
                &make_real(wobbly(rest, seed)),
                &make_real(wobbly(part, seed ^ 1)),
            )
            .approximator()
            .clone()
        }
        4 => {
            let k = q(rng.gen_range(1..20), rng.gen_range(1..9));
            let rest = Rational::from(&center / &k);
            creal::mult(
                &make_real(wobbly(rest, seed)),
                &make_real(wobbly(k, seed ^ 2)),
            )
            .approximator()
            .clone()
        }
        _ => {
            // center + sqrt(p) / 1000 for a random 0 <= p < 100.
            let root = sqrt_real(&make_real(wobbly(q(rng.gen_range(0..100), 1), seed)));
            creal::translate(center, &creal::scale(q(1, 1000), &root))
                .approximator()
                .clone()
        }
    }
}

pub fn random_real(rng: &mut impl Rng) -> CReal {
    make_real(random_regular(rng))
}

/// A random real within `1/100` of a random rational in `[lo, hi]`.
pub fn real_in(rng: &mut impl Rng, lo: i64, hi: i64) -> CReal {
    let center = rational_in(rng, &q(lo, 1), &q(hi, 1), 10_000);
    make_real(regular_near(rng, center))
}

/// An element of the completion of the completion: at `eps`, the inner
/// function shifted by at most `eps / 2`.
pub fn nested(x: &Approximator<Rational>, seed: u64) -> Approximator<Approximator<Rational>> {
    let x = x.clone();
    Approximator::new(move |eps: &Gauge| {
        shifted(&x, wobble(seed, eps) * eps.value() / Rational::from(2))
    })
}

pub fn nested3(
    x: &Approximator<Rational>,
    seed: u64,
) -> Approximator<Approximator<Approximator<Rational>>> {
    let x = x.clone();
    Approximator::new(move |eps: &Gauge| {
        let shift = wobble(seed ^ 0x5eed, eps) * eps.value() / Rational::from(2);
        nested(&shifted(&x, shift), seed)
    })
}

/// A uniformly continuous map on the rationals with its modulus.
pub fn random_map(rng: &mut impl Rng) -> UniformMap<Rational, Rational> {
    let a = random_rational(rng, 30, 8);
    match rng.gen_range(0..6) {
        0 => creal::maps::negate(),
        1 => creal::maps::translate(a),
        2 => {
            let a = if a == 0 { q(3, 2) } else { a };
            creal::maps::scale(a)
        }
        3 => creal::maps::abs(),
        4 => creal::maps::max_with(a),
        _ => creal::maps::min_with(a),
    }
}

/// `map(f)` as a uniform map on the completion, with the modulus of `f`.
pub fn lift_map(
    f: &UniformMap<Rational, Rational>,
) -> UniformMap<Approximator<Rational>, Approximator<Rational>> {
    let (f1, f2) = (f.clone(), f.clone());
    UniformMap::new(
        "completion",
        move |eps: &Gauge| f1.modulus(eps),
        move |x: &Approximator<Rational>| map(&f2, x),
    )
}

pub fn unit_map<X: Clone + Send + Sync + 'static>() -> UniformMap<X, Approximator<X>> {
    UniformMap::new("everywhere", Gauge::clone, |a: &X| unit(a.clone()))
}

pub fn join_map() -> UniformMap<Approximator<Approximator<Rational>>, Approximator<Rational>> {
    UniformMap::new(
        "everywhere",
        Gauge::clone,
        |x: &Approximator<Approximator<Rational>>| join(x.clone()),
    )
}

/// `|x(eps) - v| <= eps` for every scheduled gauge.
pub fn within_gauge_of(x: &CReal, v: &Rational) -> bool {
    schedule()
        .gauges()
        .iter()
        .all(|e| Rational::from(&x.approximate(e) - v).abs() <= *e.value())
}

/// `floor(10^digits value)` parsed from a truncated decimal string.
pub fn scaled_reference(text: &str, digits: usize) -> Integer {
    let negative = text.starts_with('-');
    let unsigned = text.trim_start_matches('-');
    let (int_part, frac) = unsigned.split_once('.').expect("decimal point");
    assert!(frac.len() >= digits, "reference too short");
    let n: Integer = format!("{int_part}{}", &frac[..digits])
        .parse()
        .expect("digits");
    if negative {
        -n
    } else {
        n
    }
}

/// Reference digits keyed by name, each with at least `digits + 20`
/// fractional digits.
pub fn reference_table(contents: &str) -> Vec<(String, String)> {
    contents
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| {
            let (name, value) = l.split_once('\t').expect("tab-separated");
            (name.to_string(), value.to_string())
        })
        .collect()
}

/// `mantissa / 10^digits` is within one final unit of the reference, allowing
/// for the reference's own truncation in its 20 guard digits.
pub fn within_one_unit(mantissa: &Integer, reference: &str, digits: usize) -> bool {
    let guard = Integer::from(Integer::u_pow_u(10, 20));
    let oracle = scaled_reference(reference, digits + 20);
    let diff = Integer::from(mantissa * &guard) - oracle;
    diff.abs() <= Integer::from(&guard + 1u32)
}
