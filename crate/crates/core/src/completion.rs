//! The completion monad over a base space.
//!
//! An [`Approximator`] is a regular function: queried at a gauge `eps` it
//! returns a point of the base space, and any two answers at `e1` and `e2`
//! are within `e1 + e2` of each other. A [`UniformMap`] is a function paired
//! with its modulus of continuity, the only kind of function that can be
//! lifted onto approximators.
//!
//! Universally quantified facts about approximators (regularity,
//! equivalence, closeness) are probed over a finite [`GaugeSchedule`].

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::rational::{Gauge, Rational};

type Query<X> = Arc<dyn Fn(&Gauge) -> X + Send + Sync>;

/// A deferred computation from gauges to approximations.
pub struct Approximator<X> {
    query: Query<X>,
}

impl<X> Clone for Approximator<X> {
    fn clone(&self) -> Self {
        Approximator {
            query: Arc::clone(&self.query),
        }
    }
}

impl<X> fmt::Debug for Approximator<X> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("Approximator(..)")
    }
}

impl<X> Approximator<X> {
    pub fn new(query: impl Fn(&Gauge) -> X + Send + Sync + 'static) -> Self {
        Approximator {
            query: Arc::new(query),
        }
    }

    pub fn at(&self, eps: &Gauge) -> X {
        (self.query)(eps)
    }
}

/// A function with an explicit modulus of continuity on some sub-domain of
/// `A`, described by `domain`.
pub struct UniformMap<A, B> {
    modulus: Arc<dyn Fn(&Gauge) -> Gauge + Send + Sync>,
    apply: Arc<dyn Fn(&A) -> B + Send + Sync>,
    domain: Arc<str>,
}

impl<A, B> Clone for UniformMap<A, B> {
    fn clone(&self) -> Self {
        UniformMap {
            modulus: Arc::clone(&self.modulus),
            apply: Arc::clone(&self.apply),
            domain: Arc::clone(&self.domain),
        }
    }
}

impl<A, B> fmt::Debug for UniformMap<A, B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniformMap(on {})", self.domain)
    }
}

impl<A, B> UniformMap<A, B> {
    pub fn new(
        domain: impl Into<Arc<str>>,
        modulus: impl Fn(&Gauge) -> Gauge + Send + Sync + 'static,
        apply: impl Fn(&A) -> B + Send + Sync + 'static,
    ) -> Self {
        UniformMap {
            modulus: Arc::new(modulus),
            apply: Arc::new(apply),
            domain: domain.into(),
        }
    }

    pub fn modulus(&self, eps: &Gauge) -> Gauge {
        (self.modulus)(eps)
    }

    pub fn apply(&self, a: &A) -> B {
        (self.apply)(a)
    }

    pub fn domain(&self) -> &str {
        &self.domain
    }
}

impl<A: Clone + 'static> UniformMap<A, A> {
    pub fn identity() -> Self {
        UniformMap::new("everywhere", Gauge::clone, A::clone)
    }
}

/// Injects a point as the constant approximator.
pub fn unit<X: Clone + Send + Sync + 'static>(a: X) -> Approximator<X> {
    Approximator::new(move |_| a.clone())
}

/// `join(x)(eps) = x(eps/2)(eps/2)`.
pub fn join<X: 'static>(x: Approximator<Approximator<X>>) -> Approximator<X> {
    Approximator::new(move |eps| {
        let half = eps.half();
        x.at(&half).at(&half)
    })
}

/// `map(f, x)(eps) = f(x(mu_f(eps)))`.
pub fn map<A: 'static, B: 'static>(f: &UniformMap<A, B>, x: &Approximator<A>) -> Approximator<B> {
    let f = f.clone();
    let x = x.clone();
    Approximator::new(move |eps| f.apply(&x.at(&f.modulus(eps))))
}

pub fn bind<A: 'static, B: 'static>(
    f: &UniformMap<A, Approximator<B>>,
    x: &Approximator<A>,
) -> Approximator<B> {
    join(map(f, x))
}

/// Applies an approximated uniform map: `ap(f, x)(eps) = map(f(eps/2), x)(eps/2)`.
pub fn ap<A: 'static, B: 'static>(
    f: &Approximator<UniformMap<A, B>>,
    x: &Approximator<A>,
) -> Approximator<B> {
    let f = f.clone();
    let x = x.clone();
    Approximator::new(move |eps| {
        let half = eps.half();
        let g = f.at(&half);
        g.apply(&x.at(&g.modulus(&half)))
    })
}

/// Lifts a curried two-argument map. Evaluated directly rather than as
/// `ap(map(f, x), y)`; the answers agree but this halves the gauge once less.
pub fn map2<A: 'static, B: 'static, C: 'static>(
    f: &UniformMap<A, UniformMap<B, C>>,
    x: &Approximator<A>,
    y: &Approximator<B>,
) -> Approximator<C> {
    let f = f.clone();
    let x = x.clone();
    let y = y.clone();
    Approximator::new(move |eps| {
        let half = eps.half();
        let g = f.apply(&x.at(&f.modulus(&half)));
        g.apply(&y.at(&g.modulus(&half)))
    })
}

/// `g . f`, whose modulus is `mu_f . mu_g`.
pub fn compose_uniform<A: 'static, B: 'static, C: 'static>(
    g: &UniformMap<B, C>,
    f: &UniformMap<A, B>,
) -> UniformMap<A, C> {
    let (g1, f1) = (g.clone(), f.clone());
    let (g2, f2) = (g.clone(), f.clone());
    UniformMap::new(
        format!("{} (then {})", f.domain(), g.domain()),
        move |eps| f1.modulus(&g1.modulus(eps)),
        move |a| g2.apply(&f2.apply(a)),
    )
}

/// A finite, strictly decreasing list of gauges standing in for "every
/// gauge" in regularity and equivalence probes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaugeSchedule {
    gauges: Vec<Gauge>,
}

impl GaugeSchedule {
    pub fn new(gauges: Vec<Gauge>) -> Result<Self> {
        if gauges.is_empty() || gauges.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::InvalidSchedule);
        }
        Ok(GaugeSchedule { gauges })
    }

    /// `1, 1/2, ..., 2^-k`.
    pub fn dyadic(k: u32) -> Self {
        GaugeSchedule {
            gauges: (0..=k).map(Gauge::pow2).collect(),
        }
    }

    pub fn gauges(&self) -> &[Gauge] {
        &self.gauges
    }

    pub fn len(&self) -> usize {
        self.gauges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gauges.is_empty()
    }
}

impl Default for GaugeSchedule {
    fn default() -> Self {
        GaugeSchedule::dyadic(20)
    }
}

fn abs_diff(a: &Rational, b: &Rational) -> Rational {
    Rational::from(a - b).abs()
}

/// Sampled equivalence: `|x(eps) - y(eps)| <= 2 eps` for every scheduled gauge.
pub fn approx_equal_check(
    x: &Approximator<Rational>,
    y: &Approximator<Rational>,
    schedule: &GaugeSchedule,
) -> bool {
    schedule.gauges().iter().all(|eps| {
        let bound = Rational::from(eps.value() * 2u32);
        abs_diff(&x.at(eps), &y.at(eps)) <= bound
    })
}

/// Sampled regularity: `|x(e1) - x(e2)| <= e1 + e2` for every pair of
/// scheduled gauges.
pub fn regularity_check(x: &Approximator<Rational>, schedule: &GaugeSchedule) -> bool {
    let values: Vec<Rational> = schedule.gauges().iter().map(|e| x.at(e)).collect();
    let gauges = schedule.gauges();
    for i in 0..gauges.len() {
        for j in i + 1..gauges.len() {
            let bound = Rational::from(gauges[i].value() + gauges[j].value());
            if abs_diff(&values[i], &values[j]) > bound {
                return false;
            }
        }
    }
    true
}

/// Sampled closeness of two regular functions: `B_radius(x, y)` holds iff
/// `|x(d1) - y(d2)| <= radius + d1 + d2` for all gauges `d1`, `d2`.
pub fn ball_check(
    radius: &Rational,
    x: &Approximator<Rational>,
    y: &Approximator<Rational>,
    schedule: &GaugeSchedule,
) -> bool {
    let xs: Vec<Rational> = schedule.gauges().iter().map(|e| x.at(e)).collect();
    let ys: Vec<Rational> = schedule.gauges().iter().map(|e| y.at(e)).collect();
    let gauges = schedule.gauges();
    for (i, xv) in xs.iter().enumerate() {
        for (j, yv) in ys.iter().enumerate() {
            let bound = Rational::from(radius + gauges[i].value()) + gauges[j].value();
            if abs_diff(xv, yv) > bound {
                return false;
            }
        }
    }
    true
}
