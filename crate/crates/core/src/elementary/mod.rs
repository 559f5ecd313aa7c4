//! Elementary functions on [`CReal`].
//!
//! The rational versions (`exp_rational`, `sin_rational`, ...) sum a power
//! series after argument reduction; the real versions bind those over a
//! compressed real with an explicit modulus of continuity.

mod arctan;
mod derived;
mod exp;
mod ln;
mod series;
mod sqrt;
mod trig;

pub use arctan::{arctan_map, arctan_rational, arctan_real, pi, pi_scaled};
pub use exp::{exp_map, exp_modulus_factor, exp_rational, exp_real};
pub use ln::{ln_map, ln_rational, ln_real, ln_real_with_witness};
pub use series::{alternating_sum, AlternatingSeries};
pub use sqrt::{newton_iterates, sqrt_map, sqrt_rational, sqrt_real};
pub use trig::{cos_map, cos_rational, cos_real, sin_map, sin_rational, sin_real};

use crate::creal::CReal;
use crate::error::{Error, Result};
use crate::rational::{Gauge, Integer, Rational};

/// Arguments of `exp` and `sin` are shrunk below this before their series
/// is summed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesRadius(Rational);

impl SeriesRadius {
    pub fn new(threshold: Rational) -> Result<Self> {
        if threshold > 0 && threshold <= (1, 2) {
            Ok(SeriesRadius(threshold))
        } else {
            Err(Error::InvalidRadius(threshold.to_string()))
        }
    }

    /// `2^-k`, `k >= 1`.
    pub fn pow2(k: u32) -> Result<Self> {
        SeriesRadius::new(Gauge::pow2(k).into_rational())
    }

    pub fn threshold(&self) -> &Rational {
        &self.0
    }
}

impl Default for SeriesRadius {
    fn default() -> Self {
        SeriesRadius(Gauge::pow2(51).into_rational())
    }
}

/// Evaluation settings for the elementary functions: the series radius and
/// the cap on zero-separation searches used by partial functions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Elementary {
    pub radius: SeriesRadius,
    pub max_halvings: Option<u32>,
}

impl Default for Elementary {
    fn default() -> Self {
        Elementary {
            radius: SeriesRadius::default(),
            max_halvings: Some(5000),
        }
    }
}

impl Elementary {
    pub fn new(radius: SeriesRadius, max_halvings: Option<u32>) -> Self {
        Elementary {
            radius,
            max_halvings,
        }
    }

    pub fn exp(&self, x: &CReal) -> CReal {
        exp_real(x, &self.radius)
    }

    pub fn e(&self) -> CReal {
        exp_rational(&Rational::from(1), &self.radius)
    }

    pub fn sin(&self, x: &CReal) -> CReal {
        sin_real(x, &self.radius)
    }

    pub fn cos(&self, x: &CReal) -> CReal {
        cos_real(x, &self.radius)
    }

    pub fn ln(&self, x: &CReal) -> Result<CReal> {
        ln_real(x, self.max_halvings)
    }

    pub fn atan(&self, x: &CReal) -> CReal {
        arctan_real(x)
    }

    pub fn sqrt(&self, x: &CReal) -> CReal {
        sqrt_real(x)
    }

    pub fn recip(&self, x: &CReal) -> Result<CReal> {
        crate::creal::recip(x, self.max_halvings)
    }

    pub fn div(&self, x: &CReal, y: &CReal) -> Result<CReal> {
        crate::creal::div(x, y, self.max_halvings)
    }

    /// `x^n` for any integer `n`; negative powers need `x` apart from zero.
    pub fn powi(&self, x: &CReal, n: &Integer) -> Result<CReal> {
        let magnitude = n
            .clone()
            .abs()
            .to_u32()
            .ok_or_else(|| Error::Domain(format!("exponent {n} is too large")))?;
        let p = crate::creal::power_int(x, magnitude);
        if *n < 0 {
            self.recip(&p)
        } else {
            Ok(p)
        }
    }
}
