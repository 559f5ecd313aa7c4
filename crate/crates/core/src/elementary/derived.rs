//! Functions defined by formula from exp, ln, sin, cos, arctan and sqrt.
//! Anything that divides or takes a logarithm searches for an apartness
//! witness, capped by `Elementary::max_halvings`.

use super::{arctan_real, pi_scaled, Elementary};
use crate::creal::{self, ApartnessWitness, CReal};
use crate::error::Result;
use crate::rational::Rational;

fn half() -> Rational {
    Rational::from((1, 2))
}

impl Elementary {
    pub fn tan(&self, x: &CReal) -> Result<CReal> {
        self.div(&self.sin(x), &self.cos(x))
    }

    pub fn sinh(&self, x: &CReal) -> CReal {
        let diff = creal::sub(&self.exp(x), &self.exp(&creal::negate(x)));
        creal::scale(half(), &diff)
    }

    pub fn cosh(&self, x: &CReal) -> CReal {
        let sum = creal::add(&self.exp(x), &self.exp(&creal::negate(x)));
        creal::scale(half(), &sum)
    }

    pub fn tanh(&self, x: &CReal) -> CReal {
        // cosh >= 1
        let one = ApartnessWitness::new_unchecked(Rational::from(1));
        creal::mult(
            &self.sinh(x),
            &creal::recip_with_witness(&self.cosh(x), &one),
        )
    }

    /// `x^y = exp(y ln x)` for `x > 0`.
    pub fn pow(&self, x: &CReal, y: &CReal) -> Result<CReal> {
        Ok(self.exp(&creal::mult(y, &self.ln(x)?)))
    }

    /// `arctan(x / sqrt(1 - x^2))` for `|x| < 1`.
    pub fn asin(&self, x: &CReal) -> Result<CReal> {
        let one_minus_sq =
            creal::translate(Rational::from(1), &creal::negate(&creal::power_int(x, 2)));
        Ok(arctan_real(&self.div(x, &self.sqrt(&one_minus_sq))?))
    }

    pub fn acos(&self, x: &CReal) -> Result<CReal> {
        Ok(creal::sub(&pi_scaled(&half()), &self.asin(x)?))
    }

    /// `ln(x + sqrt(1 + x^2))`.
    pub fn asinh(&self, x: &CReal) -> Result<CReal> {
        let root = self.sqrt(&creal::translate(
            Rational::from(1),
            &creal::power_int(x, 2),
        ));
        self.ln(&creal::add(x, &root))
    }

    /// `ln(x + sqrt(x^2 - 1))` for `x >= 1`.
    pub fn acosh(&self, x: &CReal) -> Result<CReal> {
        let root = self.sqrt(&creal::translate(
            Rational::from(-1),
            &creal::power_int(x, 2),
        ));
        self.ln(&creal::add(x, &root))
    }

    /// `ln((1 + x)/(1 - x)) / 2` for `|x| < 1`.
    pub fn atanh(&self, x: &CReal) -> Result<CReal> {
        let num = creal::translate(Rational::from(1), x);
        let den = creal::translate(Rational::from(1), &creal::negate(x));
        Ok(creal::scale(half(), &self.ln(&self.div(&num, &den)?)?))
    }
}
