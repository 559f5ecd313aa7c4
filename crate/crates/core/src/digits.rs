//! Decimal rendering with an error guarantee.

use std::fmt;

use crate::creal::{self, CReal};
use crate::rational::{Integer, Rational};

/// `N` fractional digits of a real, within `10^-N` of its true value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DigitOutput {
    mantissa: Integer,
    digits: usize,
}

impl DigitOutput {
    pub fn is_negative(&self) -> bool {
        self.mantissa < 0
    }

    /// The printed value times `10^N`.
    pub fn mantissa(&self) -> &Integer {
        &self.mantissa
    }

    pub fn digits(&self) -> usize {
        self.digits
    }

    pub fn integer_part(&self) -> String {
        let text = self.mantissa.clone().abs().to_string();
        if text.len() > self.digits {
            text[..text.len() - self.digits].to_string()
        } else {
            "0".to_string()
        }
    }

    pub fn fraction(&self) -> String {
        let text = self.mantissa.clone().abs().to_string();
        if text.len() >= self.digits {
            text[text.len() - self.digits..].to_string()
        } else {
            format!("{text:0>width$}", width = self.digits)
        }
    }

    pub fn value(&self) -> Rational {
        let scale = Integer::from(Integer::u_pow_u(10, self.digits as u32));
        Rational::from((self.mantissa.clone(), scale))
    }

    /// Mantissa form, `31416x10^-4`.
    pub fn raw(&self) -> String {
        format!("{}x10^-{}", self.mantissa, self.digits)
    }
}

impl fmt::Display for DigitOutput {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_negative() {
            f.write_str("-")?;
        }
        f.write_str(&self.integer_part())?;
        if self.digits > 0 {
            write!(f, ".{}", self.fraction())?;
        }
        Ok(())
    }
}

/// The memoised integer approximation of `10^N x`, which is within one of
/// `10^N x`.
pub fn format_digits(x: &CReal, digits: usize) -> DigitOutput {
    let scale = Integer::from(Integer::u_pow_u(10, digits as u32));
    let scaled = creal::scale(Rational::from(scale), x);
    DigitOutput {
        mantissa: scaled.int_approx().clone(),
        digits,
    }
}
