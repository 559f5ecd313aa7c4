//! Exact real arithmetic built on the completion of the rationals.
//!
//! A real number is a regular function from error bounds to rationals
//! ([`creal::CReal`]); operations are uniformly continuous maps on the
//! rationals lifted through the completion monad ([`completion`]).

pub mod bench;
pub mod completion;
pub mod creal;
pub mod digits;
pub mod elementary;
pub mod error;
pub mod expr;
pub mod rational;
