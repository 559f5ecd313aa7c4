//! Benchmark workloads: cosines of Fibonacci ratios, plus a quick smoke run.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use sha2::{Digest, Sha256};

use crate::creal::CReal;
use crate::digits::{format_digits, DigitOutput};
use crate::elementary::{self, Elementary};
use crate::rational::{Integer, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Table1,
    Smoke,
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "table1" => Ok(Suite::Table1),
            "smoke" => Ok(Suite::Smoke),
            other => Err(format!(
                "unknown suite {other:?} (expected table1 or smoke)"
            )),
        }
    }
}

/// `F_0 = 0, F_1 = 1`.
pub fn fibonacci(n: u32) -> Integer {
    let (mut a, mut b) = (Integer::new(), Integer::from(1));
    for _ in 0..n {
        let next = Integer::from(&a + &b);
        a = std::mem::replace(&mut b, next);
    }
    a
}

/// `F_n / F_(n+1)`.
pub fn fibonacci_ratio(n: u32) -> Rational {
    Rational::from((fibonacci(n), fibonacci(n + 1)))
}

#[derive(Clone, Debug)]
pub struct ProblemReport {
    pub name: String,
    pub output: DigitOutput,
    pub elapsed: Duration,
}

impl ProblemReport {
    /// Hex SHA-256 of the rendered digit string.
    pub fn checksum(&self) -> String {
        hex::encode(Sha256::digest(self.output.to_string().as_bytes()))
    }
}

impl fmt::Display for ProblemReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}\t{} digits\t{:.3} s\tsha256 {}",
            self.name,
            self.output.digits(),
            self.elapsed.as_secs_f64(),
            self.checksum()
        )
    }
}

fn problems(suite: Suite, ctx: &Elementary) -> Vec<(String, CReal)> {
    let cos_fib = |n: u32| {
        (
            format!("cos(F{n}/F{})", n + 1),
            ctx.cos(&CReal::from_rational(fibonacci_ratio(n))),
        )
    };
    match suite {
        Suite::Table1 => vec![cos_fib(4), cos_fib(2394)],
        Suite::Smoke => vec![("pi".to_string(), elementary::pi()), cos_fib(4)],
    }
}

/// Runs the problems one after another, timing each digit expansion.
pub fn run_benchmarks(suite: Suite, digits: usize, ctx: &Elementary) -> Vec<ProblemReport> {
    problems(suite, ctx)
        .into_iter()
        .map(|(name, x)| {
            let start = Instant::now();
            let output = format_digits(&x, digits);
            ProblemReport {
                name,
                output,
                elapsed: start.elapsed(),
            }
        })
        .collect()
}
