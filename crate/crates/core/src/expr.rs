//! Arithmetic expressions over exact rationals and the elementary functions.
//!
//! Precedence, loosest first: `+ -`, then `* /`, then unary minus, then `^`
//! (right-associative, and its exponent may itself start with a minus).
//! Decimal literals are read as exact rationals.

use std::fmt;

use crate::creal::{self, CReal};
use crate::elementary::{self, Elementary};
use crate::error::{Error, Result};
use crate::rational::{parse_rational, Integer, Rational};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("parse error at offset {offset}: {message}")]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Constant {
    Pi,
    E,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Func {
    Neg,
    Abs,
    Sqrt,
    Exp,
    Ln,
    Sin,
    Cos,
    Tan,
    Atan,
    Asin,
    Acos,
    Sinh,
    Cosh,
    Tanh,
    Asinh,
    Acosh,
    Atanh,
}

impl Func {
    pub const ALL: [Func; 17] = [
        Func::Neg,
        Func::Abs,
        Func::Sqrt,
        Func::Exp,
        Func::Ln,
        Func::Sin,
        Func::Cos,
        Func::Tan,
        Func::Atan,
        Func::Asin,
        Func::Acos,
        Func::Sinh,
        Func::Cosh,
        Func::Tanh,
        Func::Asinh,
        Func::Acosh,
        Func::Atanh,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Func::Neg => "neg",
            Func::Abs => "abs",
            Func::Sqrt => "sqrt",
            Func::Exp => "exp",
            Func::Ln => "ln",
            Func::Sin => "sin",
            Func::Cos => "cos",
            Func::Tan => "tan",
            Func::Atan => "atan",
            Func::Asin => "asin",
            Func::Acos => "acos",
            Func::Sinh => "sinh",
            Func::Cosh => "cosh",
            Func::Tanh => "tanh",
            Func::Asinh => "asinh",
            Func::Acosh => "acosh",
            Func::Atanh => "atanh",
        }
    }

    fn from_name(name: &str) -> Option<Func> {
        Func::ALL.into_iter().find(|f| f.name() == name)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
    Pow,
}

impl BinOp {
    fn symbol(self) -> char {
        match self {
            BinOp::Add => '+',
            BinOp::Sub => '-',
            BinOp::Mul => '*',
            BinOp::Div => '/',
            BinOp::Pow => '^',
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Num(Rational),
    Const(Constant),
    Call(Func, Box<Expr>),
    Bin(BinOp, Box<Expr>, Box<Expr>),
}

impl Expr {
    pub fn num(n: i64) -> Expr {
        Expr::Num(Rational::from(n))
    }

    pub fn call(f: Func, arg: Expr) -> Expr {
        Expr::Call(f, Box::new(arg))
    }

    pub fn bin(op: BinOp, lhs: Expr, rhs: Expr) -> Expr {
        Expr::Bin(op, Box::new(lhs), Box::new(rhs))
    }

    /// The exact value of a subexpression built only from literals and
    /// rational operations, if it has one.
    pub fn constant_value(&self) -> Option<Rational> {
        match self {
            Expr::Num(q) => Some(q.clone()),
            Expr::Const(_) => None,
            Expr::Call(Func::Neg, e) => e.constant_value().map(|q| -q),
            Expr::Call(Func::Abs, e) => e.constant_value().map(Rational::abs),
            Expr::Call(..) => None,
            Expr::Bin(op, l, r) => {
                let (a, b) = (l.constant_value()?, r.constant_value()?);
                match op {
                    BinOp::Add => Some(a + b),
                    BinOp::Sub => Some(a - b),
                    BinOp::Mul => Some(a * b),
                    BinOp::Div if b != 0 => Some(a / b),
                    BinOp::Div => None,
                    BinOp::Pow => {
                        if *b.denom() != 1 {
                            return None;
                        }
                        let n = b.numer().to_i32().filter(|n| n.unsigned_abs() <= 4096)?;
                        if n < 0 && a == 0 {
                            return None;
                        }
                        let p = rug::ops::Pow::pow(a, n.unsigned_abs());
                        Some(if n < 0 { p.recip() } else { p })
                    }
                }
            }
        }
    }
}

fn write_rational(q: &Rational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    // Terminating decimals print as decimals, which parse back to the same
    // value; anything else prints as a parenthesised quotient.
    let mut den = q.denom().clone();
    let twos = den.find_one(0).unwrap_or(0);
    den >>= twos;
    let mut fives = 0u32;
    while den.is_divisible_u(5) {
        den /= 5u32;
        fives += 1;
    }
    if den != 1 {
        return write!(f, "({}/{})", q.numer(), q.denom());
    }
    let places = twos.max(fives);
    let scaled = (q.numer() * Integer::from(Integer::u_pow_u(10, places))) / q.denom();
    let text = scaled.clone().abs().to_string();
    let sign = if scaled < 0 { "-" } else { "" };
    if places == 0 {
        return write!(f, "{sign}{text}");
    }
    let places = places as usize;
    let padded = format!("{text:0>width$}", width = places + 1);
    let (int_part, frac_part) = padded.split_at(padded.len() - places);
    write!(f, "{sign}{int_part}.{frac_part}")
}

/// Fully parenthesised; parsing the output yields the same tree.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Num(q) => write_rational(q, f),
            Expr::Const(Constant::Pi) => f.write_str("pi"),
            Expr::Const(Constant::E) => f.write_str("e"),
            Expr::Call(Func::Neg, e) => write!(f, "(-{e})"),
            Expr::Call(func, e) => write!(f, "{}({e})", func.name()),
            Expr::Bin(op, l, r) => write!(f, "({l} {} {r})", op.symbol()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Token {
    Number(String),
    Ident(String),
    Op(char),
    LParen,
    RParen,
    End,
}

fn tokenize(source: &str) -> Result<Vec<(usize, Token)>, ParseError> {
    let bytes = source.as_bytes();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_digit() || c == b'.' {
            while i < bytes.len() && (bytes[i].is_ascii_digit() || bytes[i] == b'.') {
                i += 1;
            }
            tokens.push((start, Token::Number(source[start..i].to_string())));
            continue;
        }
        if c.is_ascii_alphabetic() || c == b'_' {
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            tokens.push((start, Token::Ident(source[start..i].to_string())));
            continue;
        }
        let token = match c {
            b'+' | b'-' | b'*' | b'/' | b'^' => Token::Op(c as char),
            b'(' => Token::LParen,
            b')' => Token::RParen,
            _ => {
                let ch = source[start..].chars().next().expect("in bounds");
                return Err(ParseError {
                    offset: start,
                    message: format!("unexpected character {ch:?}"),
                });
            }
        };
        tokens.push((start, token));
        i += 1;
    }
    tokens.push((source.len(), Token::End));
    Ok(tokens)
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos].1
    }

    fn offset(&self) -> usize {
        self.tokens[self.pos].0
    }

    fn advance(&mut self) -> Token {
        let t = self.tokens[self.pos].1.clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            offset: self.offset(),
            message: message.into(),
        })
    }

    fn describe(&self) -> String {
        match self.peek() {
            Token::Number(n) => format!("number {n}"),
            Token::Ident(id) => format!("identifier {id:?}"),
            Token::Op(c) => format!("{c:?}"),
            Token::LParen => "'('".into(),
            Token::RParen => "')'".into(),
            Token::End => "end of input".into(),
        }
    }

    fn additive(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.multiplicative()?;
        loop {
            let op = match self.peek() {
                Token::Op('+') => BinOp::Add,
                Token::Op('-') => BinOp::Sub,
                _ => return Ok(lhs),
            };
            self.advance();
            lhs = Expr::bin(op, lhs, self.multiplicative()?);
        }
    }

    fn multiplicative(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            let op = match self.peek() {
                Token::Op('*') => BinOp::Mul,
                Token::Op('/') => BinOp::Div,
                _ => return Ok(lhs),
            };
            self.advance();
            lhs = Expr::bin(op, lhs, self.unary()?);
        }
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if *self.peek() == Token::Op('-') {
            self.advance();
            return Ok(Expr::call(Func::Neg, self.unary()?));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if *self.peek() == Token::Op('^') {
            self.advance();
            return Ok(Expr::bin(BinOp::Pow, base, self.unary()?));
        }
        Ok(base)
    }

    fn expect_close(&mut self) -> Result<(), ParseError> {
        if *self.peek() == Token::RParen {
            self.advance();
            Ok(())
        } else {
            self.error(format!("expected ')', found {}", self.describe()))
        }
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let offset = self.offset();
        match self.peek().clone() {
            Token::Number(text) => {
                let value = parse_rational(&text).ok_or_else(|| ParseError {
                    offset,
                    message: format!("malformed number {text:?}"),
                })?;
                self.advance();
                Ok(Expr::Num(value))
            }
            Token::Ident(name) => {
                self.advance();
                match name.as_str() {
                    "pi" => return Ok(Expr::Const(Constant::Pi)),
                    "e" => return Ok(Expr::Const(Constant::E)),
                    _ => {}
                }
                let Some(func) = Func::from_name(&name) else {
                    return Err(ParseError {
                        offset,
                        message: format!("unknown identifier {name:?}"),
                    });
                };
                if *self.peek() != Token::LParen {
                    return self.error(format!("expected '(' after {name}"));
                }
                self.advance();
                let arg = self.additive()?;
                self.expect_close()?;
                Ok(Expr::call(func, arg))
            }
            Token::LParen => {
                self.advance();
                let inner = self.additive()?;
                self.expect_close()?;
                Ok(inner)
            }
            _ => self.error(format!("expected an operand, found {}", self.describe())),
        }
    }
}

pub fn parse(source: &str) -> Result<Expr, ParseError> {
    let mut parser = Parser {
        tokens: tokenize(source)?,
        pos: 0,
    };
    let expr = parser.additive()?;
    if *parser.peek() != Token::End {
        return parser.error(format!("unexpected {}", parser.describe()));
    }
    Ok(expr)
}

fn domain(message: impl Into<String>) -> Error {
    Error::Domain(message.into())
}

/// Rejects literal arguments that lie outside a function's domain.
fn check_constant_domain(func: Func, arg: &Expr) -> Result<()> {
    let Some(c) = arg.constant_value() else {
        return Ok(());
    };
    let one = Rational::from(1);
    let outside = match func {
        Func::Sqrt => c < 0,
        Func::Ln => c <= 0,
        Func::Asin | Func::Acos => Rational::from(c.abs_ref()) > one,
        Func::Atanh => Rational::from(c.abs_ref()) >= one,
        Func::Acosh => c < one,
        _ => false,
    };
    if outside {
        return Err(domain(format!("{}({c}) is undefined", func.name())));
    }
    Ok(())
}

pub fn evaluate(expr: &Expr, ctx: &Elementary) -> Result<CReal> {
    if let Some(c) = expr.constant_value() {
        return Ok(CReal::from_rational(c));
    }
    match expr {
        Expr::Num(q) => Ok(CReal::from_rational(q.clone())),
        Expr::Const(Constant::Pi) => Ok(elementary::pi()),
        Expr::Const(Constant::E) => Ok(ctx.e()),
        Expr::Call(func, arg) => {
            check_constant_domain(*func, arg)?;
            if let Some(special) = exact_endpoint(*func, arg) {
                return Ok(special);
            }
            let x = evaluate(arg, ctx)?;
            apply(*func, &x, ctx)
        }
        Expr::Bin(op, lhs, rhs) => {
            let x = evaluate(lhs, ctx)?;
            if *op == BinOp::Pow {
                if let Some(n) = rhs.constant_value().filter(|n| *n.denom() == 1) {
                    return ctx.powi(&x, n.numer());
                }
                if let Some(base) = lhs.constant_value() {
                    if base <= 0 {
                        return Err(domain(format!("{base} raised to a non-integer power")));
                    }
                }
            }
            let y = evaluate(rhs, ctx)?;
            match op {
                BinOp::Add => Ok(creal::add(&x, &y)),
                BinOp::Sub => Ok(creal::sub(&x, &y)),
                BinOp::Mul => Ok(creal::mult(&x, &y)),
                BinOp::Div => ctx.div(&x, &y),
                BinOp::Pow => ctx.pow(&x, &y),
            }
        }
    }
}

/// `asin`/`acos` at exactly `-1` or `1`, where the defining formula would
/// divide by zero.
fn exact_endpoint(func: Func, arg: &Expr) -> Option<CReal> {
    if !matches!(func, Func::Asin | Func::Acos) {
        return None;
    }
    let c = arg.constant_value()?;
    let sign: i64 = if c == 1 {
        1
    } else if c == -1 {
        -1
    } else {
        return None;
    };
    let multiple = match (func, sign) {
        (Func::Asin, s) => Rational::from((s, 2)),
        (_, 1) => Rational::new(),
        _ => Rational::from(1),
    };
    Some(elementary::pi_scaled(&multiple))
}

fn apply(func: Func, x: &CReal, ctx: &Elementary) -> Result<CReal> {
    Ok(match func {
        Func::Neg => creal::negate(x),
        Func::Abs => creal::abs(x),
        Func::Sqrt => ctx.sqrt(x),
        Func::Exp => ctx.exp(x),
        Func::Ln => ctx.ln(x)?,
        Func::Sin => ctx.sin(x),
        Func::Cos => ctx.cos(x),
        Func::Tan => ctx.tan(x)?,
        Func::Atan => ctx.atan(x),
        Func::Asin => ctx.asin(x)?,
        Func::Acos => ctx.acos(x)?,
        Func::Sinh => ctx.sinh(x),
        Func::Cosh => ctx.cosh(x),
        Func::Tanh => ctx.tanh(x),
        Func::Asinh => ctx.asinh(x)?,
        Func::Acosh => ctx.acosh(x)?,
        Func::Atanh => ctx.atanh(x)?,
    })
}

pub fn parse_and_evaluate(source: &str, ctx: &Elementary) -> Result<CReal> {
    evaluate(&parse(source)?, ctx)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digits::format_digits;
    use proptest::prelude::*;

    fn num(n: i64) -> Expr {
        Expr::num(n)
    }

    #[test]
    fn precedence() {
        assert_eq!(
            parse("1+2*3").unwrap(),
            Expr::bin(BinOp::Add, num(1), Expr::bin(BinOp::Mul, num(2), num(3)))
        );
        assert_eq!(
            parse("sin(pi/6)").unwrap(),
            Expr::call(
                Func::Sin,
                Expr::bin(BinOp::Div, Expr::Const(Constant::Pi), num(6))
            )
        );
        assert_eq!(
            parse("-2^2").unwrap(),
            Expr::call(Func::Neg, Expr::bin(BinOp::Pow, num(2), num(2)))
        );
        assert_eq!(
            parse("2^3^2").unwrap(),
            Expr::bin(BinOp::Pow, num(2), Expr::bin(BinOp::Pow, num(3), num(2)))
        );
        assert_eq!(
            parse("2^-3").unwrap(),
            Expr::bin(BinOp::Pow, num(2), Expr::call(Func::Neg, num(3)))
        );
        assert_eq!(
            parse("8-3-2").unwrap(),
            Expr::bin(BinOp::Sub, Expr::bin(BinOp::Sub, num(8), num(3)), num(2))
        );
        assert_eq!(
            parse("3.14").unwrap(),
            Expr::Num(Rational::from((314, 100)))
        );
    }

    #[test]
    fn errors_carry_offsets() {
        let err = parse("2^-(3").unwrap_err();
        assert_eq!(err.offset, 5);
        assert_eq!(parse("1 + foo(2)").unwrap_err().offset, 4);
        assert!(parse("1 + foo(2)")
            .unwrap_err()
            .message
            .contains("unknown identifier"));
        assert_eq!(parse("1 $ 2").unwrap_err().offset, 2);
        assert_eq!(parse("1 2").unwrap_err().offset, 2);
        assert_eq!(parse("").unwrap_err().offset, 0);
        assert_eq!(parse("sin 2").unwrap_err().offset, 4);
        assert_eq!(parse("1.2.3").unwrap_err().offset, 0);
    }

    #[test]
    fn evaluates_to_digits() {
        let ctx = Elementary::default();
        let run = |s: &str, n| format_digits(&parse_and_evaluate(s, &ctx).unwrap(), n).to_string();
        assert_eq!(run("1/3", 5), "0.33333");
        assert_eq!(run("sin(pi/6)", 10), "0.5000000000");
        assert_eq!(run("2^10", 0), "1024");
        assert_eq!(run("2^-2", 3), "0.250");
        assert_eq!(run("asin(1)", 5), run("pi/2", 5));
        assert_eq!(run("acos(-1)", 5), "3.14159");
    }

    #[test]
    fn evaluation_errors() {
        let ctx = Elementary::new(Default::default(), Some(40));
        assert!(matches!(
            parse_and_evaluate("1/0", &ctx),
            Err(Error::CannotSeparate { halvings: 40 })
        ));
        assert!(matches!(
            parse_and_evaluate("ln(-1)", &ctx),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            parse_and_evaluate("sqrt(-2)", &ctx),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            parse_and_evaluate("atanh(1)", &ctx),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            parse_and_evaluate("(-2)^(1/2)", &ctx),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            parse_and_evaluate("ln(0-pi)", &ctx),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            parse_and_evaluate("1 +", &ctx),
            Err(Error::Parse(_))
        ));
    }

    #[test]
    fn prints_terminating_decimals() {
        assert_eq!(Expr::Num(Rational::from((1, 4))).to_string(), "0.25");
        assert_eq!(Expr::Num(Rational::from((-3, 50))).to_string(), "-0.06");
        assert_eq!(Expr::Num(Rational::from(12)).to_string(), "12");
        assert_eq!(Expr::Num(Rational::from((1, 3))).to_string(), "(1/3)");
    }

    fn literal() -> impl Strategy<Value = Expr> {
        (0i64..100_000, 0u32..4)
            .prop_map(|(n, places)| Expr::Num(Rational::from((n, 10i64.pow(places)))))
    }

    fn expr_tree() -> impl Strategy<Value = Expr> {
        let leaf = prop_oneof![
            literal(),
            Just(Expr::Const(Constant::Pi)),
            Just(Expr::Const(Constant::E)),
        ];
        leaf.prop_recursive(5, 40, 2, |inner| {
            prop_oneof![
                (0..Func::ALL.len(), inner.clone()).prop_map(|(i, e)| Expr::call(Func::ALL[i], e)),
                (
                    prop_oneof![
                        Just(BinOp::Add),
                        Just(BinOp::Sub),
                        Just(BinOp::Mul),
                        Just(BinOp::Div),
                        Just(BinOp::Pow)
                    ],
                    inner.clone(),
                    inner
                )
                    .prop_map(|(op, l, r)| Expr::bin(op, l, r)),
            ]
        })
    }

    proptest! {
        #[test]
        fn print_then_parse_round_trips(e in expr_tree()) {
            prop_assert_eq!(parse(&e.to_string()).unwrap(), e);
        }
    }
}
