//! Tiny expression grammar for conformal factors and perturbations.
//!
//! Configs describe `u` and `f` as closed-form expressions instead of
//! shipping code. The grammar is deliberately small:
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := factor ('*' factor)*
//! factor  := '-' factor | primary
//! primary := NUMBER | 'pi' | 'x1'..'x4'
//!          | ('cos' | 'sin' | 'exp') '(' expr ')'
//!          | '(' expr ')'
//! ```
//!
//! so `1 + 0.2*cos(2*pi*x1)` is a typical conformal factor. Parse errors
//! carry the byte offset of the offending token.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("parse error at byte {position}: {message}")]
pub struct ExprError {
    pub position: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Const(f64),
    /// Coordinate x₁..x₄ as index 0..3.
    Var(usize),
    Cos(Box<Expr>),
    Sin(Box<Expr>),
    Exp(Box<Expr>),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
}

impl Expr {
    pub fn parse(input: &str) -> Result<Self, ExprError> {
        let mut parser = Parser {
            bytes: input.as_bytes(),
            pos: 0,
        };
        let expr = parser.expr()?;
        parser.skip_ws();
        if parser.pos != parser.bytes.len() {
            return Err(parser.error("unexpected trailing input"));
        }
        Ok(expr)
    }

    pub fn eval(&self, x: [f64; 4]) -> f64 {
        match self {
            Expr::Const(c) => *c,
            Expr::Var(i) => x[*i],
            Expr::Cos(e) => e.eval(x).cos(),
            Expr::Sin(e) => e.eval(x).sin(),
            Expr::Exp(e) => e.eval(x).exp(),
            Expr::Neg(e) => -e.eval(x),
            Expr::Add(a, b) => a.eval(x) + b.eval(x),
            Expr::Sub(a, b) => a.eval(x) - b.eval(x),
            Expr::Mul(a, b) => a.eval(x) * b.eval(x),
        }
    }

    /// Samples the expression on the `N⁴` lattice in storage order.
    pub fn sample(&self, n: usize) -> Vec<f64> {
        crate::confgrid::sample(n, |x| self.eval(x))
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Const(c) => write!(f, "{c}"),
            Expr::Var(i) => write!(f, "x{}", i + 1),
            Expr::Cos(e) => write!(f, "cos({e})"),
            Expr::Sin(e) => write!(f, "sin({e})"),
            Expr::Exp(e) => write!(f, "exp({e})"),
            Expr::Neg(e) => write!(f, "-({e})"),
            Expr::Add(a, b) => write!(f, "({a} + {b})"),
            Expr::Sub(a, b) => write!(f, "({a} - {b})"),
            Expr::Mul(a, b) => write!(f, "({a} * {b})"),
        }
    }
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn error(&self, message: impl Into<String>) -> ExprError {
        ExprError {
            position: self.pos,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, byte: u8) -> bool {
        if self.peek() == Some(byte) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, byte: u8) -> Result<(), ExprError> {
        if self.eat(byte) {
            Ok(())
        } else {
            Err(self.error(format!("expected '{}'", byte as char)))
        }
    }

    fn expr(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.term()?;
        loop {
            if self.eat(b'+') {
                let rhs = self.term()?;
                lhs = Expr::Add(Box::new(lhs), Box::new(rhs));
            } else if self.eat(b'-') {
                let rhs = self.term()?;
                lhs = Expr::Sub(Box::new(lhs), Box::new(rhs));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.factor()?;
        while self.eat(b'*') {
            let rhs = self.factor()?;
            lhs = Expr::Mul(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<Expr, ExprError> {
        if self.eat(b'-') {
            return Ok(Expr::Neg(Box::new(self.factor()?)));
        }
        self.primary()
    }

    fn primary(&mut self) -> Result<Expr, ExprError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                self.expect(b')')?;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() || c == b'.' => self.number(),
            Some(c) if c.is_ascii_alphabetic() => self.identifier(),
            Some(c) => Err(self.error(format!("unexpected character '{}'", c as char))),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn number(&mut self) -> Result<Expr, ExprError> {
        let start = self.pos;
        while self
            .bytes
            .get(self.pos)
            .is_some_and(|b| b.is_ascii_digit() || *b == b'.')
        {
            self.pos += 1;
        }
        // Scientific notation tail.
        if self
            .bytes
            .get(self.pos)
            .is_some_and(|b| *b == b'e' || *b == b'E')
        {
            let mark = self.pos;
            self.pos += 1;
            if self
                .bytes
                .get(self.pos)
                .is_some_and(|b| *b == b'+' || *b == b'-')
            {
                self.pos += 1;
            }
            if self.bytes.get(self.pos).is_some_and(|b| b.is_ascii_digit()) {
                while self.bytes.get(self.pos).is_some_and(|b| b.is_ascii_digit()) {
                    self.pos += 1;
                }
            } else {
                self.pos = mark;
            }
        }
        let text = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        text.parse::<f64>().map(Expr::Const).map_err(|_| ExprError {
            position: start,
            message: format!("invalid number '{text}'"),
        })
    }

    fn identifier(&mut self) -> Result<Expr, ExprError> {
        let start = self.pos;
        while self
            .bytes
            .get(self.pos)
            .is_some_and(|b| b.is_ascii_alphanumeric())
        {
            self.pos += 1;
        }
        let name = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        match name {
            "pi" => Ok(Expr::Const(std::f64::consts::PI)),
            "x1" => Ok(Expr::Var(0)),
            "x2" => Ok(Expr::Var(1)),
            "x3" => Ok(Expr::Var(2)),
            "x4" => Ok(Expr::Var(3)),
            "cos" | "sin" | "exp" => {
                self.expect(b'(')?;
                let inner = Box::new(self.expr()?);
                self.expect(b')')?;
                Ok(match name {
                    "cos" => Expr::Cos(inner),
                    "sin" => Expr::Sin(inner),
                    _ => Expr::Exp(inner),
                })
            }
            "" => Err(ExprError {
                position: start,
                message: "expected identifier".into(),
            }),
            other => Err(ExprError {
                position: start,
                message: format!(
                    "unknown identifier '{other}' (expected pi, x1..x4, cos, sin, exp)"
                ),
            }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn parses_and_evaluates_typical_factors() {
        let e = Expr::parse("1 + 0.2*cos(2*pi*x1)").unwrap();
        let v = e.eval([0.25, 0.0, 0.0, 0.0]);
        assert!((v - (1.0 + 0.2 * (PI / 2.0).cos())).abs() < 1e-15);
        let v = e.eval([0.0; 4]);
        assert!((v - 1.2).abs() < 1e-15);

        let e = Expr::parse("exp(0.3*sin(2*pi*x2))").unwrap();
        let v = e.eval([0.0, 0.25, 0.0, 0.0]);
        assert!((v - (0.3f64).exp()) < 1e-15);

        let e = Expr::parse("-1").unwrap();
        assert_eq!(e.eval([0.0; 4]), -1.0);

        let e = Expr::parse("2*(x3 - x4) + 1e-2").unwrap();
        assert!((e.eval([0.0, 0.0, 0.7, 0.2]) - 1.01).abs() < 1e-15);
    }

    #[test]
    fn error_positions() {
        let err = Expr::parse("1 + cos(2*pi*x1").unwrap_err();
        assert_eq!(err.position, 15);
        assert!(err.message.contains("')'"));

        let err = Expr::parse("1 + tan(x1)").unwrap_err();
        assert_eq!(err.position, 4);
        assert!(err.message.contains("unknown identifier 'tan'"));

        let err = Expr::parse("x5").unwrap_err();
        assert!(err.message.contains("x5"));

        let err = Expr::parse("1 + ").unwrap_err();
        assert!(err.message.contains("end of input"));

        let err = Expr::parse("1 2").unwrap_err();
        assert!(err.message.contains("trailing"));
    }

    #[test]
    fn sampling_matches_grid_order() {
        let e = Expr::parse("x4").unwrap();
        let values = e.sample(2);
        assert_eq!(
            values,
            vec![0.0, 0.5, 0.0, 0.5, 0.0, 0.5, 0.0, 0.5, 0.0, 0.5, 0.0, 0.5, 0.0, 0.5, 0.0, 0.5]
        );
    }
}
