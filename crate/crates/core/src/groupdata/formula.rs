//! Exponent formulas for cocycles given in closed form.
//!
//! A formula is a product of factors separated by `*` at the top level:
//!
//! ```text
//! minus_one_pow(k1*j2*i3)
//! zeta(4, i1*div(j1 + k1, 4)) * minus_one_pow(i2*j2*k2)
//! ```
//!
//! `minus_one_pow(e)` is `(−1)^e` and `zeta(N, e)` is `ζ_N^e`. Inside an
//! exponent, `iL`, `jL`, `kL` are the `L`-th exponents (one-based) of the
//! first, second and third argument; integers, `+ - *`, parentheses,
//! `div(a, m)` (floor division) and `mod(a, m)` (non-negative remainder) are
//! allowed.

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub(crate) enum Expr {
    Const(i64),
    Var { arg: usize, slot: usize },
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Div(Box<Expr>, i64),
    Mod(Box<Expr>, i64),
}

impl Expr {
    pub(crate) fn eval(&self, args: [&[u32]; 3]) -> i64 {
        match self {
            Expr::Const(c) => *c,
            Expr::Var { arg, slot } => args[*arg][*slot] as i64,
            Expr::Add(a, b) => a.eval(args) + b.eval(args),
            Expr::Sub(a, b) => a.eval(args) - b.eval(args),
            Expr::Mul(a, b) => a.eval(args) * b.eval(args),
            Expr::Neg(a) => -a.eval(args),
            Expr::Div(a, m) => a.eval(args).div_euclid(*m),
            Expr::Mod(a, m) => a.eval(args).rem_euclid(*m),
        }
    }

    fn max_slot(&self) -> Option<usize> {
        match self {
            Expr::Const(_) => None,
            Expr::Var { slot, .. } => Some(*slot),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) => a.max_slot().max(b.max_slot()),
            Expr::Neg(a) | Expr::Div(a, _) | Expr::Mod(a, _) => a.max_slot(),
        }
    }
}

/// One factor `ζ_order^expr`.
#[derive(Debug, Clone, PartialEq)]
pub(crate) struct Factor {
    pub order: u32,
    pub expr: Expr,
}

/// Parses a full formula; `rank` bounds the admissible variable indices.
pub(crate) fn parse_formula(text: &str, rank: usize) -> Result<Vec<Factor>> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    let mut factors = Vec::new();
    loop {
        p.skip_ws();
        let name = p.ident();
        let factor = match name.as_str() {
            "minus_one_pow" => {
                p.expect(b'(')?;
                let e = p.expr()?;
                p.expect(b')')?;
                Factor { order: 2, expr: e }
            }
            "zeta" => {
                p.expect(b'(')?;
                let n = p.integer()?;
                if n <= 0 || n > u32::MAX as i64 {
                    return Err(p.error("root order must be a positive integer"));
                }
                p.expect(b',')?;
                let e = p.expr()?;
                p.expect(b')')?;
                Factor { order: n as u32, expr: e }
            }
            "" => return Err(p.error("expected minus_one_pow(...) or zeta(N, ...)")),
            other => return Err(p.error(&format!("unknown factor {other:?}"))),
        };
        if let Some(slot) = factor.expr.max_slot() {
            if slot >= rank {
                return Err(Error::Parse(format!(
                    "formula {text:?} refers to exponent {} but the group has rank {rank}",
                    slot + 1
                )));
            }
        }
        factors.push(factor);
        p.skip_ws();
        if p.eat(b'*') {
            continue;
        }
        if p.pos == p.src.len() {
            return Ok(factors);
        }
        return Err(p.error("trailing input"));
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> Error {
        Error::Parse(format!(
            "cocycle formula {:?}, offset {}: {msg}",
            String::from_utf8_lossy(self.src),
            self.pos
        ))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&format!("expected {:?}", c as char)))
        }
    }

    fn ident(&mut self) -> String {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_') {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    fn integer(&mut self) -> Result<i64> {
        self.skip_ws();
        let neg = self.eat(b'-');
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).unwrap_or("");
        let v: i64 = digits.parse().map_err(|_| self.error("expected an integer"))?;
        Ok(if neg { -v } else { v })
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            if self.eat(b'+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat(b'-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        while self.eat(b'*') {
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.eat(b'-') {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(b')')?;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => Ok(Expr::Const(self.integer()?)),
            Some(c) if c.is_ascii_alphabetic() => {
                let name = self.ident();
                match name.as_str() {
                    "div" | "mod" => {
                        self.expect(b'(')?;
                        let a = self.expr()?;
                        self.expect(b',')?;
                        let m = self.integer()?;
                        self.expect(b')')?;
                        if m <= 0 {
                            return Err(self.error("modulus must be positive"));
                        }
                        Ok(if name == "div" { Expr::Div(Box::new(a), m) } else { Expr::Mod(Box::new(a), m) })
                    }
                    _ => variable(&name).ok_or_else(|| self.error(&format!("unknown name {name:?}"))),
                }
            }
            _ => Err(self.error("expected an expression")),
        }
    }
}

fn variable(name: &str) -> Option<Expr> {
    let arg = match name.as_bytes().first()? {
        b'i' => 0,
        b'j' => 1,
        b'k' => 2,
        _ => return None,
    };
    let slot: usize = name[1..].parse().ok()?;
    if slot == 0 {
        return None;
    }
    Some(Expr::Var { arg, slot: slot - 1 })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_sign_formula() {
        let f = parse_formula("minus_one_pow(k1*j2*i3)", 3).unwrap();
        assert_eq!(f.len(), 1);
        assert_eq!(f[0].order, 2);
        assert_eq!(f[0].expr.eval([&[0, 0, 1], &[0, 1, 0], &[1, 0, 0]]), 1);
        assert_eq!(f[0].expr.eval([&[1, 1, 0], &[0, 1, 0], &[1, 0, 0]]), 0);
    }

    #[test]
    fn arithmetic_and_helpers() {
        let f = parse_formula("zeta(4, i1*div(j1 + k1, 4) - 2*mod(-3, 4)) * minus_one_pow(i1)", 1).unwrap();
        assert_eq!(f.len(), 2);
        // 3*div(2+3,4) - 2*1 = 1
        assert_eq!(f[0].expr.eval([&[3], &[2], &[3]]), 1);
        assert_eq!(f[1].expr.eval([&[3], &[2], &[3]]), 3);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(parse_formula("minus_one_pow(k4)", 3).is_err());
        assert!(parse_formula("zeta(0, i1)", 1).is_err());
        assert!(parse_formula("exp(i1)", 1).is_err());
        assert!(parse_formula("minus_one_pow(i1", 1).is_err());
        assert!(parse_formula("minus_one_pow(x1)", 1).is_err());
        assert!(parse_formula("minus_one_pow(i1) extra", 1).is_err());
        assert!(parse_formula("minus_one_pow(mod(i1, 0))", 1).is_err());
    }
}
