use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{CycNumber, Rational};
use crate::error::{Error, Result};

/// A parsed cyclotomic literal: a rational linear combination of roots of
/// unity `z(N,k) = ζ_N^k`.
///
/// Parsing is separated from evaluation so that a whole config can be scanned
/// for the orders it mentions before choosing the working field.
#[derive(Debug, Clone, PartialEq)]
pub struct CycLiteral {
    terms: Vec<(Rational, u32, i64)>,
}

impl CycLiteral {
    pub fn parse(text: &str) -> Result<Self> {
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse(format!("empty cyclotomic literal {text:?}")));
        }
        let bytes = s.as_bytes();
        let mut terms = Vec::new();
        let mut pos = 0;
        while pos < bytes.len() {
            let mut sign = Rational::one();
            if bytes[pos] == b'+' || bytes[pos] == b'-' {
                if bytes[pos] == b'-' {
                    sign = -sign;
                }
                pos += 1;
            } else if pos != 0 {
                return Err(Error::Parse(format!("expected '+' or '-' at offset {pos} in {text:?}")));
            }
            let end = (pos..bytes.len())
                .find(|&k| {
                    (bytes[k] == b'+' || bytes[k] == b'-') && k > pos && !inside_parens(bytes, k)
                })
                .unwrap_or(bytes.len());
            let term = &s[pos..end];
            terms.push(parse_term(term, sign).map_err(|e| match e {
                Error::Parse(m) => Error::Parse(format!("{m} in literal {text:?}")),
                other => other,
            })?);
            pos = end;
        }
        Ok(CycLiteral { terms })
    }

    /// Least common multiple of the root-of-unity orders mentioned.
    pub fn order(&self) -> u32 {
        self.terms.iter().fold(1u32, |acc, &(_, n, _)| acc.lcm(&n))
    }

    /// Evaluates in `Q(ζ_order)`; `self.order()` must divide `order`.
    pub fn to_number(&self, order: u32) -> Result<CycNumber> {
        if !order.is_multiple_of(self.order()) {
            return Err(Error::Invalid(format!(
                "literal needs ζ_{} which is not in Q(ζ_{order})",
                self.order()
            )));
        }
        let mut acc = CycNumber::zero(order);
        for (c, n, k) in &self.terms {
            let z = CycNumber::root_of_unity_in(order, *n, *k);
            acc = &acc + &(&CycNumber::from_rational(order, c.clone()) * &z);
        }
        Ok(acc)
    }
}

fn inside_parens(bytes: &[u8], k: usize) -> bool {
    let mut depth = 0i32;
    for &b in &bytes[..k] {
        match b {
            b'(' => depth += 1,
            b')' => depth -= 1,
            _ => {}
        }
    }
    depth > 0
}

fn parse_term(term: &str, sign: Rational) -> Result<(Rational, u32, i64)> {
    let mut coeff = sign;
    let mut root = (1u32, 0i64);
    let mut seen_root = false;
    for factor in term.split('*') {
        if factor.is_empty() {
            return Err(Error::Parse(format!("dangling '*' in term {term:?}")));
        }
        if let Some(inner) = factor.strip_prefix("z(").and_then(|f| f.strip_suffix(')')) {
            if seen_root {
                return Err(Error::Parse(format!("more than one root factor in term {term:?}")));
            }
            seen_root = true;
            let (n, k) = inner
                .split_once(',')
                .ok_or_else(|| Error::Parse(format!("expected z(N,k), got {factor:?}")))?;
            let n: u32 = n
                .parse()
                .map_err(|_| Error::Parse(format!("bad root order {n:?}")))?;
            let k: i64 = k
                .parse()
                .map_err(|_| Error::Parse(format!("bad root exponent {k:?}")))?;
            if n == 0 {
                return Err(Error::Parse("root order must be positive".into()));
            }
            root = (n, k);
        } else {
            coeff *= parse_rational(factor)?;
        }
    }
    Ok((coeff, root.0, root.1))
}

/// Parses `a` or `a/b` with integer `a`, `b`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let bad = || Error::Parse(format!("bad rational {text:?}"));
    let (n, d) = match text.split_once('/') {
        Some((n, d)) => (n, d),
        None => (text, "1"),
    };
    let n: BigInt = n.trim().parse().map_err(|_| bad())?;
    let d: BigInt = d.trim().parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {text:?}")));
    }
    Ok(Rational::new(n, d))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn num(s: &str) -> CycNumber {
        let lit = CycLiteral::parse(s).unwrap();
        lit.to_number(lit.order()).unwrap()
    }

    #[test]
    fn plain_rationals() {
        assert_eq!(num("-1"), CycNumber::from_int(1, -1));
        assert_eq!(num("3/6"), CycNumber::from_rational(1, parse_rational("1/2").unwrap()));
    }

    #[test]
    fn roots_and_combinations() {
        assert_eq!(num("z(4,1)"), CycNumber::zeta(4, 1));
        assert_eq!(num("1 - z(8,2)"), &CycNumber::one(8) - &CycNumber::zeta(8, 2));
        let x = num("3/2*z(3,1) + z(3,2) - 1");
        let expected = &(&CycNumber::from_rational(3, parse_rational("3/2").unwrap())
            * &CycNumber::zeta(3, 1))
            + &(&CycNumber::zeta(3, 2) - &CycNumber::one(3));
        assert_eq!(x, expected);
        assert_eq!(num("-z(6,1)*2"), &CycNumber::from_int(6, -2) * &CycNumber::zeta(6, 1));
    }

    #[test]
    fn order_is_lcm() {
        let lit = CycLiteral::parse("z(4,1) + z(6,1)").unwrap();
        assert_eq!(lit.order(), 12);
        assert!(lit.to_number(6).is_err());
    }

    #[test]
    fn rejects_garbage() {
        assert!(CycLiteral::parse("").is_err());
        assert!(CycLiteral::parse("z(4)").is_err());
        assert!(CycLiteral::parse("1/0").is_err());
        assert!(CycLiteral::parse("2**z(3,1)").is_err());
        assert!(CycLiteral::parse("abc").is_err());
    }
}
