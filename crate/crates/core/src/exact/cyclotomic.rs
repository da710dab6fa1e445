use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{rat, Rational};
use crate::error::{Error, Result};

/// Euler's totient.
pub fn euler_phi(n: u32) -> usize {
    let mut n = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result as usize
}

/// Integer coefficients of the `n`-th cyclotomic polynomial, lowest degree
/// first.
pub fn cyclotomic_polynomial(n: u32) -> Vec<BigInt> {
    assert!(n >= 1, "cyclotomic polynomial of order 0");
    // x^n - 1 = prod_{d | n} Phi_d(x)
    let mut poly = vec![BigInt::zero(); n as usize + 1];
    poly[0] = -BigInt::one();
    poly[n as usize] = BigInt::one();
    for d in 1..n {
        if n.is_multiple_of(d) {
            poly = exact_div_monic(&poly, &cyclotomic_polynomial(d));
        }
    }
    poly
}

fn exact_div_monic(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut quot = vec![BigInt::zero(); rem.len() - dd];
    for k in (dd..rem.len()).rev() {
        let c = rem[k].clone();
        if c.is_zero() {
            continue;
        }
        quot[k - dd] = c.clone();
        for (t, dc) in den.iter().enumerate() {
            rem[k - dd + t] -= &c * dc;
        }
    }
    debug_assert!(rem.iter().all(Zero::is_zero));
    quot
}

/// The cyclotomic field `Q(ζ_N)`, presented as `Q[x]/Φ_N(x)`.
#[derive(Debug)]
pub struct CyclotomicField {
    order: u32,
    modulus: Vec<Rational>,
}

impl CyclotomicField {
    /// Shared handle for `Q(ζ_order)`. Fields are interned, so repeated calls
    /// are cheap and handles compare by pointer.
    pub fn get(order: u32) -> Arc<CyclotomicField> {
        static FIELDS: OnceLock<Mutex<HashMap<u32, Arc<CyclotomicField>>>> = OnceLock::new();
        let order = order.max(1);
        let mut map = FIELDS.get_or_init(Default::default).lock().unwrap();
        map.entry(order)
            .or_insert_with(|| {
                let modulus = cyclotomic_polynomial(order)
                    .into_iter()
                    .map(Rational::from_integer)
                    .collect();
                Arc::new(CyclotomicField { order, modulus })
            })
            .clone()
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Dimension over `Q`, i.e. `φ(N)`.
    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    fn reduce(&self, mut poly: Vec<Rational>) -> Vec<Rational> {
        let d = self.degree();
        for k in (d..poly.len()).rev() {
            if poly[k].is_zero() {
                continue;
            }
            let c = std::mem::replace(&mut poly[k], Rational::zero());
            for t in 0..d {
                if !self.modulus[t].is_zero() {
                    poly[k - d + t] -= &c * &self.modulus[t];
                }
            }
        }
        poly.resize(d, Rational::zero());
        poly
    }
}

/// An exact element of `Q(ζ_N)`, stored as its coordinates in the power basis
/// `1, ζ, …, ζ^{φ(N)-1}`.
///
/// Operations on numbers of different orders embed both into the field of
/// the least common multiple.
#[derive(Clone)]
pub struct CycNumber {
    field: Arc<CyclotomicField>,
    coeffs: Vec<Rational>,
}

impl CycNumber {
    pub fn zero(order: u32) -> Self {
        let field = CyclotomicField::get(order);
        let coeffs = vec![Rational::zero(); field.degree()];
        CycNumber { field, coeffs }
    }

    pub fn one(order: u32) -> Self {
        Self::from_rational(order, Rational::one())
    }

    pub fn from_int(order: u32, n: i64) -> Self {
        Self::from_rational(order, rat(n))
    }

    pub fn from_rational(order: u32, q: Rational) -> Self {
        let mut z = Self::zero(order);
        z.coeffs[0] = q;
        z
    }

    /// `ζ_n^k`, living in `Q(ζ_order)`; `n` must divide `order`.
    pub fn root_of_unity_in(order: u32, n: u32, k: i64) -> Self {
        assert!(n >= 1 && order.is_multiple_of(n), "ζ_{n} does not live in Q(ζ_{order})");
        let field = CyclotomicField::get(order);
        let exp = (k.rem_euclid(n as i64) as u64 * (order / n) as u64) as usize;
        let mut poly = vec![Rational::zero(); exp.max(field.degree()) + 1];
        poly[exp] = Rational::one();
        let coeffs = field.reduce(poly);
        CycNumber { field, coeffs }
    }

    /// `ζ_n^k` in its own field `Q(ζ_n)`.
    pub fn zeta(n: u32, k: i64) -> Self {
        Self::root_of_unity_in(n, n, k)
    }

    /// Builds a number from power-basis coordinates (reducing if too long).
    pub fn from_coeffs(order: u32, coeffs: Vec<Rational>) -> Self {
        let field = CyclotomicField::get(order);
        let mut poly = coeffs;
        if poly.len() < field.degree() {
            poly.resize(field.degree(), Rational::zero());
        }
        let coeffs = field.reduce(poly);
        CycNumber { field, coeffs }
    }

    pub fn order(&self) -> u32 {
        self.field.order
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// The rational value, when the number lies in `Q`.
    pub fn to_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Re-expresses the number in `Q(ζ_order)`; `self.order()` must divide
    /// `order`.
    pub fn embed(&self, order: u32) -> Self {
        if order == self.order() {
            return self.clone();
        }
        assert!(
            order.is_multiple_of(self.order()),
            "cannot embed Q(ζ_{}) into Q(ζ_{order})",
            self.order()
        );
        let step = (order / self.order()) as usize;
        let field = CyclotomicField::get(order);
        let mut poly = vec![Rational::zero(); (self.coeffs.len().max(1) - 1) * step + field.degree()];
        for (k, c) in self.coeffs.iter().enumerate() {
            poly[k * step] += c;
        }
        let coeffs = field.reduce(poly);
        CycNumber { field, coeffs }
    }

    fn common(a: &Self, b: &Self) -> (Self, Self) {
        let n = a.order().lcm(&b.order());
        (a.embed(n), b.embed(n))
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(q) = self.to_rational() {
            return Ok(Self::from_rational(self.order(), q.recip()));
        }
        // Extended Euclid in Q[x]: s·a + t·Φ = 1.
        let a = trim(self.coeffs.clone());
        let m = trim(self.field.modulus.clone());
        let (g, s) = ext_gcd(a, m);
        debug_assert!(g.len() == 1);
        let scale = g[0].recip();
        let s = s.into_iter().map(|c| c * &scale).collect();
        Ok(Self::from_coeffs(self.order(), s))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.inverse()?)
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.order());
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }
}

fn trim(mut p: Vec<Rational>) -> Vec<Rational> {
    while p.len() > 1 && p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let n = a.len().max(b.len());
    let r = (0..n)
        .map(|k| {
            let x = a.get(k).cloned().unwrap_or_else(Rational::zero);
            let y = b.get(k).cloned().unwrap_or_else(Rational::zero);
            x - y
        })
        .collect();
    trim(r)
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut r = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            r[i + j] += x * y;
        }
    }
    trim(r)
}

fn poly_divmod(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut rem = a.to_vec();
    let db = b.len() - 1;
    if rem.len() <= db {
        return (vec![Rational::zero()], trim(rem));
    }
    let lead = b[db].clone();
    let mut quot = vec![Rational::zero(); rem.len() - db];
    for k in (db..rem.len()).rev() {
        if rem[k].is_zero() {
            continue;
        }
        let c = &rem[k] / &lead;
        for (t, bc) in b.iter().enumerate() {
            rem[k - db + t] -= &c * bc;
        }
        quot[k - db] = c;
    }
    (trim(quot), trim(rem))
}

fn is_zero_poly(p: &[Rational]) -> bool {
    p.iter().all(Zero::is_zero)
}

/// Returns `(g, s)` with `s·a ≡ g (mod m)`, `g = gcd(a, m)`.
fn ext_gcd(a: Vec<Rational>, m: Vec<Rational>) -> (Vec<Rational>, Vec<Rational>) {
    let (mut r0, mut r1) = (a, m);
    let (mut s0, mut s1) = (vec![Rational::one()], vec![Rational::zero()]);
    while !is_zero_poly(&r1) {
        let (q, r) = poly_divmod(&r0, &r1);
        let s = poly_sub(&s0, &poly_mul(&q, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
    }
    (r0, s0)
}

impl PartialEq for CycNumber {
    fn eq(&self, other: &Self) -> bool {
        if self.order() == other.order() {
            self.coeffs == other.coeffs
        } else {
            let (a, b) = Self::common(self, other);
            a.coeffs == b.coeffs
        }
    }
}

impl Eq for CycNumber {}

impl Hash for CycNumber {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.order().hash(state);
        self.coeffs.hash(state);
    }
}

impl fmt::Debug for CycNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Renders in the literal syntax accepted by the config parser, e.g.
/// `1 - z(8,2)` or `-1/2*z(3,1)`.
impl fmt::Display for CycNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.order();
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            if k == 0 {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "z({n},{k})")?;
            } else {
                write!(f, "{abs}*z({n},{k})")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl<'a> Add<&'a CycNumber> for &'a CycNumber {
    type Output = CycNumber;
    fn add(self, rhs: &CycNumber) -> CycNumber {
        if self.order() != rhs.order() {
            let (a, b) = CycNumber::common(self, rhs);
            return &a + &b;
        }
        let coeffs = self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect();
        CycNumber { field: self.field.clone(), coeffs }
    }
}

impl<'a> Sub<&'a CycNumber> for &'a CycNumber {
    type Output = CycNumber;
    fn sub(self, rhs: &CycNumber) -> CycNumber {
        if self.order() != rhs.order() {
            let (a, b) = CycNumber::common(self, rhs);
            return &a - &b;
        }
        let coeffs = self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect();
        CycNumber { field: self.field.clone(), coeffs }
    }
}

impl<'a> Mul<&'a CycNumber> for &'a CycNumber {
    type Output = CycNumber;
    fn mul(self, rhs: &CycNumber) -> CycNumber {
        if self.order() != rhs.order() {
            let (a, b) = CycNumber::common(self, rhs);
            return &a * &b;
        }
        if self.field.degree() == 1 {
            return CycNumber {
                field: self.field.clone(),
                coeffs: vec![&self.coeffs[0] * &rhs.coeffs[0]],
            };
        }
        let d = self.field.degree();
        let mut poly = vec![Rational::zero(); 2 * d - 1];
        for (i, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in rhs.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    poly[i + j] += x * y;
                }
            }
        }
        CycNumber { field: self.field.clone(), coeffs: self.field.reduce(poly) }
    }
}

/// Panics on division by zero; use [`CycNumber::checked_div`] to handle it.
impl<'a> Div<&'a CycNumber> for &'a CycNumber {
    type Output = CycNumber;
    fn div(self, rhs: &CycNumber) -> CycNumber {
        self.checked_div(rhs).expect("division by zero")
    }
}

impl Neg for &CycNumber {
    type Output = CycNumber;
    fn neg(self) -> CycNumber {
        CycNumber {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<CycNumber> for CycNumber {
            type Output = CycNumber;
            fn $m(self, rhs: CycNumber) -> CycNumber { (&self).$m(&rhs) }
        }
        impl<'a> $tr<&'a CycNumber> for CycNumber {
            type Output = CycNumber;
            fn $m(self, rhs: &CycNumber) -> CycNumber { (&self).$m(rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl Neg for CycNumber {
    type Output = CycNumber;
    fn neg(self) -> CycNumber {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomic_polynomials() {
        let as_i64 = |n| {
            cyclotomic_polynomial(n)
                .iter()
                .map(|c| i64::try_from(c).unwrap())
                .collect::<Vec<_>>()
        };
        assert_eq!(as_i64(1), vec![-1, 1]);
        assert_eq!(as_i64(2), vec![1, 1]);
        assert_eq!(as_i64(3), vec![1, 1, 1]);
        assert_eq!(as_i64(4), vec![1, 0, 1]);
        assert_eq!(as_i64(8), vec![1, 0, 0, 0, 1]);
        assert_eq!(as_i64(12), vec![1, 0, -1, 0, 1]);
        for n in 1..40 {
            assert_eq!(cyclotomic_polynomial(n).len() - 1, euler_phi(n));
        }
    }

    #[test]
    fn i_squared() {
        let i = CycNumber::zeta(4, 1);
        assert_eq!(&i * &i, CycNumber::from_int(4, -1));
    }

    #[test]
    fn primitive_cube_roots_sum_to_minus_one() {
        let s = &CycNumber::zeta(3, 1) + &CycNumber::zeta(3, 2);
        assert_eq!(s, CycNumber::from_int(3, -1));
    }

    #[test]
    fn product_in_q_zeta8() {
        // (1 + x)(1 - x) = 1 - x^2 reduced mod x^4 + 1, computed by hand.
        let one = CycNumber::one(8);
        let z = CycNumber::zeta(8, 1);
        let lhs = &(&one + &z) * &(&one - &z);
        let expected = CycNumber::from_coeffs(8, vec![rat(1), rat(0), rat(-1), rat(0)]);
        assert_eq!(lhs, expected);
        // ζ_8^2 = i, so the value is 1 - i.
        assert_eq!(lhs, &one - &CycNumber::zeta(4, 1));
    }

    #[test]
    fn zeta_to_the_order_is_one() {
        for n in [1u32, 2, 3, 5, 6, 8, 12] {
            assert!(CycNumber::zeta(n, 1).pow(n as u64).is_one());
            assert!(CycNumber::zeta(n, n as i64).is_one());
        }
    }

    #[test]
    fn inverse_and_division() {
        let a = &CycNumber::from_int(12, 3) + &CycNumber::zeta(12, 5);
        let inv = a.inverse().unwrap();
        assert!((&a * &inv).is_one());
        assert_eq!(CycNumber::zero(5).inverse(), Err(Error::DivisionByZero));
    }

    #[test]
    fn mixed_orders_embed_into_lcm() {
        let a = CycNumber::zeta(4, 1);
        let b = CycNumber::zeta(3, 1);
        let p = &a * &b;
        assert_eq!(p.order(), 12);
        assert_eq!(p, CycNumber::zeta(12, 3 + 4));
        assert_eq!(CycNumber::zeta(2, 1), CycNumber::from_int(8, -1));
    }

    #[test]
    fn display_uses_literal_syntax() {
        let x = &CycNumber::one(8) - &CycNumber::zeta(8, 2);
        assert_eq!(x.to_string(), "1 - z(8,2)");
        assert_eq!(CycNumber::zero(3).to_string(), "0");
        assert_eq!(CycNumber::from_rational(1, Rational::new(rat(-1).numer().clone(), 2.into())).to_string(), "-1/2");
    }
}
