use std::fmt;

use crate::error::{Error, Result};

/// Largest group order accepted; cocycle tables have `|G|³` entries.
pub const MAX_GROUP_ORDER: usize = 64;

/// `Z_{m_1} × … × Z_{m_k}` with fixed generators `h_1, …, h_k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AbelianGroup {
    factors: Vec<u32>,
    strides: Vec<usize>,
    order: usize,
}

/// An element of an [`AbelianGroup`], stored as the mixed-radix index of its
/// reduced exponent vector (the first exponent varies fastest).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupElement(pub(crate) u32);

impl GroupElement {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl AbelianGroup {
    pub fn new(factors: Vec<u32>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::Invalid("group needs at least one invariant factor".into()));
        }
        if factors.contains(&0) {
            return Err(Error::Invalid("invariant factors must be positive".into()));
        }
        let mut strides = Vec::with_capacity(factors.len());
        let mut order = 1usize;
        for &m in &factors {
            strides.push(order);
            order = order.saturating_mul(m as usize);
        }
        if order > MAX_GROUP_ORDER {
            return Err(Error::ResourceCap {
                what: "group order".into(),
                needed: order,
                limit: MAX_GROUP_ORDER,
            });
        }
        Ok(AbelianGroup { factors, strides, order })
    }

    pub fn factors(&self) -> &[u32] {
        &self.factors
    }

    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Least common multiple of the invariant factors.
    pub fn exponent(&self) -> u32 {
        self.factors.iter().fold(1, |a, &m| num_integer::lcm(a, m))
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement(0)
    }

    /// `h_l`, zero-based.
    pub fn generator(&self, l: usize) -> GroupElement {
        let mut e = vec![0i64; self.rank()];
        e[l] = 1;
        self.element(&e)
    }

    pub fn generators(&self) -> Vec<GroupElement> {
        (0..self.rank()).map(|l| self.generator(l)).collect()
    }

    /// The element with the given exponents, reduced modulo the factors.
    pub fn element(&self, exponents: &[i64]) -> GroupElement {
        assert_eq!(exponents.len(), self.rank(), "exponent vector has wrong length");
        let idx = exponents
            .iter()
            .zip(&self.factors)
            .zip(&self.strides)
            .map(|((&e, &m), &s)| e.rem_euclid(m as i64) as usize * s)
            .sum::<usize>();
        GroupElement(idx as u32)
    }

    pub fn checked_element(&self, exponents: &[i64]) -> Result<GroupElement> {
        if exponents.len() != self.rank() {
            return Err(Error::Invalid(format!(
                "exponent vector {exponents:?} has length {}, group has rank {}",
                exponents.len(),
                self.rank()
            )));
        }
        Ok(self.element(exponents))
    }

    pub fn exponents(&self, g: GroupElement) -> Vec<u32> {
        let mut idx = g.index();
        self.factors
            .iter()
            .map(|&m| {
                let e = (idx % m as usize) as u32;
                idx /= m as usize;
                e
            })
            .collect()
    }

    pub fn mul(&self, a: GroupElement, b: GroupElement) -> GroupElement {
        let (ea, eb) = (self.exponents(a), self.exponents(b));
        let sum: Vec<i64> = ea.iter().zip(&eb).map(|(&x, &y)| (x + y) as i64).collect();
        self.element(&sum)
    }

    pub fn product(&self, elems: &[GroupElement]) -> GroupElement {
        elems.iter().fold(self.identity(), |acc, &g| self.mul(acc, g))
    }

    pub fn inv(&self, a: GroupElement) -> GroupElement {
        let e: Vec<i64> = self.exponents(a).iter().map(|&x| -(x as i64)).collect();
        self.element(&e)
    }

    pub fn pow(&self, a: GroupElement, n: i64) -> GroupElement {
        let e: Vec<i64> = self.exponents(a).iter().map(|&x| x as i64 * n).collect();
        self.element(&e)
    }

    pub fn elements(&self) -> impl Iterator<Item = GroupElement> {
        (0..self.order as u32).map(GroupElement)
    }

    /// Human-readable word such as `h1h3^2`, or `e` for the identity.
    pub fn format(&self, g: GroupElement) -> String {
        let ex = self.exponents(g);
        let s: String = ex
            .iter()
            .enumerate()
            .filter(|(_, &e)| e != 0)
            .map(|(l, &e)| if e == 1 { format!("h{}", l + 1) } else { format!("h{}^{e}", l + 1) })
            .collect();
        if s.is_empty() {
            "e".into()
        } else {
            s
        }
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.factors.iter().map(|m| format!("Z{m}")).collect();
        write!(f, "{}", parts.join(" x "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exponent_round_trip() {
        let g = AbelianGroup::new(vec![2, 3, 4]).unwrap();
        assert_eq!(g.order(), 24);
        for x in g.elements() {
            let e: Vec<i64> = g.exponents(x).iter().map(|&v| v as i64).collect();
            assert_eq!(g.element(&e), x);
        }
        assert_eq!(g.exponent(), 12);
    }

    #[test]
    fn group_law() {
        let g = AbelianGroup::new(vec![2, 2, 2]).unwrap();
        let (h1, h2, h3) = (g.generator(0), g.generator(1), g.generator(2));
        assert_eq!(g.mul(h1, h1), g.identity());
        assert_eq!(g.format(g.product(&[h1, h3])), "h1h3");
        assert_eq!(g.format(g.mul(h2, g.identity())), "h2");
        assert_eq!(g.inv(h3), h3);
        let z = AbelianGroup::new(vec![5]).unwrap();
        let a = z.generator(0);
        assert_eq!(z.pow(a, 7), z.pow(a, 2));
        assert_eq!(z.mul(z.inv(a), a), z.identity());
        assert_eq!(z.format(z.pow(a, 3)), "h1^3");
    }

    #[test]
    fn rejects_bad_factors() {
        assert!(AbelianGroup::new(vec![]).is_err());
        assert!(AbelianGroup::new(vec![0, 2]).is_err());
        assert!(matches!(AbelianGroup::new(vec![16, 16]), Err(Error::ResourceCap { .. })));
    }
}
