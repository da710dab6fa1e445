use std::sync::Arc;

use super::formula::{parse_formula, Factor};
use super::{AbelianGroup, GroupElement};
use crate::error::{Error, Result};
use crate::exact::CycNumber;

/// How a [`ThreeCocycle`] was specified; kept for reports.
#[derive(Debug, Clone, PartialEq)]
pub enum CocycleSource {
    Trivial,
    Formula(String),
    Table,
}

/// A 3-cocycle `Φ: G³ → Q(ζ_N)^×`, stored as a full value table.
///
/// Construction does not check the cocycle identity or normalization: use
/// [`ThreeCocycle::cocycle_violations`] and
/// [`ThreeCocycle::normalization_violations`], which report rather than fail.
#[derive(Debug, Clone)]
pub struct ThreeCocycle {
    group: AbelianGroup,
    source: CocycleSource,
    order: u32,
    values: Vec<CycNumber>,
    inverses: Vec<CycNumber>,
}

impl ThreeCocycle {
    pub fn trivial(group: AbelianGroup) -> Self {
        let n = group.order().pow(3);
        let values = vec![CycNumber::one(1); n];
        ThreeCocycle { group, source: CocycleSource::Trivial, order: 1, inverses: values.clone(), values }
    }

    /// Builds the cocycle from an exponent formula (see the `formula` syntax
    /// in this module's parent docs).
    pub fn from_formula(group: AbelianGroup, formula: &str) -> Result<Self> {
        let factors = parse_formula(formula, group.rank())?;
        let order = factors.iter().fold(1u32, |a, f| num_integer::lcm(a, f.order));
        let exps: Vec<Vec<u32>> = group.elements().map(|g| group.exponents(g)).collect();
        let n = group.order();
        let mut values = Vec::with_capacity(n * n * n);
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let k = total_exponent(&factors, order, [&exps[a], &exps[b], &exps[c]]);
                    values.push(CycNumber::root_of_unity_in(order, order, k));
                }
            }
        }
        let inverses = values.iter().map(|v| v.inverse()).collect::<Result<_>>()?;
        Ok(ThreeCocycle { group, source: CocycleSource::Formula(formula.to_string()), order, values, inverses })
    }

    /// Builds the cocycle from explicit entries; unlisted triples are 1.
    pub fn from_table(
        group: AbelianGroup,
        entries: &[((GroupElement, GroupElement, GroupElement), CycNumber)],
    ) -> Result<Self> {
        let order = entries.iter().fold(1u32, |a, (_, v)| num_integer::lcm(a, v.order()));
        let n = group.order();
        let mut values = vec![CycNumber::one(order); n * n * n];
        for ((a, b, c), v) in entries {
            if [a, b, c].iter().any(|g| g.index() >= n) {
                return Err(Error::Invalid("cocycle table entry outside the group".into()));
            }
            if v.is_zero() {
                return Err(Error::Invalid(format!(
                    "cocycle value at ({}, {}, {}) is zero",
                    group.format(*a),
                    group.format(*b),
                    group.format(*c)
                )));
            }
            values[(a.index() * n + b.index()) * n + c.index()] = v.embed(order);
        }
        let inverses = values.iter().map(|v| v.inverse()).collect::<Result<_>>()?;
        Ok(ThreeCocycle { group, source: CocycleSource::Table, order, values, inverses })
    }

    pub fn group(&self) -> &AbelianGroup {
        &self.group
    }

    pub fn source(&self) -> &CocycleSource {
        &self.source
    }

    /// Order `N` of the cyclotomic field holding the values.
    pub fn order(&self) -> u32 {
        self.order
    }

    /// The same cocycle with values re-expressed in `Q(ζ_order)`.
    pub fn embed(&self, order: u32) -> Self {
        ThreeCocycle {
            group: self.group.clone(),
            source: self.source.clone(),
            order,
            values: self.values.iter().map(|v| v.embed(order)).collect(),
            inverses: self.inverses.iter().map(|v| v.embed(order)).collect(),
        }
    }

    fn slot(&self, a: GroupElement, b: GroupElement, c: GroupElement) -> usize {
        let n = self.group.order();
        (a.index() * n + b.index()) * n + c.index()
    }

    pub fn eval(&self, a: GroupElement, b: GroupElement, c: GroupElement) -> &CycNumber {
        &self.values[self.slot(a, b, c)]
    }

    pub fn eval_inv(&self, a: GroupElement, b: GroupElement, c: GroupElement) -> &CycNumber {
        &self.inverses[self.slot(a, b, c)]
    }

    /// Triples where `Φ` fails to be 1 although an argument is the identity.
    pub fn normalization_violations(&self) -> Vec<[GroupElement; 3]> {
        let e = self.group.identity();
        let mut out = Vec::new();
        for g in self.group.elements() {
            for h in self.group.elements() {
                for t in [[e, g, h], [g, e, h], [g, h, e]] {
                    if !self.eval(t[0], t[1], t[2]).is_one() && !out.contains(&t) {
                        out.push(t);
                    }
                }
            }
        }
        out
    }

    /// Quadruples `(a,b,c,d)` violating
    /// `Φ(b,c,d)Φ(a,bc,d)Φ(a,b,c) = Φ(a,b,cd)Φ(ab,c,d)`, at most `limit` of
    /// them. Exhaustive over `|G|⁴`.
    pub fn cocycle_violations(&self, limit: usize) -> Vec<[GroupElement; 4]> {
        let g = &self.group;
        let mut out = Vec::new();
        for a in g.elements() {
            for b in g.elements() {
                let ab = g.mul(a, b);
                for c in g.elements() {
                    let bc = g.mul(b, c);
                    let abc = self.eval(a, b, c);
                    for d in g.elements() {
                        let cd = g.mul(c, d);
                        let lhs = &(self.eval(b, c, d) * self.eval(a, bc, d)) * abc;
                        let rhs = self.eval(a, b, cd) * self.eval(ab, c, d);
                        if lhs != rhs {
                            out.push([a, b, c, d]);
                            if out.len() >= limit {
                                return out;
                            }
                        }
                    }
                }
            }
        }
        out
    }
}

fn total_exponent(factors: &[Factor], order: u32, args: [&[u32]; 3]) -> i64 {
    factors
        .iter()
        .map(|f| f.expr.eval(args).rem_euclid(f.order as i64) * (order / f.order) as i64)
        .sum::<i64>()
        .rem_euclid(order as i64)
}

pub fn eval_phi(c: &ThreeCocycle, a: GroupElement, b: GroupElement, d: GroupElement) -> CycNumber {
    c.eval(a, b, d).clone()
}

/// `Φ̃_g(e,f) = Φ(g,e,f)·Φ(e,f,g) / Φ(e,g,f)`: the 2-cocycle governing the
/// projective action on a module of degree `g`.
#[derive(Debug, Clone)]
pub struct TwoCocycle {
    cocycle: Arc<ThreeCocycle>,
    base: GroupElement,
    values: Vec<CycNumber>,
}

pub fn derive_two_cocycle(c: &Arc<ThreeCocycle>, g: GroupElement) -> TwoCocycle {
    let grp = c.group();
    let n = grp.order();
    let mut values = Vec::with_capacity(n * n);
    for e in grp.elements() {
        for f in grp.elements() {
            let v = &(c.eval(g, e, f) * c.eval(e, f, g)) * c.eval_inv(e, g, f);
            values.push(v);
        }
    }
    TwoCocycle { cocycle: Arc::clone(c), base: g, values }
}

impl TwoCocycle {
    pub fn base(&self) -> GroupElement {
        self.base
    }

    pub fn cocycle(&self) -> &Arc<ThreeCocycle> {
        &self.cocycle
    }

    pub fn eval(&self, e: GroupElement, f: GroupElement) -> &CycNumber {
        &self.values[e.index() * self.cocycle.group().order() + f.index()]
    }

    /// Triples violating `Φ̃(e,f)Φ̃(ef,d) = Φ̃(f,d)Φ̃(e,fd)`.
    pub fn violations(&self) -> Vec<[GroupElement; 3]> {
        let g = self.cocycle.group();
        let mut out = Vec::new();
        for e in g.elements() {
            for f in g.elements() {
                let ef = g.mul(e, f);
                for d in g.elements() {
                    let lhs = self.eval(e, f) * self.eval(ef, d);
                    let rhs = self.eval(f, d) * self.eval(e, g.mul(f, d));
                    if lhs != rhs {
                        out.push([e, f, d]);
                    }
                }
            }
        }
        out
    }
}
