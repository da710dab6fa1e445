use std::collections::{BTreeMap, BTreeSet};

use num_integer::Integer;
use serde::Serialize;

use super::morphism::{morphisms_into, simple_reflection};
use crate::cartangraph::CartanGraph;

/// Real roots at an object found through words of length `≤ cutoff`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RootSet {
    pub object: usize,
    pub cutoff: usize,
    pub roots: BTreeSet<Vec<i64>>,
}

impl RootSet {
    pub fn contains(&self, v: &[i64]) -> bool {
        self.roots.contains(v)
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }
}

/// `{ω(α_i)}` over all morphisms `ω` into `x` with words of length `≤ bound`.
pub fn real_roots(g: &CartanGraph, x: usize, bound: usize) -> RootSet {
    let mut roots = BTreeSet::new();
    for w in morphisms_into(g, x, bound) {
        for i in 0..g.rank() {
            roots.insert(w.matrix.column(i));
        }
    }
    RootSet { object: x, cutoff: bound, roots }
}

fn sign_coherent(v: &[i64]) -> bool {
    v.iter().all(|&c| c >= 0) || v.iter().all(|&c| c <= 0)
}

/// Number of roots in `N₀α_i + N₀α_j`.
fn count_in_plane(roots: &RootSet, i: usize, j: usize) -> usize {
    roots
        .roots
        .iter()
        .filter(|v| v.iter().enumerate().all(|(k, &c)| if k == i || k == j { c >= 0 } else { c == 0 }))
        .count()
}

/// `m_ij` predicted by the 2×2 submatrix: `a_ij a_ji ∈ {0,1,2,3}` gives
/// `{2,3,4,6}`; anything larger is of infinite type.
pub fn classify_rank2(a_ij: i64, a_ji: i64) -> Option<usize> {
    match a_ij * a_ji {
        0 => Some(2),
        1 => Some(3),
        2 => Some(4),
        3 => Some(6),
        _ => None,
    }
}

/// `m_ij^X` generated within the bound, next to the prediction from the
/// Cartan matrix at `X`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Rank2Count {
    pub object: usize,
    pub i: usize,
    pub j: usize,
    pub generated: usize,
    pub classified: Option<usize>,
    /// Finite prediction: counts agree. Infinite prediction: the count still
    /// grows between bounds `L − 2` and `L`.
    pub consistent: bool,
}

impl Rank2Count {
    /// The finite value of `m_ij^X`, if both routes agree on one.
    pub fn finite(&self) -> Option<usize> {
        self.classified.filter(|_| self.consistent)
    }
}

pub fn rank2_count(g: &CartanGraph, x: usize, i: usize, j: usize, bound: usize) -> Rank2Count {
    let roots = real_roots(g, x, bound);
    let smaller = (bound >= 2).then(|| real_roots(g, x, bound - 2));
    rank2_from(g, x, i, j, &roots, smaller.as_ref())
}

fn rank2_from(g: &CartanGraph, x: usize, i: usize, j: usize, roots: &RootSet, smaller: Option<&RootSet>) -> Rank2Count {
    let generated = count_in_plane(roots, i, j);
    let a = g.matrix(x);
    let classified = classify_rank2(a.get(i, j), a.get(j, i));
    let consistent = match classified {
        Some(c) => c == generated,
        None => smaller.is_some_and(|s| count_in_plane(s, i, j) < generated),
    };
    Rank2Count { object: x, i, j, generated, classified, consistent }
}

/// Outcome of the Cartan-graph and root-system axiom checks within a word
/// bound. Each list holds the failures; empty lists mean the axiom holds in
/// the window.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub bound: usize,
    /// CG3, also root axiom (2): a root that is neither positive nor negative.
    pub cg3: Vec<(usize, Vec<i64>)>,
    /// CG4, also root axiom (4): `(object, i, j, m)` with `(r_i r_j)^m(X) ≠ X`.
    pub cg4: Vec<(usize, usize, usize, usize)>,
    /// Root axiom (1): objects where `0` is a root or some `α_i` is missing.
    pub simple_roots: Vec<usize>,
    /// Root axiom (3): `(object, i, root)` with `s_i^X(root)` not a root at
    /// `r_i(X)` (roots at `X` within `L`, targets within `L + 1`).
    pub reflection_closure: Vec<(usize, usize, Vec<i64>)>,
    /// Reducedness: a root with a rational multiple other than `±` itself.
    pub non_reduced: Vec<(usize, Vec<i64>)>,
    /// Every rank-2 count, generated and classified.
    pub rank2: Vec<Rank2Count>,
}

impl AxiomReport {
    pub fn rank2_consistent(&self) -> bool {
        self.rank2.iter().all(|r| r.consistent)
    }

    pub fn passed(&self) -> bool {
        self.cg3.is_empty()
            && self.cg4.is_empty()
            && self.simple_roots.is_empty()
            && self.reflection_closure.is_empty()
            && self.non_reduced.is_empty()
            && self.rank2_consistent()
    }
}

fn primitive(v: &[i64]) -> (Vec<i64>, i64) {
    let g = v.iter().fold(0i64, |acc, &c| acc.gcd(&c));
    (v.iter().map(|&c| c / g).collect(), g)
}

pub fn cartan_axioms(g: &CartanGraph, bound: usize) -> AxiomReport {
    let n = g.object_count();
    let theta = g.rank();
    let at: Vec<RootSet> = (0..n).map(|x| real_roots(g, x, bound)).collect();
    let wider: Vec<RootSet> = (0..n).map(|x| real_roots(g, x, bound + 1)).collect();
    let narrower: Vec<Option<RootSet>> = (0..n).map(|x| (bound >= 2).then(|| real_roots(g, x, bound - 2))).collect();
    let mut report = AxiomReport {
        bound,
        cg3: Vec::new(),
        cg4: Vec::new(),
        simple_roots: Vec::new(),
        reflection_closure: Vec::new(),
        non_reduced: Vec::new(),
        rank2: Vec::new(),
    };
    for x in 0..n {
        let roots = &at[x];
        for v in &roots.roots {
            if !sign_coherent(v) {
                report.cg3.push((x, v.clone()));
            }
        }
        let zero = vec![0; theta];
        let simple_ok = !roots.contains(&zero)
            && (0..theta).all(|i| {
                let mut e = zero.clone();
                e[i] = 1;
                roots.contains(&e)
            });
        if !simple_ok {
            report.simple_roots.push(x);
        }
        for i in 0..theta {
            let Some(y) = g.reflect(x, i) else { continue };
            let s = simple_reflection(g.matrix(x), i);
            for v in &roots.roots {
                let image = s.apply(v);
                if !wider[y].contains(&image) {
                    report.reflection_closure.push((x, i, v.clone()));
                }
            }
        }
        let mut multiples: BTreeMap<Vec<i64>, BTreeSet<i64>> = BTreeMap::new();
        for v in roots.roots.iter().filter(|v| **v != zero) {
            let (p, k) = primitive(v);
            let (p, k) = if p.iter().find(|&&c| c != 0).is_some_and(|&c| c < 0) {
                (p.iter().map(|c| -c).collect(), -k)
            } else {
                (p, k)
            };
            multiples.entry(p).or_default().insert(k.abs());
        }
        for (p, ks) in multiples {
            if ks.len() > 1 {
                report.non_reduced.push((x, p));
            }
        }
        for i in 0..theta {
            for j in 0..theta {
                if i == j {
                    continue;
                }
                let r2 = rank2_from(g, x, i, j, roots, narrower[x].as_ref());
                if let Some(m) = r2.finite() {
                    let word: Vec<usize> = std::iter::repeat_n([j, i], m).flatten().collect();
                    if g.walk(x, &word) != Some(x) {
                        report.cg4.push((x, i, j, m));
                    }
                }
                report.rank2.push(r2);
            }
        }
    }
    report
}
