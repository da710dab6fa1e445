use std::collections::{BTreeMap, VecDeque};
use std::fmt;
use std::ops::Mul;

use serde::Serialize;

use crate::cartangraph::CartanGraph;
use crate::reflect::CartanMatrix;

/// A square integer matrix acting on `Z^θ`; column `j` is the image of `α_j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct WeylMatrix {
    n: usize,
    data: Vec<i64>,
}

impl WeylMatrix {
    pub fn identity(n: usize) -> Self {
        let mut data = vec![0; n * n];
        for i in 0..n {
            data[i * n + i] = 1;
        }
        WeylMatrix { n, data }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "square matrix expected");
        WeylMatrix { n, data: rows.concat() }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.data[r * self.n + c]
    }

    pub fn column(&self, c: usize) -> Vec<i64> {
        (0..self.n).map(|r| self.get(r, c)).collect()
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.data.chunks(self.n).map(<[i64]>::to_vec).collect()
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.n)
    }

    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        (0..self.n).map(|r| (0..self.n).map(|c| self.get(r, c) * v[c]).sum()).collect()
    }

    /// Determinant by cofactor expansion (small sizes only).
    pub fn det(&self) -> i64 {
        fn rec(m: &[Vec<i64>]) -> i64 {
            if m.len() == 1 {
                return m[0][0];
            }
            (0..m.len())
                .map(|c| {
                    let minor: Vec<Vec<i64>> = m[1..]
                        .iter()
                        .map(|row| row.iter().enumerate().filter(|&(k, _)| k != c).map(|(_, &x)| x).collect())
                        .collect();
                    let sign = if c % 2 == 0 { 1 } else { -1 };
                    sign * m[0][c] * rec(&minor)
                })
                .sum()
        }
        rec(&self.rows())
    }
}

impl Mul for &WeylMatrix {
    type Output = WeylMatrix;

    fn mul(self, rhs: &WeylMatrix) -> WeylMatrix {
        let n = self.n;
        assert_eq!(n, rhs.n, "size mismatch");
        let mut data = vec![0; n * n];
        for r in 0..n {
            for k in 0..n {
                let a = self.data[r * n + k];
                if a != 0 {
                    for c in 0..n {
                        data[r * n + c] += a * rhs.data[k * n + c];
                    }
                }
            }
        }
        WeylMatrix { n, data }
    }
}

impl fmt::Display for WeylMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> =
            self.rows().iter().map(|r| format!("[{}]", r.iter().map(i64::to_string).collect::<Vec<_>>().join(","))).collect();
        write!(f, "[{}]", rows.join(","))
    }
}

/// `s_i^X`: `α_j ↦ α_j − a_ij α_i`.
pub fn simple_reflection(a: &CartanMatrix, i: usize) -> WeylMatrix {
    let n = a.size();
    let mut m = WeylMatrix::identity(n);
    for j in 0..n {
        m.data[i * n + j] -= a.get(i, j);
    }
    m
}

/// A morphism `(target, matrix, source)` of the Weyl groupoid with a
/// shortest word found for it. `word[k]` is the `k`-th generator applied.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeylMorphism {
    pub source: usize,
    pub target: usize,
    pub matrix: WeylMatrix,
    pub word: Vec<usize>,
}

/// All morphisms out of `x` given by words of length `≤ bound`, one per
/// distinct `(target, matrix)`, in breadth-first order.
pub fn morphisms_from(g: &CartanGraph, x: usize, bound: usize) -> Vec<WeylMorphism> {
    let id = WeylMorphism { source: x, target: x, matrix: WeylMatrix::identity(g.rank()), word: Vec::new() };
    let mut seen = BTreeMap::from([((x, id.matrix.clone()), ())]);
    let mut out = vec![id];
    let mut frontier = VecDeque::from([0]);
    while let Some(k) = frontier.pop_front() {
        if out[k].word.len() == bound {
            continue;
        }
        for i in 0..g.rank() {
            let cur = &out[k];
            let Some(y) = g.reflect(cur.target, i) else { continue };
            let matrix = &simple_reflection(g.matrix(cur.target), i) * &cur.matrix;
            if seen.insert((y, matrix.clone()), ()).is_none() {
                let mut word = cur.word.clone();
                word.push(i);
                out.push(WeylMorphism { source: x, target: y, matrix, word });
                frontier.push_back(out.len() - 1);
            }
        }
    }
    out
}

/// All morphisms into `x` given by words of length `≤ bound`, one per
/// distinct `(source, matrix)`; found by extending words at their start.
pub fn morphisms_into(g: &CartanGraph, x: usize, bound: usize) -> Vec<WeylMorphism> {
    let mut preimages: Vec<Vec<(usize, usize)>> = vec![Vec::new(); g.object_count()];
    for z in 0..g.object_count() {
        for i in 0..g.rank() {
            if let Some(y) = g.reflect(z, i) {
                preimages[y].push((z, i));
            }
        }
    }
    let id = WeylMorphism { source: x, target: x, matrix: WeylMatrix::identity(g.rank()), word: Vec::new() };
    let mut seen = BTreeMap::from([((x, id.matrix.clone()), ())]);
    let mut out = vec![id];
    let mut frontier = VecDeque::from([0]);
    while let Some(k) = frontier.pop_front() {
        if out[k].word.len() == bound {
            continue;
        }
        let src = out[k].source;
        for &(z, i) in &preimages[src] {
            let cur = &out[k];
            let matrix = &cur.matrix * &simple_reflection(g.matrix(z), i);
            if seen.insert((z, matrix.clone()), ()).is_none() {
                let mut word = vec![i];
                word.extend_from_slice(&cur.word);
                out.push(WeylMorphism { source: z, target: x, matrix, word });
                frontier.push_back(out.len() - 1);
            }
        }
    }
    out
}

/// `Hom(x, y)` restricted to words of length `≤ bound`, distinct by matrix.
pub fn hom_enumerate(g: &CartanGraph, x: usize, y: usize, bound: usize) -> Vec<WeylMorphism> {
    morphisms_from(g, x, bound).into_iter().filter(|m| m.target == y).collect()
}
