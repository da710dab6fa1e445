use std::collections::BTreeMap;

use serde::Serialize;

use crate::cartangraph::CartanGraph;
use crate::error::{Error, Result};
use crate::weylroots::{morphisms_from, simple_reflection, WeylMatrix};

/// A chamber `K = ⋂ β_i^+` with root basis `β_i = ψ_X(α_i)`, stored as
/// integer covectors in the basis `φ_1..φ_θ`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Chamber {
    pub object: usize,
    /// Reflection word from the base object.
    pub word: Vec<usize>,
    /// `basis[i]` is the coordinate vector of `β_i`.
    pub basis: Vec<Vec<i64>>,
}

impl Chamber {
    /// `β_i(x)` for a point given in coordinates dual to `φ`.
    pub fn values(&self, x: &[i64]) -> Vec<i64> {
        self.basis.iter().map(|b| b.iter().zip(x).map(|(c, xi)| c * xi).sum()).collect()
    }

    /// Extreme rays: `rays[k]` satisfies `β_i(rays[k]) = δ_ik`.
    pub fn rays(&self) -> Vec<Vec<i64>> {
        let b = WeylMatrix::from_rows(&self.basis);
        let inv = integer_inverse(&b);
        (0..b.size()).map(|k| inv.column(k)).collect()
    }
}

/// Inverse of a unimodular integer matrix by adjugate.
fn integer_inverse(m: &WeylMatrix) -> WeylMatrix {
    let n = m.size();
    let det = m.det();
    assert!(det == 1 || det == -1, "root basis must be unimodular");
    let rows = m.rows();
    let cof = |r: usize, c: usize| -> i64 {
        if n == 1 {
            return 1;
        }
        let minor: Vec<Vec<i64>> = rows
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != r)
            .map(|(_, row)| row.iter().enumerate().filter(|&(j, _)| j != c).map(|(_, &x)| x).collect())
            .collect();
        let sign = if (r + c).is_multiple_of(2) { 1 } else { -1 };
        sign * WeylMatrix::from_rows(&minor).det()
    };
    let inv: Vec<Vec<i64>> = (0..n).map(|r| (0..n).map(|c| cof(c, r) * det).collect()).collect();
    WeylMatrix::from_rows(&inv)
}

fn chamber_for(g: &CartanGraph, base: usize, word: &[usize], object: usize) -> Chamber {
    // ψ_X = ψ ∘ w⁻¹ and w⁻¹ = s_{i_1}^{X_0} ⋯ s_{i_k}^{X_{k-1}}
    let mut inv = WeylMatrix::identity(g.rank());
    let mut z = base;
    for &i in word {
        inv = &inv * &simple_reflection(g.matrix(z), i);
        z = g.reflect(z, i).expect("explored edge");
    }
    let basis = (0..g.rank()).map(|k| inv.column(k)).collect();
    Chamber { object, word: word.to_vec(), basis }
}

/// One chamber per morphism out of `base` with a word of length `≤ bound`
/// (distinct `(object, matrix)` pairs), base chamber first.
pub fn realize(g: &CartanGraph, base: usize, bound: usize) -> Vec<Chamber> {
    morphisms_from(g, base, bound).iter().map(|m| chamber_for(g, base, &m.word, m.target)).collect()
}

/// One chamber per object, which needs a connected graph with at most one
/// morphism between any two objects within the bound.
pub fn realize_by_object(g: &CartanGraph, base: usize, bound: usize) -> Result<Vec<Chamber>> {
    let mut first: BTreeMap<usize, (WeylMatrix, Vec<usize>)> = BTreeMap::new();
    for m in morphisms_from(g, base, bound) {
        if let Some((mat, word)) = first.get(&m.target) {
            if *mat != m.matrix {
                return Err(Error::NotSimplyConnected { object: m.target, first: word.clone(), second: m.word });
            }
        } else {
            first.insert(m.target, (m.matrix, m.word));
        }
    }
    if let Some(x) = (0..g.object_count()).find(|x| !first.contains_key(x)) {
        return Err(Error::NotConnected(x));
    }
    Ok(first.into_iter().map(|(x, (_, word))| chamber_for(g, base, &word, x)).collect())
}
