use num_integer::Integer;
use serde::Serialize;

use super::chamber::{realize, Chamber};
use crate::cartangraph::{is_standard, CartanGraph};
use crate::error::{Error, Result};
use crate::exact::Matrix;
use crate::reflect::CartanMatrix;
use crate::weylroots::{real_roots, WeylMatrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ConeType {
    Finite,
    Affine,
    Indefinite,
}

impl std::fmt::Display for ConeType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            ConeType::Finite => "finite",
            ConeType::Affine => "affine",
            ConeType::Indefinite => "indefinite",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TitsReport {
    pub classification: ConeType,
    /// Primitive strictly positive `v` with `Av = 0`.
    pub null_vector: Option<Vec<i64>>,
    /// `δ = Σ v_i φ_i` as a coordinate vector.
    pub delta: Option<Vec<i64>>,
    pub principal_minors_positive: bool,
    /// The real roots at the base stop growing before the bound.
    pub roots_closed: bool,
    /// Finite type by minors agrees with root closure, and a positive null
    /// vector excludes closure.
    pub consistent: bool,
    pub bound: usize,
    pub chambers: usize,
    /// Hyperplanes `φ^⊥` from the roots found within the bound.
    pub hyperplanes: usize,
    /// Words of chambers with an extreme ray outside `δ ≥ 0` or a barycentric
    /// generator with `δ ≤ 0` (affine only).
    pub half_space_failures: Vec<Vec<usize>>,
    /// `Σ v_i β_i` equals `δ` for every chamber (affine only).
    pub sum_invariant: Option<bool>,
}

impl TitsReport {
    pub fn half_space_verified(&self) -> bool {
        self.classification == ConeType::Affine && self.half_space_failures.is_empty()
    }
}

fn principal_minors_positive(a: &CartanMatrix) -> bool {
    let n = a.size();
    (1u32..1 << n).all(|mask| {
        let idx: Vec<usize> = (0..n).filter(|&k| mask & (1 << k) != 0).collect();
        let rows: Vec<Vec<i64>> = idx.iter().map(|&i| idx.iter().map(|&j| a.get(i, j)).collect()).collect();
        WeylMatrix::from_rows(&rows).det() > 0
    })
}

/// Primitive strictly positive integer `v` spanning `ker A`, if the kernel is
/// a line through the open positive orthant.
pub fn positive_null_vector(a: &CartanMatrix) -> Option<Vec<i64>> {
    let m = Matrix::from_ints(1, a.rows());
    let rk = m.rank_kernel();
    if rk.kernel.len() != 1 {
        return None;
    }
    let q: Vec<_> = rk.kernel[0].iter().map(|c| c.to_rational().expect("rational kernel")).collect();
    let lcm = q.iter().fold(num_bigint::BigInt::from(1), |acc, r| acc.lcm(r.denom()));
    let ints: Vec<num_bigint::BigInt> = q.iter().map(|r| (r * &lcm).to_integer()).collect();
    let g = ints.iter().fold(num_bigint::BigInt::from(0), |acc, x| acc.gcd(x));
    let mut v: Vec<i64> = ints.iter().map(|x| i64::try_from(x / &g).expect("small null vector")).collect();
    if v.iter().all(|&x| x < 0) {
        v.iter_mut().for_each(|x| *x = -*x);
    }
    v.iter().all(|&x| x > 0).then_some(v)
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Classifies the Tits cone of a standard graph and, in the affine case,
/// checks that every chamber from words of length `≤ bound` lies in `δ > 0`.
pub fn classify_cone(g: &CartanGraph, base: usize, bound: usize) -> Result<(TitsReport, Vec<Chamber>)> {
    if !is_standard(g) {
        return Err(Error::Unsupported("Tits cone of a nonstandard graph".into()));
    }
    let a = g.matrix(base);
    let minors = principal_minors_positive(a);
    let null_vector = positive_null_vector(a);
    let roots = real_roots(g, base, bound);
    let roots_closed = bound > 0 && real_roots(g, base, bound - 1).roots == roots.roots;
    let classification = match (&null_vector, minors) {
        (Some(_), _) => ConeType::Affine,
        (None, true) => ConeType::Finite,
        (None, false) => ConeType::Indefinite,
    };
    let consistent = (classification == ConeType::Finite) == roots_closed;
    let chambers = realize(g, base, bound);
    let hyperplanes = roots.roots.iter().filter(|v| v.iter().all(|&c| c >= 0)).count();
    let mut half_space_failures = Vec::new();
    let mut sum_invariant = None;
    if let Some(v) = &null_vector {
        let mut invariant = true;
        for ch in &chambers {
            let rays = ch.rays();
            let values: Vec<i64> = rays.iter().map(|r| dot(v, r)).collect();
            if values.iter().any(|&x| x < 0) || values.iter().sum::<i64>() <= 0 {
                half_space_failures.push(ch.word.clone());
            }
            let mut sum = vec![0; v.len()];
            for (vi, b) in v.iter().zip(&ch.basis) {
                for (s, c) in sum.iter_mut().zip(b) {
                    *s += vi * c;
                }
            }
            invariant &= &sum == v;
        }
        sum_invariant = Some(invariant);
    }
    let report = TitsReport {
        classification,
        delta: null_vector.clone(),
        null_vector,
        principal_minors_positive: minors,
        roots_closed,
        consistent,
        bound,
        chambers: chambers.len(),
        hyperplanes,
        half_space_failures,
        sum_invariant,
    };
    Ok((report, chambers))
}
