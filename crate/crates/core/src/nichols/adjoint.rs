use std::sync::Arc;

use super::algebra::{Component, NicholsCaps, SparseVec, TensorAlgebra};
use crate::error::{Error, Result};
use crate::exact::{CycNumber, Matrix};
use crate::ydmod::YDModule;

/// An element of `T(V)` living in one multidegree component.
#[derive(Debug, Clone)]
pub struct TensorElement {
    pub component: Arc<Component>,
    pub coeffs: SparseVec,
}

/// `true` iff `[n]!·v = 0`, i.e. `v` vanishes in the Nichols algebra.
pub fn is_zero_in_nichols(alg: &TensorAlgebra, v: &TensorElement) -> bool {
    alg.symmetrize(&v.component, &v.coeffs).is_empty()
}

/// One level `ad(M_i)^n(M_j)` of the adjoint iteration inside
/// `T(M_i ⊕ M_j)`, multidegree `(n, 1)`.
///
/// `vectors` are tensor representatives whose classes in the Nichols algebra
/// form a basis of the level; `images` are their symmetrizations, which span
/// an isomorphic copy inside `T(V)`.
#[derive(Debug, Clone)]
pub struct AdLevel {
    pub n: usize,
    pub component: Arc<Component>,
    pub vectors: Vec<SparseVec>,
    pub images: Vec<SparseVec>,
}

impl AdLevel {
    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_zero(&self) -> bool {
        self.vectors.is_empty()
    }

    /// The images as columns of a dense matrix over the component basis.
    pub fn image_matrix(&self, alg: &TensorAlgebra) -> Matrix {
        let cols: Vec<Vec<CycNumber>> = self.images.iter().map(|v| alg.to_dense(&self.component, v)).collect();
        Matrix::from_columns(self.component.dim(), alg.order(), &cols)
    }
}

/// Keeps the candidates whose symmetrizations are linearly independent.
fn independent(alg: &TensorAlgebra, comp: &Arc<Component>, candidates: Vec<SparseVec>) -> (Vec<SparseVec>, Vec<SparseVec>) {
    let images: Vec<SparseVec> = candidates.iter().map(|v| alg.symmetrize(comp, v)).collect();
    let nonzero: Vec<usize> = (0..images.len()).filter(|&k| !images[k].is_empty()).collect();
    if nonzero.is_empty() {
        return (Vec::new(), Vec::new());
    }
    let cols: Vec<Vec<CycNumber>> = nonzero.iter().map(|&k| alg.to_dense(comp, &images[k])).collect();
    let m = Matrix::from_columns(comp.dim(), alg.order(), &cols);
    let keep = m.independent_columns();
    let vectors = keep.iter().map(|&c| candidates[nonzero[c]].clone()).collect();
    let imgs = keep.iter().map(|&c| images[nonzero[c]].clone()).collect();
    (vectors, imgs)
}

/// Level 0 (`M_j` itself) of the iteration in `alg`, whose summands are
/// `(M_i, M_j)` at positions `(si, sj)`.
pub fn ad_level_zero(alg: &TensorAlgebra, sj: usize) -> Result<AdLevel> {
    let dim = alg.modules()[sj].dim();
    let mut vectors = Vec::with_capacity(dim);
    let mut comp = None;
    for b in 0..dim {
        let (c, v) = alg.generator(sj, b)?;
        comp = Some(c);
        vectors.push(v);
    }
    let comp = comp.expect("modules have positive dimension");
    Ok(AdLevel { n: 0, component: comp, images: vectors.clone(), vectors })
}

/// The next level: `ad(a)(w)` for every basis vector `a` of summand `si` and
/// representative `w`, reduced to an independent set modulo the kernel of
/// the symmetrizer.
pub fn ad_next(alg: &TensorAlgebra, si: usize, level: &AdLevel) -> Result<AdLevel> {
    let dim = alg.modules()[si].dim();
    let mut candidates = Vec::new();
    let mut comp = None;
    for w in &level.vectors {
        for b in 0..dim {
            let (c, v) = alg.ad(si, b, &level.component, w)?;
            comp = Some(c);
            candidates.push(v);
        }
    }
    let comp = match comp {
        Some(c) => c,
        None => {
            let mut counts = level.component.counts().to_vec();
            counts[si] += 1;
            alg.component(&counts)?
        }
    };
    let (vectors, images) = independent(alg, &comp, candidates);
    Ok(AdLevel { n: level.n + 1, component: comp, vectors, images })
}

fn pair_algebra(mi: &YDModule, mj: &YDModule, caps: NicholsCaps) -> Result<TensorAlgebra> {
    TensorAlgebra::new(vec![Arc::new(mi.clone()), Arc::new(mj.clone())], caps)
}

/// `ad(M_i)^n(M_j)` inside `T(M_i ⊕ M_j)`.
pub fn ad_iterate(mi: &YDModule, mj: &YDModule, n: usize) -> Result<AdLevel> {
    let alg = pair_algebra(mi, mj, NicholsCaps::default())?;
    let mut level = ad_level_zero(&alg, 1)?;
    for _ in 0..n {
        level = ad_next(&alg, 0, &level)?;
    }
    Ok(level)
}

/// All levels `0..=m` of the iteration, stopping at the first level that
/// vanishes in the Nichols algebra. Returns the levels and `m`, the index of
/// the last nonzero level; fails with [`Error::CapExceeded`] if no level up
/// to `max_ad_cap` vanishes.
pub fn ad_levels(alg: &TensorAlgebra, si: usize, sj: usize) -> Result<(Vec<AdLevel>, usize)> {
    let cap = alg.caps().max_ad_cap;
    let mut levels = vec![ad_level_zero(alg, sj)?];
    for k in 1..=cap {
        let next = ad_next(alg, si, levels.last().expect("nonempty"))?;
        if next.is_zero() {
            return Ok((levels, k - 1));
        }
        levels.push(next);
    }
    Err(Error::CapExceeded { i: si, j: sj, cap })
}

/// `m_ij`: the largest `m` with `ad(M_i)^m(M_j) ≠ 0` in the Nichols algebra
/// of `M_i ⊕ M_j`, so that `a_ij = −m_ij`.
pub fn cartan_entry(mi: &YDModule, mj: &YDModule, caps: NicholsCaps) -> Result<usize> {
    let alg = pair_algebra(mi, mj, caps)?;
    ad_levels(&alg, 0, 1).map(|(_, m)| m)
}
