use std::sync::Arc;

use super::algebra::{NicholsCaps, TensorAlgebra};
use crate::error::{Error, Result};
use crate::exact::{CycNumber, Matrix};
use crate::groupdata::{coherence_scalar, BracketTree};
use crate::ydmod::YDModule;

fn shared(mods: &[&YDModule]) -> Vec<Arc<YDModule>> {
    mods.iter().map(|m| Arc::new((*m).clone())).collect()
}

/// `σ_i` (one-based, `1 ≤ i < n`) on the left-nested product of `slots`, as
/// a matrix into the product with slots `i`, `i+1` exchanged.
pub fn braid_op(slots: &[&YDModule], i: usize) -> Result<Matrix> {
    let n = slots.len();
    if i == 0 || i >= n {
        return Err(Error::IndexOutOfRange { index: i, range: format!("1..{n}") });
    }
    // summand s = slot s, so the pattern (0, 1, …, n−1) is the input
    let alg = TensorAlgebra::new(shared(slots), NicholsCaps { max_ad_cap: 0, max_matrix_dim: usize::MAX })?;
    let counts = vec![1; n];
    let comp = alg.component(&counts)?;
    let src: Vec<usize> = (0..n).collect();
    let mut dst = src.clone();
    dst.swap(i - 1, i);
    let (ps, pd) = (comp.pattern_of(&src).expect("pattern"), comp.pattern_of(&dst).expect("pattern"));
    let (rs, rd) = (comp.pattern_range(ps), comp.pattern_range(pd));
    let mut m = Matrix::zeros(rd.len(), rs.len(), alg.order());
    for (c, b) in rs.clone().enumerate() {
        let mut e = super::SparseVec::new();
        e.insert(b, CycNumber::one(alg.order()));
        for (r, x) in alg.sigma(&comp, i - 1, &e) {
            m[(r - rd.start, c)] = x;
        }
    }
    Ok(m)
}

/// `[n]!` on `V^{⊗n}` for `V = ⊕ mods`; the basis is the concatenation of
/// the multidegree components in the order of
/// [`TensorAlgebra::multidegrees`].
pub fn symmetrizer(mods: &[&YDModule], n: usize, caps: NicholsCaps) -> Result<Matrix> {
    if n == 0 {
        return Ok(Matrix::identity(1, mods.first().map_or(1, |m| m.order())));
    }
    let alg = TensorAlgebra::new(shared(mods), caps)?;
    let blocks = alg
        .multidegrees(n)
        .iter()
        .map(|c| alg.component(c).map(|comp| alg.symmetrizer(&comp)))
        .collect::<Result<Vec<_>>>()?;
    let total: usize = blocks.iter().map(|b| b.matrix.rows()).sum();
    let mut out = Matrix::zeros(total, total, alg.order());
    let mut off = 0;
    for b in &blocks {
        let d = b.matrix.rows();
        for r in 0..d {
            for c in 0..d {
                if !b.matrix[(r, c)].is_zero() {
                    out[(off + r, off + c)] = b.matrix[(r, c)].clone();
                }
            }
        }
        off += d;
    }
    Ok(out)
}

/// `dim B(V)(n) = rank [n]!` for `n = 0..=max_deg`, `V = ⊕ mods`.
pub fn nichols_dims(mods: &[&YDModule], max_deg: usize, caps: NicholsCaps) -> Result<Vec<usize>> {
    let alg = TensorAlgebra::new(shared(mods), caps)?;
    nichols_dims_in(&alg, max_deg)
}

pub fn nichols_dims_in(alg: &TensorAlgebra, max_deg: usize) -> Result<Vec<usize>> {
    let mut dims = vec![1];
    for n in 1..=max_deg {
        let mut total = 0;
        for counts in alg.multidegrees(n) {
            let comp = alg.component(&counts)?;
            total += alg.symmetrizer(&comp).rank;
        }
        dims.push(total);
    }
    Ok(dims)
}

/// Nested bracketing `f₁(f₂(⋯(fₙv₁)⋯)vₙ)` used by the iterated evaluation
/// `V^{*⊗n} ⊗ V^{⊗n} → k`; factor `k` of the duals pairs with `v_{n+1−k}`.
fn nested(n: usize) -> BracketTree {
    let mut t = BracketTree::node(BracketTree::Leaf, BracketTree::Leaf);
    for _ in 1..n {
        t = BracketTree::node(BracketTree::Leaf, BracketTree::node(t, BracketTree::Leaf));
    }
    t
}

/// Gram matrix of `ω_n = ev ∘ (id ⊗ [n]!)` between `(V*)^{⊗n}` (rows, dual
/// basis) and `V^{⊗n}` (columns), both left-nested.
pub fn pairing_gram(v: &YDModule, n: usize) -> Result<Matrix> {
    if n == 0 {
        return Err(Error::Invalid("pairing is defined for n ≥ 1".into()));
    }
    let c = v.cocycle();
    let g = v.degree();
    let ginv = c.group().inv(g);
    let degrees: Vec<_> = std::iter::repeat_n(ginv, n).chain(std::iter::repeat_n(g, n)).collect();
    let from = BracketTree::node(BracketTree::left_comb(n), BracketTree::left_comb(n));
    let scale = coherence_scalar(c, &degrees, &from, &nested(n))?;
    let sym = symmetrizer(&[v], n, NicholsCaps { max_ad_cap: 0, max_matrix_dim: usize::MAX })?;
    let d = v.dim();
    let size = sym.rows();
    Ok(Matrix::from_fn(size, size, v.order(), |row, col| {
        // reverse the digits of `row`
        let mut rest = row;
        let mut rev = 0;
        for _ in 0..n {
            rev = rev * d + rest % d;
            rest /= d;
        }
        &scale * &sym[(rev, col)]
    }))
}
