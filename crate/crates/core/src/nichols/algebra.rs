use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, RwLock};

use crate::error::{Error, Result};
use crate::exact::{CycNumber, Matrix};
use crate::groupdata::{mult_scalar, GroupElement, ThreeCocycle};
use crate::ydmod::{tensor_power_scalar, YDModule};

/// Sparse coordinates over a [`Component`] basis.
pub type SparseVec = BTreeMap<usize, CycNumber>;

/// Resource limits for Nichols-algebra computations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NicholsCaps {
    /// Largest `m` tried when searching for `ad(M_i)^{m+1}(M_j) = 0`.
    pub max_ad_cap: usize,
    /// Largest tensor component (basis size) that may be built.
    pub max_matrix_dim: usize,
}

impl Default for NicholsCaps {
    fn default() -> Self {
        NicholsCaps { max_ad_cap: 8, max_matrix_dim: 4096 }
    }
}

/// The multidegree-`counts` part of `V^{⊗n}` for `V = M_0 ⊕ … ⊕ M_{θ−1}`:
/// the direct sum, over all slot patterns with those counts, of the
/// left-nested products `M_{p_1} ⊗ … ⊗ M_{p_n}`.
///
/// Basis: patterns in lexicographic order, then factor indices with the last
/// factor varying fastest.
#[derive(Debug)]
pub struct Component {
    counts: Vec<usize>,
    n: usize,
    patterns: Vec<Vec<usize>>,
    pattern_index: HashMap<Vec<usize>, usize>,
    offsets: Vec<usize>,
    dims: Vec<usize>,
    /// `[pattern][i] = (pattern after swapping i, i+1; associator scalar)`.
    sigma: Vec<Vec<(usize, CycNumber)>>,
    pattern_degrees: Vec<Vec<GroupElement>>,
}

impl Component {
    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    /// Tensor degree `n`.
    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        *self.offsets.last().expect("offsets are never empty")
    }

    pub fn patterns(&self) -> &[Vec<usize>] {
        &self.patterns
    }

    pub fn pattern_of(&self, pattern: &[usize]) -> Option<usize> {
        self.pattern_index.get(pattern).copied()
    }

    pub fn decode(&self, index: usize) -> (usize, Vec<usize>) {
        let p = self.offsets.partition_point(|&o| o <= index) - 1;
        let mut rem = index - self.offsets[p];
        let pat = &self.patterns[p];
        let mut idx = vec![0; self.n];
        for k in (0..self.n).rev() {
            let d = self.dims[pat[k]];
            idx[k] = rem % d;
            rem /= d;
        }
        (p, idx)
    }

    pub fn encode(&self, pattern: usize, idx: &[usize]) -> usize {
        let pat = &self.patterns[pattern];
        let local = idx.iter().zip(pat).fold(0, |acc, (&i, &m)| acc * self.dims[m] + i);
        self.offsets[pattern] + local
    }

    /// Basis indices belonging to one pattern.
    pub fn pattern_range(&self, pattern: usize) -> std::ops::Range<usize> {
        self.offsets[pattern]..self.offsets[pattern + 1]
    }
}

/// The tensor algebra `T(V)` of a formal direct sum `V = ⊕ M_s` of modules
/// over one cocycle, with the braid-group action, symmetrizers and products
/// needed to work in the Nichols algebra `B(V)`.
///
/// Components and dense symmetrizers are cached; each cache entry is written
/// once.
pub struct TensorAlgebra {
    mods: Vec<Arc<YDModule>>,
    cocycle: Arc<ThreeCocycle>,
    caps: NicholsCaps,
    /// `[m][x][b]`: nonzero entries `(row, value)` of column `b` of `ρ_m(x)`.
    columns: Vec<Vec<Vec<Vec<(usize, CycNumber)>>>>,
    components: RwLock<HashMap<Vec<usize>, Arc<Component>>>,
    symmetrizers: RwLock<HashMap<Vec<usize>, Arc<SymmetrizerEntry>>>,
}

/// Dense `[n]!` on one component and its rank.
#[derive(Debug)]
pub struct SymmetrizerEntry {
    pub matrix: Matrix,
    pub rank: usize,
}

impl TensorAlgebra {
    pub fn new(mods: Vec<Arc<YDModule>>, caps: NicholsCaps) -> Result<Self> {
        let first = mods.first().ok_or_else(|| Error::Invalid("tensor algebra of an empty sum".into()))?;
        let cocycle = Arc::clone(first.cocycle());
        if mods.iter().any(|m| !Arc::ptr_eq(m.cocycle(), &cocycle)) {
            return Err(Error::Invalid("summands do not share a cocycle".into()));
        }
        let group = cocycle.group().clone();
        let columns = mods
            .iter()
            .map(|m| {
                group
                    .elements()
                    .map(|x| {
                        let a = m.action(x);
                        (0..m.dim())
                            .map(|b| {
                                (0..m.dim())
                                    .filter(|&r| !a[(r, b)].is_zero())
                                    .map(|r| (r, a[(r, b)].clone()))
                                    .collect()
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        Ok(TensorAlgebra {
            mods,
            cocycle,
            caps,
            columns,
            components: RwLock::new(HashMap::new()),
            symmetrizers: RwLock::new(HashMap::new()),
        })
    }

    pub fn modules(&self) -> &[Arc<YDModule>] {
        &self.mods
    }

    pub fn cocycle(&self) -> &Arc<ThreeCocycle> {
        &self.cocycle
    }

    pub fn caps(&self) -> NicholsCaps {
        self.caps
    }

    pub fn order(&self) -> u32 {
        self.cocycle.order()
    }

    fn zero(&self) -> CycNumber {
        CycNumber::zero(self.order())
    }

    /// The component of the given multidegree; fails with
    /// [`Error::ResourceCap`] if its basis exceeds `max_matrix_dim`.
    pub fn component(&self, counts: &[usize]) -> Result<Arc<Component>> {
        if counts.len() != self.mods.len() {
            return Err(Error::DimensionMismatch(format!(
                "multidegree of length {} for {} summands",
                counts.len(),
                self.mods.len()
            )));
        }
        if let Some(c) = self.components.read().expect("cache lock").get(counts) {
            return Ok(Arc::clone(c));
        }
        let n: usize = counts.iter().sum();
        let dims: Vec<usize> = self.mods.iter().map(|m| m.dim()).collect();
        let size = multinomial(counts).saturating_mul(counts.iter().zip(&dims).map(|(&c, &d)| d.pow(c as u32)).product());
        if size > self.caps.max_matrix_dim {
            return Err(Error::ResourceCap {
                what: format!("tensor component {counts:?}"),
                needed: size,
                limit: self.caps.max_matrix_dim,
            });
        }
        let mut patterns = Vec::new();
        gen_patterns(&mut counts.to_vec(), &mut Vec::with_capacity(n), n, &mut patterns);
        let pattern_index: HashMap<_, _> = patterns.iter().enumerate().map(|(k, p)| (p.clone(), k)).collect();
        let mut offsets = vec![0];
        for p in &patterns {
            let size: usize = p.iter().map(|&m| dims[m]).product();
            offsets.push(offsets.last().unwrap() + size);
        }
        let group = self.cocycle.group();
        let pattern_degrees: Vec<Vec<GroupElement>> =
            patterns.iter().map(|p| p.iter().map(|&m| self.mods[m].degree()).collect()).collect();
        let sigma = patterns
            .iter()
            .zip(&pattern_degrees)
            .map(|(p, degs)| {
                (0..n.saturating_sub(1))
                    .map(|i| {
                        let mut q = p.clone();
                        q.swap(i, i + 1);
                        let l = group.product(&degs[..i]);
                        let s = self.cocycle.eval(l, degs[i + 1], degs[i])
                            * self.cocycle.eval_inv(l, degs[i], degs[i + 1]);
                        (pattern_index[&q], s)
                    })
                    .collect()
            })
            .collect();
        let comp = Arc::new(Component {
            counts: counts.to_vec(),
            n,
            patterns,
            pattern_index,
            offsets,
            dims,
            sigma,
            pattern_degrees,
        });
        let mut cache = self.components.write().expect("cache lock");
        Ok(Arc::clone(cache.entry(counts.to_vec()).or_insert(comp)))
    }

    /// All multidegrees of total degree `n`, lexicographically descending.
    pub fn multidegrees(&self, n: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        compositions(n, self.mods.len(), &mut Vec::new(), &mut out);
        out
    }

    /// `σ_i` (zero-based: swaps factors `i`, `i+1`) on a sparse vector.
    ///
    /// On the left-nested tensor `((L⊗v)⊗w)⊗R` with `|L| = ℓ`, `|v| = g`,
    /// `|w| = h`: `σ_i = Φ(ℓ,h,g)/Φ(ℓ,g,h) · ((L⊗(g▷w))⊗v)⊗R`.
    pub fn sigma(&self, comp: &Component, i: usize, v: &SparseVec) -> SparseVec {
        assert!(i + 1 < comp.n, "σ index out of range");
        let mut out = SparseVec::new();
        for (&b, coef) in v {
            let (p, idx) = comp.decode(b);
            let (q, s) = &comp.sigma[p][i];
            let pat = &comp.patterns[p];
            let g = self.mods[pat[i]].degree();
            let col = &self.columns[pat[i + 1]][g.index()][idx[i + 1]];
            let base = coef * s;
            let mut new_idx = idx.clone();
            new_idx[i + 1] = idx[i];
            for (r, a) in col {
                new_idx[i] = *r;
                add_to(&mut out, comp.encode(*q, &new_idx), &(&base * a));
            }
        }
        out
    }

    /// Dense `σ_i` on a whole component.
    pub fn braid_matrix(&self, comp: &Component, i: usize) -> Result<Matrix> {
        if i + 1 >= comp.n {
            return Err(Error::IndexOutOfRange { index: i + 1, range: format!("1..{}", comp.n) });
        }
        Ok(self.dense(comp, |v| self.sigma(comp, i, v)))
    }

    fn dense(&self, comp: &Component, f: impl Fn(&SparseVec) -> SparseVec) -> Matrix {
        let d = comp.dim();
        let mut m = Matrix::zeros(d, d, self.order());
        for c in 0..d {
            let mut e = SparseVec::new();
            e.insert(c, CycNumber::one(self.order()));
            for (r, x) in f(&e) {
                m[(r, c)] = x;
            }
        }
        m
    }

    /// `[n]!·v` via `[n]! = T_2 T_3 ⋯ T_n`,
    /// `T_k = 1 + σ_{k−1} + σ_{k−1}σ_{k−2} + … + σ_{k−1}⋯σ_1`, each `T_k`
    /// evaluated in Horner form `1 + σ_{k−1}(1 + σ_{k−2}(⋯(1 + σ_1)))`.
    pub fn symmetrize(&self, comp: &Component, v: &SparseVec) -> SparseVec {
        let mut cur = v.clone();
        for k in (2..=comp.n).rev() {
            let mut acc = cur.clone();
            for i in 0..k - 1 {
                let s = self.sigma(comp, i, &acc);
                acc = cur.clone();
                add_assign(&mut acc, &s);
            }
            cur = acc;
        }
        cur
    }

    /// Dense `[n]!` on a component, cached.
    pub fn symmetrizer(&self, comp: &Component) -> Arc<SymmetrizerEntry> {
        if let Some(e) = self.symmetrizers.read().expect("cache lock").get(&comp.counts) {
            return Arc::clone(e);
        }
        let matrix = self.dense(comp, |v| self.symmetrize(comp, v));
        let rank = matrix.rank();
        let entry = Arc::new(SymmetrizerEntry { matrix, rank });
        let mut cache = self.symmetrizers.write().expect("cache lock");
        Arc::clone(cache.entry(comp.counts.clone()).or_insert(entry))
    }

    /// Sum of `σ_w` over all permutations `w`, each lifted along the reduced
    /// word produced by bubble sort. Independent of the recursion used by
    /// [`TensorAlgebra::symmetrize`]; meant as a cross-check for small `n`.
    pub fn symmetrizer_by_permutations(&self, comp: &Component) -> Matrix {
        let n = comp.n;
        let d = comp.dim();
        let mut total = Matrix::zeros(d, d, self.order());
        for perm in permutations(n) {
            let word = reduced_word(&perm);
            let m = self.dense(comp, |v| {
                word.iter().rev().fold(v.clone(), |acc, &i| self.sigma(comp, i, &acc))
            });
            total = &total + &m;
        }
        total
    }

    /// Dense action of `x` on a whole component.
    pub fn action_matrix(&self, comp: &Component, x: GroupElement) -> Matrix {
        self.dense(comp, |v| self.act(comp, x, v))
    }

    /// Action of `x` on a component vector (left-nested tensor action).
    pub fn act(&self, comp: &Component, x: GroupElement, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (&b, coef) in v {
            let (p, idx) = comp.decode(b);
            let pat = &comp.patterns[p];
            let s = coef * &tensor_power_scalar(&self.cocycle, x, &comp.pattern_degrees[p]);
            let mut partial: Vec<(Vec<usize>, CycNumber)> = vec![(Vec::with_capacity(comp.n), s)];
            for (k, &m) in pat.iter().enumerate() {
                let col = &self.columns[m][x.index()][idx[k]];
                partial = partial
                    .into_iter()
                    .flat_map(|(pre, c)| {
                        col.iter().map(move |(r, a)| {
                            let mut p2 = pre.clone();
                            p2.push(*r);
                            (p2, &c * a)
                        })
                    })
                    .collect();
            }
            for (new_idx, c) in partial {
                add_to(&mut out, comp.encode(p, &new_idx), &c);
            }
        }
        out
    }

    /// Product in `T(V)`: concatenation of left-nested tensors followed by
    /// the rebracketing `(L_u)(L_w) → L_{uw}`.
    pub fn multiply(
        &self,
        cu: &Component,
        u: &SparseVec,
        cw: &Component,
        w: &SparseVec,
    ) -> Result<(Arc<Component>, SparseVec)> {
        let counts: Vec<usize> = cu.counts.iter().zip(&cw.counts).map(|(a, b)| a + b).collect();
        let comp = self.component(&counts)?;
        let mut out = SparseVec::new();
        for (&bu, x) in u {
            let (pu, iu) = cu.decode(bu);
            for (&bw, y) in w {
                let (pw, iw) = cw.decode(bw);
                let pat: Vec<usize> = cu.patterns[pu].iter().chain(&cw.patterns[pw]).copied().collect();
                let idx: Vec<usize> = iu.iter().chain(&iw).copied().collect();
                let s = mult_scalar(&self.cocycle, &cu.pattern_degrees[pu], &cw.pattern_degrees[pw]);
                let q = comp.pattern_of(&pat).expect("pattern belongs to the sum component");
                add_to(&mut out, comp.encode(q, &idx), &(&(x * y) * &s));
            }
        }
        Ok((comp, out))
    }

    /// The degree-one component of summand `s` and the basis vector `e_b`.
    pub fn generator(&self, s: usize, b: usize) -> Result<(Arc<Component>, SparseVec)> {
        let mut counts = vec![0; self.mods.len()];
        counts[s] = 1;
        let comp = self.component(&counts)?;
        let mut v = SparseVec::new();
        v.insert(comp.encode(0, &[b]), CycNumber::one(self.order()));
        Ok((comp, v))
    }

    /// Braided commutator `ad(a)(x) = a·x − (g▷x)·a` for `a = e_b` in summand
    /// `s` of degree `g`.
    pub fn ad(&self, s: usize, b: usize, comp: &Component, x: &SparseVec) -> Result<(Arc<Component>, SparseVec)> {
        let (ca, a) = self.generator(s, b)?;
        let (out_comp, mut left) = self.multiply(&ca, &a, comp, x)?;
        let gx = self.act(comp, self.mods[s].degree(), x);
        let (_, right) = self.multiply(comp, &gx, &ca, &a)?;
        for (k, v) in right {
            add_to(&mut left, k, &-v);
        }
        Ok((out_comp, left))
    }

    pub fn to_dense(&self, comp: &Component, v: &SparseVec) -> Vec<CycNumber> {
        let mut out = vec![self.zero(); comp.dim()];
        for (&k, x) in v {
            out[k] = x.clone();
        }
        out
    }
}

pub(crate) fn add_to(v: &mut SparseVec, k: usize, x: &CycNumber) {
    if x.is_zero() {
        return;
    }
    match v.get_mut(&k) {
        Some(y) => {
            *y = &*y + x;
            if y.is_zero() {
                v.remove(&k);
            }
        }
        None => {
            v.insert(k, x.clone());
        }
    }
}

pub(crate) fn add_assign(v: &mut SparseVec, w: &SparseVec) {
    for (&k, x) in w {
        add_to(v, k, x);
    }
}

fn multinomial(counts: &[usize]) -> usize {
    let mut acc: u128 = 1;
    let mut n = 0u128;
    for &c in counts {
        for k in 1..=c as u128 {
            n += 1;
            acc = acc * n / k;
        }
    }
    usize::try_from(acc).unwrap_or(usize::MAX)
}

fn gen_patterns(left: &mut Vec<usize>, cur: &mut Vec<usize>, n: usize, out: &mut Vec<Vec<usize>>) {
    if cur.len() == n {
        out.push(cur.clone());
        return;
    }
    for s in 0..left.len() {
        if left[s] > 0 {
            left[s] -= 1;
            cur.push(s);
            gen_patterns(left, cur, n, out);
            cur.pop();
            left[s] += 1;
        }
    }
}

fn compositions(n: usize, parts: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if cur.len() + 1 == parts {
        cur.push(n);
        out.push(cur.clone());
        cur.pop();
        return;
    }
    for k in (0..=n).rev() {
        cur.push(k);
        compositions(n - k, parts, cur, out);
        cur.pop();
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    heap_permute(n, &mut cur, &mut out);
    out
}

fn heap_permute(k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if k <= 1 {
        out.push(cur.clone());
        return;
    }
    for i in 0..k {
        heap_permute(k - 1, cur, out);
        if k.is_multiple_of(2) {
            cur.swap(i, k - 1);
        } else {
            cur.swap(0, k - 1);
        }
    }
}

/// A reduced word `[i_1, …, i_l]` with `perm = s_{i_1} ⋯ s_{i_l}`, where
/// `s_i` swaps positions `i`, `i+1`; found by bubble-sorting `perm`.
fn reduced_word(perm: &[usize]) -> Vec<usize> {
    let mut p = perm.to_vec();
    let mut swaps = Vec::new();
    loop {
        let Some(i) = (0..p.len().saturating_sub(1)).find(|&i| p[i] > p[i + 1]) else {
            break;
        };
        p.swap(i, i + 1);
        swaps.push(i);
    }
    // sorting applied s_{swaps[0]} first; undo in reverse
    swaps.reverse();
    swaps
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn combinatorics() {
        assert_eq!(multinomial(&[2, 1]), 3);
        assert_eq!(multinomial(&[2, 2]), 6);
        assert_eq!(permutations(4).len(), 24);
        let mut out = Vec::new();
        compositions(2, 3, &mut Vec::new(), &mut out);
        assert_eq!(out.len(), 6);
        assert_eq!(out[0], vec![2, 0, 0]);
        let mut pats = Vec::new();
        gen_patterns(&mut vec![1, 2], &mut Vec::new(), 3, &mut pats);
        assert_eq!(pats, vec![vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]]);
    }

    #[test]
    fn reduced_words_cover_the_symmetric_group_once() {
        let mut seen = std::collections::HashSet::new();
        for perm in permutations(4) {
            let word = reduced_word(&perm);
            let inversions = (0..4)
                .flat_map(|i| (i + 1..4).map(move |j| (i, j)))
                .filter(|&(i, j)| perm[i] > perm[j])
                .count();
            assert_eq!(word.len(), inversions);
            let mut p: Vec<usize> = (0..4).collect();
            for &i in word.iter().rev() {
                p.swap(i, i + 1);
            }
            assert!(seen.insert(p));
        }
        assert_eq!(seen.len(), 24);
    }
}
