use std::collections::BTreeSet;
use std::sync::Arc;

use super::*;
use crate::cartangraph::{explore, CartanGraph};
use crate::fixtures;
use crate::nichols::NicholsCaps;
use crate::reflect::{CartanMatrix, Catalog};
use crate::ydmod::ModuleTuple;

fn fixture_graph() -> CartanGraph {
    let c = fixtures::z2cubed_cocycle();
    let ms: Vec<_> = fixtures::z2cubed_modules_over(&c).into_iter().map(Arc::new).collect();
    let seed = ModuleTuple::from_shared(ms[..3].to_vec()).unwrap();
    explore(&seed, &Catalog::seeded(ms).unwrap(), NicholsCaps::default(), 256).unwrap()
}

fn cm(rows: &[Vec<i64>]) -> CartanMatrix {
    CartanMatrix::new(rows.to_vec()).unwrap()
}

/// Roots at `x` from every word of length `≤ bound` that ends at `x`, with
/// the matrix multiplied out along the word; no deduplication of states.
fn roots_by_words(g: &CartanGraph, x: usize, bound: usize) -> BTreeSet<Vec<i64>> {
    let mut out = BTreeSet::new();
    for y in 0..g.object_count() {
        let mut stack = vec![(y, WeylMatrix::identity(g.rank()), 0usize)];
        // (current object, matrix from y, length); the root is the inverse
        // image so track products of s along the word on the right
        while let Some((z, m, len)) = stack.pop() {
            if z == x {
                // m : y → x
                for i in 0..g.rank() {
                    out.insert(m.column(i));
                }
            }
            if len == bound {
                continue;
            }
            for i in 0..g.rank() {
                let w = g.reflect(z, i).unwrap();
                stack.push((w, &simple_reflection(g.matrix(z), i) * &m, len + 1));
            }
        }
    }
    out
}

/// `v = α + kδ` with `α ∈ ±{α₂, α₃, α₂+α₃}` and `δ = (1,1,1)`.
fn is_affine_a2_root(v: &[i64]) -> bool {
    let a: Vec<i64> = v.iter().map(|c| c - v[0]).collect();
    [[0, 1, 0], [0, 0, 1], [0, 1, 1], [0, -1, 0], [0, 0, -1], [0, -1, -1]].iter().any(|f| f[..] == a[..])
}

/// Affine `A₂` roots every word bound `L` must reach: each positive non-simple
/// root has a simple reflection lowering its height by at least one, so
/// positive roots of height `≤ L + 1` and negative roots of height `≥ −L`.
fn affine_a2_lower_window(bound: usize) -> BTreeSet<Vec<i64>> {
    let mut out = BTreeSet::new();
    let b = bound as i64;
    for x in -b - 1..=b + 1 {
        for y in -b - 1..=b + 1 {
            for z in -b - 1..=b + 1 {
                let v = vec![x, y, z];
                let h = x + y + z;
                let positive = v.iter().all(|&c| c >= 0);
                let negative = v.iter().all(|&c| c <= 0);
                if is_affine_a2_root(&v) && ((positive && h <= b + 1) || (negative && -h <= b)) {
                    out.insert(v);
                }
            }
        }
    }
    out
}

#[test]
fn simple_reflections() {
    let s = simple_reflection(&cm(&[vec![2]]), 0);
    assert_eq!(s, WeylMatrix::from_rows(&[vec![-1]]));
    let a = cm(&[vec![2, -1, -1], vec![-1, 2, -1], vec![-1, -1, 2]]);
    let s1 = simple_reflection(&a, 0);
    assert_eq!(s1.column(0), [-1, 0, 0]);
    assert_eq!(s1.column(1), [1, 1, 0]);
    assert_eq!(s1.column(2), [1, 0, 1]);
    for i in 0..3 {
        let s = simple_reflection(&a, i);
        assert!((&s * &s).is_identity());
        assert_eq!(s.det(), -1);
        let mut e = vec![0; 3];
        e[i] = 1;
        assert_eq!(s.apply(&e), e.iter().map(|c| -c).collect::<Vec<_>>());
    }
}

#[test]
fn inverse_rows_compose_to_identity() {
    let g = fixture_graph();
    for x in 0..g.object_count() {
        for i in 0..3 {
            let y = g.reflect(x, i).unwrap();
            let p = &simple_reflection(g.matrix(y), i) * &simple_reflection(g.matrix(x), i);
            assert!(p.is_identity());
        }
    }
}

#[test]
fn trivial_hom_sets() {
    let g = fixture_graph();
    let h = hom_enumerate(&g, 0, 0, 0);
    assert_eq!(h.len(), 1);
    assert!(h[0].matrix.is_identity());
    let y = g.find("(M1,M4,M5)").unwrap();
    let homs = hom_enumerate(&g, 0, y, 12);
    assert!(homs.iter().any(|m| m.word == [0]));
    // oracle: multiply every word of length ≤ 6 out by hand
    let mut words: BTreeSet<WeylMatrix> = BTreeSet::new();
    let mut stack = vec![(0usize, WeylMatrix::identity(3), 0usize)];
    while let Some((z, m, len)) = stack.pop() {
        if z == y {
            words.insert(m.clone());
        }
        if len < 6 {
            for i in 0..3 {
                stack.push((g.reflect(z, i).unwrap(), &simple_reflection(g.matrix(z), i) * &m, len + 1));
            }
        }
    }
    let found: BTreeSet<WeylMatrix> = hom_enumerate(&g, 0, y, 6).into_iter().map(|m| m.matrix).collect();
    assert_eq!(found, words);
}

#[test]
fn morphisms_into_are_walks() {
    let g = fixture_graph();
    for m in morphisms_into(&g, 3, 5) {
        assert_eq!(g.walk(m.source, &m.word), Some(3));
        let mut prod = WeylMatrix::identity(3);
        let mut z = m.source;
        for &i in &m.word {
            prod = &simple_reflection(g.matrix(z), i) * &prod;
            z = g.reflect(z, i).unwrap();
        }
        assert_eq!(prod, m.matrix);
    }
}

#[test]
fn fixture_roots_form_the_affine_window() {
    let g = fixture_graph();
    for bound in [0, 1, 4, 9] {
        let r = real_roots(&g, 0, bound);
        assert!(r.roots.iter().all(|v| is_affine_a2_root(v)), "L = {bound}");
        assert!(affine_a2_lower_window(bound).is_subset(&r.roots), "L = {bound}");
    }
    assert_eq!(real_roots(&g, 0, 0).len(), 3);
    let r = real_roots(&g, 0, 6);
    assert_eq!(r.roots, roots_by_words(&g, 0, 6));
    let x = g.find("(M2,M4,M6)").unwrap();
    assert_eq!(real_roots(&g, x, 6).roots, roots_by_words(&g, x, 6));
}

#[test]
fn rank_two_counts() {
    let g = fixture_graph();
    for x in 0..g.object_count() {
        for (i, j) in [(0, 1), (1, 2), (0, 2), (2, 1)] {
            let r = rank2_count(&g, x, i, j, 9);
            assert_eq!(r.generated, 3);
            assert_eq!(r.finite(), Some(3));
        }
    }
    let a1a1 = CartanGraph::from_parts(vec!["X".into()], vec![cm(&[vec![2, 0], vec![0, 2]])], vec![vec![0, 0]]).unwrap();
    assert_eq!(rank2_count(&a1a1, 0, 0, 1, 6).finite(), Some(2));
    let a2 = CartanGraph::from_parts(vec!["X".into()], vec![cm(&[vec![2, -1], vec![-1, 2]])], vec![vec![0, 0]]).unwrap();
    assert_eq!(rank2_count(&a2, 0, 0, 1, 6).finite(), Some(3));
    let wild = CartanGraph::from_parts(vec!["X".into()], vec![cm(&[vec![2, -3], vec![-3, 2]])], vec![vec![0, 0]]).unwrap();
    let r = rank2_count(&wild, 0, 0, 1, 8);
    assert_eq!(r.classified, None);
    assert!(r.consistent);
    assert!(r.generated > 6);
    assert_eq!(classify_rank2(-1, -2), Some(4));
    assert_eq!(classify_rank2(-1, -3), Some(6));
    assert_eq!(classify_rank2(-2, -2), None);
}

#[test]
fn abstract_a2_roots() {
    let a2 = CartanGraph::from_parts(vec!["X".into()], vec![cm(&[vec![2, -1], vec![-1, 2]])], vec![vec![0, 0]]).unwrap();
    let r = real_roots(&a2, 0, 12);
    let expected: BTreeSet<Vec<i64>> =
        [[1, 0], [0, 1], [1, 1], [-1, 0], [0, -1], [-1, -1]].iter().map(|v| v.to_vec()).collect();
    assert_eq!(r.roots, expected);
    assert_eq!(real_roots(&a2, 0, 0).len(), 2);
    assert!(cartan_axioms(&a2, 8).passed());
}

#[test]
fn fixture_axioms() {
    let g = fixture_graph();
    let report = cartan_axioms(&g, 9);
    assert!(report.passed(), "{report:?}");
    assert_eq!(report.rank2.len(), 24 * 6);
    assert!(report.rank2.iter().all(|r| r.generated == 3));
}

#[test]
fn swapped_edge_breaks_cg4() {
    let a = cm(&[vec![2, -1], vec![-1, 2]]);
    let g = CartanGraph::from_parts(vec!["X".into(), "Y".into()], vec![a.clone(), a], vec![vec![1, 0], vec![0, 1]]).unwrap();
    assert!(g.violations().is_empty());
    let report = cartan_axioms(&g, 8);
    assert!(!report.cg4.is_empty());
    assert!(report.cg3.is_empty());
    assert!(!report.passed());
}
