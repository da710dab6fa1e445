use std::collections::HashMap;
use std::sync::{Arc, OnceLock};

use super::*;
use crate::cartangraph::{explore, CartanGraph};
use crate::error::Error;
use crate::fixtures;
use crate::nichols::NicholsCaps;
use crate::reflect::{CartanMatrix, Catalog};
use crate::ydmod::ModuleTuple;

fn fixture_graph() -> &'static CartanGraph {
    static G: OnceLock<CartanGraph> = OnceLock::new();
    G.get_or_init(|| {
        let c = fixtures::z2cubed_cocycle();
        let ms: Vec<_> = fixtures::z2cubed_modules_over(&c).into_iter().map(Arc::new).collect();
        let seed = ModuleTuple::from_shared(ms[..3].to_vec()).unwrap();
        explore(&seed, &Catalog::seeded(ms).unwrap(), NicholsCaps::default(), 256).unwrap()
    })
}

fn single(rows: &[Vec<i64>]) -> CartanGraph {
    let a = CartanMatrix::new(rows.to_vec()).unwrap();
    CartanGraph::single("X", a)
}

#[test]
fn base_and_first_chambers() {
    let g = fixture_graph();
    let chambers = realize(g, 0, 1);
    assert_eq!(chambers.len(), 4);
    assert_eq!(chambers[0].basis, vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
    let r1 = chambers.iter().find(|c| c.word == [0]).unwrap();
    // oracle: β_1' = −β_1, β_j' = β_j − a_1j β_1 applied to the standard basis
    assert_eq!(r1.basis, vec![vec![-1, 0, 0], vec![1, 1, 0], vec![1, 0, 1]]);
    assert_eq!(g.label(r1.object), "(M1,M4,M5)");
}

#[test]
fn adjacent_chambers_follow_the_reflection_rule() {
    let g = fixture_graph();
    let chambers = realize(g, 0, 6);
    let by_word: HashMap<Vec<usize>, &Chamber> = chambers.iter().map(|c| (c.word.clone(), c)).collect();
    for ch in chambers.iter().filter(|c| !c.word.is_empty()) {
        let (&i, prefix) = ch.word.split_last().unwrap();
        let parent = by_word[prefix];
        let a = g.matrix(parent.object);
        for j in 0..3 {
            let expected: Vec<i64> = if j == i {
                parent.basis[i].iter().map(|c| -c).collect()
            } else {
                parent.basis[j].iter().zip(&parent.basis[i]).map(|(bj, bi)| bj - a.get(i, j) * bi).collect()
            };
            assert_eq!(ch.basis[j], expected, "word {:?}", ch.word);
        }
    }
}

#[test]
fn fixture_cone_is_affine() {
    let g = fixture_graph();
    let (report, chambers) = classify_cone(g, 0, 10).unwrap();
    assert_eq!(report.classification, ConeType::Affine);
    assert_eq!(report.null_vector, Some(vec![1, 1, 1]));
    assert_eq!(report.delta, Some(vec![1, 1, 1]));
    assert!(report.half_space_verified());
    assert_eq!(report.sum_invariant, Some(true));
    assert!(!report.roots_closed);
    assert!(report.consistent);
    // affine A2 has 3k elements of length k ≥ 1
    assert_eq!(chambers.len(), 1 + (1..=10).map(|k| 3 * k).sum::<usize>());
    assert_eq!(report.chambers, chambers.len());
}

#[test]
fn object_keyed_realization_needs_simple_connectivity() {
    let g = fixture_graph();
    match realize_by_object(g, 0, 12) {
        Err(Error::NotSimplyConnected { object, first, second }) => {
            assert_eq!(g.walk(0, &first), Some(object));
            assert_eq!(g.walk(0, &second), Some(object));
        }
        other => panic!("expected NotSimplyConnected, got {other:?}"),
    }
    let a1 = single(&[vec![2]]);
    assert_eq!(realize_by_object(&a1, 0, 0).unwrap().len(), 1);
}

#[test]
fn finite_and_indefinite_cones() {
    let a2 = single(&[vec![2, -1], vec![-1, 2]]);
    let (r, chambers) = classify_cone(&a2, 0, 12).unwrap();
    assert_eq!(r.classification, ConeType::Finite);
    assert!(r.roots_closed);
    assert!(r.consistent);
    assert_eq!(r.hyperplanes, 3);
    assert_eq!(chambers.len(), 6);
    assert!(!r.half_space_verified());
    let wild = single(&[vec![2, -3], vec![-3, 2]]);
    let (r, _) = classify_cone(&wild, 0, 8).unwrap();
    assert_eq!(r.classification, ConeType::Indefinite);
    assert_eq!(r.null_vector, None);
    assert!(!r.roots_closed);
    assert!(r.consistent);
}

#[test]
fn null_vectors() {
    let cm = |rows: &[Vec<i64>]| CartanMatrix::new(rows.to_vec()).unwrap();
    assert_eq!(positive_null_vector(&cm(&[vec![2, -2], vec![-2, 2]])), Some(vec![1, 1]));
    assert_eq!(positive_null_vector(&cm(&[vec![2, -4], vec![-1, 2]])), Some(vec![2, 1]));
    assert_eq!(positive_null_vector(&cm(&[vec![2, -1], vec![-1, 2]])), None);
    assert_eq!(positive_null_vector(&cm(&[vec![2, -3], vec![-3, 2]])), None);
}

#[test]
fn nonstandard_graphs_are_unsupported() {
    let a = CartanMatrix::new(vec![vec![2, -1], vec![-1, 2]]).unwrap();
    let b = CartanMatrix::new(vec![vec![2, -1], vec![-2, 2]]).unwrap();
    let g = CartanGraph::from_parts(vec!["X".into(), "Y".into()], vec![a, b], vec![vec![1, 0], vec![0, 1]]).unwrap();
    assert!(matches!(classify_cone(&g, 0, 4), Err(Error::Unsupported(_))));
}

#[test]
fn fixture_tiling() {
    let g = fixture_graph();
    let (report, chambers) = classify_cone(g, 0, 10).unwrap();
    let v = report.null_vector.unwrap();
    let grid = Grid { side: 2, denominator: 7 };
    let t = alcove_tiling_check(g, 0, &chambers, &v, 10, grid).unwrap();
    assert_eq!(t.points, 29 * 29);
    assert!(t.passed(), "{t:?}");
    assert_eq!(t.covered + t.uncovered_ring, t.points);
    // the barycenter of the base alcove is in exactly one open alcove
    let slice = Slice::new(&v, 7);
    let x = slice.point(&[0, 0]);
    let open = chambers.iter().filter(|c| c.values(&x).iter().all(|&t| t > 0)).count();
    assert_eq!(open, 1);
}

#[test]
fn wall_points_are_boundary() {
    let g = fixture_graph();
    let (report, chambers) = classify_cone(g, 0, 4).unwrap();
    let v = report.null_vector.unwrap();
    let t = alcove_tiling_check(g, 0, &chambers, &v, 4, Grid { side: 1, denominator: 3 }).unwrap();
    assert!(t.boundary > 0);
    assert!(t.double_interior.is_empty());
    assert!(t.passed(), "{t:?}");
    let slice = Slice::new(&v, 3);
    // p = (−1/3, 0) gives x = (0, 1/3, 2/3), on the wall β_1 = 0
    let x = slice.point(&[-1, 0]);
    assert_eq!(x[0], 0);
    let open = chambers.iter().filter(|c| c.values(&x).iter().all(|&t| t > 0)).count();
    let closed = chambers.iter().filter(|c| c.values(&x).iter().all(|&t| t >= 0)).count();
    assert_eq!((open, closed), (0, 2));
}

#[test]
fn tiling_needs_affine_data() {
    let a2 = single(&[vec![2, -1], vec![-1, 2]]);
    let chambers = realize(&a2, 0, 3);
    assert!(alcove_tiling_check(&a2, 0, &chambers, &[1, -1], 3, Grid { side: 1, denominator: 2 }).is_err());
}

#[test]
fn vertex_dump_is_exact() {
    let g = fixture_graph();
    let chambers = realize(g, 0, 1);
    let dump = vertex_dump(&chambers, &[1, 1, 1]);
    let first = dump.lines().next().unwrap();
    assert_eq!(first, "e: (1, 0, 0) (0, 1, 0) (0, 0, 1)");
    assert_eq!(dump.lines().count(), 4);
}
