use std::sync::Arc;

use super::*;
use crate::error::Error;
use crate::exact::Matrix;
use crate::fixtures;
use crate::nichols::NicholsCaps;
use crate::ydmod::{validate, ModuleTuple};

fn caps() -> NicholsCaps {
    NicholsCaps::default()
}

fn fixture_catalog() -> (ModuleTuple, Catalog) {
    let c = fixtures::z2cubed_cocycle();
    let ms: Vec<_> = fixtures::z2cubed_modules_over(&c).into_iter().map(Arc::new).collect();
    let t = ModuleTuple::from_shared(ms[..3].to_vec()).unwrap();
    (t, Catalog::seeded(ms).unwrap())
}

fn tuple_of(cat: &Catalog, ids: &[usize]) -> ModuleTuple {
    ModuleTuple::from_shared(ids.iter().map(|&k| cat.module(k)).collect()).unwrap()
}

#[test]
fn fixture_cartan_matrix() {
    let a = cartan_of(&fixtures::z2cubed_tuple(), caps()).unwrap();
    assert_eq!(a.rows(), &[vec![2, -1, -1], vec![-1, 2, -1], vec![-1, -1, 2]]);
    assert_eq!(a.to_string(), "[[2,-1,-1],[-1,2,-1],[-1,-1,2]]");
}

#[test]
fn rank_one_and_orthogonal_pairs() {
    let t = ModuleTuple::new(vec![fixtures::z2cubed_modules().remove(0)]).unwrap();
    assert_eq!(cartan_of(&t, caps()).unwrap().rows(), &[vec![2]]);
    let t = fixtures::diagonal_tuple(2, &[vec![1, 1], vec![1, 1]]);
    assert_eq!(cartan_of(&t, caps()).unwrap().rows(), &[vec![2, 0], vec![0, 2]]);
}

#[test]
fn cartan_matrix_invariants_are_enforced() {
    assert!(CartanMatrix::new(vec![vec![2, -1], vec![-1, 2]]).is_ok());
    assert!(CartanMatrix::new(vec![vec![2, -1], vec![0, 2]]).is_err());
    assert!(CartanMatrix::new(vec![vec![2, 1], vec![1, 2]]).is_err());
    assert!(CartanMatrix::new(vec![vec![1]]).is_err());
    assert!(CartanMatrix::new(vec![vec![2, 0]]).is_err());
    assert!(CartanMatrix::new(vec![]).is_err());
}

#[test]
fn cap_hits_are_reported_with_tuple_indices() {
    let t = fixtures::diagonal_tuple(2, &[vec![0, 1], vec![0, 0]]);
    assert_eq!(cartan_of(&t, caps()).unwrap_err(), Error::CapExceeded { i: 0, j: 1, cap: 8 });
    let r = reflect(&t, 0, caps()).unwrap_err();
    assert_eq!(r, Error::ReflectionUndefined { sequence: vec![0], i: 0, j: 1, cap: 8 });
}

#[test]
fn first_reflection_of_the_fixture() {
    let (t, cat) = fixture_catalog();
    let r = reflect(&t, 0, caps()).unwrap();
    assert_eq!(r.exponents, vec![0, 1, 1]);
    let g = t.cocycle().group().clone();
    let degrees: Vec<_> = r.tuple.entries().iter().map(|m| g.format(m.degree())).collect();
    assert_eq!(degrees, ["h1", "h1h2", "h1h3"]);
    for m in r.tuple.entries() {
        assert!(validate(m).passed(), "{}", m.name());
        assert!(m.is_simple());
        assert_eq!(m.dim(), 2);
    }
    let class = cat.classify(&r.tuple).unwrap();
    assert_eq!(cat.class_label(&class), "(M1,M4,M5)");
    assert_eq!(class, cat.classify(&tuple_of(&cat, &[0, 3, 4])).unwrap());
}

#[test]
fn degree_bookkeeping() {
    let (t, _) = fixture_catalog();
    let g = t.cocycle().group().clone();
    for i in 0..3 {
        let r = reflect(&t, i, caps()).unwrap();
        assert_eq!(r.tuple.get(i).degree(), g.inv(t.get(i).degree()));
        for j in (0..3).filter(|&j| j != i) {
            let expected = g.mul(g.pow(t.get(i).degree(), r.exponents[j] as i64), t.get(j).degree());
            assert_eq!(r.tuple.get(j).degree(), expected);
        }
    }
}

#[test]
fn reflections_are_involutive_on_classes() {
    let (t, cat) = fixture_catalog();
    let base = cat.classify(&t).unwrap();
    for i in 0..3 {
        let once = reflect(&t, i, caps()).unwrap().tuple;
        let twice = reflect(&once, i, caps()).unwrap().tuple;
        assert_eq!(cat.classify(&twice).unwrap(), base, "i = {i}");
    }
}

#[test]
fn reflections_preserve_the_reflected_row() {
    let (t, _) = fixture_catalog();
    let a = cartan_of(&t, caps()).unwrap();
    for i in 0..3 {
        let r = reflect(&t, i, caps()).unwrap();
        let b = cartan_of(&r.tuple, caps()).unwrap();
        assert_eq!(a.row(i), b.row(i));
    }
}

#[test]
fn adjoint_round_trips() {
    let (t, _) = fixture_catalog();
    for i in 0..3 {
        for j in (0..3).filter(|&j| j != i) {
            let rt = round_trip(&t, i, j, caps()).unwrap();
            assert!(rt.holds(), "({i},{j}): {rt:?}");
        }
    }
    assert!(round_trip(&t, 1, 1, caps()).is_err());
}

#[test]
fn classification_is_stable() {
    let (t, cat) = fixture_catalog();
    let a = cat.classify(&t).unwrap();
    assert_eq!(cat.classify(&t).unwrap(), a);
    let p = Matrix::from_ints(2, &[vec![1, 1], vec![0, 1]]);
    let conj: Vec<_> = t.entries().iter().map(|m| Arc::new(m.conjugate(&p).unwrap().with_name("C"))).collect();
    let b = cat.classify(&ModuleTuple::from_shared(conj).unwrap()).unwrap();
    assert_eq!(a, b);
    assert_eq!(cat.module_count(), 6);
    let swapped = tuple_of(&cat, &[1, 0, 2]);
    assert_ne!(cat.classify(&swapped).unwrap(), a);
    assert_eq!(cat.class_count(), 2);
}
