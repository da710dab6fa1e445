use std::collections::BTreeMap;

use serde::Serialize;

use super::graph::CartanGraph;
use crate::weylroots::{morphisms_from, WeylMatrix};

/// Two distinct morphisms `source → target` found within the bound.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub source: usize,
    pub target: usize,
    pub first: Vec<usize>,
    pub second: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Connectivity {
    pub connected: bool,
    /// Objects not reachable from object 0.
    pub unreachable: Vec<usize>,
    pub bound: usize,
    /// No two distinct morphisms with words of length `≤ bound` share source
    /// and target.
    pub simply_connected_within_bound: bool,
    pub witness: Option<Witness>,
}

pub fn connectivity(g: &CartanGraph, bound: usize) -> Connectivity {
    let reach = g.component_of(0);
    let unreachable: Vec<usize> = (0..g.object_count()).filter(|x| reach.binary_search(x).is_err()).collect();
    let mut witness = None;
    'sources: for x in 0..g.object_count() {
        let mut first: BTreeMap<usize, (WeylMatrix, Vec<usize>)> = BTreeMap::new();
        for m in morphisms_from(g, x, bound) {
            match first.get(&m.target) {
                Some((mat, word)) if *mat != m.matrix => {
                    witness = Some(Witness { source: x, target: m.target, first: word.clone(), second: m.word });
                    break 'sources;
                }
                Some(_) => {}
                None => {
                    first.insert(m.target, (m.matrix, m.word));
                }
            }
        }
    }
    Connectivity {
        connected: unreachable.is_empty(),
        unreachable,
        bound,
        simply_connected_within_bound: witness.is_none(),
        witness,
    }
}
