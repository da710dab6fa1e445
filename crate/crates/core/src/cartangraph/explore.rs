use std::collections::{HashMap, VecDeque};

use super::graph::CartanGraph;
use crate::error::{Error, Result};
use crate::nichols::NicholsCaps;
use crate::reflect::{reflect, CartanMatrix, Catalog};
use crate::ydmod::ModuleTuple;

/// Breadth-first search over all reflection sequences from `seed`.
///
/// Objects are tuple classes registered in `catalog` and labelled by it;
/// object 0 is the class of the seed. Row `i` of `A^X` is read off the
/// exponents of `R_i(X)`. Once `max_objects` classes are known, edges leading
/// to new classes are left unexplored and the result is not closed.
pub fn explore(seed: &ModuleTuple, catalog: &Catalog, caps: NicholsCaps, max_objects: usize) -> Result<CartanGraph> {
    let theta = seed.rank();
    let first = catalog.classify(seed)?;
    let mut ids: HashMap<usize, usize> = HashMap::from([(first.id, 0)]);
    let mut classes = vec![first];
    let mut words: Vec<Vec<usize>> = vec![Vec::new()];
    let mut rows: Vec<Vec<Option<usize>>> = vec![vec![None; theta]];
    let mut exps: Vec<Vec<Vec<usize>>> = vec![vec![Vec::new(); theta]];
    let mut queue = VecDeque::from([0]);
    while let Some(x) = queue.pop_front() {
        let rep = catalog.representative(&classes[x])?;
        for i in 0..theta {
            let r = reflect(&rep, i, caps).map_err(|e| match e {
                Error::ReflectionUndefined { i, j, cap, .. } => {
                    let mut sequence = words[x].clone();
                    sequence.push(i);
                    Error::ReflectionUndefined { sequence, i, j, cap }
                }
                other => other,
            })?;
            exps[x][i] = r.exponents;
            let class = catalog.classify(&r.tuple)?;
            let y = match ids.get(&class.id) {
                Some(&y) => Some(y),
                None if classes.len() < max_objects => {
                    let y = classes.len();
                    ids.insert(class.id, y);
                    classes.push(class);
                    let mut w = words[x].clone();
                    w.push(i);
                    words.push(w);
                    rows.push(vec![None; theta]);
                    exps.push(vec![Vec::new(); theta]);
                    queue.push_back(y);
                    Some(y)
                }
                None => None,
            };
            rows[x][i] = y;
        }
    }
    let labels = classes.iter().map(|c| catalog.class_label(c)).collect();
    let matrices = exps.iter().map(|e| CartanMatrix::from_exponents(e)).collect::<Result<Vec<_>>>()?;
    CartanGraph::build(labels, matrices, rows)
}
