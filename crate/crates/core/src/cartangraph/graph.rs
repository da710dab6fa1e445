use std::collections::VecDeque;
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::reflect::CartanMatrix;

/// A semi-Cartan graph on objects `0..n` with index set `0..θ`.
///
/// `r[x][i]` is `None` only for edges that were cut off by an object limit
/// during exploration; such a graph is not closed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanGraph {
    rank: usize,
    labels: Vec<String>,
    matrices: Vec<CartanMatrix>,
    r: Vec<Vec<Option<usize>>>,
    words: Vec<Vec<usize>>,
}

/// One failed graph axiom.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum GraphViolation {
    /// `r_i(r_i(x)) ≠ x`.
    NotInvolutive { object: usize, index: usize },
    /// `A^x` and `A^{r_i(x)}` differ in row `i`.
    RowMismatch { object: usize, index: usize },
}

impl CartanGraph {
    /// A graph from explicit data, for example user-supplied exchange data.
    /// Shapes are checked; the axioms are not (see [`CartanGraph::violations`]).
    pub fn from_parts(labels: Vec<String>, matrices: Vec<CartanMatrix>, r: Vec<Vec<usize>>) -> Result<Self> {
        let r = r.into_iter().map(|row| row.into_iter().map(Some).collect()).collect();
        Self::build(labels, matrices, r)
    }

    pub(crate) fn build(labels: Vec<String>, matrices: Vec<CartanMatrix>, r: Vec<Vec<Option<usize>>>) -> Result<Self> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::Invalid("a Cartan graph needs at least one object".into()));
        }
        if matrices.len() != n || r.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "{n} objects, {} matrices, {} reflection rows",
                matrices.len(),
                r.len()
            )));
        }
        let rank = matrices[0].size();
        for x in 0..n {
            if matrices[x].size() != rank || r[x].len() != rank {
                return Err(Error::DimensionMismatch(format!("object {x} does not have rank {rank}")));
            }
            if let Some(&y) = r[x].iter().flatten().find(|&&y| y >= n) {
                return Err(Error::IndexOutOfRange { index: y, range: format!("0..{n}") });
            }
        }
        let mut g = CartanGraph { rank, labels, matrices, r, words: Vec::new() };
        g.words = g.bfs_words(0);
        Ok(g)
    }

    /// The graph with one object and `r_i = id`.
    pub fn single(label: impl Into<String>, a: CartanMatrix) -> Self {
        let rank = a.size();
        Self::from_parts(vec![label.into()], vec![a], vec![vec![0; rank]]).expect("single object graph")
    }

    /// Disjoint union; objects of `other` are shifted by `self.object_count()`.
    pub fn disjoint_union(&self, other: &CartanGraph) -> Result<Self> {
        if self.rank != other.rank {
            return Err(Error::DimensionMismatch(format!("ranks {} and {}", self.rank, other.rank)));
        }
        let shift = self.labels.len();
        let mut labels = self.labels.clone();
        labels.extend(other.labels.iter().cloned());
        let mut matrices = self.matrices.clone();
        matrices.extend(other.matrices.iter().cloned());
        let mut r = self.r.clone();
        r.extend(other.r.iter().map(|row| row.iter().map(|y| y.map(|y| y + shift)).collect()));
        Self::build(labels, matrices, r)
    }

    fn bfs_words(&self, start: usize) -> Vec<Vec<usize>> {
        let n = self.labels.len();
        let mut words: Vec<Option<Vec<usize>>> = vec![None; n];
        words[start] = Some(Vec::new());
        let mut queue = VecDeque::from([start]);
        while let Some(x) = queue.pop_front() {
            for i in 0..self.rank {
                if let Some(y) = self.r[x][i] {
                    if words[y].is_none() {
                        let mut w = words[x].clone().expect("visited");
                        w.push(i);
                        words[y] = Some(w);
                        queue.push_back(y);
                    }
                }
            }
        }
        words.into_iter().map(|w| w.unwrap_or_default()).collect()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn object_count(&self) -> usize {
        self.labels.len()
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn find(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn matrix(&self, x: usize) -> &CartanMatrix {
        &self.matrices[x]
    }

    /// `r_i(x)`, if explored.
    pub fn reflect(&self, x: usize, i: usize) -> Option<usize> {
        self.r[x][i]
    }

    /// Follows `word` from `x`, applying its letters left to right.
    pub fn walk(&self, x: usize, word: &[usize]) -> Option<usize> {
        word.iter().try_fold(x, |y, &i| self.r[y][i])
    }

    /// A shortest reflection word from object 0 to `x` (empty if unreachable).
    pub fn word(&self, x: usize) -> &[usize] {
        &self.words[x]
    }

    /// Every reflection edge was explored.
    pub fn is_closed(&self) -> bool {
        self.r.iter().all(|row| row.iter().all(Option::is_some))
    }

    /// CG1 and CG2 on every explored edge.
    pub fn violations(&self) -> Vec<GraphViolation> {
        let mut out = Vec::new();
        for x in 0..self.object_count() {
            for i in 0..self.rank {
                let Some(y) = self.r[x][i] else { continue };
                if let Some(z) = self.r[y][i] {
                    if z != x {
                        out.push(GraphViolation::NotInvolutive { object: x, index: i });
                    }
                }
                if self.matrices[x].row(i) != self.matrices[y].row(i) {
                    out.push(GraphViolation::RowMismatch { object: x, index: i });
                }
            }
        }
        out
    }

    /// Objects reachable from `x`.
    pub fn component_of(&self, x: usize) -> Vec<usize> {
        let mut seen = vec![false; self.object_count()];
        seen[x] = true;
        let mut queue = VecDeque::from([x]);
        while let Some(y) = queue.pop_front() {
            for z in self.r[y].iter().flatten() {
                if !seen[*z] {
                    seen[*z] = true;
                    queue.push_back(*z);
                }
            }
        }
        (0..seen.len()).filter(|&k| seen[k]).collect()
    }

    /// Graphviz rendering; each involutive pair of edges is drawn once.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph cartan {\n");
        for (x, l) in self.labels.iter().enumerate() {
            let _ = writeln!(s, "  n{x} [label=\"{}\"];", l.replace('"', "\\\""));
        }
        for x in 0..self.object_count() {
            for i in 0..self.rank {
                if let Some(y) = self.r[x][i] {
                    if x <= y {
                        let _ = writeln!(s, "  n{x} -- n{y} [label=\"r{}\"];", i + 1);
                    }
                }
            }
        }
        s.push_str("}\n");
        s
    }
}

/// All Cartan matrices are equal.
pub fn is_standard(g: &CartanGraph) -> bool {
    g.matrices.iter().all(|a| a == &g.matrices[0])
}
