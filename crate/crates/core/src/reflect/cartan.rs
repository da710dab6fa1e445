use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::nichols::{cartan_entry, NicholsCaps};
use crate::ydmod::ModuleTuple;

/// A generalized Cartan matrix: `a_ii = 2`, `a_ij ≤ 0` off the diagonal and
/// `a_ij = 0 ⇔ a_ji = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct CartanMatrix {
    entries: Vec<Vec<i64>>,
}

impl CartanMatrix {
    pub fn new(entries: Vec<Vec<i64>>) -> Result<Self> {
        let n = entries.len();
        if n == 0 {
            return Err(Error::Invalid("empty Cartan matrix".into()));
        }
        for (i, row) in entries.iter().enumerate() {
            if row.len() != n {
                return Err(Error::DimensionMismatch(format!("row {} has {} entries, expected {n}", i + 1, row.len())));
            }
            if row[i] != 2 {
                return Err(Error::Invalid(format!("diagonal entry a_{0}{0} = {1} ≠ 2", i + 1, row[i])));
            }
            for j in 0..n {
                if i == j {
                    continue;
                }
                if row[j] > 0 {
                    return Err(Error::Invalid(format!("a_{}{} = {} is positive", i + 1, j + 1, row[j])));
                }
                if (row[j] == 0) != (entries[j][i] == 0) {
                    return Err(Error::Invalid(format!("a_{}{} and a_{}{} disagree on vanishing", i + 1, j + 1, j + 1, i + 1)));
                }
            }
        }
        Ok(CartanMatrix { entries })
    }

    /// `a_ii = 2`, `a_ij = −m[i][j]`.
    pub fn from_exponents(m: &[Vec<usize>]) -> Result<Self> {
        let entries = m
            .iter()
            .enumerate()
            .map(|(i, row)| row.iter().enumerate().map(|(j, &v)| if i == j { 2 } else { -(v as i64) }).collect())
            .collect();
        Self::new(entries)
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.entries[i]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.entries
    }
}

impl fmt::Display for CartanMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            write!(f, "[{}]", cells.join(","))?;
        }
        write!(f, "]")
    }
}

/// The Cartan matrix of a tuple, from the adjoint nilpotency orders of all
/// ordered pairs. A cap hit is reported with tuple indices.
pub fn cartan_of(t: &ModuleTuple, caps: NicholsCaps) -> Result<CartanMatrix> {
    let n = t.rank();
    let mut m = vec![vec![0; n]; n];
    for i in 0..n {
        for j in 0..n {
            if i != j {
                m[i][j] = cartan_entry(t.get(i), t.get(j), caps).map_err(|e| relabel(e, i, j))?;
            }
        }
    }
    CartanMatrix::from_exponents(&m)
}

fn relabel(e: Error, i: usize, j: usize) -> Error {
    match e {
        Error::CapExceeded { cap, .. } => Error::CapExceeded { i, j, cap },
        other => other,
    }
}
