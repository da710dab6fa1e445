use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_integer::Integer;

use super::CycNumber;
use crate::error::{Error, Result};

/// Dense matrix over a cyclotomic field, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    order: u32,
    data: Vec<CycNumber>,
}

/// Result of [`Matrix::rank_kernel`].
#[derive(Debug, Clone, PartialEq)]
pub struct RankKernel {
    pub rank: usize,
    /// Pivot columns of the row-reduced form, ascending.
    pub pivots: Vec<usize>,
    /// One vector per free column `f`: entry `f` is 1, every other free
    /// coordinate is 0.
    pub kernel: Vec<Vec<CycNumber>>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize, order: u32) -> Self {
        Matrix { rows, cols, order, data: vec![CycNumber::zero(order); rows * cols] }
    }

    pub fn identity(n: usize, order: u32) -> Self {
        let mut m = Self::zeros(n, n, order);
        for i in 0..n {
            m[(i, i)] = CycNumber::one(order);
        }
        m
    }

    pub fn from_fn(
        rows: usize,
        cols: usize,
        order: u32,
        mut f: impl FnMut(usize, usize) -> CycNumber,
    ) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c).embed(order));
            }
        }
        Matrix { rows, cols, order, data }
    }

    pub fn from_ints(order: u32, rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        Self::from_fn(rows.len(), cols, order, |r, c| CycNumber::from_int(order, rows[r][c]))
    }

    /// Builds a matrix from rows of numbers, embedding every entry into the
    /// field of the lcm of their orders (at least `order`).
    pub fn from_rows(order: u32, rows: Vec<Vec<CycNumber>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        let order = rows.iter().flatten().fold(order, |acc, x| acc.lcm(&x.order()));
        Ok(Self::from_fn(rows.len(), cols, order, |r, c| rows[r][c].clone()))
    }

    /// Builds a `rows × columns.len()` matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(rows: usize, order: u32, columns: &[Vec<CycNumber>]) -> Self {
        Self::from_fn(rows, columns.len(), order, |r, c| columns[c][r].clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn embed(&self, order: u32) -> Self {
        Self::from_fn(self.rows, self.cols, order, |r, c| self[(r, c)].clone())
    }

    pub fn column(&self, c: usize) -> Vec<CycNumber> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn row(&self, r: usize) -> &[CycNumber] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, self.order, |r, c| self[(c, r)].clone())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(CycNumber::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|r| {
                (0..self.cols).all(|c| {
                    let x = &self[(r, c)];
                    if r == c {
                        x.is_one()
                    } else {
                        x.is_zero()
                    }
                })
            })
    }

    pub fn scale(&self, s: &CycNumber) -> Self {
        let order = self.order.lcm(&s.order());
        Self::from_fn(self.rows, self.cols, order, |r, c| &self[(r, c)] * s)
    }

    pub fn trace(&self) -> CycNumber {
        (0..self.rows.min(self.cols))
            .fold(CycNumber::zero(self.order), |acc, i| &acc + &self[(i, i)])
    }

    pub fn try_mul(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let order = self.order.lcm(&rhs.order);
        let mut out = Matrix::zeros(self.rows, rhs.cols, order);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        let prod = a * b;
                        out[(i, j)] = &out[(i, j)] + &prod;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[CycNumber]) -> Vec<CycNumber> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        (0..self.rows)
            .map(|r| {
                let mut acc = CycNumber::zero(self.order);
                for (c, x) in v.iter().enumerate() {
                    let a = &self[(r, c)];
                    if !a.is_zero() && !x.is_zero() {
                        acc = &acc + &(a * x);
                    }
                }
                acc
            })
            .collect()
    }

    /// Kronecker product; with the lexicographic tensor basis this is the
    /// matrix of `self ⊗ rhs`.
    pub fn kron(&self, rhs: &Matrix) -> Matrix {
        let order = self.order.lcm(&rhs.order);
        Matrix::from_fn(self.rows * rhs.rows, self.cols * rhs.cols, order, |r, c| {
            &self[(r / rhs.rows, c / rhs.cols)] * &rhs[(r % rhs.rows, c % rhs.cols)]
        })
    }

    /// Fraction-free (Bareiss) forward elimination. Returns the echelon form,
    /// its pivot columns and the number of row swaps.
    fn bareiss(&self) -> (Matrix, Vec<usize>, usize) {
        let mut w = self.clone();
        let mut prev = CycNumber::one(self.order);
        let mut pivots = Vec::new();
        let mut swaps = 0;
        let mut pr = 0;
        for col in 0..w.cols {
            if pr == w.rows {
                break;
            }
            let Some(p) = (pr..w.rows).find(|&r| !w[(r, col)].is_zero()) else {
                continue;
            };
            if p != pr {
                w.swap_rows(p, pr);
                swaps += 1;
            }
            let piv = w[(pr, col)].clone();
            for i in pr + 1..w.rows {
                let lead = w[(i, col)].clone();
                for j in col + 1..w.cols {
                    let a = &piv * &w[(i, j)];
                    let v = if lead.is_zero() { a } else { &a - &(&lead * &w[(pr, j)]) };
                    w[(i, j)] = if prev.is_one() { v } else { &v / &prev };
                }
                w[(i, col)] = CycNumber::zero(self.order);
            }
            prev = piv;
            pivots.push(col);
            pr += 1;
        }
        (w, pivots, swaps)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let (mut w, pivots, _) = self.bareiss();
        for (k, &pc) in pivots.iter().enumerate().rev() {
            let inv = w[(k, pc)].inverse().expect("pivot is nonzero");
            for c in pc..w.cols {
                if !w[(k, c)].is_zero() {
                    w[(k, c)] = &w[(k, c)] * &inv;
                }
            }
            for r in 0..k {
                let f = w[(r, pc)].clone();
                if f.is_zero() {
                    continue;
                }
                for c in pc..w.cols {
                    if !w[(k, c)].is_zero() {
                        w[(r, c)] = &w[(r, c)] - &(&f * &w[(k, c)]);
                    }
                }
            }
        }
        // rows below the rank are already zero
        (w, pivots)
    }

    /// Exact rank and a kernel basis in reduced echelon-normalized form.
    pub fn rank_kernel(&self) -> RankKernel {
        let (r, pivots) = self.rref();
        let mut kernel = Vec::new();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        for f in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![CycNumber::zero(self.order); self.cols];
            v[f] = CycNumber::one(self.order);
            for (k, &p) in pivots.iter().enumerate() {
                v[p] = -&r[(k, f)];
            }
            kernel.push(v);
        }
        RankKernel { rank: pivots.len(), pivots, kernel }
    }

    pub fn rank(&self) -> usize {
        self.bareiss().1.len()
    }

    pub fn det(&self) -> Result<CycNumber> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch("determinant of non-square matrix".into()));
        }
        if self.rows == 0 {
            return Ok(CycNumber::one(self.order));
        }
        let (w, pivots, swaps) = self.bareiss();
        if pivots.len() < self.rows {
            return Ok(CycNumber::zero(self.order));
        }
        let d = w[(self.rows - 1, self.cols - 1)].clone();
        Ok(if swaps % 2 == 1 { -d } else { d })
    }

    /// Some `X` with `self · X = rhs`, or `None` when the system is
    /// inconsistent.
    pub fn solve(&self, rhs: &Matrix) -> Result<Option<Matrix>> {
        if rhs.rows != self.rows {
            return Err(Error::DimensionMismatch("right-hand side row count".into()));
        }
        let order = self.order.lcm(&rhs.order);
        let aug = Matrix::from_fn(self.rows, self.cols + rhs.cols, order, |r, c| {
            if c < self.cols {
                self[(r, c)].clone()
            } else {
                rhs[(r, c - self.cols)].clone()
            }
        });
        let (red, pivots) = aug.rref();
        if pivots.iter().any(|&p| p >= self.cols) {
            return Ok(None);
        }
        let mut x = Matrix::zeros(self.cols, rhs.cols, order);
        for (k, &p) in pivots.iter().enumerate() {
            for j in 0..rhs.cols {
                x[(p, j)] = red[(k, self.cols + j)].clone();
            }
        }
        Ok(Some(x))
    }

    pub fn inverse(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch("inverse of non-square matrix".into()));
        }
        if self.rank() < self.rows {
            return Err(Error::Singular);
        }
        Ok(self
            .solve(&Matrix::identity(self.rows, self.order))?
            .expect("full-rank system is consistent"))
    }

    /// Indices of a maximal linearly independent subset of the columns,
    /// chosen greedily from the left.
    pub fn independent_columns(&self) -> Vec<usize> {
        self.bareiss().1
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = CycNumber;
    fn index(&self, (r, c): (usize, usize)) -> &CycNumber {
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut CycNumber {
        &mut self.data[r * self.cols + c]
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        self.try_mul(rhs).expect("matrix dimensions agree")
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix dimensions agree");
        let order = self.order.lcm(&rhs.order);
        Matrix::from_fn(self.rows, self.cols, order, |r, c| &self[(r, c)] + &rhs[(r, c)])
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix dimensions agree");
        let order = self.order.lcm(&rhs.order);
        Matrix::from_fn(self.rows, self.cols, order, |r, c| &self[(r, c)] - &rhs[(r, c)])
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        Matrix::from_fn(self.rows, self.cols, self.order, |r, c| -&self[(r, c)])
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self[(r, c)])?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(rows: &[&[i64]]) -> Matrix {
        Matrix::from_ints(1, &rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
    }

    fn annihilates(m: &Matrix, v: &[CycNumber]) -> bool {
        m.apply(v).iter().all(CycNumber::is_zero)
    }

    #[test]
    fn identity_has_full_rank() {
        let rk = Matrix::identity(2, 1).rank_kernel();
        assert_eq!(rk.rank, 2);
        assert!(rk.kernel.is_empty());
    }

    #[test]
    fn all_ones_two_by_two() {
        let m = ints(&[&[1, 1], &[1, 1]]);
        let rk = m.rank_kernel();
        assert_eq!(rk.rank, 1);
        assert_eq!(rk.kernel, vec![vec![CycNumber::from_int(1, -1), CycNumber::one(1)]]);
    }

    #[test]
    fn identity_minus_swap_on_tensor_square() {
        // τ on k²⊗k² in lexicographic basis (00, 01, 10, 11) swaps 01 and 10.
        // id + (−τ): hand elimination leaves the single row (0, 1, −1, 0).
        let tau = ints(&[&[1, 0, 0, 0], &[0, 0, 1, 0], &[0, 1, 0, 0], &[0, 0, 0, 1]]);
        let m = &Matrix::identity(4, 1) - &tau;
        let rk = m.rank_kernel();
        assert_eq!(rk.rank, 1);
        assert_eq!(rk.kernel.len(), 3);
        for v in &rk.kernel {
            assert!(annihilates(&m, v));
        }
    }

    #[test]
    fn determinant_and_inverse() {
        let m = ints(&[&[0, 2, 1], &[1, 1, 0], &[3, 0, 1]]);
        // 0(1) - 2(1) + 1(-3) = -5
        assert_eq!(m.det().unwrap(), CycNumber::from_int(1, -5));
        let inv = m.inverse().unwrap();
        assert!((&m * &inv).is_identity());
        assert_eq!(ints(&[&[1, 2], &[2, 4]]).inverse(), Err(Error::Singular));
    }

    #[test]
    fn determinant_over_cyclotomics() {
        let i = CycNumber::zeta(4, 1);
        let m = Matrix::from_rows(
            4,
            vec![vec![i.clone(), CycNumber::one(4)], vec![CycNumber::one(4), i.clone()]],
        )
        .unwrap();
        // i·i − 1 = −2
        assert_eq!(m.det().unwrap(), CycNumber::from_int(4, -2));
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let a = ints(&[&[1, 1], &[1, 1]]);
        let b = ints(&[&[2], &[2]]);
        let x = a.solve(&b).unwrap().unwrap();
        assert_eq!(&a * &x, b);
        assert!(a.solve(&ints(&[&[1], &[2]])).unwrap().is_none());
    }

    #[test]
    fn kron_of_identities() {
        let k = Matrix::identity(2, 1).kron(&Matrix::identity(3, 1));
        assert!(k.is_identity());
        assert_eq!(k.rows(), 6);
    }
}
