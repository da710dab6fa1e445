use super::{CycNumber, Matrix};
use crate::error::{Error, Result};

/// Largest absolute integer coefficient tried when combining kernel vectors
/// in search of an invertible intertwiner.
pub const INTERTWINER_SEARCH_BOUND: i64 = 2;

const MAX_ENUMERATED: usize = 50_000;

/// Finds an invertible `T` with `T·a[k] = b[k]·T` for every `k`.
///
/// `Ok(None)` means no intertwiner exists at all, or the only ones are
/// singular with a one-dimensional solution space (the simple-module case,
/// which is decided exactly). When the solution space has dimension > 1 and
/// bounded enumeration finds no invertible combination the answer is
/// [`Error::Inconclusive`].
pub fn solve_intertwiner(a: &[Matrix], b: &[Matrix]) -> Result<Option<Matrix>> {
    if a.len() != b.len() {
        return Err(Error::DimensionMismatch(format!(
            "{} source matrices vs {} target matrices",
            a.len(),
            b.len()
        )));
    }
    let Some(first) = a.first() else {
        return Err(Error::Invalid("intertwiner problem with no matrices".into()));
    };
    let da = first.rows();
    let db = b[0].rows();
    if a.iter().any(|m| m.rows() != da || !m.is_square())
        || b.iter().any(|m| m.rows() != db || !m.is_square())
    {
        return Err(Error::DimensionMismatch("intertwiner inputs must be square of a common size".into()));
    }
    if da != db {
        return Ok(None);
    }
    let d = da;
    if a == b {
        return Ok(Some(Matrix::identity(d, first.order())));
    }
    let order = a.iter().chain(b).fold(1u32, |acc, m| num_integer::lcm(acc, m.order()));

    // Unknown T[r][s] has index r*d + s. Equation (k, r, c):
    //   Σ_s T[r][s]·A_k[s][c] − Σ_s B_k[r][s]·T[s][c] = 0
    let n_eq = a.len() * d * d;
    let mut sys = Matrix::zeros(n_eq, d * d, order);
    for (k, (ak, bk)) in a.iter().zip(b).enumerate() {
        for r in 0..d {
            for c in 0..d {
                let row = (k * d + r) * d + c;
                for s in 0..d {
                    let u = r * d + s;
                    sys[(row, u)] = &sys[(row, u)] + &ak[(s, c)];
                    let u = s * d + c;
                    sys[(row, u)] = &sys[(row, u)] - &bk[(r, s)];
                }
            }
        }
    }
    let kernel = sys.rank_kernel().kernel;
    let as_matrix = |v: &[CycNumber]| Matrix::from_fn(d, d, order, |r, s| v[r * d + s].clone());
    let invertible = |v: &[CycNumber]| -> Result<Option<Matrix>> {
        let t = as_matrix(v);
        Ok(if t.det()?.is_zero() { None } else { Some(t) })
    };

    match kernel.len() {
        0 => Ok(None),
        1 => invertible(&kernel[0]),
        k => {
            for v in &kernel {
                if let Some(t) = invertible(v)? {
                    return Ok(Some(t));
                }
            }
            for coeffs in candidate_coefficients(k) {
                let mut v = vec![CycNumber::zero(order); d * d];
                for (c, basis) in coeffs.iter().zip(&kernel) {
                    if *c == 0 {
                        continue;
                    }
                    let c = CycNumber::from_int(order, *c);
                    for (x, y) in v.iter_mut().zip(basis) {
                        *x = &*x + &(&c * y);
                    }
                }
                if let Some(t) = invertible(&v)? {
                    return Ok(Some(t));
                }
            }
            Err(Error::Inconclusive(format!(
                "{k}-dimensional intertwiner space, no invertible combination with coefficients up to {INTERTWINER_SEARCH_BOUND}"
            )))
        }
    }
}

fn candidate_coefficients(k: usize) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    // moment-curve points are generic for any fixed polynomial of low degree
    for t in 1..12i64 {
        out.push((0..k).map(|j| t.pow(j as u32)).collect());
    }
    let width = (2 * INTERTWINER_SEARCH_BOUND + 1) as usize;
    if width.checked_pow(k as u32).is_some_and(|n| n <= MAX_ENUMERATED) {
        let mut cur = vec![-INTERTWINER_SEARCH_BOUND; k];
        loop {
            if cur.iter().filter(|&&c| c != 0).count() > 1 {
                out.push(cur.clone());
            }
            let mut pos = 0;
            loop {
                if pos == k {
                    return out;
                }
                if cur[pos] < INTERTWINER_SEARCH_BOUND {
                    cur[pos] += 1;
                    break;
                }
                cur[pos] = -INTERTWINER_SEARCH_BOUND;
                pos += 1;
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(rows: &[&[i64]]) -> Matrix {
        Matrix::from_ints(1, &rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
    }

    #[test]
    fn same_matrix_gives_identity() {
        let m = ints(&[&[1, 2], &[3, 4]]);
        let t = solve_intertwiner(std::slice::from_ref(&m), std::slice::from_ref(&m)).unwrap().unwrap();
        assert!(t.is_identity());
    }

    #[test]
    fn conjugate_diagonals_give_swap() {
        let a = ints(&[&[1, 0], &[0, -1]]);
        let b = ints(&[&[-1, 0], &[0, 1]]);
        let t = solve_intertwiner(&[a], &[b]).unwrap().unwrap();
        assert_eq!(t, ints(&[&[0, 1], &[1, 0]]));
    }

    #[test]
    fn equal_character_projective_reps() {
        // Two presentations of the 2-dim projective rep of Z2^3 where the
        // last two generators anticommute: (−1, diag(1,−1), swap) and
        // (−1, swap, diag(1,−1)). Solving the 4-unknown system by hand gives
        // T = [[1,1],[1,−1]] up to scale.
        let neg = ints(&[&[-1, 0], &[0, -1]]);
        let d = ints(&[&[1, 0], &[0, -1]]);
        let s = ints(&[&[0, 1], &[1, 0]]);
        let a = [neg.clone(), d.clone(), s.clone()];
        let b = [neg, s, d];
        let t = solve_intertwiner(&a, &b).unwrap().unwrap();
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(&t * x, y * &t);
        }
        assert_eq!(t[(0, 0)], t[(0, 1)]);
        assert_eq!(t[(1, 0)], -&t[(1, 1)]);
        assert_eq!(t[(0, 0)], t[(1, 0)]);
    }

    #[test]
    fn non_isomorphic_reps_have_no_intertwiner() {
        let a = ints(&[&[1, 0], &[0, -1]]);
        let b = ints(&[&[2, 0], &[0, -1]]);
        assert!(solve_intertwiner(&[a], &[b]).unwrap().is_none());
        let c = ints(&[&[1]]);
        assert!(solve_intertwiner(&[c], &[Matrix::identity(2, 1)]).unwrap().is_none());
    }

    #[test]
    fn singular_commutant_is_inconclusive() {
        // Hom(trivial², sign ⊕ trivial) is 2-dimensional but never invertible
        let a = ints(&[&[1, 0], &[0, 1]]);
        let b = ints(&[&[1, 0], &[0, -1]]);
        assert!(matches!(solve_intertwiner(&[a], &[b]), Err(Error::Inconclusive(_))));
    }

    #[test]
    fn non_simple_search_finds_invertible() {
        // commutant of diag(1,1,2) is GL2 × GL1, 5-dimensional
        let m = ints(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 2]]);
        let p = ints(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]]);
        let conj = &(&p * &m) * &p;
        let t = solve_intertwiner(std::slice::from_ref(&m), std::slice::from_ref(&conj)).unwrap().unwrap();
        assert_eq!(&t * &m, &conj * &t);
        assert!(!t.det().unwrap().is_zero());
    }
}
