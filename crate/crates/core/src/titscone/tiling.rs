use std::fmt::Write as _;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use serde::Serialize;

use super::chamber::Chamber;
use crate::cartangraph::CartanGraph;
use crate::error::{Error, Result};
use crate::weylroots::real_roots;

/// Grid points of the slice `δ = 1` in the square `[−side, side]^{θ−1}`
/// with coordinates `a/denominator`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Grid {
    pub side: i64,
    pub denominator: i64,
}

/// Affine coordinates of the slice: `x(p) = c + Σ p_k u_k` with
/// `c = (1/θ) Σ e_i / v_i` and `u_k = e_k / v_k − e_θ / v_θ`.
///
/// Points are handled as integer vectors `scale · x(p)`.
#[derive(Debug, Clone)]
pub struct Slice {
    v: Vec<i64>,
    denominator: i64,
    scale: i64,
}

impl Slice {
    pub fn new(v: &[i64], denominator: i64) -> Self {
        let theta = v.len() as i64;
        let l = v.iter().fold(1i64, |acc, &x| acc.lcm(&x));
        Slice { v: v.to_vec(), denominator, scale: theta * denominator * l }
    }

    pub fn scale(&self) -> i64 {
        self.scale
    }

    /// `scale · x(a / denominator)`.
    pub fn point(&self, a: &[i64]) -> Vec<i64> {
        let theta = self.v.len();
        let mut x: Vec<i64> = self.v.iter().map(|&vi| self.scale / (theta as i64 * vi)).collect();
        for (k, &ak) in a.iter().enumerate() {
            let step = self.scale / self.denominator;
            x[k] += ak * step / self.v[k];
            x[theta - 1] -= ak * step / self.v[theta - 1];
        }
        x
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TilingReport {
    pub grid: Grid,
    pub bound: usize,
    pub points: usize,
    pub covered: usize,
    /// Points lying on a wall of some covering alcove and in no open alcove.
    pub boundary: usize,
    /// Grid numerators of points strictly inside two distinct alcoves.
    pub double_interior: Vec<Vec<i64>>,
    /// Uncovered points separated from the base alcove by more than `bound`
    /// hyperplanes: these need longer words.
    pub uncovered_ring: usize,
    /// Uncovered points at most `bound` hyperplanes away: genuine gaps.
    pub uncovered_inside: Vec<Vec<i64>>,
    /// Covered points more than `bound` hyperplanes away: impossible for a
    /// correct tiling.
    pub covered_beyond: Vec<Vec<i64>>,
}

impl TilingReport {
    pub fn passed(&self) -> bool {
        self.double_interior.is_empty() && self.uncovered_inside.is_empty() && self.covered_beyond.is_empty()
    }
}

fn grid_numerators(dims: usize, limit: i64) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..dims {
        out = out
            .into_iter()
            .flat_map(|p| {
                (-limit..=limit).map(move |a| {
                    let mut q = p.clone();
                    q.push(a);
                    q
                })
            })
            .collect();
    }
    out
}

/// Grid check of the alcove tessellation of `δ = 1` by the chambers.
///
/// A point is expected to be covered exactly when the number `n(x)` of
/// positive roots negative at `x` is at most `bound`, since `n(x)` is the
/// least length of an alcove whose closure contains `x`. Positive roots
/// are taken from words of length `≤ 4·bound + 4`.
pub fn alcove_tiling_check(
    g: &CartanGraph,
    base: usize,
    chambers: &[Chamber],
    v: &[i64],
    bound: usize,
    grid: Grid,
) -> Result<TilingReport> {
    let theta = g.rank();
    if theta < 2 || v.len() != theta || v.iter().any(|&x| x <= 0) {
        return Err(Error::Unsupported("alcove check needs an affine graph of rank ≥ 2".into()));
    }
    if grid.side < 0 || grid.denominator <= 0 {
        return Err(Error::Invalid("grid side must be ≥ 0 and denominator > 0".into()));
    }
    let slice = Slice::new(v, grid.denominator);
    let positive: Vec<Vec<i64>> = real_roots(g, base, 4 * bound + 4)
        .roots
        .into_iter()
        .filter(|r| r.iter().all(|&c| c >= 0))
        .collect();
    let mut report = TilingReport {
        grid,
        bound,
        points: 0,
        covered: 0,
        boundary: 0,
        double_interior: Vec::new(),
        uncovered_ring: 0,
        uncovered_inside: Vec::new(),
        covered_beyond: Vec::new(),
    };
    for a in grid_numerators(theta - 1, grid.side * grid.denominator) {
        let x = slice.point(&a);
        report.points += 1;
        let (mut closed, mut open) = (0usize, 0usize);
        for ch in chambers {
            let vals = ch.values(&x);
            if vals.iter().all(|&t| t > 0) {
                open += 1;
                closed += 1;
            } else if vals.iter().all(|&t| t >= 0) {
                closed += 1;
            }
        }
        let depth = positive.iter().filter(|r| r.iter().zip(&x).map(|(c, xi)| c * xi).sum::<i64>() < 0).count();
        if open > 1 {
            report.double_interior.push(a.clone());
        }
        if closed > 0 {
            report.covered += 1;
            if open == 0 {
                report.boundary += 1;
            }
            if depth > bound {
                report.covered_beyond.push(a);
            }
        } else if depth > bound {
            report.uncovered_ring += 1;
        } else {
            report.uncovered_inside.push(a);
        }
    }
    Ok(report)
}

fn render(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Vertices `r_k / δ(r_k)` of every alcove, one line per chamber:
/// `word: (x_1, …, x_θ) (…) …` with exact rational coordinates.
pub fn vertex_dump(chambers: &[Chamber], v: &[i64]) -> String {
    let mut s = String::new();
    for ch in chambers {
        let word: String = if ch.word.is_empty() {
            "e".into()
        } else {
            ch.word.iter().map(|i| format!("r{}", i + 1)).collect::<Vec<_>>().join("")
        };
        let _ = write!(s, "{word}:");
        for ray in ch.rays() {
            let d: i64 = ray.iter().zip(v).map(|(a, b)| a * b).sum();
            let coords: Vec<String> =
                ray.iter().map(|&c| render(&BigRational::new(BigInt::from(c), BigInt::from(d)))).collect();
            let _ = write!(s, " ({})", coords.join(", "));
        }
        s.push('\n');
    }
    s
}
