//! Ready-made groups, cocycles and modules.
//!
//! The rank-3 affine example lives over `G = Z2³` with
//! `Φ(h^i, h^j, h^k) = (−1)^{k₁j₂i₃}`. Each of the six degrees
//! `h1, h2, h3, h1h2, h1h3, h2h3` carries exactly one two-dimensional simple
//! module on which the degree acts by `−1`; with `D = diag(1,−1)` and
//! `S = [[0,1],[1,0]]` the generator matrices `(ρ(h1), ρ(h2), ρ(h3))` are
//!
//! | module | degree | ρ(h1) | ρ(h2) | ρ(h3) |
//! |--------|--------|-------|-------|-------|
//! | M1     | h1     | −I    | D     | S     |
//! | M2     | h2     | D     | −I    | S     |
//! | M3     | h3     | D     | S     | −I    |
//! | M4     | h1h2   | D     | −D    | S     |
//! | M5     | h1h3   | D     | S     | −D    |
//! | M6     | h2h3   | S     | D     | −D    |
//!
//! The same data ships as TOML in `fixtures/affine_z2cubed.toml`.

use std::sync::Arc;

use crate::exact::{CycNumber, Matrix};
use crate::groupdata::{AbelianGroup, ThreeCocycle};
use crate::ydmod::{ModuleTuple, YDModule};

pub const AFFINE_Z2CUBED_TOML: &str = include_str!("../fixtures/affine_z2cubed.toml");
pub const ABSTRACT_A2_TOML: &str = include_str!("../fixtures/abstract_a2.toml");
pub const ABSTRACT_INDEFINITE_TOML: &str = include_str!("../fixtures/abstract_indefinite.toml");
pub const DIAGONAL_Q1_TOML: &str = include_str!("../fixtures/diagonal_q1.toml");
pub const DIAGONAL_QM1_TOML: &str = include_str!("../fixtures/diagonal_qm1.toml");
pub const CAP_EXCEEDED_TOML: &str = include_str!("../fixtures/cap_exceeded.toml");
pub const NON_COCYCLE_TOML: &str = include_str!("../fixtures/non_cocycle.toml");
pub const UNKNOWN_MODULE_TOML: &str = include_str!("../fixtures/unknown_module.toml");

pub fn z2cubed_cocycle() -> Arc<ThreeCocycle> {
    let g = AbelianGroup::new(vec![2, 2, 2]).expect("valid group");
    Arc::new(ThreeCocycle::from_formula(g, "minus_one_pow(k1*j2*i3)").expect("valid formula"))
}

fn m2(rows: [[i64; 2]; 2]) -> Matrix {
    Matrix::from_ints(2, &rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
}

/// `M1 … M6` over [`z2cubed_cocycle`] (one shared cocycle instance).
pub fn z2cubed_modules() -> Vec<YDModule> {
    z2cubed_modules_over(&z2cubed_cocycle())
}

pub fn z2cubed_modules_over(c: &Arc<ThreeCocycle>) -> Vec<YDModule> {
    let g = c.group().clone();
    let i = m2([[-1, 0], [0, -1]]);
    let d = m2([[1, 0], [0, -1]]);
    let nd = m2([[-1, 0], [0, 1]]);
    let s = m2([[0, 1], [1, 0]]);
    let table: [(&str, [i64; 3], [&Matrix; 3]); 6] = [
        ("M1", [1, 0, 0], [&i, &d, &s]),
        ("M2", [0, 1, 0], [&d, &i, &s]),
        ("M3", [0, 0, 1], [&d, &s, &i]),
        ("M4", [1, 1, 0], [&d, &nd, &s]),
        ("M5", [1, 0, 1], [&d, &s, &nd]),
        ("M6", [0, 1, 1], [&s, &d, &nd]),
    ];
    table
        .iter()
        .map(|(name, deg, gens)| {
            YDModule::from_generators(
                *name,
                Arc::clone(c),
                g.element(deg),
                gens.iter().map(|m| (*m).clone()).collect(),
            )
            .expect("fixture module")
        })
        .collect()
}

/// `(M1, M2, M3)`.
pub fn z2cubed_tuple() -> ModuleTuple {
    let ms = z2cubed_modules();
    ModuleTuple::new(ms[..3].to_vec()).expect("fixture tuple")
}

/// One-dimensional module of degree `e` with trivial action, over `Z2` with
/// trivial cocycle.
pub fn trivial_module() -> YDModule {
    let g = AbelianGroup::new(vec![2]).expect("valid group");
    let c = Arc::new(ThreeCocycle::trivial(g.clone()));
    YDModule::from_generators("k", c, g.identity(), vec![Matrix::identity(1, 1)]).expect("trivial module")
}

/// One-dimensional module over `Z2` (trivial cocycle) of degree `h1` on which
/// `h1` acts by `q ∈ {1, −1}`, so the self-braiding is `q`.
pub fn diagonal_module(q: i64) -> YDModule {
    assert!(q == 1 || q == -1, "q must be ±1 over Z2");
    let g = AbelianGroup::new(vec![2]).expect("valid group");
    let c = Arc::new(ThreeCocycle::trivial(g.clone()));
    YDModule::from_generators(format!("x(q={q})"), c, g.generator(0), vec![Matrix::from_ints(1, &[vec![q]])])
        .expect("diagonal module")
}

/// A diagonal braiding of rank `θ = k.len()` with `q_ij = ζ_n^{k[i][j]}`,
/// realized over `(Z_n)^θ` with trivial cocycle: slot `i` has degree `h_i`
/// and `h_l` acts on it by `q_li`.
pub fn diagonal_tuple(n: u32, k: &[Vec<i64>]) -> ModuleTuple {
    let theta = k.len();
    let g = AbelianGroup::new(vec![n; theta]).expect("valid group");
    let c = Arc::new(ThreeCocycle::trivial(g.clone()).embed(n));
    let mods = (0..theta)
        .map(|i| {
            let gens = (0..theta)
                .map(|l| Matrix::from_fn(1, 1, n, |_, _| CycNumber::root_of_unity_in(n, n, k[l][i])))
                .collect();
            YDModule::from_generators(format!("x{}", i + 1), Arc::clone(&c), g.generator(i), gens)
                .expect("diagonal module")
        })
        .collect();
    ModuleTuple::new(mods).expect("diagonal tuple")
}
