//! Cartan graphs given directly by matrices, without modules.
//!
//! `cargo run --example abstract_a2`

use nichols_weyl::cartangraph::CartanGraph;
use nichols_weyl::reflect::CartanMatrix;
use nichols_weyl::titscone::classify_cone;
use nichols_weyl::weylroots::{cartan_axioms, real_roots};

fn main() -> nichols_weyl::Result<()> {
    let cases = [
        ("A2", vec![vec![2, -1], vec![-1, 2]]),
        ("B2", vec![vec![2, -2], vec![-1, 2]]),
        ("A1^(1)", vec![vec![2, -2], vec![-2, 2]]),
        ("A2^(1)", vec![vec![2, -1, -1], vec![-1, 2, -1], vec![-1, -1, 2]]),
        ("hyperbolic", vec![vec![2, -3], vec![-3, 2]]),
    ];
    for (name, rows) in cases {
        let g = CartanGraph::single(name, CartanMatrix::new(rows)?);
        let (report, _) = classify_cone(&g, 0, 8)?;
        let roots = real_roots(&g, 0, 8).len();
        let axioms = cartan_axioms(&g, 6).passed();
        println!("{name:>10}: {}, roots within L=8: {roots}, axioms: {axioms}", report.classification);
    }
    Ok(())
}
