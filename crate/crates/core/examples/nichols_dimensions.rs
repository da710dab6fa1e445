//! Graded dimensions of Nichols algebras up to a chosen degree.
//!
//! `cargo run --release --example nichols_dimensions`

use nichols_weyl::fixtures;
use nichols_weyl::nichols::{nichols_dims, NicholsCaps};

fn main() -> nichols_weyl::Result<()> {
    let caps = NicholsCaps::default();
    for q in [-1, 1] {
        let m = fixtures::diagonal_module(q);
        println!("q = {q:>2}: {:?}", nichols_dims(&[&m], 4, caps)?);
    }
    let modules = fixtures::z2cubed_modules();
    for m in &modules {
        println!("B({}): {:?}", m.name(), nichols_dims(&[m], 4, caps)?);
    }
    let pair = [&modules[0], &modules[1]];
    println!("B(M1 + M2): {:?}", nichols_dims(&pair, 3, caps)?);
    Ok(())
}
