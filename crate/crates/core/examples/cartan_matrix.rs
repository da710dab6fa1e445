//! Cartan matrix of a tuple from vanishing adjoint powers.
//!
//! `cargo run --release --example cartan_matrix`

use nichols_weyl::fixtures;
use nichols_weyl::nichols::NicholsCaps;
use nichols_weyl::reflect::{cartan_of, reflect};

fn main() -> nichols_weyl::Result<()> {
    let caps = NicholsCaps::default();
    let tuple = fixtures::z2cubed_tuple();
    println!("{:?}: {}", tuple.names(), cartan_of(&tuple, caps)?);
    for i in 0..tuple.rank() {
        let r = reflect(&tuple, i, caps)?;
        println!("r{}: {:?} -> {}", i + 1, r.tuple.names(), cartan_of(&r.tuple, caps)?);
    }
    Ok(())
}
