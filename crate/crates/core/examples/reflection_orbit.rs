//! Explore the reflection orbit of the tuple into a Cartan graph.
//!
//! `cargo run --release --example reflection_orbit`

use std::sync::Arc;

use nichols_weyl::cartangraph::{connectivity, explore, is_standard};
use nichols_weyl::fixtures;
use nichols_weyl::nichols::NicholsCaps;
use nichols_weyl::reflect::Catalog;

fn main() -> nichols_weyl::Result<()> {
    let catalog = Catalog::seeded(fixtures::z2cubed_modules().into_iter().map(Arc::new))?;
    let g = explore(&fixtures::z2cubed_tuple(), &catalog, NicholsCaps::default(), 256)?;
    println!("objects: {}", g.object_count());
    for x in 0..g.object_count() {
        println!("  {:>2} {} word {:?}", x, g.label(x), g.word(x));
    }
    println!("closed: {}, standard: {}", g.is_closed(), is_standard(&g));
    println!("axiom violations: {}", g.violations().len());
    let back = g.walk(0, &[1, 0, 1, 0, 1, 0]);
    println!("(r1 r2)^3 from object 0 returns to {back:?}");
    let c = connectivity(&g, 8);
    println!("{c:?}");
    Ok(())
}
