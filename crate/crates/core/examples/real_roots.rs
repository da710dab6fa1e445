//! Real roots at an object and the root-system axioms.
//!
//! `cargo run --release --example real_roots`

use std::sync::Arc;

use nichols_weyl::cartangraph::explore;
use nichols_weyl::fixtures;
use nichols_weyl::nichols::NicholsCaps;
use nichols_weyl::reflect::Catalog;
use nichols_weyl::weylroots::{cartan_axioms, rank2_count, real_roots};

fn main() -> nichols_weyl::Result<()> {
    let catalog = Catalog::seeded(fixtures::z2cubed_modules().into_iter().map(Arc::new))?;
    let g = explore(&fixtures::z2cubed_tuple(), &catalog, NicholsCaps::default(), 256)?;
    for bound in [2, 4, 6, 8] {
        let roots = real_roots(&g, 0, bound);
        println!("words of length <= {bound}: {} real roots", roots.len());
    }
    let positive: Vec<_> = real_roots(&g, 0, 4).roots.into_iter().filter(|r| r.iter().all(|&c| c >= 0)).collect();
    println!("positive roots (L=4): {positive:?}");
    println!("rank-2 count at (1,2): {:?}", rank2_count(&g, 0, 0, 1, 9));
    let report = cartan_axioms(&g, 6);
    println!("axioms within L=6: {}", if report.passed() { "pass" } else { "FAIL" });
    Ok(())
}
