//! Classify the Tits cone and check the alcove tiling of the slice.
//!
//! `cargo run --release --example tits_cone`

use std::sync::Arc;

use nichols_weyl::cartangraph::explore;
use nichols_weyl::fixtures;
use nichols_weyl::nichols::NicholsCaps;
use nichols_weyl::reflect::Catalog;
use nichols_weyl::titscone::{alcove_tiling_check, classify_cone, Grid};

fn main() -> nichols_weyl::Result<()> {
    let catalog = Catalog::seeded(fixtures::z2cubed_modules().into_iter().map(Arc::new))?;
    let g = explore(&fixtures::z2cubed_tuple(), &catalog, NicholsCaps::default(), 256)?;
    let bound = 8;
    let (report, chambers) = classify_cone(&g, 0, bound)?;
    println!("type: {}", report.classification);
    println!("null vector: {:?}, delta: {:?}", report.null_vector, report.delta);
    println!("chambers: {}, hyperplanes: {}", report.chambers, report.hyperplanes);
    println!("half-space verified: {}", report.half_space_verified());
    if let Some(v) = &report.null_vector {
        let tiling = alcove_tiling_check(&g, 0, &chambers, v, bound, Grid { side: 1, denominator: 5 })?;
        println!(
            "grid points: {}, covered: {}, ring: {}, passed: {}",
            tiling.points,
            tiling.covered,
            tiling.uncovered_ring,
            tiling.passed()
        );
    }
    Ok(())
}
