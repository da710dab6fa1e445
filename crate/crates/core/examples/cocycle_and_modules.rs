//! The 3-cocycle on Z2^3 and the six simple Yetter-Drinfeld modules.
//!
//! `cargo run --example cocycle_and_modules`

use nichols_weyl::fixtures;
use nichols_weyl::ydmod::validate;

fn main() {
    let cocycle = fixtures::z2cubed_cocycle();
    println!("group: {}", cocycle.group());
    println!("normalization violations: {}", cocycle.normalization_violations().len());
    println!("3-cocycle violations: {}", cocycle.cocycle_violations(16).len());
    for m in fixtures::z2cubed_modules() {
        let report = validate(&m);
        println!(
            "{}: degree {:?}, dim {}, simple {}, axioms {}",
            m.name(),
            m.degree(),
            m.dim(),
            m.is_simple(),
            if report.passed() { "pass" } else { "FAIL" }
        );
    }
}
