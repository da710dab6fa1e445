//! Semi-Cartan graphs: exploration of the reflection orbit of a tuple,
//! axioms CG1 and CG2, standardness, connectivity and DOT export.
//!
//! Graphs can also be given directly as exchange data, bypassing the
//! algebra layer.

mod connectivity;
mod explore;
mod graph;

pub use connectivity::{connectivity, Connectivity, Witness};
pub use explore::explore;
pub use graph::{is_standard, CartanGraph, GraphViolation};
