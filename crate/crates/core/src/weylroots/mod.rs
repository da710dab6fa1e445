//! The Weyl groupoid of a Cartan graph: integer reflection matrices,
//! bounded morphism enumeration, real roots and the Cartan-graph and
//! root-system axioms.
//!
//! Everything is enumerated up to an explicit word-length bound `L`; an
//! "infinite" answer always means "still growing at `L`".

mod morphism;
mod roots;

pub use morphism::{hom_enumerate, morphisms_from, morphisms_into, simple_reflection, WeylMatrix, WeylMorphism};
pub use roots::{cartan_axioms, classify_rank2, rank2_count, real_roots, AxiomReport, Rank2Count, RootSet};

#[cfg(test)]
mod tests;
