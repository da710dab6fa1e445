//! Geometric realization of a Cartan graph: chambers, the affine null
//! vector, half-space containment of chambers and a grid check of the
//! alcove tessellation of the level-one slice.
//!
//! Points of `V` are written in coordinates dual to the basis `φ_i` of
//! `V*`, so a covector is evaluated by an ordinary dot product.

mod chamber;
mod cone;
mod tiling;

pub use chamber::{realize, realize_by_object, Chamber};
pub use cone::{classify_cone, positive_null_vector, ConeType, TitsReport};
pub use tiling::{alcove_tiling_check, vertex_dump, Grid, Slice, TilingReport};

#[cfg(test)]
mod tests;
