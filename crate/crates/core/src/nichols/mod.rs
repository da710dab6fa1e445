//! Braided tensor powers, Woronowicz symmetrizers, Nichols-algebra Hilbert
//! series, the induced pairing, adjoint iterates and Cartan integers.
//!
//! All tensors are stored left-nested, `((x₁⊗x₂)⊗x₃)⊗⋯`, and organised by
//! multidegree over a formal direct sum `V = ⊕ M_s` (see [`Component`]).
//! The braid generator `σ_i` carries the associator scalar
//! `Φ(ℓ,h,g)/Φ(ℓ,g,h)` needed to move the pair it braids into position.

mod adjoint;
mod algebra;
mod hilbert;

pub use adjoint::{
    ad_iterate, ad_level_zero, ad_levels, ad_next, cartan_entry, is_zero_in_nichols, AdLevel, TensorElement,
};
pub use algebra::{Component, NicholsCaps, SparseVec, SymmetrizerEntry, TensorAlgebra};
pub use hilbert::{braid_op, nichols_dims, nichols_dims_in, pairing_gram, symmetrizer};
