//! Finite abelian groups, 3-cocycles, their derived 2-cocycles, and the
//! rebracketing scalars of the tensor category of `G`-graded spaces.

mod cocycle;
mod coherence;
mod formula;
mod group;

pub use cocycle::{derive_two_cocycle, eval_phi, CocycleSource, ThreeCocycle, TwoCocycle};
pub use coherence::{coherence_scalar, mult_scalar, scalar_to_left_comb_with, BracketTree};
pub use group::{AbelianGroup, GroupElement, MAX_GROUP_ORDER};
