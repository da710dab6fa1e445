//! Homogeneous Yetter–Drinfeld modules over `(kG, Φ)`: validation, braiding,
//! tensor products, duals and isomorphism tests.

mod module;
mod tensor;
mod tuple;

pub use module::{iso_test, validate, Fingerprint, ModuleViolation, ValidationReport, YDModule};
pub use tensor::{
    braiding, dual, inverse_braiding, tensor_action, tensor_power_scalar, tensor_product, tensor_scalar,
};
pub use tuple::ModuleTuple;
