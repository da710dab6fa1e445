//! Exact scalars and dense linear algebra.
//!
//! Everything downstream works over a cyclotomic field `Q(ζ_N)`; no floating
//! point is used anywhere in the crate.

mod cyclotomic;
mod intertwiner;
mod literal;
mod matrix;

pub use cyclotomic::{cyclotomic_polynomial, euler_phi, CycNumber, CyclotomicField};
pub use intertwiner::{solve_intertwiner, INTERTWINER_SEARCH_BOUND};
pub use literal::{parse_rational, CycLiteral};
pub use matrix::{Matrix, RankKernel};

/// Arbitrary-precision rational; always kept in lowest terms with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

pub(crate) fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}
