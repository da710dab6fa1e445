//! Reflections of module tuples, Cartan matrices of tuples and the catalog
//! of tuple isomorphism classes.
//!
//! Indices are zero-based throughout the API.

mod cartan;
mod catalog;
mod reflection;

pub use cartan::{cartan_of, CartanMatrix};
pub use catalog::{Catalog, TupleClass};
pub use reflection::{reflect, round_trip, top_iterate, Reflection, RoundTrip};

#[cfg(test)]
mod tests;
