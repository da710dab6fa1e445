pub mod cartangraph;
pub mod cli;
pub mod error;
pub mod exact;
pub mod fixtures;
pub mod groupdata;
pub mod nichols;
pub mod reflect;
pub mod titscone;
pub mod weylroots;
pub mod ydmod;

pub use error::{Error, Result};
