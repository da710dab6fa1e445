//! Config ingestion and the command layer behind the `nichols-weyl` binary.
//!
//! Exit codes: 0 success, 2 validation failure, 3 cap exceeded, 4 parse
//! error.

mod commands;
mod config;

pub use commands::{
    build_graph, cmd_cartan, cmd_graph, cmd_hilbert, cmd_roots, cmd_titscone, cmd_validate, run, run_text, Command,
    Options, Outcome, Status,
};
pub use config::{AlgebraData, Caps, Config, ConfigBody};
