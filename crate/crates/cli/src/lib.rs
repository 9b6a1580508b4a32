//! File formats, reports and command dispatch for the `codimlab` binary.

pub mod doc;
pub mod report;
pub mod run;

pub use run::{run, Outcome, RunConfig};
