//! Batch front end for the `rkdual` verifier: input documents, the check
//! suite, reports and cell-incidence files.

pub mod cellfile;
pub mod commands;
pub mod document;
pub mod report;
pub mod suite;

pub use cellfile::{emit_cells, parse_cells, render_cells, CellParseError, CellRecord};
pub use commands::{run, Command, Options, Output};
pub use document::{Document, InputError};
pub use report::{Report, Table, Verdict};
pub use suite::{Check, Suite, OPERATIONS};
