//! Command line front end: algebra files, object descriptors, commands and
//! reports.

pub mod commands;
pub mod corpus;
pub mod descriptor;
pub mod format;
pub mod naming;
pub mod oracle;
pub mod report;

pub use commands::{run, Outcome};
