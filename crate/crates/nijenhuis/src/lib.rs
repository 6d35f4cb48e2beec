//! Command-line front end for `nijenhuis-core`: text and JSON reports, CSV
//! eigenvalue tables and SVG level-line plots.

pub mod cli;
pub mod report;
pub mod svg;
pub mod table;

pub use report::{Outcome, Report, Style};
