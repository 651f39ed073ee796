//! File formats, reports and the `speclim` command-line tool built on `speclim-core`.

pub mod cli;
pub mod format;
pub mod report;
pub mod sweep;

pub use cli::run;
