//! The `qhpp` command line: parsing, quasi-homogeneity, homogenization,
//! portrait classification, numerical cross-checks and plot export, with
//! deterministic JSON reports. See `docs/schema.md` for the report keys.

pub mod commands;
pub mod report;

pub use commands::{analyze, catalog, census, oracle_check, plot, resolve_tol, CliError, ExitCode, PlotFormat};
