//! Command-line front end for the `dimreg` integral catalogue.
//!
//! `verify` evaluates every catalogue entry and diagram on an `ε` grid,
//! extrapolates to `D = 1` and compares against the exact limits; `integral`,
//! `diagram` and `energy` expose single quantities. Reports are JSON (default)
//! or CSV with 17 significant digits per float.

pub mod commands;
pub mod report;
pub mod verify;

pub use commands::{run, Cli, Command, Format};
pub use report::{Entry, Num, ReportDocument};
