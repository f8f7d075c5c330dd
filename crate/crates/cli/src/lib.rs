//! Command-line front end for `hankel-core`: sequence generation, transforms,
//! determinant and closed-form evaluation, and identity verification.

pub mod commands;
pub mod config;
pub mod error;
pub mod io;
pub mod table;
pub mod verify;

pub use config::{default_grid, parse_grid, CommandKind, RunConfig};
pub use error::CliError;
pub use io::{emit, parse_bfile, parse_rat, Format};
pub use table::{run_table, Target};
pub use verify::{exit_code, reports_json, run_verify, VerifyReport, IDENTITY_IDS};
