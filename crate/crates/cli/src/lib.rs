//! Front end for `orthoql`: instance files, lattice expressions and law
//! reports.

pub mod commands;
pub mod error;
pub mod expr;
pub mod instance;
pub mod render;

pub use error::CliError;
pub use instance::{Instance, InstanceFile};
