//! File formats, verification driver and command dispatch on top of
//! [`quadcover_core`].

pub mod commands;
pub mod error;
pub mod expr;
pub mod formats;
pub mod identities;
pub mod text;

pub use commands::{run, Command, Context};
pub use error::{CliError, ErrorKind};
