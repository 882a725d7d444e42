//! Command implementations behind the `legendre-ladder` binary. Each command
//! returns a serializable value with a plain-text rendering.

pub mod build;
pub mod fields;
pub mod figure;
pub mod number;
pub mod verify;

use clap::ValueEnum;
use serde::Serialize;

/// Process exit status for a successful run.
pub const EXIT_OK: u8 = 0;
/// Process exit status when a verification suite reports a failed case.
pub const EXIT_VERIFICATION_FAILED: u8 = 1;
/// Process exit status for invalid arguments or unreadable input.
pub const EXIT_USAGE: u8 = 2;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] legendre_ladder::Error),
    #[error("{0}")]
    Usage(String),
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

/// Renders `value` as pretty JSON with a trailing newline, or as its text form.
pub fn render<T: Serialize>(format: Format, value: &T, text: impl FnOnce(&T) -> String) -> String {
    match format {
        Format::Text => text(value),
        Format::Json => {
            let mut s = serde_json::to_string_pretty(value).expect("output types serialize");
            s.push('\n');
            s
        }
    }
}
