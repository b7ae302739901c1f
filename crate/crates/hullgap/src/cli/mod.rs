//! Command-line surface: problem decisions on input files, the randomized
//! verification suite, the predicate-count benchmark, and the SVG plotter.
//!
//! Exit code conventions, shared by every subcommand:
//! 0 means "no" (or success), 10 means "yes", 1 means usage or input error.

pub mod bench;
pub mod decide;
pub mod files;
pub mod plot;
pub mod rng;
pub mod verify;

pub use bench::{run_bench, BenchOptions, BenchRecord, Family};
pub use decide::{run_decide, Problem, Verdict};
pub use plot::run_plot;
pub use verify::{run_verify, VerifyOptions, VerifyReport};

use thiserror::Error;

pub const EXIT_NO: i32 = 0;
pub const EXIT_YES: i32 = 10;
pub const EXIT_ERROR: i32 = 1;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CliError {
    /// Malformed input with its source location.
    #[error("{path}:{line}: {message}")]
    Parse {
        path: String,
        line: usize,
        message: String,
    },
    /// Filesystem trouble.
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    /// Bad option combination.
    #[error("{0}")]
    Invalid(String),
}
