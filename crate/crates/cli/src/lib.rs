//! Command line surface of the workspace: argument parsing, rendering and
//! the verification harness behind `klrw verify`.

pub mod args;
pub mod commands;

pub use args::{Cli, Format};
pub use commands::{run, Output};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("invalid input: {0}")]
    Input(String),
    #[error("i/o: {0}")]
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Input(_) => 2,
            CliError::Io(_) => 1,
        }
    }
}

/// Size the global rayon pool from `KLRW_WORKERS` when set.
pub fn init_workers() -> Result<(), CliError> {
    let Ok(v) = std::env::var("KLRW_WORKERS") else {
        return Ok(());
    };
    let n: usize = v
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| CliError::Usage(format!("KLRW_WORKERS: expected a positive integer, got {v:?}")))?;
    rayon::ThreadPoolBuilder::new().num_threads(n).build_global().map_err(|e| CliError::Usage(e.to_string()))
}
