use thiserror::Error;

/// Errors raised by the simulator and its configuration layer.
#[derive(Debug, Error)]
pub enum Error {
    /// A scalar argument outside its valid domain (non-positive frequency, speed, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// Degenerate geometry: coincident endpoints or an antenna sitting on a scatterer.
    #[error("geometry error: {0}")]
    Geometry(String),

    /// Step index beyond the end of the trajectory.
    #[error("step {step} out of range (last step is {last})")]
    Range { step: usize, last: usize },

    /// A geometry failure while running a scenario, tagged with the step it happened at.
    #[error("at step {step}: {source}")]
    AtStep {
        step: usize,
        #[source]
        source: Box<Error>,
    },

    /// Configuration text that failed to parse or validate.
    #[error("config error at line {line}, key `{key}`: {message}")]
    Config {
        line: usize,
        key: String,
        message: String,
    },

    /// Bad command-line arguments.
    #[error("usage error: {0}")]
    Usage(String),

    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn config(line: usize, key: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Config {
            line,
            key: key.into(),
            message: message.into(),
        }
    }

    /// Process exit status for the command-line front end.
    ///
    /// `2` for configuration and usage problems, `3` for everything that fails at run time.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Config { .. } | Error::Usage(_) => 2,
            _ => 3,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
