use std::io;
use std::path::PathBuf;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("{message} at line {line}")]
    Manifest { line: usize, message: String },

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },

    #[error(transparent)]
    Stream(#[from] io::Error),

    #[error("invalid training configuration: {0}")]
    Config(String),

    #[error("no trainable vocabulary")]
    EmptyVocabulary,

    #[error("cannot compose a vector for an empty word")]
    EmptyWord,

    #[error("non-finite loss {loss} in epoch {epoch} after {tokens} tokens (lr {lr})")]
    NonFiniteLoss {
        loss: f64,
        epoch: u32,
        tokens: u64,
        lr: f64,
    },

    #[error("not a model file (bad magic {0:?})")]
    BadMagic([u8; 4]),

    #[error("unsupported version {0}")]
    UnsupportedVersion(u32),

    #[error("malformed model file: {0}")]
    Format(String),

    #[error("empty document after vocabulary projection")]
    EmptyDocument,

    #[error("at least two documents are required, got {0}")]
    TooFewDocuments(usize),

    #[error("transport solver did not converge: {0}")]
    Solver(String),
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
