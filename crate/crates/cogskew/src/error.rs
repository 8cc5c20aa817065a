use std::path::PathBuf;

use crate::pnm::PnmError;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error(transparent)]
    Pnm(#[from] PnmError),

    #[error("png: {0}")]
    Png(#[from] image::ImageError),

    #[error("unrecognised image format (expected PGM or PNG)")]
    UnknownFormat,

    #[error(transparent)]
    Glyph(#[from] cogskew_core::Error),

    #[error("unknown fixture '{0}'")]
    UnknownFixture(String),

    #[error("manifest line {line}: {message}")]
    Manifest { line: usize, message: String },

    #[error("no readable PGM or PNG images in {0}")]
    EmptyCorpus(PathBuf),

    #[error("csv: {0}")]
    Csv(#[from] csv::Error),

    #[error("report row {row}: {message}")]
    Report { row: usize, message: String },
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
