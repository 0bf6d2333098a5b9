use thiserror::Error;

use crate::exact::Rat;

#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix power {order} is not the identity")]
    NotTorsion { order: u32 },

    #[error("no power k <= {cap} of the matrix is the identity")]
    OrderExceedsCap { cap: u32 },

    #[error("torsion class T{id}: {detail}")]
    Transcription { id: usize, detail: String },

    #[error("zeta value {value} for weight {weight} outside [0, {max}]")]
    ZetaOutOfRange { weight: u64, value: u64, max: u64 },

    #[error("negative dimension {value} at (m1, m2) = ({m1}, {m2})")]
    NegativeDimension { m1: u64, m2: u64, value: Rat },

    #[error("fixture {name}: {detail}")]
    Fixture { name: String, detail: String },

    #[error("fixture io: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
