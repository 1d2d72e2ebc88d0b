use thiserror::Error;

#[derive(Error, Debug)]
pub enum Error {
    #[error("invalid rank {rank} for family {family}")]
    InvalidRank { family: &'static str, rank: usize },

    #[error("weight has {got} coordinates, expected {want}")]
    WeightLength { got: usize, want: usize },

    #[error("weight lies outside the level-{level} alcove")]
    OutsideAlcove { level: u32 },

    #[error("alcove enumeration would exceed {max} objects")]
    AlcoveOverflow { max: u64 },

    #[error("root location is only defined for simply-laced types")]
    NotSimplyLaced,

    #[error("{0}")]
    BadInput(String),

    #[error("catalog io: {0}")]
    Io(#[from] std::io::Error),

    #[error("catalog parse: {0}")]
    Json(#[from] serde_json::Error),
}
