use crate::tiling::Violation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid tiling: {}", join(.0))]
    InvalidTiling(Vec<Violation>),
    #[error("unsupported tile count {0}: the unit square has no tiling with 2, 3 or 5 squares and n = 1 is trivial")]
    UnsupportedCount(usize),
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("tile index {index} out of range for a tiling of {len} tiles")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("precondition unmet: {0}")]
    PreconditionUnmet(String),
    #[error("malformed profile: {0}")]
    MalformedProfile(String),
    #[error("node budget of {budget} exceeded")]
    ResourceLimit { budget: u64 },
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("no tiling with {n} tiles at any resolution q <= {q_max}")]
    NoTilingFound { n: usize, q_max: u32 },
    #[error(
        "the largest-tile bound does not apply to odd tile count {0} unless the tiling is minimal"
    )]
    ParityUnsupported(usize),
    #[error("tiling is not minimal: sigma = {sigma}, minimum = {minimum}")]
    NonMinimal { sigma: String, minimum: String },
}

fn join(violations: &[Violation]) -> String {
    violations
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("; ")
}
