use thiserror::Error;

use crate::geometry::Point;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// Input violates the general-position assumptions (overlap, shared
    /// endpoint, triple point, self-intersection).
    #[error("degenerate input: {0}")]
    Degeneracy(String),

    #[error("invalid curve: {0}")]
    InvalidCurve(String),

    #[error("point {0} lies on a curve of the arrangement")]
    OnBoundary(Box<Point>),

    #[error("size guard `{guard}` exceeded: {actual} > {limit}")]
    SizeGuard {
        guard: &'static str,
        limit: usize,
        actual: usize,
    },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("conflict-free framework stalled in round {round}: the proper colorer produced an empty class")]
    FrameworkStall { round: usize },

    #[error("conflict-free check failed for shape {shape}: neighborhood {neighborhood:?}")]
    CfCheckFailure {
        shape: usize,
        neighborhood: Vec<usize>,
    },

    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

impl Error {
    pub(crate) fn degeneracy(msg: impl Into<String>) -> Self {
        Error::Degeneracy(msg.into())
    }

    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }
}
