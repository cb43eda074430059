use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("not a permutation of 1..={n}: {reason}")]
    InvalidPermutation { n: usize, reason: String },
    #[error("index {index} out of range 1..={n}")]
    OutOfRange { index: usize, n: usize },
    #[error("empty or inverted range [{l}, {r}]")]
    BadRange { l: usize, r: usize },
    #[error("interval {outer} strictly contains interval {inner}")]
    Containment { outer: usize, inner: usize },
    #[error("vertices {u} and {v} are in different components")]
    Unreachable { u: usize, v: usize },
    #[error("{0} is not a neighbor of {1}")]
    NotNeighbor(usize, usize),
    #[error("graph is not bipartite (odd cycle through {0})")]
    NotBipartite(usize),
    #[error("isolated vertex {vertex} is not in the top block; relabel with canonical_relabeling first")]
    IsolatedNotTop { vertex: usize },
    #[error("invalid chord types: pair ({u}, {v}) violates rule {rule}")]
    InvalidChordTypes { u: usize, v: usize, rule: u8 },
    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("labels and global part disagree on n ({0} vs {1})")]
    LabelMismatch(usize, usize),
    #[error("malformed input: {0}")]
    Format(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_vertex(v: usize, n: usize) -> Result<()> {
    if v == 0 || v > n {
        Err(Error::OutOfRange { index: v, n })
    } else {
        Ok(())
    }
}
