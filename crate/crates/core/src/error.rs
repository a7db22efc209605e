//! Error and rejection types shared across the crate.

use thiserror::Error;

/// Errors produced by graph construction, index computation, and I/O.
#[derive(Debug, Error)]
pub enum Error {
    #[error("graph not connected")]
    NotConnected,

    #[error("self-loop at vertex {vertex}")]
    SelfLoop { vertex: usize },

    #[error("duplicate edge ({u}, {v})")]
    DuplicateEdge { u: usize, v: usize },

    #[error("vertex id {vertex} out of range (vertex count {count})")]
    VertexOutOfRange { vertex: usize, count: usize },

    #[error("edge id {edge} out of range (edge count {count})")]
    EdgeOutOfRange { edge: usize, count: usize },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("{0}")]
    NotPartialCube(Rejection),

    #[error("input not a tree")]
    NotATree,

    #[error("arithmetic overflow in index computation")]
    Overflow,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("graph too large for the naive oracle ({edges} edges, cap {cap})")]
    NaiveSizeExceeded { edges: usize, cap: usize },

    #[error("duplicate hexagon ({q}, {r})")]
    DuplicateHexagon { q: i64, r: i64 },

    #[error("hexagon set not connected (hexagon ({q}, {r}) unreachable)")]
    DisconnectedHexes { q: i64, r: i64 },

    #[error("hole detected: system is not simply connected")]
    HoleDetected,

    #[error("internal consistency error: {0}")]
    Internal(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Why a graph failed partial-cube certification.
///
/// A rejection is an ordinary value: recognition failing on a valid input is
/// an answer, not a fault.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Rejection {
    /// The graph contains an odd cycle; the witness lists the cycle vertices.
    NotBipartite { odd_cycle: Vec<usize> },
    /// Removing the given Θ*-class does not leave exactly two components.
    ClassNotCut { class: usize },
    /// Hamming distance of the vertex labels disagrees with BFS distance.
    DistanceMismatch {
        u: usize,
        v: usize,
        hamming: u64,
        distance: u64,
    },
}

impl std::fmt::Display for Rejection {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Rejection::NotBipartite { .. } => write!(f, "not a partial cube (odd cycle)"),
            Rejection::ClassNotCut { class } => {
                write!(f, "not a partial cube (class {class} not a cut)")
            }
            Rejection::DistanceMismatch {
                u,
                v,
                hamming,
                distance,
            } => write!(
                f,
                "not a partial cube (label distance {hamming} != graph distance {distance} for vertices {u}, {v})"
            ),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

/// `a + b` with overflow reported as a hard error.
#[inline]
pub fn add(a: u64, b: u64) -> Result<u64> {
    a.checked_add(b).ok_or(Error::Overflow)
}

/// `a * b` with overflow reported as a hard error.
#[inline]
pub fn mul(a: u64, b: u64) -> Result<u64> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

/// `m choose 2` with overflow reported as a hard error.
#[inline]
pub fn binom2(m: u64) -> Result<u64> {
    if m < 2 {
        return Ok(0);
    }
    Ok(mul(m, m - 1)? / 2)
}
