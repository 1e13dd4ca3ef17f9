use thiserror::Error;

use crate::order::BoundWitness;
use crate::Elem;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("relations contain a cycle through {0:?}")]
    Cycle(Vec<Elem>),

    #[error("element {elem} out of range for {n} elements")]
    OutOfRange { elem: usize, n: usize },

    #[error("the poset is empty")]
    EmptyPoset,

    #[error("not a lattice: {0}")]
    NotLattice(BoundWitness),

    #[error("{what} size {got} exceeds the limit {limit}")]
    CapExceeded {
        what: &'static str,
        got: usize,
        limit: usize,
    },

    #[error("not woven: ({0}, {1}) has neither join nor meet inside")]
    NotWoven(Elem, Elem),

    #[error("the set already contains every element")]
    Full,

    #[error("empty input")]
    EmptyInput,

    #[error("function is not submodular at pair ({0}, {1})")]
    NotSubmodular(Elem, Elem),

    #[error("function is not symmetric: f({0}) != f({1})")]
    NotSymmetricFunction(Elem, Elem),

    #[error("set is not closed under the involution: contains {0} but not {1}")]
    NotSymmetric(Elem, Elem),

    #[error("invalid involution: {0}")]
    InvalidInvolution(String),

    #[error("value table has {got} entries, expected {expected}")]
    TableSize { got: usize, expected: usize },

    #[error("graph is not 4-regular: vertex {vertex} has degree {degree}")]
    NotFourRegular { vertex: usize, degree: usize },

    #[error("graph is not bipartite")]
    NotBipartite,

    #[error("no perfect matching in a regular bipartite graph")]
    MatchingFailure,

    #[error("infeasible parameters: {0}")]
    Infeasible(String),

    #[error("unknown {what}: {value}")]
    Unknown { what: &'static str, value: String },

    #[error("loop at vertex {0}")]
    Loop(usize),

    #[error("repeated edge {0}-{1}")]
    MultiEdge(usize, usize),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invariant violated: {0}")]
    InvariantViolation(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }
}
