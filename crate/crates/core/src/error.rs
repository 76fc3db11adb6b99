use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Malformed { line: usize, msg: String },
    #[error("line {line}: duplicate edge {u}-{v}")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("line {line}: self-loop on vertex {v}")]
    SelfLoop { line: usize, v: usize },
    #[error("line {line}: vertex {v} out of range (n = {n})")]
    VertexOutOfRange { line: usize, v: usize, n: usize },
    #[error("graph is disconnected: vertex {unreached} is not reachable from 0")]
    Disconnected { unreached: usize },
    #[error("graph is not a tree")]
    NotATree,
    #[error("graph is not unicyclic")]
    NotUnicyclic,
    #[error("not a cactus")]
    NotCactus,
    #[error("hop radius must be at least 1, got {0}")]
    InvalidK(usize),
    #[error("vertex {0} is out of range")]
    InvalidVertex(usize),
    #[error("dominating set is empty")]
    EmptySet,
    #[error("arc {id}: position {pos} outside the domain of {n} positions")]
    PositionOutOfRange { id: usize, pos: usize, n: usize },
    #[error("instance has no arcs")]
    NoArcs,
    #[error("position {0} is not in the circular domain")]
    RhoNotInDomain(usize),
    #[error("vertex {0} is not on the cycle")]
    RhoNotOnCycle(usize),
    #[error("vertex {0} has no back edge")]
    NoBackEdge(usize),
    #[error("m = {given} does not match the optimum {expected}")]
    InvalidM { given: usize, expected: usize },
    #[error("instance too large for exhaustive search ({size} > {limit})")]
    TooLarge { size: usize, limit: usize },
    #[error("invalid generator shape: {0}")]
    BadShape(String),
}
