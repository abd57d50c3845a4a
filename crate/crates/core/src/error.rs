use thiserror::Error;

use crate::vertex_set::{Vertex, MAX_VERTICES};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph would have {0} vertices; the limit is {MAX_VERTICES}")]
    TooManyVertices(usize),

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),

    #[error("relabeling is not a permutation of the vertex set")]
    NotAPermutation,

    #[error("label list has {got} entries for a graph on {n} vertices")]
    LabelCount { got: usize, n: usize },

    #[error("vertex set {set} is not contained in a graph on {n} vertices")]
    SetOutOfRange { set: String, n: usize },

    #[error("invalid graph6 input: {0}")]
    Graph6(#[from] Graph6Error),

    #[error("invalid family: {0}")]
    Family(String),

    #[error("isomorphism test refused: {n} vertices exceeds the exact-matching limit {limit}")]
    IsomorphismLimit { n: usize, limit: usize },

    #[error("vertex {0} is not a member of the set")]
    NotInSet(Vertex),

    #[error("{0} is not an IR-set")]
    NotIrSet(String),

    #[error("invalid flip choice: {0}")]
    InvalidFlip(String),

    #[error("IR-set enumeration refused: more than {cap} IR-sets")]
    TooManyIrSets { cap: usize },

    #[error("invalid construction input: {0}")]
    Construction(String),

    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),

    #[error("invalid edge-list JSON: {0}")]
    Json(String),

    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty input")]
    Empty,

    #[error("byte {byte:#04x} at offset {offset} is outside the printable graph6 range")]
    InvalidByte { offset: usize, byte: u8 },

    #[error("truncated or malformed length field")]
    MalformedLength,

    #[error("encoded order {0} exceeds the vertex limit")]
    TooLarge(usize),

    #[error("expected {expected} adjacency bytes, found {found}")]
    WrongLength { expected: usize, found: usize },

    #[error("padding bits in the final byte are not zero")]
    NonzeroPadding,
}
