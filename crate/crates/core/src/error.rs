use alloc::string::String;

use crate::network::{EdgeId, VertexId};

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("strip bounds must satisfy a < b")]
    EmptyStrip,
    #[error("duplicate {kind} id {id}")]
    DuplicateId { kind: &'static str, id: u32 },
    #[error("edge {edge} refers to unknown vertex {vertex}")]
    UnknownVertex { edge: EdgeId, vertex: VertexId },
    #[error("edge {0} is parallel to the y-axis")]
    VerticalEdge(EdgeId),
    #[error("edge {0} runs right to left")]
    ReversedEdge(EdgeId),
    #[error("edges {0} and {1} intersect away from a shared endpoint")]
    CrossingEdges(EdgeId, EdgeId),
    #[error("vertex {vertex} lies on the interior of edge {edge}")]
    VertexOnEdge { vertex: VertexId, edge: EdgeId },
    #[error("vertices {0} and {1} occupy the same point")]
    CoincidentVertices(VertexId, VertexId),
    #[error("vertex {0} lies outside the strip")]
    VertexOutsideStrip(VertexId),
    #[error("edge {0} has multiplicity other than 1")]
    InvalidMultiplicity(EdgeId),
    #[error("network has no rank (boundary heights are not 1..n)")]
    RankMissing,
    #[error("index {k} out of range 0..={max}")]
    KOutOfRange { k: usize, max: usize },
    #[error("networks are not composable: {0}")]
    NotComposable(&'static str),
    #[error("network has no middle line")]
    NotConcatenated,
    #[error("n = {0} is out of range")]
    NOutOfRange(usize),
    #[error("no weight given for edge {0}")]
    MissingWeight(EdgeId),
    #[error("weight given for unknown edge {0}")]
    UnknownEdge(EdgeId),
    #[error("enumeration exceeded the cap of {0} objects")]
    ExplosionGuard(usize),
    #[error("invalid multipath: {0}")]
    InvalidMultipath(String),
    #[error("tableau entry t^{k}_{i} is not finite")]
    NonFiniteEntry { k: usize, i: usize },
    #[error("tableau entry t^{k}_0 is not zero")]
    NonZeroFirstColumn { k: usize },
    #[error("tableau size mismatch: expected n = {expected}, got {got}")]
    SizeMismatch { expected: usize, got: usize },
    #[error("trace mismatch: sum(lambda) + sum(mu) != sum(nu)")]
    TraceMismatch,
    #[error("sequence {0} is not weakly decreasing")]
    NotSorted(&'static str),
    #[error("n = {n} exceeds the configured cap {cap}")]
    NTooLarge { n: usize, cap: usize },
    #[error("linear system is singular")]
    SingularSystem,
    #[error("unknown cell [{k},{i}]")]
    UnknownCell { k: usize, i: usize },
    #[error("unknown region [{k},{i}]")]
    UnknownRegion { k: usize, i: usize },
    #[error("type mismatch: {0}")]
    TypeMismatch(String),
    #[error("a height occurs more than twice at x = {0}")]
    TripleContact(String),
    #[error("no coloring with the requested counts exists")]
    InfeasibleColoring,
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("eigensolver did not converge")]
    NoConvergence,
}
