use alloc::string::String;

/// Errors raised by the combinatorial operations.
#[allow(missing_docs)]
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid generator name {0:?}")]
    InvalidName(String),
    #[error("duplicate vertex {0:?}")]
    DuplicateVertex(String),
    #[error("duplicate edge {0:?} -- {1:?}")]
    DuplicateEdge(String, String),
    #[error("self-loop at {0:?}")]
    SelfLoop(String),
    #[error("edge label {0} is not allowed (labels are integers >= 3 or inf)")]
    InvalidLabel(u64),
    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),
    #[error("letter index {0} is not a vertex of the diagram")]
    LetterOutOfRange(usize),
    #[error("the diagram is empty")]
    EmptyDiagram,
    #[error("the diagram is disconnected")]
    Disconnected,
    #[error("the diagram is not a tree")]
    NotATree,
    #[error("the diagram has no labeled edge")]
    NoLabeledEdge,
    #[error("the diagram has more than one labeled edge")]
    MultipleLabeledEdges,
    #[error("the labeled edge {0:?} -- {1:?} has infinite label")]
    InfiniteLabel(String, String),
    #[error("the small cell is infinite; supply a length cap")]
    InfiniteCell,
    #[error("the empty word is not an element of the small cell")]
    EmptyWord,
    #[error("{0:?} is not a rigid word")]
    NotRigid(String),
    #[error("braid orbit exceeded the cap of {0} words")]
    OrbitCapExceeded(usize),
    #[error("word census of {0} words is too large")]
    CensusTooLarge(u64),
    #[error("the multigraph has a loop at {0:?}")]
    LoopEdge(String),
    #[error("unknown vertex {0:?}")]
    UnknownVertex(String),
    #[error("basis elements are not composable")]
    NotComposable,
    #[error("{0:?} is not a vertex of this graph")]
    NotInGraph(String),
    #[error("the given bipartition is not valid for this graph: {0}")]
    NotBipartite(String),
    #[error("the graph is not a simply laced Dynkin diagram")]
    NotAde,
    #[error("Coxeter number must be at least 3, got {0}")]
    InvalidCoxeterNumber(u32),
    #[error("the graph is truncated; identity checks are unavailable")]
    Truncated,
}

/// Result alias used throughout the crate.
pub type Result<T, E = Error> = core::result::Result<T, E>;
