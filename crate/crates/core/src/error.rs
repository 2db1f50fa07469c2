use crate::digraph::Vertex;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("loop at vertex {0}")]
    Loop(Vertex),
    #[error("duplicate arc ({0}, {1})")]
    DuplicateArc(Vertex, Vertex),
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
}

/// Rejections for malformed terminal specifications and solver inputs.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SpecError {
    #[error("terminal set needs at least 2 vertices, got {0}")]
    TooFewTerminals(usize),
    #[error("terminal set of size {k} exceeds the {n} vertices of the host")]
    TooManyTerminals { k: usize, n: usize },
    #[error("terminal {0} is not a vertex of the host digraph")]
    UnknownTerminal(Vertex),
    #[error("terminal {0} listed twice")]
    RepeatedTerminal(Vertex),
    #[error("root {0} is not a terminal")]
    RootNotTerminal(Vertex),
    #[error("k must satisfy 2 <= k <= n (k = {k}, n = {n})")]
    BadK { k: usize, n: usize },
    #[error("digraph is not symmetric")]
    NotSymmetric,
    #[error("ell must be at least 1")]
    BadEll,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    #[error("linkage terminals must be four distinct vertices")]
    TerminalsNotDistinct,
    #[error("vertex {0} is outside the host digraph")]
    UnknownVertex(Vertex),
    #[error("hyperedge {0} is empty or mentions a vertex outside the vertex range")]
    BadHyperedge(usize),
    #[error("tripartite parts must be disjoint, equal-sized and cover the vertex range")]
    BadParts,
    #[error("edge ({0}, {1}) lies inside a part or leaves the vertex range")]
    BadEdge(Vertex, Vertex),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GadgetError {
    #[error("gadget requires k >= 3, got {0}")]
    KTooSmall(usize),
    #[error("gadget requires ell >= 2, got {0}")]
    EllTooSmall(usize),
    #[error("amplifier requires N >= 2, got {0}")]
    NTooSmall(usize),
    #[error("hypergraph gadget requires every edge to have at least 2 vertices (edge {0})")]
    SmallEdge(usize),
    #[error("hypergraph gadget requires at least one edge")]
    NoEdges,
    #[error(transparent)]
    Oracle(#[from] OracleError),
}
