use crate::graph::{EdgeId, VertexId};
use crate::linkage::PathId;

/// Errors shared by the model types and the search routines.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("vertex {0:?} is not in the graph")]
    UnknownVertex(VertexId),

    #[error("edge {0:?} is not in the graph")]
    UnknownEdge(EdgeId),

    #[error("loop edges are not allowed (both endpoints are {0:?})")]
    LoopEdge(VertexId),

    #[error("vertex {0:?} appears more than once across the linkage paths")]
    RepeatedVertex(VertexId),

    #[error("path {path:?} binds edge {edge:?} which does not join its consecutive vertices")]
    BadEdgeBinding { path: PathId, edge: EdgeId },

    #[error("vertex {0:?} lies on no linkage path, so the linkage is not spanning")]
    NotSpanning(VertexId),

    #[error("vertex {vertex:?} is not on path {path:?}")]
    VertexNotOnPath { vertex: VertexId, path: PathId },

    #[error("edge {0:?} is not a path edge")]
    NotAPathEdge(EdgeId),

    #[error("edge {0:?} is not a rung edge")]
    NotARungEdge(EdgeId),

    #[error("contracting edge {0:?} would create a loop")]
    ContractionLoop(EdgeId),

    #[error("graph has a chord ({0:?}) but this operation needs a chordless input")]
    ChordPresent(EdgeId),

    #[error("witness op {index} failed: {cause}")]
    WitnessOp { index: usize, cause: Box<Error> },

    #[error("instance has {vertices} vertices, above the size guard of {cap}")]
    SizeGuardExceeded { vertices: usize, cap: usize },

    #[error("second linkage is invalid: {0}")]
    BadSecondLinkage(&'static str),

    #[error("graph family index must be at least 1")]
    ZeroFamilyIndex,

    #[error("input is not isomorphic to the Truemper graph on its vertex count")]
    NotTruemperShaped,

    #[error("graph embeds in no Truemper graph; an obstruction witness is attached")]
    NotTruemper(Box<crate::xx::XxWitness>),

    #[error("internal disagreement: {0}")]
    Inconsistency(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Cap on instance size for the exhaustive routines. The exponential
/// oracles refuse inputs above the cap instead of hanging.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SizeGuard {
    pub max_vertices: usize,
}

impl Default for SizeGuard {
    fn default() -> Self {
        SizeGuard { max_vertices: 16 }
    }
}

impl SizeGuard {
    pub fn new(max_vertices: usize) -> Self {
        SizeGuard { max_vertices }
    }

    pub fn unlimited() -> Self {
        SizeGuard { max_vertices: usize::MAX }
    }

    pub fn admit(&self, vertices: usize) -> Result<()> {
        if vertices > self.max_vertices {
            Err(Error::SizeGuardExceeded { vertices, cap: self.max_vertices })
        } else {
            Ok(())
        }
    }
}
