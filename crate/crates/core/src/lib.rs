//! Model of spanning two-path linkages and their minors.
//!
//! A linked graph carries two vertex-disjoint paths covering every vertex.
//! The crate decides whether that linkage is vital (no rival pair of paths
//! joins the same terminals), searches for the six-vertex obstruction that
//! characterizes the non-vital case, embeds obstruction-free graphs into the
//! two-rail family with replayable certificates, and ships exact referees
//! for pathwidth and rung partitions.

#![forbid(unsafe_code)]

pub mod analysis;
pub mod error;
pub mod graph;
pub mod iso;
pub mod linkage;
pub mod minor;
pub mod partition;
pub mod pathwidth;
pub mod sample;
mod serde_pairs;
pub mod truemper;
pub mod xx;

pub use analysis::{
    enumerate_spanning_linkages, find_second_linkage, is_vital, LinkageEnumeration,
};
pub use error::{Error, Result, SizeGuard};
pub use graph::{EdgeId, Graph, VertexId};
pub use iso::{linked_isomorphic, Orientation};
pub use linkage::{EdgeKind, LinkagePath, LinkedGraph, PathId, TwoLinkage};
pub use minor::{
    all_linkage_minors, apply_witness, build_linked, replay_ops, simplify, witness_from_ops,
    MinorOp, MinorWitness,
};
pub use partition::{crossing, find_valid_partition, RungPartition};
pub use pathwidth::{exact_pathwidth, verify_path_decomposition, PathDecomposition};
pub use sample::random_truemper_minor;
pub use truemper::{
    embed_in_truemper, extend_truemper, generate_truemper, verify_certificate,
    TruemperCertificate,
};
pub use xx::{canonical_xx, extract_xx_from_second_linkage, has_xx_linkage_minor, XxWitness};
