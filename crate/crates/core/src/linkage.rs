use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, VertexId};

/// Which of the two linkage paths is meant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum PathId {
    P1,
    P2,
}

impl PathId {
    pub const BOTH: [PathId; 2] = [PathId::P1, PathId::P2];

    pub fn other(self) -> PathId {
        match self {
            PathId::P1 => PathId::P2,
            PathId::P2 => PathId::P1,
        }
    }

    pub(crate) fn index(self) -> usize {
        match self {
            PathId::P1 => 0,
            PathId::P2 => 1,
        }
    }
}

/// One path of a linkage: an ordered vertex sequence together with the edge
/// bound between each consecutive pair. A single vertex with no edges is a
/// legal path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkagePath {
    pub verts: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
}

impl LinkagePath {
    pub fn new(verts: Vec<VertexId>, edges: Vec<EdgeId>) -> Self {
        LinkagePath { verts, edges }
    }

    pub fn singleton(v: VertexId) -> Self {
        LinkagePath { verts: vec![v], edges: Vec::new() }
    }

    pub fn start(&self) -> VertexId {
        *self.verts.first().expect("path is never empty")
    }

    pub fn end(&self) -> VertexId {
        *self.verts.last().expect("path is never empty")
    }

    pub fn len_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn position(&self, v: VertexId) -> Option<usize> {
        self.verts.iter().position(|&x| x == v)
    }

    pub fn reversed(&self) -> Self {
        let mut verts = self.verts.clone();
        let mut edges = self.edges.clone();
        verts.reverse();
        edges.reverse();
        LinkagePath { verts, edges }
    }
}

/// An order-2 linkage: two vertex-disjoint paths. The first path runs from
/// s1 to t1, the second from s2 to t2; terminals are just the sequence ends.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoLinkage {
    paths: [LinkagePath; 2],
}

impl TwoLinkage {
    pub fn new(path1: LinkagePath, path2: LinkagePath) -> Self {
        TwoLinkage { paths: [path1, path2] }
    }

    pub fn path(&self, which: PathId) -> &LinkagePath {
        &self.paths[which.index()]
    }

    /// Terminals in the order s1, t1, s2, t2.
    pub fn terminals(&self) -> [VertexId; 4] {
        [
            self.paths[0].start(),
            self.paths[0].end(),
            self.paths[1].start(),
            self.paths[1].end(),
        ]
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.paths[0].verts.iter().chain(self.paths[1].verts.iter()).copied()
    }

    pub fn path_edge_ids(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.paths[0].edges.iter().chain(self.paths[1].edges.iter()).copied()
    }

    /// Both linkages trace the same vertex sequences. Paths are vertex paths:
    /// two linkages that differ only in which parallel edge they ride are the
    /// same linkage.
    pub fn same_routes(&self, other: &TwoLinkage) -> bool {
        self.paths[0].verts == other.paths[0].verts && self.paths[1].verts == other.paths[1].verts
    }

}

/// How an edge relates to the linkage.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum EdgeKind {
    /// Bound into one of the two paths.
    Path,
    /// Off the linkage, both endpoints on the same path.
    Chord,
    /// Off the linkage, endpoints on different paths.
    Rung,
}

/// A graph together with a spanning order-2 linkage. Construction validates
/// the pair; every operation that produces a new graph goes back through the
/// same validation, so a value of this type is always internally consistent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkedGraph {
    graph: Graph,
    linkage: TwoLinkage,
    positions: BTreeMap<VertexId, (PathId, usize)>,
}

impl LinkedGraph {
    pub fn new(graph: Graph, linkage: TwoLinkage) -> Result<Self> {
        let mut positions = BTreeMap::new();
        for which in PathId::BOTH {
            let path = linkage.path(which);
            for (i, &v) in path.verts.iter().enumerate() {
                if !graph.has_vertex(v) {
                    return Err(Error::UnknownVertex(v));
                }
                if positions.insert(v, (which, i)).is_some() {
                    return Err(Error::RepeatedVertex(v));
                }
            }
            if path.edges.len() + 1 != path.verts.len() {
                let bad = path.edges.last().copied().unwrap_or(EdgeId(u32::MAX));
                return Err(Error::BadEdgeBinding { path: which, edge: bad });
            }
            for (i, &e) in path.edges.iter().enumerate() {
                let (a, b) = graph.ends(e)?;
                let (x, y) = (path.verts[i], path.verts[i + 1]);
                if !((a == x && b == y) || (a == y && b == x)) {
                    return Err(Error::BadEdgeBinding { path: which, edge: e });
                }
            }
        }
        if let Some(v) = graph.vertices().find(|v| !positions.contains_key(v)) {
            return Err(Error::NotSpanning(v));
        }
        Ok(LinkedGraph { graph, linkage, positions })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn linkage(&self) -> &TwoLinkage {
        &self.linkage
    }

    pub fn path(&self, which: PathId) -> &LinkagePath {
        self.linkage.path(which)
    }

    pub fn terminals(&self) -> [VertexId; 4] {
        self.linkage.terminals()
    }

    pub fn locate(&self, v: VertexId) -> Option<(PathId, usize)> {
        self.positions.get(&v).copied()
    }

    /// Total classification of the edge set. Path edges are recognized by id,
    /// not by endpoints, so an off-linkage edge parallel to a path edge still
    /// classifies as a chord.
    pub fn classify_edges(&self) -> BTreeMap<EdgeId, EdgeKind> {
        let path_ids: std::collections::BTreeSet<EdgeId> = self.linkage.path_edge_ids().collect();
        let mut out = BTreeMap::new();
        for (e, (a, b)) in self.graph.edges() {
            let kind = if path_ids.contains(&e) {
                EdgeKind::Path
            } else {
                let (pa, _) = self.positions[&a];
                let (pb, _) = self.positions[&b];
                if pa == pb {
                    EdgeKind::Chord
                } else {
                    EdgeKind::Rung
                }
            };
            out.insert(e, kind);
        }
        out
    }

    pub fn edge_kind(&self, e: EdgeId) -> Result<EdgeKind> {
        self.graph.ends(e)?;
        Ok(self.classify_edges()[&e])
    }

    pub fn is_chordless(&self) -> bool {
        self.classify_edges().values().all(|&k| k != EdgeKind::Chord)
    }

    pub fn rung_ids(&self) -> Vec<EdgeId> {
        self.classify_edges()
            .into_iter()
            .filter(|&(_, k)| k == EdgeKind::Rung)
            .map(|(e, _)| e)
            .collect()
    }

    pub(crate) fn first_chord(&self) -> Option<EdgeId> {
        self.classify_edges()
            .into_iter()
            .find(|&(_, k)| k == EdgeKind::Chord)
            .map(|(e, _)| e)
    }

    /// Fails with `ChordPresent` if the graph has any chord. The structure
    /// results only hold on chordless inputs, so the routines that rely on
    /// them call this at their boundary.
    pub fn require_chordless(&self) -> Result<()> {
        match self.first_chord() {
            Some(e) => Err(Error::ChordPresent(e)),
            None => Ok(()),
        }
    }

    /// True when `v` is strictly nearer the path's start than `w` is.
    pub fn left_of(&self, which: PathId, v: VertexId, w: VertexId) -> Result<bool> {
        let path = self.linkage.path(which);
        let pv = path.position(v).ok_or(Error::VertexNotOnPath { vertex: v, path: which })?;
        let pw = path.position(w).ok_or(Error::VertexNotOnPath { vertex: w, path: which })?;
        Ok(pv < pw)
    }

    /// Same graph, one path traversed the other way round. Swaps that path's
    /// terminal labels and nothing else.
    pub fn reverse_path(&self, which: PathId) -> LinkedGraph {
        let mut paths =
            [self.linkage.path(PathId::P1).clone(), self.linkage.path(PathId::P2).clone()];
        paths[which.index()] = paths[which.index()].reversed();
        let [p1, p2] = paths;
        LinkedGraph::new(self.graph.clone(), TwoLinkage::new(p1, p2))
            .expect("reversal preserves validity")
    }

    /// Same graph with the two paths exchanging roles.
    pub fn swap_paths(&self) -> LinkedGraph {
        let p1 = self.linkage.path(PathId::P2).clone();
        let p2 = self.linkage.path(PathId::P1).clone();
        LinkedGraph::new(self.graph.clone(), TwoLinkage::new(p1, p2))
            .expect("swap preserves validity")
    }

    pub(crate) fn into_parts(self) -> (Graph, TwoLinkage) {
        (self.graph, self.linkage)
    }
}
