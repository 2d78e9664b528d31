use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Opaque vertex handle. Ids are stable for the lifetime of a graph value;
/// contraction removes one id and redirects its incidences to the survivor.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexId(pub u32);

/// Opaque edge handle. Ids are never reused: deleting or contracting edges
/// leaves every other id intact, which is what lets minor witnesses replay.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EdgeId(pub u32);

impl fmt::Debug for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "V{}", self.0)
    }
}

impl fmt::Debug for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "E{}", self.0)
    }
}

/// Finite loopless multigraph. Parallel edges are allowed and kept distinct
/// by edge id. Vertices carry display names; all structure is id based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    vertices: BTreeMap<VertexId, String>,
    edges: BTreeMap<EdgeId, (VertexId, VertexId)>,
    next_vertex: u32,
    next_edge: u32,
}

impl Graph {
    pub fn new() -> Self {
        Graph { vertices: BTreeMap::new(), edges: BTreeMap::new(), next_vertex: 0, next_edge: 0 }
    }

    pub fn add_vertex(&mut self, name: impl Into<String>) -> VertexId {
        let id = VertexId(self.next_vertex);
        self.next_vertex += 1;
        self.vertices.insert(id, name.into());
        id
    }

    /// Adds an edge between two existing, distinct vertices.
    pub fn add_edge(&mut self, a: VertexId, b: VertexId) -> Result<EdgeId> {
        if a == b {
            return Err(Error::LoopEdge(a));
        }
        if !self.vertices.contains_key(&a) {
            return Err(Error::UnknownVertex(a));
        }
        if !self.vertices.contains_key(&b) {
            return Err(Error::UnknownVertex(b));
        }
        let id = EdgeId(self.next_edge);
        self.next_edge += 1;
        self.edges.insert(id, (a, b));
        Ok(id)
    }

    pub fn has_vertex(&self, v: VertexId) -> bool {
        self.vertices.contains_key(&v)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.vertices.keys().copied()
    }

    /// Edges in ascending id order.
    pub fn edges(&self) -> impl Iterator<Item = (EdgeId, (VertexId, VertexId))> + '_ {
        self.edges.iter().map(|(&e, &ends)| (e, ends))
    }

    pub fn ends(&self, e: EdgeId) -> Result<(VertexId, VertexId)> {
        self.edges.get(&e).copied().ok_or(Error::UnknownEdge(e))
    }

    pub fn name(&self, v: VertexId) -> &str {
        self.vertices.get(&v).map(String::as_str).unwrap_or("?")
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.edges.values().filter(|&&(a, b)| a == v || b == v).count()
    }

    pub fn incident_edges(&self, v: VertexId) -> Vec<EdgeId> {
        self.edges
            .iter()
            .filter(|(_, &(a, b))| a == v || b == v)
            .map(|(&e, _)| e)
            .collect()
    }

    pub fn edges_between(&self, a: VertexId, b: VertexId) -> Vec<EdgeId> {
        self.edges
            .iter()
            .filter(|(_, &(x, y))| (x == a && y == b) || (x == b && y == a))
            .map(|(&e, _)| e)
            .collect()
    }

    /// Distinct neighbors of `v`, ascending.
    pub fn neighbors(&self, v: VertexId) -> Vec<VertexId> {
        let mut out: Vec<VertexId> = self
            .edges
            .values()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect();
        out.sort();
        out.dedup();
        out
    }

    pub(crate) fn remove_edge(&mut self, e: EdgeId) -> Result<()> {
        self.edges.remove(&e).map(|_| ()).ok_or(Error::UnknownEdge(e))
    }

    /// Merges `gone` into `keep`: removes `gone` and redirects every incidence.
    /// Fails if any surviving edge would become a loop; the caller removes the
    /// contracted edge itself beforehand.
    pub(crate) fn merge_vertices(&mut self, keep: VertexId, gone: VertexId) -> Result<()> {
        if keep == gone {
            return Err(Error::LoopEdge(keep));
        }
        if let Some((&e, _)) =
            self.edges.iter().find(|(_, &(a, b))| (a == keep && b == gone) || (a == gone && b == keep))
        {
            return Err(Error::ContractionLoop(e));
        }
        for ends in self.edges.values_mut() {
            if ends.0 == gone {
                ends.0 = keep;
            }
            if ends.1 == gone {
                ends.1 = keep;
            }
        }
        self.vertices.remove(&gone).ok_or(Error::UnknownVertex(gone))?;
        Ok(())
    }
}

impl Default for Graph {
    fn default() -> Self {
        Self::new()
    }
}
