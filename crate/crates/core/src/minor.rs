//! Linkage-minor operations and their replayable witnesses.
//!
//! Only two moves are allowed: contracting a path edge and deleting a rung.
//! Together they generate exactly the minors that inherit the linkage, and
//! both preserve chordlessness, so any set of moves can be replayed in any
//! order on a chordless input.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{EdgeId, VertexId};
use crate::linkage::{EdgeKind, LinkagePath, LinkedGraph, PathId, TwoLinkage};

/// One linkage-minor move, addressed by stable edge id.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum MinorOp {
    ContractPathEdge(EdgeId),
    DeleteRungEdge(EdgeId),
}

impl MinorOp {
    pub fn edge(self) -> EdgeId {
        match self {
            MinorOp::ContractPathEdge(e) | MinorOp::DeleteRungEdge(e) => e,
        }
    }
}

/// A recorded reduction from a source linked graph to a minor: the move list
/// plus the induced collapse map on vertices. Terminals always collapse to
/// terminals of the result.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinorWitness {
    pub ops: Vec<MinorOp>,
    #[serde(with = "crate::serde_pairs")]
    pub vertex_map: BTreeMap<VertexId, VertexId>,
}

impl MinorWitness {
    pub fn identity(g: &LinkedGraph) -> Self {
        MinorWitness {
            ops: Vec::new(),
            vertex_map: g.graph().vertices().map(|v| (v, v)).collect(),
        }
    }
}

impl LinkedGraph {
    /// Contracts a path edge. The merged vertex keeps the identity of the
    /// endpoint nearer the path's start. Fails if a parallel edge would
    /// become a loop (only possible in the presence of chords).
    pub fn contract_path_edge(&self, e: EdgeId) -> Result<LinkedGraph> {
        if self.edge_kind(e)? != EdgeKind::Path {
            return Err(Error::NotAPathEdge(e));
        }
        let (mut graph, linkage) = self.clone().into_parts();
        let mut paths = [linkage.path(PathId::P1).clone(), linkage.path(PathId::P2).clone()];
        let which = if paths[0].edges.contains(&e) { 0 } else { 1 };
        let k = paths[which].edges.iter().position(|&x| x == e).unwrap();
        let keep = paths[which].verts[k];
        let gone = paths[which].verts[k + 1];
        graph.remove_edge(e)?;
        graph.merge_vertices(keep, gone)?;
        paths[which].verts.remove(k + 1);
        paths[which].edges.remove(k);
        let [p1, p2] = paths;
        LinkedGraph::new(graph, TwoLinkage::new(p1, p2))
    }

    /// Deletes a rung edge; everything else is untouched.
    pub fn delete_rung_edge(&self, e: EdgeId) -> Result<LinkedGraph> {
        if self.edge_kind(e)? != EdgeKind::Rung {
            return Err(Error::NotARungEdge(e));
        }
        let (mut graph, linkage) = self.clone().into_parts();
        graph.remove_edge(e)?;
        LinkedGraph::new(graph, linkage)
    }
}

fn apply_op(g: &LinkedGraph, op: MinorOp, map: &mut BTreeMap<VertexId, VertexId>) -> Result<LinkedGraph> {
    match op {
        MinorOp::ContractPathEdge(e) => {
            let (a, b) = g.graph().ends(e)?;
            let next = g.contract_path_edge(e)?;
            let keep = if next.graph().has_vertex(a) { a } else { b };
            let gone = if keep == a { b } else { a };
            for cur in map.values_mut() {
                if *cur == gone {
                    *cur = keep;
                }
            }
            Ok(next)
        }
        MinorOp::DeleteRungEdge(e) => g.delete_rung_edge(e),
    }
}

/// Applies the moves in order, tracking where every source vertex ends up.
pub fn replay_ops(
    g: &LinkedGraph,
    ops: &[MinorOp],
) -> Result<(LinkedGraph, BTreeMap<VertexId, VertexId>)> {
    let mut map: BTreeMap<VertexId, VertexId> = g.graph().vertices().map(|v| (v, v)).collect();
    let mut cur = g.clone();
    for (index, &op) in ops.iter().enumerate() {
        cur = apply_op(&cur, op, &mut map)
            .map_err(|cause| Error::WitnessOp { index, cause: Box::new(cause) })?;
    }
    Ok((cur, map))
}

/// Deterministic replay of a witness against a source graph. The error names
/// the first op that does not apply.
pub fn apply_witness(g: &LinkedGraph, w: &MinorWitness) -> Result<LinkedGraph> {
    Ok(replay_ops(g, &w.ops)?.0)
}

pub fn witness_from_ops(g: &LinkedGraph, ops: Vec<MinorOp>) -> Result<(LinkedGraph, MinorWitness)> {
    let (result, vertex_map) = replay_ops(g, &ops)?;
    Ok((result, MinorWitness { ops, vertex_map }))
}

/// Removes redundancy without changing shape: collapses each family of
/// parallel rungs to its lowest-id member, then contracts away interior path
/// vertices that touch nothing but their own two path edges.
pub fn simplify(g: &LinkedGraph) -> Result<(LinkedGraph, MinorWitness)> {
    g.require_chordless()?;
    let mut ops: Vec<MinorOp> = Vec::new();

    let mut families: BTreeMap<(VertexId, VertexId), Vec<EdgeId>> = BTreeMap::new();
    for (e, kind) in g.classify_edges() {
        if kind == EdgeKind::Rung {
            let (a, b) = g.graph().ends(e)?;
            let key = (a.min(b), a.max(b));
            families.entry(key).or_default().push(e);
        }
    }
    for mut family in families.into_values() {
        family.sort();
        for &extra in &family[1..] {
            ops.push(MinorOp::DeleteRungEdge(extra));
        }
    }

    let (mut cur, _) = replay_ops(g, &ops)?;
    loop {
        let mut found = None;
        'scan: for which in PathId::BOTH {
            let path = cur.path(which);
            for i in 1..path.verts.len().saturating_sub(1) {
                if cur.graph().degree(path.verts[i]) == 2 {
                    found = Some(path.edges[i - 1]);
                    break 'scan;
                }
            }
        }
        match found {
            Some(e) => {
                ops.push(MinorOp::ContractPathEdge(e));
                cur = cur.contract_path_edge(e)?;
            }
            None => break,
        }
    }

    witness_from_ops(g, ops)
}

/// Every linkage minor of `g`, one witness per (contraction set, deletion
/// set) pair, in ascending bitmask order over ascending edge ids. On a
/// chordless input every pair is applicable, so this enumeration is complete.
/// Exponential in the edge count: callers keep inputs small.
pub fn all_linkage_minors(g: &LinkedGraph) -> Result<Vec<(MinorWitness, LinkedGraph)>> {
    g.require_chordless()?;
    let path_edges: Vec<EdgeId> = {
        let mut v: Vec<EdgeId> = g.linkage().path_edge_ids().collect();
        v.sort();
        v
    };
    let rungs: Vec<EdgeId> = g.rung_ids();
    let mut out = Vec::new();
    for cmask in 0u64..(1 << path_edges.len()) {
        for dmask in 0u64..(1 << rungs.len()) {
            let mut ops = Vec::new();
            for (i, &e) in path_edges.iter().enumerate() {
                if cmask >> i & 1 == 1 {
                    ops.push(MinorOp::ContractPathEdge(e));
                }
            }
            for (i, &e) in rungs.iter().enumerate() {
                if dmask >> i & 1 == 1 {
                    ops.push(MinorOp::DeleteRungEdge(e));
                }
            }
            let (result, witness) = witness_from_ops(g, ops)?;
            out.push((witness, result));
        }
    }
    Ok(out)
}

/// Builds a linked graph from named pieces; test and generator convenience.
pub fn build_linked(
    path1: &[&str],
    path2: &[&str],
    extra: &[(&str, &str)],
) -> Result<LinkedGraph> {
    let mut graph = crate::graph::Graph::new();
    let mut ids: BTreeMap<String, VertexId> = BTreeMap::new();
    let mut intern = |graph: &mut crate::graph::Graph, name: &str| -> VertexId {
        *ids.entry(name.to_string()).or_insert_with(|| graph.add_vertex(name))
    };
    let mut paths = Vec::new();
    for names in [path1, path2] {
        let verts: Vec<VertexId> = names.iter().map(|n| intern(&mut graph, n)).collect();
        let mut edges = Vec::new();
        for w in verts.windows(2) {
            edges.push(graph.add_edge(w[0], w[1])?);
        }
        paths.push(LinkagePath::new(verts, edges));
    }
    for &(a, b) in extra {
        let a = intern(&mut graph, a);
        let b = intern(&mut graph, b);
        graph.add_edge(a, b)?;
    }
    let p2 = paths.pop().unwrap();
    let p1 = paths.pop().unwrap();
    LinkedGraph::new(graph, TwoLinkage::new(p1, p2))
}
