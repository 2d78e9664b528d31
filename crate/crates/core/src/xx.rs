//! The six-vertex obstruction: two three-vertex paths whose end vertices all
//! attach to the opposite path's middle vertex. It is the smallest linked
//! graph whose spanning linkage has a rival, and a graph's linkage is vital
//! exactly when none of its linkage minors has this shape.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result, SizeGuard};
use crate::graph::{EdgeId, VertexId};
use crate::iso::linked_isomorphic;
use crate::linkage::{LinkedGraph, PathId, TwoLinkage};
use crate::minor::{simplify, witness_from_ops, MinorOp, MinorWitness};

/// Proof that a graph has the obstruction as a linkage minor: the moves that
/// produce it, plus the vertex bijection from the reduced graph onto
/// [`canonical_xx`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct XxWitness {
    pub witness: MinorWitness,
    #[serde(with = "crate::serde_pairs")]
    pub target_iso: BTreeMap<VertexId, VertexId>,
}

/// The obstruction itself, with fixed names: paths `s1-a-t1` and `s2-b-t2`,
/// rungs `s1 b`, `t1 b`, `s2 a`, `t2 a`.
pub fn canonical_xx() -> LinkedGraph {
    crate::minor::build_linked(
        &["s1", "a", "t1"],
        &["s2", "b", "t2"],
        &[("s1", "b"), ("t1", "b"), ("s2", "a"), ("t2", "a")],
    )
    .expect("the obstruction is a valid linked graph")
}

/// Searches the linkage minors of `g` for the obstruction.
///
/// Any minor with the obstruction's shape keeps exactly two edges of each
/// path, so the search enumerates the kept pairs, contracts everything else,
/// and reads the required rung pattern off the three-block partition of each
/// path. That makes it polynomial despite quantifying over all minors; the
/// guard is still honored for parity with the other oracles. Returns the
/// first witness in kept-pair order, contractions before deletions, each
/// ascending by edge id.
pub fn has_xx_linkage_minor(g: &LinkedGraph, guard: SizeGuard) -> Result<Option<XxWitness>> {
    guard.admit(g.graph().vertex_count())?;
    g.require_chordless()?;
    let p1: Vec<EdgeId> = g.path(PathId::P1).edges.clone();
    let p2: Vec<EdgeId> = g.path(PathId::P2).edges.clone();
    if p1.len() < 2 || p2.len() < 2 {
        return Ok(None);
    }
    for i in 0..p1.len() - 1 {
        for j in i + 1..p1.len() {
            for k in 0..p2.len() - 1 {
                for l in k + 1..p2.len() {
                    let kept = [p1[i], p1[j], p2[k], p2[l]];
                    if let Some(w) = try_kept_edges(g, &kept)? {
                        return Ok(Some(w));
                    }
                }
            }
        }
    }
    Ok(None)
}

/// Contracts every path edge except the four kept ones, then checks whether
/// the surviving rungs connect each path's end blocks to the other path's
/// middle block.
fn try_kept_edges(g: &LinkedGraph, kept: &[EdgeId; 4]) -> Result<Option<XxWitness>> {
    let mut ops: Vec<MinorOp> = g
        .linkage()
        .path_edge_ids()
        .filter(|e| !kept.contains(e))
        .map(MinorOp::ContractPathEdge)
        .collect();
    ops.sort_by_key(|op| op.edge());
    let (mid, _) = crate::minor::replay_ops(g, &ops)?;

    let a = &mid.path(PathId::P1).verts;
    let b = &mid.path(PathId::P2).verts;
    let required = [
        normal(a[0], b[1]),
        normal(a[2], b[1]),
        normal(b[0], a[1]),
        normal(b[2], a[1]),
    ];
    let mut families: BTreeMap<(VertexId, VertexId), Vec<EdgeId>> = BTreeMap::new();
    for e in mid.rung_ids() {
        let (x, y) = mid.graph().ends(e)?;
        families.entry(normal(x, y)).or_default().push(e);
    }
    if !required.iter().all(|pair| families.contains_key(pair)) {
        return Ok(None);
    }
    let mut deletes: Vec<EdgeId> = Vec::new();
    for (pair, family) in &families {
        let keep_from = if required.contains(pair) { 1 } else { 0 };
        deletes.extend(family.iter().skip(keep_from));
    }
    deletes.sort();
    ops.extend(deletes.into_iter().map(MinorOp::DeleteRungEdge));

    let (result, witness) = witness_from_ops(g, ops)?;
    match linked_isomorphic(&result, &canonical_xx(), false) {
        Some(target_iso) => Ok(Some(XxWitness { witness, target_iso })),
        None => Err(Error::Inconsistency("kept-edge reduction missed the obstruction")),
    }
}

fn normal(a: VertexId, b: VertexId) -> (VertexId, VertexId) {
    (a.min(b), a.max(b))
}

/// Turns a rival linkage into an obstruction witness.
///
/// Each rival path leaves its own path by a rung and comes back by a rung,
/// and the four crossing rungs always stand in the obstruction pattern:
/// contracting each path into the three stretches they delimit and deleting
/// every other rung leaves the obstruction, possibly subdivided.
pub fn extract_xx_from_second_linkage(g: &LinkedGraph, second: &TwoLinkage) -> Result<XxWitness> {
    g.require_chordless()?;
    validate_second(g, second)?;

    let (v1, v2, u2, u1) = divergence(g, PathId::P1, second)?;
    let (v2p, v1p, u1p, u2p) = divergence(g, PathId::P2, second)?;

    let pos1 = |v| path_position(g, PathId::P1, v);
    let pos2 = |v| path_position(g, PathId::P2, v);
    let ordered = pos1(v1)? < pos1(v1p)?.min(pos1(u1p)?)
        && pos1(v1p)?.max(pos1(u1p)?) < pos1(u1)?
        && pos2(v2p)? < pos2(v2)?.min(pos2(u2)?)
        && pos2(v2)?.max(pos2(u2)?) < pos2(u2p)?;
    if !ordered {
        return Err(Error::Inconsistency("rival crossings out of positional order"));
    }

    let mut ops: Vec<MinorOp> = Vec::new();
    let p1 = g.path(PathId::P1);
    let p2 = g.path(PathId::P2);
    for (path, blocks) in [
        (p1, [(0, pos1(v1)?), span(pos1(v1p)?, pos1(u1p)?), (pos1(u1)?, p1.edges.len())]),
        (p2, [(0, pos2(v2p)?), span(pos2(v2)?, pos2(u2)?), (pos2(u2p)?, p2.edges.len())]),
    ] {
        for (from, to) in blocks {
            ops.extend(path.edges[from..to].iter().map(|&e| MinorOp::ContractPathEdge(e)));
        }
    }
    ops.sort_by_key(|op| op.edge());

    let crossings = [
        lowest_edge(g, v1, v2)?,
        lowest_edge(g, u2, u1)?,
        lowest_edge(g, v2p, v1p)?,
        lowest_edge(g, u1p, u2p)?,
    ];
    ops.extend(
        g.rung_ids().into_iter().filter(|e| !crossings.contains(e)).map(MinorOp::DeleteRungEdge),
    );

    let (mid, _) = crate::minor::replay_ops(g, &ops)?;
    let (_, tail) = simplify(&mid)?;
    ops.extend(tail.ops);
    let (result, witness) = witness_from_ops(g, ops)?;
    match linked_isomorphic(&result, &canonical_xx(), false) {
        Some(target_iso) => Ok(XxWitness { witness, target_iso }),
        None => Err(Error::Inconsistency("rival reduction missed the obstruction")),
    }
}

fn span(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

fn path_position(g: &LinkedGraph, which: PathId, v: VertexId) -> Result<usize> {
    g.path(which)
        .position(v)
        .ok_or(Error::VertexNotOnPath { vertex: v, path: which })
}

fn lowest_edge(g: &LinkedGraph, a: VertexId, b: VertexId) -> Result<EdgeId> {
    g.graph()
        .edges_between(a, b)
        .first()
        .copied()
        .ok_or(Error::Inconsistency("rival crossing has no edge"))
}

/// Finds where the rival's copy of `which` departs from and rejoins the
/// graph's own path. Returns `(v, v_other, u_other, u)`: the last shared
/// vertex from the start, the first vertex after it (always on the opposite
/// path), and the mirror pair scanning from the end.
fn divergence(
    g: &LinkedGraph,
    which: PathId,
    second: &TwoLinkage,
) -> Result<(VertexId, VertexId, VertexId, VertexId)> {
    let own = &g.path(which).verts;
    let rival = &second.path(which).verts;
    let prefix = own.iter().zip(rival).take_while(|(a, b)| a == b).count();
    if prefix == rival.len() || prefix == own.len() {
        return Err(Error::Inconsistency("rival matches one path end to end"));
    }
    let suffix = own
        .iter()
        .rev()
        .zip(rival.iter().rev())
        .take_while(|(a, b)| a == b)
        .count();
    let other = which.other();
    let check = |v: VertexId| -> Result<VertexId> {
        match g.locate(v) {
            Some((p, _)) if p == other => Ok(v),
            _ => Err(Error::Inconsistency("rival leaves a path without crossing over")),
        }
    };
    Ok((
        rival[prefix - 1],
        check(rival[prefix])?,
        check(rival[rival.len() - 1 - suffix])?,
        rival[rival.len() - suffix],
    ))
}

fn validate_second(g: &LinkedGraph, second: &TwoLinkage) -> Result<()> {
    let [s1, t1, s2, t2] = g.terminals();
    let [r1, r2, r3, r4] = second.terminals();
    if [s1, t1, s2, t2] != [r1, r2, r3, r4] {
        return Err(Error::BadSecondLinkage("terminal mismatch"));
    }
    let mut seen = std::collections::BTreeSet::new();
    for which in PathId::BOTH {
        let path = second.path(which);
        for &v in &path.verts {
            if !g.graph().has_vertex(v) {
                return Err(Error::BadSecondLinkage("unknown vertex"));
            }
            if !seen.insert(v) {
                return Err(Error::BadSecondLinkage("vertex used twice"));
            }
        }
        if path.edges.len() + 1 != path.verts.len() {
            return Err(Error::BadSecondLinkage("edge list does not fit the route"));
        }
        for (i, &e) in path.edges.iter().enumerate() {
            let (a, b) = g
                .graph()
                .ends(e)
                .map_err(|_| Error::BadSecondLinkage("unknown edge"))?;
            let (x, y) = (path.verts[i], path.verts[i + 1]);
            if (a, b) != (x, y) && (a, b) != (y, x) {
                return Err(Error::BadSecondLinkage("edge does not join its route step"));
            }
        }
    }
    if second.same_routes(g.linkage()) {
        return Err(Error::BadSecondLinkage("identical to the graph's own linkage"));
    }
    Ok(())
}
