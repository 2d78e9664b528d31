//! The two-rail graph family and the embedding recursion.
//!
//! The family member of index n has rails v1..vn and u1..un, each rail a
//! linkage path, joined by the parallel rung at every index and the crossing
//! rung toward the mirrored index. The edge set is read as a set, so at odd
//! n the middle parallel and crossing rungs are one edge. Every member's
//! linkage is vital, and a chordless linked graph has a vital linkage exactly
//! when it is a linkage minor of some member; `embed_in_truemper` decides
//! that and produces a replayable certificate either way.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result, SizeGuard};
use crate::graph::{EdgeId, Graph, VertexId};
use crate::iso::{linked_isomorphic, Orientation};
use crate::linkage::{LinkagePath, LinkedGraph, PathId, TwoLinkage};
use crate::minor::{all_linkage_minors, replay_ops, witness_from_ops, MinorOp, MinorWitness};
use crate::xx::has_xx_linkage_minor;

/// Proof that a graph is a linkage minor of the family member of index `n`:
/// replaying `witness` on that member gives a graph strictly isomorphic to
/// the input after the recorded reorientation (swap first, then reversals).
/// `embed_in_truemper` always emits certificates with all flags off; the
/// flags exist so that reoriented certificates stay checkable.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TruemperCertificate {
    pub n: u32,
    pub path_swap: bool,
    pub reversed_path1: bool,
    pub reversed_path2: bool,
    pub witness: MinorWitness,
}

/// Builds the family member of index `n`. Vertex ids run v1..vn then u1..un;
/// path edges come before rungs, parallel rungs before crossing ones.
pub fn generate_truemper(n: u32) -> Result<LinkedGraph> {
    if n == 0 {
        return Err(Error::ZeroFamilyIndex);
    }
    let n = n as usize;
    let mut graph = Graph::new();
    let vs: Vec<VertexId> = (1..=n).map(|i| graph.add_vertex(&format!("v{i}"))).collect();
    let us: Vec<VertexId> = (1..=n).map(|i| graph.add_vertex(&format!("u{i}"))).collect();
    let mut paths = Vec::new();
    for rail in [&vs, &us] {
        let mut edges = Vec::new();
        for w in rail.windows(2) {
            edges.push(graph.add_edge(w[0], w[1])?);
        }
        paths.push(LinkagePath::new(rail.clone(), edges));
    }
    let mut seen: BTreeSet<(VertexId, VertexId)> = BTreeSet::new();
    let mut rung = |graph: &mut Graph, a: VertexId, b: VertexId| -> Result<()> {
        if seen.insert((a.min(b), a.max(b))) {
            graph.add_edge(a, b)?;
        }
        Ok(())
    };
    for i in 0..n {
        rung(&mut graph, us[i], vs[i])?;
    }
    for i in 0..n {
        rung(&mut graph, us[i], vs[n - 1 - i])?;
    }
    let p2 = paths.pop().unwrap();
    let p1 = paths.pop().unwrap();
    LinkedGraph::new(graph, TwoLinkage::new(p1, p2))
}

/// Position lookups on a freshly generated member, whose simple edges make
/// every endpoint pair resolve to one id.
struct CanonIds<'a> {
    g: &'a LinkedGraph,
}

impl<'a> CanonIds<'a> {
    fn vert(&self, slot: (PathId, usize)) -> VertexId {
        self.g.path(slot.0).verts[slot.1 - 1]
    }

    fn edge(&self, a: (PathId, usize), b: (PathId, usize)) -> EdgeId {
        self.g.graph().edges_between(self.vert(a), self.vert(b))[0]
    }
}

type Slot = (PathId, usize);

/// The pieces the member of index n + 2 has beyond the member of index n
/// embedded at positions 2..=n+1: four path edges and four rungs, each as a
/// pair of 1-based (path, position) slots in the larger member.
struct ExtensionSlots {
    path_edges: [(Slot, Slot); 4],
    rungs: [(Slot, Slot); 4],
}

fn extension_slots(big_n: usize) -> ExtensionSlots {
    let (p1, p2) = (PathId::P1, PathId::P2);
    ExtensionSlots {
        path_edges: [
            ((p1, 1), (p1, 2)),
            ((p1, big_n - 1), (p1, big_n)),
            ((p2, 1), (p2, 2)),
            ((p2, big_n - 1), (p2, big_n)),
        ],
        rungs: [
            ((p2, 1), (p1, 1)),
            ((p2, big_n), (p1, big_n)),
            ((p2, 1), (p1, big_n)),
            ((p2, big_n), (p1, 1)),
        ],
    }
}

/// Wraps a member-shaped graph into the member two indices up: four new
/// terminals around the old rails, joined by the eight extension edges.
/// Returns the new graph and its positional isomorphism onto the freshly
/// generated larger member.
pub fn extend_truemper(g: &LinkedGraph) -> Result<(LinkedGraph, BTreeMap<VertexId, VertexId>)> {
    let count = g.graph().vertex_count();
    if count == 0 || count % 2 != 0 {
        return Err(Error::NotTruemperShaped);
    }
    let m = (count / 2) as u32;
    if linked_isomorphic(g, &generate_truemper(m)?, false).is_none() {
        return Err(Error::NotTruemperShaped);
    }

    let mut graph = g.graph().clone();
    let taken: BTreeSet<String> =
        graph.vertices().map(|v| graph.name(v).to_string()).collect();
    let fresh = |base: &str| {
        let mut name = base.to_string();
        while taken.contains(&name) {
            name.push('\'');
        }
        name
    };
    let s1 = graph.add_vertex(&fresh("s1'"));
    let t1 = graph.add_vertex(&fresh("t1'"));
    let s2 = graph.add_vertex(&fresh("s2'"));
    let t2 = graph.add_vertex(&fresh("t2'"));

    let big_n = m as usize + 2;
    let vert = |slot: Slot| -> VertexId {
        let (which, i) = slot;
        let news = match which {
            PathId::P1 => (s1, t1),
            PathId::P2 => (s2, t2),
        };
        if i == 1 {
            news.0
        } else if i == big_n {
            news.1
        } else {
            g.path(which).verts[i - 2]
        }
    };
    let slots = extension_slots(big_n);
    let mut path_edge_ids = Vec::new();
    for (a, b) in slots.path_edges {
        path_edge_ids.push(graph.add_edge(vert(a), vert(b))?);
    }
    for (a, b) in slots.rungs {
        graph.add_edge(vert(a), vert(b))?;
    }

    let mut paths = Vec::new();
    for (which, first, last, head, tail) in [
        (PathId::P1, s1, t1, path_edge_ids[0], path_edge_ids[1]),
        (PathId::P2, s2, t2, path_edge_ids[2], path_edge_ids[3]),
    ] {
        let old = g.path(which);
        let mut verts = vec![first];
        verts.extend(&old.verts);
        verts.push(last);
        let mut edges = vec![head];
        edges.extend(&old.edges);
        edges.push(tail);
        paths.push(LinkagePath::new(verts, edges));
    }
    let p2 = paths.pop().unwrap();
    let p1 = paths.pop().unwrap();
    let bigger = LinkedGraph::new(graph, TwoLinkage::new(p1, p2))?;
    match linked_isomorphic(&bigger, &generate_truemper(m + 2)?, false) {
        Some(iso) => Ok((bigger, iso)),
        None => Err(Error::Inconsistency("extension left the family")),
    }
}

/// Decides whether the graph is a linkage minor of some family member.
///
/// The recursion peels the graph down: a degree-1 terminal on a real path is
/// contracted away, and a rung joining two terminals across the paths is
/// deleted; each recursive answer is lifted two indices up by parking the
/// removed piece on the larger member's new border. When neither move
/// applies, the graph either matches a member outright, fits inside the two
/// smallest members, or contains the obstruction; the obstruction witness is
/// recomputed on the original input so the refusal is independently
/// checkable.
pub fn embed_in_truemper(g: &LinkedGraph) -> Result<TruemperCertificate> {
    g.require_chordless()?;
    match embed_rec(g)? {
        Some((n, witness)) => Ok(TruemperCertificate {
            n,
            path_swap: false,
            reversed_path1: false,
            reversed_path2: false,
            witness,
        }),
        None => {
            let guard = SizeGuard::new(g.graph().vertex_count());
            match has_xx_linkage_minor(g, guard)? {
                Some(w) => Err(Error::NotTruemper(Box::new(w))),
                None => Err(Error::Inconsistency("no embedding for an obstruction-free graph")),
            }
        }
    }
}

fn embed_rec(g: &LinkedGraph) -> Result<Option<(u32, MinorWitness)>> {
    let count = g.graph().vertex_count();
    if count <= 4 {
        if let Some(found) = base_search(g)? {
            return Ok(Some(found));
        }
    }
    if count >= 2 && count % 2 == 0 {
        let m = (count / 2) as u32;
        let member = generate_truemper(m)?;
        if linked_isomorphic(g, &member, false).is_some() {
            return Ok(Some((m, MinorWitness::identity(&member))));
        }
    }

    if let Some((orient, pendant)) = find_pendant(g) {
        let h = orient.apply(g);
        let contracted = h.contract_path_edge(h.path(PathId::P1).edges[0])?;
        debug_assert_eq!(h.path(PathId::P1).verts[0], pendant);
        return match embed_rec(&contracted)? {
            Some((inner, witness)) => {
                let (n, lifted) = lift(inner, &witness, LiftKind::Pendant)?;
                Ok(Some((n, reorient_witness(n, &lifted, orient.inverse())?)))
            }
            None => Ok(None),
        };
    }

    if let Some((orient, rung)) = find_terminal_rung(g) {
        let h = orient.apply(g);
        let trimmed = h.delete_rung_edge(rung)?;
        return match embed_rec(&trimmed)? {
            Some((inner, witness)) => {
                let (n, lifted) = lift(inner, &witness, LiftKind::Rung)?;
                Ok(Some((n, reorient_witness(n, &lifted, orient.inverse())?)))
            }
            None => Ok(None),
        };
    }

    Ok(None)
}

/// Matches the graph against every minor of the two smallest members, which
/// covers everything on up to four vertices that the recursion can bottom
/// out on. Witnesses come out in the enumeration's order, so an exact member
/// match yields the empty op list.
fn base_search(g: &LinkedGraph) -> Result<Option<(u32, MinorWitness)>> {
    for m in [1u32, 2] {
        let member = generate_truemper(m)?;
        for (witness, minor) in all_linkage_minors(&member)? {
            if linked_isomorphic(&minor, g, false).is_some() {
                return Ok(Some((m, witness)));
            }
        }
    }
    Ok(None)
}

/// The first terminal, in the order s1 t1 s2 t2, that has degree one while
/// sitting on a path with at least two vertices, with the orientation that
/// moves it to the first path's start.
fn find_pendant(g: &LinkedGraph) -> Option<(Orientation, VertexId)> {
    let [s1, t1, s2, t2] = g.terminals();
    let candidates = [
        (s1, PathId::P1, Orientation::IDENTITY),
        (t1, PathId::P1, Orientation { swap: false, reverse: [true, false] }),
        (s2, PathId::P2, Orientation { swap: true, reverse: [false, false] }),
        (t2, PathId::P2, Orientation { swap: true, reverse: [true, false] }),
    ];
    for (v, which, orient) in candidates {
        if g.graph().degree(v) == 1 && g.path(which).verts.len() >= 2 {
            return Some((orient, v));
        }
    }
    None
}

/// The lowest-id rung joining a first-path terminal to a second-path
/// terminal, scanning pairs in the order (s1 s2), (t1 s2), (s1 t2), (t1 t2),
/// with the orientation that moves the pair onto the two path starts.
fn find_terminal_rung(g: &LinkedGraph) -> Option<(Orientation, EdgeId)> {
    let [s1, t1, s2, t2] = g.terminals();
    let pairs = [
        (s1, s2, [false, false]),
        (t1, s2, [true, false]),
        (s1, t2, [false, true]),
        (t1, t2, [true, true]),
    ];
    for (a, b, reverse) in pairs {
        if let Some(&e) = g.graph().edges_between(a, b).first() {
            return Some((Orientation { swap: false, reverse }, e));
        }
    }
    None
}

enum LiftKind {
    Pendant,
    Rung,
}

/// Lifts a witness on the member of index `inner` to the member two indices
/// up. The new border is either reduced to a pendant first vertex (keep its
/// path edge, drop all four new rungs) or to one extra rung between the path
/// starts (keep the new parallel rung, contract all four new path edges);
/// the inner ops then replay shifted one position inward.
fn lift(inner: u32, witness: &MinorWitness, kind: LiftKind) -> Result<(u32, MinorWitness)> {
    let n = inner + 2;
    let big = generate_truemper(n)?;
    let ids = CanonIds { g: &big };
    let slots = extension_slots(n as usize);

    let mut ops: Vec<MinorOp> = Vec::new();
    let kept_path_edges: &[usize] = match kind {
        LiftKind::Pendant => &[0],
        LiftKind::Rung => &[],
    };
    for (i, (a, b)) in slots.path_edges.into_iter().enumerate() {
        if !kept_path_edges.contains(&i) {
            ops.push(MinorOp::ContractPathEdge(ids.edge(a, b)));
        }
    }
    let kept_rungs: &[usize] = match kind {
        LiftKind::Pendant => &[],
        LiftKind::Rung => &[0],
    };
    for (i, (a, b)) in slots.rungs.into_iter().enumerate() {
        if !kept_rungs.contains(&i) {
            ops.push(MinorOp::DeleteRungEdge(ids.edge(a, b)));
        }
    }

    let small = generate_truemper(inner)?;
    for op in &witness.ops {
        let (a, b) = small.graph().ends(op.edge())?;
        let shifted = |v: VertexId| -> Result<Slot> {
            match small.locate(v) {
                Some((which, pos)) => Ok((which, pos + 2)),
                None => Err(Error::Inconsistency("inner witness touches a foreign vertex")),
            }
        };
        let e = ids.edge(shifted(a)?, shifted(b)?);
        ops.push(match op {
            MinorOp::ContractPathEdge(_) => MinorOp::ContractPathEdge(e),
            MinorOp::DeleteRungEdge(_) => MinorOp::DeleteRungEdge(e),
        });
    }

    canonical_order(&mut ops);
    let (_, lifted) = witness_from_ops(&big, ops)?;
    Ok((n, lifted))
}

/// Rewrites a witness on the member of index `n` through one of the member's
/// self-isomorphisms, chosen so that replaying the result matches the
/// reoriented target. The moves commute, so the canonical order is restored
/// afterwards.
fn reorient_witness(n: u32, witness: &MinorWitness, orient: Orientation) -> Result<MinorWitness> {
    if orient.is_identity() {
        return Ok(witness.clone());
    }
    let member = generate_truemper(n)?;
    let sigma = linked_isomorphic(&orient.apply(&member), &member, false)
        .ok_or(Error::Inconsistency("family member lost its symmetry"))?;
    let mut ops = Vec::new();
    for op in &witness.ops {
        let (a, b) = member.graph().ends(op.edge())?;
        let e = member.graph().edges_between(sigma[&a], sigma[&b])[0];
        ops.push(match op {
            MinorOp::ContractPathEdge(_) => MinorOp::ContractPathEdge(e),
            MinorOp::DeleteRungEdge(_) => MinorOp::DeleteRungEdge(e),
        });
    }
    canonical_order(&mut ops);
    Ok(witness_from_ops(&member, ops)?.1)
}

/// Contractions before deletions, each ascending by edge id. Distinct moves
/// commute, so this never changes the replayed result.
fn canonical_order(ops: &mut [MinorOp]) {
    ops.sort_by_key(|op| (matches!(op, MinorOp::DeleteRungEdge(_)), op.edge()));
}

/// Replays the certificate against a fresh member and compares the result
/// with the reoriented input. Any replay failure or mismatch, including a
/// tampered vertex map, makes this false.
pub fn verify_certificate(g: &LinkedGraph, c: &TruemperCertificate) -> bool {
    let member = match generate_truemper(c.n) {
        Ok(m) => m,
        Err(_) => return false,
    };
    let (result, map) = match replay_ops(&member, &c.witness.ops) {
        Ok(r) => r,
        Err(_) => return false,
    };
    if map != c.witness.vertex_map {
        return false;
    }
    let oriented = Orientation {
        swap: c.path_swap,
        reverse: [c.reversed_path1, c.reversed_path2],
    }
    .apply(g);
    linked_isomorphic(&result, &oriented, false).is_some()
}
