use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::graph::VertexId;
use crate::linkage::{LinkedGraph, PathId};

/// A relabeling of the linkage roles: optionally swap the two paths, then
/// optionally reverse each. These eight maps are exactly the freedom the
/// relaxed isomorphism check is allowed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Orientation {
    pub swap: bool,
    pub reverse: [bool; 2],
}

impl Orientation {
    pub const IDENTITY: Orientation = Orientation { swap: false, reverse: [false, false] };

    /// The fixed search order: reversals first (none, path 1, path 2, both),
    /// then the same four again with the paths swapped.
    pub fn all() -> [Orientation; 8] {
        let mut out = [Orientation::IDENTITY; 8];
        let mut i = 0;
        for swap in [false, true] {
            for reverse in [[false, false], [true, false], [false, true], [true, true]] {
                out[i] = Orientation { swap, reverse };
                i += 1;
            }
        }
        out
    }

    pub fn is_identity(self) -> bool {
        self == Orientation::IDENTITY
    }

    pub fn apply(self, g: &LinkedGraph) -> LinkedGraph {
        let mut cur = if self.swap { g.swap_paths() } else { g.clone() };
        if self.reverse[0] {
            cur = cur.reverse_path(PathId::P1);
        }
        if self.reverse[1] {
            cur = cur.reverse_path(PathId::P2);
        }
        cur
    }

    /// The orientation undoing this one. Swap is applied before the
    /// reversals, so inverting with a swap crosses the reversal flags.
    pub fn inverse(self) -> Orientation {
        if self.swap {
            Orientation { swap: true, reverse: [self.reverse[1], self.reverse[0]] }
        } else {
            self
        }
    }
}

/// The position-forced bijection when terminals and path order must match:
/// the i-th vertex of each path of `g` goes to the i-th vertex of the same
/// path of `h`. Verifies the edge multiset and returns the map, or None.
fn strict_match(g: &LinkedGraph, h: &LinkedGraph) -> Option<BTreeMap<VertexId, VertexId>> {
    for which in PathId::BOTH {
        if g.path(which).verts.len() != h.path(which).verts.len() {
            return None;
        }
    }
    if g.graph().edge_count() != h.graph().edge_count() {
        return None;
    }
    let mut map = BTreeMap::new();
    for which in PathId::BOTH {
        for (&a, &b) in g.path(which).verts.iter().zip(h.path(which).verts.iter()) {
            map.insert(a, b);
        }
    }
    let mut want: HashMap<(VertexId, VertexId), isize> = HashMap::new();
    for (_, (a, b)) in h.graph().edges() {
        *want.entry((a.min(b), a.max(b))).or_insert(0) += 1;
    }
    for (_, (a, b)) in g.graph().edges() {
        let (x, y) = (map[&a], map[&b]);
        let k = (x.min(y), x.max(y));
        match want.get_mut(&k) {
            Some(c) => *c -= 1,
            None => return None,
        }
    }
    if want.values().all(|&c| c == 0) {
        Some(map)
    } else {
        None
    }
}

/// Isomorphism of linked graphs: a vertex bijection preserving adjacency with
/// multiplicities, path membership, order along each path, and terminal
/// labels. With `allow_reorientation` the terminal labels are only required
/// to match after one of the eight orientation maps, tried in fixed order.
pub fn linked_isomorphic(
    g: &LinkedGraph,
    h: &LinkedGraph,
    allow_reorientation: bool,
) -> Option<BTreeMap<VertexId, VertexId>> {
    oriented_isomorphism(g, h, allow_reorientation).map(|(_, m)| m)
}

pub(crate) fn oriented_isomorphism(
    g: &LinkedGraph,
    h: &LinkedGraph,
    allow_reorientation: bool,
) -> Option<(Orientation, BTreeMap<VertexId, VertexId>)> {
    if allow_reorientation {
        for o in Orientation::all() {
            if let Some(m) = strict_match(&o.apply(g), h) {
                return Some((o, m));
            }
        }
        None
    } else {
        strict_match(g, h).map(|m| (Orientation::IDENTITY, m))
    }
}
