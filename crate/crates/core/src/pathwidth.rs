//! Exact pathwidth via the vertex-separation dynamic program.
//!
//! The width of the best path decomposition equals the vertex separation
//! number: the smallest, over vertex orderings, of the largest number of
//! already-placed vertices that still have a neighbor among the unplaced
//! ones. The program memoizes that quantity over vertex subsets and rebuilds
//! an optimal ordering, then converts the ordering into bags.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result, SizeGuard};
use crate::graph::{Graph, VertexId};

/// An ordered bag sequence. Valid when every vertex appears in some bag,
/// both endpoints of every edge share a bag, and each vertex's bags are
/// consecutive.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathDecomposition {
    pub bags: Vec<BTreeSet<VertexId>>,
}

impl PathDecomposition {
    pub fn width(&self) -> usize {
        self.bags.iter().map(BTreeSet::len).max().unwrap_or(0).saturating_sub(1)
    }
}

/// The subset DP is held in a machine word per subset.
const HARD_CAP: usize = 24;

/// Minimum width over all path decompositions, together with one that
/// attains it. Exponential in the vertex count; refuses inputs above the
/// guard (and above the bitmask bound regardless of the guard).
pub fn exact_pathwidth(g: &Graph, guard: SizeGuard) -> Result<(usize, PathDecomposition)> {
    let count = g.vertex_count();
    guard.admit(count)?;
    if count > HARD_CAP {
        return Err(Error::SizeGuardExceeded { vertices: count, cap: HARD_CAP });
    }
    let verts: Vec<VertexId> = g.vertices().collect();
    let index = |v: VertexId| verts.iter().position(|&x| x == v).unwrap();
    let adj: Vec<u32> = verts
        .iter()
        .map(|&v| {
            g.neighbors(v).into_iter().fold(0u32, |m, u| m | 1 << index(u))
        })
        .collect();
    let full: u32 = (1u32 << count) - 1;

    // boundary(mask) = placed vertices with an unplaced neighbor
    let boundary = |mask: u32| -> u32 {
        (0..count)
            .filter(|&i| mask >> i & 1 == 1 && adj[i] & !mask & full != 0)
            .count() as u32
    };

    let mut cost = vec![0u32; 1 << count];
    for mask in 1..=full {
        let mut best = u32::MAX;
        for i in 0..count {
            if mask >> i & 1 == 1 {
                best = best.min(cost[(mask ^ (1 << i)) as usize]);
            }
        }
        cost[mask as usize] = best.max(boundary(mask));
    }

    // Rebuild one optimal ordering back to front, lowest index on ties.
    let mut order = vec![0usize; count];
    let mut mask = full;
    for slot in (0..count).rev() {
        let pick = (0..count)
            .filter(|&i| mask >> i & 1 == 1)
            .min_by_key(|&i| (cost[(mask ^ (1 << i)) as usize], i))
            .unwrap();
        order[slot] = pick;
        mask ^= 1 << pick;
    }

    // Bag i carries vertex i plus every earlier vertex that still has a
    // neighbor at or past position i.
    let pos_of = {
        let mut pos = vec![0usize; count];
        for (p, &i) in order.iter().enumerate() {
            pos[i] = p;
        }
        pos
    };
    let last_needed: Vec<usize> = (0..count)
        .map(|i| {
            (0..count)
                .filter(|&j| adj[i] >> j & 1 == 1)
                .map(|j| pos_of[j])
                .max()
                .unwrap_or(pos_of[i])
        })
        .collect();
    let mut bags = Vec::with_capacity(count);
    for (p, &i) in order.iter().enumerate() {
        let mut bag: BTreeSet<VertexId> = BTreeSet::new();
        bag.insert(verts[i]);
        for &j in order.iter().take(p) {
            if last_needed[j] >= p {
                bag.insert(verts[j]);
            }
        }
        bags.push(bag);
    }
    let decomposition = PathDecomposition { bags };
    Ok((cost[full as usize] as usize, decomposition))
}

/// Checks the three decomposition invariants against the graph.
pub fn verify_path_decomposition(g: &Graph, d: &PathDecomposition) -> bool {
    for bag in &d.bags {
        if bag.iter().any(|&v| !g.has_vertex(v)) {
            return false;
        }
    }
    for v in g.vertices() {
        let holding: Vec<usize> = d
            .bags
            .iter()
            .enumerate()
            .filter(|(_, bag)| bag.contains(&v))
            .map(|(i, _)| i)
            .collect();
        match (holding.first(), holding.last()) {
            (Some(&first), Some(&last)) => {
                if holding.len() != last - first + 1 {
                    return false;
                }
            }
            _ => return false,
        }
    }
    for (_, (a, b)) in g.edges() {
        if !d.bags.iter().any(|bag| bag.contains(&a) && bag.contains(&b)) {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::truemper::generate_truemper;

    fn path_graph(k: usize) -> Graph {
        let mut g = Graph::new();
        let vs: Vec<VertexId> = (0..k).map(|i| g.add_vertex(format!("x{i}"))).collect();
        for w in vs.windows(2) {
            g.add_edge(w[0], w[1]).unwrap();
        }
        g
    }

    /// Brute force over every ordering: the quantity the DP is meant to
    /// minimize, computed with no memoization at all.
    fn oracle_width(g: &Graph) -> usize {
        let verts: Vec<VertexId> = g.vertices().collect();
        let mut best = usize::MAX;
        let mut order: Vec<usize> = (0..verts.len()).collect();
        permute(&mut order, 0, &mut |order| {
            let mut worst = 0usize;
            for cut in 1..=order.len() {
                let placed: BTreeSet<VertexId> =
                    order[..cut].iter().map(|&i| verts[i]).collect();
                let boundary = placed
                    .iter()
                    .filter(|&&v| {
                        g.neighbors(v).into_iter().any(|u| !placed.contains(&u))
                    })
                    .count();
                worst = worst.max(boundary);
            }
            best = best.min(worst);
        });
        if best == usize::MAX {
            0
        } else {
            best
        }
    }

    fn permute(items: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
        if k == items.len() {
            visit(items);
            return;
        }
        for i in k..items.len() {
            items.swap(k, i);
            permute(items, k + 1, visit);
            items.swap(k, i);
        }
    }

    #[test]
    fn a_path_has_width_one() {
        let g = path_graph(5);
        let (w, d) = exact_pathwidth(&g, SizeGuard::default()).unwrap();
        assert_eq!(w, 1);
        assert_eq!(d.width(), 1);
        assert!(verify_path_decomposition(&g, &d));
    }

    #[test]
    fn the_four_clique_has_width_three() {
        let g = generate_truemper(2).unwrap();
        let (w, d) = exact_pathwidth(g.graph(), SizeGuard::default()).unwrap();
        assert_eq!(w, 3);
        assert!(verify_path_decomposition(g.graph(), &d));
    }

    #[test]
    fn double_ladder_widths_stay_pinned() {
        // Frozen from the solver; the family never needs more than width 4.
        let golden = [(2, 3), (3, 3), (4, 4), (5, 4), (6, 4)];
        for (n, want) in golden {
            let g = generate_truemper(n).unwrap();
            let (w, d) = exact_pathwidth(g.graph(), SizeGuard::default()).unwrap();
            assert_eq!(w, want, "n = {n}");
            assert!(verify_path_decomposition(g.graph(), &d), "n = {n}");
        }
    }

    #[test]
    fn matches_the_brute_force_on_every_four_vertex_graph() {
        for mask in 0u32..64 {
            let mut g = Graph::new();
            let vs: Vec<VertexId> = (0..4).map(|i| g.add_vertex(format!("x{i}"))).collect();
            let pairs =
                [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
            for (bit, &(a, b)) in pairs.iter().enumerate() {
                if mask >> bit & 1 == 1 {
                    g.add_edge(vs[a], vs[b]).unwrap();
                }
            }
            let (w, d) = exact_pathwidth(&g, SizeGuard::default()).unwrap();
            assert_eq!(w, oracle_width(&g), "edge mask {mask}");
            assert_eq!(d.width(), w, "edge mask {mask}");
            assert!(verify_path_decomposition(&g, &d), "edge mask {mask}");
        }
    }

    #[test]
    fn matches_the_brute_force_on_the_six_vertex_member() {
        let g = generate_truemper(3).unwrap();
        let (w, d) = exact_pathwidth(g.graph(), SizeGuard::default()).unwrap();
        assert_eq!(w, oracle_width(g.graph()));
        assert_eq!(d.width(), w);
        assert!(verify_path_decomposition(g.graph(), &d));
    }

    #[test]
    fn parallel_edges_change_nothing() {
        let mut g = path_graph(3);
        let vs: Vec<VertexId> = g.vertices().collect();
        g.add_edge(vs[0], vs[1]).unwrap();
        let (w, _) = exact_pathwidth(&g, SizeGuard::default()).unwrap();
        assert_eq!(w, 1);
    }

    #[test]
    fn the_empty_graph_has_width_zero() {
        let g = Graph::new();
        let (w, d) = exact_pathwidth(&g, SizeGuard::default()).unwrap();
        assert_eq!(w, 0);
        assert!(d.bags.is_empty());
        assert!(verify_path_decomposition(&g, &d));
    }

    #[test]
    fn verification_catches_each_broken_invariant() {
        let g = path_graph(3);
        let vs: Vec<VertexId> = g.vertices().collect();
        let (_, good) = exact_pathwidth(&g, SizeGuard::default()).unwrap();
        assert!(verify_path_decomposition(&g, &good));

        let one_bag = PathDecomposition { bags: vec![vs.iter().copied().collect()] };
        assert!(verify_path_decomposition(&g, &one_bag));

        let missing_vertex =
            PathDecomposition { bags: vec![[vs[0], vs[1]].into_iter().collect()] };
        assert!(!verify_path_decomposition(&g, &missing_vertex));

        let missing_edge = PathDecomposition {
            bags: vec![
                [vs[0]].into_iter().collect(),
                [vs[1]].into_iter().collect(),
                [vs[2]].into_iter().collect(),
            ],
        };
        assert!(!verify_path_decomposition(&g, &missing_edge));

        let torn_interval = PathDecomposition {
            bags: vec![
                [vs[0], vs[1]].into_iter().collect(),
                [vs[1], vs[2]].into_iter().collect(),
                [vs[0], vs[2]].into_iter().collect(),
            ],
        };
        assert!(!verify_path_decomposition(&g, &torn_interval));

        let foreign = PathDecomposition {
            bags: vec![[vs[0], vs[1], vs[2], VertexId(99)].into_iter().collect()],
        };
        assert!(!verify_path_decomposition(&g, &foreign));
    }

    #[test]
    fn the_guard_applies() {
        let g = generate_truemper(5).unwrap();
        assert_eq!(
            exact_pathwidth(g.graph(), SizeGuard::new(6)).unwrap_err(),
            Error::SizeGuardExceeded { vertices: 10, cap: 6 }
        );
    }
}
