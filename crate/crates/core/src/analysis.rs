//! The brute-force side of the story: enumerate candidate linkages by
//! depth-first search and decide vitality by checking that no rival exists.
//!
//! A linkage is unique when no other pair of disjoint paths connects the same
//! terminal pairs. The rival pair does not have to be spanning, so uniqueness
//! is decided over all collections while `enumerate_spanning_linkages` keeps
//! its narrower, spanning-only contract.

use crate::error::{Result, SizeGuard};
use crate::graph::VertexId;
use crate::linkage::{LinkagePath, LinkedGraph, TwoLinkage};

/// The complete list of spanning order-2 linkages of a graph, in lexicographic
/// order by the first path's vertex sequence, then the second's. The graph's
/// own linkage is always present.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkageEnumeration {
    pub linkages: Vec<TwoLinkage>,
}

struct Search<'a> {
    g: &'a LinkedGraph,
    spanning_only: bool,
}

impl<'a> Search<'a> {
    /// Visits candidate linkages in lexicographic route order until the
    /// visitor returns false.
    fn run(&self, visit: &mut dyn FnMut(&TwoLinkage) -> bool) {
        let [s1, t1, s2, t2] = self.g.terminals();
        let mut used = vec![s1];
        let forbidden = [s2, t2];
        self.extend_path1(t1, &mut used, &forbidden, visit, &mut true);
    }

    fn extend_path1(
        &self,
        goal: VertexId,
        route: &mut Vec<VertexId>,
        forbidden: &[VertexId; 2],
        visit: &mut dyn FnMut(&TwoLinkage) -> bool,
        alive: &mut bool,
    ) {
        if !*alive {
            return;
        }
        let tip = *route.last().unwrap();
        if tip == goal {
            let first = route.clone();
            self.search_path2(&first, visit, alive);
            return;
        }
        for next in self.g.graph().neighbors(tip) {
            if route.contains(&next) || forbidden.contains(&next) {
                continue;
            }
            route.push(next);
            self.extend_path1(goal, route, forbidden, visit, alive);
            route.pop();
            if !*alive {
                return;
            }
        }
    }

    fn search_path2(
        &self,
        first: &[VertexId],
        visit: &mut dyn FnMut(&TwoLinkage) -> bool,
        alive: &mut bool,
    ) {
        let [_, _, s2, t2] = self.g.terminals();
        let mut route = vec![s2];
        self.extend_path2(t2, first, &mut route, visit, alive);
    }

    fn extend_path2(
        &self,
        goal: VertexId,
        first: &[VertexId],
        route: &mut Vec<VertexId>,
        visit: &mut dyn FnMut(&TwoLinkage) -> bool,
        alive: &mut bool,
    ) {
        if !*alive {
            return;
        }
        let tip = *route.last().unwrap();
        if tip == goal {
            if !self.spanning_only
                || first.len() + route.len() == self.g.graph().vertex_count()
            {
                let linkage = self.bind(first, route);
                if !visit(&linkage) {
                    *alive = false;
                }
            }
            return;
        }
        for next in self.g.graph().neighbors(tip) {
            if route.contains(&next) || first.contains(&next) {
                continue;
            }
            route.push(next);
            self.extend_path2(goal, first, route, visit, alive);
            route.pop();
            if !*alive {
                return;
            }
        }
    }

    /// Routes are vertex sequences; each consecutive pair is bound to the
    /// lowest-id edge joining it.
    fn bind(&self, first: &[VertexId], second: &[VertexId]) -> TwoLinkage {
        let path = |route: &[VertexId]| {
            let edges = route
                .windows(2)
                .map(|w| {
                    *self
                        .g
                        .graph()
                        .edges_between(w[0], w[1])
                        .first()
                        .expect("route follows edges")
                })
                .collect();
            LinkagePath::new(route.to_vec(), edges)
        };
        TwoLinkage::new(path(first), path(second))
    }
}

/// All spanning linkages connecting the graph's two terminal pairs.
pub fn enumerate_spanning_linkages(
    g: &LinkedGraph,
    guard: SizeGuard,
) -> Result<LinkageEnumeration> {
    guard.admit(g.graph().vertex_count())?;
    let mut linkages = Vec::new();
    Search { g, spanning_only: true }.run(&mut |l| {
        linkages.push(l.clone());
        true
    });
    Ok(LinkageEnumeration { linkages })
}

/// The first rival in lexicographic order: a pair of disjoint paths, spanning
/// or not, that connects the same terminal pairs by different routes.
pub fn find_second_linkage(g: &LinkedGraph, guard: SizeGuard) -> Result<Option<TwoLinkage>> {
    guard.admit(g.graph().vertex_count())?;
    let own = g.linkage();
    let mut second = None;
    Search { g, spanning_only: false }.run(&mut |l| {
        if l.same_routes(own) {
            true
        } else {
            second = Some(l.clone());
            false
        }
    });
    Ok(second)
}

/// A spanning linkage is vital when it has no rival at all.
pub fn is_vital(g: &LinkedGraph, guard: SizeGuard) -> Result<bool> {
    Ok(find_second_linkage(g, guard)?.is_none())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::linkage::PathId;
    use crate::minor::build_linked;
    use crate::truemper::generate_truemper;
    use crate::xx::canonical_xx;

    #[test]
    fn the_obstruction_has_exactly_two_spanning_linkages() {
        let g = canonical_xx();
        let found = enumerate_spanning_linkages(&g, SizeGuard::default()).unwrap();
        assert_eq!(found.linkages.len(), 2);
        assert!(found.linkages[0].same_routes(g.linkage()));
        assert!(!is_vital(&g, SizeGuard::default()).unwrap());

        // The rival swaps the two middle vertices between the paths.
        let second = find_second_linkage(&g, SizeGuard::default()).unwrap().unwrap();
        let b = g.path(PathId::P2).verts[1];
        let a = g.path(PathId::P1).verts[1];
        assert_eq!(second.path(PathId::P1).verts[1], b);
        assert_eq!(second.path(PathId::P2).verts[1], a);
    }

    #[test]
    fn the_double_ladder_is_vital() {
        for n in [1, 2, 3, 4] {
            let g = generate_truemper(n).unwrap();
            let found = enumerate_spanning_linkages(&g, SizeGuard::default()).unwrap();
            assert_eq!(found.linkages.len(), 1, "n = {n}");
            assert!(is_vital(&g, SizeGuard::default()).unwrap());
        }
    }

    #[test]
    fn two_disjoint_edges_are_vital() {
        let g = build_linked(&["a", "b"], &["c", "d"], &[]).unwrap();
        let found = enumerate_spanning_linkages(&g, SizeGuard::default()).unwrap();
        assert_eq!(found.linkages.len(), 1);
        assert_eq!(find_second_linkage(&g, SizeGuard::default()).unwrap(), None);
    }

    #[test]
    fn a_non_spanning_rival_still_defeats_vitality() {
        // Subdividing every path edge of the obstruction leaves exactly one
        // spanning linkage, but the short crossover routes still exist.
        let g = build_linked(
            &["s1", "p", "a", "q", "t1"],
            &["s2", "r", "b", "w", "t2"],
            &[("s1", "b"), ("t1", "b"), ("s2", "a"), ("t2", "a")],
        )
        .unwrap();
        assert_eq!(
            enumerate_spanning_linkages(&g, SizeGuard::default()).unwrap().linkages.len(),
            1
        );
        let second = find_second_linkage(&g, SizeGuard::default()).unwrap().unwrap();
        assert!(!is_vital(&g, SizeGuard::default()).unwrap());
        let verts: Vec<VertexId> = second.path(PathId::P1).verts.clone();
        assert_eq!(verts.len(), 3, "the rival cuts across, skipping the subdividers");
    }

    #[test]
    fn the_size_guard_trips() {
        let g = generate_truemper(5).unwrap();
        let err = enumerate_spanning_linkages(&g, SizeGuard::new(8)).unwrap_err();
        assert_eq!(err, Error::SizeGuardExceeded { vertices: 10, cap: 8 });
    }

    #[test]
    fn enumeration_is_stable_under_reversal_as_a_set() {
        let g = canonical_xx();
        let r = g.reverse_path(PathId::P1);
        let a = enumerate_spanning_linkages(&g, SizeGuard::default()).unwrap();
        let b = enumerate_spanning_linkages(&r, SizeGuard::default()).unwrap();
        assert_eq!(a.linkages.len(), b.linkages.len());
        for l in &b.linkages {
            let flipped = TwoLinkage::new(l.path(PathId::P1).reversed(), l.path(PathId::P2).clone());
            assert!(a.linkages.iter().any(|k| k.same_routes(&flipped)));
        }
    }
}
