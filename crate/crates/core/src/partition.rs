//! The crossing predicate on rungs and the two-block partition search.
//!
//! Two rungs cross when their endpoints appear in strictly opposite order
//! along the two paths. A valid partition splits the rungs into a block that
//! is pairwise non-crossing as drawn and a block that is pairwise
//! non-crossing after reversing the second path; reversal flips the second
//! coordinate, so the second block must avoid strictly agreeing pairs.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result, SizeGuard};
use crate::graph::EdgeId;
use crate::linkage::{EdgeKind, LinkedGraph, PathId};

/// A two-block split of the rung set. Block A is pairwise non-crossing;
/// block B is pairwise non-crossing after reversing path 2.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RungPartition {
    pub block_a: BTreeSet<EdgeId>,
    pub block_b: BTreeSet<EdgeId>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Sign {
    /// Strictly opposite position order: the pair crosses.
    Opposite,
    /// Strictly agreeing position order: the pair crosses once path 2 is
    /// reversed.
    Agree,
    /// A tie on either path (including shared endpoints): crosses nowhere.
    Neither,
}

/// The (path-1 position, path-2 position) pair of a rung's endpoints.
fn rung_positions(g: &LinkedGraph, e: EdgeId) -> Result<(usize, usize)> {
    if g.edge_kind(e)? != EdgeKind::Rung {
        return Err(Error::NotARungEdge(e));
    }
    let (a, b) = g.graph().ends(e)?;
    let mut on_p1 = None;
    let mut on_p2 = None;
    for v in [a, b] {
        match g.locate(v) {
            Some((PathId::P1, i)) => on_p1 = Some(i),
            Some((PathId::P2, i)) => on_p2 = Some(i),
            None => return Err(Error::UnknownVertex(v)),
        }
    }
    match (on_p1, on_p2) {
        (Some(i), Some(j)) => Ok((i, j)),
        _ => Err(Error::NotARungEdge(e)),
    }
}

fn order_sign(g: &LinkedGraph, e: EdgeId, f: EdgeId) -> Result<Sign> {
    let (a1, a2) = rung_positions(g, e)?;
    let (b1, b2) = rung_positions(g, f)?;
    if a1 == b1 || a2 == b2 {
        return Ok(Sign::Neither);
    }
    if (a1 < b1) == (a2 < b2) {
        Ok(Sign::Agree)
    } else {
        Ok(Sign::Opposite)
    }
}

/// Whether two rungs cross: strictly opposite position order on the two
/// paths. A rung never crosses itself or anything sharing an endpoint.
pub fn crossing(g: &LinkedGraph, e: EdgeId, f: EdgeId) -> Result<bool> {
    Ok(order_sign(g, e, f)? == Sign::Opposite)
}

/// Searches for a valid partition by backtracking over the rungs in
/// ascending id order, trying block A before block B and propagating forced
/// placements. Returns the first assignment found, or None when every
/// branch conflicts.
pub fn find_valid_partition(g: &LinkedGraph, guard: SizeGuard) -> Result<Option<RungPartition>> {
    guard.admit(g.graph().vertex_count())?;
    g.require_chordless()?;
    let rungs = g.rung_ids();
    let k = rungs.len();
    let mut signs = vec![vec![Sign::Neither; k]; k];
    for i in 0..k {
        for j in i + 1..k {
            let s = order_sign(g, rungs[i], rungs[j])?;
            signs[i][j] = s;
            signs[j][i] = s;
        }
    }

    // domain[i] = (A still possible, B still possible)
    let mut domain = vec![(true, true); k];
    let mut assigned: Vec<Option<bool>> = vec![None; k];
    if !assign_from(0, &signs, &mut domain, &mut assigned) {
        return Ok(None);
    }
    let mut partition =
        RungPartition { block_a: BTreeSet::new(), block_b: BTreeSet::new() };
    for (i, &e) in rungs.iter().enumerate() {
        if assigned[i] == Some(true) {
            partition.block_a.insert(e);
        } else {
            partition.block_b.insert(e);
        }
    }
    Ok(Some(partition))
}

/// Places every rung from `next` on, assuming the earlier choices are
/// consistent. A placement in A is blocked by an Opposite partner already in
/// A; a placement in B by an Agree partner already in B. After each tentative
/// choice, partners left with one option are placed immediately and a partner
/// with none fails the branch.
fn assign_from(
    next: usize,
    signs: &[Vec<Sign>],
    domain: &mut [(bool, bool)],
    assigned: &mut [Option<bool>],
) -> bool {
    let k = assigned.len();
    let target = match (next..k).find(|&i| assigned[i].is_none()) {
        Some(i) => i,
        None => return true,
    };
    for choice in [true, false] {
        let allowed = if choice { domain[target].0 } else { domain[target].1 };
        if !allowed {
            continue;
        }
        let saved_domain = domain.to_vec();
        let saved_assigned = assigned.to_vec();
        if place(target, choice, signs, domain, assigned)
            && assign_from(target + 1, signs, domain, assigned)
        {
            return true;
        }
        domain.copy_from_slice(&saved_domain);
        assigned.copy_from_slice(&saved_assigned);
    }
    false
}

fn place(
    i: usize,
    in_a: bool,
    signs: &[Vec<Sign>],
    domain: &mut [(bool, bool)],
    assigned: &mut [Option<bool>],
) -> bool {
    assigned[i] = Some(in_a);
    domain[i] = if in_a { (true, false) } else { (false, true) };
    let mut forced = Vec::new();
    for j in 0..assigned.len() {
        if assigned[j].is_some() {
            continue;
        }
        let conflict = match signs[i][j] {
            Sign::Opposite => in_a,
            Sign::Agree => !in_a,
            Sign::Neither => false,
        };
        if !conflict {
            continue;
        }
        if in_a {
            domain[j].0 = false;
        } else {
            domain[j].1 = false;
        }
        match domain[j] {
            (false, false) => return false,
            (true, false) => forced.push((j, true)),
            (false, true) => forced.push((j, false)),
            (true, true) => unreachable!(),
        }
    }
    for (j, choice) in forced {
        if assigned[j].is_none() && !place(j, choice, signs, domain, assigned) {
            return false;
        }
    }
    true
}
