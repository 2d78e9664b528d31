//! Acceptance harness: one line per shipped guarantee, PASS or FAIL, run
//! as a plain binary so the lines always print. Exits nonzero if any
//! guarantee fails.

mod corpus;

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use corpus::Corpus;
use vital_cli::format::{parse_linked_graph, serialize_linked_graph};
use vital_core::{
    apply_witness, canonical_xx, crossing, embed_in_truemper, enumerate_spanning_linkages,
    exact_pathwidth, extract_xx_from_second_linkage, find_second_linkage, find_valid_partition,
    generate_truemper, has_xx_linkage_minor, linked_isomorphic, random_truemper_minor, replay_ops,
    verify_certificate, verify_path_decomposition, Error, LinkedGraph, MinorOp, PathId, SizeGuard,
    VertexId,
};

type Criterion = fn(&Corpus) -> Result<String, String>;

fn main() {
    let corpus = Corpus::build();
    let criteria: [(&str, Criterion); 9] = [
        ("vitality, obstruction-freeness, and embeddability agree", all_three_predicates_agree),
        ("spanning-linkage counts are exact", linkage_counts_are_exact),
        ("the double-ladder family is obstruction-free", family_is_obstruction_free),
        ("every rival linkage yields an obstruction witness", rivals_always_extract),
        ("embedding certificates verify on every vital instance", certificates_round_trip),
        ("family pathwidth stays within four", pathwidth_bounds_hold),
        ("rung partitions exist across the family", partitions_always_found),
        ("minor ops never reorder surviving path vertices", replay_preserves_path_order),
        ("reversal, commutation, round-trip, classification micro-suites", micro_suites_hold),
    ];
    let mut failures = 0;
    for (name, run) in criteria {
        let started = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(|| run(&corpus)));
        let elapsed = started.elapsed().as_secs_f64();
        match outcome {
            Ok(Ok(detail)) => println!("PASS  {name} [{detail}] ({elapsed:.1}s)"),
            Ok(Err(why)) => {
                failures += 1;
                println!("FAIL  {name}: {why}");
            }
            Err(panic) => {
                failures += 1;
                let why = panic
                    .downcast_ref::<String>()
                    .map(String::as_str)
                    .or_else(|| panic.downcast_ref::<&str>().copied())
                    .unwrap_or("panicked");
                println!("FAIL  {name}: {why}");
            }
        }
    }
    if failures > 0 {
        println!("{failures} criteria failed");
        std::process::exit(1);
    }
    println!("all 9 criteria passed");
}

fn guard_for(g: &LinkedGraph) -> SizeGuard {
    SizeGuard::new(g.graph().vertex_count().max(16))
}

fn all_three_predicates_agree(corpus: &Corpus) -> Result<String, String> {
    for (i, g) in corpus.all().enumerate() {
        let vital = is_vital_here(g)?;
        let obstruction_free =
            has_xx_linkage_minor(g, guard_for(g)).map_err(|e| format!("instance {i}: {e}"))?
                .is_none();
        let embeds = match embed_in_truemper(g) {
            Ok(_) => true,
            Err(Error::NotTruemper(_)) => false,
            Err(e) => return Err(format!("instance {i}: embedding failed: {e}")),
        };
        if vital != obstruction_free || obstruction_free != embeds {
            return Err(format!(
                "instance {i}: vital={vital} obstruction-free={obstruction_free} embeds={embeds}"
            ));
        }
    }
    Ok(format!("{} instances", corpus.len()))
}

fn is_vital_here(g: &LinkedGraph) -> Result<bool, String> {
    find_second_linkage(g, guard_for(g)).map(|s| s.is_none()).map_err(|e| e.to_string())
}

fn linkage_counts_are_exact(_: &Corpus) -> Result<String, String> {
    let guard = SizeGuard::new(16);
    let xx = enumerate_spanning_linkages(&canonical_xx(), guard).map_err(|e| e.to_string())?;
    if xx.linkages.len() != 2 {
        return Err(format!("obstruction has {} spanning linkages, want 2", xx.linkages.len()));
    }
    for n in 1..=7 {
        let member = generate_truemper(n).map_err(|e| e.to_string())?;
        let found = enumerate_spanning_linkages(&member, guard).map_err(|e| e.to_string())?;
        if found.linkages.len() != 1 {
            return Err(format!(
                "member {n} has {} spanning linkages, want 1",
                found.linkages.len()
            ));
        }
    }
    Ok("obstruction 2, members 1 through 7 exactly 1 each".into())
}

fn family_is_obstruction_free(_: &Corpus) -> Result<String, String> {
    for n in 1..=8 {
        let member = generate_truemper(n).map_err(|e| e.to_string())?;
        if has_xx_linkage_minor(&member, SizeGuard::new(16)).map_err(|e| e.to_string())?.is_some()
        {
            return Err(format!("member {n} claims an obstruction minor"));
        }
    }
    Ok("members 1 through 8".into())
}

fn rivals_always_extract(corpus: &Corpus) -> Result<String, String> {
    let mut rivals = 0usize;
    for (i, g) in corpus.all().enumerate() {
        let Some(second) =
            find_second_linkage(g, guard_for(g)).map_err(|e| format!("instance {i}: {e}"))?
        else {
            continue;
        };
        rivals += 1;
        let witness = extract_xx_from_second_linkage(g, &second)
            .map_err(|e| format!("instance {i}: extraction failed: {e}"))?;
        let replayed =
            apply_witness(g, &witness.witness).map_err(|e| format!("instance {i}: {e}"))?;
        let Some(onto) = linked_isomorphic(&replayed, &canonical_xx(), false) else {
            return Err(format!("instance {i}: extracted witness misses the obstruction"));
        };
        if onto != witness.target_iso {
            return Err(format!("instance {i}: witness carries the wrong target map"));
        }
    }
    Ok(format!("{rivals} non-vital instances"))
}

fn certificates_round_trip(corpus: &Corpus) -> Result<String, String> {
    let mut vital = 0usize;
    for (i, g) in corpus.all().enumerate() {
        let cert = match embed_in_truemper(g) {
            Ok(c) => c,
            Err(Error::NotTruemper(_)) => continue,
            Err(e) => return Err(format!("instance {i}: {e}")),
        };
        vital += 1;
        if !verify_certificate(g, &cert) {
            return Err(format!("instance {i}: certificate rejected on verification"));
        }
    }
    Ok(format!("{vital} vital instances"))
}

fn pathwidth_bounds_hold(_: &Corpus) -> Result<String, String> {
    let golden = [(2u32, 3usize), (3, 3), (4, 4), (5, 4), (6, 4)];
    for (n, want) in golden {
        let member = generate_truemper(n).map_err(|e| e.to_string())?;
        let (w, d) =
            exact_pathwidth(member.graph(), SizeGuard::new(16)).map_err(|e| e.to_string())?;
        if !verify_path_decomposition(member.graph(), &d) {
            return Err(format!("member {n}: optimal decomposition does not verify"));
        }
        if w != want {
            return Err(format!("member {n}: width {w}, golden {want}"));
        }
        if w > 4 {
            return Err(format!("member {n}: width {w} above the family bound"));
        }
    }
    let host_width = 4;
    for seed in 0..60u64 {
        let density = [0.3, 0.5, 0.8][(seed % 3) as usize];
        let (minor, _) =
            random_truemper_minor(5, density, seed).map_err(|e| e.to_string())?;
        let (w, d) =
            exact_pathwidth(minor.graph(), SizeGuard::new(16)).map_err(|e| e.to_string())?;
        if !verify_path_decomposition(minor.graph(), &d) {
            return Err(format!("seed {seed}: minor decomposition does not verify"));
        }
        if w > host_width {
            return Err(format!("seed {seed}: minor width {w} exceeds host width {host_width}"));
        }
    }
    Ok("five goldens, sixty sampled minors within host width".into())
}

fn partitions_always_found(_: &Corpus) -> Result<String, String> {
    for n in 1..=7 {
        let member = generate_truemper(n).map_err(|e| e.to_string())?;
        check_partition(&member).map_err(|e| format!("member {n}: {e}"))?;
    }
    for seed in 0..200u64 {
        let n = 4 + (seed % 4) as u32;
        let (minor, _) = random_truemper_minor(n, 0.5, seed).map_err(|e| e.to_string())?;
        check_partition(&minor).map_err(|e| format!("seed {seed}: {e}"))?;
    }
    Ok("members 1 through 7 and 200 seeded samples".into())
}

fn check_partition(g: &LinkedGraph) -> Result<(), String> {
    let Some(partition) =
        find_valid_partition(g, guard_for(g)).map_err(|e| e.to_string())?
    else {
        return Err("no valid partition found".into());
    };
    let rungs: Vec<_> = g.rung_ids();
    let total = partition.block_a.len() + partition.block_b.len();
    if total != rungs.len() || rungs.iter().any(|e| {
        !partition.block_a.contains(e) && !partition.block_b.contains(e)
    }) {
        return Err("blocks do not partition the rung set".into());
    }
    let reversed = g.reverse_path(PathId::P2);
    for (host, block) in [(g, &partition.block_a), (&reversed, &partition.block_b)] {
        let edges: Vec<_> = block.iter().copied().collect();
        for i in 0..edges.len() {
            for j in i + 1..edges.len() {
                if crossing(host, edges[i], edges[j]).map_err(|e| e.to_string())? {
                    return Err("a block contains a crossing pair".into());
                }
            }
        }
    }
    Ok(())
}

fn replay_preserves_path_order(_: &Corpus) -> Result<String, String> {
    let root = generate_truemper(3).map_err(|e| e.to_string())?;
    let mut sequences = 0usize;
    let identity: BTreeMap<VertexId, VertexId> =
        root.graph().vertices().map(|v| (v, v)).collect();
    let mut stack: Vec<(LinkedGraph, BTreeMap<VertexId, VertexId>, usize)> =
        vec![(root.clone(), identity, 0)];
    while let Some((current, map, depth)) = stack.pop() {
        sequences += 1;
        for which in PathId::BOTH {
            let originals = &root.path(which).verts;
            for i in 0..originals.len() {
                for j in i + 1..originals.len() {
                    let (x, y) = (map[&originals[i]], map[&originals[j]]);
                    if x == y {
                        continue;
                    }
                    let ok = current
                        .left_of(which, x, y)
                        .map_err(|e| format!("after {depth} ops: {e}"))?;
                    if !ok {
                        return Err(format!(
                            "after {depth} ops, vertices {x:?} and {y:?} swapped order"
                        ));
                    }
                }
            }
        }
        if depth == 4 {
            continue;
        }
        let mut ops: Vec<MinorOp> = current
            .linkage()
            .path_edge_ids()
            .map(MinorOp::ContractPathEdge)
            .collect();
        ops.extend(current.rung_ids().into_iter().map(MinorOp::DeleteRungEdge));
        for op in ops {
            let (next, step) =
                replay_ops(&current, &[op]).map_err(|e| format!("op replay failed: {e}"))?;
            let composed: BTreeMap<VertexId, VertexId> =
                map.iter().map(|(&orig, &cur)| (orig, step[&cur])).collect();
            stack.push((next, composed, depth + 1));
        }
    }
    Ok(format!("{sequences} op sequences of length at most 4"))
}

fn micro_suites_hold(corpus: &Corpus) -> Result<String, String> {
    for (i, g) in corpus.all().enumerate() {
        let kinds = g.classify_edges();
        if kinds.len() != g.graph().edge_count() {
            return Err(format!("instance {i}: classification misses an edge"));
        }
        for which in PathId::BOTH {
            let once = g.reverse_path(which);
            if once.classify_edges() != kinds {
                return Err(format!("instance {i}: reversal changed an edge kind"));
            }
            let twice = once.reverse_path(which);
            if !twice.linkage().same_routes(g.linkage()) {
                return Err(format!("instance {i}: reversing twice moved a path"));
            }
        }

        let pool: Vec<MinorOp> = g
            .linkage()
            .path_edge_ids()
            .take(3)
            .map(MinorOp::ContractPathEdge)
            .chain(g.rung_ids().into_iter().take(3).map(MinorOp::DeleteRungEdge))
            .collect();
        for x in 0..pool.len() {
            for y in x + 1..pool.len() {
                let forward = replay_ops(g, &[pool[x], pool[y]])
                    .map_err(|e| format!("instance {i}: {e}"))?
                    .0;
                let backward = replay_ops(g, &[pool[y], pool[x]])
                    .map_err(|e| format!("instance {i}: {e}"))?
                    .0;
                if linked_isomorphic(&forward, &backward, false).is_none() {
                    return Err(format!("instance {i}: ops {x} and {y} do not commute"));
                }
            }
        }

        let text = serialize_linked_graph(g, "acceptance round-trip");
        let parsed = parse_linked_graph(&text)
            .map_err(|e| format!("instance {i}: reparse failed: {e}"))?;
        if linked_isomorphic(&parsed, g, true).is_none() {
            return Err(format!("instance {i}: round-trip changed the graph"));
        }
    }
    Ok(format!("{} instances through all four suites", corpus.len()))
}
