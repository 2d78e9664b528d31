//! Seeded random linkage minors of the two-rail family.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::linkage::LinkedGraph;
use crate::minor::{witness_from_ops, MinorOp, MinorWitness};
use crate::truemper::generate_truemper;

/// Draws a random linkage minor of the family member of index `n`: every
/// rung survives with probability `density`, then every path edge survives
/// with probability `density`, decisions drawn in ascending edge id order
/// from a fixed portable generator. The result embeds back into the family
/// by construction.
pub fn random_truemper_minor(
    n: u32,
    density: f64,
    seed: u64,
) -> Result<(LinkedGraph, MinorWitness)> {
    let g = generate_truemper(n)?;
    let density = density.clamp(0.0, 1.0);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut ops = Vec::new();
    for e in g.rung_ids() {
        if rng.gen::<f64>() >= density {
            ops.push(MinorOp::DeleteRungEdge(e));
        }
    }
    let mut path_edges: Vec<_> = g.linkage().path_edge_ids().collect();
    path_edges.sort();
    let mut contracts = Vec::new();
    for e in path_edges {
        if rng.gen::<f64>() >= density {
            contracts.push(MinorOp::ContractPathEdge(e));
        }
    }
    contracts.extend(ops);
    let (minor, witness) = witness_from_ops(&g, contracts)?;
    Ok((minor, witness))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::truemper::{embed_in_truemper, verify_certificate};

    #[test]
    fn the_same_seed_reproduces_the_same_minor() {
        let (a, wa) = random_truemper_minor(5, 0.5, 42).unwrap();
        let (b, wb) = random_truemper_minor(5, 0.5, 42).unwrap();
        assert_eq!(a, b);
        assert_eq!(wa, wb);
    }

    #[test]
    fn different_seeds_usually_differ() {
        let got: Vec<usize> = (0..8)
            .map(|seed| {
                random_truemper_minor(5, 0.5, seed).unwrap().0.graph().edge_count()
            })
            .collect();
        assert!(got.iter().any(|&c| c != got[0]), "all seeds agreed: {got:?}");
    }

    #[test]
    fn full_density_keeps_the_member_intact() {
        let (minor, witness) = random_truemper_minor(4, 1.0, 7).unwrap();
        assert!(witness.ops.is_empty());
        assert_eq!(minor, generate_truemper(4).unwrap());
    }

    #[test]
    fn zero_density_strips_everything() {
        let (minor, _) = random_truemper_minor(4, 0.0, 7).unwrap();
        assert_eq!(minor.graph().vertex_count(), 2);
        assert_eq!(minor.graph().edge_count(), 0);
    }

    #[test]
    fn samples_always_embed_back() {
        for seed in 0..12 {
            let (minor, _) = random_truemper_minor(4, 0.45, seed).unwrap();
            let cert = embed_in_truemper(&minor).unwrap();
            assert!(verify_certificate(&minor, &cert), "seed {seed}");
        }
    }

    #[test]
    fn index_zero_is_rejected() {
        assert_eq!(random_truemper_minor(0, 0.5, 1).unwrap_err(), Error::ZeroFamilyIndex);
    }
}
