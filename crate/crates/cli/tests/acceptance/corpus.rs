//! The shared instance corpus: every linkage minor of the six-vertex family
//! member deduplicated up to linked isomorphism, five hundred seeded random
//! minors of the twelve-vertex member, and every chordless spanning linked
//! graph on at most seven vertices with simple rungs, enumerated rail split
//! by rail split.

use vital_core::{
    all_linkage_minors, build_linked, generate_truemper, linked_isomorphic, random_truemper_minor,
    LinkedGraph,
};

pub struct Corpus {
    pub u3_minors: Vec<LinkedGraph>,
    pub u6_random: Vec<LinkedGraph>,
    pub exhaustive: Vec<LinkedGraph>,
}

impl Corpus {
    pub fn build() -> Corpus {
        Corpus {
            u3_minors: dedup_minors(),
            u6_random: seeded_minors(),
            exhaustive: small_instances(),
        }
    }

    pub fn all(&self) -> impl Iterator<Item = &LinkedGraph> {
        self.u3_minors.iter().chain(&self.u6_random).chain(&self.exhaustive)
    }

    pub fn len(&self) -> usize {
        self.u3_minors.len() + self.u6_random.len() + self.exhaustive.len()
    }
}

fn dedup_minors() -> Vec<LinkedGraph> {
    let host = generate_truemper(3).expect("member exists");
    let mut kept: Vec<LinkedGraph> = Vec::new();
    for (_, minor) in all_linkage_minors(&host).expect("minor enumeration") {
        if !kept.iter().any(|seen| linked_isomorphic(seen, &minor, true).is_some()) {
            kept.push(minor);
        }
    }
    kept
}

fn seeded_minors() -> Vec<LinkedGraph> {
    (0..500)
        .map(|seed| random_truemper_minor(6, 0.5, seed).expect("sampling succeeds").0)
        .collect()
}

fn small_instances() -> Vec<LinkedGraph> {
    let mut out = Vec::new();
    for a in 1usize..=3 {
        for b in a..=7 - a {
            let p1: Vec<String> = (0..a).map(|i| format!("p{i}")).collect();
            let p2: Vec<String> = (0..b).map(|i| format!("q{i}")).collect();
            let p1: Vec<&str> = p1.iter().map(String::as_str).collect();
            let p2: Vec<&str> = p2.iter().map(String::as_str).collect();
            let pairs = a * b;
            for mask in 0u32..1 << pairs {
                let rungs: Vec<(&str, &str)> = (0..pairs)
                    .filter(|bit| mask >> bit & 1 == 1)
                    .map(|bit| (p1[bit / b], p2[bit % b]))
                    .collect();
                out.push(build_linked(&p1, &p2, &rungs).expect("rail split builds"));
            }
        }
    }
    out
}
