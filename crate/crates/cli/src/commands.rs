//! Subcommand bodies. Each returns the process exit code on success:
//! 0 for a positive verdict, 1 for a negative one. Failures map to exit 2
//! (bad input) or 3 (the library contradicted itself), keeping the four
//! codes a stable scripting contract.

use std::fs;
use std::path::Path;

use serde_json::json;
use vital_core::{
    embed_in_truemper, exact_pathwidth, find_second_linkage, find_valid_partition,
    generate_truemper, has_xx_linkage_minor, random_truemper_minor, verify_certificate,
    verify_path_decomposition, EdgeId, Error, LinkedGraph, PathId, SizeGuard,
    TruemperCertificate, TwoLinkage,
};

use crate::dot::{render_dot, render_dot_radial};
use crate::format::{parse_linked_graph, serialize_linked_graph};

#[derive(Debug, thiserror::Error)]
pub enum CommandError {
    /// Unreadable, unparsable, or out-of-contract input; exit 2.
    #[error("{0}")]
    Input(String),
    /// The library's predicates disagreed or a certificate failed to
    /// verify; exit 3.
    #[error("{0}")]
    Internal(String),
}

impl CommandError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CommandError::Input(_) => 2,
            CommandError::Internal(_) => 3,
        }
    }
}

type CmdResult = Result<u8, CommandError>;

fn input(message: impl Into<String>) -> CommandError {
    CommandError::Input(message.into())
}

/// Consistency failures point at bugs, everything else at the input.
fn classify(e: Error) -> CommandError {
    match e {
        Error::Inconsistency(_) => CommandError::Internal(e.to_string()),
        other => CommandError::Input(other.to_string()),
    }
}

fn load(file: &Path) -> Result<LinkedGraph, CommandError> {
    let text = fs::read_to_string(file)
        .map_err(|e| input(format!("cannot read {}: {e}", file.display())))?;
    parse_linked_graph(&text).map_err(|e| input(format!("{}: {e}", file.display())))
}

fn require_chordless(g: &LinkedGraph) -> Result<(), CommandError> {
    match g.require_chordless() {
        Ok(()) => Ok(()),
        Err(Error::ChordPresent(e)) => {
            let (u, v) = g.graph().ends(e).expect("chord exists");
            Err(input(format!(
                "input has a chord between '{}' and '{}'; this command needs a chordless graph",
                g.graph().name(u),
                g.graph().name(v)
            )))
        }
        Err(other) => Err(classify(other)),
    }
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), CommandError> {
    match out {
        Some(p) => fs::write(p, text)
            .map_err(|e| input(format!("cannot write {}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn write_dot(
    g: &LinkedGraph,
    cert: Option<&TruemperCertificate>,
    path: &Path,
) -> Result<(), CommandError> {
    let text = match cert {
        Some(c) if c.witness.ops.is_empty() => render_dot_radial(g, c.n),
        _ => render_dot(g),
    };
    fs::write(path, text).map_err(|e| input(format!("cannot write {}: {e}", path.display())))
}

fn route_names(g: &LinkedGraph, linkage: &TwoLinkage, which: PathId) -> Vec<String> {
    linkage.path(which).verts.iter().map(|&v| g.graph().name(v).to_string()).collect()
}

/// The certificate's ops in the coordinate system users can replay: edge
/// endpoints named as in the canonical family member the ops apply to.
fn embedding_json(cert: &TruemperCertificate) -> Result<serde_json::Value, CommandError> {
    let member = generate_truemper(cert.n).map_err(classify)?;
    let edge_names = |e: EdgeId| -> Result<serde_json::Value, CommandError> {
        let (u, v) = member.graph().ends(e).map_err(classify)?;
        Ok(json!([member.graph().name(u), member.graph().name(v)]))
    };
    let mut ops = Vec::new();
    for op in &cert.witness.ops {
        let (kind, e) = match op {
            vital_core::MinorOp::ContractPathEdge(e) => ("contract", *e),
            vital_core::MinorOp::DeleteRungEdge(e) => ("delete", *e),
        };
        ops.push(json!({"op": kind, "edge": edge_names(e)?}));
    }
    Ok(json!({
        "kind": "truemper_embedding",
        "n": cert.n,
        "path_swap": cert.path_swap,
        "reversed_path1": cert.reversed_path1,
        "reversed_path2": cert.reversed_path2,
        "ops": ops,
    }))
}

pub struct CheckOpts {
    pub oracle_cap: usize,
    pub json: bool,
    pub quiet: bool,
    pub dot: Option<std::path::PathBuf>,
}

pub fn command_check(file: &Path, opts: &CheckOpts) -> CmdResult {
    let g = load(file)?;
    require_chordless(&g)?;

    let second = if g.graph().vertex_count() <= opts.oracle_cap {
        Some(
            find_second_linkage(&g, SizeGuard::new(opts.oracle_cap))
                .map_err(classify)?,
        )
    } else {
        eprintln!(
            "notice: vitality oracle skipped ({} vertices exceeds cap {}); verdict rests on the other predicates",
            g.graph().vertex_count(),
            opts.oracle_cap
        );
        None
    };
    let vital: Option<bool> = second.as_ref().map(|s| s.is_none());

    let xx = has_xx_linkage_minor(&g, SizeGuard::unlimited()).map_err(classify)?;
    let xx_free = xx.is_none();

    let cert = match embed_in_truemper(&g) {
        Ok(c) => Some(c),
        Err(Error::NotTruemper(_)) => None,
        Err(e) => return Err(classify(e)),
    };
    if let Some(c) = &cert {
        if !verify_certificate(&g, c) {
            return Err(CommandError::Internal(
                "embedding certificate failed verification".into(),
            ));
        }
    }

    let verdict_line = render_verdict(vital, xx_free, cert.as_ref());
    let agree = xx_free == cert.is_some() && vital.map_or(true, |v| v == xx_free);
    if !agree {
        return Err(CommandError::Internal(format!(
            "predicates disagree: {verdict_line}"
        )));
    }

    if opts.json {
        let certificate = if let Some(c) = &cert {
            embedding_json(c)?
        } else if let Some(Some(rival)) = &second {
            json!({
                "kind": "second_linkage",
                "path1": route_names(&g, rival, PathId::P1),
                "path2": route_names(&g, rival, PathId::P2),
            })
        } else {
            serde_json::Value::Null
        };
        let report = json!({
            "vital": vital,
            "xx_free": xx_free,
            "truemper_n": cert.as_ref().map(|c| c.n),
            "certificate": certificate,
        });
        println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
    } else if !opts.quiet {
        println!("{verdict_line}");
        if let Some(Some(rival)) = &second {
            println!("second linkage:");
            for which in PathId::BOTH {
                println!(
                    "  {}: {}",
                    match which {
                        PathId::P1 => "path1",
                        PathId::P2 => "path2",
                    },
                    route_names(&g, rival, which).join(" ")
                );
            }
        }
    }

    if let Some(dot) = &opts.dot {
        write_dot(&g, cert.as_ref(), dot)?;
    }
    Ok(u8::from(!xx_free))
}

fn render_verdict(
    vital: Option<bool>,
    xx_free: bool,
    cert: Option<&TruemperCertificate>,
) -> String {
    let vital_word = match vital {
        Some(true) => "yes",
        Some(false) => "no",
        None => "unknown",
    };
    let truemper = match cert {
        Some(c) => format!("yes (n={})", c.n),
        None => "no".into(),
    };
    format!(
        "vital: {vital_word}, xx-free: {}, truemper: {truemper}",
        if xx_free { "yes" } else { "no" }
    )
}

pub fn command_generate(n: u32, out: Option<&Path>, dot: Option<&Path>) -> CmdResult {
    let g = generate_truemper(n).map_err(classify)?;
    emit(out, &serialize_linked_graph(&g, &format!("vital generate {n}")))?;
    if let Some(p) = dot {
        fs::write(p, render_dot_radial(&g, n))
            .map_err(|e| input(format!("cannot write {}: {e}", p.display())))?;
    }
    Ok(0)
}

pub fn command_embed(file: &Path, out: Option<&Path>, quiet: bool) -> CmdResult {
    let g = load(file)?;
    require_chordless(&g)?;
    match embed_in_truemper(&g) {
        Ok(cert) => {
            if !verify_certificate(&g, &cert) {
                return Err(CommandError::Internal(
                    "embedding certificate failed verification".into(),
                ));
            }
            let payload = embedding_json(&cert)?;
            let mut text =
                serde_json::to_string_pretty(&payload).expect("certificate serializes");
            text.push('\n');
            emit(out, &text)?;
            if !quiet {
                eprintln!(
                    "embedded into family member {} with {} ops",
                    cert.n,
                    cert.witness.ops.len()
                );
            }
            Ok(0)
        }
        Err(Error::NotTruemper(w)) => {
            eprintln!(
                "not embeddable: the input has the six-vertex obstruction as a linkage minor ({} ops to reach it)",
                w.witness.ops.len()
            );
            Ok(1)
        }
        Err(e) => Err(classify(e)),
    }
}

pub fn command_pathwidth(file: &Path, cap: usize, json: bool) -> CmdResult {
    let g = load(file)?;
    let (width, deco) =
        exact_pathwidth(g.graph(), SizeGuard::new(cap)).map_err(classify)?;
    if !verify_path_decomposition(g.graph(), &deco) {
        return Err(CommandError::Internal("solver returned an invalid decomposition".into()));
    }
    if json {
        let bags: Vec<Vec<String>> = deco
            .bags
            .iter()
            .map(|bag| bag.iter().map(|&v| g.graph().name(v).to_string()).collect())
            .collect();
        let report = json!({"width": width, "bags": bags});
        println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
    } else {
        println!("{width}");
    }
    Ok(0)
}

pub fn command_partition(file: &Path, cap: usize, json: bool) -> CmdResult {
    let g = load(file)?;
    require_chordless(&g)?;
    let found = find_valid_partition(&g, SizeGuard::new(cap)).map_err(classify)?;
    let Some(partition) = found else {
        if json {
            println!("{}", json!({"block_a": serde_json::Value::Null, "block_b": serde_json::Value::Null}));
        } else {
            println!("no valid partition");
        }
        return Ok(1);
    };
    let names = |edges: &std::collections::BTreeSet<EdgeId>| -> Vec<(String, String)> {
        edges
            .iter()
            .map(|&e| {
                let (u, v) = g.graph().ends(e).expect("partitioned edge exists");
                (g.graph().name(u).to_string(), g.graph().name(v).to_string())
            })
            .collect()
    };
    let (a, b) = (names(&partition.block_a), names(&partition.block_b));
    if json {
        let report = json!({"block_a": a, "block_b": b});
        println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
    } else {
        for (label, block) in [("a", &a), ("b", &b)] {
            let rendered: Vec<String> =
                block.iter().map(|(u, v)| format!("({u} {v})")).collect();
            println!("block {label}: {}", rendered.join(" "));
        }
    }
    Ok(0)
}

pub fn command_random(
    n: u32,
    density: f64,
    seed: u64,
    out: Option<&Path>,
    dot: Option<&Path>,
) -> CmdResult {
    let (g, _) = random_truemper_minor(n, density, seed).map_err(classify)?;
    emit(
        out,
        &serialize_linked_graph(&g, &format!("vital random --seed {seed} {n} {density}")),
    )?;
    if let Some(p) = dot {
        let cert = embed_in_truemper(&g).ok();
        write_dot(&g, cert.as_ref(), p)?;
    }
    Ok(0)
}
