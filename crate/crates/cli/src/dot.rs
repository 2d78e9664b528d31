//! Graphviz export. Path edges render bold, rungs thin, chords dashed.
//! A graph certified as a canonical family member additionally gets pinned
//! radial coordinates: the first path on an outer arc, the second on an
//! inner arc, so parallel rungs become spokes and crossing rungs long
//! chords. Purely a drawing aid; nothing topological is claimed.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use vital_core::{generate_truemper, linked_isomorphic, EdgeKind, LinkedGraph, PathId, VertexId};

pub fn render_dot(g: &LinkedGraph) -> String {
    render(g, &BTreeMap::new())
}

/// Radial rendering for a graph the embedder certified with index `n` and
/// no reduction ops (so it is a family member up to orientation). Falls
/// back to the plain rendering when the shape does not actually match.
pub fn render_dot_radial(g: &LinkedGraph, n: u32) -> String {
    let member = match generate_truemper(n) {
        Ok(m) => m,
        Err(_) => return render(g, &BTreeMap::new()),
    };
    let onto = match linked_isomorphic(&member, g, true) {
        Some(map) => map,
        None => return render(g, &BTreeMap::new()),
    };
    let mut pos = BTreeMap::new();
    for (which, radius) in [(PathId::P1, 2.2f64), (PathId::P2, 1.1f64)] {
        let verts = &member.path(which).verts;
        let m = verts.len().max(2) as f64;
        for (i, &v) in verts.iter().enumerate() {
            // Sweep 300 degrees so the rails read as arcs, not cycles.
            let angle = (90.0 + 300.0 * i as f64 / (m - 1.0)).to_radians();
            pos.insert(onto[&v], (radius * angle.cos(), radius * angle.sin()));
        }
    }
    render(g, &pos)
}

fn render(g: &LinkedGraph, pos: &BTreeMap<VertexId, (f64, f64)>) -> String {
    let mut out = String::from("graph linkage {\n");
    if !pos.is_empty() {
        out.push_str("  layout=neato;\n");
    }
    out.push_str("  node [shape=circle fontsize=11];\n");
    for v in g.graph().vertices() {
        let name = escape(g.graph().name(v));
        match pos.get(&v) {
            Some((x, y)) => {
                let _ = writeln!(out, "  \"{name}\" [pos=\"{x:.3},{y:.3}!\"];");
            }
            None => {
                let _ = writeln!(out, "  \"{name}\";");
            }
        }
    }
    let kinds = g.classify_edges();
    for (e, kind) in kinds {
        let (u, v) = g.graph().ends(e).expect("classified edge exists");
        let style = match kind {
            EdgeKind::Path => "[style=bold penwidth=2.0]",
            EdgeKind::Rung => "[penwidth=0.6]",
            EdgeKind::Chord => "[style=dashed penwidth=0.6]",
        };
        let _ = writeln!(
            out,
            "  \"{}\" -- \"{}\" {style};",
            escape(g.graph().name(u)),
            escape(g.graph().name(v))
        );
    }
    out.push_str("}\n");
    out
}

fn escape(name: &str) -> String {
    name.replace('\\', "\\\\").replace('"', "\\\"")
}
