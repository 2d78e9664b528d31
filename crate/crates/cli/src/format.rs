//! The line-based linked-graph document format.
//!
//! ```text
//! # optional comment
//! path1: s1 a t1
//! path2: s2 b t2
//! rung s1 b
//! ```
//!
//! `path1:` and `path2:` each appear exactly once and list at least one
//! vertex name; consecutive names become path edges. `rung u v` adds an
//! off-linkage edge; repeating a rung line yields parallel edges. Edge kinds
//! are recomputed from the linkage, never trusted from the file, so a "rung"
//! inside one path parses fine and classifies as a chord.

use std::collections::BTreeMap;

use vital_core::{
    EdgeKind, Error, Graph, LinkagePath, LinkedGraph, PathId, TwoLinkage, VertexId,
};

/// Parse or validation failure for a document. Syntax errors carry the
/// 1-based line and column of the offending token.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DocumentError {
    #[error("line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("{0}")]
    Semantic(String),
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> DocumentError {
    DocumentError::Syntax { line, column, message: message.into() }
}

fn semantic(message: impl Into<String>) -> DocumentError {
    DocumentError::Semantic(message.into())
}

/// One named token with its 1-based column.
fn tokens(line: &str) -> Vec<(&str, usize)> {
    let mut out = Vec::new();
    let mut column = 1;
    let mut start = None;
    for (i, ch) in line.char_indices() {
        if ch.is_whitespace() {
            if let Some((s, c)) = start.take() {
                out.push((&line[s..i], c));
            }
        } else if start.is_none() {
            start = Some((i, column));
        }
        column += 1;
    }
    if let Some((s, c)) = start {
        out.push((&line[s..], c));
    }
    out
}

pub fn parse_linked_graph(text: &str) -> Result<LinkedGraph, DocumentError> {
    let mut paths: [Option<Vec<String>>; 2] = [None, None];
    let mut rungs: Vec<(String, String)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = raw.trim_start();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let toks = tokens(raw);
        let (head, head_col) = toks[0];
        match head {
            "path1:" | "path2:" => {
                let slot = usize::from(head == "path2:");
                if paths[slot].is_some() {
                    return Err(syntax(lineno, head_col, format!("{head} declared twice")));
                }
                if toks.len() == 1 {
                    return Err(syntax(lineno, head_col, "a path needs at least one vertex"));
                }
                paths[slot] = Some(toks[1..].iter().map(|(t, _)| t.to_string()).collect());
            }
            "rung" => {
                if toks.len() != 3 {
                    return Err(syntax(lineno, head_col, "rung takes exactly two vertex names"));
                }
                let (u, uc) = toks[1];
                let v = toks[2].0;
                if u == v {
                    return Err(syntax(lineno, uc, format!("rung joins '{u}' to itself")));
                }
                rungs.push((u.to_string(), v.to_string()));
            }
            _ => {
                return Err(syntax(
                    lineno,
                    head_col,
                    format!("expected 'path1:', 'path2:' or 'rung', found '{head}'"),
                ));
            }
        }
    }
    let [p1, p2] = paths;
    let p1 = p1.ok_or_else(|| semantic("the document never declares path1"))?;
    let p2 = p2.ok_or_else(|| semantic("the document never declares path2"))?;

    let mut seen = std::collections::BTreeSet::new();
    for name in p1.iter().chain(&p2) {
        if !seen.insert(name) {
            return Err(semantic(format!("vertex '{name}' appears twice in the linkage")));
        }
    }

    let mut graph = Graph::new();
    let mut ids: BTreeMap<String, VertexId> = BTreeMap::new();
    let mut intern = |graph: &mut Graph, name: &str| {
        *ids.entry(name.to_string()).or_insert_with(|| graph.add_vertex(name))
    };

    let mut linkage_paths = Vec::new();
    for names in [&p1, &p2] {
        let verts: Vec<VertexId> = names.iter().map(|n| intern(&mut graph, n)).collect();
        let mut edges = Vec::new();
        for w in verts.windows(2) {
            edges.push(graph.add_edge(w[0], w[1]).map_err(|e| semantic(e.to_string()))?);
        }
        linkage_paths.push(LinkagePath::new(verts, edges));
    }
    for (u, v) in &rungs {
        let u = intern(&mut graph, u);
        let v = intern(&mut graph, v);
        graph.add_edge(u, v).map_err(|e| semantic(e.to_string()))?;
    }

    let p2 = linkage_paths.pop().expect("two paths were built");
    let p1 = linkage_paths.pop().expect("two paths were built");
    LinkedGraph::new(graph, TwoLinkage::new(p1, p2)).map_err(|e| match e {
        Error::NotSpanning(v) => semantic(format!(
            "vertex '{}' is on neither path",
            name_of(&ids, v)
        )),
        other => semantic(other.to_string()),
    })
}

fn name_of(ids: &BTreeMap<String, VertexId>, v: VertexId) -> String {
    ids.iter().find(|(_, &id)| id == v).map(|(n, _)| n.clone()).unwrap_or_else(|| format!("{v:?}"))
}

/// Render `g` in the document format, rung lines ascending by edge id.
/// `note`, when nonempty, becomes a leading comment recording where the
/// document came from.
pub fn serialize_linked_graph(g: &LinkedGraph, note: &str) -> String {
    let names = printable_names(g);
    let mut out = String::new();
    if !note.is_empty() {
        out.push_str(&format!("# {note}\n"));
    }
    for (which, label) in [(PathId::P1, "path1:"), (PathId::P2, "path2:")] {
        out.push_str(label);
        for &v in &g.path(which).verts {
            out.push(' ');
            out.push_str(&names[&v]);
        }
        out.push('\n');
    }
    let kinds = g.classify_edges();
    for (e, kind) in kinds {
        if kind == EdgeKind::Path {
            continue;
        }
        let (u, v) = g.graph().ends(e).expect("classified edge exists");
        out.push_str(&format!("rung {} {}\n", names[&u], names[&v]));
    }
    out
}

/// Vertex names made safe for the whitespace-separated format: blanks
/// replaced, comment markers and collisions disambiguated by vertex id.
fn printable_names(g: &LinkedGraph) -> BTreeMap<VertexId, String> {
    let mut used = std::collections::BTreeSet::new();
    let mut names = BTreeMap::new();
    for v in g.graph().vertices() {
        let mut name: String = g
            .graph()
            .name(v)
            .chars()
            .map(|c| if c.is_whitespace() { '_' } else { c })
            .collect();
        if name.is_empty() || name.starts_with('#') || !used.insert(name.clone()) {
            name = format!("{name}~{}", v.0);
            used.insert(name.clone());
        }
        names.insert(v, name);
    }
    names
}
