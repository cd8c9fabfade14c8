use std::fmt::Write;

use super::{BratteliDiagram, ROOT_LABEL};

fn node(level: usize, v: char) -> String {
    format!("\"{level}:{v}\"")
}

/// Graphviz rendering: one `rank=same` subgraph per level, the root on
/// top, edges labelled by fibre index and listed by `(level, source,
/// index)`.
pub fn export_dot(diag: &BratteliDiagram) -> String {
    let mut out = String::new();
    out.push_str("digraph bratteli {\n");
    out.push_str("  rankdir=BT;\n");
    out.push_str("  node [shape=circle];\n");
    let _ = writeln!(out, "  {{ rank=same; {} [label=\"{ROOT_LABEL}\"]; }}", node(0, ROOT_LABEL));
    for level in 1..=diag.top_level() {
        let verts = diag.vertices(level).expect("level within diagram");
        let nodes: Vec<String> = verts
            .iter()
            .map(|v| format!("{} [label=\"{v}\"];", node(level, v)))
            .collect();
        let _ = writeln!(out, "  {{ rank=same; {} }}", nodes.join(" "));
    }
    for level in 1..=diag.top_level() {
        for v in diag.vertices(level).expect("level within diagram").iter() {
            if level == 1 {
                let _ = writeln!(out, "  {} -> {} [label=\"0\"];", node(1, v), node(0, ROOT_LABEL));
                continue;
            }
            let fiber = diag.fiber(level, v).expect("vertex has a fibre");
            for (i, t) in fiber.letters().enumerate() {
                let _ = writeln!(out, "  {} -> {} [label=\"{i}\"];", node(level, v), node(level - 1, t));
            }
        }
    }
    out.push_str("}\n");
    out
}
