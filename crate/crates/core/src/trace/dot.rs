use std::fmt::Write;

use super::Frame;

pub const HIGHLIGHT_COLOR: &str = "#9400D3";
pub const START_MARKER: &str = "__start";
/// Shown under every frame.
pub const INSTRUCTIONS: &str = "→ next   ← previous   ↓ end   ↑ start";

/// Renders a frame as a Graphviz digraph. Output depends only on the frame.
pub fn frame_to_dot(frame: &Frame) -> String {
    let g = &frame.graph;
    let mut out = String::new();
    out.push_str("digraph gnfa {\n");
    out.push_str("    rankdir=LR;\n");
    out.push_str("    labelloc=b;\n");
    let _ = writeln!(
        out,
        "    label={};",
        quote(&format!("{}\n{}", frame.message, INSTRUCTIONS))
    );
    out.push_str("    node [shape=circle];\n");
    let _ = writeln!(out, "    {START_MARKER} [shape=point, style=invis];");

    for state in g.states() {
        let mut attrs = Vec::new();
        if state == g.final_state() {
            attrs.push("shape=doublecircle".to_string());
        }
        if frame.highlights.iter().any(|h| h == state) {
            attrs.push("style=filled".to_string());
            attrs.push(format!("fillcolor={}", quote(HIGHLIGHT_COLOR)));
        }
        if attrs.is_empty() {
            let _ = writeln!(out, "    {};", quote(state));
        } else {
            let _ = writeln!(out, "    {} [{}];", quote(state), attrs.join(", "));
        }
    }

    let _ = writeln!(out, "    {START_MARKER} -> {};", quote(g.start()));
    for e in g.edges() {
        let _ = writeln!(
            out,
            "    {} -> {} [label={}];",
            quote(&e.from),
            quote(&e.to),
            quote(&e.label.to_string())
        );
    }
    out.push_str("}\n");
    out
}

fn quote(s: &str) -> String {
    let mut q = String::with_capacity(s.len() + 2);
    q.push('"');
    for c in s.chars() {
        match c {
            '"' => q.push_str("\\\""),
            '\\' => q.push_str("\\\\"),
            '\n' => q.push_str("\\n"),
            c => q.push(c),
        }
    }
    q.push('"');
    q
}
