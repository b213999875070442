//! Graphviz DOT export for permissible walk graphs.
//!
//! The output is a plain `digraph`: one statement per node with its
//! attributes rendered into a `tooltip`, one statement per arc with
//! `penwidth` proportional to the overlap size when one is recorded.
//! Pipe it through `dot -Tsvg` (or any Graphviz layout engine) to draw.

use std::fmt::Write as _;

use crate::linegraph::PermissibleWalkGraph;
use crate::scalar::TimeScalar;

/// Escapes a string for use inside a double-quoted DOT string literal.
fn escape(text: &str) -> String {
    text.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Renders a permissible walk graph as a Graphviz `digraph`.
pub fn graph_to_dot<T: TimeScalar>(p: &PermissibleWalkGraph<T>) -> String {
    let mut out = String::from("digraph permissible {\n");
    out.push_str("  rankdir=LR;\n");
    out.push_str("  node [shape=box, style=rounded];\n");

    for id in p.node_ids() {
        let node = p.node(id).expect("iterating own nodes");
        let mut tooltip = String::new();
        for (attr, value) in &node.attrs {
            if !tooltip.is_empty() {
                tooltip.push_str("\\n");
            }
            let _ = write!(tooltip, "{attr}={value}");
        }
        if tooltip.is_empty() {
            let _ = writeln!(out, "  \"{}\";", escape(&node.name));
        } else {
            let _ = writeln!(
                out,
                "  \"{}\" [tooltip=\"{}\"];",
                escape(&node.name),
                escape(&tooltip)
            );
        }
    }

    for (a, b) in p.arcs() {
        let from = p.node(*a).expect("arc endpoints are nodes");
        let to = p.node(*b).expect("arc endpoints are nodes");
        match p.zeta(*a, *b) {
            Some(overlap) => {
                let _ = writeln!(
                    out,
                    "  \"{}\" -> \"{}\" [penwidth={overlap}];",
                    escape(&from.name),
                    escape(&to.name)
                );
            }
            None => {
                let _ = writeln!(
                    out,
                    "  \"{}\" -> \"{}\";",
                    escape(&from.name),
                    escape(&to.name)
                );
            }
        }
    }

    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::attributes::{NodePredicate, Predicate};
    use crate::fixtures::meetings_with_topics;
    use crate::linegraph::{attributed_s_line_graph, permissible_walk_graph};

    #[test]
    fn renders_nodes_and_arcs() {
        let h = meetings_with_topics();
        let lg = attributed_s_line_graph(&h, 1, ["time", "topics"]).unwrap();
        let pred = NodePredicate::all([
            ("time", Predicate::StrongOrder),
            ("topics", Predicate::SetIntersectsAtLeast { t: 1 }),
        ]);
        let p = permissible_walk_graph(&lg, &pred).unwrap();
        let dot = graph_to_dot(&p);

        assert!(dot.starts_with("digraph permissible {"));
        assert!(dot.trim_end().ends_with('}'));
        assert!(dot.contains("time=[0, 1]"));
        assert!(dot.contains("topics={A, B, C}"));
        assert!(dot.contains("\"M1\" -> \"M3\" [penwidth=1];"));
        assert!(dot.contains("\"M3\" -> \"M4\" [penwidth=2];"));
        assert!(!dot.contains("\"M1\" -> \"M2\""));
        assert!(!dot.contains("\"M3\" -> \"M1\""));
    }

    #[test]
    fn escapes_quotes_in_names() {
        assert_eq!(escape(r#"a"b\c"#), r#"a\"b\\c"#);
    }
}
