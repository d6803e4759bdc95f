use std::fmt::Write;

use crate::constructions::Role;
use crate::graph::{Coloring, Graph};

/// Renders an undirected DOT graph. Roles become node labels; colors become
/// evenly spaced HSV fills.
pub fn export_dot(g: &Graph, roles: Option<&[Role]>, f: Option<&Coloring>) -> String {
    let mut out = String::from("graph G {\n");
    if f.is_some() {
        out.push_str("  node [style=filled];\n");
    }
    for v in 0..g.n() {
        let label = match roles.and_then(|r| r.get(v)) {
            Some(role) => format!("{v}: {role}"),
            None => v.to_string(),
        };
        let _ = write!(out, "  {v} [label=\"{label}\"");
        if let Some(f) = f {
            let hue = (f.color(v) - 1) as f64 / f.k() as f64;
            let _ = write!(out, ", fillcolor=\"{hue:.3} 0.450 1.000\"");
        }
        out.push_str("];\n");
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::gadget_q;
    use std::collections::HashSet;

    #[test]
    fn examples() {
        let k2 = export_dot(&Graph::complete(2), None, None);
        assert_eq!(
            k2,
            "graph G {\n  0 [label=\"0\"];\n  1 [label=\"1\"];\n  0 -- 1;\n}\n"
        );
        let q = gadget_q(1).unwrap();
        let dot = export_dot(&q.graph, Some(&q.roles), q.canonical_coloring.as_ref());
        let fills: HashSet<&str> = dot
            .lines()
            .filter_map(|l| l.split("fillcolor=").nth(1))
            .collect();
        assert_eq!(fills.len(), 3);
        assert_eq!(dot.matches("label=").count(), 4);
        assert!(dot.contains("gadget-c 0"));
    }
}
