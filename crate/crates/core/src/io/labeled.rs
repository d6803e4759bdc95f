use std::fmt::Write;

use super::{number, parse_dimacs_graph, parse_error, write_dimacs_graph};
use crate::constructions::{LabeledGraph, Role};
use crate::error::Result;
use crate::graph::Coloring;
use crate::verifier::verify_svcfc;

/// DIMACS graph text with structured comments: `c role <v> <tag>` per
/// vertex (1-based), `c meta <note>` per note, and `c canonical <k> <colors>`
/// for the canonical coloring.
pub fn write_labeled_graph(lg: &LabeledGraph) -> String {
    let dimacs = write_dimacs_graph(&lg.graph);
    let (header, edges) = dimacs.split_once('\n').unwrap_or((&dimacs, ""));
    let mut out = format!("{header}\n");
    for (v, role) in lg.roles.iter().enumerate() {
        let _ = writeln!(out, "c role {} {role}", v + 1);
    }
    for note in &lg.notes {
        let _ = writeln!(out, "c meta {note}");
    }
    if let Some(f) = &lg.canonical_coloring {
        let values: Vec<String> = f.colors().iter().map(usize::to_string).collect();
        let _ = writeln!(out, "c canonical {} {}", f.k(), values.join(" "));
    }
    out.push_str(edges);
    out
}

/// Inverse of [`write_labeled_graph`]. Every vertex needs exactly one role
/// and a canonical coloring, if given, must verify strong.
pub fn parse_labeled_graph(text: &str) -> Result<LabeledGraph> {
    let graph = parse_dimacs_graph(text)?;
    let n = graph.n();
    let mut roles: Vec<Option<Role>> = vec![None; n];
    let mut notes = Vec::new();
    let mut canonical = None;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.trim();
        if let Some(rest) = content.strip_prefix("c role ") {
            let (id, tag) = rest
                .trim()
                .split_once(' ')
                .ok_or_else(|| parse_error(line, "expected \"c role <v> <tag>\""))?;
            let v: usize = number(Some(id), line, "vertex")?;
            if v == 0 || v > n {
                return Err(parse_error(
                    line,
                    format!("vertex {v} outside 1..={n} (ids are 1-based)"),
                ));
            }
            let role: Role = tag
                .trim()
                .parse()
                .map_err(|e: String| parse_error(line, e))?;
            if roles[v - 1].replace(role).is_some() {
                return Err(parse_error(line, format!("vertex {v} has two roles")));
            }
        } else if let Some(rest) = content.strip_prefix("c meta ") {
            notes.push(rest.trim().to_string());
        } else if let Some(rest) = content.strip_prefix("c canonical ") {
            if canonical.is_some() {
                return Err(parse_error(line, "second canonical coloring"));
            }
            let mut tokens = rest.split_whitespace();
            let k: usize = number(tokens.next(), line, "color count")?;
            let colors = tokens
                .map(|t| number(Some(t), line, "color"))
                .collect::<Result<Vec<usize>>>()?;
            if colors.len() != n {
                return Err(parse_error(
                    line,
                    format!(
                        "canonical coloring has {} values for {n} vertices",
                        colors.len()
                    ),
                ));
            }
            let f = Coloring::new(k, colors).map_err(|e| parse_error(line, e.to_string()))?;
            let strong = verify_svcfc(&graph, &f).map(|v| v.strong).unwrap_or(false);
            if !strong {
                return Err(parse_error(
                    line,
                    "canonical coloring is not strong conflict-free",
                ));
            }
            canonical = Some(f);
        }
    }
    let roles = roles
        .into_iter()
        .enumerate()
        .map(|(v, r)| r.ok_or_else(|| parse_error(0, format!("vertex {} has no role", v + 1))))
        .collect::<Result<Vec<_>>>()?;
    let lg = LabeledGraph {
        graph,
        roles,
        canonical_coloring: canonical,
        notes,
    };
    if !lg.labels_are_consistent() {
        return Err(parse_error(0, "a role is used by two vertices"));
    }
    Ok(lg)
}
