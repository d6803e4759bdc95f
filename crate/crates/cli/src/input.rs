use std::path::Path;

use svcfc_core::io::{parse_dimacs_graph, parse_edge_list, parse_labeled_graph};
use svcfc_core::{Graph, LabeledGraph};

use crate::outcome::Failure;

pub fn read_text(path: &Path) -> Result<String, Failure> {
    if path == Path::new("-") {
        return std::io::read_to_string(std::io::stdin())
            .map_err(|e| Failure::input(format!("stdin: {e}")));
    }
    std::fs::read_to_string(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn with_path(path: &Path, e: svcfc_core::Error) -> Failure {
    let mut f = Failure::from(e);
    f.message = format!("{}: {}", path.display(), f.message);
    f
}

fn is_dimacs(text: &str) -> bool {
    text.lines().any(|l| l.trim_start().starts_with("p "))
}

/// DIMACS when a `p` line is present, otherwise a 0-based edge list.
pub fn read_graph(path: &Path) -> Result<Graph, Failure> {
    let text = read_text(path)?;
    let parsed = if is_dimacs(&text) {
        parse_dimacs_graph(&text)
    } else {
        parse_edge_list(&text)
    };
    parsed.map_err(|e| with_path(path, e))
}

/// A labeled document when it carries role lines, else a plain graph.
pub fn read_maybe_labeled(path: &Path) -> Result<(Graph, Option<LabeledGraph>), Failure> {
    let text = read_text(path)?;
    if text.lines().any(|l| l.trim_start().starts_with("c role ")) {
        let lg = parse_labeled_graph(&text).map_err(|e| with_path(path, e))?;
        return Ok((lg.graph.clone(), Some(lg)));
    }
    let parsed = if is_dimacs(&text) {
        parse_dimacs_graph(&text)
    } else {
        parse_edge_list(&text)
    };
    Ok((parsed.map_err(|e| with_path(path, e))?, None))
}

pub fn read_labeled(path: &Path) -> Result<LabeledGraph, Failure> {
    parse_labeled_graph(&read_text(path)?).map_err(|e| with_path(path, e))
}

pub fn read_cnf(path: &Path) -> Result<svcfc_core::CnfFormula, Failure> {
    svcfc_core::io::parse_dimacs_cnf(&read_text(path)?).map_err(|e| with_path(path, e))
}

pub fn read_coloring(path: &Path) -> Result<svcfc_core::io::ColoringDocument, Failure> {
    svcfc_core::io::parse_coloring(&read_text(path)?).map_err(|e| with_path(path, e))
}

pub fn write_text(path: &Path, text: &str) -> Result<(), Failure> {
    std::fs::write(path, text).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}
