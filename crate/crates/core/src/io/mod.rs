//! Text formats: DIMACS graphs and CNFs, plain edge lists, coloring
//! documents, labeled-graph documents and DOT export.
//!
//! DIMACS vertex and variable ids are 1-based on the wire and 0-based in
//! memory. Every parse error carries the offending line number.

mod coloring;
mod dimacs;
mod dot;
mod labeled;

pub use coloring::{parse_coloring, write_coloring, ChecksumStatus, ColoringDocument};
pub use dimacs::{
    parse_dimacs_cnf, parse_dimacs_graph, parse_edge_list, write_dimacs_cnf, write_dimacs_graph,
    write_edge_list,
};
pub use dot::export_dot;
pub use labeled::{parse_labeled_graph, write_labeled_graph};

use std::str::FromStr;

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest vertex count a parser will allocate for.
pub const MAX_PARSE_VERTICES: usize = 1 << 20;

pub(crate) fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

pub(crate) fn number<T: FromStr>(token: Option<&str>, line: usize, what: &str) -> Result<T> {
    let token = token.ok_or_else(|| parse_error(line, format!("missing {what}")))?;
    token
        .parse()
        .map_err(|_| parse_error(line, format!("bad {what} {token:?}")))
}

pub(crate) fn no_trailing<'a>(
    mut tokens: impl Iterator<Item = &'a str>,
    line: usize,
) -> Result<()> {
    match tokens.next() {
        Some(t) => Err(parse_error(
            line,
            format!("unexpected trailing token {t:?}"),
        )),
        None => Ok(()),
    }
}

pub(crate) fn check_vertex_count(n: usize, line: usize) -> Result<()> {
    if n > MAX_PARSE_VERTICES {
        return Err(parse_error(
            line,
            format!("{n} vertices exceeds parser cap {MAX_PARSE_VERTICES}"),
        ));
    }
    Ok(())
}

/// SHA-256 of the graph's canonical DIMACS text, as lowercase hex.
pub fn graph_checksum(g: &Graph) -> String {
    let digest = Sha256::digest(write_dimacs_graph(g).as_bytes());
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn checksum_depends_on_edges_only() {
        let a = graph_checksum(&Graph::path(4));
        assert_eq!(a.len(), 64);
        assert_eq!(
            a,
            graph_checksum(&Graph::from_edges(4, [(2, 3), (1, 0), (1, 2)]).unwrap())
        );
        assert_ne!(a, graph_checksum(&Graph::cycle(4)));
    }
}
