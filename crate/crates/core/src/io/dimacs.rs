use std::fmt::Write;

use super::{check_vertex_count, no_trailing, number, parse_error};
use crate::constructions::cnf::normalize_clause;
use crate::constructions::{CnfFormula, Lit};
use crate::error::Result;
use crate::graph::Graph;

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('c'))
}

/// Parses `p edge <n> <m>` followed by `e <u> <v>` lines (1-based ids).
/// Duplicate edges collapse; the declared `m` is not enforced.
pub fn parse_dimacs_graph(text: &str) -> Result<Graph> {
    let mut n = None;
    let mut edges = Vec::new();
    for (line, content) in content_lines(text) {
        let mut tokens = content.split_whitespace();
        match tokens.next() {
            Some("p") => {
                if n.is_some() {
                    return Err(parse_error(line, "second problem line"));
                }
                if tokens.next() != Some("edge") {
                    return Err(parse_error(line, "expected header \"p edge <n> <m>\""));
                }
                let count: usize = number(tokens.next(), line, "vertex count")?;
                number::<usize>(tokens.next(), line, "edge count")?;
                no_trailing(tokens, line)?;
                check_vertex_count(count, line)?;
                n = Some(count);
            }
            Some("e") => {
                let n = n.ok_or_else(|| parse_error(line, "edge before \"p edge\" header"))?;
                let u: usize = number(tokens.next(), line, "endpoint")?;
                let v: usize = number(tokens.next(), line, "endpoint")?;
                no_trailing(tokens, line)?;
                for x in [u, v] {
                    if x == 0 || x > n {
                        return Err(parse_error(
                            line,
                            format!("endpoint {x} outside 1..={n} (DIMACS ids are 1-based)"),
                        ));
                    }
                }
                if u == v {
                    return Err(parse_error(line, format!("self-loop on vertex {u}")));
                }
                edges.push((u - 1, v - 1));
            }
            Some(t) => return Err(parse_error(line, format!("unknown line type {t:?}"))),
            None => unreachable!("blank lines are skipped"),
        }
    }
    let n = n.ok_or_else(|| parse_error(0, "missing \"p edge <n> <m>\" header"))?;
    Graph::from_edges(n, edges).map_err(|e| parse_error(0, e.to_string()))
}

pub fn write_dimacs_graph(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    out
}

/// Parses whitespace-separated 0-based vertex pairs, one per line. `#`
/// starts a comment. The vertex count is the largest id plus one.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut edges = Vec::new();
    let mut n = 0;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let mut tokens = content.split_whitespace();
        let u: usize = number(tokens.next(), line, "vertex")?;
        let v: usize = number(tokens.next(), line, "vertex")?;
        no_trailing(tokens, line)?;
        if u == v {
            return Err(parse_error(line, format!("self-loop on vertex {u}")));
        }
        n = n.max(u.max(v).saturating_add(1));
        check_vertex_count(n, line)?;
        edges.push((u, v));
    }
    if edges.is_empty() {
        return Err(parse_error(0, "edge list has no edges"));
    }
    Graph::from_edges(n, edges).map_err(|e| parse_error(0, e.to_string()))
}

/// One `u v` line per edge. Isolated vertices above the largest endpoint
/// are not representable.
pub fn write_edge_list(g: &Graph) -> String {
    g.edges().map(|(u, v)| format!("{u} {v}\n")).collect()
}

/// Parses `p cnf <n> <m>` and `m` zero-terminated clauses. A `%` line ends
/// the input.
pub fn parse_dimacs_cnf(text: &str) -> Result<CnfFormula> {
    let mut header: Option<(usize, usize)> = None;
    let mut clauses = Vec::new();
    let mut current: Vec<Lit> = Vec::new();
    let mut last_line = 0;
    for (line, content) in content_lines(text) {
        last_line = line;
        if content.starts_with('%') {
            break;
        }
        if let Some(rest) = content.strip_prefix('p') {
            if header.is_some() {
                return Err(parse_error(line, "second problem line"));
            }
            let mut tokens = rest.split_whitespace();
            if tokens.next() != Some("cnf") {
                return Err(parse_error(line, "expected header \"p cnf <n> <m>\""));
            }
            let n: usize = number(tokens.next(), line, "variable count")?;
            let m: usize = number(tokens.next(), line, "clause count")?;
            no_trailing(tokens, line)?;
            check_vertex_count(n, line)?;
            header = Some((n, m));
            continue;
        }
        let (n, _) = header.ok_or_else(|| parse_error(line, "clause before \"p cnf\" header"))?;
        for token in content.split_whitespace() {
            let x: i32 = number(Some(token), line, "literal")?;
            if x == 0 {
                let clause = normalize_clause(n, std::mem::take(&mut current)).map_err(|why| {
                    parse_error(line, format!("clause {}: {why}", clauses.len() + 1))
                })?;
                clauses.push(clause);
                continue;
            }
            if x.unsigned_abs() as usize > n {
                return Err(parse_error(
                    line,
                    format!("literal {x} outside variables 1..={n}"),
                ));
            }
            current.push(Lit::from_dimacs(x).expect("nonzero"));
        }
    }
    let (n, m) = header.ok_or_else(|| parse_error(0, "missing \"p cnf <n> <m>\" header"))?;
    if !current.is_empty() {
        return Err(parse_error(last_line, "last clause is not terminated by 0"));
    }
    if clauses.len() != m {
        return Err(parse_error(
            0,
            format!("header declares {m} clauses, found {}", clauses.len()),
        ));
    }
    CnfFormula::new(n, clauses).map_err(|e| parse_error(0, e.to_string()))
}

pub fn write_dimacs_cnf(phi: &CnfFormula) -> String {
    let mut out = format!("p cnf {} {}\n", phi.num_vars(), phi.clauses().len());
    for clause in phi.clauses() {
        for l in clause {
            let _ = write!(out, "{} ", l.to_dimacs());
        }
        out.push_str("0\n");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    fn line_of(e: Error) -> usize {
        match e {
            Error::Parse { line, .. } => line,
            other => panic!("expected parse error, got {other}"),
        }
    }

    #[test]
    fn dimacs_graph_examples() {
        let k2 = parse_dimacs_graph("c tiny\np edge 2 1\ne 1 2\n").unwrap();
        assert_eq!(k2, Graph::complete(2));
        assert_eq!(
            line_of(parse_dimacs_graph("p edge 2 1\ne 1 1\n").unwrap_err()),
            2
        );
        let dup = parse_dimacs_graph("p edge 3 2\ne 1 2\ne 2 1\ne 1 2\n").unwrap();
        assert_eq!(dup.m(), 1);
        assert_eq!(
            line_of(parse_dimacs_graph("p edge 2 1\ne 0 1\n").unwrap_err()),
            2
        );
        assert_eq!(line_of(parse_dimacs_graph("p edges 2 1\n").unwrap_err()), 1);
        assert_eq!(line_of(parse_dimacs_graph("e 1 2\n").unwrap_err()), 1);
        assert_eq!(line_of(parse_dimacs_graph("").unwrap_err()), 0);
        let big = format!("p edge {} 0\n", MAX + 1);
        assert!(parse_dimacs_graph(&big).is_err());
        let p = Graph::petersen();
        assert_eq!(parse_dimacs_graph(&write_dimacs_graph(&p)).unwrap(), p);
    }

    const MAX: usize = super::super::MAX_PARSE_VERTICES;

    #[test]
    fn edge_list_examples() {
        assert_eq!(parse_edge_list("0 1\n1 2").unwrap(), Graph::path(3));
        assert!(parse_edge_list("").is_err());
        assert!(parse_edge_list("# nothing\n").is_err());
        assert_eq!(line_of(parse_edge_list("0 1\n0 0").unwrap_err()), 2);
        assert_eq!(line_of(parse_edge_list("0 1 2").unwrap_err()), 1);
        let c = Graph::cycle(5);
        assert_eq!(parse_edge_list(&write_edge_list(&c)).unwrap(), c);
    }

    #[test]
    fn cnf_examples() {
        let unit = parse_dimacs_cnf("p cnf 1 1\n1 0\n").unwrap();
        assert_eq!(unit, CnfFormula::from_dimacs(1, &[&[1]]).unwrap());
        assert_eq!(
            line_of(parse_dimacs_cnf("p cnf 1 1\n1 -1 0\n").unwrap_err()),
            2
        );
        assert!(parse_dimacs_cnf("p cnf 4 1\n1 2 3 4 0\n").is_err());
        let text = "c example\np cnf 3 4\n-1 2 3 0\n1 -2 3 0\n1 2 -3 0\n-1 -2\n-3 0\n";
        let phi = parse_dimacs_cnf(text).unwrap();
        assert_eq!(phi.clauses().len(), 4);
        assert_eq!(parse_dimacs_cnf(&write_dimacs_cnf(&phi)).unwrap(), phi);
        assert!(parse_dimacs_cnf("p cnf 2 1\n1 2\n").is_err());
        assert!(parse_dimacs_cnf("p cnf 2 2\n1 2 0\n").is_err());
        assert!(parse_dimacs_cnf("p cnf 2 1\n1 3 0\n").is_err());
        assert_eq!(
            parse_dimacs_cnf("p cnf 2 1\n1 2 0\n%\n0\n")
                .unwrap()
                .clauses()
                .len(),
            1
        );
    }
}
