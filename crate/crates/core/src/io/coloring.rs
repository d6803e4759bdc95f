use std::fmt::Write;

use super::{graph_checksum, no_trailing, number, parse_error};
use crate::error::{Error, Result};
use crate::graph::{Coloring, Graph};

/// A parsed coloring with the checksum of the graph it was written for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoringDocument {
    pub coloring: Coloring,
    pub checksum: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChecksumStatus {
    Absent,
    Match,
    Mismatch,
}

impl ColoringDocument {
    /// Length must match; a checksum mismatch is only reported.
    pub fn check_against(&self, g: &Graph) -> Result<ChecksumStatus> {
        self.coloring.check_len(g)?;
        Ok(match &self.checksum {
            None => ChecksumStatus::Absent,
            Some(c) if *c == graph_checksum(g) => ChecksumStatus::Match,
            Some(_) => ChecksumStatus::Mismatch,
        })
    }
}

/// Writes `p coloring <n> <k>`, an optional `g <checksum>` line and the
/// colors on `v` lines of at most 20 values.
pub fn write_coloring(f: &Coloring, g: Option<&Graph>) -> String {
    let mut out = format!("p coloring {} {}\n", f.len(), f.k());
    if let Some(g) = g {
        let _ = writeln!(out, "g {}", graph_checksum(g));
    }
    for chunk in f.colors().chunks(20) {
        let values: Vec<String> = chunk.iter().map(usize::to_string).collect();
        let _ = writeln!(out, "v {}", values.join(" "));
    }
    out
}

pub fn parse_coloring(text: &str) -> Result<ColoringDocument> {
    let mut header: Option<(usize, usize)> = None;
    let mut checksum = None;
    let mut colors = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.trim();
        if content.is_empty() || content.starts_with('c') {
            continue;
        }
        let mut tokens = content.split_whitespace();
        let kind = tokens.next().unwrap_or_default();
        if kind == "p" {
            if header.is_some() {
                return Err(parse_error(line, "second problem line"));
            }
            if tokens.next() != Some("coloring") {
                return Err(parse_error(line, "expected header \"p coloring <n> <k>\""));
            }
            let n: usize = number(tokens.next(), line, "vertex count")?;
            let k: usize = number(tokens.next(), line, "color count")?;
            no_trailing(tokens, line)?;
            super::check_vertex_count(n, line)?;
            header = Some((n, k));
            continue;
        }
        let (n, k) =
            header.ok_or_else(|| parse_error(line, "content before \"p coloring\" header"))?;
        match kind {
            "g" => {
                if checksum.is_some() {
                    return Err(parse_error(line, "second checksum line"));
                }
                let sum: String = number(tokens.next(), line, "checksum")?;
                no_trailing(tokens, line)?;
                checksum = Some(sum);
            }
            "v" => {
                for token in tokens {
                    let c: usize = number(Some(token), line, "color")?;
                    if c == 0 || c > k {
                        return Err(parse_error(line, format!("color {c} outside 1..={k}")));
                    }
                    if colors.len() == n {
                        return Err(parse_error(line, format!("more than {n} colors")));
                    }
                    colors.push(c);
                }
            }
            other => return Err(parse_error(line, format!("unknown line type {other:?}"))),
        }
    }
    let (n, k) = header.ok_or_else(|| parse_error(0, "missing \"p coloring <n> <k>\" header"))?;
    if colors.len() != n {
        return Err(parse_error(
            0,
            format!(
                "header declares {n} vertices, found {} colors",
                colors.len()
            ),
        ));
    }
    let coloring = Coloring::new(k, colors).map_err(|e: Error| parse_error(0, e.to_string()))?;
    Ok(ColoringDocument { coloring, checksum })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_and_checksum() {
        let g = Graph::path(25);
        let colors: Vec<usize> = (0..25).map(|i| 1 + i % 2).collect();
        let f = Coloring::new(3, colors).unwrap();
        let doc = parse_coloring(&write_coloring(&f, Some(&g))).unwrap();
        assert_eq!(doc.coloring, f);
        assert_eq!(doc.check_against(&g), Ok(ChecksumStatus::Match));
        assert_eq!(
            doc.check_against(&Graph::cycle(25)),
            Ok(ChecksumStatus::Mismatch)
        );
        assert!(doc.check_against(&Graph::path(4)).is_err());
        let bare = parse_coloring(&write_coloring(&f, None)).unwrap();
        assert_eq!(bare.check_against(&g), Ok(ChecksumStatus::Absent));
    }

    #[test]
    fn rejects_bad_documents() {
        assert!(parse_coloring("p coloring 2 1\nv 1 2\n").is_err());
        assert!(parse_coloring("p coloring 3 2\nv 1 2\n").is_err());
        assert!(parse_coloring("p coloring 1 2\nv 1 2\n").is_err());
        assert!(parse_coloring("v 1\n").is_err());
        assert!(parse_coloring("p coloring 1 1\nx 1\n").is_err());
    }
}
