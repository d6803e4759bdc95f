use serde::Serialize;

use super::Graph;
use crate::error::{Error, Result};

/// Total assignment of colors `1..=k` to the vertices of a graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Coloring {
    k: usize,
    colors: Vec<usize>,
}

impl Coloring {
    /// Checks that `k >= 1` and every entry lies in `1..=k`.
    pub fn new(k: usize, colors: Vec<usize>) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidColoring("k must be at least 1".into()));
        }
        if let Some((v, &c)) = colors.iter().enumerate().find(|(_, &c)| c == 0 || c > k) {
            return Err(Error::InvalidColoring(format!(
                "vertex {v} has color {c} outside 1..={k}"
            )));
        }
        Ok(Coloring { k, colors })
    }

    /// Coloring whose `k` is the largest color used.
    pub fn from_colors(colors: Vec<usize>) -> Result<Self> {
        let k = colors.iter().copied().max().unwrap_or(1);
        Self::new(k, colors)
    }

    #[inline]
    pub fn k(&self) -> usize {
        self.k
    }

    #[inline]
    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    #[inline]
    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Number of distinct colors actually used.
    pub fn distinct_colors(&self) -> usize {
        let mut seen = vec![false; self.k + 1];
        self.colors
            .iter()
            .filter(|&&c| !std::mem::replace(&mut seen[c], true))
            .count()
    }

    /// Relabels colors in order of first appearance (vertex 0 gets color 1).
    pub fn canonical(&self) -> Coloring {
        let mut map = vec![0; self.k + 1];
        let mut next = 0;
        let colors = self
            .colors
            .iter()
            .map(|&c| {
                if map[c] == 0 {
                    next += 1;
                    map[c] = next;
                }
                map[c]
            })
            .collect();
        Coloring {
            k: next.max(1),
            colors,
        }
    }

    pub(crate) fn check_len(&self, g: &Graph) -> Result<()> {
        if self.colors.len() == g.n() {
            Ok(())
        } else {
            Err(Error::ColoringLength {
                expected: g.n(),
                got: self.colors.len(),
            })
        }
    }

    /// First monochromatic edge in lexicographic order, if any.
    pub fn first_conflict(&self, g: &Graph) -> Result<Option<(usize, usize)>> {
        self.check_len(g)?;
        Ok(g.edges().find(|&(u, v)| self.colors[u] == self.colors[v]))
    }
}

impl Graph {
    /// True iff no edge is monochromatic under `f`.
    pub fn is_proper(&self, f: &Coloring) -> Result<bool> {
        Ok(f.first_conflict(self)?.is_none())
    }
}
