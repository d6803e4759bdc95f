//! Exact backtracking searches for small graphs: chromatic number, clique
//! number, and the enumeration of proper colorings shared with the exact
//! svcfc solver.

use fixedbitset::FixedBitSet;

use super::{Coloring, Graph};
use crate::error::{Error, Result};

/// Vertex cap for the exact chromatic and clique searches.
pub const DEFAULT_EXACT_CAP: usize = 24;

/// Receives events from [`proper_colorings`].
pub(crate) trait ColoringVisitor {
    /// Vertex `v` just got `colors[v]`; vertices `0..=v` are colored.
    /// Returning false prunes every completion of the current prefix.
    fn assigned(&mut self, _v: usize, _colors: &[usize]) -> bool {
        true
    }

    /// A complete proper coloring. Returning true stops the search.
    fn complete(&mut self, colors: &[usize]) -> bool;
}

/// Enumerates proper colorings with colors in `1..=k` in canonical order:
/// vertices are colored by increasing index, vertex 0 gets color 1, and a
/// color `j` is only offered once `1..j` have appeared. Every proper
/// coloring is reached exactly once up to renaming of colors.
///
/// Returns true if the visitor stopped the search.
pub(crate) fn proper_colorings<V: ColoringVisitor>(g: &Graph, k: usize, visitor: &mut V) -> bool {
    let n = g.n();
    if n == 0 {
        return visitor.complete(&[]);
    }
    if k == 0 {
        return false;
    }
    let mut colors = vec![0usize; n];
    descend(g, k, 0, 0, &mut colors, visitor)
}

fn descend<V: ColoringVisitor>(
    g: &Graph,
    k: usize,
    v: usize,
    used: usize,
    colors: &mut [usize],
    visitor: &mut V,
) -> bool {
    if v == colors.len() {
        return visitor.complete(colors);
    }
    let limit = k.min(used + 1);
    for c in 1..=limit {
        if g.neighbors(v).iter().any(|&w| w < v && colors[w] == c) {
            continue;
        }
        colors[v] = c;
        if visitor.assigned(v, colors) && descend(g, k, v + 1, used.max(c), colors, visitor) {
            return true;
        }
    }
    colors[v] = 0;
    false
}

struct FirstColoring(Option<Vec<usize>>);

impl ColoringVisitor for FirstColoring {
    fn complete(&mut self, colors: &[usize]) -> bool {
        self.0 = Some(colors.to_vec());
        true
    }
}

fn check_cap(what: &'static str, g: &Graph, cap: usize) -> Result<()> {
    if g.n() > cap {
        Err(Error::CapExceeded {
            what,
            size: g.n(),
            cap,
        })
    } else {
        Ok(())
    }
}

impl Graph {
    /// Chromatic number with the first optimal coloring in canonical order.
    pub fn chromatic_number(&self) -> Result<(usize, Coloring)> {
        self.chromatic_number_with_cap(DEFAULT_EXACT_CAP)
    }

    pub fn chromatic_number_with_cap(&self, cap: usize) -> Result<(usize, Coloring)> {
        check_cap("chromatic number", self, cap)?;
        if self.n() == 0 {
            return Ok((0, Coloring::new(1, Vec::new())?));
        }
        let lower = self.clique_number_with_cap(cap)?;
        for k in lower..=self.n() {
            let mut first = FirstColoring(None);
            if proper_colorings(self, k, &mut first) {
                let colors = first.0.expect("search stopped on a coloring");
                return Ok((k, Coloring::new(k, colors)?));
            }
        }
        unreachable!("every graph is n-colorable")
    }

    /// Size of a maximum clique, by branch and bound.
    pub fn clique_number(&self) -> Result<usize> {
        self.clique_number_with_cap(DEFAULT_EXACT_CAP)
    }

    pub fn clique_number_with_cap(&self, cap: usize) -> Result<usize> {
        check_cap("clique number", self, cap)?;
        let mut candidates = FixedBitSet::with_capacity(self.n());
        candidates.insert_range(..);
        let mut best = 0;
        self.grow_clique(0, candidates, &mut best);
        Ok(best)
    }

    fn grow_clique(&self, size: usize, mut candidates: FixedBitSet, best: &mut usize) {
        if size > *best {
            *best = size;
        }
        while let Some(v) = candidates.minimum() {
            if size + candidates.count_ones(..) <= *best {
                return;
            }
            candidates.set(v, false);
            let mut next = candidates.clone();
            next.intersect_with(self.neighbor_set(v));
            self.grow_clique(size + 1, next, best);
        }
    }
}
