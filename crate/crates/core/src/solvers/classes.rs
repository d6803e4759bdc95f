//! Closed-form optimal colorings for complete, complete bipartite,
//! diameter-2, split, co-bipartite graphs and paths.

use super::{require_nonempty_connected, Method, SolveResult};
use crate::error::{Error, Result};
use crate::graph::{max_bipartite_matching, Graph};

/// Complete graphs need `n` colors; the identity coloring is optimal.
pub fn solve_complete(g: &Graph) -> Result<SolveResult> {
    require_nonempty_connected(g)?;
    if !g.is_complete() {
        return Err(Error::Precondition("graph is not complete".into()));
    }
    SolveResult::new((1..=g.n()).collect(), Method::CompleteGraph)
}

/// The bipartition coloring of a complete bipartite graph.
pub fn solve_complete_bipartite(g: &Graph) -> Result<SolveResult> {
    if !g.is_complete_bipartite() {
        return Err(Error::Precondition(
            "graph is not complete bipartite".into(),
        ));
    }
    let (x, _) = g
        .bipartition()
        .expect("complete bipartite graphs are bipartite");
    let mut colors = vec![2; g.n()];
    for v in x {
        colors[v] = 1;
    }
    SolveResult::new(colors, Method::CompleteBipartite)
}

/// On diameter at most two every proper coloring qualifies, so an optimal
/// proper coloring is optimal here too.
pub fn solve_diameter2(g: &Graph) -> Result<SolveResult> {
    require_nonempty_connected(g)?;
    let d = g.diameter()?;
    if d > 2 {
        return Err(Error::Precondition(format!("diameter {d} exceeds 2")));
    }
    let (_, coloring) = g.chromatic_number()?;
    SolveResult::new(coloring.colors().to_vec(), Method::Diameter2)
}

fn is_star(g: &Graph) -> bool {
    g.n() >= 3 && g.m() == g.n() - 1 && (0..g.n()).any(|v| g.degree(v) == g.n() - 1)
}

/// Optimal coloring of a connected split graph.
///
/// Stars take their 2-coloring. With a two-vertex clique the clique gets
/// colors 1 and 2 and the independent side color 3. Otherwise, with
/// `k = |C|`, clique vertices get `1..=k` in index order and an independent
/// vertex `u` with neighbor colors `S` gets the least color outside `S` when
/// `k` is in `S`, and otherwise the least color outside `S` above `max S`.
pub fn solve_split(g: &Graph) -> Result<SolveResult> {
    require_nonempty_connected(g)?;
    let part = g
        .split_partition()
        .ok_or_else(|| Error::Precondition("graph is not split".into()))?;
    if g.is_complete() {
        return SolveResult::new((1..=g.n()).collect(), Method::Split);
    }
    if is_star(g) {
        let center = (0..g.n())
            .find(|&v| g.degree(v) == g.n() - 1)
            .expect("star has a center");
        let colors = (0..g.n())
            .map(|v| if v == center { 1 } else { 2 })
            .collect();
        return SolveResult::new(colors, Method::Split);
    }

    let mut colors = vec![0; g.n()];
    let k = part.clique.len();
    for (i, &v) in part.clique.iter().enumerate() {
        colors[v] = i + 1;
    }
    if k == 2 {
        for &u in &part.independent {
            colors[u] = 3;
        }
        return SolveResult::new(colors, Method::Split);
    }
    for &u in &part.independent {
        let mut seen = vec![false; k + 1];
        for &w in g.neighbors(u) {
            seen[colors[w]] = true;
        }
        let lowest_free = |from: usize| (from..=k).find(|&c| !seen[c]);
        let chosen = if seen[k] {
            lowest_free(1)
        } else {
            let top = (1..=k)
                .rev()
                .find(|&c| seen[c])
                .expect("connected: u has a clique neighbor");
            lowest_free(top + 1)
        };
        colors[u] = chosen.expect("u has a non-neighbor in the normalized clique");
    }
    SolveResult::new(colors, Method::Split)
}

/// Optimal coloring of a connected, non-complete co-bipartite graph with
/// clique sides `A`, `B`, `|A| >= |B|`.
///
/// With a single cross edge `xy`: if `|A| = |B|`, `x` gets the fresh color
/// `|A| + 1` and both sides are colored `1, 2, ...` in index order;
/// if `|A| > |B|`, `x` gets color 1, the rest of `A` gets `2..=|A|` and `B`
/// gets the `|B|` smallest colors of `2..=|A|`. With two or more cross
/// edges any proper coloring works, and an optimal one pairs up a maximum
/// matching of cross non-edges.
pub fn solve_cobipartite(g: &Graph) -> Result<SolveResult> {
    require_nonempty_connected(g)?;
    let part = g
        .cobipartite_partition()
        .ok_or_else(|| Error::Precondition("graph is not co-bipartite".into()))?;
    if part.complete {
        return Err(Error::CompleteGraph);
    }
    let (a, b) = (&part.a, &part.b);
    let mut colors = vec![0; g.n()];

    if let [(x, _)] = part.cross_edges[..] {
        let rest = a.iter().filter(|&&v| v != x);
        if a.len() == b.len() {
            colors[x] = a.len() + 1;
            for (i, &v) in rest.enumerate() {
                colors[v] = i + 1;
            }
            for (i, &v) in b.iter().enumerate() {
                colors[v] = i + 1;
            }
        } else {
            colors[x] = 1;
            for (i, &v) in rest.enumerate() {
                colors[v] = i + 2;
            }
            for (i, &v) in b.iter().enumerate() {
                colors[v] = i + 2;
            }
        }
        return SolveResult::new(colors, Method::CoBipartite);
    }

    let non_edges: Vec<(usize, usize)> = a
        .iter()
        .flat_map(|&x| {
            b.iter()
                .filter(move |&&y| !g.has_edge(x, y))
                .map(move |&y| (x, y))
        })
        .collect();
    let mut partner = vec![usize::MAX; g.n()];
    for (x, y) in max_bipartite_matching(a, b, &non_edges) {
        partner[x] = y;
        partner[y] = x;
    }
    let mut next = 0;
    for v in 0..g.n() {
        if colors[v] == 0 {
            next += 1;
            colors[v] = next;
            if partner[v] != usize::MAX {
                colors[partner[v]] = next;
            }
        }
    }
    SolveResult::new(colors, Method::CoBipartite)
}

/// `ceil(log2(n + 1))`, the svcfc number of the path on `n` vertices.
pub fn path_svcfc_value(n: usize) -> Result<usize> {
    if n == 0 {
        return Err(Error::Precondition("path needs at least one vertex".into()));
    }
    // floor(log2 n) + 1 == ceil(log2(n + 1)) for n >= 1.
    Ok((usize::BITS - n.leading_zeros()) as usize)
}

/// Ruler coloring of a path: the vertex at 1-based position `i` along the
/// path gets one plus the number of trailing zeros of `i`. Every subpath
/// has a unique position of maximal 2-adic valuation.
pub fn solve_path(g: &Graph) -> Result<SolveResult> {
    require_nonempty_connected(g)?;
    let n = g.n();
    let not_path = || Error::Precondition("graph is not a path".into());
    if g.m() + 1 != n || (0..n).any(|v| g.degree(v) > 2) {
        return Err(not_path());
    }
    let mut order = Vec::with_capacity(n);
    let mut prev = usize::MAX;
    let mut at = (0..n).find(|&v| g.degree(v) <= 1).ok_or_else(not_path)?;
    loop {
        order.push(at);
        match g.neighbors(at).iter().find(|&&w| w != prev) {
            Some(&w) if order.len() < n => {
                prev = at;
                at = w;
            }
            _ => break,
        }
    }
    let mut colors = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        colors[v] = (i + 1).trailing_zeros() as usize + 1;
    }
    SolveResult::new(colors, Method::PathFormula)
}
