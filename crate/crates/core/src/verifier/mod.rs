//! Polynomial-time verification of strong conflict-free vertex-connection
//! colorings.
//!
//! For a pair `u, v` the search runs on the level graph `L[u, v]`, whose
//! monotone paths are exactly the shortest `u, v`-paths. A color `c` can be
//! the unique color of such a path carried by a designated vertex `x` iff a
//! monotone path survives after deleting every other `c`-colored vertex and,
//! when `x` is internal, every other vertex of `x`'s layer. Endpoint colors
//! are tried first, then internal colors in increasing order, layer by layer.

mod level;

use fixedbitset::FixedBitSet;
use serde::Serialize;

pub use level::LevelGraph;

use crate::error::{Error, Result};
use crate::graph::{Coloring, Graph};

/// A shortest path together with a color occurring exactly once on it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CfPath {
    pub path: Vec<usize>,
    pub color: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Failure {
    /// `failing_pair` is a monochromatic edge.
    Improper,
    /// No shortest path between `failing_pair` has a unique color.
    NoConflictFreePath,
}

/// Outcome of [`verify_svcfc`]. `strong` holds iff `failing_pair` is absent.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub strong: bool,
    pub failing_pair: Option<(usize, usize)>,
    pub failure: Option<Failure>,
}

impl Verdict {
    fn strong() -> Self {
        Verdict {
            strong: true,
            failing_pair: None,
            failure: None,
        }
    }

    fn failed(pair: (usize, usize), failure: Failure) -> Self {
        Verdict {
            strong: false,
            failing_pair: Some(pair),
            failure: Some(failure),
        }
    }
}

/// How a removal set is tested for a surviving path.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Connectivity {
    /// A layer-increasing path survives (exactly a shortest path).
    #[default]
    Monotone,
    /// Source and target stay in one undirected component of the level graph.
    Undirected,
}

/// Runs the color/removal-set search on one level graph. `color_of` maps
/// local ids to colors. Returns the local id carrying the unique color, the
/// color, and the removal predicate's survivors as a path when asked.
fn search(
    lg: &LevelGraph,
    color_of: &dyn Fn(usize) -> usize,
    mode: Connectivity,
    want_path: bool,
) -> Option<(Option<Vec<usize>>, usize)> {
    let last = lg.len() - 1;
    let (cu, cv) = (color_of(0), color_of(last));
    let survives = |removed: &dyn Fn(usize) -> bool| -> Option<Option<Vec<usize>>> {
        match mode {
            Connectivity::Monotone if want_path => lg.path_local(removed).map(Some),
            Connectivity::Monotone => lg.reach_local(removed).then_some(None),
            Connectivity::Undirected => {
                let mut set =
                    FixedBitSet::with_capacity(lg.vertices().iter().max().map_or(0, |m| m + 1));
                for i in 1..last {
                    if removed(i) {
                        set.insert(lg.global(i));
                    }
                }
                lg.undirected_connected(&set)
                    .then(|| want_path.then(|| lg.path_local(removed)).flatten())
            }
        }
    };

    if cu != cv {
        for (c, keep) in [(cu, 0), (cv, last)] {
            if let Some(path) = survives(&|i| i != keep && color_of(i) == c) {
                return Some((path, c));
            }
        }
    }
    let max_color = (0..lg.len()).map(color_of).max().unwrap_or(0);
    for c in (1..=max_color).filter(|&c| c != cu && c != cv) {
        for level in 1..lg.distance() {
            let range = lg.local_level_range(level);
            for x in range.clone().filter(|&x| color_of(x) == c) {
                let range = range.clone();
                if let Some(path) =
                    survives(&|i| i != x && (color_of(i) == c || range.contains(&i)))
                {
                    return Some((path, c));
                }
            }
        }
    }
    None
}

fn check_pair(g: &Graph, f: &Coloring, u: usize, v: usize) -> Result<()> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if let Some((a, b)) = f.first_conflict(g)? {
        return Err(Error::NotProper(a, b));
    }
    Ok(())
}

/// A shortest `u, v`-path with a uniquely occurring color, if one exists.
///
/// Pairs at distance at most two always succeed under a proper coloring and
/// are answered without building the level graph.
pub fn has_strong_cf_path(g: &Graph, f: &Coloring, u: usize, v: usize) -> Result<Option<CfPath>> {
    check_pair(g, f, u, v)?;
    let colors = f.colors();
    if u == v {
        return Ok(Some(CfPath {
            path: vec![u],
            color: colors[u],
        }));
    }
    if g.has_edge(u, v) {
        return Ok(Some(CfPath {
            path: vec![u, v],
            color: colors[u],
        }));
    }
    if let Some(w) = g.neighbor_set(u).intersection(g.neighbor_set(v)).next() {
        let color = if colors[u] != colors[v] {
            colors[u]
        } else {
            colors[w]
        };
        return Ok(Some(CfPath {
            path: vec![u, w, v],
            color,
        }));
    }
    let lg = LevelGraph::build(g, u, v)?;
    Ok(
        search(&lg, &|i| colors[lg.global(i)], Connectivity::Monotone, true).map(
            |(path, color)| CfPath {
                path: path.expect("path requested"),
                color,
            },
        ),
    )
}

/// Same decision as [`has_strong_cf_path`] under a chosen connectivity test,
/// always running the level-graph search (no distance shortcut).
pub fn has_strong_cf_path_with(
    g: &Graph,
    f: &Coloring,
    u: usize,
    v: usize,
    mode: Connectivity,
) -> Result<bool> {
    check_pair(g, f, u, v)?;
    if u == v {
        return Ok(true);
    }
    let lg = LevelGraph::build(g, u, v)?;
    let colors = f.colors();
    Ok(search(&lg, &|i| colors[lg.global(i)], mode, false).is_some())
}

/// True iff some color occurs exactly once along `path`.
pub fn is_conflict_free_path(f: &Coloring, path: &[usize]) -> bool {
    let mut count = vec![0u32; f.k() + 1];
    for &x in path {
        count[f.color(x)] += 1;
    }
    count.contains(&1)
}

/// Every shortest `u, v`-path, depth first over the level graph in
/// ascending vertex order. Errors once more than `cap` paths exist.
pub fn enumerate_shortest_paths(
    g: &Graph,
    u: usize,
    v: usize,
    cap: usize,
) -> Result<Vec<Vec<usize>>> {
    LevelGraph::build(g, u, v)?.all_paths(cap)
}

/// Decides whether `f` is a strong conflict-free vertex-connection coloring
/// of the connected graph `g`. Failing pairs are reported in lexicographic
/// order, monochromatic edges first.
pub fn verify_svcfc(g: &Graph, f: &Coloring) -> Result<Verdict> {
    if let Some(edge) = f.first_conflict(g)? {
        return Ok(Verdict::failed(edge, Failure::Improper));
    }
    let checker = SvcfcChecker::new(g)?;
    Ok(match checker.first_failure(f.colors()) {
        Some(pair) => Verdict::failed(pair, Failure::NoConflictFreePath),
        None => Verdict::strong(),
    })
}

struct FarPair {
    u: usize,
    v: usize,
    lg: LevelGraph,
}

/// Level graphs of every pair at distance at least three, prepared once so
/// that many colorings of the same graph can be checked cheaply.
pub struct SvcfcChecker {
    n: usize,
    far: Vec<FarPair>,
}

impl SvcfcChecker {
    pub fn new(g: &Graph) -> Result<Self> {
        g.require_connected()?;
        let dist = g.distance_matrix();
        let mut far = Vec::new();
        for u in 0..g.n() {
            for v in u + 1..g.n() {
                if dist[u][v] >= 3 {
                    let lg = LevelGraph::from_distances(g, u, v, &dist[u], &dist[v]);
                    far.push(FarPair { u, v, lg });
                }
            }
        }
        Ok(SvcfcChecker { n: g.n(), far })
    }

    /// Number of pairs at distance at least three.
    pub fn far_pairs(&self) -> usize {
        self.far.len()
    }

    fn pair_ok(&self, p: &FarPair, colors: &[usize]) -> bool {
        search(
            &p.lg,
            &|i| colors[p.lg.global(i)],
            Connectivity::Monotone,
            false,
        )
        .is_some()
    }

    /// First far pair (lexicographic) without a conflict-free shortest path.
    /// `colors` must be a proper coloring.
    pub fn first_failure(&self, colors: &[usize]) -> Option<(usize, usize)> {
        debug_assert_eq!(colors.len(), self.n);
        self.far
            .iter()
            .find(|p| !self.pair_ok(p, colors))
            .map(|p| (p.u, p.v))
    }

    pub fn is_strong(&self, colors: &[usize]) -> bool {
        self.first_failure(colors).is_none()
    }

    /// Groups far pairs by the largest vertex id in their level graph: once
    /// vertices `0..=w` are colored, every pair in group `w` is decided.
    pub(crate) fn pairs_decided_at(&self) -> Vec<Vec<usize>> {
        let mut groups = vec![Vec::new(); self.n];
        for (i, p) in self.far.iter().enumerate() {
            let top = *p.lg.vertices().iter().max().expect("non-empty level graph");
            groups[top].push(i);
        }
        groups
    }

    pub(crate) fn pair_holds(&self, index: usize, colors: &[usize]) -> bool {
        self.pair_ok(&self.far[index], colors)
    }
}
