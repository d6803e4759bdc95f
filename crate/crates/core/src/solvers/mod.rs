//! Optimal svcfc colorings: exact search on small graphs and direct
//! constructions on the classes where the optimum is known in closed form.

mod classes;
mod exact;

use serde::Serialize;

pub use classes::{
    path_svcfc_value, solve_cobipartite, solve_complete, solve_complete_bipartite, solve_diameter2,
    solve_path, solve_split,
};
pub use exact::{svcfc_exact, svcfc_exact_with, ExactOptions, DEFAULT_SVCFC_CAP};

use crate::error::{Error, Result};
use crate::graph::{Coloring, Graph};

/// Which route produced a [`SolveResult`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum Method {
    Exact,
    CompleteBipartite,
    Diameter2,
    Split,
    CoBipartite,
    CompleteGraph,
    PathFormula,
}

impl Method {
    pub fn tag(self) -> &'static str {
        match self {
            Method::Exact => "exact",
            Method::CompleteBipartite => "completeBipartite",
            Method::Diameter2 => "diameter2",
            Method::Split => "split",
            Method::CoBipartite => "coBipartite",
            Method::CompleteGraph => "completeGraph",
            Method::PathFormula => "pathFormula",
        }
    }
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.tag())
    }
}

/// The svcfc number of a graph with a witness coloring using exactly `k`
/// colors.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SolveResult {
    pub k: usize,
    pub coloring: Coloring,
    pub method: Method,
}

impl SolveResult {
    fn new(colors: Vec<usize>, method: Method) -> Result<Self> {
        let coloring = Coloring::from_colors(colors)?;
        debug_assert_eq!(coloring.distinct_colors(), coloring.k());
        Ok(SolveResult {
            k: coloring.k(),
            coloring,
            method,
        })
    }
}

fn require_nonempty_connected(g: &Graph) -> Result<()> {
    if g.n() == 0 {
        return Err(Error::Precondition("graph has no vertices".into()));
    }
    g.require_connected()
}

/// Tries complete graph, complete bipartite, diameter at most two, split,
/// co-bipartite, then exact search, and finally the path formula for paths
/// beyond the exact cap. The first applicable route wins.
pub fn solve_auto(g: &Graph) -> Result<SolveResult> {
    require_nonempty_connected(g)?;
    if g.is_complete() {
        return solve_complete(g);
    }
    if g.is_complete_bipartite() {
        return solve_complete_bipartite(g);
    }
    if g.diameter()? <= 2 {
        match solve_diameter2(g) {
            Err(Error::CapExceeded { .. }) => {}
            other => return other,
        }
    }
    if g.split_partition().is_some() {
        return solve_split(g);
    }
    if g.cobipartite_partition().is_some() {
        return solve_cobipartite(g);
    }
    let cap_error = match svcfc_exact(g, None) {
        Err(e @ Error::CapExceeded { .. }) => e,
        other => return other,
    };
    solve_path(g).or(Err(cap_error))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verifier::verify_svcfc;

    #[test]
    fn dispatch_examples() {
        let r = solve_auto(&Graph::complete(5)).unwrap();
        assert_eq!((r.k, r.method), (5, Method::CompleteGraph));
        let r = solve_auto(&Graph::cycle(4)).unwrap();
        assert_eq!((r.k, r.method), (2, Method::CompleteBipartite));
        let r = solve_auto(&Graph::path(6)).unwrap();
        assert_eq!((r.k, r.method), (3, Method::Exact));
        let r = solve_auto(&Graph::petersen()).unwrap();
        assert_eq!((r.k, r.method), (3, Method::Diameter2));
        let r = solve_auto(&Graph::path(40)).unwrap();
        assert_eq!((r.k, r.method), (6, Method::PathFormula));
        assert!(verify_svcfc(&Graph::path(40), &r.coloring).unwrap().strong);
    }

    #[test]
    fn dispatch_errors() {
        assert_eq!(solve_auto(&Graph::empty(2)), Err(Error::NotConnected));
        assert!(solve_auto(&Graph::empty(0)).is_err());
        assert!(matches!(
            solve_auto(&Graph::cycle(30)),
            Err(Error::CapExceeded { .. })
        ));
    }
}
