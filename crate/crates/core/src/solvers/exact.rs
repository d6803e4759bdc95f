use super::{require_nonempty_connected, Method, SolveResult};
use crate::error::{Error, Result};
use crate::graph::exact::{proper_colorings, ColoringVisitor};
use crate::graph::{Graph, DEFAULT_EXACT_CAP};
use crate::verifier::SvcfcChecker;

/// Vertex cap for [`svcfc_exact`].
pub const DEFAULT_SVCFC_CAP: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExactOptions {
    pub cap: usize,
    /// Largest color count to try; defaults to `n`.
    pub max_k: Option<usize>,
    /// Reject a partial coloring as soon as some vertex pair whose level
    /// graph is fully colored has no conflict-free shortest path. Such a
    /// pair fails in every completion, so the witness is unchanged.
    pub prune_decided_pairs: bool,
}

impl Default for ExactOptions {
    fn default() -> Self {
        ExactOptions {
            cap: DEFAULT_SVCFC_CAP,
            max_k: None,
            prune_decided_pairs: true,
        }
    }
}

struct Search<'a> {
    checker: &'a SvcfcChecker,
    decided_at: Option<Vec<Vec<usize>>>,
    found: Option<Vec<usize>>,
}

impl ColoringVisitor for Search<'_> {
    fn assigned(&mut self, v: usize, colors: &[usize]) -> bool {
        match &self.decided_at {
            Some(groups) => groups[v]
                .iter()
                .all(|&i| self.checker.pair_holds(i, colors)),
            None => true,
        }
    }

    fn complete(&mut self, colors: &[usize]) -> bool {
        // With pruning every pair was already checked on the way down.
        if self.decided_at.is_some() || self.checker.is_strong(colors) {
            self.found = Some(colors.to_vec());
            true
        } else {
            false
        }
    }
}

/// Minimum `k` admitting a strong conflict-free vertex-connection coloring,
/// searching `k` upward from the chromatic number.
pub fn svcfc_exact(g: &Graph, max_k: Option<usize>) -> Result<SolveResult> {
    svcfc_exact_with(
        g,
        &ExactOptions {
            max_k,
            ..ExactOptions::default()
        },
    )
}

/// Proper colorings are enumerated in canonical order for each `k` and
/// verified; the first strong one is returned.
pub fn svcfc_exact_with(g: &Graph, opts: &ExactOptions) -> Result<SolveResult> {
    if g.n() > opts.cap {
        return Err(Error::CapExceeded {
            what: "exact svcfc search",
            size: g.n(),
            cap: opts.cap,
        });
    }
    require_nonempty_connected(g)?;
    let upper = opts.max_k.unwrap_or(g.n()).min(g.n());
    let (chi, _) = g.chromatic_number_with_cap(opts.cap.max(DEFAULT_EXACT_CAP))?;
    let checker = SvcfcChecker::new(g)?;
    let decided_at = opts.prune_decided_pairs.then(|| checker.pairs_decided_at());
    for k in chi..=upper {
        let mut search = Search {
            checker: &checker,
            decided_at: decided_at.clone(),
            found: None,
        };
        if proper_colorings(g, k, &mut search) {
            let colors = search.found.expect("search stopped on a coloring");
            return SolveResult::new(colors, Method::Exact);
        }
    }
    Err(Error::ExceedsMaxK(opts.max_k.unwrap_or(g.n())))
}
