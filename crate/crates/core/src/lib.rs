//! Strong conflict-free vertex-connection (svcfc) colorings.
//!
//! A proper vertex coloring is *strong conflict-free* when every pair of
//! vertices is joined by some shortest path on which one color occurs
//! exactly once. Verification runs in polynomial time. Optimal colorings
//! come from exhaustive search on small graphs and from direct
//! constructions on several structured classes.
//!
//! The [`constructions`] module builds the gadgets and the 3-SAT reduction
//! behind the hardness of the decision problem.

pub mod constructions;
pub mod error;
pub mod graph;
pub mod harness;
pub mod io;
pub mod solvers;
pub mod verifier;

pub use constructions::{CnfFormula, LabeledGraph, Lit, Role};
pub use error::{Error, Result};
pub use graph::{CoBipartition, Coloring, Graph, SplitPartition};
pub use solvers::{solve_auto, svcfc_exact, Method, SolveResult};
pub use verifier::{has_strong_cf_path, verify_svcfc, LevelGraph, Verdict};
