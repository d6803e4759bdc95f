//! Deterministic graphs and colorings shared by the benchmarks.

use svcfc_core::constructions::{assignment_to_coloring, gadget_q, sat_to_svcfc, CnfFormula};
use svcfc_core::{Coloring, Graph};

/// `Q_n` with its canonical strong 3-coloring.
pub fn gadget_with_coloring(n: usize) -> (Graph, Coloring) {
    let q = gadget_q(n).expect("n >= 1");
    (
        q.graph,
        q.canonical_coloring.expect("gadgets carry a coloring"),
    )
}

/// The grid `rows x cols` with a checkerboard 2-coloring (proper, not strong).
pub fn grid(rows: usize, cols: usize) -> (Graph, Coloring) {
    let id = |r: usize, c: usize| r * cols + c;
    let mut edges = Vec::new();
    for r in 0..rows {
        for c in 0..cols {
            if c + 1 < cols {
                edges.push((id(r, c), id(r, c + 1)));
            }
            if r + 1 < rows {
                edges.push((id(r, c), id(r + 1, c)));
            }
        }
    }
    let g = Graph::from_edges(rows * cols, edges).expect("valid grid");
    let colors = (0..rows * cols)
        .map(|v| 1 + (v / cols + v % cols) % 2)
        .collect();
    (g, Coloring::new(2, colors).expect("in range"))
}

/// A formula with `m` clauses cycling over `n` variables.
pub fn cycling_formula(n: usize, m: usize) -> CnfFormula {
    let clauses: Vec<Vec<i32>> = (0..m)
        .map(|j| {
            let x = (j % n) as i32 + 1;
            let y = ((j + 1) % n) as i32 + 1;
            if j % 2 == 0 {
                vec![x, -y]
            } else {
                vec![-x, y]
            }
        })
        .collect();
    let refs: Vec<&[i32]> = clauses.iter().map(Vec::as_slice).collect();
    CnfFormula::from_dimacs(n, &refs).expect("valid formula")
}

/// The reduction graph of [`cycling_formula`] with the coloring of the
/// all-true assignment.
pub fn reduction_with_witness(n: usize, m: usize) -> (Graph, Coloring) {
    let phi = cycling_formula(n, m);
    let rg = sat_to_svcfc(&phi).expect("m >= 1");
    let f = assignment_to_coloring(&rg, &vec![true; n])
        .expect("all-true satisfies the cycling formula");
    (rg.graph, f)
}
