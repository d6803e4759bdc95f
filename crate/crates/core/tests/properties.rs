//! Randomized invariants over small graphs, checked against brute force.

use proptest::prelude::*;
use svcfc_core::constructions::{
    assignment_to_coloring, gadget_q, sat_brute_force, sat_to_svcfc, CnfFormula, Lit,
};
use svcfc_core::solvers::{
    path_svcfc_value, solve_auto, solve_path, svcfc_exact, svcfc_exact_with, ExactOptions,
};
use svcfc_core::verifier::{
    enumerate_shortest_paths, has_strong_cf_path, has_strong_cf_path_with, is_conflict_free_path,
    verify_svcfc, Connectivity,
};
use svcfc_core::{Coloring, Graph};

/// A connected graph on `1..=max_n` vertices: a random spanning tree plus
/// random extra edges.
fn connected_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let parents = (1..n).map(|v| 0..v).collect::<Vec<_>>();
        let extra = proptest::collection::vec((0..n, 0..n), 0..=n * 2);
        (Just(n), parents, extra).prop_map(|(n, parents, extra)| {
            let tree = parents.into_iter().enumerate().map(|(i, p)| (p, i + 1));
            let extra = extra.into_iter().filter(|(u, v)| u != v);
            Graph::from_edges(n, tree.chain(extra)).unwrap()
        })
    })
}

/// Greedy proper coloring in a shuffled order with random color choices.
fn proper_coloring(g: &Graph, choices: &[usize]) -> Coloring {
    let mut colors = vec![0; g.n()];
    for v in 0..g.n() {
        let used: Vec<usize> = g.neighbors(v).iter().map(|&w| colors[w]).collect();
        let free: Vec<usize> = (1..=g.n()).filter(|c| !used.contains(c)).collect();
        colors[v] = free[choices[v] % free.len()];
    }
    Coloring::from_colors(colors).unwrap()
}

fn graph_and_coloring(max_n: usize) -> impl Strategy<Value = (Graph, Coloring)> {
    connected_graph(max_n).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), proptest::collection::vec(0..3usize, n)).prop_map(|(g, ch)| {
            let f = proper_coloring(&g, &ch);
            (g, f)
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn verifier_matches_oracle((g, f) in graph_and_coloring(9)) {
        for u in 0..g.n() {
            for v in 0..g.n() {
                let paths = enumerate_shortest_paths(&g, u, v, 100_000).unwrap();
                let oracle = paths.iter().any(|p| is_conflict_free_path(&f, p));
                let fast = has_strong_cf_path(&g, &f, u, v).unwrap();
                prop_assert_eq!(fast.is_some(), oracle);
                if let Some(w) = fast {
                    prop_assert!(paths.contains(&w.path));
                }
            }
        }
        let all = (0..g.n()).all(|u| (u + 1..g.n()).all(|v| has_strong_cf_path(&g, &f, u, v).unwrap().is_some()));
        prop_assert_eq!(verify_svcfc(&g, &f).unwrap().strong, all);
    }

    #[test]
    fn monotone_survival_implies_undirected((g, f) in graph_and_coloring(9)) {
        for u in 0..g.n() {
            for v in 0..g.n() {
                if has_strong_cf_path_with(&g, &f, u, v, Connectivity::Monotone).unwrap() {
                    prop_assert!(has_strong_cf_path_with(&g, &f, u, v, Connectivity::Undirected).unwrap());
                }
            }
        }
    }

    #[test]
    fn exact_is_optimal_and_verified(g in connected_graph(7)) {
        let r = svcfc_exact(&g, None).unwrap();
        prop_assert!(verify_svcfc(&g, &r.coloring).unwrap().strong);
        prop_assert_eq!(r.coloring.distinct_colors(), r.k);
        let chi = g.chromatic_number().unwrap().0;
        prop_assert!(chi <= r.k && r.k <= g.n());
        if r.k > chi {
            let below = svcfc_exact_with(&g, &ExactOptions { max_k: Some(r.k - 1), ..Default::default() });
            prop_assert!(below.is_err());
        }
        let plain = svcfc_exact_with(&g, &ExactOptions { prune_decided_pairs: false, ..Default::default() }).unwrap();
        prop_assert_eq!(plain, r.clone());
        if g.n() >= 2 {
            prop_assert_eq!(r.k <= 2, g.is_complete_bipartite());
        }
    }

    #[test]
    fn auto_agrees_with_exact(g in connected_graph(8)) {
        let auto = solve_auto(&g).unwrap();
        prop_assert!(verify_svcfc(&g, &auto.coloring).unwrap().strong);
        prop_assert_eq!(auto.k, svcfc_exact(&g, None).unwrap().k);
    }

    #[test]
    fn canonical_relabeling_is_stable((g, f) in graph_and_coloring(9)) {
        let c = f.canonical();
        prop_assert_eq!(c.canonical(), c.clone());
        prop_assert_eq!(c.distinct_colors(), f.distinct_colors());
        prop_assert_eq!(verify_svcfc(&g, &c).unwrap().strong, verify_svcfc(&g, &f).unwrap().strong);
    }

    #[test]
    fn reduction_witnesses_verify(clauses in proptest::collection::vec(proptest::collection::vec((1..=4usize, any::<bool>()), 1..=3), 1..=5)) {
        let clauses: Vec<Vec<Lit>> = clauses.into_iter().map(|c| {
            let mut seen = Vec::new();
            c.into_iter().filter(|&(x, _)| { let new = !seen.contains(&x); seen.push(x); new })
                .map(|(x, s)| Lit::new(x, s)).collect()
        }).collect();
        let phi = CnfFormula::new(4, clauses).unwrap();
        let rg = sat_to_svcfc(&phi).unwrap();
        prop_assert_eq!(rg.graph.n(), 3 * phi.clauses().len() + 2 * (4 + usize::from(phi.has_covering_clause())) + 4);
        prop_assert_eq!(rg.graph.diameter().unwrap(), 3);
        if let Some(a) = sat_brute_force(&phi).unwrap() {
            let f = assignment_to_coloring(&rg, &a).unwrap();
            prop_assert!(verify_svcfc(&rg.graph, &f).unwrap().strong);
        }
    }
}

#[test]
fn ruler_coloring_is_optimal_well_beyond_the_exact_cap() {
    for n in 1..=200 {
        let g = Graph::path(n);
        let r = solve_path(&g).unwrap();
        assert!(verify_svcfc(&g, &r.coloring).unwrap().strong, "P_{n}");
        assert_eq!(r.k, path_svcfc_value(n).unwrap());
    }
    let big = solve_auto(&Graph::path(40)).unwrap();
    assert_eq!(big.k, 6);
}

#[test]
fn gadgets_keep_three_colors() {
    for n in 1..=6 {
        let q = gadget_q(n).unwrap();
        assert_eq!(q.graph.n(), 3 * n + 1);
        assert_eq!(q.graph.m(), 5 * n);
        if q.graph.n() <= 13 {
            assert_eq!(svcfc_exact(&q.graph, None).unwrap().k, 3);
        }
    }
}
