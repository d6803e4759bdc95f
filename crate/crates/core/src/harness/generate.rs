//! Input generators for the property suites.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::constructions::{CnfFormula, Lit};
use crate::graph::Graph;

/// Every connected labeled graph on `n` vertices, in edge-mask order.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    let slots: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    assert!(slots.len() < 32, "enumeration is for tiny graphs");
    (0u32..1 << slots.len())
        .filter_map(|mask| {
            let edges = slots
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e);
            let g = Graph::from_edges(n, edges).expect("slots are valid");
            g.is_connected().then_some(g)
        })
        .collect()
}

/// Every map `V -> {1..=k}` with no monochromatic edge.
pub fn all_proper_maps(g: &Graph, k: usize) -> Vec<Vec<usize>> {
    fn go(g: &Graph, k: usize, v: usize, colors: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if v == g.n() {
            out.push(colors.clone());
            return;
        }
        for c in 1..=k {
            if g.neighbors(v).iter().all(|&w| w > v || colors[w] != c) {
                colors[v] = c;
                go(g, k, v + 1, colors, out);
            }
        }
        colors[v] = 0;
    }
    let mut out = Vec::new();
    go(g, k, 0, &mut vec![0; g.n()], &mut out);
    out
}

/// A proper coloring into `{1..=k}` found by depth-first search with
/// shuffled color order, or `None` if `g` is not `k`-colorable.
pub fn random_proper_k_coloring<R: Rng>(g: &Graph, k: usize, rng: &mut R) -> Option<Vec<usize>> {
    fn go<R: Rng>(g: &Graph, k: usize, v: usize, colors: &mut Vec<usize>, rng: &mut R) -> bool {
        if v == g.n() {
            return true;
        }
        let mut order: Vec<usize> = (1..=k).collect();
        order.shuffle(rng);
        for c in order {
            if g.neighbors(v).iter().all(|&w| w > v || colors[w] != c) {
                colors[v] = c;
                if go(g, k, v + 1, colors, rng) {
                    return true;
                }
            }
        }
        colors[v] = 0;
        false
    }
    let mut colors = vec![0; g.n()];
    go(g, k, 0, &mut colors, rng).then_some(colors)
}

/// A random proper coloring with an unconstrained palette: vertices in
/// random order pick a random admissible color, opening a new color only
/// when forced.
pub fn random_proper_coloring<R: Rng>(g: &Graph, rng: &mut R) -> Vec<usize> {
    let n = g.n();
    let mut palette = rng.gen_range(1..=n.max(1));
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut colors = vec![0; n];
    for v in order {
        let free: Vec<usize> = (1..=palette)
            .filter(|&c| g.neighbors(v).iter().all(|&w| colors[w] != c))
            .collect();
        colors[v] = match free.choose(rng) {
            Some(&c) => c,
            None => {
                palette += 1;
                palette
            }
        };
    }
    colors
}

fn relabel<R: Rng>(n: usize, edges: Vec<(usize, usize)>, rng: &mut R) -> Graph {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    Graph::from_edges(n, edges.into_iter().map(|(u, v)| (perm[u], perm[v]))).expect("valid edges")
}

/// A connected `G(n, p)` sample, resampled until connected.
pub fn random_connected_graph<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    loop {
        let edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|_| rng.gen_bool(p))
            .collect();
        let g = Graph::from_edges(n, edges).expect("valid edges");
        if g.is_connected() {
            return g;
        }
    }
}

/// A random connected split graph on `2..=max_n` vertices with randomly
/// permuted labels.
pub fn random_split_graph<R: Rng>(max_n: usize, rng: &mut R) -> Graph {
    let n = rng.gen_range(2..=max_n);
    let c = rng.gen_range(1..=n);
    let mut edges: Vec<(usize, usize)> = (0..c)
        .flat_map(|u| (u + 1..c).map(move |v| (u, v)))
        .collect();
    let p = rng.gen_range(0.1..0.9);
    for u in c..n {
        let mut nbrs: Vec<usize> = (0..c).filter(|_| rng.gen_bool(p)).collect();
        if nbrs.is_empty() {
            nbrs.push(rng.gen_range(0..c));
        }
        edges.extend(nbrs.into_iter().map(|w| (w, u)));
    }
    relabel(n, edges, rng)
}

/// A random connected, non-complete co-bipartite graph on `2..=max_n`
/// vertices. A third of the samples have exactly one cross edge.
pub fn random_cobipartite_graph<R: Rng>(max_n: usize, rng: &mut R) -> Graph {
    loop {
        let n = rng.gen_range(2..=max_n);
        let a = rng.gen_range(1..n);
        let clique =
            |lo: usize, hi: usize| (lo..hi).flat_map(move |u| (u + 1..hi).map(move |v| (u, v)));
        let mut edges: Vec<(usize, usize)> = clique(0, a).chain(clique(a, n)).collect();
        let slots: Vec<(usize, usize)> = (0..a).flat_map(|x| (a..n).map(move |y| (x, y))).collect();
        let cross: Vec<(usize, usize)> = if rng.gen_ratio(1, 3) {
            vec![*slots.choose(rng).expect("both sides nonempty")]
        } else {
            let p = rng.gen_range(0.05..0.95);
            slots.iter().copied().filter(|_| rng.gen_bool(p)).collect()
        };
        if cross.is_empty() || cross.len() == slots.len() {
            continue;
        }
        edges.extend(cross);
        return relabel(n, edges, rng);
    }
}

/// Every clause over variables `1..=n` with one to three literals on
/// distinct variables, sorted.
pub fn all_clauses(n: usize) -> Vec<Vec<Lit>> {
    let mut out = Vec::new();
    for mask in 1u32..1 << n {
        let vars: Vec<usize> = (1..=n).filter(|&x| mask >> (x - 1) & 1 == 1).collect();
        if vars.len() > 3 {
            continue;
        }
        for signs in 0u32..1 << vars.len() {
            out.push(
                vars.iter()
                    .enumerate()
                    .map(|(i, &x)| Lit::new(x, signs >> i & 1 == 0))
                    .collect(),
            );
        }
    }
    out.sort();
    out
}

/// Every formula with `1..=max_vars` variables and `1..=max_clauses`
/// pairwise distinct clauses.
pub fn cnf_corpus(max_vars: usize, max_clauses: usize) -> Vec<CnfFormula> {
    let mut out = Vec::new();
    for n in 1..=max_vars {
        let clauses = all_clauses(n);
        for m in 1..=max_clauses.min(clauses.len()) {
            let mut pick: Vec<usize> = (0..m).collect();
            loop {
                let chosen = pick.iter().map(|&i| clauses[i].clone()).collect();
                out.push(CnfFormula::new(n, chosen).expect("generated clauses are valid"));
                if !crate::graph::metrics::next_combination(&mut pick, clauses.len()) {
                    break;
                }
            }
        }
    }
    out
}

/// A random formula with `1..=max_vars` variables and
/// `min_clauses..=max_clauses` clauses.
pub fn random_cnf<R: Rng>(
    max_vars: usize,
    min_clauses: usize,
    max_clauses: usize,
    rng: &mut R,
) -> CnfFormula {
    let n = rng.gen_range(1..=max_vars);
    let clauses = all_clauses(n);
    let m = rng.gen_range(min_clauses..=max_clauses);
    let chosen = (0..m)
        .map(|_| clauses.choose(rng).expect("nonempty").clone())
        .collect();
    CnfFormula::new(n, chosen).expect("generated clauses are valid")
}
