//! Recognition of the graph classes the solvers dispatch on.

use std::collections::VecDeque;

use serde::Serialize;

use super::Graph;

/// Partition of a split graph into a clique and an independent set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SplitPartition {
    pub clique: Vec<usize>,
    pub independent: Vec<usize>,
}

impl SplitPartition {
    /// Rechecks every defining condition directly against `g`.
    pub fn is_valid_normalized(&self, g: &Graph) -> bool {
        let mut seen = vec![0u8; g.n()];
        for &v in self.clique.iter().chain(&self.independent) {
            if v >= g.n() {
                return false;
            }
            seen[v] += 1;
        }
        if seen.iter().any(|&c| c != 1) {
            return false;
        }
        let pairwise = |set: &[usize], adjacent: bool| {
            set.iter()
                .enumerate()
                .all(|(i, &u)| set[i + 1..].iter().all(|&v| g.has_edge(u, v) == adjacent))
        };
        pairwise(&self.clique, true)
            && pairwise(&self.independent, false)
            && self
                .independent
                .iter()
                .all(|&u| self.clique.iter().any(|&c| !g.has_edge(u, c)))
    }
}

/// Partition of a co-bipartite graph into two cliques `a` and `b` with
/// `|a| >= |b|`. A complete graph is reported with `b` empty and
/// `complete` set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoBipartition {
    pub a: Vec<usize>,
    pub b: Vec<usize>,
    /// Edges `(x, y)` with `x` in `a` and `y` in `b`, sorted.
    pub cross_edges: Vec<(usize, usize)>,
    pub complete: bool,
}

impl Graph {
    /// Two-coloring of the vertices when the graph is bipartite. Each
    /// component's lowest vertex goes to the first side.
    pub fn bipartition(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        let n = self.n();
        let mut side: Vec<Option<bool>> = vec![None; n];
        let mut queue = VecDeque::new();
        for start in 0..n {
            if side[start].is_some() {
                continue;
            }
            side[start] = Some(false);
            queue.push_back(start);
            while let Some(x) = queue.pop_front() {
                let sx = side[x].expect("queued vertices are colored");
                for &y in self.neighbors(x) {
                    match side[y] {
                        None => {
                            side[y] = Some(!sx);
                            queue.push_back(y);
                        }
                        Some(sy) if sy == sx => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        let (x, y): (Vec<usize>, Vec<usize>) = (0..n).partition(|&v| side[v] == Some(false));
        Some((x, y))
    }

    /// Connected, bipartite, and every cross pair adjacent. The one-vertex
    /// graph qualifies with an empty second side.
    pub fn is_complete_bipartite(&self) -> bool {
        if !self.is_connected() {
            return false;
        }
        match self.bipartition() {
            Some((x, y)) => x.len() * y.len() == self.m(),
            None => false,
        }
    }

    /// Normalized split partition, via the degree-sequence test and then
    /// moving into the clique any independent vertex that sees all of it.
    pub fn split_partition(&self) -> Option<SplitPartition> {
        let n = self.n();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&u, &v| self.degree(v).cmp(&self.degree(u)).then(u.cmp(&v)));
        let degrees: Vec<usize> = order.iter().map(|&v| self.degree(v)).collect();
        // Largest m with d_m >= m - 1 (1-based); zero only for n == 0.
        let m = (1..=n)
            .rev()
            .find(|&i| degrees[i - 1] + 1 >= i)
            .unwrap_or(0);
        let head: usize = degrees[..m].iter().sum();
        let tail: usize = degrees[m..].iter().sum();
        if head != m * m.saturating_sub(1) + tail {
            return None;
        }

        let mut in_clique = vec![false; n];
        for &v in &order[..m] {
            in_clique[v] = true;
        }
        loop {
            let clique_size = in_clique.iter().filter(|&&c| c).count();
            let sees_all = (0..n).find(|&u| {
                !in_clique[u]
                    && self.neighbors(u).iter().filter(|&&w| in_clique[w]).count() == clique_size
            });
            match sees_all {
                Some(u) => in_clique[u] = true,
                None => break,
            }
        }
        let (clique, independent) = (0..n).partition(|&v| in_clique[v]);
        Some(SplitPartition {
            clique,
            independent,
        })
    }

    /// Partition into two cliques, from a bipartition of the complement.
    pub fn cobipartite_partition(&self) -> Option<CoBipartition> {
        let (mut a, mut b) = self.complement().bipartition()?;
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
        }
        let cross_edges = a
            .iter()
            .flat_map(|&x| {
                b.iter()
                    .filter(move |&&y| self.has_edge(x, y))
                    .map(move |&y| (x, y))
            })
            .collect();
        let complete = b.is_empty();
        Some(CoBipartition {
            a,
            b,
            cross_edges,
            complete,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Brute force over all 2^n assignments of vertices to clique or
    /// independent side.
    fn is_split_brute_force(g: &Graph) -> bool {
        let n = g.n();
        (0u32..1 << n).any(|mask| {
            let clique: Vec<usize> = (0..n).filter(|&v| mask & (1 << v) != 0).collect();
            let indep: Vec<usize> = (0..n).filter(|&v| mask & (1 << v) == 0).collect();
            clique
                .iter()
                .all(|&u| clique.iter().all(|&v| u == v || g.has_edge(u, v)))
                && indep
                    .iter()
                    .all(|&u| indep.iter().all(|&v| !g.has_edge(u, v)))
        })
    }

    #[test]
    fn bipartition_examples() {
        assert_eq!(
            Graph::cycle(4).bipartition(),
            Some((vec![0, 2], vec![1, 3]))
        );
        assert_eq!(Graph::cycle(5).bipartition(), None);
        assert_eq!(Graph::path(4).bipartition(), Some((vec![0, 2], vec![1, 3])));
    }

    #[test]
    fn complete_bipartite_examples() {
        assert!(Graph::complete_bipartite(2, 3).is_complete_bipartite());
        assert!(!Graph::path(4).is_complete_bipartite());
        assert!(Graph::path(2).is_complete_bipartite());
        assert!(Graph::empty(1).is_complete_bipartite());
        assert!(!Graph::empty(2).is_complete_bipartite());
    }

    #[test]
    fn split_examples() {
        let paw = Graph::from_edges(4, [(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap();
        let p = paw.split_partition().unwrap();
        assert_eq!(p.clique, vec![0, 1, 2]);
        assert_eq!(p.independent, vec![3]);
        assert!(p.is_valid_normalized(&paw));

        assert_eq!(Graph::cycle(4).split_partition(), None);

        let star = Graph::star(3);
        let p = star.split_partition().unwrap();
        assert!(p.clique.contains(&0));
        assert!(p.is_valid_normalized(&star));

        let k4 = Graph::complete(4);
        let p = k4.split_partition().unwrap();
        assert_eq!(p.clique, vec![0, 1, 2, 3]);
        assert!(p.independent.is_empty());
    }

    #[test]
    fn split_recognition_matches_brute_force_on_small_graphs() {
        for n in 1..=5usize {
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .collect();
            for mask in 0u32..1 << pairs.len() {
                let edges = pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask & (1 << i) != 0)
                    .map(|(_, &e)| e);
                let g = Graph::from_edges(n, edges).unwrap();
                let found = g.split_partition();
                assert_eq!(found.is_some(), is_split_brute_force(&g), "{g:?}");
                if let Some(p) = found {
                    assert!(p.is_valid_normalized(&g), "{g:?} -> {p:?}");
                }
            }
        }
    }

    #[test]
    fn cobipartite_examples() {
        let c4 = Graph::cycle(4);
        let p = c4.cobipartite_partition().unwrap();
        assert_eq!((p.a.len(), p.b.len()), (2, 2));
        assert!(!p.complete);
        assert_eq!(p.cross_edges.len(), 2);

        assert_eq!(Graph::cycle(5).cobipartite_partition(), None);

        let k4 = Graph::complete(4).cobipartite_partition().unwrap();
        assert!(k4.complete);
        assert_eq!(k4.a, vec![0, 1, 2, 3]);
        assert!(k4.b.is_empty());
    }
}
