use std::collections::VecDeque;

use fixedbitset::FixedBitSet;

use super::Graph;
use crate::error::{Error, Result};

/// Shortest-path distance; `None` means unreachable.
pub type Distance = Option<usize>;

pub(crate) const UNREACHABLE: usize = usize::MAX;

impl Graph {
    /// BFS distances from `u`, `UNREACHABLE` for vertices in other components.
    pub(crate) fn bfs_raw(&self, u: usize) -> Vec<usize> {
        let mut dist = vec![UNREACHABLE; self.n()];
        let mut queue = VecDeque::with_capacity(self.n());
        dist[u] = 0;
        queue.push_back(u);
        while let Some(x) = queue.pop_front() {
            let next = dist[x] + 1;
            for &y in self.neighbors(x) {
                if dist[y] == UNREACHABLE {
                    dist[y] = next;
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    /// Distance from `u` to every vertex.
    pub fn bfs_distances(&self, u: usize) -> Result<Vec<Distance>> {
        self.check_vertex(u)?;
        Ok(self
            .bfs_raw(u)
            .into_iter()
            .map(|d| (d != UNREACHABLE).then_some(d))
            .collect())
    }

    /// One BFS from vertex 0 reaches everything; graphs on at most one
    /// vertex count as connected.
    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.bfs_raw(0).iter().all(|&d| d != UNREACHABLE)
    }

    pub(crate) fn require_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::NotConnected)
        }
    }

    pub fn eccentricity(&self, u: usize) -> Result<usize> {
        self.check_vertex(u)?;
        let dist = self.bfs_raw(u);
        let ecc = dist.iter().copied().max().unwrap_or(0);
        if ecc == UNREACHABLE {
            Err(Error::NotConnected)
        } else {
            Ok(ecc)
        }
    }

    fn eccentricities(&self) -> Result<Vec<usize>> {
        (0..self.n()).map(|u| self.eccentricity(u)).collect()
    }

    pub fn diameter(&self) -> Result<usize> {
        Ok(self.eccentricities()?.into_iter().max().unwrap_or(0))
    }

    pub fn radius(&self) -> Result<usize> {
        Ok(self.eccentricities()?.into_iter().min().unwrap_or(0))
    }

    /// All-pairs distance matrix (`UNREACHABLE` across components).
    pub(crate) fn distance_matrix(&self) -> Vec<Vec<usize>> {
        (0..self.n()).map(|u| self.bfs_raw(u)).collect()
    }

    /// A dominating set of size at most `t`, if one exists.
    ///
    /// Sizes are tried in increasing order and subsets of one size in
    /// lexicographic order, so the result is the lexicographically first
    /// minimum dominating set whenever the domination number is `<= t`.
    pub fn domination_number_at_most(&self, t: usize) -> Option<Vec<usize>> {
        let n = self.n();
        let closed: Vec<FixedBitSet> = (0..n)
            .map(|v| {
                let mut s = self.neighbor_set(v).clone();
                s.insert(v);
                s
            })
            .collect();
        for size in 0..=t.min(n) {
            let mut pick: Vec<usize> = (0..size).collect();
            loop {
                let mut covered = FixedBitSet::with_capacity(n);
                for &v in &pick {
                    covered.union_with(&closed[v]);
                }
                if covered.count_ones(..) == n {
                    return Some(pick);
                }
                if !next_combination(&mut pick, n) {
                    break;
                }
            }
        }
        None
    }
}

/// Advances `pick` to the next `pick.len()`-subset of `0..n` in
/// lexicographic order. Returns false after the last one.
pub(crate) fn next_combination(pick: &mut [usize], n: usize) -> bool {
    let k = pick.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if pick[i] < n - k + i {
            pick[i] += 1;
            for j in i + 1..k {
                pick[j] = pick[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bfs_examples() {
        let p4 = Graph::path(4);
        assert_eq!(
            p4.bfs_distances(0).unwrap(),
            vec![Some(0), Some(1), Some(2), Some(3)]
        );
        let k3 = Graph::complete(3);
        assert_eq!(
            k3.bfs_distances(0).unwrap(),
            vec![Some(0), Some(1), Some(1)]
        );
        let two_edges = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(two_edges.bfs_distances(0).unwrap()[2], None);
        assert!(p4.bfs_distances(4).is_err());
    }

    #[test]
    fn connectivity_examples() {
        assert!(Graph::path(4).is_connected());
        assert!(!Graph::from_edges(4, [(0, 1), (2, 3)])
            .unwrap()
            .is_connected());
        assert!(Graph::empty(1).is_connected());
        assert!(Graph::empty(0).is_connected());
        assert!(!Graph::empty(2).is_connected());
    }

    #[test]
    fn metric_examples() {
        let c6 = Graph::cycle(6);
        assert_eq!(c6.diameter().unwrap(), 3);
        assert_eq!(c6.radius().unwrap(), 3);
        let star = Graph::star(4);
        assert_eq!(star.eccentricity(0).unwrap(), 1);
        assert_eq!(star.radius().unwrap(), 1);
        assert_eq!(star.diameter().unwrap(), 2);
        let split = Graph::empty(3);
        assert_eq!(split.diameter(), Err(Error::NotConnected));
        assert_eq!(split.radius(), Err(Error::NotConnected));
    }

    #[test]
    fn domination_examples() {
        assert_eq!(Graph::star(5).domination_number_at_most(1), Some(vec![0]));
        assert_eq!(Graph::path(4).domination_number_at_most(1), None);
        assert_eq!(
            Graph::path(4).domination_number_at_most(2),
            Some(vec![0, 2])
        );
        assert_eq!(
            Graph::cycle(6).domination_number_at_most(2),
            Some(vec![0, 3])
        );
    }

    #[test]
    fn combinations_are_lexicographic() {
        let mut pick = vec![0, 1];
        let mut seen = vec![pick.clone()];
        while next_combination(&mut pick, 4) {
            seen.push(pick.clone());
        }
        assert_eq!(
            seen,
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
    }
}
