use std::collections::HashMap;

/// Maximum-cardinality matching of a bipartite graph by augmenting paths.
///
/// `edges` holds `(l, r)` pairs with `l` from `left` and `r` from `right`;
/// pairs naming vertices outside those sets are ignored. Left vertices are
/// processed in the given order and their edges in ascending order of `r`,
/// so the result is deterministic. Returned pairs are sorted by `l`.
pub fn max_bipartite_matching(
    left: &[usize],
    right: &[usize],
    edges: &[(usize, usize)],
) -> Vec<(usize, usize)> {
    let left_index: HashMap<usize, usize> = left.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let right_index: HashMap<usize, usize> =
        right.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut adj = vec![Vec::new(); left.len()];
    for &(l, r) in edges {
        if let (Some(&li), Some(&ri)) = (left_index.get(&l), right_index.get(&r)) {
            adj[li].push(ri);
        }
    }
    for list in &mut adj {
        list.sort_by_key(|&ri| right[ri]);
        list.dedup();
    }

    let mut match_right: Vec<Option<usize>> = vec![None; right.len()];
    for li in 0..left.len() {
        let mut visited = vec![false; right.len()];
        augment(li, &adj, &mut visited, &mut match_right);
    }

    let mut pairs: Vec<(usize, usize)> = match_right
        .iter()
        .enumerate()
        .filter_map(|(ri, m)| m.map(|li| (left[li], right[ri])))
        .collect();
    pairs.sort_unstable();
    pairs
}

fn augment(
    li: usize,
    adj: &[Vec<usize>],
    visited: &mut [bool],
    match_right: &mut [Option<usize>],
) -> bool {
    for &ri in &adj[li] {
        if visited[ri] {
            continue;
        }
        visited[ri] = true;
        let free = match match_right[ri] {
            None => true,
            Some(other) => augment(other, adj, visited, match_right),
        };
        if free {
            match_right[ri] = Some(li);
            return true;
        }
    }
    false
}
