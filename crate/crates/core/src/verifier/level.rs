use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// BFS layers between `source` and `target`, restricted to vertices that lie
/// on some shortest source-target path, with edges only between consecutive
/// layers. Its monotone (layer-increasing) paths are exactly the shortest
/// source-target paths of the host graph.
///
/// Vertices are stored layer by layer with local indices, so a single
/// forward sweep over local indices is a topological traversal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelGraph {
    source: usize,
    target: usize,
    /// Global id of each local vertex, layers contiguous, ascending within a layer.
    vertices: Vec<usize>,
    /// `level_start[i]..level_start[i + 1]` are the local ids of layer `i`.
    level_start: Vec<usize>,
    /// Local successors in the next layer, ascending.
    succ: Vec<Vec<u32>>,
    /// Local predecessors in the previous layer, ascending.
    pred: Vec<Vec<u32>>,
}

impl LevelGraph {
    pub fn build(g: &Graph, source: usize, target: usize) -> Result<Self> {
        g.check_vertex(source)?;
        g.check_vertex(target)?;
        let from_source = g.bfs_raw(source);
        let d = from_source[target];
        if d == usize::MAX {
            return Err(Error::NotConnected);
        }
        let from_target = g.bfs_raw(target);
        Ok(Self::from_distances(
            g,
            source,
            target,
            &from_source,
            &from_target,
        ))
    }

    /// Builds from precomputed BFS distance rows of both endpoints.
    pub(crate) fn from_distances(
        g: &Graph,
        source: usize,
        target: usize,
        from_source: &[usize],
        from_target: &[usize],
    ) -> Self {
        let d = from_source[target];
        let mut layers: Vec<Vec<usize>> = vec![Vec::new(); d + 1];
        for x in 0..g.n() {
            let (a, b) = (from_source[x], from_target[x]);
            if a != usize::MAX && b != usize::MAX && a + b == d {
                layers[a].push(x);
            }
        }
        let mut vertices = Vec::new();
        let mut level_start = Vec::with_capacity(d + 2);
        for layer in &layers {
            level_start.push(vertices.len());
            vertices.extend_from_slice(layer);
        }
        level_start.push(vertices.len());

        let mut local = vec![u32::MAX; g.n()];
        for (i, &x) in vertices.iter().enumerate() {
            local[x] = i as u32;
        }
        let mut succ = vec![Vec::new(); vertices.len()];
        let mut pred = vec![Vec::new(); vertices.len()];
        for (i, &x) in vertices.iter().enumerate() {
            for &y in g.neighbors(x) {
                let j = local[y];
                if j != u32::MAX && from_source[y] == from_source[x] + 1 {
                    succ[i].push(j);
                    pred[j as usize].push(i as u32);
                }
            }
        }
        LevelGraph {
            source,
            target,
            vertices,
            level_start,
            succ,
            pred,
        }
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn target(&self) -> usize {
        self.target
    }

    /// Distance between source and target.
    pub fn distance(&self) -> usize {
        self.level_start.len() - 2
    }

    /// Layer `i` as sorted global vertex ids.
    pub fn level(&self, i: usize) -> &[usize] {
        &self.vertices[self.level_start[i]..self.level_start[i + 1]]
    }

    pub fn levels(&self) -> impl Iterator<Item = &[usize]> {
        (0..=self.distance()).map(move |i| self.level(i))
    }

    /// All global vertex ids in the level graph, layer by layer.
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    /// Vertical edges as global `(lower layer, upper layer)` pairs.
    pub fn vertical_edges(&self) -> Vec<(usize, usize)> {
        self.succ
            .iter()
            .enumerate()
            .flat_map(|(i, s)| {
                s.iter()
                    .map(move |&j| (self.vertices[i], self.vertices[j as usize]))
            })
            .collect()
    }

    pub(crate) fn len(&self) -> usize {
        self.vertices.len()
    }

    pub(crate) fn local_level_range(&self, i: usize) -> std::ops::Range<usize> {
        self.level_start[i]..self.level_start[i + 1]
    }

    pub(crate) fn global(&self, local: usize) -> usize {
        self.vertices[local]
    }

    /// Whether a layer-increasing source-target path avoids `removed`
    /// (global ids). Source and target are never treated as removed.
    pub fn monotone_reachable(&self, removed: &FixedBitSet) -> bool {
        self.reach_local(|i| i != 0 && i != self.len() - 1 && removed.contains(self.vertices[i]))
    }

    /// First monotone path avoiding `removed`, choosing the smallest
    /// reached predecessor at every layer.
    pub fn monotone_path(&self, removed: &FixedBitSet) -> Option<Vec<usize>> {
        self.path_local(|i| i != 0 && i != self.len() - 1 && removed.contains(self.vertices[i]))
    }

    /// Forward sweep over local ids; `removed` is queried with local ids.
    pub(crate) fn reach_local(&self, removed: impl Fn(usize) -> bool) -> bool {
        let mut reached = vec![false; self.len()];
        reached[0] = true;
        for i in 0..self.len() {
            if !reached[i] {
                continue;
            }
            for &j in &self.succ[i] {
                let j = j as usize;
                if !reached[j] && !removed(j) {
                    reached[j] = true;
                }
            }
        }
        reached[self.len() - 1]
    }

    pub(crate) fn path_local(&self, removed: impl Fn(usize) -> bool) -> Option<Vec<usize>> {
        let mut via = vec![u32::MAX; self.len()];
        via[0] = 0;
        for i in 0..self.len() {
            if via[i] == u32::MAX {
                continue;
            }
            for &j in &self.succ[i] {
                let j = j as usize;
                if via[j] == u32::MAX && !removed(j) {
                    via[j] = i as u32;
                }
            }
        }
        let mut at = self.len() - 1;
        if via[at] == u32::MAX {
            return None;
        }
        let mut path = vec![self.vertices[at]];
        while at != 0 {
            at = via[at] as usize;
            path.push(self.vertices[at]);
        }
        path.reverse();
        Some(path)
    }

    /// Literal reading of "the remaining level graph is connected": source
    /// and target lie in one component of the undirected level graph minus
    /// `removed`. Zig-zag walks count here, unlike [`Self::monotone_reachable`].
    pub fn undirected_connected(&self, removed: &FixedBitSet) -> bool {
        let gone = |i: usize| i != 0 && i != self.len() - 1 && removed.contains(self.vertices[i]);
        let mut seen = vec![false; self.len()];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(i) = stack.pop() {
            for &j in self.succ[i].iter().chain(&self.pred[i]) {
                let j = j as usize;
                if !seen[j] && !gone(j) {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        seen[self.len() - 1]
    }

    /// All monotone paths, depth first in ascending vertex order. Fails once
    /// more than `cap` paths exist.
    pub(crate) fn all_paths(&self, cap: usize) -> Result<Vec<Vec<usize>>> {
        let mut out = Vec::new();
        let mut stack = vec![0usize];
        self.collect_paths(&mut stack, &mut out, cap)?;
        Ok(out)
    }

    fn collect_paths(
        &self,
        stack: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
        cap: usize,
    ) -> Result<()> {
        let at = *stack.last().expect("non-empty stack");
        if at == self.len() - 1 {
            if out.len() == cap {
                return Err(Error::CapExceeded {
                    what: "shortest path enumeration",
                    size: cap + 1,
                    cap,
                });
            }
            out.push(stack.iter().map(|&i| self.vertices[i]).collect());
            return Ok(());
        }
        for &j in &self.succ[at] {
            stack.push(j as usize);
            self.collect_paths(stack, out, cap)?;
            stack.pop();
        }
        Ok(())
    }
}

impl fmt::Display for LevelGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "level graph {} -> {} (distance {})",
            self.source,
            self.target,
            self.distance()
        )?;
        for (i, layer) in self.levels().enumerate() {
            let ids: Vec<String> = layer.iter().map(usize::to_string).collect();
            writeln!(f, "  L{i}: {}", ids.join(" "))?;
        }
        Ok(())
    }
}
