//! The diameter-padding gadgets `Q_n` and `R_n`, the apex join, and the
//! diameter extension for four or more colors.

use super::{LabeledGraph, Role};
use crate::error::{Error, Result};
use crate::graph::{Coloring, Graph};

/// A gadget before embedding, with its 3-coloring.
pub(crate) struct Gadget {
    pub edges: Vec<(usize, usize)>,
    pub roles: Vec<Role>,
    pub colors: Vec<usize>,
}

impl Gadget {
    pub fn len(&self) -> usize {
        self.roles.len()
    }

    /// `Q_n`: `c_0` is vertex 0, then `a_i, b_i, c_i` at `3i-2, 3i-1, 3i`.
    /// Colors `a -> 1`, `b -> 2`, `c -> 3`.
    pub fn q(n: usize) -> Gadget {
        let (a, b, c) = (|i: usize| 3 * i - 2, |i: usize| 3 * i - 1, |i: usize| 3 * i);
        let mut roles = vec![Role::GadgetC(0)];
        let mut colors = vec![3];
        let mut edges = Vec::with_capacity(5 * n);
        for i in 1..=n {
            roles.extend([Role::GadgetA(i), Role::GadgetB(i), Role::GadgetC(i)]);
            colors.extend([1, 2, 3]);
            edges.extend([
                (c(i - 1), a(i)),
                (c(i - 1), b(i)),
                (a(i), b(i)),
                (a(i), c(i)),
                (b(i), c(i)),
            ]);
        }
        Gadget {
            edges,
            roles,
            colors,
        }
    }

    /// `R_n`: `Q_{n-1}` plus a pendant `c_n` on `c_{n-1}`, colored like the
    /// `a` vertices.
    pub fn r(n: usize) -> Gadget {
        let mut g = Gadget::q(n - 1);
        let tip = g.len();
        g.edges.push((3 * (n - 1), tip));
        g.roles.push(Role::GadgetC(n));
        g.colors.push(1);
        g
    }

    fn into_labeled(self) -> LabeledGraph {
        let graph = Graph::from_edges(self.len(), self.edges).expect("gadget edges are valid");
        let coloring = Coloring::new(3, self.colors).expect("gadget colors are in 1..=3");
        LabeledGraph {
            graph,
            roles: self.roles,
            canonical_coloring: Some(coloring),
            notes: Vec::new(),
        }
    }
}

/// `Q_n` on `3n + 1` vertices and `5n` edges; diameter `2n`.
pub fn gadget_q(n: usize) -> Result<LabeledGraph> {
    if n == 0 {
        return Err(Error::Precondition("Q_n needs n >= 1".into()));
    }
    Ok(Gadget::q(n).into_labeled())
}

/// `R_n`, i.e. `Q_{n-1}` with a pendant vertex; diameter `2n - 1`.
pub fn gadget_r(n: usize) -> Result<LabeledGraph> {
    if n < 2 {
        return Err(Error::Precondition("R_n needs n >= 2".into()));
    }
    Ok(Gadget::r(n).into_labeled())
}

/// `g` plus a new last vertex adjacent to everything. The canonical
/// coloring extends an optimal coloring of `g` by a fresh color on the apex
/// when `g` is small enough to color exactly.
pub fn apex_join(g: &Graph) -> LabeledGraph {
    let n = g.n();
    let edges = g.edges().chain((0..n).map(|v| (v, n)));
    let graph = Graph::from_edges(n + 1, edges).expect("apex edges are valid");
    let mut roles: Vec<Role> = (0..n).map(Role::Original).collect();
    roles.push(Role::Apex);
    let canonical_coloring = g.chromatic_number().ok().map(|(chi, f)| {
        let mut colors = f.colors().to_vec();
        colors.push(chi + 1);
        Coloring::new(chi + 1, colors).expect("colors in range")
    });
    LabeledGraph {
        graph,
        roles,
        canonical_coloring,
        notes: Vec::new(),
    }
}

/// Attaches `Q_{(d-1)/2}` (odd `d`) or `R_{d/2}` (even `d`) to a connected
/// graph by joining the gadget's `c_0` to every vertex of `g`. The result
/// has diameter exactly `d`, and `g` is `(k-1)`-colorable iff the result
/// has a strong conflict-free vertex-connection `k`-coloring, for `k >= 4`.
///
/// The vertices of `g` keep their ids; gadget vertices follow. The
/// canonical coloring colors `g` optimally, the gadget with `1, 2, 3` and
/// `c_0` with a fresh color `max(chi(g), 3) + 1`.
pub fn extend_diameter_highk(g: &Graph, d: usize) -> Result<LabeledGraph> {
    if d < 3 {
        return Err(Error::Precondition(format!("diameter {d} < 3")));
    }
    if g.n() == 0 {
        return Err(Error::Precondition("graph has no vertices".into()));
    }
    g.require_connected()?;
    let gadget = if d % 2 == 1 {
        Gadget::q((d - 1) / 2)
    } else {
        Gadget::r(d / 2)
    };
    let n = g.n();
    let edges = g
        .edges()
        .chain(gadget.edges.iter().map(|&(x, y)| (n + x, n + y)))
        .chain((0..n).map(|v| (v, n)));
    let graph = Graph::from_edges(n + gadget.len(), edges).expect("extension edges are valid");
    let mut roles: Vec<Role> = (0..n).map(Role::Original).collect();
    roles.extend(gadget.roles.iter().copied());

    let canonical_coloring = g.chromatic_number().ok().map(|(chi, f)| {
        let k = chi.max(3) + 1;
        let mut colors = f.colors().to_vec();
        colors.extend(gadget.colors.iter().copied());
        colors[n] = k;
        Coloring::new(k, colors).expect("colors in range")
    });
    let notes = vec![format!("extension for diameter {d}: c_0 is vertex {n}")];
    Ok(LabeledGraph {
        graph,
        roles,
        canonical_coloring,
        notes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verifier::verify_svcfc;

    #[test]
    fn q_examples() {
        let q1 = gadget_q(1).unwrap();
        assert_eq!((q1.graph.n(), q1.graph.m()), (4, 5));
        assert_eq!(q1.graph.diameter().unwrap(), 2);
        let q2 = gadget_q(2).unwrap();
        let c0 = q2.vertex_of(Role::GadgetC(0)).unwrap();
        let c2 = q2.vertex_of(Role::GadgetC(2)).unwrap();
        assert_eq!(q2.graph.bfs_distances(c0).unwrap()[c2], Some(4));
        let q4 = gadget_q(4).unwrap();
        assert_eq!(q4.graph.n(), 13);
        assert_eq!(q4.graph.diameter().unwrap(), 8);
        assert!(
            verify_svcfc(&q4.graph, q4.canonical_coloring.as_ref().unwrap())
                .unwrap()
                .strong
        );
        assert!(gadget_q(0).is_err());
    }

    #[test]
    fn r_examples() {
        assert_eq!(gadget_r(2).unwrap().graph.n(), 5);
        let r4 = gadget_r(4).unwrap();
        assert_eq!(r4.graph.diameter().unwrap(), 7);
        let r3 = gadget_r(3).unwrap();
        assert!(
            verify_svcfc(&r3.graph, r3.canonical_coloring.as_ref().unwrap())
                .unwrap()
                .strong
        );
        assert!(gadget_r(1).is_err());
        assert!(r4.labels_are_consistent());
    }

    #[test]
    fn apex_examples() {
        let a = apex_join(&Graph::path(4));
        assert_eq!(a.graph.diameter().unwrap(), 2);
        assert_eq!(
            apex_join(&Graph::cycle(5))
                .graph
                .chromatic_number()
                .unwrap()
                .0,
            4
        );
        let a = apex_join(&Graph::complete_bipartite(3, 3));
        assert_eq!(a.graph.chromatic_number().unwrap().0, 3);
        assert!(
            verify_svcfc(&a.graph, a.canonical_coloring.as_ref().unwrap())
                .unwrap()
                .strong
        );
    }

    #[test]
    fn highk_extension_examples() {
        let k3 = Graph::complete(3);
        let odd = extend_diameter_highk(&k3, 3).unwrap();
        assert_eq!(odd.graph.n(), 3 + 4);
        assert_eq!(odd.graph.diameter().unwrap(), 3);
        let even = extend_diameter_highk(&k3, 4).unwrap();
        assert_eq!(even.graph.n(), 3 + 5);
        assert_eq!(even.graph.diameter().unwrap(), 4);
        for d in 3..=8 {
            let ext = extend_diameter_highk(&Graph::path(3), d).unwrap();
            let gadget_size = if d % 2 == 1 {
                3 * ((d - 1) / 2) + 1
            } else {
                3 * (d / 2 - 1) + 2
            };
            assert_eq!(ext.graph.n(), 3 + gadget_size);
            assert_eq!(ext.graph.diameter().unwrap(), d);
            assert!(
                verify_svcfc(&ext.graph, ext.canonical_coloring.as_ref().unwrap())
                    .unwrap()
                    .strong
            );
        }
        assert!(extend_diameter_highk(&k3, 2).is_err());
        assert_eq!(
            extend_diameter_highk(&Graph::empty(2), 3).unwrap_err(),
            Error::NotConnected
        );
    }
}
