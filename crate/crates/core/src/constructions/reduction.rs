//! The 3-SAT reduction to strong conflict-free vertex-connection
//! 3-coloring, with witness translations in both directions.

use super::cnf::{CnfFormula, Lit};
use super::gadgets::Gadget;
use super::{LabeledGraph, Role};
use crate::error::{Error, Result};
use crate::graph::{Coloring, Graph};
use crate::verifier::verify_svcfc;

use serde::Serialize;

const A: usize = 0;
const B: usize = 1;
const C: usize = 2;
const D: usize = 3;

/// Note prefix recording the padding variable, parsed back by the witness
/// translations.
const DUMMY_NOTE: &str = "dummy variable ";

/// Whether to add a fresh variable when some clause mentions every variable.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum Padding {
    /// Pad only when needed.
    #[default]
    Auto,
    /// Build the graph from the formula exactly as given.
    Never,
}

fn literal_vertex(var: usize, positive: bool) -> usize {
    4 + 2 * (var - 1) + usize::from(!positive)
}

fn clause_base(num_vars: usize, j: usize) -> usize {
    4 + 2 * num_vars + 3 * (j - 1)
}

/// [`sat_to_svcfc_with`] using [`Padding::Auto`].
pub fn sat_to_svcfc(phi: &CnfFormula) -> Result<LabeledGraph> {
    sat_to_svcfc_with(phi, Padding::Auto)
}

/// Builds the reduction graph on `3m + 2n + 4` vertices: specials `a, b, c,
/// d`, then the literal pairs by variable, then the clause triangles
/// `c_j, c_j^a, c_j^b` by clause.
pub fn sat_to_svcfc_with(phi: &CnfFormula, padding: Padding) -> Result<LabeledGraph> {
    let m = phi.clauses().len();
    if m == 0 {
        return Err(Error::InvalidFormula("at least one clause required".into()));
    }
    let mut notes = Vec::new();
    let padded;
    let phi = if padding == Padding::Auto && phi.has_covering_clause() {
        padded = phi.with_extra_var();
        notes.push(format!("{DUMMY_NOTE}{}", padded.num_vars()));
        &padded
    } else {
        phi
    };
    let n = phi.num_vars();
    let total = 3 * m + 2 * n + 4;

    let mut roles = vec![
        Role::SpecialA,
        Role::SpecialB,
        Role::SpecialC,
        Role::SpecialD,
    ];
    let mut edges = vec![(A, B), (A, C), (A, D), (B, D), (C, D)];
    for x in 1..=n {
        let (pos, neg) = (literal_vertex(x, true), literal_vertex(x, false));
        roles.push(Role::Literal {
            var: x,
            positive: true,
        });
        roles.push(Role::Literal {
            var: x,
            positive: false,
        });
        edges.extend([(pos, neg), (A, pos), (A, neg)]);
    }
    for (j, clause) in phi.clauses().iter().enumerate() {
        let j = j + 1;
        let cj = clause_base(n, j);
        roles.extend([Role::Clause(j), Role::ClauseA(j), Role::ClauseB(j)]);
        edges.extend([
            (cj, cj + 1),
            (cj, cj + 2),
            (cj + 1, cj + 2),
            (cj, C),
            (cj + 1, A),
            (cj + 2, B),
        ]);
        edges.extend(
            clause
                .iter()
                .map(|l| (cj, literal_vertex(l.var(), l.is_positive()))),
        );
        notes.push(format!("clause {j} = {}", clause_text(clause)));
    }
    debug_assert_eq!(roles.len(), total);
    let graph = Graph::from_edges(total, edges)?;
    Ok(LabeledGraph {
        graph,
        roles,
        canonical_coloring: None,
        notes,
    })
}

fn clause_text(clause: &[Lit]) -> String {
    let lits: Vec<String> = clause.iter().map(Lit::to_string).collect();
    format!("({})", lits.join(" | "))
}

/// Shape of a reduction graph, read back from its roles and adjacency.
struct Layout {
    num_vars: usize,
    dummy: Option<usize>,
    phi: CnfFormula,
}

fn layout(rg: &LabeledGraph) -> Result<Layout> {
    let bad = |why: &str| Error::Precondition(format!("not a reduction graph: {why}"));
    if rg.roles.len() < 4
        || rg.roles[..4]
            != [
                Role::SpecialA,
                Role::SpecialB,
                Role::SpecialC,
                Role::SpecialD,
            ]
    {
        return Err(bad("special vertices missing"));
    }
    let num_vars = rg
        .roles
        .iter()
        .filter(|r| matches!(r, Role::Literal { positive: true, .. }))
        .count();
    let num_clauses = rg
        .roles
        .iter()
        .filter(|r| matches!(r, Role::Clause(_)))
        .count();
    if num_vars == 0 || num_clauses == 0 || rg.graph.n() < 3 * num_clauses + 2 * num_vars + 4 {
        return Err(bad("no literals or clauses"));
    }
    for x in 1..=num_vars {
        for positive in [true, false] {
            if rg.roles[literal_vertex(x, positive)] != (Role::Literal { var: x, positive }) {
                return Err(bad("literal vertices out of place"));
            }
        }
    }
    let mut clauses = Vec::with_capacity(num_clauses);
    for j in 1..=num_clauses {
        let cj = clause_base(num_vars, j);
        if rg.roles[cj..cj + 3] != [Role::Clause(j), Role::ClauseA(j), Role::ClauseB(j)] {
            return Err(bad("clause vertices out of place"));
        }
        let lits = rg
            .graph
            .neighbors(cj)
            .iter()
            .filter_map(|&w| match rg.roles[w] {
                Role::Literal { var, positive } => Some(Lit::new(var, positive)),
                _ => None,
            })
            .collect();
        clauses.push(lits);
    }
    let dummy = rg
        .notes
        .iter()
        .find_map(|s| s.strip_prefix(DUMMY_NOTE)?.parse().ok());
    let phi = CnfFormula::new(num_vars, clauses)?;
    Ok(Layout {
        num_vars,
        dummy,
        phi,
    })
}

/// The formula a reduction graph encodes, including any padding variable.
pub fn embedded_formula(rg: &LabeledGraph) -> Result<CnfFormula> {
    Ok(layout(rg)?.phi)
}

/// A proper 3-coloring by the three independent sets `{v_x, c_j^a, b, c}`,
/// `{v_x̄, c_j^b, d}` and `{c_j, a}`. Proper but not necessarily strong.
pub fn partition_coloring(rg: &LabeledGraph) -> Result<Coloring> {
    let colors = rg
        .roles
        .iter()
        .map(|r| match r {
            Role::Literal { positive: true, .. }
            | Role::ClauseA(_)
            | Role::SpecialB
            | Role::SpecialC => Ok(3),
            Role::Literal {
                positive: false, ..
            }
            | Role::ClauseB(_)
            | Role::SpecialD => Ok(1),
            Role::Clause(_) | Role::SpecialA => Ok(2),
            other => Err(Error::Precondition(format!(
                "unexpected role {other} in reduction graph"
            ))),
        })
        .collect::<Result<Vec<_>>>()?;
    Coloring::new(3, colors)
}

/// The coloring induced by a satisfying assignment: true literals get 1,
/// false literals 3, `a` and every `c_j` get 2, `b, c, c_j^a` get 3 and
/// `d, c_j^b` get 1. A padding variable missing from `assignment` is true.
pub fn assignment_to_coloring(rg: &LabeledGraph, assignment: &[bool]) -> Result<Coloring> {
    let lay = layout(rg)?;
    let mut full = assignment.to_vec();
    if lay.dummy == Some(lay.num_vars) && full.len() + 1 == lay.num_vars {
        full.push(true);
    }
    if full.len() != lay.num_vars {
        return Err(Error::Precondition(format!(
            "assignment has {} values, formula has {} variables",
            assignment.len(),
            lay.num_vars
        )));
    }
    if let Some(j) = lay.phi.first_unsatisfied(&full) {
        return Err(Error::Unsatisfied(j));
    }
    let colors = rg
        .roles
        .iter()
        .map(|r| match *r {
            Role::Literal { var, positive } => Ok(if full[var - 1] == positive { 1 } else { 3 }),
            Role::SpecialA | Role::Clause(_) => Ok(2),
            Role::SpecialB | Role::SpecialC | Role::ClauseA(_) => Ok(3),
            Role::SpecialD | Role::ClauseB(_) => Ok(1),
            other => Err(Error::Precondition(format!(
                "unexpected role {other} in reduction graph"
            ))),
        })
        .collect::<Result<Vec<_>>>()?;
    Coloring::new(3, colors)
}

/// Reads a satisfying assignment off a strong 3-coloring: after permuting
/// colors so that `a` has 2 and `d` has 1, variable `x` is true iff `v_x`
/// has color 1. The padding variable, if any, is dropped.
pub fn coloring_to_assignment(rg: &LabeledGraph, f: &Coloring) -> Result<Vec<bool>> {
    let lay = layout(rg)?;
    f.check_len(&rg.graph)?;
    if f.colors().iter().any(|&c| c > 3) {
        return Err(Error::InvalidColoring("more than three colors".into()));
    }
    let verdict = verify_svcfc(&rg.graph, f)?;
    if let Some((u, v)) = verdict.failing_pair {
        return Err(Error::InvalidColoring(format!(
            "pair ({u}, {v}) has no conflict-free shortest path"
        )));
    }
    let (fa, fd) = (f.color(A), f.color(D));
    let third = 6 - fa - fd;
    if f.color(B) != third || f.color(C) != third {
        return Err(Error::InvalidColoring(
            "b and c must share the third color".into(),
        ));
    }
    let mut assignment: Vec<bool> = (1..=lay.num_vars)
        .map(|x| f.color(literal_vertex(x, true)) == fd)
        .collect();
    if let Some(j) = lay.phi.first_unsatisfied(&assignment) {
        return Err(Error::Unsatisfied(j));
    }
    if lay.dummy == Some(lay.num_vars) {
        assignment.pop();
    }
    Ok(assignment)
}

/// Glues `Q_{(d-2)/2}` (even `d`) or `R_{(d-1)/2}` (odd `d`) onto a
/// reduction graph by identifying the gadget's `c_0` with `a`. Gadget
/// vertices other than `c_0` are appended. The result has diameter `d`.
pub fn extend_diameter_k3(rg: &LabeledGraph, d: usize) -> Result<LabeledGraph> {
    if d < 4 {
        return Err(Error::Precondition(format!("diameter {d} < 4")));
    }
    layout(rg)?;
    let gadget = if d.is_multiple_of(2) {
        Gadget::q((d - 2) / 2)
    } else {
        Gadget::r((d - 1) / 2)
    };
    let n = rg.graph.n();
    let place = |x: usize| if x == 0 { A } else { n + x - 1 };
    let edges = rg
        .graph
        .edges()
        .chain(gadget.edges.iter().map(|&(x, y)| (place(x), place(y))));
    let graph = Graph::from_edges(n + gadget.len() - 1, edges)?;
    let mut roles = rg.roles.clone();
    roles.extend(gadget.roles[1..].iter().copied());

    // Permute gadget colors so c_0 agrees with a, and keep the result only
    // if it is still strong.
    let canonical_coloring = rg.canonical_coloring.as_ref().and_then(|f| {
        let fa = f.color(A);
        let swap = |c: usize| {
            if c == 3 {
                fa
            } else if c == fa {
                3
            } else {
                c
            }
        };
        let mut colors = f.colors().to_vec();
        colors.extend(gadget.colors[1..].iter().map(|&c| swap(c)));
        let g = Coloring::new(f.k().max(3), colors).ok()?;
        verify_svcfc(&graph, &g).ok()?.strong.then_some(g)
    });
    let mut notes = rg.notes.clone();
    notes.push(format!("extension for diameter {d}: c_0 identified with a"));
    Ok(LabeledGraph {
        graph,
        roles,
        canonical_coloring,
        notes,
    })
}

/// Checked structural facts about a (possibly extended) reduction graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ReductionCertificate {
    pub vertices: usize,
    pub edges: usize,
    /// A proper 3-coloring; with the triangle `a, b, d` it pins chi at 3.
    pub three_coloring: Coloring,
    pub triangle: [usize; 3],
    pub diameter: usize,
    pub radius: usize,
    /// A minimum dominating set when the domination number is at most 3.
    pub dominating_set: Option<Vec<usize>>,
}

/// Computes and checks the certificate. The 3-coloring is the partition
/// coloring on the reduction vertices, extended greedily over gadget
/// vertices in index order.
pub fn reduction_certificate(lg: &LabeledGraph) -> Result<ReductionCertificate> {
    let g = &lg.graph;
    let mut colors = vec![0; g.n()];
    for (v, role) in lg.roles.iter().enumerate() {
        colors[v] = match role {
            Role::Literal { positive: true, .. }
            | Role::ClauseA(_)
            | Role::SpecialB
            | Role::SpecialC => 3,
            Role::Literal {
                positive: false, ..
            }
            | Role::ClauseB(_)
            | Role::SpecialD => 1,
            Role::Clause(_) | Role::SpecialA => 2,
            _ => 0,
        };
    }
    for v in 0..g.n() {
        if colors[v] == 0 {
            colors[v] = (1..=3)
                .find(|&c| g.neighbors(v).iter().all(|&w| colors[w] != c))
                .ok_or_else(|| {
                    Error::Precondition(format!("greedy 3-coloring stuck at vertex {v}"))
                })?;
        }
    }
    let three_coloring = Coloring::new(3, colors)?;
    if let Some((u, v)) = three_coloring.first_conflict(g)? {
        return Err(Error::NotProper(u, v));
    }
    let triangle = [A, B, D];
    if !(g.has_edge(A, B) && g.has_edge(A, D) && g.has_edge(B, D)) {
        return Err(Error::Precondition(
            "special triangle a, b, d missing".into(),
        ));
    }
    let dominating_set = (1..=3).find_map(|t| g.domination_number_at_most(t));
    if let Some(set) = &dominating_set {
        let mut covered = vec![false; g.n()];
        for &x in set {
            covered[x] = true;
            for &w in g.neighbors(x) {
                covered[w] = true;
            }
        }
        if covered.contains(&false) {
            return Err(Error::Precondition("dominating set check failed".into()));
        }
    }
    Ok(ReductionCertificate {
        vertices: g.n(),
        edges: g.m(),
        three_coloring,
        triangle,
        diameter: g.diameter()?,
        radius: g.radius()?,
        dominating_set,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::sat_brute_force;
    use crate::verifier::LevelGraph;

    fn sample() -> CnfFormula {
        CnfFormula::from_dimacs(3, &[&[-1, 2, 3], &[1, -2, 3], &[1, 2, -3], &[-1, -2, -3]]).unwrap()
    }

    #[test]
    fn sample_unpadded_certificates() {
        let rg = sat_to_svcfc_with(&sample(), Padding::Never).unwrap();
        let g = &rg.graph;
        assert_eq!(g.n(), 22);
        assert_eq!(g.diameter().unwrap(), 3);
        assert_eq!(g.radius().unwrap(), 2);
        assert_eq!(g.domination_number_at_most(3), Some(vec![A, B, C]));
        assert_eq!(g.domination_number_at_most(2), None);
        assert_eq!(g.chromatic_number().unwrap().0, 3);
        assert!(g.is_proper(&partition_coloring(&rg).unwrap()).unwrap());
        assert!(rg.labels_are_consistent());
        assert_eq!(embedded_formula(&rg).unwrap(), sample());
    }

    #[test]
    fn sample_is_padded_by_default() {
        let rg = sat_to_svcfc(&sample()).unwrap();
        assert_eq!(rg.graph.n(), 3 * 4 + 2 * 4 + 4);
        assert!(rg.notes.iter().any(|s| s == "dummy variable 4"));
        let g = &rg.graph;
        assert_eq!((g.diameter().unwrap(), g.radius().unwrap()), (3, 2));
        assert!(g.domination_number_at_most(2).is_none());

        let u = rg.vertex_of(Role::ClauseB(1)).unwrap();
        let v = rg
            .vertex_of(Role::Literal {
                var: 4,
                positive: true,
            })
            .unwrap();
        let lg = LevelGraph::build(g, u, v).unwrap();
        let mut paths = crate::verifier::enumerate_shortest_paths(g, u, v, 100).unwrap();
        paths.sort();
        assert_eq!(paths, vec![vec![u, B, A, v], vec![u, u - 1, A, v]]);
        assert_eq!(lg.distance(), 3);
    }

    #[test]
    fn single_covering_clause_pads_to_fifteen() {
        let phi = CnfFormula::from_dimacs(3, &[&[1, 2, 3]]).unwrap();
        assert_eq!(sat_to_svcfc(&phi).unwrap().graph.n(), 15);
        let empty = CnfFormula::new(2, vec![]).unwrap();
        assert!(sat_to_svcfc(&empty).is_err());
    }

    #[test]
    fn witness_round_trip() {
        let rg = sat_to_svcfc(&sample()).unwrap();
        let f = assignment_to_coloring(&rg, &[true, true, false]).unwrap();
        assert!(verify_svcfc(&rg.graph, &f).unwrap().strong);
        assert_eq!(
            coloring_to_assignment(&rg, &f).unwrap(),
            vec![true, true, false]
        );
        assert_eq!(
            assignment_to_coloring(&rg, &[true, true, true]).unwrap_err(),
            Error::Unsatisfied(4)
        );

        // A relabeled witness decodes the same way.
        let permuted: Vec<usize> = f.colors().iter().map(|&c| [0, 3, 1, 2][c]).collect();
        let g = Coloring::new(3, permuted).unwrap();
        assert_eq!(
            coloring_to_assignment(&rg, &g).unwrap(),
            vec![true, true, false]
        );
        let sat = sat_brute_force(&sample()).unwrap().unwrap();
        let h = assignment_to_coloring(&rg, &sat).unwrap();
        assert!(verify_svcfc(&rg.graph, &h).unwrap().strong);
    }

    #[test]
    fn k3_extension_examples() {
        let rg = sat_to_svcfc(&sample()).unwrap();
        let n = rg.graph.n();
        let four = extend_diameter_k3(&rg, 4).unwrap();
        assert_eq!(four.graph.n(), n + 3);
        assert_eq!(four.graph.diameter().unwrap(), 4);
        let five = extend_diameter_k3(&rg, 5).unwrap();
        assert_eq!(five.graph.n(), n + 4);
        assert_eq!(five.graph.diameter().unwrap(), 5);
        assert_eq!(
            extend_diameter_k3(&rg, 6)
                .unwrap()
                .graph
                .diameter()
                .unwrap(),
            6
        );
        assert!(extend_diameter_k3(&rg, 3).is_err());
        assert!(four.labels_are_consistent());
        for ext in [&four, &five] {
            let cert = reduction_certificate(ext).unwrap();
            assert_eq!(cert.three_coloring.k(), 3);
            assert_eq!(cert.diameter, ext.graph.diameter().unwrap());
        }
        let cert = reduction_certificate(&rg).unwrap();
        assert_eq!((cert.diameter, cert.radius), (3, 2));
        assert_eq!(cert.dominating_set, Some(vec![A, B, C]));

        let mut witnessed = rg.clone();
        witnessed.canonical_coloring =
            Some(assignment_to_coloring(&rg, &[true, true, false]).unwrap());
        for d in 4..=7 {
            let ext = extend_diameter_k3(&witnessed, d).unwrap();
            let f = ext
                .canonical_coloring
                .expect("extended witness stays strong");
            assert!(verify_svcfc(&ext.graph, &f).unwrap().strong);
        }
    }
}
