use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::generate::*;
use super::{Ctx, Outcome};
use crate::constructions::{
    assignment_to_coloring, coloring_to_assignment, embedded_formula, extend_diameter_highk,
    extend_diameter_k3, gadget_q, gadget_r, partition_coloring, sat_brute_force, sat_to_svcfc,
    sat_to_svcfc_with, CnfFormula, LabeledGraph, Padding, Role,
};
use crate::error::Error;
use crate::graph::{Coloring, Graph};
use crate::solvers::{solve_cobipartite, solve_split, svcfc_exact, svcfc_exact_with, ExactOptions};
use crate::verifier::{
    enumerate_shortest_paths, has_strong_cf_path, is_conflict_free_path, verify_svcfc,
};

type Check = fn(&Ctx) -> Outcome;

/// Every acceptance criterion with its id and short name.
pub(crate) static CRITERIA: [(u8, &str, Check); 11] = [
    (
        1,
        "verifier agrees with path-enumeration oracle",
        verifier_oracle,
    ),
    (
        2,
        "exact svcfc of paths matches ceil(log2(n+1))",
        path_formula,
    ),
    (
        3,
        "svcfc <= 2 iff complete bipartite",
        complete_bipartite_iff,
    ),
    (4, "diameter <= 2 implies svcfc = chi", diameter_two),
    (5, "Q_n and R_n diameters and 3-colorings", gadgets),
    (6, "reduction graph certificates", reduction_certificates),
    (7, "reduction round trip", reduction_round_trip),
    (8, "split graphs solved optimally", split_graphs),
    (
        9,
        "co-bipartite graphs solved optimally",
        cobipartite_graphs,
    ),
    (10, "diameter extensions", extensions),
    (11, "non-monotonicity exhibit", non_monotone),
];

fn rng_for(ctx: &Ctx, stream: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(ctx.seed ^ stream.wrapping_mul(0x9e37_79b9_7f4a_7c15))
}

fn err(e: Error) -> String {
    e.to_string()
}

fn ensure(cond: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

/// Sums per-item check counts in parallel, stopping on the first failure.
fn par_sum<T: Sync>(
    ctx: &Ctx,
    items: &[T],
    f: impl Fn(usize, &T) -> Result<u64, String> + Sync,
) -> Result<u64, String> {
    items
        .par_iter()
        .enumerate()
        .map(|(i, t)| {
            ctx.check_time()?;
            f(i, t)
        })
        .try_reduce(|| 0, |a, b| Ok(a + b))
}

fn small_connected_graphs(max_n: usize) -> Vec<Graph> {
    (1..=max_n).flat_map(connected_graphs).collect()
}

fn edges_of(g: &Graph) -> String {
    format!("n={} edges={:?}", g.n(), g.edges().collect::<Vec<_>>())
}

fn verifier_oracle(ctx: &Ctx) -> Outcome {
    let graphs = small_connected_graphs(6);
    let checks = par_sum(ctx, &graphs, |i, g| {
        let mut rng = rng_for(ctx, i as u64);
        let mut colorings: Vec<Coloring> = all_proper_maps(g, 3)
            .into_iter()
            .map(|c| Coloring::new(3, c).expect("in range"))
            .collect();
        for _ in 0..50 {
            match random_proper_k_coloring(g, 4, &mut rng) {
                Some(c) => colorings.push(Coloring::new(4, c).expect("in range")),
                None => break,
            }
        }
        let n = g.n();
        let pairs: Vec<(usize, usize, Vec<Vec<usize>>)> = (0..n)
            .flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v)))
            .map(|(u, v)| {
                Ok((
                    u,
                    v,
                    enumerate_shortest_paths(g, u, v, 10_000).map_err(err)?,
                ))
            })
            .collect::<Result<_, String>>()?;
        let mut checks = 0;
        for f in &colorings {
            for (u, v, paths) in &pairs {
                let oracle = paths.iter().any(|p| is_conflict_free_path(f, p));
                let fast = has_strong_cf_path(g, f, *u, *v).map_err(err)?;
                ensure(fast.is_some() == oracle, || {
                    format!(
                        "pair ({u}, {v}) under {:?} on {}: verifier {}, oracle {oracle}",
                        f.colors(),
                        edges_of(g),
                        fast.is_some()
                    )
                })?;
                if let Some(w) = fast {
                    let unique = w.path.iter().filter(|&&x| f.color(x) == w.color).count() == 1;
                    ensure(paths.contains(&w.path) && unique, || {
                        format!("bad witness {w:?} for ({u}, {v}) on {}", edges_of(g))
                    })?;
                }
                checks += 1;
            }
        }
        Ok(checks)
    })?;
    Ok((
        checks,
        format!(
            "{} graphs on 1..=6 vertices, all ordered pairs",
            graphs.len()
        ),
    ))
}

fn path_formula(_: &Ctx) -> Outcome {
    let mut seen = Vec::new();
    for n in 1..=12usize {
        let expected = (0..).find(|&k| 1usize << k > n).expect("finite");
        let got = svcfc_exact(&Graph::path(n), None).map_err(err)?.k;
        ensure(got == expected, || {
            format!("P_{n}: exact {got}, formula {expected}")
        })?;
        seen.push(got);
    }
    ensure(seen[6] == 3 && seen[7] == 4, || {
        "boundary P_7 -> 3, P_8 -> 4 violated".into()
    })?;
    Ok((12, format!("values for n=1..12: {seen:?}")))
}

fn complete_bipartite_iff(ctx: &Ctx) -> Outcome {
    let graphs = small_connected_graphs(6);
    let checks = par_sum(ctx, &graphs, |_, g| {
        let two_colorable_strong = match g.bipartition() {
            Some((x, _)) => {
                let mut colors = vec![2; g.n()];
                for v in x {
                    colors[v] = 1;
                }
                verify_svcfc(g, &Coloring::new(2, colors).expect("in range"))
                    .map_err(err)?
                    .strong
            }
            None => false,
        };
        ensure(two_colorable_strong == g.is_complete_bipartite(), || {
            format!("{}: strong 2-coloring {two_colorable_strong}", edges_of(g))
        })?;
        Ok(1)
    })?;
    Ok((checks, "every connected graph on 1..=6 vertices".into()))
}

fn diameter_two(ctx: &Ctx) -> Outcome {
    let graphs: Vec<Graph> = small_connected_graphs(6)
        .into_iter()
        .filter(|g| g.diameter().is_ok_and(|d| d <= 2))
        .collect();
    let checks = par_sum(ctx, &graphs, |_, g| {
        let k = svcfc_exact(g, None).map_err(err)?.k;
        let chi = g.chromatic_number().map_err(err)?.0;
        ensure(k == chi, || {
            format!("{}: svcfc {k}, chi {chi}", edges_of(g))
        })?;
        Ok(1)
    })?;
    Ok((
        checks,
        "connected graphs on 1..=6 vertices with diameter <= 2".into(),
    ))
}

fn check_gadget(name: &str, lg: &LabeledGraph, diameter: usize) -> Result<(), String> {
    let d = lg.graph.diameter().map_err(err)?;
    ensure(d == diameter, || {
        format!("{name}: diameter {d}, expected {diameter}")
    })?;
    let f = lg
        .canonical_coloring
        .as_ref()
        .ok_or_else(|| format!("{name}: no canonical coloring"))?;
    ensure(
        f.k() == 3 && verify_svcfc(&lg.graph, f).map_err(err)?.strong,
        || format!("{name}: canonical coloring not a strong 3-coloring"),
    )
}

fn gadgets(_: &Ctx) -> Outcome {
    let mut checks = 0;
    for n in 1..=6 {
        check_gadget(&format!("Q_{n}"), &gadget_q(n).map_err(err)?, 2 * n)?;
        checks += 1;
        if n >= 2 {
            check_gadget(&format!("R_{n}"), &gadget_r(n).map_err(err)?, 2 * n - 1)?;
            checks += 1;
        }
    }
    Ok((checks, "Q_1..Q_6 and R_2..R_6".into()))
}

pub(crate) fn sample_formula() -> CnfFormula {
    CnfFormula::from_dimacs(3, &[&[-1, 2, 3], &[1, -2, 3], &[1, 2, -3], &[-1, -2, -3]])
        .expect("valid")
}

fn certificate_checks(rg: &LabeledGraph) -> Result<(), String> {
    let phi = embedded_formula(rg).map_err(err)?;
    let (n, m) = (phi.num_vars(), phi.clauses().len());
    let g = &rg.graph;
    let label = format!("{phi} (n={n}, m={m})");
    ensure(g.n() == 3 * m + 2 * n + 4, || {
        format!("{label}: {} vertices", g.n())
    })?;
    let chi = g.chromatic_number().map_err(err)?.0;
    ensure(chi == 3, || format!("{label}: chi {chi}"))?;
    ensure(
        g.is_proper(&partition_coloring(rg).map_err(err)?)
            .map_err(err)?,
        || format!("{label}: partition coloring improper"),
    )?;
    let (d, r) = (g.diameter().map_err(err)?, g.radius().map_err(err)?);
    ensure(d == 3 && r == 2, || {
        format!("{label}: diameter {d}, radius {r}")
    })?;
    ensure(g.domination_number_at_most(3).is_some(), || {
        format!("{label}: no dominating set of size 3")
    })?;
    ensure(g.domination_number_at_most(2).is_none(), || {
        format!("{label}: dominating set of size 2")
    })
}

fn reduction_certificates(ctx: &Ctx) -> Outcome {
    let mut instances = vec![
        sat_to_svcfc_with(&sample_formula(), Padding::Never).map_err(err)?,
        sat_to_svcfc(&sample_formula()).map_err(err)?,
    ];
    ensure(instances[0].graph.n() == 22, || {
        "unpadded example instance must have 22 vertices".into()
    })?;
    let mut rng = rng_for(ctx, 6);
    for _ in 0..20 {
        // One-clause formulas are dominated by {a, c_1}; the bound needs m >= 2.
        instances.push(sat_to_svcfc(&random_cnf(4, 2, 4, &mut rng)).map_err(err)?);
    }
    let checks = par_sum(ctx, &instances, |_, rg| certificate_checks(rg).map(|_| 1))?;
    Ok((
        checks,
        "example formula unpadded and padded, plus 20 random formulas with 2..=4 clauses".into(),
    ))
}

fn exact3(g: &Graph) -> Result<Option<Coloring>, String> {
    let opts = ExactOptions {
        cap: 40,
        max_k: Some(3),
        ..ExactOptions::default()
    };
    match svcfc_exact_with(g, &opts) {
        Ok(r) => Ok(Some(r.coloring)),
        Err(Error::ExceedsMaxK(_)) => Ok(None),
        Err(e) => Err(err(e)),
    }
}

fn reduction_round_trip(ctx: &Ctx) -> Outcome {
    let corpus = cnf_corpus(3, 3);
    let checks = par_sum(ctx, &corpus, |_, phi| {
        let rg = sat_to_svcfc(phi).map_err(err)?;
        let sat = sat_brute_force(phi).map_err(err)?;
        let witness = exact3(&rg.graph)?;
        ensure(sat.is_some() == witness.is_some(), || {
            format!(
                "{phi}: satisfiable {}, svcfc <= 3 {}",
                sat.is_some(),
                witness.is_some()
            )
        })?;
        let mut checks = 1;
        let n = phi.num_vars();
        for mask in 0u32..1 << n {
            let assignment: Vec<bool> = (0..n).map(|i| mask >> i & 1 == 1).collect();
            if !phi.is_satisfied_by(&assignment) {
                continue;
            }
            let f = assignment_to_coloring(&rg, &assignment).map_err(err)?;
            ensure(verify_svcfc(&rg.graph, &f).map_err(err)?.strong, || {
                format!("{phi}: coloring of {assignment:?} is not strong")
            })?;
            checks += 1;
        }
        if let Some(f) = witness {
            let a = rg.vertex_of(Role::SpecialA).expect("special vertex");
            let clauses_with_a = rg
                .roles
                .iter()
                .enumerate()
                .filter(|(_, r)| matches!(r, Role::Clause(_)))
                .all(|(v, _)| f.color(v) == f.color(a));
            ensure(clauses_with_a, || {
                format!("{phi}: a clause vertex leaves a's color class")
            })?;
            let assignment = coloring_to_assignment(&rg, &f).map_err(|e| format!("{phi}: {e}"))?;
            ensure(phi.is_satisfied_by(&assignment), || {
                format!("{phi}: decoded {assignment:?} fails")
            })?;
            checks += 1;
        }
        Ok(checks)
    })?;
    Ok((
        checks,
        format!(
            "{} formulas with <= 3 variables and <= 3 distinct clauses",
            corpus.len()
        ),
    ))
}

fn split_graphs(ctx: &Ctx) -> Outcome {
    let seeds: Vec<u64> = (0..200).collect();
    let checks = par_sum(ctx, &seeds, |_, &s| {
        let g = random_split_graph(12, &mut rng_for(ctx, 800 + s));
        let n = g.n();
        let res = solve_split(&g).map_err(err)?;
        ensure(verify_svcfc(&g, &res.coloring).map_err(err)?.strong, || {
            format!("{}: not strong", edges_of(&g))
        })?;
        let clique = g.split_partition().expect("split").clique.len();
        let star = n >= 3 && g.m() == n - 1 && (0..n).any(|v| g.degree(v) == n - 1);
        let expected = if g.is_complete() {
            n
        } else if star {
            2
        } else if clique == 2 {
            3
        } else {
            clique
        };
        ensure(res.k == expected, || {
            format!(
                "{}: {} colors, case analysis says {expected}",
                edges_of(&g),
                res.k
            )
        })?;
        let exact = svcfc_exact(&g, None).map_err(err)?.k;
        ensure(res.k == exact, || {
            format!("{}: solver {}, exact {exact}", edges_of(&g), res.k)
        })?;
        Ok(1)
    })?;
    Ok((checks, "200 random connected split graphs, n <= 12".into()))
}

fn cobipartite_graphs(ctx: &Ctx) -> Outcome {
    let seeds: Vec<u64> = (0..200).collect();
    let checks = par_sum(ctx, &seeds, |_, &s| {
        let mut rng = rng_for(ctx, 900 + s);
        let g = random_cobipartite_graph(12, &mut rng);
        let res = solve_cobipartite(&g).map_err(err)?;
        ensure(verify_svcfc(&g, &res.coloring).map_err(err)?.strong, || {
            format!("{}: not strong", edges_of(&g))
        })?;
        let exact = svcfc_exact(&g, None).map_err(err)?.k;
        ensure(res.k == exact, || {
            format!("{}: solver {}, exact {exact}", edges_of(&g), res.k)
        })?;
        let mut checks = 1;
        if g.cobipartite_partition()
            .expect("co-bipartite")
            .cross_edges
            .len()
            >= 2
        {
            for _ in 0..20 {
                let f = Coloring::from_colors(random_proper_coloring(&g, &mut rng)).map_err(err)?;
                ensure(verify_svcfc(&g, &f).map_err(err)?.strong, || {
                    format!(
                        "{}: proper coloring {:?} not strong",
                        edges_of(&g),
                        f.colors()
                    )
                })?;
                checks += 1;
            }
        }
        Ok(checks)
    })?;
    Ok((
        checks,
        "200 random connected co-bipartite graphs, n <= 12".into(),
    ))
}

fn at_most(g: &Graph, k: usize) -> Result<bool, String> {
    let opts = ExactOptions {
        cap: 40,
        max_k: Some(k),
        ..ExactOptions::default()
    };
    match svcfc_exact_with(g, &opts) {
        Ok(_) => Ok(true),
        Err(Error::ExceedsMaxK(_)) => Ok(false),
        Err(e) => Err(err(e)),
    }
}

fn extensions(ctx: &Ctx) -> Outcome {
    let mut rng = rng_for(ctx, 10);
    let mut bases = vec![
        Graph::path(2),
        Graph::path(4),
        Graph::complete(3),
        Graph::cycle(5),
        Graph::star(3),
        Graph::complete_bipartite(2, 3),
        Graph::complete(4),
        crate::constructions::apex_join(&Graph::cycle(5)).graph,
    ];
    for n in [5, 6, 7, 8] {
        bases.push(random_connected_graph(n, 0.45, &mut rng));
    }
    let highk: Vec<(Graph, usize)> = bases
        .into_iter()
        .flat_map(|g| (3..=6).map(move |d| (g.clone(), d)))
        .collect();
    let positives = std::sync::atomic::AtomicU64::new(0);
    let mut checks = par_sum(ctx, &highk, |_, (g, d)| {
        let ext = extend_diameter_highk(g, *d).map_err(err)?;
        let got = ext.graph.diameter().map_err(err)?;
        ensure(got == *d, || {
            format!("{} extended to {d}: diameter {got}", edges_of(g))
        })?;
        let colorable = g.chromatic_number().map_err(err)?.0 <= 3;
        let strong4 = at_most(&ext.graph, 4)?;
        ensure(colorable == strong4, || {
            format!(
                "{} at d={d}: chi <= 3 {colorable}, svcfc <= 4 {strong4}",
                edges_of(g)
            )
        })?;
        if colorable {
            positives.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
        }
        Ok(1)
    })?;

    let formulas = [
        CnfFormula::from_dimacs(2, &[&[1]]).expect("valid"),
        CnfFormula::from_dimacs(2, &[&[1], &[-1]]).expect("valid"),
        CnfFormula::from_dimacs(3, &[&[1, 2], &[-1], &[-2]]).expect("valid"),
        CnfFormula::from_dimacs(3, &[&[1, -2], &[2, 3]]).expect("valid"),
    ];
    let k3: Vec<(usize, usize)> = (0..formulas.len())
        .flat_map(|i| (4..=6).map(move |d| (i, d)))
        .collect();
    checks += par_sum(ctx, &k3, |_, &(i, d)| {
        let rg = sat_to_svcfc(&formulas[i]).map_err(err)?;
        let ext = extend_diameter_k3(&rg, d).map_err(err)?;
        let got = ext.graph.diameter().map_err(err)?;
        ensure(got == d, || {
            format!("{} extended to {d}: diameter {got}", formulas[i])
        })?;
        let (base, extended) = (at_most(&rg.graph, 3)?, at_most(&ext.graph, 3)?);
        ensure(base == extended, || {
            format!("{} at d={d}: base {base}, extended {extended}", formulas[i])
        })?;
        Ok(1)
    })?;
    let positives = positives.into_inner();
    Ok((
        checks,
        format!(
            "{} high-k extensions ({positives} with chi <= 3), {} three-color extensions",
            highk.len(),
            k3.len()
        ),
    ))
}

fn exhibit(g: &Graph) -> Result<Option<String>, String> {
    let k = svcfc_exact(g, None).map_err(err)?.k;
    for v in 0..g.n() {
        let h = g.remove_vertex(v);
        if !h.is_connected() {
            continue;
        }
        let kh = svcfc_exact(&h, None).map_err(err)?.k;
        if kh > k {
            return Ok(Some(format!(
                "{}, removing vertex {v}: svcfc {k} -> {kh}",
                edges_of(g)
            )));
        }
    }
    Ok(None)
}

fn non_monotone(ctx: &Ctx) -> Outcome {
    let mut checks = 0;
    for n in 2..=6 {
        for g in connected_graphs(n) {
            ctx.check_time()?;
            checks += 1;
            if let Some(found) = exhibit(&g)? {
                return Ok((checks, found));
            }
        }
    }
    let mut rng = rng_for(ctx, 11);
    for _ in 0..20_000 {
        ctx.check_time()?;
        let p = rng.gen_range(0.2..0.7);
        let g = random_connected_graph(7, p, &mut rng);
        checks += 1;
        if let Some(found) = exhibit(&g)? {
            return Ok((checks, found));
        }
    }
    Err(format!("no exhibit among {checks} graphs"))
}
