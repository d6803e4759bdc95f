use std::fmt::Write;
use std::path::{Path, PathBuf};
use std::time::Duration;

use serde_json::{json, Value};
use svcfc_core::constructions::{
    apex_join, extend_diameter_highk, extend_diameter_k3, gadget_q, gadget_r,
    reduction_certificate, sat_to_svcfc_with, Padding, ReductionCertificate,
};
use svcfc_core::harness::{run_suite, HarnessConfig, Suite};
use svcfc_core::io::{export_dot, write_coloring, write_labeled_graph, ChecksumStatus};
use svcfc_core::solvers::{solve_auto, svcfc_exact};
use svcfc_core::verifier::{
    enumerate_shortest_paths, has_strong_cf_path, is_conflict_free_path, Failure as VerdictFailure,
};
use svcfc_core::{verify_svcfc, Error, Graph, LabeledGraph, LevelGraph};

use crate::input::*;
use crate::outcome::{CmdResult, Failure, Outcome, NEGATIVE, SUCCESS};

/// Largest number of shortest paths the oracle enumerates per pair.
const ORACLE_PATH_CAP: usize = 100_000;

fn nonempty(g: &Graph) -> Result<(), Failure> {
    if g.n() == 0 {
        return Err(Failure::input("graph has no vertices"));
    }
    Ok(())
}

fn join(values: impl IntoIterator<Item = usize>) -> String {
    values
        .into_iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn verify(graph: &Path, coloring: &Path, explain: bool, oracle: bool) -> CmdResult {
    let g = read_graph(graph)?;
    let doc = read_coloring(coloring)?;
    if doc.check_against(&g)? == ChecksumStatus::Mismatch {
        eprintln!("warning: coloring checksum does not match this graph");
    }
    let f = doc.coloring;
    let verdict = verify_svcfc(&g, &f)?;
    let mut text = String::new();
    let mut report = json!({ "strong": verdict.strong, "failingPair": verdict.failing_pair, "failure": verdict.failure });
    let mut code = if verdict.strong { SUCCESS } else { NEGATIVE };
    match (verdict.failing_pair, verdict.failure) {
        (None, _) => text.push_str("strong: yes\n"),
        (Some((u, v)), Some(VerdictFailure::Improper)) => {
            let _ = writeln!(
                text,
                "strong: no\nfailing pair: ({u}, {v})\nreason: edge is monochromatic"
            );
        }
        (Some((u, v)), _) => {
            let _ = writeln!(
                text,
                "strong: no\nfailing pair: ({u}, {v})\nreason: no shortest path has a unique color"
            );
            if explain {
                let lg = LevelGraph::build(&g, u, v)?;
                text.push_str(&lg.to_string());
                report["levels"] = json!(lg.levels().map(|l| l.to_vec()).collect::<Vec<_>>());
            }
        }
    }
    if oracle && verdict.failure != Some(VerdictFailure::Improper) {
        let mut disagreements = Vec::new();
        let mut pairs = 0;
        for u in 0..g.n() {
            for v in u + 1..g.n() {
                let paths = enumerate_shortest_paths(&g, u, v, ORACLE_PATH_CAP)?;
                let expected = paths.iter().any(|p| is_conflict_free_path(&f, p));
                if has_strong_cf_path(&g, &f, u, v)?.is_some() != expected {
                    disagreements.push((u, v));
                }
                pairs += 1;
            }
        }
        if disagreements.is_empty() {
            let _ = writeln!(text, "oracle: agrees on {pairs} pairs");
        } else {
            let _ = writeln!(
                text,
                "oracle: disagrees on {} of {pairs} pairs, first {:?}",
                disagreements.len(),
                disagreements[0]
            );
            code = NEGATIVE;
        }
        report["oracle"] = json!({ "pairs": pairs, "disagreements": disagreements });
    }
    Ok(Outcome::new(code, text, report))
}

pub fn solve(graph: &Path, exact: bool, max_k: Option<usize>, out: Option<&Path>) -> CmdResult {
    let g = read_graph(graph)?;
    let res = if exact {
        svcfc_exact(&g, max_k)?
    } else {
        let res = solve_auto(&g)?;
        if max_k.is_some_and(|k| res.k > k) {
            return Err(Error::ExceedsMaxK(max_k.unwrap_or_default()).into());
        }
        res
    };
    let mut text = format!(
        "k: {}\nmethod: {}\ncoloring: {}\n",
        res.k,
        res.method,
        join(res.coloring.colors().iter().copied())
    );
    if let Some(path) = out {
        write_text(path, &write_coloring(&res.coloring, Some(&g)))?;
        let _ = writeln!(text, "witness written to {}", path.display());
    }
    let report = json!({ "k": res.k, "method": res.method, "coloring": res.coloring.colors() });
    Ok(Outcome::new(SUCCESS, text, report))
}

fn capped<T>(r: Result<T, Error>) -> Result<Option<T>, Failure> {
    match r {
        Ok(x) => Ok(Some(x)),
        Err(Error::CapExceeded { .. }) => Ok(None),
        Err(e) => Err(e.into()),
    }
}

pub fn props(graph: &Path) -> CmdResult {
    let g = read_graph(graph)?;
    nonempty(&g)?;
    let connected = g.is_connected();
    let (diameter, radius) = if connected {
        (Some(g.diameter()?), Some(g.radius()?))
    } else {
        (None, None)
    };
    let chi = capped(g.chromatic_number())?.map(|(k, _)| k);
    let omega = capped(g.clique_number())?;
    let dominating = (1..=3).find_map(|t| g.domination_number_at_most(t));
    let split = g.split_partition().is_some();
    let cobipartite = g.cobipartite_partition().is_some();
    let show = |x: Option<usize>, none: &str| x.map_or(none.to_string(), |v| v.to_string());
    let mut text = String::new();
    let _ = writeln!(
        text,
        "vertices: {}\nedges: {}\nconnected: {}",
        g.n(),
        g.m(),
        yes(connected)
    );
    let _ = writeln!(
        text,
        "diameter: {}\nradius: {}",
        show(diameter, "infinite"),
        show(radius, "infinite")
    );
    let _ = writeln!(
        text,
        "chromatic number: {}\nclique number: {}",
        show(chi, "above cap"),
        show(omega, "above cap")
    );
    match &dominating {
        Some(set) => {
            let _ = writeln!(
                text,
                "domination number: {} (set {})",
                set.len(),
                join(set.iter().copied())
            );
        }
        None => text.push_str("domination number: more than 3\n"),
    }
    let _ = writeln!(
        text,
        "complete bipartite: {}\nsplit: {}\nco-bipartite: {}",
        yes(g.is_complete_bipartite()),
        yes(split),
        yes(cobipartite)
    );
    let report = json!({
        "vertices": g.n(), "edges": g.m(), "connected": connected, "diameter": diameter, "radius": radius,
        "chromaticNumber": chi, "cliqueNumber": omega, "dominatingSet": dominating,
        "completeBipartite": g.is_complete_bipartite(), "split": split, "coBipartite": cobipartite,
    });
    Ok(Outcome::new(SUCCESS, text, report))
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub enum GenSpec {
    Q(usize),
    R(usize),
    Apex(PathBuf),
    ExtendHighk(PathBuf, usize),
    ExtendK3(PathBuf, usize),
}

fn labeled_json(lg: &LabeledGraph) -> Result<Value, Failure> {
    let diameter = if lg.graph.is_connected() {
        Some(lg.graph.diameter()?)
    } else {
        None
    };
    Ok(json!({
        "vertices": lg.graph.n(),
        "edges": lg.graph.edges().map(|(u, v)| [u, v]).collect::<Vec<_>>(),
        "diameter": diameter,
        "roles": lg.roles.iter().map(|r| r.to_string()).collect::<Vec<_>>(),
        "canonicalColoring": lg.canonical_coloring.as_ref().map(|f| f.colors().to_vec()),
        "notes": lg.notes,
    }))
}

/// Writes the document to `out` with a one-line summary, or prints it.
fn emit_labeled(lg: &LabeledGraph, what: &str, out: Option<&Path>, extra: Value) -> CmdResult {
    let doc = write_labeled_graph(lg);
    let mut report = labeled_json(lg)?;
    if let (Value::Object(map), Value::Object(more)) = (&mut report, extra) {
        map.extend(more);
    }
    let text = match out {
        Some(path) => {
            write_text(path, &doc)?;
            let diameter = report["diameter"]
                .as_u64()
                .map_or("infinite".to_string(), |d| d.to_string());
            format!(
                "{what}: {} vertices, {} edges, diameter {diameter}\n",
                lg.graph.n(),
                lg.graph.m()
            )
        }
        None => doc,
    };
    Ok(Outcome::new(SUCCESS, text, report))
}

pub fn gen(kind: GenSpec, out: Option<&Path>, coloring_out: Option<&Path>) -> CmdResult {
    let (lg, what) = match kind {
        GenSpec::Q(n) => (gadget_q(n)?, format!("Q_{n}")),
        GenSpec::R(n) => (gadget_r(n)?, format!("R_{n}")),
        GenSpec::Apex(path) => (apex_join(&read_graph(&path)?), "apex join".to_string()),
        GenSpec::ExtendHighk(path, d) => (
            extend_diameter_highk(&read_graph(&path)?, d)?,
            format!("extension to diameter {d}"),
        ),
        GenSpec::ExtendK3(path, d) => (
            extend_diameter_k3(&read_labeled(&path)?, d)?,
            format!("extension to diameter {d}"),
        ),
    };
    if let Some(path) = coloring_out {
        let f = lg
            .canonical_coloring
            .as_ref()
            .ok_or_else(|| Failure::input(format!("{what} has no canonical coloring")))?;
        write_text(path, &write_coloring(f, Some(&lg.graph)))?;
    }
    emit_labeled(&lg, &what, out, json!({}))
}

fn certificate_notes(c: &ReductionCertificate) -> Vec<String> {
    let mut notes = vec![
        format!("certificate vertices {} edges {}", c.vertices, c.edges),
        format!(
            "certificate chromatic-number 3 triangle {}",
            join(c.triangle.iter().map(|v| v + 1))
        ),
        format!(
            "certificate coloring {}",
            join(c.three_coloring.colors().iter().copied())
        ),
        format!("certificate diameter {} radius {}", c.diameter, c.radius),
    ];
    notes.push(match &c.dominating_set {
        Some(set) => format!(
            "certificate domination-number {} set {}",
            set.len(),
            join(set.iter().map(|v| v + 1))
        ),
        None => "certificate domination-number above 3".to_string(),
    });
    notes
}

pub fn reduce(cnf: &Path, diameter: Option<usize>, no_pad: bool, out: Option<&Path>) -> CmdResult {
    let phi = read_cnf(cnf)?;
    let padding = if no_pad {
        Padding::Never
    } else {
        Padding::Auto
    };
    let mut lg = sat_to_svcfc_with(&phi, padding)?;
    match diameter {
        None | Some(3) => {}
        Some(d) if d < 3 => return Err(Failure::input(format!("diameter {d} below 3"))),
        Some(d) => lg = extend_diameter_k3(&lg, d)?,
    }
    let cert = reduction_certificate(&lg)?;
    lg.notes.extend(certificate_notes(&cert));
    let summary = match out {
        Some(_) => {
            let lines: Vec<String> = lg.notes.iter().map(|n| format!("  {n}\n")).collect();
            Some(lines.concat())
        }
        None => None,
    };
    let mut outcome = emit_labeled(
        &lg,
        "reduction instance",
        out,
        json!({ "certificate": cert }),
    )?;
    if let Some(summary) = summary {
        outcome.text.push_str(&summary);
    }
    Ok(outcome)
}

pub fn harness(suite: &str, budget: Option<u64>, seed: Option<u64>) -> CmdResult {
    let suite: Suite = suite.parse().map_err(Failure::input)?;
    let mut cfg = HarnessConfig {
        budget: budget.map(Duration::from_secs),
        ..HarnessConfig::default()
    };
    if let Some(seed) = seed {
        cfg.seed = seed;
    }
    let reports = run_suite(suite, &cfg);
    let failed = reports.iter().filter(|r| !r.passed).count();
    let mut text: String = reports.iter().map(|r| format!("{r}\n")).collect();
    let _ = writeln!(text, "{} passed, {failed} failed", reports.len() - failed);
    let code = if failed == 0 { SUCCESS } else { NEGATIVE };
    Ok(Outcome::new(
        code,
        text,
        json!({ "seed": cfg.seed, "criteria": reports }),
    ))
}

pub fn dot(graph: &Path, coloring: Option<&Path>) -> CmdResult {
    let (g, labeled) = read_maybe_labeled(graph)?;
    let f = match coloring {
        Some(path) => {
            let doc = read_coloring(path)?;
            doc.check_against(&g)?;
            Some(doc.coloring)
        }
        None => None,
    };
    let text = export_dot(
        &g,
        labeled.as_ref().map(|lg| lg.roles.as_slice()),
        f.as_ref(),
    );
    let report = json!({ "dot": text });
    Ok(Outcome::new(SUCCESS, text, report))
}
