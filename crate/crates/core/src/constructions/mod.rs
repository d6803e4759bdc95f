//! Hardness gadgets and reductions, each vertex tagged with its role.

pub(crate) mod cnf;
mod gadgets;
mod reduction;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

pub use cnf::{sat_brute_force, CnfFormula, Lit, SAT_BRUTE_FORCE_CAP};
pub use gadgets::{apex_join, extend_diameter_highk, gadget_q, gadget_r};
pub use reduction::{
    assignment_to_coloring, coloring_to_assignment, embedded_formula, extend_diameter_k3,
    partition_coloring, reduction_certificate, sat_to_svcfc, sat_to_svcfc_with, Padding,
    ReductionCertificate,
};

use crate::graph::{Coloring, Graph};

/// What a vertex stands for in a generated instance. Variable, clause and
/// gadget indices follow the 1-based (clause, variable) and 0-based
/// (gadget `c_0`) numbering of the constructions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Role {
    SpecialA,
    SpecialB,
    SpecialC,
    SpecialD,
    Literal {
        var: usize,
        positive: bool,
    },
    Clause(usize),
    ClauseA(usize),
    ClauseB(usize),
    GadgetA(usize),
    GadgetB(usize),
    GadgetC(usize),
    /// A vertex copied from an input graph, with its id there.
    Original(usize),
    Apex,
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Role::SpecialA => f.write_str("special-a"),
            Role::SpecialB => f.write_str("special-b"),
            Role::SpecialC => f.write_str("special-c"),
            Role::SpecialD => f.write_str("special-d"),
            Role::Literal {
                var,
                positive: true,
            } => write!(f, "literal +{var}"),
            Role::Literal {
                var,
                positive: false,
            } => write!(f, "literal -{var}"),
            Role::Clause(j) => write!(f, "clause {j}"),
            Role::ClauseA(j) => write!(f, "clause-a {j}"),
            Role::ClauseB(j) => write!(f, "clause-b {j}"),
            Role::GadgetA(i) => write!(f, "gadget-a {i}"),
            Role::GadgetB(i) => write!(f, "gadget-b {i}"),
            Role::GadgetC(i) => write!(f, "gadget-c {i}"),
            Role::Original(v) => write!(f, "original {v}"),
            Role::Apex => f.write_str("apex"),
        }
    }
}

impl FromStr for Role {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut parts = s.split_whitespace();
        let tag = parts.next().ok_or("empty role")?;
        let arg = parts.next();
        if parts.next().is_some() {
            return Err(format!("trailing text in role {s:?}"));
        }
        let index = || -> Result<usize, String> {
            let a = arg.ok_or_else(|| format!("role {tag} needs an index"))?;
            a.parse()
                .map_err(|_| format!("bad index {a:?} in role {tag}"))
        };
        let role = match tag {
            "special-a" => Role::SpecialA,
            "special-b" => Role::SpecialB,
            "special-c" => Role::SpecialC,
            "special-d" => Role::SpecialD,
            "apex" => Role::Apex,
            "literal" => {
                let a = arg.ok_or("literal needs a signed variable")?;
                let (positive, digits) = match a.as_bytes().first() {
                    Some(b'+') => (true, &a[1..]),
                    Some(b'-') => (false, &a[1..]),
                    _ => return Err(format!("literal {a:?} needs a sign")),
                };
                let var: usize = digits.parse().map_err(|_| format!("bad literal {a:?}"))?;
                if var == 0 {
                    return Err("literal variable must be at least 1".into());
                }
                Role::Literal { var, positive }
            }
            "clause" => Role::Clause(index()?),
            "clause-a" => Role::ClauseA(index()?),
            "clause-b" => Role::ClauseB(index()?),
            "gadget-a" => Role::GadgetA(index()?),
            "gadget-b" => Role::GadgetB(index()?),
            "gadget-c" => Role::GadgetC(index()?),
            "original" => Role::Original(index()?),
            _ => return Err(format!("unknown role {tag:?}")),
        };
        if arg.is_some()
            && matches!(
                role,
                Role::SpecialA | Role::SpecialB | Role::SpecialC | Role::SpecialD | Role::Apex
            )
        {
            return Err(format!("role {tag} takes no index"));
        }
        Ok(role)
    }
}

/// A generated graph with one role per vertex, an optional verified
/// coloring, and free-form notes (e.g. padding applied).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledGraph {
    pub graph: Graph,
    pub roles: Vec<Role>,
    pub canonical_coloring: Option<Coloring>,
    pub notes: Vec<String>,
}

impl LabeledGraph {
    pub fn vertex_of(&self, role: Role) -> Option<usize> {
        self.roles.iter().position(|&r| r == role)
    }

    /// Every vertex has a role and no role instance repeats.
    pub fn labels_are_consistent(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.roles.len() == self.graph.n() && self.roles.iter().all(|r| seen.insert(*r))
    }
}
