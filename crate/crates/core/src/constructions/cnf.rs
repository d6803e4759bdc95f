use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// Variable cap for [`sat_brute_force`].
pub const SAT_BRUTE_FORCE_CAP: usize = 24;

/// A literal in DIMACS convention: `+x` or `-x` for variable `x >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Lit(i32);

impl Lit {
    pub fn new(var: usize, positive: bool) -> Self {
        assert!(var >= 1, "variables are 1-based");
        let v = var as i32;
        Lit(if positive { v } else { -v })
    }

    pub fn from_dimacs(value: i32) -> Option<Self> {
        (value != 0).then_some(Lit(value))
    }

    pub fn var(self) -> usize {
        self.0.unsigned_abs() as usize
    }

    pub fn is_positive(self) -> bool {
        self.0 > 0
    }

    pub fn to_dimacs(self) -> i32 {
        self.0
    }

    /// Truth value under `assignment` (indexed by `var - 1`).
    pub fn eval(self, assignment: &[bool]) -> bool {
        assignment[self.var() - 1] == self.is_positive()
    }
}

impl fmt::Display for Lit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_positive() {
            write!(f, "x{}", self.var())
        } else {
            write!(f, "~x{}", self.var())
        }
    }
}

/// Sorts a clause by variable and drops repeats. Clauses that are empty,
/// tautological, too long or out of range are rejected.
pub(crate) fn normalize_clause(
    num_vars: usize,
    mut clause: Vec<Lit>,
) -> std::result::Result<Vec<Lit>, String> {
    clause.sort_by_key(|l| (l.var(), !l.is_positive()));
    clause.dedup();
    if clause.is_empty() {
        return Err("empty clause".into());
    }
    if let Some(l) = clause.iter().find(|l| l.var() > num_vars) {
        return Err(format!("variable {} beyond {num_vars}", l.var()));
    }
    if clause.windows(2).any(|w| w[0].var() == w[1].var()) {
        return Err("tautology".into());
    }
    if clause.len() > 3 {
        return Err(format!("{} distinct variables (at most 3)", clause.len()));
    }
    Ok(clause)
}

/// A CNF formula whose clauses have one to three literals over distinct
/// variables and are never tautologies.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct CnfFormula {
    num_vars: usize,
    clauses: Vec<Vec<Lit>>,
}

impl CnfFormula {
    /// Validates and normalizes: repeated literals collapse and each clause
    /// is sorted by variable.
    pub fn new(num_vars: usize, clauses: Vec<Vec<Lit>>) -> Result<Self> {
        if num_vars == 0 {
            return Err(Error::InvalidFormula(
                "at least one variable required".into(),
            ));
        }
        let normalized = clauses
            .into_iter()
            .enumerate()
            .map(|(j, c)| {
                normalize_clause(num_vars, c)
                    .map_err(|why| Error::InvalidFormula(format!("clause {}: {why}", j + 1)))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(CnfFormula {
            num_vars,
            clauses: normalized,
        })
    }

    /// Convenience constructor from DIMACS-style signed integers.
    pub fn from_dimacs(num_vars: usize, clauses: &[&[i32]]) -> Result<Self> {
        let clauses = clauses
            .iter()
            .map(|c| {
                c.iter()
                    .map(|&x| {
                        Lit::from_dimacs(x).ok_or_else(|| Error::InvalidFormula("literal 0".into()))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(num_vars, clauses)
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn clauses(&self) -> &[Vec<Lit>] {
        &self.clauses
    }

    /// 1-based index of the first clause falsified by `assignment`.
    pub fn first_unsatisfied(&self, assignment: &[bool]) -> Option<usize> {
        assert_eq!(assignment.len(), self.num_vars, "assignment length");
        self.clauses
            .iter()
            .position(|c| !c.iter().any(|l| l.eval(assignment)))
            .map(|j| j + 1)
    }

    pub fn is_satisfied_by(&self, assignment: &[bool]) -> bool {
        self.first_unsatisfied(assignment).is_none()
    }

    /// True when some clause mentions every variable.
    pub fn has_covering_clause(&self) -> bool {
        self.clauses.iter().any(|c| c.len() == self.num_vars)
    }

    /// Same clauses over one extra, unused variable.
    pub fn with_extra_var(&self) -> CnfFormula {
        CnfFormula {
            num_vars: self.num_vars + 1,
            clauses: self.clauses.clone(),
        }
    }
}

impl fmt::Display for CnfFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .clauses
            .iter()
            .map(|c| {
                let lits: Vec<String> = c.iter().map(Lit::to_string).collect();
                format!("({})", lits.join(" | "))
            })
            .collect();
        f.write_str(&parts.join(" & "))
    }
}

/// Lexicographically first satisfying assignment, ordering assignments as
/// bit strings `x1 x2 ... xn` with false before true.
pub fn sat_brute_force(phi: &CnfFormula) -> Result<Option<Vec<bool>>> {
    let n = phi.num_vars();
    if n > SAT_BRUTE_FORCE_CAP {
        return Err(Error::CapExceeded {
            what: "SAT brute force",
            size: n,
            cap: SAT_BRUTE_FORCE_CAP,
        });
    }
    let mut assignment = vec![false; n];
    for mask in 0u64..1 << n {
        for (i, value) in assignment.iter_mut().enumerate() {
            *value = mask >> (n - 1 - i) & 1 == 1;
        }
        if phi.is_satisfied_by(&assignment) {
            return Ok(Some(assignment));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(CnfFormula::from_dimacs(1, &[&[1, -1]]).is_err());
        assert!(CnfFormula::from_dimacs(4, &[&[1, 2, 3, 4]]).is_err());
        assert!(CnfFormula::from_dimacs(2, &[&[3]]).is_err());
        assert!(CnfFormula::from_dimacs(2, &[&[]]).is_err());
        assert!(CnfFormula::from_dimacs(0, &[]).is_err());
        let phi = CnfFormula::from_dimacs(3, &[&[2, 1, 2]]).unwrap();
        assert_eq!(phi.clauses()[0], vec![Lit::new(1, true), Lit::new(2, true)]);
    }

    #[test]
    fn brute_force_examples() {
        let unit = CnfFormula::from_dimacs(1, &[&[1]]).unwrap();
        assert_eq!(sat_brute_force(&unit).unwrap(), Some(vec![true]));
        let contradiction = CnfFormula::from_dimacs(1, &[&[1], &[-1]]).unwrap();
        assert_eq!(sat_brute_force(&contradiction).unwrap(), None);
        let phi =
            CnfFormula::from_dimacs(3, &[&[-1, 2, 3], &[1, -2, 3], &[1, 2, -3], &[-1, -2, -3]])
                .unwrap();
        // Every clause has a negated literal, so all-false is the first hit.
        let expected = (0u32..8)
            .map(|m| vec![m & 4 != 0, m & 2 != 0, m & 1 != 0])
            .find(|a| phi.is_satisfied_by(a));
        assert_eq!(sat_brute_force(&phi).unwrap(), expected);
        assert_eq!(expected, Some(vec![false, false, false]));
    }

    #[test]
    fn cap_is_enforced() {
        let phi = CnfFormula::from_dimacs(25, &[&[1]]).unwrap();
        assert!(matches!(
            sat_brute_force(&phi),
            Err(Error::CapExceeded { .. })
        ));
    }
}
