//! Exploratory audit of the structural claims used in the upper-bound
//! argument.
//!
//! The claims describe a hypothetical minimal counterexample, so arbitrary
//! trees are free to violate them. Findings are descriptive only. Each claim
//! is read as the following predicate on terminal levels and degrees; a
//! finding is emitted for every vertex the premise applies to.
//!
//! | id | premise                                             | predicate                          |
//! |----|-----------------------------------------------------|------------------------------------|
//! | C1 | `v` is 1-terminal                                   | `deg v = 2`                        |
//! | C2 | `w` is 2-terminal                                   | all but one branch is a 2-vertex path `w–v–u` with `deg v = 2`; `deg w ≤ 3`; some neighbor has level ≥ 2 |
//! | C3 | `x` is 3-terminal with a 2-terminal neighbor of degree > 2 | `deg x = 2`                 |
//! | C4 | `x` is 3-terminal with a 2-terminal neighbor of degree 2   | `x` is not a support vertex |
//! | C5 | `x` is 3-terminal                                   | `deg x = 2`                        |
//! | C6 | `y` 4-terminal, `x` a 3-terminal neighbor, `w` a 2-terminal neighbor of `x` with degree > 2 | `deg y = 2` |
//! | C7 | `y` 4-terminal, `x` a 3-terminal neighbor, `w` a 2-terminal neighbor of `x` (finding at `w`) | `deg w = 2` |
//! | C8 | `y` is 4-terminal                                   | `y` is not a support vertex        |
//! | C9 | `y` is 4-terminal                                   | `deg y = 2`                        |

use crate::error::{Error, Result};
use crate::forest::Forest;
use crate::format::to_graph6;
use crate::structure::{branches, structural_report, StructuralReport};
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClaimId {
    C1,
    C2,
    C3,
    C4,
    C5,
    C6,
    C7,
    C8,
    C9,
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuditFinding {
    pub tree: String,
    pub claim: ClaimId,
    pub vertex: usize,
    pub satisfied: bool,
}

pub fn audit_claims(f: &Forest) -> Result<Vec<AuditFinding>> {
    if !f.is_tree() {
        return Err(Error::NotATree);
    }
    let tree = to_graph6(f);
    let report = structural_report(f);
    let r = &report;
    let deg = |v: usize| r.degree[v];
    let mut out = Vec::new();
    let mut emit = |claim, vertex, satisfied| {
        out.push(AuditFinding {
            tree: tree.clone(),
            claim,
            vertex,
            satisfied,
        })
    };
    let nbrs_at = |v: usize, level: usize| {
        f.neighbors(v)
            .iter()
            .copied()
            .filter(move |&w| r.terminal_level[w] == level)
    };

    for v in r.vertices_at_level(1) {
        emit(ClaimId::C1, v, deg(v) == 2);
    }
    for w in r.vertices_at_level(2) {
        emit(ClaimId::C2, w, claim_two_holds(f, r, w));
    }
    for x in r.vertices_at_level(3) {
        if nbrs_at(x, 2).any(|w| deg(w) > 2) {
            emit(ClaimId::C3, x, deg(x) == 2);
        }
        if nbrs_at(x, 2).any(|w| deg(w) == 2) {
            emit(ClaimId::C4, x, !r.is_support[x]);
        }
        emit(ClaimId::C5, x, deg(x) == 2);
    }
    for y in r.vertices_at_level(4) {
        if nbrs_at(y, 3).any(|x| nbrs_at(x, 2).any(|w| deg(w) > 2)) {
            emit(ClaimId::C6, y, deg(y) == 2);
        }
        let mut ws: Vec<usize> = nbrs_at(y, 3).flat_map(|x| nbrs_at(x, 2)).collect();
        ws.sort_unstable();
        ws.dedup();
        for w in ws {
            emit(ClaimId::C7, w, deg(w) == 2);
        }
        emit(ClaimId::C8, y, !r.is_support[y]);
        emit(ClaimId::C9, y, deg(y) == 2);
    }
    out.sort_by_key(|a| (a.claim, a.vertex));
    Ok(out)
}

fn claim_two_holds(f: &Forest, r: &StructuralReport, w: usize) -> bool {
    let is_short_path =
        |b: &crate::structure::Branch| b.vertices.len() == 2 && r.degree[b.neighbor] == 2;
    let non_paths = branches(f, w).iter().filter(|b| !is_short_path(b)).count();
    let high_neighbor = f.neighbors(w).iter().any(|&v| r.terminal_level[v] >= 2);
    non_paths <= 1 && r.degree[w] <= 3 && high_neighbor
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forest::{path, star};

    #[test]
    fn seven_path_satisfies_everything() {
        let findings = audit_claims(&path(7)).unwrap();
        assert!(!findings.is_empty());
        assert!(findings.iter().all(|a| a.satisfied), "{findings:?}");
        let claims: Vec<ClaimId> = findings.iter().map(|a| a.claim).collect();
        assert_eq!(
            claims,
            vec![
                ClaimId::C1,
                ClaimId::C1,
                ClaimId::C2,
                ClaimId::C2,
                ClaimId::C4,
                ClaimId::C5
            ]
        );
    }

    #[test]
    fn star_violates_claim_one() {
        let findings = audit_claims(&star(3)).unwrap();
        assert_eq!(
            findings,
            vec![AuditFinding {
                tree: to_graph6(&star(3)),
                claim: ClaimId::C1,
                vertex: 0,
                satisfied: false
            }]
        );
    }

    #[test]
    fn p2_is_vacuous() {
        assert!(audit_claims(&path(2)).unwrap().is_empty());
    }

    #[test]
    fn forests_rejected() {
        assert_eq!(
            audit_claims(&Forest::empty(2)).unwrap_err(),
            Error::NotATree
        );
    }

    #[test]
    fn nine_path_reaches_level_four() {
        let findings = audit_claims(&path(9)).unwrap();
        assert!(findings
            .iter()
            .any(|a| a.claim == ClaimId::C9 && a.vertex == 4));
        assert!(findings.iter().all(|a| a.satisfied));
    }
}
