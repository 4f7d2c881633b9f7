//! Bounded right-lifting-property reports.

use crate::budget::{Budget, BudgetError};
use crate::simplicial::{enumerate_maps, SSetMap};
use crate::verdict::Verdict;

use super::family::{generators, GeneratorSpec, NThreshold};
use super::solve::solve_lift;
use super::square::LiftingSquare;

/// Outcome of testing the right lifting property against a family, up to
/// a stated dimension.  `holds` is always qualified by `max_dim`.
#[derive(Debug, Clone)]
pub struct RlpReport {
    pub family: NThreshold,
    pub max_dim: usize,
    pub tested_squares: u64,
    pub verdict: Verdict,
    /// The unfilled square on failure.
    pub witness: Option<(GeneratorSpec, LiftingSquare)>,
}

impl RlpReport {
    pub fn holds(&self) -> bool {
        self.verdict.holds()
    }
}

/// Enumerate every commuting square of the generator against `p` and
/// search each for a filler.
pub fn has_rlp(
    p: &SSetMap,
    n: NThreshold,
    max_dim: usize,
    budget: &Budget,
) -> Result<RlpReport, BudgetError> {
    let mut tested = 0u64;
    for spec in generators(n, max_dim) {
        for (square, _) in squares_of_generator(&spec, p, budget)? {
            tested += 1;
            if solve_lift(&square, budget)?.is_none() {
                return Ok(RlpReport {
                    family: n,
                    max_dim,
                    tested_squares: tested,
                    verdict: Verdict::fails(format!("unfilled square against {spec}")),
                    witness: Some((spec, square)),
                });
            }
        }
    }
    Ok(RlpReport {
        family: n,
        max_dim,
        tested_squares: tested,
        verdict: Verdict::Holds,
        witness: None,
    })
}

/// All commuting squares of one generator against `p`, paired with the
/// generator inclusion.  Bottoms are enumerated once and grouped by their
/// restriction along the inclusion; each top then picks up the matching
/// bottoms.
pub fn squares_of_generator(
    spec: &GeneratorSpec,
    p: &SSetMap,
    budget: &Budget,
) -> Result<Vec<(LiftingSquare, SSetMap)>, BudgetError> {
    let dim_bound = p.source.dim_bound().min(p.target.dim_bound());
    let (src, incl) = spec
        .realize(dim_bound)
        .expect("generator realizes at any usable bound");
    let mut by_restriction: std::collections::BTreeMap<
        Vec<Vec<crate::simplicial::SimplexRef>>,
        Vec<SSetMap>,
    > = std::collections::BTreeMap::new();
    for bottom in enumerate_maps(&incl.target, &p.target, budget)? {
        by_restriction
            .entry(incl.then(&bottom).images)
            .or_default()
            .push(bottom);
    }
    let mut out = Vec::new();
    for top in enumerate_maps(&src, &p.source, budget)? {
        let under = top.then(p);
        for bottom in by_restriction.get(&under.images).into_iter().flatten() {
            let square = LiftingSquare {
                i: incl.clone(),
                p: p.clone(),
                top: top.clone(),
                bottom: bottom.clone(),
            };
            debug_assert!(square.validate().is_ok());
            out.push((square, incl.clone()));
        }
    }
    Ok(out)
}
