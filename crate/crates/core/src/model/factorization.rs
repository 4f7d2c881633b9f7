//! The two factorization algorithms, by induction on height.
//!
//! At each index element the map into the window
//! `Y_t ×_{lim Y} lim Z` is factored by the small object argument: with
//! the family threshold at the element's height this yields a trivial
//! cofibration followed by a strong fibration; with every generator it
//! yields a cofibration followed by a (strictly) trivial fibration.

use crate::budget::{Budget, BudgetError};
use crate::lifting::{factor_small_object, CellComplexCertificate, NThreshold, RlpReport};
use crate::pro::{CofinitePoset, LevelMap, ProObject, SSetCat};
use crate::simplicial::lim::pullback;
use crate::simplicial::SSetMap;

use super::matching::{matching_cone, matching_object};
use super::strong_fibration::NFunction;

pub struct FactorizationResult {
    /// The left leg, with a cell-complex certificate per level.
    pub left: LevelMap<SSetCat>,
    pub certificates: Vec<CellComplexCertificate>,
    /// The right leg, with a bounded lifting report per level (for the
    /// relative matching map at that level).
    pub right: LevelMap<SSetCat>,
    pub reports: Vec<RlpReport>,
    /// The degree assignment used per level.
    pub degrees: NFunction,
}

impl FactorizationResult {
    /// Bit-exact composite check.
    pub fn composite_is(&self, f: &LevelMap<SSetCat>) -> bool {
        self.left.then(&self.right) == *f
    }

    /// Every per-level report holds.
    pub fn verified(&self) -> bool {
        self.reports.iter().all(|r| r.holds())
    }
}

/// Factor into (trivial cofibration, strong fibration): the family
/// threshold at each level is the height.
pub fn factor_we(
    f: &LevelMap<SSetCat>,
    step_budget: usize,
    budget: &Budget,
) -> Result<FactorizationResult, BudgetError> {
    let heights = f.source.index.heights();
    let thresholds: Vec<NThreshold> = heights
        .iter()
        .map(|&h| NThreshold::Finite(h as i64))
        .collect();
    factor_by_matching(f, &thresholds, step_budget, budget)
}

/// Factor into (cofibration, trivial fibration): every generator at every
/// level.
pub fn factor_cofib_trivfib(
    f: &LevelMap<SSetCat>,
    step_budget: usize,
    budget: &Budget,
) -> Result<FactorizationResult, BudgetError> {
    let thresholds = vec![NThreshold::Finite(-1); f.source.index.len()];
    factor_by_matching(f, &thresholds, step_budget, budget)
}

fn factor_by_matching(
    f: &LevelMap<SSetCat>,
    thresholds: &[NThreshold],
    step_budget: usize,
    budget: &Budget,
) -> Result<FactorizationResult, BudgetError> {
    let x = &f.source;
    let y = &f.target;
    let index = x.index.clone();
    let n = index.len();
    let fail = |e: String| BudgetError {
        what: e,
        limit: budget.limit(),
    };

    let mut z_fibers: Vec<Option<crate::simplicial::TruncatedSSet>> = vec![None; n];
    let mut z_structure: std::collections::BTreeMap<(usize, usize), SSetMap> =
        std::collections::BTreeMap::new();
    let mut lefts: Vec<Option<SSetMap>> = vec![None; n];
    let mut rights: Vec<Option<SSetMap>> = vec![None; n];
    let mut certificates: Vec<Option<CellComplexCertificate>> = vec![None; n];
    let mut reports: Vec<Option<RlpReport>> = vec![None; n];

    let ambient_bound = x
        .fibers
        .iter()
        .chain(y.fibers.iter())
        .map(|f| f.dim_bound())
        .min()
        .unwrap_or(0);
    for t in index.by_height() {
        let z_partial = partial_pro(&index, &z_fibers, &z_structure, ambient_bound);
        let mz = matching_object(&z_partial, t, budget)?;
        let my = matching_object(y, t, budget)?;

        // lim Z -> lim Y through the built right legs.
        let lim_map = if my.nodes.is_empty() {
            crate::simplicial::enumerate_maps(mz.object(), my.object(), budget)?
                .pop()
                .ok_or_else(|| fail("the point is terminal".into()))?
        } else {
            let legs: Vec<SSetMap> = my
                .nodes
                .iter()
                .map(|&s| mz.leg(s).then(rights[s].as_ref().expect("lower stage built")))
                .collect();
            let leg_refs: Vec<&SSetMap> = legs.iter().collect();
            my.limit.mediator(&leg_refs).map_err(&fail)?
        };
        let y_cone = matching_cone(y, t, &my).map_err(&fail)?;
        // Window legs: [to Y_t, to lim Z, to lim Y].
        let window = pullback(&y_cone, &lim_map, budget).map_err(&fail)?;

        // X_t into the window through the built left legs.
        let z_cone = if mz.nodes.is_empty() {
            crate::simplicial::enumerate_maps(&x.fibers[t], mz.object(), budget)?
                .pop()
                .ok_or_else(|| fail("the point is terminal".into()))?
        } else {
            let legs: Vec<SSetMap> = mz
                .nodes
                .iter()
                .map(|&s| {
                    x.structure_map(t, s)
                        .then(lefts[s].as_ref().expect("lower stage built"))
                })
                .collect();
            let leg_refs: Vec<&SSetMap> = legs.iter().collect();
            mz.limit.mediator(&leg_refs).map_err(&fail)?
        };
        let to_lim_y = z_cone.then(&lim_map);
        let into_window = window
            .mediator(&[f.component(t), &z_cone, &to_lim_y])
            .map_err(&fail)?;

        let factored = factor_small_object(&into_window, thresholds[t], step_budget, budget)?;
        let q_t = factored.right.clone();
        let p_t = q_t.then(&window.legs[0]);
        for (pos, &s) in mz.nodes.iter().enumerate() {
            let zeta = q_t.then(&window.legs[1]).then(&mz.limit.legs[pos]);
            z_structure.insert((t, s), zeta);
        }
        z_fibers[t] = Some(factored.right.source.clone());
        lefts[t] = Some(factored.left);
        rights[t] = Some(p_t);
        certificates[t] = Some(factored.certificate);
        reports[t] = Some(factored.report);
    }

    let z = ProObject::new(
        index.clone(),
        z_fibers.into_iter().map(Option::unwrap).collect(),
        z_structure,
    )
    .map_err(|e| fail(format!("factorization middle stage invalid: {e}")))?;
    let left = LevelMap::new(
        x.clone(),
        z.clone(),
        lefts.into_iter().map(Option::unwrap).collect(),
    )
    .map_err(|e| fail(format!("left leg invalid: {e}")))?;
    let right = LevelMap::new(
        z,
        y.clone(),
        rights.into_iter().map(Option::unwrap).collect(),
    )
    .map_err(|e| fail(format!("right leg invalid: {e}")))?;
    let degrees = NFunction {
        values: thresholds
            .iter()
            .map(|t| match t {
                NThreshold::Finite(v) => *v,
                NThreshold::Infinity => i64::MAX,
            })
            .collect(),
    };
    Ok(FactorizationResult {
        left,
        certificates: certificates.into_iter().map(Option::unwrap).collect(),
        right,
        reports: reports.into_iter().map(Option::unwrap).collect(),
        degrees,
    })
}

/// A pro-object view of the stages built so far.  Matching objects at the
/// next element only read levels strictly below it, which are always
/// built; the rest are placeholders.
fn partial_pro(
    index: &CofinitePoset,
    fibers: &[Option<crate::simplicial::TruncatedSSet>],
    structure: &std::collections::BTreeMap<(usize, usize), SSetMap>,
    ambient_bound: usize,
) -> ProObject<SSetCat> {
    let placeholder = crate::simplicial::TruncatedSSet::empty(ambient_bound);
    ProObject {
        index: index.clone(),
        fibers: fibers
            .iter()
            .map(|f| f.clone().unwrap_or_else(|| placeholder.clone()))
            .collect(),
        structure: structure.clone(),
    }
}
