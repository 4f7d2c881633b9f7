//! Postnikov stages by coskeleta, over the product of a degree chain with
//! the original index.

use crate::budget::{Budget, BudgetError};
use crate::pro::{CofinitePoset, LevelMap, ProObject, RawProMap, SSetCat};
use crate::simplicial::coskeleton::{coskeleton, extend_by_spheres, Coskeleton};
use crate::simplicial::sset::SimplexRef;
use crate::simplicial::SSetMap;

pub struct Postnikov {
    /// Stages over the product index (degree `n`, original element `s`),
    /// encoded as `n * |I| + s`.
    pub object: ProObject<SSetCat>,
    /// Canonical comparison `X -> PX`.
    pub unit: RawProMap<SSetCat>,
    /// Exact on Kan-certified levels; approximate otherwise.
    pub exact: bool,
    /// Stage data for induced maps.
    stages: Vec<Vec<Coskeleton>>,
    units: Vec<Vec<SSetMap>>,
    degree_count: usize,
}

impl Postnikov {
    pub fn encode(&self, degree: usize, s: usize) -> usize {
        degree * self.units[0].len() + s
    }

    pub fn stage(&self, degree: usize, s: usize) -> &Coskeleton {
        &self.stages[degree][s]
    }

    pub fn degree_count(&self) -> usize {
        self.degree_count
    }
}

/// All Postnikov stages: degree `n` of level `s` is the
/// (n+1)-coskeleton of `X_s`, truncated at the ambient bound.
pub fn postnikov(
    x: &ProObject<SSetCat>,
    kan_certified: bool,
    budget: &Budget,
) -> Result<Postnikov, BudgetError> {
    let fail = |e: String| BudgetError {
        what: e,
        limit: budget.limit(),
    };
    let levels = x.index.len();
    let d = x.fibers.iter().map(|f| f.dim_bound()).min().unwrap_or(0);
    let degrees = d + 1; // stages 0..=D

    let mut stages: Vec<Vec<Coskeleton>> = Vec::new();
    let mut units: Vec<Vec<SSetMap>> = Vec::new();
    for degree in 0..degrees {
        let mut row = Vec::new();
        let mut unit_row = Vec::new();
        for s in 0..levels {
            let (c, u) = coskeleton(&x.fibers[s], degree + 1, budget).map_err(&fail)?;
            row.push(c);
            unit_row.push(u);
        }
        stages.push(row);
        units.push(unit_row);
    }

    // Product index: degree chain × original index; (n, s) at n*levels+s.
    let index = CofinitePoset::chain(degrees).product(&x.index);
    let encode = |degree: usize, s: usize| degree * levels + s;

    let fibers: Vec<crate::simplicial::TruncatedSSet> = (0..degrees)
        .flat_map(|n| (0..levels).map(move |s| (n, s)))
        .map(|(n, s)| stages[n][s].object.clone())
        .collect();

    // Structure: (n, t) -> (n', s) for n ≥ n', t ≥ s: apply the level
    // structure map, then drop the stage.  Maps into a coskeleton are
    // determined by their low-dimensional part, so this is functorial.
    let mut structure = std::collections::BTreeMap::new();
    for n_hi in 0..degrees {
        for t in 0..levels {
            for n_lo in 0..=n_hi {
                for s in 0..levels {
                    if !x.index.leq(s, t) || (n_hi == n_lo && s == t) {
                        continue;
                    }
                    let m = stage_map(
                        &stages[n_hi][t],
                        &stages[n_lo][s],
                        &x.structure_map(t, s),
                        &units[n_lo][s],
                    )
                    .map_err(&fail)?;
                    structure.insert((encode(n_hi, t), encode(n_lo, s)), m);
                }
            }
        }
    }
    let object = ProObject::new(index, fibers, structure).map_err(&fail)?;

    // Unit X -> PX: representative at (n, s) is the coskeleton unit X_s.
    let reps = (0..degrees)
        .flat_map(|n| (0..levels).map(move |s| (n, s)))
        .map(|(n, s)| (s, units[n][s].clone()))
        .collect();
    let unit = RawProMap::from_reps(x.clone(), object.clone(), reps).map_err(&fail)?;

    Ok(Postnikov {
        object,
        unit,
        exact: kan_certified,
        stages,
        units,
        degree_count: degrees,
    })
}

/// The induced map between coskeleton stages: prescribed on the base
/// dimensions by `phi` followed by the target's unit, extended upward by
/// sphere lookups.
fn stage_map(
    from: &Coskeleton,
    to: &Coskeleton,
    phi: &SSetMap,
    to_unit: &SSetMap,
) -> Result<SSetMap, String> {
    let low_dim = to.base_dim.min(from.base_dim);
    extend_by_spheres(&from.object, to, low_dim, |id| {
        // Cells of the source stage in dimensions ≤ low_dim are cells of
        // the original level; push through phi and the target unit.
        let r = SimplexRef::nondegenerate(id);
        let img = phi.apply(&r);
        to_unit.apply(&img)
    })
}

/// Apply the Postnikov construction to a level map.
pub fn postnikov_map(
    f: &LevelMap<SSetCat>,
    px: &Postnikov,
    py: &Postnikov,
) -> Result<LevelMap<SSetCat>, String> {
    let levels = f.source.index.len();
    let degrees = px.degree_count.min(py.degree_count);
    let mut components = Vec::new();
    for n in 0..degrees {
        for s in 0..levels {
            let m = stage_map(
                px.stage(n, s),
                py.stage(n, s),
                f.component(s),
                &py.units[n][s],
            )?;
            components.push(m);
        }
    }
    LevelMap::new(px.object.clone(), py.object.clone(), components)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::AbGroup;
    use crate::groups::FinGroup;
    use crate::simplicial::homology::{homology, Coefficients};
    use crate::simplicial::nerve::nerve_of_group;
    use crate::simplicial::TruncatedSSet;

    fn budget() -> Budget {
        Budget::new(400_000_000)
    }

    #[test]
    fn point_stages_are_points() {
        let pt = TruncatedSSet::standard_simplex(0, 2).unwrap();
        let c: ProObject<SSetCat> = ProObject::constant(pt);
        let p = postnikov(&c, true, &budget()).unwrap();
        p.object.validate().unwrap();
        for f in &p.object.fibers {
            assert_eq!(f.total_cells(), 1);
        }
    }

    #[test]
    fn z2_nerve_stage_one_keeps_low_homology() {
        let nerve = nerve_of_group(&FinGroup::cyclic(2), 3, 100_000).unwrap().sset;
        let c: ProObject<SSetCat> = ProObject::constant(nerve.clone());
        let p = postnikov(&c, true, &budget()).unwrap();
        p.object.validate().unwrap();
        // Stage 0 is weakly a point: trivial H₁ in the tested range.
        let stage0 = &p.stage(0, 0).object;
        assert!(homology(stage0, 1, Coefficients::Integers).group.is_trivial());
        assert_eq!(crate::simplicial::pi0::pi0(stage0).count, 1);
        // Stage 1 keeps H₁ = Z/2.
        let stage1 = &p.stage(1, 0).object;
        assert_eq!(
            homology(stage1, 1, Coefficients::Integers).group,
            AbGroup::cyclic(2)
        );
        assert_eq!(
            homology(stage1, 1, Coefficients::Integers).group,
            homology(&nerve, 1, Coefficients::Integers).group
        );
    }

    #[test]
    fn stage_idempotence_on_fixtures() {
        // cosk of cosk at the same degree is unchanged.
        let nerve = nerve_of_group(&FinGroup::cyclic(2), 2, 100_000).unwrap().sset;
        let (c1, _) = coskeleton(&nerve, 2, &budget()).unwrap();
        let (c2, _) = coskeleton(&c1.object, 2, &budget()).unwrap();
        assert_eq!(c1.object, c2.object);
    }
}
