//! Pro-isomorphism detection for pro-groups and pro-sets.
//!
//! The group check searches homomorphism diagonals, the set check bare
//! functions; the two verdicts agree on finite fibers.

use crate::budget::{Budget, BudgetError};
use crate::pro::{is_pro_iso, FinGroupCat, FinSetCat, FinSetMap, LevelMap, ProObject};
use crate::verdict::Verdict;

pub fn is_pro_set_iso(
    f: &LevelMap<FinSetCat>,
    budget: &Budget,
) -> Result<Verdict, BudgetError> {
    Ok(is_pro_iso(f, budget)?.0)
}

pub fn is_pro_group_iso(
    f: &LevelMap<FinGroupCat>,
    budget: &Budget,
) -> Result<Verdict, BudgetError> {
    Ok(is_pro_iso(f, budget)?.0)
}

/// Forget a pro-group level map to a pro-set level map.
pub fn underlying_pro_set_map(f: &LevelMap<FinGroupCat>) -> LevelMap<FinSetCat> {
    let forget = |x: &ProObject<FinGroupCat>| -> ProObject<FinSetCat> {
        let fibers: Vec<usize> = x.fibers.iter().map(|g| g.order()).collect();
        let structure = x
            .index
            .strict_pairs()
            .into_iter()
            .map(|(t, s)| {
                let m = x.structure_map(t, s);
                (
                    (t, s),
                    FinSetMap::new(fibers[t], fibers[s], m.map.table.clone()),
                )
            })
            .collect();
        ProObject::new(x.index.clone(), fibers, structure).expect("forgetting is functorial")
    };
    let source = forget(&f.source);
    let target = forget(&f.target);
    let components = f
        .components
        .iter()
        .enumerate()
        .map(|(s, m)| FinSetMap::new(source.fibers[s], target.fibers[s], m.map.table.clone()))
        .collect();
    LevelMap::new(source, target, components).expect("forgetting preserves naturality")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{FinGroup, GroupHom};
    use crate::pro::FinGroupMor;

    fn budget() -> Budget {
        Budget::default_budget()
    }

    #[test]
    fn identity_tower_holds_in_both() {
        let z2 = FinGroup::cyclic(2);
        let x: ProObject<FinGroupCat> = ProObject::tower(
            vec![z2.clone(), z2.clone()],
            vec![FinGroupMor {
                source: z2.clone(),
                target: z2.clone(),
                map: z2.identity_hom(),
            }],
        )
        .unwrap();
        let id = LevelMap::identity(&x);
        assert!(is_pro_group_iso(&id, &budget()).unwrap().holds());
        assert!(is_pro_set_iso(&underlying_pro_set_map(&id), &budget())
            .unwrap()
            .holds());
    }

    #[test]
    fn quotient_tower_fails_in_both() {
        // Tower Z/4 -> Z/4 (identity) mapping levelwise onto constant Z/2:
        // no diagonal closes the triangles, as groups or as sets.
        let z4 = FinGroup::cyclic(4);
        let z2 = FinGroup::cyclic(2);
        let quot = GroupHom {
            table: vec![0, 1, 0, 1],
        };
        let x: ProObject<FinGroupCat> = ProObject::tower(
            vec![z4.clone(), z4.clone()],
            vec![FinGroupMor {
                source: z4.clone(),
                target: z4.clone(),
                map: z4.identity_hom(),
            }],
        )
        .unwrap();
        let y: ProObject<FinGroupCat> = ProObject::tower(
            vec![z2.clone(), z2.clone()],
            vec![FinGroupMor {
                source: z2.clone(),
                target: z2.clone(),
                map: z2.identity_hom(),
            }],
        )
        .unwrap();
        let f = LevelMap::new(
            x,
            y,
            vec![
                FinGroupMor {
                    source: z4.clone(),
                    target: z2.clone(),
                    map: quot.clone(),
                },
                FinGroupMor {
                    source: z4.clone(),
                    target: z2.clone(),
                    map: quot,
                },
            ],
        )
        .unwrap();
        let g = is_pro_group_iso(&f, &budget()).unwrap();
        let s = is_pro_set_iso(&underlying_pro_set_map(&f), &budget()).unwrap();
        assert!(g.is_fails());
        assert!(s.is_fails());
    }

    #[test]
    fn pro_trivial_tower_keeps_its_top_stage() {
        // A finite tower of Z/2 with trivial transition maps is NOT
        // isomorphic to the trivial group: the top stage has no index
        // above it to absorb the nontrivial fiber.  (Only unbounded
        // towers are pro-trivial.)  The exhaustive search certifies the
        // failure at the top index.
        let z2 = FinGroup::cyclic(2);
        let e = FinGroup::trivial();
        let zero = GroupHom { table: vec![0, 0] };
        let x: ProObject<FinGroupCat> = ProObject::tower(
            vec![z2.clone(), z2.clone()],
            vec![FinGroupMor {
                source: z2.clone(),
                target: z2.clone(),
                map: zero,
            }],
        )
        .unwrap();
        let y: ProObject<FinGroupCat> = ProObject::tower(
            vec![e.clone(), e.clone()],
            vec![FinGroupMor {
                source: e.clone(),
                target: e.clone(),
                map: e.identity_hom(),
            }],
        )
        .unwrap();
        let f = LevelMap::new(
            x,
            y,
            vec![
                FinGroupMor {
                    source: z2.clone(),
                    target: e.clone(),
                    map: GroupHom { table: vec![0, 0] },
                },
                FinGroupMor {
                    source: z2,
                    target: e,
                    map: GroupHom { table: vec![0, 0] },
                },
            ],
        )
        .unwrap();
        assert!(is_pro_group_iso(&f, &budget()).unwrap().is_fails());
    }
}
