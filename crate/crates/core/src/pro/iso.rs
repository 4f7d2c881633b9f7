//! Pro-isomorphism detection for level maps.

use crate::budget::{Budget, BudgetError};
use crate::verdict::Verdict;

use super::fiber::FiberCategory;
use super::object::LevelMap;

/// Witness data for a pro-isomorphism: for each index `s`, a dominating
/// `t ≥ s` with a diagonal `B_t -> A_s` closing both triangles.
#[derive(Debug, Clone)]
pub struct ProIsoWitness<C: FiberCategory> {
    pub diagonals: Vec<(usize, C::Mor)>,
}

/// A level map is a pro-isomorphism iff for every `s` some `t ≥ s` admits
/// a diagonal making both triangles commute.  Exact over finite indices
/// (up to the hom-enumeration budget).
pub fn is_pro_iso<C: FiberCategory>(
    f: &LevelMap<C>,
    budget: &Budget,
) -> Result<(Verdict, Option<ProIsoWitness<C>>), BudgetError> {
    let index = &f.source.index;
    let mut diagonals = Vec::new();
    for s in 0..index.len() {
        let mut found = None;
        'search: for t in index.by_height() {
            if !index.leq(s, t) {
                continue;
            }
            for d in C::hom(&f.target.fibers[t], &f.source.fibers[s], budget)? {
                let tri_top = C::compose(f.component(t), &d) == f.source.structure_map(t, s);
                let tri_bottom =
                    C::compose(&d, f.component(s)) == f.target.structure_map(t, s);
                if tri_top && tri_bottom {
                    found = Some((t, d));
                    break 'search;
                }
            }
        }
        match found {
            Some(pair) => diagonals.push(pair),
            None => {
                return Ok((
                    Verdict::fails(format!("no diagonal exists for index {s}")),
                    None,
                ))
            }
        }
    }
    Ok((Verdict::Holds, Some(ProIsoWitness { diagonals })))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pro::fiber::{FinSetCat, FinSetMap, SSetCat};
    use crate::pro::object::ProObject;
    use crate::simplicial::TruncatedSSet;

    fn budget() -> Budget {
        Budget::default_budget()
    }

    #[test]
    fn identity_is_a_pro_iso() {
        let x: ProObject<FinSetCat> =
            ProObject::tower(vec![2, 2], vec![FinSetMap::new(2, 2, vec![0, 1])]).unwrap();
        let (v, w) = is_pro_iso(&LevelMap::identity(&x), &budget()).unwrap();
        assert!(v.holds());
        assert!(w.is_some());
    }

    #[test]
    fn shift_endomorphism_of_constant_tower() {
        // Constant tower of points; the level map with components the
        // structure maps is a pro-iso (diagonals are identities).
        let pt = TruncatedSSet::standard_simplex(0, 0).unwrap();
        let x: ProObject<SSetCat> = ProObject::tower(
            vec![pt.clone(), pt.clone(), pt.clone()],
            vec![
                crate::simplicial::SSetMap::identity(&pt),
                crate::simplicial::SSetMap::identity(&pt),
            ],
        )
        .unwrap();
        let shift = LevelMap::new(
            x.clone(),
            x.clone(),
            vec![
                crate::simplicial::SSetMap::identity(&pt),
                crate::simplicial::SSetMap::identity(&pt),
                crate::simplicial::SSetMap::identity(&pt),
            ],
        )
        .unwrap();
        assert!(is_pro_iso(&shift, &budget()).unwrap().0.holds());
    }

    #[test]
    fn empty_to_point_fails() {
        let empty = TruncatedSSet::empty(0);
        let pt = TruncatedSSet::standard_simplex(0, 0).unwrap();
        let e: ProObject<SSetCat> = ProObject::constant(empty.clone());
        let p: ProObject<SSetCat> = ProObject::constant(pt.clone());
        let f = LevelMap::new(
            e,
            p,
            vec![crate::simplicial::SSetMap::from_empty(&pt, 0)],
        )
        .unwrap();
        let (v, _) = is_pro_iso(&f, &budget()).unwrap();
        assert!(v.is_fails());
    }
}
