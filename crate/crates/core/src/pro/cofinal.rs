//! Cofinal subsystems.

use super::fiber::FiberCategory;
use super::object::ProObject;
use super::raw::RawProMap;

/// Is the (directed) subset cofinal: does every index sit below some
/// element of the subset?
pub fn is_cofinal<C: FiberCategory>(x: &ProObject<C>, keep: &[usize]) -> Result<bool, String> {
    if !x.index.subset_directed(keep) {
        return Err("subset is not directed".into());
    }
    Ok(x.index.subset_cofinal(keep))
}

/// Restrict to a cofinal subsystem, with the canonical isomorphism pair
/// (restriction <- original, original <- restriction), verified as
/// mutually inverse pro-maps.
pub fn cofinal_restrict<C: FiberCategory>(
    x: &ProObject<C>,
    keep: &[usize],
) -> Result<(ProObject<C>, RawProMap<C>, RawProMap<C>), String> {
    if !is_cofinal(x, keep)? {
        return Err("subset is not cofinal".into());
    }
    let sub = x.restrict(keep)?;
    // x -> sub: at new index a (original keep[a]): identity.
    let to_sub = RawProMap::from_reps(
        x.clone(),
        sub.clone(),
        keep.iter()
            .map(|&s| (s, C::identity(&x.fibers[s])))
            .collect(),
    )?;
    // sub -> x: at original index s: a dominating kept element, minimal
    // by (height, id) in the subposet.
    let from_sub = RawProMap::from_reps(
        sub.clone(),
        x.clone(),
        (0..x.index.len())
            .map(|s| {
                let a = (0..keep.len())
                    .filter(|&a| x.index.leq(s, keep[a]))
                    .min_by_key(|&a| (sub.index.height(a), a))
                    .expect("subset is cofinal");
                (a, x.structure_map(keep[a], s))
            })
            .collect(),
    )?;
    if !to_sub.then(&from_sub).is_pro_identity() || !from_sub.then(&to_sub).is_pro_identity() {
        return Err("cofinal restriction witnesses are not inverse".into());
    }
    Ok((sub, to_sub, from_sub))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pro::fiber::{FinSetCat, FinSetMap};

    fn four_chain() -> ProObject<FinSetCat> {
        ProObject::tower(
            vec![2, 2, 2, 2],
            vec![
                FinSetMap::new(2, 2, vec![0, 1]),
                FinSetMap::new(2, 2, vec![1, 0]),
                FinSetMap::new(2, 2, vec![0, 1]),
            ],
        )
        .unwrap()
    }

    #[test]
    fn even_stages_are_cofinal() {
        let x = four_chain();
        assert!(is_cofinal(&x, &[1, 3]).unwrap());
        let (sub, to, from) = cofinal_restrict(&x, &[1, 3]).unwrap();
        sub.validate().unwrap();
        assert!(to.then(&from).is_pro_identity());
    }

    #[test]
    fn top_alone_is_cofinal_bottom_is_not() {
        let x: ProObject<FinSetCat> =
            ProObject::tower(vec![2, 2], vec![FinSetMap::new(2, 2, vec![0, 1])]).unwrap();
        assert!(is_cofinal(&x, &[1]).unwrap());
        assert!(!is_cofinal(&x, &[0]).unwrap());
        assert!(is_cofinal(&x, &[0, 1]).unwrap());
    }
}
