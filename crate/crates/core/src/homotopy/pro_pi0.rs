//! Levelwise π₀ as a pro-set.

use crate::pro::{FinSetCat, FinSetMap, LevelMap, ProObject, SSetCat};
use crate::simplicial::pi0::{pi0, pi0_map};

/// Apply π₀ to every fiber and structure map.
pub fn pro_pi0(x: &ProObject<SSetCat>) -> ProObject<FinSetCat> {
    let fibers: Vec<usize> = x.fibers.iter().map(|f| pi0(f).count).collect();
    let structure = x
        .index
        .strict_pairs()
        .into_iter()
        .map(|(t, s)| {
            let values = pi0_map(&x.structure_map(t, s));
            ((t, s), FinSetMap::new(fibers[t], fibers[s], values))
        })
        .collect();
    ProObject::new(x.index.clone(), fibers, structure).expect("π₀ preserves functoriality")
}

/// The level map π₀(f).
pub fn pro_pi0_map(f: &LevelMap<SSetCat>) -> LevelMap<FinSetCat> {
    let source = pro_pi0(&f.source);
    let target = pro_pi0(&f.target);
    let components = f
        .components
        .iter()
        .enumerate()
        .map(|(s, c)| FinSetMap::new(source.fibers[s], target.fibers[s], pi0_map(c)))
        .collect();
    LevelMap::new(source, target, components).expect("π₀ preserves naturality")
}
