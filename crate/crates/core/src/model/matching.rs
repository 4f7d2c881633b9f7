//! Matching objects: limits over the part of the index strictly below an
//! element, and relative matching maps.

use crate::budget::{Budget, BudgetError};
use crate::pro::{LevelMap, ProObject, SSetCat};
use crate::simplicial::lim::{limit, pullback, Diagram, Limit};
use crate::simplicial::{SSetMap, TruncatedSSet};

/// The matching object of `x` at `t`: `lim_{s<t} X_s`, with its node list
/// (index elements, height-descending) for leg lookup.  The empty diagram
/// yields the point.
pub struct MatchingObject {
    pub limit: Limit,
    pub nodes: Vec<usize>,
}

impl MatchingObject {
    pub fn object(&self) -> &TruncatedSSet {
        &self.limit.object
    }

    pub fn leg(&self, s: usize) -> &SSetMap {
        let pos = self
            .nodes
            .iter()
            .position(|&n| n == s)
            .expect("node below the element");
        &self.limit.legs[pos]
    }
}

pub fn matching_object(
    x: &ProObject<SSetCat>,
    t: usize,
    budget: &Budget,
) -> Result<MatchingObject, BudgetError> {
    let index = &x.index;
    let mut nodes: Vec<usize> = (0..index.len())
        .filter(|&s| s != t && index.leq(s, t))
        .collect();
    let heights = index.heights();
    nodes.sort_by_key(|&s| (std::cmp::Reverse(heights[s]), s));

    let arrows: Vec<(usize, usize, SSetMap)> = nodes
        .iter()
        .enumerate()
        .flat_map(|(i, &a)| {
            nodes
                .iter()
                .enumerate()
                .filter(move |&(j, &b)| i != j && index.leq(b, a))
                .map(move |(j, &b)| (i, j, x.structure_map(a, b)))
        })
        .collect();
    let dim_bound = x
        .fibers
        .iter()
        .map(|f| f.dim_bound())
        .min()
        .unwrap_or(0);
    let node_refs: Vec<&TruncatedSSet> = nodes.iter().map(|&s| &x.fibers[s]).collect();
    let arrow_refs: Vec<(usize, usize, &SSetMap)> =
        arrows.iter().map(|&(i, j, ref m)| (i, j, m)).collect();
    let diagram = Diagram {
        nodes: node_refs,
        arrows: arrow_refs,
    };
    let lim = limit(&diagram, dim_bound, budget)?;
    Ok(MatchingObject { limit: lim, nodes })
}

/// The cone `X_t -> lim_{s<t} X_s` induced by the structure maps.
pub fn matching_cone(
    x: &ProObject<SSetCat>,
    t: usize,
    matching: &MatchingObject,
) -> Result<SSetMap, String> {
    if matching.nodes.is_empty() {
        // Unique map to the point.
        let budget = Budget::default_budget();
        return crate::simplicial::enumerate_maps(&x.fibers[t], matching.object(), &budget)
            .map_err(|e| e.to_string())?
            .pop()
            .ok_or_else(|| "the point is terminal".to_string());
    }
    let legs: Vec<SSetMap> = matching
        .nodes
        .iter()
        .map(|&s| x.structure_map(t, s))
        .collect();
    let leg_refs: Vec<&SSetMap> = legs.iter().collect();
    matching.limit.mediator(&leg_refs)
}

/// The relative matching map of a level map at `t`:
/// `X_t -> Y_t ×_{lim_{s<t} Y_s} lim_{s<t} X_s`, together with the
/// pullback data.
pub struct RelativeMatching {
    pub map: SSetMap,
    /// The fiber product with legs [to Y_t, to lim X, to lim Y].
    pub window: Limit,
}

pub fn relative_matching_map(
    f: &LevelMap<SSetCat>,
    t: usize,
    budget: &Budget,
) -> Result<RelativeMatching, String> {
    let x = &f.source;
    let y = &f.target;
    let mx = matching_object(x, t, budget).map_err(|e| e.to_string())?;
    let my = matching_object(y, t, budget).map_err(|e| e.to_string())?;
    // lim X -> lim Y through the components.
    let lim_map = if my.nodes.is_empty() {
        crate::simplicial::enumerate_maps(mx.object(), my.object(), budget)
            .map_err(|e| e.to_string())?
            .pop()
            .ok_or("the point is terminal")?
    } else {
        let legs: Vec<SSetMap> = my
            .nodes
            .iter()
            .map(|&s| mx.leg(s).then(f.component(s)))
            .collect();
        let leg_refs: Vec<&SSetMap> = legs.iter().collect();
        my.limit.mediator(&leg_refs)?
    };
    let y_cone = matching_cone(y, t, &my)?;
    let window = pullback(&y_cone, &lim_map, budget)?;
    // X_t into the window: (f_t, cone, their common composite).
    let x_cone = matching_cone(x, t, &mx)?;
    let common = f.component(t).then(&y_cone);
    let map = window.mediator(&[f.component(t), &x_cone, &common])?;
    Ok(RelativeMatching { map, window })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pro::ProObject;

    fn budget() -> Budget {
        Budget::default_budget()
    }

    #[test]
    fn height_zero_matching_is_the_point() {
        let pt = TruncatedSSet::standard_simplex(0, 1).unwrap();
        let c: ProObject<SSetCat> = ProObject::constant(pt);
        let m = matching_object(&c, 0, &budget()).unwrap();
        assert_eq!(m.object().total_cells(), 1);
    }

    #[test]
    fn two_chain_matching_is_the_lower_fiber() {
        let (b1, _) = crate::simplicial::boundary(1, 1).unwrap();
        let pt = TruncatedSSet::standard_simplex(0, 1).unwrap();
        let hit = {
            let maps =
                crate::simplicial::enumerate_maps(&pt, &b1, &budget()).unwrap();
            maps.into_iter().next().unwrap()
        };
        let tower: ProObject<SSetCat> = ProObject::tower(vec![b1.clone(), pt], vec![hit]).unwrap();
        let m = matching_object(&tower, 1, &budget()).unwrap();
        // The matching object at the top of a 2-chain is the bottom fiber
        // (up to the tuple presentation).
        assert_eq!(m.object().cell_count(0), b1.cell_count(0));
        assert_eq!(m.object().cell_count(1), b1.cell_count(1));
    }

    #[test]
    fn relative_matching_at_height_zero_is_the_component() {
        // At a minimal element the window is Y_t itself.
        let (b1, _) = crate::simplicial::boundary(1, 1).unwrap();
        let pt = TruncatedSSet::standard_simplex(0, 1).unwrap();
        let fold = crate::simplicial::enumerate_maps(&b1, &pt, &budget())
            .unwrap()
            .pop()
            .unwrap();
        let src: ProObject<SSetCat> = ProObject::constant(b1);
        let tgt: ProObject<SSetCat> = ProObject::constant(pt);
        let f = LevelMap::new(src, tgt, vec![fold]).unwrap();
        let rm = relative_matching_map(&f, 0, &budget()).unwrap();
        rm.map.validate().unwrap();
        assert_eq!(rm.window.object.cell_count(0), 1);
    }
}
