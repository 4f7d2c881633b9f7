//! Lifting-problem search.
//!
//! The filler is built skeleton by skeleton over the cells of `B` outside
//! the image of `i`, with backtracking; cells in the image are forced by
//! `top`.  `None` means the finite search space was exhausted.

use crate::budget::{Budget, BudgetError};
use crate::simplicial::sset::{CellId, SimplexRef};
use crate::simplicial::{DegeneracyWord, Monotone, SSetMap};

use super::square::LiftingSquare;

/// Search for a filler of the square.  Deterministic: the first solution
/// in lexicographic candidate order is returned.
pub fn solve_lift(
    square: &LiftingSquare,
    budget: &Budget,
) -> Result<Option<SSetMap>, BudgetError> {
    let b = &square.i.target;
    let x = &square.p.source;

    // Forced assignments from top ∘ i⁻¹, including through degeneracies.
    let mut forced: Vec<Vec<Option<SimplexRef>>> = (0..=b.dim_bound())
        .map(|m| vec![None; b.cell_count(m)])
        .collect();
    let a = &square.i.source;
    for m in 0..=a.dim_bound() {
        for idx in 0..a.cell_count(m) {
            let id = CellId { dim: m, idx };
            let img = square.i.image_of_cell(id);
            let val = square.top.image_of_cell(id);
            if img.is_nondegenerate() {
                let slot = &mut forced[m][img.target.idx];
                match slot {
                    None => *slot = Some(val.clone()),
                    Some(prev) if prev != val => return Ok(None),
                    _ => {}
                }
            } else {
                // i(a) = w·c: the value on c is the unique section-pull of
                // top(a), which must re-degenerate to top(a).
                let epi = img.epi();
                let section = section_of(&epi);
                let candidate = x.apply_operator_ref(val, &section);
                let back = x.apply_operator_ref(&candidate, &epi);
                if back != *val {
                    return Ok(None);
                }
                let slot = &mut forced[img.target.dim][img.target.idx];
                match slot {
                    None => *slot = Some(candidate),
                    Some(prev) if *prev != candidate => return Ok(None),
                    _ => {}
                }
            }
        }
    }

    let order: Vec<CellId> = b.all_cell_ids().collect();
    let pools: Vec<Vec<SimplexRef>> = (0..=b.dim_bound()).map(|m| x.all_simplices(m)).collect();
    let mut chosen: Vec<Vec<Option<SimplexRef>>> = forced.clone();

    fn apply_partial(chosen: &[Vec<Option<SimplexRef>>], r: &SimplexRef) -> SimplexRef {
        let img = chosen[r.target.dim][r.target.idx]
            .as_ref()
            .expect("faces assigned first");
        if r.is_nondegenerate() {
            return img.clone();
        }
        let total = r.epi().then(&img.epi());
        SimplexRef {
            word: DegeneracyWord::from_epi(&total),
            target: img.target,
        }
    }

    fn search(
        square: &LiftingSquare,
        order: &[CellId],
        pos: usize,
        pools: &[Vec<SimplexRef>],
        forced: &[Vec<Option<SimplexRef>>],
        chosen: &mut Vec<Vec<Option<SimplexRef>>>,
        budget: &Budget,
    ) -> Result<Option<SSetMap>, BudgetError> {
        if pos == order.len() {
            let images = chosen
                .iter()
                .map(|lvl| lvl.iter().map(|c| c.clone().unwrap()).collect())
                .collect();
            let h = SSetMap {
                source: square.i.target.clone(),
                target: square.p.source.clone(),
                images,
            };
            if h.validate().is_ok() && square.is_filler(&h) {
                return Ok(Some(h));
            }
            return Ok(None);
        }
        let id = order[pos];
        let b = &square.i.target;
        let x = &square.p.source;
        let m = id.dim;
        let faces: Vec<SimplexRef> = if m == 0 {
            Vec::new()
        } else {
            b.cell(id).faces.clone()
        };
        let bottom_img = square.bottom.image_of_cell(id);

        let candidates: Vec<SimplexRef> = match &forced[m][id.idx] {
            Some(v) => vec![v.clone()],
            None => pools[m].clone(),
        };
        for cand in candidates {
            budget.spend(1, "searching for a lift")?;
            let face_ok = (0..faces.len())
                .all(|i| x.face(&cand, i) == apply_partial(chosen, &faces[i]));
            let over_ok = square.p.apply(&cand) == *bottom_img;
            if face_ok && over_ok {
                chosen[m][id.idx] = Some(cand.clone());
                if let Some(h) = search(square, order, pos + 1, pools, forced, chosen, budget)? {
                    return Ok(Some(h));
                }
                chosen[m][id.idx] = forced[m][id.idx].clone();
            }
        }
        Ok(None)
    }

    search(square, &order, 0, &pools, &forced, &mut chosen, budget)
}

/// A monotone section of a surjection (least preimage of each value).
fn section_of(epi: &Monotone) -> Monotone {
    let mut vals = Vec::with_capacity(epi.target_rank() + 1);
    for v in 0..=epi.target_rank() {
        let j = (0..=epi.source_rank())
            .find(|&j| epi.apply(j) == v)
            .expect("surjection hits every value");
        vals.push(j);
    }
    Monotone::new(vals, epi.source_rank())
}

/// Count all fillers (used by tests and the report layer).
pub fn count_lifts(square: &LiftingSquare, budget: &Budget) -> Result<usize, BudgetError> {
    // Exhaustive variant of the search: same pruning, no early return.
    let b = &square.i.target;
    let x = &square.p.source;
    let all = crate::simplicial::enumerate_maps(b, x, budget)?;
    Ok(all.iter().filter(|h| square.is_filler(h)).count())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::{boundary, horn, SSetMap, TruncatedSSet};

    fn budget() -> Budget {
        Budget::default_budget()
    }

    #[test]
    fn horn_over_terminal_target_fills() {
        let (h, incl) = horn(2, 1, 2).unwrap();
        let pt = TruncatedSSet::standard_simplex(0, 2).unwrap();
        let p = SSetMap::identity(&pt);
        let top = crate::simplicial::enumerate_maps(&h, &pt, &budget())
            .unwrap()
            .pop()
            .unwrap();
        let bottom = crate::simplicial::enumerate_maps(&incl.target, &pt, &budget())
            .unwrap()
            .pop()
            .unwrap();
        let sq = LiftingSquare::new(incl, p, top, bottom).unwrap();
        let lift = solve_lift(&sq, &budget()).unwrap();
        assert!(lift.is_some());
        assert!(sq.is_filler(&lift.unwrap()));
    }

    #[test]
    fn disconnected_target_blocks_the_edge() {
        // i = ∂Δ¹ -> Δ¹, p = ∂Δ¹ -> Δ⁰, top = id: no edge joins the two
        // points, so no lift exists.
        let (b1, incl) = boundary(1, 1).unwrap();
        let pt = TruncatedSSet::standard_simplex(0, 1).unwrap();
        let p = crate::simplicial::enumerate_maps(&b1, &pt, &budget())
            .unwrap()
            .pop()
            .unwrap();
        let top = SSetMap::identity(&b1);
        let bottom = crate::simplicial::enumerate_maps(&incl.target, &pt, &budget())
            .unwrap()
            .pop()
            .unwrap();
        let sq = LiftingSquare::new(incl, p, top, bottom).unwrap();
        assert!(solve_lift(&sq, &budget()).unwrap().is_none());
    }

    #[test]
    fn lifts_of_point_against_interval() {
        // i = ∅ -> Δ⁰, p = Δ¹ -> Δ⁰: one lift per vertex of Δ¹.
        let pt = TruncatedSSet::standard_simplex(0, 1).unwrap();
        let d1 = TruncatedSSet::standard_simplex(1, 1).unwrap();
        let i = SSetMap::from_empty(&pt, 1);
        let p = crate::simplicial::enumerate_maps(&d1, &pt, &budget())
            .unwrap()
            .pop()
            .unwrap();
        let top = SSetMap::from_empty(&d1, 1);
        let bottom = SSetMap::identity(&pt);
        let sq = LiftingSquare::new(i, p, top, bottom).unwrap();
        assert_eq!(count_lifts(&sq, &budget()).unwrap(), 2);
        assert!(solve_lift(&sq, &budget()).unwrap().is_some());
    }
}
