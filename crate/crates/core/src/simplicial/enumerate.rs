//! Exhaustive enumeration of simplicial maps.

use crate::budget::{Budget, BudgetError};

use super::map::SSetMap;
use super::sset::{CellId, SimplexRef, TruncatedSSet};

/// All simplicial maps `X -> Y`, in a deterministic order.
///
/// Cells of `X` are assigned images by ascending (dimension, index); a
/// candidate image for an `m`-cell must restrict on every face to the image
/// already chosen for that face.  The budget counts candidate checks.
pub fn enumerate_maps(
    x: &TruncatedSSet,
    y: &TruncatedSSet,
    budget: &Budget,
) -> Result<Vec<SSetMap>, BudgetError> {
    let mut results = Vec::new();
    let order: Vec<CellId> = x.all_cell_ids().collect();
    let mut chosen: Vec<Vec<Option<SimplexRef>>> = (0..=x.dim_bound())
        .map(|m| vec![None; x.cell_count(m)])
        .collect();
    // Candidate pools per dimension, shared across the search.
    let pools: Vec<Vec<SimplexRef>> = (0..=x.dim_bound()).map(|m| y.all_simplices(m)).collect();

    search(
        x,
        y,
        &order,
        0,
        &pools,
        &mut chosen,
        &mut results,
        budget,
    )?;
    Ok(results)
}

#[allow(clippy::too_many_arguments)]
fn search(
    x: &TruncatedSSet,
    y: &TruncatedSSet,
    order: &[CellId],
    pos: usize,
    pools: &[Vec<SimplexRef>],
    chosen: &mut Vec<Vec<Option<SimplexRef>>>,
    results: &mut Vec<SSetMap>,
    budget: &Budget,
) -> Result<(), BudgetError> {
    if pos == order.len() {
        let images = chosen
            .iter()
            .map(|level| level.iter().map(|c| c.clone().unwrap()).collect())
            .collect();
        results.push(SSetMap {
            source: x.clone(),
            target: y.clone(),
            images,
        });
        return Ok(());
    }
    let id = order[pos];
    let m = id.dim;
    let faces: Vec<SimplexRef> = if m == 0 {
        Vec::new()
    } else {
        x.cell(id).faces.clone()
    };
    for cand in &pools[m] {
        budget.spend(1, "enumerating simplicial maps")?;
        let ok = (0..faces.len()).all(|i| {
            let expected = apply_partial(x, &faces[i], chosen);
            y.face(cand, i) == expected
        });
        if ok {
            chosen[m][id.idx] = Some(cand.clone());
            search(x, y, order, pos + 1, pools, chosen, results, budget)?;
            chosen[m][id.idx] = None;
        }
    }
    Ok(())
}

/// Image of a lower-dimensional simplex under the partially built map;
/// the core cell is guaranteed to be assigned already.
fn apply_partial(
    x: &TruncatedSSet,
    r: &SimplexRef,
    chosen: &[Vec<Option<SimplexRef>>],
) -> SimplexRef {
    let img = chosen[r.target.dim][r.target.idx]
        .as_ref()
        .expect("faces are assigned before cofaces");
    if r.is_nondegenerate() {
        return img.clone();
    }
    let _ = x;
    let total = r.epi().then(&img.epi());
    SimplexRef {
        word: super::operator::DegeneracyWord::from_epi(&total),
        target: img.target,
    }
}

/// Brute-force count of vertex-image extensions, used as an independent
/// oracle in tests: assigns every nondegenerate cell an image simplex with
/// no face pre-filtering and validates the finished candidate wholesale.
pub fn count_maps_brute_force(x: &TruncatedSSet, y: &TruncatedSSet, cap: u64) -> u64 {
    let order: Vec<CellId> = x.all_cell_ids().collect();
    let pools: Vec<Vec<SimplexRef>> = (0..=x.dim_bound()).map(|m| y.all_simplices(m)).collect();
    let mut count = 0u64;
    let mut stack: Vec<usize> = vec![0; order.len()];
    let mut depth = 0usize;
    let mut steps = 0u64;
    if order.is_empty() {
        return 1;
    }
    loop {
        steps += 1;
        assert!(steps < cap, "brute-force oracle exceeded its cap");
        if depth == order.len() {
            let images: Vec<Vec<SimplexRef>> = (0..=x.dim_bound())
                .map(|m| {
                    (0..x.cell_count(m))
                        .map(|idx| {
                            let pos = order
                                .iter()
                                .position(|id| *id == CellId { dim: m, idx })
                                .unwrap();
                            pools[m][stack[pos]].clone()
                        })
                        .collect()
                })
                .collect();
            if SSetMap::new(x.clone(), y.clone(), images).is_ok() {
                count += 1;
            }
            depth -= 1;
            stack[depth] += 1;
            continue;
        }
        let m = order[depth].dim;
        if stack[depth] >= pools[m].len() {
            if depth == 0 {
                break;
            }
            stack[depth] = 0;
            depth -= 1;
            stack[depth] += 1;
            continue;
        }
        depth += 1;
        if depth < order.len() {
            stack[depth] = 0;
        }
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::constructors::boundary;

    #[test]
    fn map_counts_match_spec_examples() {
        let budget = Budget::default_budget();
        let d0 = TruncatedSSet::standard_simplex(0, 1).unwrap();
        let d1 = TruncatedSSet::standard_simplex(1, 1).unwrap();
        // (Δ⁰, Δ¹): one map per vertex.
        assert_eq!(enumerate_maps(&d0, &d1, &budget).unwrap().len(), 2);
        // (Δ¹, Δ¹): the monotone maps [1] -> [1].
        assert_eq!(enumerate_maps(&d1, &d1, &budget).unwrap().len(), 3);
        // (Δ¹, ∂Δ¹): both constants.
        let (b1, _) = boundary(1, 1).unwrap();
        let maps = enumerate_maps(&d1, &b1, &budget).unwrap();
        assert_eq!(maps.len(), 2);
        for m in &maps {
            m.validate().unwrap();
            assert!(!m.is_injective());
        }
    }

    #[test]
    fn enumerate_agrees_with_brute_force_on_small_instances() {
        let budget = Budget::default_budget();
        let shapes: Vec<TruncatedSSet> = vec![
            TruncatedSSet::standard_simplex(0, 1).unwrap(),
            TruncatedSSet::standard_simplex(1, 1).unwrap(),
            boundary(1, 1).unwrap().0,
            TruncatedSSet::empty(1),
        ];
        for x in &shapes {
            for y in &shapes {
                let fast = enumerate_maps(x, y, &budget).unwrap().len() as u64;
                let brute = count_maps_brute_force(x, y, 2_000_000);
                assert_eq!(fast, brute, "mismatch for {x:?} -> {y:?}");
            }
        }
    }

    #[test]
    fn all_enumerated_maps_validate() {
        let budget = Budget::default_budget();
        let d2 = TruncatedSSet::standard_simplex(2, 2).unwrap();
        let (b2, _) = boundary(2, 2).unwrap();
        for m in enumerate_maps(&b2, &d2, &budget).unwrap() {
            m.validate().unwrap();
        }
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let tiny = Budget::new(5);
        let d2 = TruncatedSSet::standard_simplex(2, 2).unwrap();
        let err = enumerate_maps(&d2, &d2, &tiny).unwrap_err();
        assert!(err.to_string().contains("simplicial maps"));
    }
}
