//! The pro-Hom set: `lim_s colim_t Hom(X_t, Y_s)` computed exactly.

use crate::budget::{Budget, BudgetError};

use super::fiber::FiberCategory;
use super::object::ProObject;
use super::raw::RawProMap;

/// The complete, duplicate-free set of pro-morphisms `X -> Y`.
///
/// Per target index the colimit classes of `(t, f)` pairs are formed by
/// refining representatives to a dominating index; the limit pass then
/// assembles compatible tuples.  Over a finite directed index the greatest
/// element canonicalizes both steps.
pub fn pro_hom<C: FiberCategory>(
    x: &ProObject<C>,
    y: &ProObject<C>,
    budget: &Budget,
) -> Result<Vec<RawProMap<C>>, BudgetError> {
    let top_x = x.index.top();
    // Colimit classes at each target index, canonicalized at the top.
    let mut classes: Vec<Vec<C::Mor>> = Vec::new();
    for s in 0..y.index.len() {
        let mut level: Vec<C::Mor> = Vec::new();
        for t in 0..x.index.len() {
            for f in C::hom(&x.fibers[t], &y.fibers[s], budget)? {
                let refined = C::compose(&x.structure_map(top_x, t), &f);
                if !level.contains(&refined) {
                    level.push(refined);
                }
            }
        }
        level.sort();
        classes.push(level);
    }

    // Limit pass: compatible tuples, assembled in descending height so
    // each element is either free (the top) or forced by one above it.
    let order = {
        let mut o = y.index.by_height();
        o.reverse();
        o
    };
    let top_y = order[0];
    debug_assert_eq!(top_y, y.index.top());

    let mut out = Vec::new();
    'outer: for g in &classes[top_y] {
        let mut tuple: Vec<Option<C::Mor>> = vec![None; y.index.len()];
        tuple[top_y] = Some(g.clone());
        for &s in &order[1..] {
            let forced = C::compose(g, &y.structure_map(top_y, s));
            // The forced representative must be one of the colimit
            // classes at s (it is, by construction).
            if !classes[s].contains(&forced) {
                continue 'outer;
            }
            tuple[s] = Some(forced);
        }
        let reps = tuple
            .into_iter()
            .map(|f| (top_x, f.expect("tuple is total")))
            .collect();
        let raw = RawProMap::from_reps(x.clone(), y.clone(), reps)
            .expect("canonical tuples are compatible");
        out.push(raw);
    }
    Ok(out)
}

/// Search for a two-sided inverse of `f` in the pro-Hom sets.
pub fn two_sided_inverse<C: FiberCategory>(
    f: &RawProMap<C>,
    budget: &Budget,
) -> Result<Option<RawProMap<C>>, BudgetError> {
    for g in pro_hom(&f.target, &f.source, budget)? {
        if f.then(&g).is_pro_identity() && g.then(f).is_pro_identity() {
            return Ok(Some(g));
        }
    }
    Ok(None)
}
