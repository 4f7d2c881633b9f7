//! Lifting trivial cofibrations against strong fibrations, level by
//! level.
//!
//! The partial lift is extended in height order: at each element the
//! extension solves one finite lifting problem against the relative
//! matching map, from a source stage `a(t)` chosen minimally so that the
//! skeletal search succeeds.  When the left leg carries height-indexed
//! cell certificates (as factorization outputs do), the level itself
//! already works and the scan finds it immediately.

use crate::budget::{Budget, BudgetError};
use crate::lifting::{solve_lift, LiftingSquare};
use crate::pro::{LevelMap, RawProMap, SSetCat};
use crate::simplicial::SSetMap;
use crate::verdict::Verdict;

use super::matching::matching_object;

pub struct ProLift {
    pub lift: RawProMap<SSetCat>,
    pub verdict: Verdict,
}

/// Solve the square `top ∘ j = p ∘ ?` … more precisely, find
/// `h : X -> E` with `h ∘ j = top` and `p ∘ h = bottom`, where all four
/// maps are level over one index, `j` is a (trivial) cofibration and `p`
/// a strong fibration.
pub fn solve_pro_lifting(
    j: &LevelMap<SSetCat>,
    p: &LevelMap<SSetCat>,
    top: &LevelMap<SSetCat>,
    bottom: &LevelMap<SSetCat>,
    budget: &Budget,
) -> Result<ProLift, BudgetError> {
    let index = j.source.index.clone();
    let a_sys = &j.source; // A
    let x_sys = &j.target; // X
    let e_sys = &p.source; // E
    let b_sys = &p.target; // B
    assert_eq!(index, p.source.index, "levelified inputs required");
    let fail = |e: String| BudgetError {
        what: e,
        limit: budget.limit(),
    };

    let n = index.len();
    let mut a_of: Vec<Option<usize>> = vec![None; n];
    let mut lifts: Vec<Option<SSetMap>> = vec![None; n];

    for t in index.by_height() {
        // The relative matching window of p at t.
        let me = matching_object(e_sys, t, budget)?;
        let mb = matching_object(b_sys, t, budget)?;
        let lim_map = if mb.nodes.is_empty() {
            crate::simplicial::enumerate_maps(me.object(), mb.object(), budget)?
                .pop()
                .ok_or_else(|| fail("the point is terminal".into()))?
        } else {
            let legs: Vec<SSetMap> = mb
                .nodes
                .iter()
                .map(|&s| me.leg(s).then(p.component(s)))
                .collect();
            let leg_refs: Vec<&SSetMap> = legs.iter().collect();
            mb.limit.mediator(&leg_refs).map_err(&fail)?
        };
        let b_cone = super::matching::matching_cone(b_sys, t, &mb).map_err(&fail)?;
        let window = crate::simplicial::lim::pullback(&b_cone, &lim_map, budget).map_err(&fail)?;
        let q_t = {
            let e_cone = super::matching::matching_cone(e_sys, t, &me).map_err(&fail)?;
            let to_lim_b = e_cone.then(&lim_map);
            window
                .mediator(&[p.component(t), &e_cone, &to_lim_b])
                .map_err(&fail)?
        };

        // Scan candidate source stages in (height, id) order.
        let mut found = None;
        for cand in index.by_height() {
            if !index.leq(t, cand) {
                continue;
            }
            if (0..n).any(|s| {
                s != t && index.leq(s, t) && !index.leq(a_of[s].expect("built below"), cand)
            }) {
                continue;
            }
            // Square: A_cand -> E_t over X_cand -> W_t.
            let top_leg = a_sys
                .structure_map(cand, t)
                .then(top.component(t));
            let bottom_window = {
                // X_cand -> W_t: (to B_t, to lim E, to lim B).
                let to_b = x_sys
                    .structure_map(cand, t)
                    .then(bottom.component(t));
                let to_lim_e = if me.nodes.is_empty() {
                    match crate::simplicial::enumerate_maps(
                        &x_sys.fibers[cand],
                        me.object(),
                        budget,
                    )?
                    .pop()
                    {
                        Some(m) => m,
                        None => continue,
                    }
                } else {
                    let legs: Vec<SSetMap> = me
                        .nodes
                        .iter()
                        .map(|&s| {
                            x_sys
                                .structure_map(cand, a_of[s].expect("built"))
                                .then(lifts[s].as_ref().expect("built"))
                        })
                        .collect();
                    let leg_refs: Vec<&SSetMap> = legs.iter().collect();
                    match me.limit.mediator(&leg_refs) {
                        Ok(m) => m,
                        Err(_) => continue,
                    }
                };
                let to_lim_b = to_lim_e.then(&lim_map);
                match window.mediator(&[&to_b, &to_lim_e, &to_lim_b]) {
                    Ok(m) => m,
                    Err(_) => continue,
                }
            };
            let square = match LiftingSquare::new(
                j.component(cand).clone(),
                q_t.clone(),
                top_leg,
                bottom_window,
            ) {
                Ok(sq) => sq,
                Err(_) => continue,
            };
            if let Some(h) = solve_lift(&square, budget)? {
                // The filler is X_cand -> E_t directly.
                found = Some((cand, h));
                break;
            }
        }
        let Some((cand, h)) = found else {
            return Ok(ProLift {
                lift: RawProMap::identity(&j.source),
                verdict: Verdict::unknown(format!("no extension found at level {t}")),
            });
        };
        a_of[t] = Some(cand);
        lifts[t] = Some(h);
    }

    // Assemble the raw lift X -> E.
    let reps = (0..n)
        .map(|t| (a_of[t].unwrap(), lifts[t].clone().unwrap()))
        .collect();
    let lift = RawProMap::from_reps(x_sys.clone(), e_sys.clone(), reps)
        .map_err(|e| fail(format!("assembled lift incompatible: {e}")))?;
    // Verify both triangles as pro-maps.
    let top_raw = RawProMap::from_level(top);
    let bottom_raw = RawProMap::from_level(bottom);
    let j_raw = RawProMap::from_level(j);
    let p_raw = RawProMap::from_level(p);
    let verdict = if j_raw.then(&lift).pro_eq(&top_raw) && lift.then(&p_raw).pro_eq(&bottom_raw) {
        Verdict::Holds
    } else {
        Verdict::fails("assembled lift does not close the triangles".to_string())
    };
    Ok(ProLift { lift, verdict })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pro::ProObject;
    use crate::simplicial::{horn, TruncatedSSet};

    fn budget() -> Budget {
        Budget::new(400_000_000)
    }

    #[test]
    fn identity_square_lifts_by_the_top() {
        let pt = TruncatedSSet::standard_simplex(0, 1).unwrap();
        let c: ProObject<SSetCat> = ProObject::constant(pt);
        let id = LevelMap::identity(&c);
        let out = solve_pro_lifting(&id, &id, &id, &id, &budget()).unwrap();
        assert!(out.verdict.holds());
    }

    #[test]
    fn constant_horn_against_a_nerve() {
        use crate::groups::FinGroup;
        let nerve = crate::simplicial::nerve::nerve_of_group(&FinGroup::cyclic(2), 2, 10_000)
            .unwrap()
            .sset;
        let (h, incl) = horn(2, 1, 2).unwrap();
        let pt = TruncatedSSet::standard_simplex(0, 2).unwrap();
        let to_pt = crate::simplicial::enumerate_maps(&nerve, &pt, &budget())
            .unwrap()
            .pop()
            .unwrap();
        // Pick any top map Λ²₁ -> nerve; the bottom is forced constant.
        let top0 = crate::simplicial::enumerate_maps(&h, &nerve, &budget())
            .unwrap()
            .into_iter()
            .next_back()
            .unwrap();
        let bottom0 = crate::simplicial::enumerate_maps(&incl.target, &pt, &budget())
            .unwrap()
            .pop()
            .unwrap();
        let j = LevelMap::new(
            ProObject::constant(h),
            ProObject::constant(incl.target.clone()),
            vec![incl],
        )
        .unwrap();
        let p = LevelMap::new(
            ProObject::constant(nerve.clone()),
            ProObject::constant(pt),
            vec![to_pt],
        )
        .unwrap();
        let top = LevelMap::new(j.source.clone(), p.source.clone(), vec![top0]).unwrap();
        let bottom = LevelMap::new(j.target.clone(), p.target.clone(), vec![bottom0]).unwrap();
        let out = solve_pro_lifting(&j, &p, &top, &bottom, &budget()).unwrap();
        assert!(out.verdict.holds(), "{}", out.verdict);
    }
}
