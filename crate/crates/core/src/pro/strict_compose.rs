//! Composing levelwise weak equivalences across a pro-isomorphism.
//!
//! Given `f : X -> Y` and `g : Z -> W` levelwise equivalences and a
//! pro-isomorphism `h : Y -> Z`, the composite `g ∘ h ∘ f` is presented
//! as a levelwise equivalence: restrict to a cofinal chain, pick coherent
//! diagonals for `h`, factor each diagonal as a cofibration followed by a
//! trivial fibration, and build the pullback/pushout systems.

use crate::budget::{Budget, BudgetError};
use crate::lifting::{factor_small_object, NThreshold};
use crate::simplicial::equivalence::is_weak_equivalence;
use crate::simplicial::{SSetMap, TruncatedSSet};
use crate::verdict::Verdict;

use super::fiber::SSetCat;
use super::iso::is_pro_iso;
use super::object::{LevelMap, ProObject};
use super::poset::CofinitePoset;
use super::raw::RawProMap;

pub struct StrictComposite {
    /// The levelwise presentation of `g ∘ h ∘ f`.
    pub map: LevelMap<SSetCat>,
    /// Surrogate verdict that every component is a weak equivalence.
    pub levelwise_we: Verdict,
    /// Pro-maps `X -> source` and `W -> target` carrying the composite to
    /// the output (verified to commute as pro-maps).
    pub source_witness: RawProMap<SSetCat>,
    pub target_witness: RawProMap<SSetCat>,
}

/// Present `g ∘ h ∘ f` as a level map of weak equivalences.
///
/// All three maps must be level over the same index; `h` must pass the
/// pro-isomorphism criterion and `f`, `g` the levelwise surrogate.
pub fn compose_strict(
    f: &LevelMap<SSetCat>,
    h: &LevelMap<SSetCat>,
    g: &LevelMap<SSetCat>,
    step_budget: usize,
    budget: &Budget,
) -> Result<StrictComposite, String> {
    if f.target != h.source || h.target != g.source {
        return Err("maps do not compose".into());
    }
    let index = &f.source.index;
    if *index != h.source.index || *index != g.source.index {
        return Err("maps must share one index".into());
    }
    let (iso, _) = is_pro_iso(h, budget).map_err(|e| e.to_string())?;
    if !iso.holds() {
        return Err(format!("middle map is not a pro-isomorphism: {iso}"));
    }
    for (s, c) in f.components.iter().chain(g.components.iter()).enumerate() {
        if is_weak_equivalence(c).is_fails() {
            return Err(format!("outer map component {s} is not a weak equivalence"));
        }
    }

    // Restrict to a cofinal chain through the top.
    let chain = index.greedy_chain();
    let f = f.restrict(&chain)?;
    let h = h.restrict(&chain)?;
    let g = g.restrict(&chain)?;
    let n = chain.len();
    let (x, y) = (&f.source, &f.target);
    let (z, w) = (&g.source, &g.target);

    // Coherent diagonals D_k : Z_k -> Y_{k+1} along the chain (elements
    // ordered top-first after restriction, so position k+1 is lower).
    // Triangles per k plus the telescoping condition between consecutive
    // diagonals.  Found by backtracking over the fiber hom-sets.
    // Positions: after restrict, index element k corresponds to the
    // original chain[k]; the chain поset order has position 0 = top.
    let order: Vec<usize> = {
        let heights = f.source.index.heights();
        let mut o: Vec<usize> = (0..n).collect();
        o.sort_by_key(|&k| std::cmp::Reverse(heights[k]));
        o
    };
    if n == 1 {
        // Single level: the composite is one weak equivalence.
        let comp = f.components[0].then(&h.components[0]).then(&g.components[0]);
        let we = is_weak_equivalence(&comp);
        let out_source = ProObject::constant(comp.source.clone());
        let out_target = ProObject::constant(comp.target.clone());
        let map = LevelMap::new(out_source.clone(), out_target.clone(), vec![comp])?;
        let source_witness = RawProMap::from_reps(
            f.source.clone(),
            out_source,
            vec![(order[0], SSetMap::identity(&f.source.fibers[order[0]]))],
        )?;
        let target_witness = RawProMap::from_reps(
            g.target.clone(),
            out_target,
            vec![(order[0], SSetMap::identity(&g.target.fibers[order[0]]))],
        )?;
        return Ok(StrictComposite {
            map,
            levelwise_we: we,
            source_witness,
            target_witness,
        });
    }

    let diagonals = search_diagonals(&h, &order, budget)
        .map_err(|e| e.to_string())?
        .ok_or("no coherent diagonal family exists for the middle isomorphism")?;

    // Factor each diagonal as cofibration then trivial fibration, and
    // form the pullback and pushout systems over the arrows of the chain.
    let arrows = n - 1;
    let mut a_objs: Vec<TruncatedSSet> = Vec::new();
    let mut a_incl: Vec<SSetMap> = Vec::new(); // i_k : Z_{hi} -> A_k
    let mut a_proj: Vec<SSetMap> = Vec::new(); // p_k : A_k -> Y_{lo}
    for d in diagonals.iter() {
        let r = factor_small_object(d, NThreshold::Finite(-1), step_budget, budget)
            .map_err(|e| e.to_string())?;
        if !r.report.holds() {
            return Err(format!(
                "diagonal factorization did not verify: {}",
                r.report.verdict
            ));
        }
        a_objs.push(r.right.source.clone());
        a_incl.push(r.left);
        a_proj.push(r.right);
    }

    // Structure maps of the A-system: lifts in
    //   Z_hi --φ--> Z_hi' --i'--> A_{k+1}
    //    |i                        |p'
    //   A_k --p--> Y_lo --ψ--> Y_lo'
    let mut a_structure: Vec<SSetMap> = Vec::new();
    for k in 0..arrows.saturating_sub(1) {
        let hi = order[k];
        let hi_next = order[k + 1];
        let lo_next = order[k + 2];
        let _ = lo_next;
        let top = z
            .structure_map(hi, hi_next)
            .then(&a_incl[k + 1]);
        let bottom = a_proj[k].then(&y.structure_map(order[k + 1], order[k + 2]));
        let square = crate::lifting::LiftingSquare::new(
            a_incl[k].clone(),
            a_proj[k + 1].clone(),
            top,
            bottom,
        )?;
        let lift = crate::lifting::solve_lift(&square, budget)
            .map_err(|e| e.to_string())?
            .ok_or("no connecting lift between diagonal factorizations")?;
        a_structure.push(lift);
    }

    // Pullbacks B_k = X_lo ×_{Y_lo} A_k and pushouts C_k = W_hi ⊔_{Z_hi} A_k.
    let mut b_data = Vec::new();
    let mut c_data = Vec::new();
    for k in 0..arrows {
        let lo = order[k + 1];
        let hi = order[k];
        let pb = crate::simplicial::lim::pullback(&f.components[lo], &a_proj[k], budget)
            .map_err(|e| e.to_string())?;
        let po = crate::simplicial::colim::pushout(&a_incl[k], &g.components[hi])?;
        b_data.push(pb);
        c_data.push(po);
    }

    // Assemble the three pro-objects over the arrow chain (position k of
    // the new chain corresponds to the arrow order[k] -> order[k+1], with
    // position 0 the deepest arrow; reverse so the chain poset's top is
    // the deepest stage).
    let out_index = CofinitePoset::chain(arrows);
    let pos_of = |k: usize| arrows - 1 - k; // arrow k sits at chain position
    let mut b_fibers = vec![None; arrows];
    let mut c_fibers = vec![None; arrows];
    for k in 0..arrows {
        b_fibers[pos_of(k)] = Some(b_data[k].object.clone());
        c_fibers[pos_of(k)] = Some(c_data[k].object.clone());
    }
    // Consecutive structure maps.
    let mut b_step: Vec<Option<SSetMap>> = vec![None; arrows.saturating_sub(1)];
    let mut c_step: Vec<Option<SSetMap>> = vec![None; arrows.saturating_sub(1)];
    for k in 0..arrows.saturating_sub(1) {
        // B_k -> B_{k+1}: legs through X-structure and the A-connection.
        let legs_b = [
            b_data[k].legs[0].then(&x.structure_map(order[k + 1], order[k + 2])),
            b_data[k].legs[1].then(&a_structure[k]),
            b_data[k].legs[2].then(&y.structure_map(order[k + 1], order[k + 2])),
        ];
        let med_b = b_data[k + 1]
            .mediator(&[&legs_b[0], &legs_b[1], &legs_b[2]])
            .map_err(|e| format!("pullback connection failed: {e}"))?;
        // C_k -> C_{k+1}: legs through the A-connection and W-structure.
        let legs_c = [
            a_structure[k].then(&c_data[k + 1].legs[0]),
            w.structure_map(order[k], order[k + 1])
                .then(&c_data[k + 1].legs[1]),
        ];
        let med_c = c_data[k]
            .mediator(&[&legs_c[0], &legs_c[1]])
            .map_err(|e| format!("pushout connection failed: {e}"))?;
        // Stored against chain positions: map from deeper position to
        // shallower is pos_of(k) <- pos_of(k+1): i.e. structure map from
        // position pos_of(k+1)+? — the deeper arrow is k+1.
        b_step[k] = Some(med_b);
        c_step[k] = Some(med_c);
    }

    let assemble = |fibers: Vec<Option<TruncatedSSet>>,
                    steps: &[Option<SSetMap>],
                    forward: bool|
     -> Result<ProObject<SSetCat>, String> {
        let fibers: Vec<TruncatedSSet> = fibers.into_iter().map(Option::unwrap).collect();
        let mut structure = std::collections::BTreeMap::new();
        // steps[k] connects arrow k (position pos_of(k)) and arrow k+1
        // (position pos_of(k+1) = pos_of(k) - 1): a map from the deeper
        // arrow's fiber to the shallower one's.
        for hi_pos in 0..arrows {
            for lo_pos in 0..hi_pos {
                // positions: hi_pos deeper. Arrows: k_hi = arrows-1-hi_pos.
                let mut acc: Option<SSetMap> = None;
                let mut pos = hi_pos;
                while pos > lo_pos {
                    let k = arrows - 1 - pos; // arrow index of this step
                    let step = steps[k].clone().unwrap();
                    let step = if forward { step } else { step };
                    acc = Some(match acc {
                        None => step,
                        Some(m) => m.then(&step),
                    });
                    pos -= 1;
                }
                structure.insert((hi_pos, lo_pos), acc.unwrap());
            }
        }
        ProObject::new(CofinitePoset::chain(arrows), fibers, structure)
    };
    let _ = &out_index;
    let b_sys = assemble(b_fibers, &b_step, true)?;
    let c_sys = assemble(c_fibers, &c_step, true)?;

    // Components B_k -> A_k -> C_k (pullback's A-projection, then the
    // pushout's A-leg).
    let mut components = vec![None; arrows];
    for k in 0..arrows {
        components[pos_of(k)] = Some(b_data[k].legs[1].then(&c_data[k].legs[0]));
    }
    let components: Vec<SSetMap> = components.into_iter().map(Option::unwrap).collect();
    let map = LevelMap::new(b_sys.clone(), c_sys.clone(), components)?;

    // Levelwise weak-equivalence surrogate.
    let levelwise_we = Verdict::all(map.components.iter().map(is_weak_equivalence));

    // Witnesses: X -> B and W -> C.
    let source_witness = {
        let reps = (0..arrows)
            .map(|pos| {
                let k = arrows - 1 - pos;
                let hi = order[k];
                // X_hi -> B_k via (structure, i ∘ h ∘ f).
                let to_a = f.components[hi]
                    .then(&h.components[hi])
                    .then(&a_incl[k]);
                let leg_x = x.structure_map(hi, order[k + 1]);
                let leg_y = leg_x.then(&f.components[order[k + 1]]);
                let med = b_data[k]
                    .mediator(&[&leg_x, &to_a, &leg_y])
                    .expect("pullback mediator for the witness");
                (hi, med)
            })
            .collect();
        RawProMap::from_reps(x.clone(), b_sys.clone(), reps)?
    };
    let target_witness = {
        let reps = (0..arrows)
            .map(|pos| {
                let k = arrows - 1 - pos;
                let hi = order[k];
                (hi, w.structure_map(hi, hi).then(&c_data[k].legs[1]))
            })
            .collect();
        RawProMap::from_reps(w.clone(), c_sys.clone(), reps)?
    };
    // The witness square: (X -> B -> C) agrees with (X -> W -> C).
    let via_b = source_witness.then(&RawProMap::from_level(&map));
    let composite = RawProMap::from_level(&f)
        .then(&RawProMap::from_level(&h))
        .then(&RawProMap::from_level(&g));
    let via_w = composite.then(&target_witness);
    if !via_b.pro_eq(&via_w) {
        return Err("output is not isomorphic to the composite".into());
    }

    Ok(StrictComposite {
        map,
        levelwise_we,
        source_witness,
        target_witness,
    })
}

/// Backtracking search for diagonals `D_k : Z_{e_k} -> Y_{e_{k+1}}` with
/// the two triangle identities and the telescoping coherence.
fn search_diagonals(
    h: &LevelMap<SSetCat>,
    order: &[usize],
    budget: &Budget,
) -> Result<Option<Vec<SSetMap>>, BudgetError> {
    let n = order.len();
    let mut chosen: Vec<SSetMap> = Vec::new();
    fn rec(
        h: &LevelMap<SSetCat>,
        order: &[usize],
        k: usize,
        chosen: &mut Vec<SSetMap>,
        budget: &Budget,
    ) -> Result<bool, BudgetError> {
        let n = order.len();
        if k + 1 >= n {
            return Ok(true);
        }
        let hi = order[k];
        let lo = order[k + 1];
        let y = &h.source;
        let z = &h.target;
        for d in crate::simplicial::enumerate_maps(&z.fibers[hi], &y.fibers[lo], budget)? {
            // Triangles: h_hi then d = ψ^Y, d then h_lo = φ^Z.
            if h.components[hi].then(&d) != y.structure_map(hi, lo) {
                continue;
            }
            if d.then(&h.components[lo]) != z.structure_map(hi, lo) {
                continue;
            }
            // Coherence with the previous diagonal:
            // ψ^Y ∘ D_{k-1} = D_k ∘ φ^Z.
            if k > 0 {
                let prev = &chosen[k - 1];
                let lhs = prev.then(&y.structure_map(order[k], lo));
                let rhs = z.structure_map(order[k - 1], hi).then(&d);
                if lhs != rhs {
                    continue;
                }
            }
            chosen.push(d);
            if rec(h, order, k + 1, chosen, budget)? {
                return Ok(true);
            }
            chosen.pop();
        }
        Ok(false)
    }
    if rec(h, order, 0, &mut chosen, budget)? {
        debug_assert_eq!(chosen.len(), n - 1);
        Ok(Some(chosen))
    } else {
        Ok(None)
    }
}
