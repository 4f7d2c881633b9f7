//! Normalizing retracts of levelwise-property maps.
//!
//! Given a retract diagram over level maps `f : W -> Z` and `g : X -> Y`
//! with identity horizontal composites, the double reindexing produces a
//! level map with the same levelwise property that is pro-isomorphic to
//! `f`.  The two selection functions are chosen minimally in
//! (height, id) order, subject to the strict-commutation constraints.

use crate::verdict::Verdict;

use super::fiber::FiberCategory;
use super::object::{LevelMap, ProObject};
use super::poset::CofinitePoset;
use super::raw::RawProMap;

/// A retract presentation: horizontal composites are identities, both
/// squares commute as pro-maps.
pub struct RetractData<C: FiberCategory> {
    /// The retract `f : W -> Z` (level).
    pub f: LevelMap<C>,
    /// The ambient map `g : X -> Y` (level, same index).
    pub g: LevelMap<C>,
    /// Section `a : W -> X`.
    pub section_top: RawProMap<C>,
    /// Retraction `r : X -> W`.
    pub retraction_top: RawProMap<C>,
    /// Section `b : Z -> Y`.
    pub section_bottom: RawProMap<C>,
    /// Retraction `q : Y -> Z`.
    pub retraction_bottom: RawProMap<C>,
}

pub struct RetractOutcome<C: FiberCategory> {
    /// The normalized level map `X̄ -> Ȳ`.
    pub map: LevelMap<C>,
    /// Does every component satisfy the supplied predicate?
    pub levelwise_predicate: Verdict,
    /// Mutually inverse pro-maps `W -> X̄` and `X̄ -> W`.
    pub source_witness: (RawProMap<C>, RawProMap<C>),
    /// Mutually inverse pro-maps `Z -> Ȳ` and `Ȳ -> Z`.
    pub target_witness: (RawProMap<C>, RawProMap<C>),
}

impl<C: FiberCategory> RetractData<C> {
    fn validate(&self) -> Result<(), String> {
        if self.f.source.index != self.g.source.index {
            return Err("retract data must share one index (pad towers first)".into());
        }
        if !self.section_top.then(&self.retraction_top).is_pro_identity() {
            return Err("top horizontal composite is not the identity".into());
        }
        if !self
            .section_bottom
            .then(&self.retraction_bottom)
            .is_pro_identity()
        {
            return Err("bottom horizontal composite is not the identity".into());
        }
        // Left square: a then g = f then b; right square: r then f = g then q.
        let left_a = self.section_top.then(&RawProMap::from_level(&self.g));
        let left_b = RawProMap::from_level(&self.f).then(&self.section_bottom);
        if !left_a.pro_eq(&left_b) {
            return Err("left retract square does not commute".into());
        }
        let right_a = self.retraction_top.then(&RawProMap::from_level(&self.f));
        let right_b = RawProMap::from_level(&self.g).then(&self.retraction_bottom);
        if !right_a.pro_eq(&right_b) {
            return Err("right retract square does not commute".into());
        }
        Ok(())
    }
}

pub fn retract_normalize<C: FiberCategory>(
    data: &RetractData<C>,
    predicate: impl Fn(&C::Mor) -> bool,
) -> Result<RetractOutcome<C>, String> {
    data.validate()?;
    for (s, m) in data.g.components.iter().enumerate() {
        if !predicate(m) {
            return Err(format!("ambient map fails the predicate at level {s}"));
        }
    }

    let index = data.f.source.index.clone();
    let n = index.len();
    let (w, z) = (&data.f.source, &data.f.target);
    let (x, y) = (&data.g.source, &data.g.target);
    let r = &data.retraction_top;
    let q = &data.retraction_bottom;
    let a = &data.section_top;
    let b = &data.section_bottom;

    // First selection: t(s), with composed retraction representatives
    // r̄_s : X_{t(s)} -> W_s and q̄_s : Y_{t(s)} -> Z_s commuting strictly
    // with g, f and the structure maps chosen so far.
    let mut t = vec![usize::MAX; n];
    let mut r_bar: Vec<Option<C::Mor>> = vec![None; n];
    let mut q_bar: Vec<Option<C::Mor>> = vec![None; n];
    for s in index.by_height() {
        let (t_r, r_s) = &r.reps[s];
        let (t_q, q_s) = &q.reps[s];
        let candidate_ok = |cand: usize| -> bool {
            if !index.leq(*t_r, cand) || !index.leq(*t_q, cand) {
                return false;
            }
            for sp in 0..n {
                if sp != s && index.leq(sp, s) && !index.leq(t[sp], cand) {
                    return false;
                }
            }
            let r_c = C::compose(&x.structure_map(cand, *t_r), r_s);
            let q_c = C::compose(&y.structure_map(cand, *t_q), q_s);
            // Middle square at s: r̄ then f_s = g_{cand} then q̄.
            if C::compose(&r_c, data.f.component(s))
                != C::compose(data.g.component(cand), &q_c)
            {
                return false;
            }
            // Cube faces against already-chosen lower levels.
            for sp in 0..n {
                if sp != s && index.leq(sp, s) {
                    let lhs = C::compose(&r_c, &w.structure_map(s, sp));
                    let rhs = C::compose(
                        &x.structure_map(cand, t[sp]),
                        r_bar[sp].as_ref().unwrap(),
                    );
                    if lhs != rhs {
                        return false;
                    }
                    let lhs = C::compose(&q_c, &z.structure_map(s, sp));
                    let rhs = C::compose(
                        &y.structure_map(cand, t[sp]),
                        q_bar[sp].as_ref().unwrap(),
                    );
                    if lhs != rhs {
                        return false;
                    }
                }
            }
            true
        };
        let chosen = index
            .minimal_satisfying(candidate_ok)
            .ok_or_else(|| format!("no admissible first reindexing at level {s}"))?;
        t[s] = chosen;
        r_bar[s] = Some(C::compose(&x.structure_map(chosen, *t_r), r_s));
        q_bar[s] = Some(C::compose(&y.structure_map(chosen, *t_q), q_s));
    }
    let r_bar: Vec<C::Mor> = r_bar.into_iter().map(Option::unwrap).collect();
    let q_bar: Vec<C::Mor> = q_bar.into_iter().map(Option::unwrap).collect();

    // Second selection: u(s) ≥ s with section representatives
    // ā_s : W_{u(s)} -> X_{t(s)} and b̄_s : Z_{u(s)} -> Y_{t(s)} whose
    // composites back are structure maps and which interchange with f, g.
    let mut u = vec![usize::MAX; n];
    let mut a_bar: Vec<Option<C::Mor>> = vec![None; n];
    let mut b_bar: Vec<Option<C::Mor>> = vec![None; n];
    for s in index.by_height() {
        let (t_a, a_s) = &a.reps[t[s]];
        let (t_b, b_s) = &b.reps[t[s]];
        let candidate_ok = |cand: usize| -> bool {
            if !index.leq(*t_a, cand) || !index.leq(*t_b, cand) || !index.leq(s, cand) {
                return false;
            }
            for sp in 0..n {
                if sp != s && index.leq(sp, s) && !index.leq(u[sp], cand) {
                    return false;
                }
            }
            let a_c = C::compose(&w.structure_map(cand, *t_a), a_s);
            let b_c = C::compose(&z.structure_map(cand, *t_b), b_s);
            if C::compose(&a_c, &r_bar[s]) != w.structure_map(cand, s) {
                return false;
            }
            if C::compose(&b_c, &q_bar[s]) != z.structure_map(cand, s) {
                return false;
            }
            // Interchange: a then g = f then b at this level.
            if C::compose(&a_c, data.g.component(t[s]))
                != C::compose(data.f.component(cand), &b_c)
            {
                return false;
            }
            true
        };
        let chosen = index
            .minimal_satisfying(candidate_ok)
            .ok_or_else(|| format!("no admissible second reindexing at level {s}"))?;
        u[s] = chosen;
        a_bar[s] = Some(C::compose(&w.structure_map(chosen, *t_a), a_s));
        b_bar[s] = Some(C::compose(&z.structure_map(chosen, *t_b), b_s));
    }
    let a_bar: Vec<C::Mor> = a_bar.into_iter().map(Option::unwrap).collect();
    let b_bar: Vec<C::Mor> = b_bar.into_iter().map(Option::unwrap).collect();

    // Output index: the relabeled levels (s' ⪯ s iff u(s') ≤ s) plus one
    // fresh top carrying the original top fibers.  Over an infinite index
    // the second selection could always move strictly up; a finite top
    // cannot, so one untouched level remains to anchor the isomorphism.
    let top = index.top();
    let out_n = n + 1;
    let leq: Vec<Vec<bool>> = (0..out_n)
        .map(|sp| {
            (0..out_n)
                .map(|s| {
                    if s == out_n - 1 {
                        true
                    } else if sp == out_n - 1 {
                        false
                    } else {
                        sp == s || index.leq(u[sp], s)
                    }
                })
                .collect()
        })
        .collect();
    let out_index = CofinitePoset::new(leq)
        .map_err(|e| format!("reindexed order is not a directed poset: {e}"))?;

    // Fibers and structure maps of the hat systems.
    let mut xbar_fibers: Vec<C::Obj> = (0..n).map(|s| x.fibers[t[s]].clone()).collect();
    xbar_fibers.push(w.fibers[top].clone());
    let mut ybar_fibers: Vec<C::Obj> = (0..n).map(|s| y.fibers[t[s]].clone()).collect();
    ybar_fibers.push(z.fibers[top].clone());
    let mut xbar_structure = std::collections::BTreeMap::new();
    let mut ybar_structure = std::collections::BTreeMap::new();
    for s in 0..n {
        for sp in 0..n {
            if s != sp && out_index.leq(sp, s) {
                // X̄_s -> W_s -> W_{u(s')} -> X̄_{s'}
                let through_w = C::compose(
                    &C::compose(&r_bar[s], &w.structure_map(s, u[sp])),
                    &a_bar[sp],
                );
                xbar_structure.insert((s, sp), through_w);
                let through_z = C::compose(
                    &C::compose(&q_bar[s], &z.structure_map(s, u[sp])),
                    &b_bar[sp],
                );
                ybar_structure.insert((s, sp), through_z);
            }
        }
        // Top fiber maps down through the sections.
        xbar_structure.insert(
            (out_n - 1, s),
            C::compose(&w.structure_map(top, u[s]), &a_bar[s]),
        );
        ybar_structure.insert(
            (out_n - 1, s),
            C::compose(&z.structure_map(top, u[s]), &b_bar[s]),
        );
    }
    let xbar = ProObject::new(out_index.clone(), xbar_fibers, xbar_structure)?;
    let ybar = ProObject::new(out_index, ybar_fibers, ybar_structure)?;
    let mut components: Vec<C::Mor> = (0..n).map(|s| data.g.component(t[s]).clone()).collect();
    components.push(data.f.component(top).clone());
    let map = LevelMap::new(xbar.clone(), ybar.clone(), components)?;

    // Witnesses.
    let to_xbar = RawProMap::from_reps(
        w.clone(),
        xbar.clone(),
        (0..n)
            .map(|s| (u[s], a_bar[s].clone()))
            .chain(std::iter::once((top, C::identity(&w.fibers[top]))))
            .collect(),
    )?;
    let from_xbar = RawProMap::from_reps(
        xbar.clone(),
        w.clone(),
        (0..n).map(|s| (s, r_bar[s].clone())).collect(),
    )?;
    let to_ybar = RawProMap::from_reps(
        z.clone(),
        ybar.clone(),
        (0..n)
            .map(|s| (u[s], b_bar[s].clone()))
            .chain(std::iter::once((top, C::identity(&z.fibers[top]))))
            .collect(),
    )?;
    let from_ybar = RawProMap::from_reps(
        ybar.clone(),
        z.clone(),
        (0..n).map(|s| (s, q_bar[s].clone())).collect(),
    )?;
    if !to_xbar.then(&from_xbar).is_pro_identity()
        || !from_xbar.then(&to_xbar).is_pro_identity()
        || !to_ybar.then(&from_ybar).is_pro_identity()
        || !from_ybar.then(&to_ybar).is_pro_identity()
    {
        return Err("reindexing witnesses are not isomorphisms".into());
    }
    // The witnesses carry f to the output arrow.
    let via_out = to_xbar.then(&RawProMap::from_level(&map));
    let via_f = RawProMap::from_level(&data.f).then(&to_ybar);
    if !via_out.pro_eq(&via_f) {
        return Err("output arrow is not isomorphic to the retract".into());
    }

    let levelwise_predicate = if map.components.iter().all(&predicate) {
        Verdict::Holds
    } else {
        Verdict::fails("a component fails the predicate")
    };
    Ok(RetractOutcome {
        map,
        levelwise_predicate,
        source_witness: (to_xbar, from_xbar),
        target_witness: (to_ybar, from_ybar),
    })
}

/// Pad a level map over a chain to a longer chain by repeating the top
/// fiber with identity structure maps.
pub fn pad_tower<C: FiberCategory>(f: &LevelMap<C>, len: usize) -> Result<LevelMap<C>, String> {
    let old = f.source.index.len();
    if old > len {
        return Err("padding cannot shrink".into());
    }
    if f.source.index != CofinitePoset::chain(old) {
        return Err("padding applies to towers".into());
    }
    let extend = |x: &ProObject<C>| -> Result<ProObject<C>, String> {
        let mut fibers = x.fibers.clone();
        let top = x.fibers[old - 1].clone();
        fibers.extend(std::iter::repeat_n(top.clone(), len - old));
        let mut structure = std::collections::BTreeMap::new();
        for hi in 0..len {
            for lo in 0..hi {
                let m = if hi < old {
                    x.structure_map(hi, lo)
                } else if lo < old {
                    x.structure_map(old - 1, lo)
                } else {
                    C::identity(&top)
                };
                structure.insert((hi, lo), m);
            }
        }
        ProObject::new(CofinitePoset::chain(len), fibers, structure)
    };
    let source = extend(&f.source)?;
    let target = extend(&f.target)?;
    let mut components = f.components.clone();
    let top_c = f.components[old - 1].clone();
    components.extend(std::iter::repeat_n(top_c, len - old));
    LevelMap::new(source, target, components)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pro::fiber::{FinSetCat, FinSetMap};

    fn is_injective(m: &FinSetMap) -> bool {
        let mut seen = vec![false; m.target];
        m.values.iter().all(|&v| {
            if seen[v] {
                false
            } else {
                seen[v] = true;
                true
            }
        })
    }

    #[test]
    fn trivial_retract_passes_through() {
        let x: ProObject<FinSetCat> =
            ProObject::tower(vec![2, 2], vec![FinSetMap::new(2, 2, vec![0, 1])]).unwrap();
        let g = LevelMap::identity(&x);
        let data = RetractData {
            f: g.clone(),
            g: g.clone(),
            section_top: RawProMap::identity(&x),
            retraction_top: RawProMap::identity(&x),
            section_bottom: RawProMap::identity(&x),
            retraction_bottom: RawProMap::identity(&x),
        };
        let out = retract_normalize(&data, is_injective).unwrap();
        assert!(out.levelwise_predicate.holds());
        out.map.validate().unwrap();
    }

    #[test]
    fn genuine_retract_with_injectivity() {
        // W = one point sitting inside X = two points; retraction folds.
        let w: ProObject<FinSetCat> =
            ProObject::tower(vec![1, 1], vec![FinSetMap::new(1, 1, vec![0])]).unwrap();
        let x: ProObject<FinSetCat> =
            ProObject::tower(vec![2, 2], vec![FinSetMap::new(2, 2, vec![0, 1])]).unwrap();
        let f = LevelMap::identity(&w);
        let g = LevelMap::identity(&x);
        let include = RawProMap::from_reps(
            w.clone(),
            x.clone(),
            vec![
                (0, FinSetMap::new(1, 2, vec![0])),
                (1, FinSetMap::new(1, 2, vec![0])),
            ],
        )
        .unwrap();
        let fold = RawProMap::from_reps(
            x.clone(),
            w.clone(),
            vec![
                (0, FinSetMap::new(2, 1, vec![0, 0])),
                (1, FinSetMap::new(2, 1, vec![0, 0])),
            ],
        )
        .unwrap();
        let data = RetractData {
            f,
            g,
            section_top: include.clone(),
            retraction_top: fold.clone(),
            section_bottom: include,
            retraction_bottom: fold,
        };
        let out = retract_normalize(&data, is_injective).unwrap();
        assert!(out.levelwise_predicate.holds());
        out.map.validate().unwrap();
        assert!(out.source_witness.0.then(&out.source_witness.1).is_pro_identity());
    }

    #[test]
    fn padding_towers() {
        let x: ProObject<FinSetCat> =
            ProObject::tower(vec![2, 2], vec![FinSetMap::new(2, 2, vec![1, 0])]).unwrap();
        let f = LevelMap::identity(&x);
        let padded = pad_tower(&f, 3).unwrap();
        padded.validate().unwrap();
        assert_eq!(padded.source.index.len(), 3);
    }
}
