//! Levelification: presenting a raw pro-morphism as a level map over a
//! shared index, pro-isomorphically.

use super::fiber::FiberCategory;
use super::object::{LevelMap, ProObject};
use super::poset::CofinitePoset;
use super::raw::RawProMap;

/// A level presentation of a raw map, with verified isomorphism witnesses
/// back to the original source and target.
#[derive(Debug, Clone)]
pub struct Levelified<C: FiberCategory> {
    pub level: LevelMap<C>,
    /// (to, from): `source -> level.source` and back, inverse as pro-maps.
    pub source_iso: (RawProMap<C>, RawProMap<C>),
    pub target_iso: (RawProMap<C>, RawProMap<C>),
}

/// Build the shared index as the admissible pairs `(t, s)` — those where
/// the representative composites commute strictly below `s` — ordered
/// componentwise.  Both projections are cofinal, so the reindexed systems
/// are isomorphic to the originals.
pub fn levelify<C: FiberCategory>(f: &RawProMap<C>) -> Result<Levelified<C>, String> {
    // Fast path: the raw map is already level.
    if f.source.index == f.target.index && f.reps.iter().enumerate().all(|(s, (t, _))| *t == s) {
        let level = LevelMap::new(
            f.source.clone(),
            f.target.clone(),
            f.reps.iter().map(|(_, m)| m.clone()).collect(),
        );
        if let Ok(level) = level {
            let src_id = RawProMap::identity(&f.source);
            let tgt_id = RawProMap::identity(&f.target);
            return Ok(Levelified {
                level,
                source_iso: (src_id.clone(), src_id),
                target_iso: (tgt_id.clone(), tgt_id),
            });
        }
    }

    let (x, y) = (&f.source, &f.target);
    // Admissible pairs.
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for t in 0..x.index.len() {
        for s in 0..y.index.len() {
            let (t0, f_s) = &f.reps[s];
            if !x.index.leq(*t0, t) {
                continue;
            }
            let strict = (0..y.index.len()).filter(|&sp| sp != s && y.index.leq(sp, s)).all(
                |sp| {
                    let (t0p, f_sp) = &f.reps[sp];
                    if !x.index.leq(*t0p, t) {
                        return false;
                    }
                    let lhs = C::compose(
                        &C::compose(&x.structure_map(t, *t0), f_s),
                        &y.structure_map(s, sp),
                    );
                    let rhs = C::compose(&x.structure_map(t, *t0p), f_sp);
                    lhs == rhs
                },
            );
            if strict {
                pairs.push((t, s));
            }
        }
    }
    // Order componentwise.
    let leq: Vec<Vec<bool>> = pairs
        .iter()
        .map(|&(t1, s1)| {
            pairs
                .iter()
                .map(|&(t2, s2)| x.index.leq(t1, t2) && y.index.leq(s1, s2))
                .collect()
        })
        .collect();
    let index = CofinitePoset::new(leq)
        .map_err(|e| format!("admissible pairs do not form a directed poset: {e}"))?;

    // Cofinality of both projections.
    for t in 0..x.index.len() {
        if !pairs.iter().any(|&(tp, _)| x.index.leq(t, tp)) {
            return Err(format!("source index {t} is not dominated by any pair"));
        }
    }
    for s in 0..y.index.len() {
        if !pairs.iter().any(|&(_, sp)| y.index.leq(s, sp)) {
            return Err(format!("target index {s} is not dominated by any pair"));
        }
    }

    // Reindexed systems.
    let src_fibers: Vec<C::Obj> = pairs.iter().map(|&(t, _)| x.fibers[t].clone()).collect();
    let tgt_fibers: Vec<C::Obj> = pairs.iter().map(|&(_, s)| y.fibers[s].clone()).collect();
    let mut src_structure = std::collections::BTreeMap::new();
    let mut tgt_structure = std::collections::BTreeMap::new();
    for (a, &(t1, s1)) in pairs.iter().enumerate() {
        for (b, &(t2, s2)) in pairs.iter().enumerate() {
            if a != b && index.leq(b, a) {
                src_structure.insert((a, b), x.structure_map(t1, t2));
                tgt_structure.insert((a, b), y.structure_map(s1, s2));
            }
        }
    }
    let source = ProObject::new(index.clone(), src_fibers, src_structure)?;
    let target = ProObject::new(index, tgt_fibers, tgt_structure)?;
    let components: Vec<C::Mor> = pairs
        .iter()
        .map(|&(t, s)| {
            let (t0, f_s) = &f.reps[s];
            C::compose(&x.structure_map(t, *t0), f_s)
        })
        .collect();
    let level = LevelMap::new(source.clone(), target.clone(), components)?;

    // Witness isos: reindexing along cofinal projections.
    let to_src = RawProMap::from_reps(
        x.clone(),
        source.clone(),
        pairs
            .iter()
            .map(|&(t, _)| (t, C::identity(&x.fibers[t])))
            .collect(),
    )?;
    let from_src = RawProMap::from_reps(
        source.clone(),
        x.clone(),
        (0..x.index.len())
            .map(|t| {
                let a = (0..pairs.len())
                    .min_by_key(|&a| {
                        let dominated = x.index.leq(t, pairs[a].0);
                        (!dominated, source.index.height(a), a)
                    })
                    .expect("projection is cofinal");
                (a, x.structure_map(pairs[a].0, t))
            })
            .collect(),
    )?;
    let to_tgt = RawProMap::from_reps(
        y.clone(),
        target.clone(),
        pairs
            .iter()
            .map(|&(_, s)| (s, C::identity(&y.fibers[s])))
            .collect(),
    )?;
    let from_tgt = RawProMap::from_reps(
        target.clone(),
        y.clone(),
        (0..y.index.len())
            .map(|s| {
                let a = (0..pairs.len())
                    .min_by_key(|&a| {
                        let dominated = y.index.leq(s, pairs[a].1);
                        (!dominated, target.index.height(a), a)
                    })
                    .expect("projection is cofinal");
                (a, y.structure_map(pairs[a].1, s))
            })
            .collect(),
    )?;

    // Verify the witnesses are mutually inverse pro-maps.
    if !to_src.then(&from_src).is_pro_identity() || !from_src.then(&to_src).is_pro_identity() {
        return Err("source reindexing witness is not an isomorphism".into());
    }
    if !to_tgt.then(&from_tgt).is_pro_identity() || !from_tgt.then(&to_tgt).is_pro_identity() {
        return Err("target reindexing witness is not an isomorphism".into());
    }

    Ok(Levelified {
        level,
        source_iso: (to_src, from_src),
        target_iso: (to_tgt, from_tgt),
    })
}
