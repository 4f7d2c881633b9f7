//! Limits and colimits of pro-objects.
//!
//! The product index consists of pairs (finite subset of the factors, one
//! index per chosen factor); the coproduct index is the full product of
//! the factor indices; equalizers and coequalizers are levelwise over a
//! shared index.

use crate::budget::{Budget, BudgetError};

use super::fiber::{FiberCategory, FinSetCat, FinSetMap, SSetCat};
use super::object::{LevelMap, ProObject};
use super::poset::CofinitePoset;
use super::raw::RawProMap;

/// Fiber-level (co)limit operations.  Mediators recompute the
/// deterministic (co)limit internally, so they need only the defining
/// data.
pub trait FiberLimits: FiberCategory {
    /// Product with projections; the empty product is terminal.
    fn product(objs: &[&Self::Obj]) -> (Self::Obj, Vec<Self::Mor>);
    fn product_mediator(objs: &[&Self::Obj], source: &Self::Obj, legs: &[&Self::Mor]) -> Self::Mor;
    fn coproduct(objs: &[&Self::Obj]) -> (Self::Obj, Vec<Self::Mor>);
    fn coproduct_mediator(objs: &[&Self::Obj], legs: &[&Self::Mor]) -> Self::Mor;
    fn equalizer(f: &Self::Mor, g: &Self::Mor) -> (Self::Obj, Self::Mor);
    fn coequalizer(f: &Self::Mor, g: &Self::Mor) -> (Self::Obj, Self::Mor);
    /// Factor `h` through the equalizer inclusion of `(f, g)`.
    fn equalizer_mediator(f: &Self::Mor, g: &Self::Mor, h: &Self::Mor) -> Self::Mor;
    /// Factor `h` through the coequalizer projection of `(f, g)`.
    fn coequalizer_mediator(f: &Self::Mor, g: &Self::Mor, h: &Self::Mor) -> Self::Mor;
}

impl FiberLimits for SSetCat {
    fn product(objs: &[&Self::Obj]) -> (Self::Obj, Vec<Self::Mor>) {
        let budget = Budget::default_budget();
        let dim_bound = objs.iter().map(|o| o.dim_bound()).min().unwrap_or(0);
        let diagram = crate::simplicial::lim::Diagram {
            nodes: objs.to_vec(),
            arrows: Vec::new(),
        };
        let lim = crate::simplicial::lim::limit(&diagram, dim_bound, &budget)
            .expect("fiber product within budget");
        (lim.object, lim.legs)
    }

    fn product_mediator(
        objs: &[&Self::Obj],
        source: &Self::Obj,
        legs: &[&Self::Mor],
    ) -> Self::Mor {
        let budget = Budget::default_budget();
        if objs.is_empty() {
            // Unique map to the terminal object (at the same bound the
            // empty product uses).
            let point = crate::simplicial::TruncatedSSet::standard_simplex(0, 0).expect("point");
            return crate::simplicial::enumerate_maps(source, &point, &budget)
                .expect("constant map within budget")
                .pop()
                .expect("the point is terminal");
        }
        let dim_bound = objs.iter().map(|o| o.dim_bound()).min().unwrap_or(0);
        let diagram = crate::simplicial::lim::Diagram {
            nodes: objs.to_vec(),
            arrows: Vec::new(),
        };
        let lim = crate::simplicial::lim::limit(&diagram, dim_bound, &budget)
            .expect("fiber product within budget");
        lim.mediator(legs).expect("compatible product legs")
    }

    fn coproduct(objs: &[&Self::Obj]) -> (Self::Obj, Vec<Self::Mor>) {
        let co = crate::simplicial::colim::coproduct(objs.to_vec()).expect("fiber coproduct");
        (co.object, co.legs)
    }

    fn coproduct_mediator(objs: &[&Self::Obj], legs: &[&Self::Mor]) -> Self::Mor {
        let co = crate::simplicial::colim::coproduct(objs.to_vec()).expect("fiber coproduct");
        co.mediator(legs).expect("compatible coproduct legs")
    }

    fn equalizer(f: &Self::Mor, g: &Self::Mor) -> (Self::Obj, Self::Mor) {
        equalizer_sset(f, g)
    }

    fn coequalizer(f: &Self::Mor, g: &Self::Mor) -> (Self::Obj, Self::Mor) {
        let co = crate::simplicial::colim::coequalizer(f, g).expect("fiber coequalizer");
        (co.object.clone(), co.legs[0].clone())
    }

    fn equalizer_mediator(f: &Self::Mor, g: &Self::Mor, h: &Self::Mor) -> Self::Mor {
        let (eq, incl) = equalizer_sset(f, g);
        // h lands in the subcomplex; reindex its images.
        let mut old_to_new: Vec<Vec<Option<usize>>> = (0..=incl.target.dim_bound())
            .map(|m| vec![None; incl.target.cell_count(m)])
            .collect();
        for m in 0..=eq.dim_bound() {
            for idx in 0..eq.cell_count(m) {
                let img = incl.image_of_cell(crate::simplicial::CellId { dim: m, idx });
                old_to_new[m][img.target.idx] = Some(idx);
            }
        }
        let images = h
            .images
            .iter()
            .map(|level| {
                level
                    .iter()
                    .map(|r| crate::simplicial::SimplexRef {
                        word: r.word.clone(),
                        target: crate::simplicial::CellId {
                            dim: r.target.dim,
                            idx: old_to_new[r.target.dim][r.target.idx]
                                .expect("mediator image lies in the equalizer"),
                        },
                    })
                    .collect()
            })
            .collect();
        crate::simplicial::SSetMap::new(h.source.clone(), eq, images)
            .expect("equalizer mediator is simplicial")
    }

    fn coequalizer_mediator(f: &Self::Mor, g: &Self::Mor, h: &Self::Mor) -> Self::Mor {
        let co = crate::simplicial::colim::coequalizer(f, g).expect("fiber coequalizer");
        let images = co
            .origin
            .iter()
            .map(|level| {
                level
                    .iter()
                    .map(|&(_, cell)| h.image_of_cell(cell).clone())
                    .collect()
            })
            .collect();
        crate::simplicial::SSetMap::new(co.object.clone(), h.target.clone(), images)
            .expect("coequalizer mediator is simplicial")
    }
}

fn equalizer_sset(
    f: &crate::simplicial::SSetMap,
    g: &crate::simplicial::SSetMap,
) -> (crate::simplicial::TruncatedSSet, crate::simplicial::SSetMap) {
    assert_eq!(f.source, g.source);
    assert_eq!(f.target, g.target);
    let x = &f.source;
    let keep: Vec<Vec<bool>> = (0..=x.dim_bound())
        .map(|m| {
            x.cell_ids(m)
                .map(|id| f.image_of_cell(id) == g.image_of_cell(id))
                .collect()
        })
        .collect();
    // Cells with equal images are closed under faces.
    let (sub, new_to_old) = x.sub_complex(&keep).expect("equalizer is face-closed");
    let images = (0..=sub.dim_bound())
        .map(|m| {
            new_to_old[m]
                .iter()
                .map(|&old| {
                    crate::simplicial::SimplexRef::nondegenerate(crate::simplicial::CellId {
                        dim: m,
                        idx: old,
                    })
                })
                .collect()
        })
        .collect();
    let incl =
        crate::simplicial::SSetMap::new(sub.clone(), x.clone(), images).expect("inclusion");
    (sub, incl)
}

impl FiberLimits for FinSetCat {
    fn product(objs: &[&usize]) -> (usize, Vec<FinSetMap>) {
        let total: usize = objs.iter().map(|&&n| n).product();
        let mut projections = Vec::new();
        let mut stride = total;
        for (i, &&n) in objs.iter().enumerate() {
            let _ = i;
            stride /= n.max(1);
            let values = if total == 0 {
                vec![]
            } else {
                (0..total).map(|x| (x / stride) % n).collect()
            };
            projections.push(FinSetMap::new(total, n, values));
        }
        (total, projections)
    }

    fn product_mediator(objs: &[&usize], source: &usize, legs: &[&FinSetMap]) -> FinSetMap {
        let (total, projections) = Self::product(objs);
        let source = *source;
        let values = (0..source)
            .map(|z| {
                (0..total)
                    .find(|&x| {
                        projections
                            .iter()
                            .zip(legs.iter())
                            .all(|(p, l)| p.values[x] == l.values[z])
                    })
                    .expect("product tuples are exhaustive")
            })
            .collect();
        FinSetMap::new(source, total, values)
    }

    fn coproduct(objs: &[&usize]) -> (usize, Vec<FinSetMap>) {
        let total: usize = objs.iter().map(|&&n| n).sum();
        let mut offset = 0;
        let mut injections = Vec::new();
        for &&n in objs {
            injections.push(FinSetMap::new(n, total, (offset..offset + n).collect()));
            offset += n;
        }
        (total, injections)
    }

    fn coproduct_mediator(objs: &[&usize], legs: &[&FinSetMap]) -> FinSetMap {
        let (total, _) = Self::coproduct(objs);
        let target = legs.first().map_or(0, |l| l.target);
        let mut values = Vec::with_capacity(total);
        for leg in legs {
            values.extend(leg.values.iter().copied());
        }
        FinSetMap::new(total, target, values)
    }

    fn equalizer(f: &FinSetMap, g: &FinSetMap) -> (usize, FinSetMap) {
        let members: Vec<usize> = (0..f.source)
            .filter(|&x| f.values[x] == g.values[x])
            .collect();
        let incl = FinSetMap::new(members.len(), f.source, members.clone());
        (members.len(), incl)
    }

    fn coequalizer(f: &FinSetMap, g: &FinSetMap) -> (usize, FinSetMap) {
        let n = f.target;
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut Vec<usize>, i: usize) -> usize {
            if p[i] != i {
                let r = find(p, p[i]);
                p[i] = r;
            }
            p[i]
        }
        for x in 0..f.source {
            let (a, b) = (find(&mut parent, f.values[x]), find(&mut parent, g.values[x]));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
        let mut label = vec![usize::MAX; n];
        let mut count = 0;
        for v in 0..n {
            let r = find(&mut parent, v);
            if label[r] == usize::MAX {
                label[r] = count;
                count += 1;
            }
            label[v] = label[r];
        }
        (count, FinSetMap::new(n, count, label))
    }

    fn equalizer_mediator(f: &FinSetMap, g: &FinSetMap, h: &FinSetMap) -> FinSetMap {
        let (size, incl) = Self::equalizer(f, g);
        let values = h
            .values
            .iter()
            .map(|&v| {
                incl.values
                    .iter()
                    .position(|&m| m == v)
                    .expect("mediator image lies in the equalizer")
            })
            .collect();
        FinSetMap::new(h.source, size, values)
    }

    fn coequalizer_mediator(f: &FinSetMap, g: &FinSetMap, h: &FinSetMap) -> FinSetMap {
        let (size, proj) = Self::coequalizer(f, g);
        let mut values = vec![usize::MAX; size];
        for v in 0..proj.source {
            let c = proj.values[v];
            let hv = h.values[v];
            assert!(
                values[c] == usize::MAX || values[c] == hv,
                "mediator legs do not coequalize"
            );
            values[c] = hv;
        }
        FinSetMap::new(size, h.target, values)
    }
}

pub struct ProProduct<C: FiberCategory> {
    pub object: ProObject<C>,
    pub projections: Vec<RawProMap<C>>,
}

/// Product of finitely many pro-objects, indexed in the paper's shape:
/// pairs `(B, (s_α)_{α∈B})` with `B` a subset of the factors, ordered by
/// reverse inclusion and componentwise refinement.
pub fn pro_product<C: FiberLimits>(
    factors: &[ProObject<C>],
    budget: &Budget,
) -> Result<ProProduct<C>, BudgetError> {
    let mut elements: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
    let subsets = crate::simplicial::operator::subsets_of_size;
    for size in 0..=factors.len() {
        for b in subsets(factors.len(), size) {
            let mut choices: Vec<Vec<usize>> = vec![vec![]];
            for &alpha in &b {
                let mut next = Vec::new();
                for c in &choices {
                    for s in 0..factors[alpha].index.len() {
                        let mut c2 = c.clone();
                        c2.push(s);
                        next.push(c2);
                    }
                }
                choices = next;
            }
            for c in choices {
                elements.push((b.clone(), c));
            }
        }
    }
    budget.spend(elements.len() as u64, "building the product index")?;

    // (B, s) ≥ (D, t) iff D ⊆ B and s_α ≥ t_α for α in D.
    let geq = |a: &(Vec<usize>, Vec<usize>), b: &(Vec<usize>, Vec<usize>)| -> bool {
        b.0.iter().enumerate().all(|(j, alpha)| {
            a.0.iter()
                .position(|x| x == alpha)
                .is_some_and(|i| factors[*alpha].index.leq(b.1[j], a.1[i]))
        })
    };
    let leq: Vec<Vec<bool>> = elements
        .iter()
        .map(|a| elements.iter().map(|b| geq(b, a)).collect())
        .collect();
    let index = CofinitePoset::new(leq).map_err(|e| BudgetError {
        what: format!("product index is not a poset: {e}"),
        limit: budget.limit(),
    })?;

    let fiber_data: Vec<(C::Obj, Vec<C::Mor>)> = elements
        .iter()
        .map(|(b, s)| {
            let objs: Vec<&C::Obj> = b
                .iter()
                .zip(s.iter())
                .map(|(&alpha, &si)| &factors[alpha].fibers[si])
                .collect();
            C::product(&objs)
        })
        .collect();
    let mut structure = std::collections::BTreeMap::new();
    for hi in 0..elements.len() {
        for lo in 0..elements.len() {
            if hi == lo || !index.leq(lo, hi) {
                continue;
            }
            let legs: Vec<C::Mor> = elements[lo]
                .0
                .iter()
                .zip(elements[lo].1.iter())
                .map(|(&alpha, &t)| {
                    let i = elements[hi].0.iter().position(|x| *x == alpha).unwrap();
                    let s = elements[hi].1[i];
                    C::compose(&fiber_data[hi].1[i], &factors[alpha].structure_map(s, t))
                })
                .collect();
            let objs: Vec<&C::Obj> = elements[lo]
                .0
                .iter()
                .zip(elements[lo].1.iter())
                .map(|(&alpha, &t)| &factors[alpha].fibers[t])
                .collect();
            let leg_refs: Vec<&C::Mor> = legs.iter().collect();
            structure.insert(
                (hi, lo),
                C::product_mediator(&objs, &fiber_data[hi].0, &leg_refs),
            );
        }
    }
    let object = ProObject::new(
        index,
        fiber_data.iter().map(|(o, _)| o.clone()).collect(),
        structure,
    )
    .map_err(|e| BudgetError {
        what: format!("product assembly failed: {e}"),
        limit: budget.limit(),
    })?;

    let mut projections = Vec::new();
    for alpha in 0..factors.len() {
        let reps = (0..factors[alpha].index.len())
            .map(|s| {
                let e = elements
                    .iter()
                    .position(|(b, c)| b.as_slice() == [alpha] && c.as_slice() == [s])
                    .expect("singleton element exists");
                (e, fiber_data[e].1[0].clone())
            })
            .collect();
        projections.push(
            RawProMap::from_reps(object.clone(), factors[alpha].clone(), reps).map_err(|e| {
                BudgetError {
                    what: format!("product projection invalid: {e}"),
                    limit: budget.limit(),
                }
            })?,
        );
    }
    Ok(ProProduct {
        object,
        projections,
    })
}

pub struct ProCoproduct<C: FiberCategory> {
    pub object: ProObject<C>,
    pub injections: Vec<RawProMap<C>>,
    /// The full-product index can explode; its size is reported.
    pub index_size: usize,
}

/// Coproduct of finitely many pro-objects over the full product of their
/// indices.
pub fn pro_coproduct<C: FiberLimits>(
    factors: &[ProObject<C>],
    budget: &Budget,
) -> Result<ProCoproduct<C>, BudgetError> {
    assert!(!factors.is_empty(), "empty coproducts are not supported");
    let mut index = factors[0].index.clone();
    for f in &factors[1..] {
        index = index.product(&f.index);
    }
    budget.spend(index.len() as u64, "building the coproduct index")?;
    let sizes: Vec<usize> = factors.iter().map(|f| f.index.len()).collect();
    let decode = |mut e: usize| -> Vec<usize> {
        let mut out = vec![0; sizes.len()];
        for i in (0..sizes.len()).rev() {
            out[i] = e % sizes[i];
            e /= sizes[i];
        }
        out
    };
    let fiber_data: Vec<(C::Obj, Vec<C::Mor>)> = (0..index.len())
        .map(|e| {
            let coords = decode(e);
            let objs: Vec<&C::Obj> = coords
                .iter()
                .enumerate()
                .map(|(alpha, &s)| &factors[alpha].fibers[s])
                .collect();
            C::coproduct(&objs)
        })
        .collect();
    let mut structure = std::collections::BTreeMap::new();
    for hi in 0..index.len() {
        for lo in 0..index.len() {
            if hi == lo || !index.leq(lo, hi) {
                continue;
            }
            let (hc, lc) = (decode(hi), decode(lo));
            let legs: Vec<C::Mor> = (0..factors.len())
                .map(|alpha| {
                    C::compose(
                        &factors[alpha].structure_map(hc[alpha], lc[alpha]),
                        &fiber_data[lo].1[alpha],
                    )
                })
                .collect();
            let objs: Vec<&C::Obj> = hc
                .iter()
                .enumerate()
                .map(|(alpha, &s)| &factors[alpha].fibers[s])
                .collect();
            let leg_refs: Vec<&C::Mor> = legs.iter().collect();
            structure.insert((hi, lo), C::coproduct_mediator(&objs, &leg_refs));
        }
    }
    let object = ProObject::new(
        index.clone(),
        fiber_data.iter().map(|(o, _)| o.clone()).collect(),
        structure,
    )
    .map_err(|e| BudgetError {
        what: format!("coproduct assembly failed: {e}"),
        limit: budget.limit(),
    })?;
    let mut injections = Vec::new();
    for alpha in 0..factors.len() {
        // Representative at coproduct element e: the summand inclusion of
        // the α-coordinate fiber.
        let reps_by_target = (0..index.len())
            .map(|e| {
                let c = decode(e);
                (c[alpha], fiber_data[e].1[alpha].clone())
            })
            .collect();
        injections.push(
            RawProMap::from_reps(factors[alpha].clone(), object.clone(), reps_by_target)
                .map_err(|e| BudgetError {
                    what: format!("coproduct injection invalid: {e}"),
                    limit: budget.limit(),
                })?,
        );
    }
    Ok(ProCoproduct {
        index_size: object.index.len(),
        object,
        injections,
    })
}

pub struct ProEqualizer<C: FiberCategory> {
    pub object: ProObject<C>,
    pub inclusion: LevelMap<C>,
}

/// Levelwise equalizer of a parallel pair of level maps.
pub fn pro_equalizer<C: FiberLimits>(
    f: &LevelMap<C>,
    g: &LevelMap<C>,
) -> Result<ProEqualizer<C>, String> {
    if f.source != g.source || f.target != g.target {
        return Err("equalizer needs a parallel pair".into());
    }
    let n = f.source.index.len();
    let data: Vec<(C::Obj, C::Mor)> = (0..n)
        .map(|s| C::equalizer(f.component(s), g.component(s)))
        .collect();
    let mut structure = std::collections::BTreeMap::new();
    for (t, s) in f.source.index.strict_pairs() {
        let through = C::compose(&data[t].1, &f.source.structure_map(t, s));
        structure.insert(
            (t, s),
            C::equalizer_mediator(f.component(s), g.component(s), &through),
        );
    }
    let object = ProObject::new(
        f.source.index.clone(),
        data.iter().map(|(o, _)| o.clone()).collect(),
        structure,
    )?;
    let inclusion = LevelMap::new(
        object.clone(),
        f.source.clone(),
        data.iter().map(|(_, i)| i.clone()).collect(),
    )?;
    Ok(ProEqualizer { object, inclusion })
}

pub struct ProCoequalizer<C: FiberCategory> {
    pub object: ProObject<C>,
    pub projection: LevelMap<C>,
}

/// Levelwise coequalizer of a parallel pair of level maps.
pub fn pro_coequalizer<C: FiberLimits>(
    f: &LevelMap<C>,
    g: &LevelMap<C>,
) -> Result<ProCoequalizer<C>, String> {
    if f.source != g.source || f.target != g.target {
        return Err("coequalizer needs a parallel pair".into());
    }
    let n = f.source.index.len();
    let data: Vec<(C::Obj, C::Mor)> = (0..n)
        .map(|s| C::coequalizer(f.component(s), g.component(s)))
        .collect();
    let mut structure = std::collections::BTreeMap::new();
    for (t, s) in f.source.index.strict_pairs() {
        let through = C::compose(&f.target.structure_map(t, s), &data[s].1);
        structure.insert(
            (t, s),
            C::coequalizer_mediator(f.component(t), g.component(t), &through),
        );
    }
    let object = ProObject::new(
        f.source.index.clone(),
        data.iter().map(|(o, _)| o.clone()).collect(),
        structure,
    )?;
    let projection = LevelMap::new(
        f.target.clone(),
        object.clone(),
        data.iter().map(|(_, p)| p.clone()).collect(),
    )?;
    Ok(ProCoequalizer { object, projection })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pro::hom::pro_hom;
    use crate::simplicial::TruncatedSSet;

    fn budget() -> Budget {
        Budget::default_budget()
    }

    #[test]
    fn product_of_one_is_pro_isomorphic() {
        let pt = TruncatedSSet::standard_simplex(0, 1).unwrap();
        let x: ProObject<SSetCat> = ProObject::constant(pt);
        let p = pro_product(&[x.clone()], &budget()).unwrap();
        p.object.validate().unwrap();
        // Universal property: pro_hom(Z, P) ≅ pro_hom(Z, X) via the
        // projection.
        let z: ProObject<SSetCat> =
            ProObject::constant(TruncatedSSet::standard_simplex(0, 1).unwrap());
        let into_p = pro_hom(&z, &p.object, &budget()).unwrap();
        let into_x = pro_hom(&z, &x, &budget()).unwrap();
        assert_eq!(into_p.len(), into_x.len());
    }

    #[test]
    fn product_of_two_points_is_a_point() {
        let pt = TruncatedSSet::standard_simplex(0, 1).unwrap();
        let x: ProObject<SSetCat> = ProObject::constant(pt.clone());
        let p = pro_product(&[x.clone(), x.clone()], &budget()).unwrap();
        let z: ProObject<SSetCat> = ProObject::constant(pt);
        assert_eq!(pro_hom(&z, &p.object, &budget()).unwrap().len(), 1);
    }

    #[test]
    fn coproduct_of_two_points_is_two_points() {
        let pt = TruncatedSSet::standard_simplex(0, 1).unwrap();
        let x: ProObject<SSetCat> = ProObject::constant(pt.clone());
        let co = pro_coproduct(&[x.clone(), x.clone()], &budget()).unwrap();
        co.object.validate().unwrap();
        // Maps out of the coproduct into ∂Δ¹ count like pairs of maps
        // out of the summands: 2 × 2 = 4.
        let (b1, _) = crate::simplicial::boundary(1, 1).unwrap();
        let target: ProObject<SSetCat> = ProObject::constant(b1);
        assert_eq!(pro_hom(&co.object, &target, &budget()).unwrap().len(), 4);
        for inj in &co.injections {
            inj.validate().unwrap();
        }
    }

    #[test]
    fn finset_equalizer_and_coequalizer() {
        let x: ProObject<FinSetCat> = ProObject::constant(3);
        let f = LevelMap::new(
            x.clone(),
            x.clone(),
            vec![FinSetMap::new(3, 3, vec![0, 1, 2])],
        )
        .unwrap();
        let g = LevelMap::new(
            x.clone(),
            x.clone(),
            vec![FinSetMap::new(3, 3, vec![0, 2, 1])],
        )
        .unwrap();
        let eq = pro_equalizer(&f, &g).unwrap();
        assert_eq!(eq.object.fibers[0], 1);
        let coeq = pro_coequalizer(&f, &g).unwrap();
        assert_eq!(coeq.object.fibers[0], 2);
    }
}
