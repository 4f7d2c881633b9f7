//! The constant/limit adjunction and homotopy classes into constants.

use crate::budget::{Budget, BudgetError};
use crate::pro::{pro_hom, ProObject, RawProMap, SSetCat};
use crate::simplicial::lim::{limit, product, Diagram, Limit};
use crate::simplicial::{enumerate_maps, SSetMap, TruncatedSSet};

/// The constant pro-space on one object.
pub fn constant_pro(k: &TruncatedSSet) -> ProObject<SSetCat> {
    ProObject::constant(k.clone())
}

/// The limit of the whole diagram, with its cone.
pub struct ProLimit {
    pub limit: Limit,
    pub nodes: Vec<usize>,
}

pub fn pro_limit(y: &ProObject<SSetCat>, budget: &Budget) -> Result<ProLimit, BudgetError> {
    let nodes: Vec<usize> = {
        let heights = y.index.heights();
        let mut o: Vec<usize> = (0..y.index.len()).collect();
        o.sort_by_key(|&s| (std::cmp::Reverse(heights[s]), s));
        o
    };
    let arrows: Vec<(usize, usize, SSetMap)> = nodes
        .iter()
        .enumerate()
        .flat_map(|(i, &a)| {
            nodes
                .iter()
                .enumerate()
                .filter(move |&(j, &b)| i != j && y.index.leq(b, a))
                .map(move |(j, &b)| (i, j, y.structure_map(a, b)))
        })
        .collect();
    let node_refs: Vec<&TruncatedSSet> = nodes.iter().map(|&s| &y.fibers[s]).collect();
    let arrow_refs: Vec<(usize, usize, &SSetMap)> =
        arrows.iter().map(|&(i, j, ref m)| (i, j, m)).collect();
    let dim_bound = y.fibers.iter().map(|f| f.dim_bound()).min().unwrap_or(0);
    let lim = limit(
        &Diagram {
            nodes: node_refs,
            arrows: arrow_refs,
        },
        dim_bound,
        budget,
    )?;
    Ok(ProLimit { limit: lim, nodes })
}

/// The adjunction correspondence: maps `K -> lim Y` against pro-maps
/// `cK -> Y`.  Returns the two sets and whether the canonical assignment
/// is a bijection.
pub fn adjunction_bijection(
    k: &TruncatedSSet,
    y: &ProObject<SSetCat>,
    budget: &Budget,
) -> Result<(Vec<SSetMap>, Vec<RawProMap<SSetCat>>, bool), BudgetError> {
    let lim = pro_limit(y, budget)?;
    let into_lim = enumerate_maps(k, &lim.limit.object, budget)?;
    let ck = constant_pro(k);
    let raw = pro_hom(&ck, y, budget)?;
    // Assignment: g -> the family (leg_s ∘ g).
    let mut images = Vec::new();
    for g in &into_lim {
        let reps: Vec<(usize, SSetMap)> = (0..y.index.len())
            .map(|s| {
                let pos = lim.nodes.iter().position(|&n| n == s).expect("node");
                (0usize, g.then(&lim.limit.legs[pos]))
            })
            .collect();
        let raw_map = RawProMap::from_reps(ck.clone(), y.clone(), reps).map_err(|e| {
            BudgetError {
                what: format!("adjunct assembly failed: {e}"),
                limit: budget.limit(),
            }
        })?;
        images.push(raw_map);
    }
    // Bijective: counts agree and the images are pairwise distinct and
    // all present.
    let injective = (0..images.len()).all(|i| {
        (i + 1..images.len()).all(|j| !images[i].pro_eq(&images[j]))
    });
    let surjective = raw
        .iter()
        .all(|r| images.iter().any(|im| im.pro_eq(r)));
    let bij = injective && surjective && images.len() == raw.len();
    Ok((into_lim, raw, bij))
}

/// Homotopy classes of pro-maps into a constant: the colimit над the
/// source levels of maps modulo simplicial homotopy.
pub struct HomotopyClasses {
    /// One representative map per class, from the deepest level.
    pub representatives: Vec<SSetMap>,
    /// Class id of every enumerated map.
    pub class_of: Vec<usize>,
    /// Whether the homotopy search ran to completion.
    pub complete: bool,
}

pub fn hom_into_constant(
    x: &ProObject<SSetCat>,
    k: &TruncatedSSet,
    budget: &Budget,
) -> Result<HomotopyClasses, BudgetError> {
    let top = x.index.top();
    let source = &x.fibers[top];
    let maps = enumerate_maps(source, k, budget)?;
    let d1 = TruncatedSSet::standard_simplex(1, source.dim_bound().max(1)).expect("interval");
    let prism = product(source, &d1, source.dim_bound(), budget).map_err(|e| BudgetError {
        what: e,
        limit: budget.limit(),
    })?;
    // Endpoint inclusions source -> source × Δ¹.
    let endpoint = |v: usize| -> Result<SSetMap, BudgetError> {
        let vertex_map = constant_vertex_map(source, &d1, v);
        prism
            .mediator(&[&SSetMap::identity(source), &vertex_map])
            .map_err(|e| BudgetError {
                what: e,
                limit: budget.limit(),
            })
    };
    let e0 = endpoint(0)?;
    let e1 = endpoint(1)?;

    let mut parent: Vec<usize> = (0..maps.len()).collect();
    fn find(p: &mut Vec<usize>, i: usize) -> usize {
        if p[i] != i {
            let r = find(p, p[i]);
            p[i] = r;
        }
        p[i]
    }
    let mut complete = true;
    match enumerate_maps(&prism.object, k, budget) {
        Ok(homotopies) => {
            for h in &homotopies {
                let start = e0.then(h);
                let end = e1.then(h);
                let i = maps.iter().position(|m| *m == start);
                let j = maps.iter().position(|m| *m == end);
                if let (Some(i), Some(j)) = (i, j) {
                    let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                    if ri != rj {
                        parent[ri.max(rj)] = ri.min(rj);
                    }
                }
            }
        }
        Err(_) => complete = false,
    }
    let mut class_ids: Vec<usize> = Vec::new();
    let mut class_of = vec![usize::MAX; maps.len()];
    for i in 0..maps.len() {
        let r = find(&mut parent, i);
        let id = match class_ids.iter().position(|&c| c == r) {
            Some(p) => p,
            None => {
                class_ids.push(r);
                class_ids.len() - 1
            }
        };
        class_of[i] = id;
    }
    let representatives = class_ids.iter().map(|&r| maps[r].clone()).collect();
    Ok(HomotopyClasses {
        representatives,
        class_of,
        complete,
    })
}

/// The constant map collapsing a space to one vertex of the target.
fn constant_vertex_map(x: &TruncatedSSet, target: &TruncatedSSet, v: usize) -> SSetMap {
    use crate::simplicial::{CellId, DegeneracyWord, Monotone, SimplexRef};
    let images = (0..=x.dim_bound())
        .map(|m| {
            x.cell_ids(m)
                .map(|_| {
                    let vertex = CellId { dim: 0, idx: v };
                    if m == 0 {
                        SimplexRef::nondegenerate(vertex)
                    } else {
                        let epi =
                            Monotone::collapsing(&(0..m).collect::<Vec<_>>(), m);
                        SimplexRef {
                            word: DegeneracyWord::from_epi(&epi),
                            target: vertex,
                        }
                    }
                })
                .collect()
        })
        .collect();
    SSetMap::new(x.clone(), target.clone(), images).expect("constant maps are simplicial")
}
