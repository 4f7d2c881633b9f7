//! Function complexes at one level, and a generic assembler that turns an
//! abstract degreewise set with face/degeneracy operators into a
//! `TruncatedSSet`.

use std::collections::BTreeMap;

use crate::budget::{Budget, BudgetError};

use super::enumerate::enumerate_maps;
use super::lim::product;
use super::map::SSetMap;
use super::operator::{DegeneracyWord, Monotone};
use super::sset::{Cell, CellId, SimplexRef, TruncatedSSet};

/// Assemble a simplicial set from degreewise elements with operators.
///
/// `elements[m]` lists the degree-`m` simplices (all of them); `face` and
/// `degeneracy` must satisfy the simplicial identities.  Returns the
/// object plus, per degree, the normal form of every element.
pub fn assemble_degreewise<T: Ord + Clone>(
    dim_bound: usize,
    elements: &[Vec<T>],
    face: impl Fn(usize, &T, usize) -> T,
    degeneracy: impl Fn(usize, &T, usize) -> T,
) -> Result<(TruncatedSSet, Vec<BTreeMap<T, SimplexRef>>), String> {
    assert_eq!(elements.len(), dim_bound + 1);
    let is_degenerate_at = |m: usize, t: &T, i: usize| -> bool {
        m >= 1 && degeneracy(m - 1, &face(m, t, i), i) == *t
    };
    // Normal forms, bottom-up.
    let mut norm: Vec<BTreeMap<T, SimplexRef>> = Vec::new();
    let mut cells: Vec<Vec<Cell>> = Vec::new();
    for m in 0..=dim_bound {
        let mut level_norm: BTreeMap<T, SimplexRef> = BTreeMap::new();
        let mut level_cells: Vec<Cell> = Vec::new();
        // First pass: nondegenerate elements get cell ids.
        let mut pending: Vec<&T> = Vec::new();
        for t in &elements[m] {
            if level_norm.contains_key(t) {
                continue;
            }
            if (0..m).any(|i| is_degenerate_at(m, t, i)) {
                pending.push(t);
                continue;
            }
            let idx = level_cells.len();
            level_norm.insert(
                t.clone(),
                SimplexRef::nondegenerate(CellId { dim: m, idx }),
            );
            // Faces are filled on a second pass (they may reference
            // degenerate elements of the level below).
            level_cells.push(Cell { faces: Vec::new() });
        }
        // Degenerate elements: strip the least degeneracy.
        for t in pending {
            let i = (0..m)
                .find(|&i| is_degenerate_at(m, t, i))
                .expect("marked degenerate");
            let below = face(m, t, i);
            let inner = norm
                .get(m - 1)
                .and_then(|lvl| lvl.get(&below))
                .cloned()
                .ok_or("degeneracy strip left the element set")?;
            let total = Monotone::codegeneracy(i, m - 1).then(&inner.epi());
            level_norm.insert(
                t.clone(),
                SimplexRef {
                    word: DegeneracyWord::from_epi(&total),
                    target: inner.target,
                },
            );
        }
        norm.push(level_norm);
        cells.push(level_cells);
    }
    // Second pass: faces of nondegenerate cells.
    for m in 1..=dim_bound {
        let level: Vec<(T, SimplexRef)> = norm[m]
            .iter()
            .filter(|(_, r)| r.is_nondegenerate())
            .map(|(t, r)| (t.clone(), r.clone()))
            .collect();
        for (t, r) in level {
            let faces: Result<Vec<SimplexRef>, String> = (0..=m)
                .map(|i| {
                    let f = face(m, &t, i);
                    norm[m - 1]
                        .get(&f)
                        .cloned()
                        .ok_or_else(|| "face left the element set".to_string())
                })
                .collect();
            cells[m][r.target.idx].faces = faces?;
        }
    }
    let object = TruncatedSSet::new(dim_bound, cells)?;
    Ok((object, norm))
}

/// The simplicial map `Δ^a -> Δ^b` induced by a monotone vertex map.
pub fn standard_map(
    phi: &Monotone,
    source: &TruncatedSSet,
    target: &TruncatedSSet,
) -> SSetMap {
    let a = phi.source_rank();
    let b = phi.target_rank();
    debug_assert_eq!(source.cell_count(a), 1);
    debug_assert_eq!(target.cell_count(b), 1);
    let top = CellId { dim: b, idx: 0 };
    let images = (0..=source.dim_bound())
        .map(|m| {
            source
                .cell_ids(m)
                .map(|id| {
                    // The cell's vertex subset, pushed through phi.
                    let r = SimplexRef::nondegenerate(id);
                    let vals: Vec<usize> = source
                        .vertices(&r)
                        .into_iter()
                        .map(|v| phi.apply(v))
                        .collect();
                    target.apply_operator(top, &Monotone::new(vals, b))
                })
                .collect()
        })
        .collect();
    SSetMap {
        source: source.clone(),
        target: target.clone(),
        images,
    }
}

/// The function complex `Y^K`, truncated at `dim_bound`:
/// degree `m` is the set of maps `K × Δ^m -> Y`.
pub struct Exponential {
    pub object: TruncatedSSet,
    /// Degree-`m` maps in enumeration order, with their normal forms.
    pub maps: Vec<Vec<SSetMap>>,
    norm: Vec<BTreeMap<usize, SimplexRef>>,
    /// Products `K × Δ^m` with projections, for evaluation.
    pub prisms: Vec<super::lim::Limit>,
}

impl Exponential {
    /// Normal form of the degree-`m` element with enumeration index `i`.
    pub fn simplex_of(&self, m: usize, i: usize) -> &SimplexRef {
        &self.norm[m][&i]
    }

    /// Enumeration index of a map, if present.
    pub fn index_of(&self, m: usize, map: &SSetMap) -> Option<usize> {
        self.maps[m].iter().position(|g| g == map)
    }
}

pub fn exponential(
    y: &TruncatedSSet,
    k: &TruncatedSSet,
    dim_bound: usize,
    budget: &Budget,
) -> Result<Exponential, BudgetError> {
    // Prisms K × Δ^m and the connecting maps.
    let mut prisms = Vec::new();
    let mut deltas = Vec::new();
    for m in 0..=dim_bound {
        let dm = TruncatedSSet::standard_simplex(m, dim_bound.max(m)).expect("simplex");
        let p = product(k, &dm, dim_bound, budget).map_err(to_budget)?;
        prisms.push(p);
        deltas.push(dm);
    }
    let mut maps: Vec<Vec<SSetMap>> = Vec::new();
    for p in prisms.iter() {
        maps.push(enumerate_maps(&p.object, y, budget)?);
    }

    // Face/degeneracy on map indices via precomposition with id × δ/σ.
    let connecting = |m_from: usize, phi: &Monotone| -> SSetMap {
        // K × Δ^{phi.source_rank()} -> K × Δ^{phi.target_rank()}
        let src = &prisms[m_from];
        let dst = &prisms[phi.target_rank()];
        let leg_k = src.legs[0].clone();
        let leg_d = src.legs[1]
            .then(&standard_map(phi, &deltas[phi.source_rank()], &deltas[phi.target_rank()]));
        dst.mediator(&[&leg_k, &leg_d]).expect("prism connecting map")
    };

    let elements: Vec<Vec<usize>> = maps.iter().map(|lvl| (0..lvl.len()).collect()).collect();
    let face = |m: usize, &t: &usize, i: usize| -> usize {
        let conn = connecting(m - 1, &Monotone::coface(i, m));
        let g = conn.then(&maps[m][t]);
        maps[m - 1]
            .iter()
            .position(|h| *h == g)
            .expect("face stays in the enumeration")
    };
    let degeneracy = |m: usize, &t: &usize, j: usize| -> usize {
        let conn = connecting(m + 1, &Monotone::codegeneracy(j, m));
        let g = conn.then(&maps[m][t]);
        maps[m + 1]
            .iter()
            .position(|h| *h == g)
            .expect("degeneracy stays in the enumeration")
    };

    let (object, norm) = assemble_degreewise(dim_bound, &elements, face, degeneracy)
        .map_err(|e| BudgetError {
            what: format!("assembling a function complex: {e}"),
            limit: budget.limit(),
        })?;
    Ok(Exponential {
        object,
        maps,
        norm,
        prisms,
    })
}

fn to_budget(e: String) -> BudgetError {
    BudgetError {
        what: e,
        limit: 0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exponential_by_point_is_the_object() {
        let budget = Budget::default_budget();
        let d1 = TruncatedSSet::standard_simplex(1, 1).unwrap();
        let pt = TruncatedSSet::standard_simplex(0, 1).unwrap();
        let e = exponential(&d1, &pt, 1, &budget).unwrap();
        e.object.validate().unwrap();
        assert_eq!(e.object.cell_count(0), 2);
        assert_eq!(e.object.cell_count(1), 1);
    }

    #[test]
    fn interval_into_interval() {
        // (Δ¹)^(Δ¹): degree 0 = maps Δ¹ → Δ¹ = 3.
        let budget = Budget::default_budget();
        let d1 = TruncatedSSet::standard_simplex(1, 1).unwrap();
        let e = exponential(&d1, &d1, 1, &budget).unwrap();
        e.object.validate().unwrap();
        assert_eq!(e.maps[0].len(), 3);
    }

    #[test]
    fn standard_maps_compose() {
        let d1 = TruncatedSSet::standard_simplex(1, 2).unwrap();
        let d2 = TruncatedSSet::standard_simplex(2, 2).unwrap();
        let f = standard_map(&Monotone::coface(1, 2), &d1, &d2);
        f.validate().unwrap();
        let s = standard_map(&Monotone::codegeneracy(0, 1), &d2, &d1);
        s.validate().unwrap();
    }
}
