//! Coskeleta of truncated simplicial sets.
//!
//! `cosk_m X` keeps degrees ≤ m and, above, has one simplex per compatible
//! sphere of lower simplices.  Degrees stay truncated at the ambient bound.

use std::collections::BTreeMap;

use crate::budget::{Budget, BudgetError};

use super::map::SSetMap;
use super::sset::{Cell, CellId, SimplexRef, TruncatedSSet};

pub struct Coskeleton {
    pub object: TruncatedSSet,
    pub base_dim: usize,
    /// For each degree `k > base_dim`: face tuple -> simplex of `object`.
    sphere_index: BTreeMap<usize, BTreeMap<Vec<SimplexRef>, SimplexRef>>,
}

impl Coskeleton {
    pub fn lookup_sphere(&self, k: usize, tuple: &[SimplexRef]) -> Option<&SimplexRef> {
        self.sphere_index.get(&k)?.get(tuple)
    }
}

/// Boundary tuple of a simplex.
fn face_tuple(x: &TruncatedSSet, r: &SimplexRef) -> Vec<SimplexRef> {
    (0..=r.dim()).map(|i| x.face(r, i)).collect()
}

/// Enumerate compatible spheres of degree `k` over `y` (tuples of
/// (k-1)-simplices satisfying `dᵢ yⱼ = dⱼ₋₁ yᵢ` for `i < j`).
fn spheres(
    y: &TruncatedSSet,
    k: usize,
    budget: &Budget,
) -> Result<Vec<Vec<SimplexRef>>, BudgetError> {
    let pool = y.all_simplices(k - 1);
    let mut out = Vec::new();
    let mut partial: Vec<SimplexRef> = Vec::new();
    fn rec(
        y: &TruncatedSSet,
        k: usize,
        pool: &[SimplexRef],
        partial: &mut Vec<SimplexRef>,
        out: &mut Vec<Vec<SimplexRef>>,
        budget: &Budget,
    ) -> Result<(), BudgetError> {
        let j = partial.len();
        if j == k + 1 {
            out.push(partial.clone());
            return Ok(());
        }
        'cands: for cand in pool {
            budget.spend(1, "enumerating coskeleton spheres")?;
            for (i, yi) in partial.iter().enumerate() {
                // i < j: require d_i y_j = d_{j-1} y_i.
                if k >= 2 && y.face(cand, i) != y.face(yi, j - 1) {
                    continue 'cands;
                }
            }
            partial.push(cand.clone());
            rec(y, k, pool, partial, out, budget)?;
            partial.pop();
        }
        Ok(())
    }
    rec(y, k, &pool, &mut partial, &mut out, budget)?;
    Ok(out)
}

/// `cosk_m(x)` up to the ambient truncation, with the unit `x -> cosk_m x`.
pub fn coskeleton(
    x: &TruncatedSSet,
    m: usize,
    budget: &Budget,
) -> Result<(Coskeleton, SSetMap), String> {
    let dim_bound = x.dim_bound();
    // Degrees ≤ m copy over.
    let mut cells: Vec<Vec<Cell>> = (0..=m.min(dim_bound))
        .map(|d| x.cell_ids(d).map(|id| x.cell(id).clone()).collect())
        .collect();
    cells.resize(dim_bound + 1, Vec::new());
    let mut object = TruncatedSSet::new(dim_bound, cells)?;
    let mut sphere_index: BTreeMap<usize, BTreeMap<Vec<SimplexRef>, SimplexRef>> = BTreeMap::new();

    for k in (m + 1)..=dim_bound {
        let valid = spheres(&object, k, budget).map_err(|e| e.to_string())?;
        // Boundaries of degenerate k-simplices are not new cells.
        let mut degenerate_tuples: BTreeMap<Vec<SimplexRef>, SimplexRef> = BTreeMap::new();
        for z in object.all_simplices(k - 1) {
            for i in 0..k {
                let s = object.degeneracy(&z, i);
                degenerate_tuples
                    .entry(face_tuple(&object, &s))
                    .or_insert(s);
            }
        }
        let mut new_cells: Vec<Cell> = Vec::new();
        let mut level_index: BTreeMap<Vec<SimplexRef>, SimplexRef> = BTreeMap::new();
        for tuple in valid {
            if let Some(s) = degenerate_tuples.get(&tuple) {
                level_index.insert(tuple, s.clone());
                continue;
            }
            let idx = new_cells.len();
            new_cells.push(Cell {
                faces: tuple.clone(),
            });
            level_index.insert(tuple, SimplexRef::nondegenerate(CellId { dim: k, idx }));
        }
        // Extend the object with the new degree.
        let mut all = (0..k)
            .map(|d| object.cell_ids(d).map(|id| object.cell(id).clone()).collect())
            .collect::<Vec<Vec<Cell>>>();
        all.push(new_cells);
        all.resize(dim_bound + 1, Vec::new());
        object = TruncatedSSet::new(dim_bound, all)?;
        sphere_index.insert(k, level_index);
    }

    let cosk = Coskeleton {
        object,
        base_dim: m,
        sphere_index,
    };
    // Unit: low cells map to themselves, high cells to their spheres.
    let unit = extend_by_spheres(x, &cosk, m, |id| SimplexRef::nondegenerate(id))?;
    Ok((cosk, unit))
}

/// Build a map `source -> cosk.object` from images prescribed on cells of
/// dimension ≤ `low_dim` and sphere lookups above.
pub fn extend_by_spheres(
    source: &TruncatedSSet,
    cosk: &Coskeleton,
    low_dim: usize,
    low: impl Fn(CellId) -> SimplexRef,
) -> Result<SSetMap, String> {
    let mut images: Vec<Vec<SimplexRef>> = Vec::new();
    for d in 0..=source.dim_bound() {
        let mut level = Vec::new();
        for id in source.cell_ids(d) {
            let img = if d <= low_dim {
                low(id)
            } else {
                let r = SimplexRef::nondegenerate(id);
                let tuple: Vec<SimplexRef> = (0..=d)
                    .map(|i| {
                        let f = source.face(&r, i);
                        apply_partial(&images, &f)
                    })
                    .collect();
                cosk.lookup_sphere(d, &tuple)
                    .ok_or_else(|| {
                        format!("no coskeleton simplex for the sphere of cell {id:?}")
                    })?
                    .clone()
            };
            level.push(img);
        }
        images.push(level);
    }
    SSetMap::new(source.clone(), cosk.object.clone(), images)
}

fn apply_partial(images: &[Vec<SimplexRef>], r: &SimplexRef) -> SimplexRef {
    let img = &images[r.target.dim][r.target.idx];
    if r.is_nondegenerate() {
        return img.clone();
    }
    let total = r.epi().then(&img.epi());
    SimplexRef {
        word: super::operator::DegeneracyWord::from_epi(&total),
        target: img.target,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::FinGroup;
    use crate::simplicial::homology::{homology, Coefficients};
    use crate::simplicial::nerve::nerve_of_group;

    #[test]
    fn coskeleton_of_point_is_point() {
        let d0 = TruncatedSSet::standard_simplex(0, 3).unwrap();
        let (c, unit) = coskeleton(&d0, 1, &Budget::default_budget()).unwrap();
        assert_eq!(c.object.total_cells(), 1);
        unit.validate().unwrap();
    }

    #[test]
    fn cosk2_of_z2_nerve_keeps_pi1_and_h1() {
        let n = nerve_of_group(&FinGroup::cyclic(2), 3, 100_000).unwrap();
        let (c, unit) = coskeleton(&n.sset, 2, &Budget::default_budget()).unwrap();
        c.object.validate().unwrap();
        unit.validate().unwrap();
        // Degrees ≤ 2 unchanged.
        assert_eq!(c.object.cell_count(1), 1);
        assert_eq!(c.object.cell_count(2), 1);
        // π₁ is still ℤ/2.
        let epg = crate::simplicial::edge_path::edge_path_group(&c.object, 0).unwrap();
        assert_eq!(
            epg.presentation.abelianization(),
            crate::arith::AbGroup::cyclic(2)
        );
        // H₁ agrees with the nerve's.
        assert_eq!(
            homology(&c.object, 1, Coefficients::Integers).group,
            homology(&n.sset, 1, Coefficients::Integers).group
        );
    }

    #[test]
    fn cosk1_of_circle_collapses_pi1_data_upward() {
        // cosk₁ of ∂Δ² fills every edge-sphere with a 2-cell.
        let (s1, _) = crate::simplicial::boundary(2, 3).unwrap();
        let (c, unit) = coskeleton(&s1, 1, &Budget::default_budget()).unwrap();
        unit.validate().unwrap();
        assert!(c.object.cell_count(2) > 0);
    }
}
