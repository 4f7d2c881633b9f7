//! Generator shapes: boundaries, horns, skeleta.

use super::map::SSetMap;
use super::sset::{CellId, SimplexRef, TruncatedSSet};

/// ∂Δ^m with its inclusion into Δ^m.
pub fn boundary(m: usize, dim_bound: usize) -> Result<(TruncatedSSet, SSetMap), String> {
    if m >= 1 && dim_bound + 1 < m {
        return Err(format!("dim bound {dim_bound} too small for ∂Δ^{m}"));
    }
    let ambient_bound = dim_bound.max(m);
    let delta = TruncatedSSet::standard_simplex(m, ambient_bound)?;
    let mut keep: Vec<Vec<bool>> = (0..=ambient_bound)
        .map(|d| vec![true; delta.cell_count(d)])
        .collect();
    if m <= ambient_bound {
        for k in keep[m].iter_mut() {
            *k = false;
        }
    }
    sub_with_inclusion(&delta, keep)
}

/// Λ^m_k (all faces of Δ^m except the k-th) with its inclusion into Δ^m.
pub fn horn(m: usize, k: usize, dim_bound: usize) -> Result<(TruncatedSSet, SSetMap), String> {
    if m < 1 {
        return Err("horns exist in dimension ≥ 1".into());
    }
    if k > m {
        return Err(format!("horn index {k} out of range for Δ^{m}"));
    }
    if dim_bound + 1 < m {
        return Err(format!("dim bound {dim_bound} too small for Λ^{m}_{k}"));
    }
    let ambient_bound = dim_bound.max(m);
    let delta = TruncatedSSet::standard_simplex(m, ambient_bound)?;
    let mut keep: Vec<Vec<bool>> = (0..=ambient_bound)
        .map(|d| vec![true; delta.cell_count(d)])
        .collect();
    for kk in keep[m].iter_mut() {
        *kk = false;
    }
    // Drop the k-th face: the (m-1)-cell on the vertex set {0..m} \ {k}.
    let mut subset: Vec<usize> = (0..=m).collect();
    subset.remove(k);
    let omit = TruncatedSSet::standard_cell_index(m, &subset);
    keep[m - 1][omit] = false;
    sub_with_inclusion(&delta, keep)
}

fn sub_with_inclusion(
    ambient: &TruncatedSSet,
    keep: Vec<Vec<bool>>,
) -> Result<(TruncatedSSet, SSetMap), String> {
    let (sub, new_to_old) = ambient.sub_complex(&keep)?;
    let images = (0..=sub.dim_bound())
        .map(|m| {
            new_to_old[m]
                .iter()
                .map(|&old| SimplexRef::nondegenerate(CellId { dim: m, idx: old }))
                .collect()
        })
        .collect();
    let incl = SSetMap::new(sub.clone(), ambient.clone(), images)?;
    Ok((sub, incl))
}

/// The n-skeleton of `x` with its inclusion.
pub fn skeleton(x: &TruncatedSSet, n: usize) -> (TruncatedSSet, SSetMap) {
    let keep: Vec<Vec<bool>> = (0..=x.dim_bound())
        .map(|m| vec![m <= n; x.cell_count(m)])
        .collect();
    let (sub, new_to_old) = x.sub_complex(&keep).expect("skeleton is face-closed");
    let images = (0..=sub.dim_bound())
        .map(|m| {
            new_to_old[m]
                .iter()
                .map(|&old| SimplexRef::nondegenerate(CellId { dim: m, idx: old }))
                .collect()
        })
        .collect();
    let incl = SSetMap::new(sub.clone(), x.clone(), images).expect("skeleton inclusion");
    (sub, incl)
}

/// The relative n-skeleton of a cofibration `i : A -> X`: the union of the
/// image of `A` and the n-skeleton of `X`.  Returns the subcomplex with the
/// factoring maps `A -> X⁽ⁿ⁾` and `X⁽ⁿ⁾ -> X`.
pub fn relative_skeleton(
    i: &SSetMap,
    n: usize,
) -> Result<(TruncatedSSet, SSetMap, SSetMap), String> {
    if !i.is_injective() {
        return Err("relative skeleton requires an injective map".into());
    }
    let x = &i.target;
    let mut keep: Vec<Vec<bool>> = (0..=x.dim_bound())
        .map(|m| vec![m <= n; x.cell_count(m)])
        .collect();
    for m in 0..=i.source.dim_bound() {
        for idx in 0..i.source.cell_count(m) {
            let img = i.image_of_cell(CellId { dim: m, idx });
            keep[img.target.dim][img.target.idx] = true;
        }
    }
    let (sub, new_to_old) = x.sub_complex(&keep)?;
    let mut old_to_new: Vec<Vec<usize>> = (0..=x.dim_bound())
        .map(|m| vec![usize::MAX; x.cell_count(m)])
        .collect();
    for m in 0..=sub.dim_bound() {
        for (new, &old) in new_to_old[m].iter().enumerate() {
            old_to_new[m][old] = new;
        }
    }
    let incl_images = (0..=sub.dim_bound())
        .map(|m| {
            new_to_old[m]
                .iter()
                .map(|&old| SimplexRef::nondegenerate(CellId { dim: m, idx: old }))
                .collect()
        })
        .collect();
    let incl = SSetMap::new(sub.clone(), x.clone(), incl_images)?;
    let a_images = (0..=i.source.dim_bound())
        .map(|m| {
            (0..i.source.cell_count(m))
                .map(|idx| {
                    let img = i.image_of_cell(CellId { dim: m, idx });
                    SimplexRef {
                        word: img.word.clone(),
                        target: CellId {
                            dim: img.target.dim,
                            idx: old_to_new[img.target.dim][img.target.idx],
                        },
                    }
                })
                .collect()
        })
        .collect();
    let a_to_sub = SSetMap::new(i.source.clone(), sub.clone(), a_images)?;
    Ok((sub, a_to_sub, incl))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn boundary_counts() {
        let (b2, incl) = boundary(2, 2).unwrap();
        assert_eq!(b2.cell_count(0), 3);
        assert_eq!(b2.cell_count(1), 3);
        assert_eq!(b2.cell_count(2), 0);
        incl.validate().unwrap();
        assert!(incl.is_injective());

        let (b1, _) = boundary(1, 1).unwrap();
        assert_eq!(b1.cell_count(0), 2);
        assert_eq!(b1.cell_count(1), 0);

        // ∂Δ⁰ is empty.
        let (b0, _) = boundary(0, 0).unwrap();
        assert!(b0.is_empty_sset());
    }

    #[test]
    fn horn_counts() {
        let (h, incl) = horn(2, 1, 2).unwrap();
        assert_eq!(h.cell_count(0), 3);
        assert_eq!(h.cell_count(1), 2);
        incl.validate().unwrap();
        // The two edges are 01 and 12 (the missing face is 02).
        let vs: Vec<Vec<usize>> = h
            .cell_ids(1)
            .map(|id| incl.target.vertices(incl.image_of_cell(id)))
            .collect();
        assert!(vs.contains(&vec![0, 1]));
        assert!(vs.contains(&vec![1, 2]));
        assert!(horn(2, 3, 2).is_err());
    }

    #[test]
    fn skeleton_and_relative_skeleton() {
        let d2 = TruncatedSSet::standard_simplex(2, 2).unwrap();
        let (sk1, incl) = skeleton(&d2, 1);
        assert_eq!(sk1.cell_count(0), 3);
        assert_eq!(sk1.cell_count(1), 3);
        assert_eq!(sk1.cell_count(2), 0);
        incl.validate().unwrap();

        // relative_skeleton(∂Δ²→Δ², 1) equals ∂Δ² as a subcomplex.
        let (_b, i) = boundary(2, 2).unwrap();
        let (rel, a_to_rel, rel_to_x) = relative_skeleton(&i, 1).unwrap();
        assert_eq!(rel.cell_count(1), 3);
        assert_eq!(rel.cell_count(2), 0);
        a_to_rel.validate().unwrap();
        rel_to_x.validate().unwrap();
        assert_eq!(a_to_rel.then(&rel_to_x), i);

        // relative_skeleton(∅→Δ¹, 0): the two endpoints.
        let d1 = TruncatedSSet::standard_simplex(1, 1).unwrap();
        let from_empty = SSetMap::from_empty(&d1, 1);
        let (rel0, _, _) = relative_skeleton(&from_empty, 0).unwrap();
        assert_eq!(rel0.cell_count(0), 2);
        assert_eq!(rel0.cell_count(1), 0);

        // chain stabilizes at the bound
        let (rel2, _, _) = relative_skeleton(&i, 2).unwrap();
        assert_eq!(rel2, d2);
    }
}
