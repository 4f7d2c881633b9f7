//! Making π₀ levelwise bijective by a fiber-product replacement.

use crate::budget::Budget;
use crate::pro::{is_pro_iso, LevelMap, ProObject, RawProMap, SSetCat};
use crate::simplicial::lim::pullback;
use crate::simplicial::pi0::pi0;
use crate::simplicial::sset::{Cell, CellId, SimplexRef};
use crate::simplicial::{SSetMap, TruncatedSSet};

use super::pro_pi0::pro_pi0_map;

/// The discrete simplicial set on `n` points.
pub fn discrete(n: usize, dim_bound: usize) -> TruncatedSSet {
    let mut cells = vec![Vec::new(); dim_bound + 1];
    cells[0] = (0..n).map(|_| Cell { faces: Vec::new() }).collect();
    TruncatedSSet::new(dim_bound, cells).expect("discrete sets are simplicial")
}

/// The projection of a space onto its set of components, as a simplicial
/// map to the discrete set.
pub fn component_projection(x: &TruncatedSSet) -> SSetMap {
    let comps = pi0(x);
    let target = discrete(comps.count, x.dim_bound());
    let images = (0..=x.dim_bound())
        .map(|m| {
            x.cell_ids(m)
                .map(|id| {
                    let r = SimplexRef::nondegenerate(id);
                    let c = comps.component_of[x.vertex(&r, 0)];
                    // The fully degenerate m-simplex at the component
                    // vertex.
                    let v = CellId { dim: 0, idx: c };
                    if m == 0 {
                        SimplexRef::nondegenerate(v)
                    } else {
                        let epi = crate::simplicial::Monotone::collapsing(
                            &(0..m).collect::<Vec<_>>(),
                            m,
                        );
                        SimplexRef {
                            word: crate::simplicial::DegeneracyWord::from_epi(&epi),
                            target: v,
                        }
                    }
                })
                .collect()
        })
        .collect();
    SSetMap::new(x.clone(), target, images).expect("component projection is simplicial")
}

pub struct NormalizedPi0 {
    /// `f' : X -> Y'` with levelwise-bijective π₀.
    pub map: LevelMap<SSetCat>,
    /// Projection `Y' -> Y`, a pro-isomorphism (verified).
    pub witness: LevelMap<SSetCat>,
}

/// Replace the target by `Y ×_{π₀Y} π₀X` levelwise; requires π₀(f) to be
/// a pro-isomorphism.
pub fn normalize_pi0(f: &LevelMap<SSetCat>, budget: &Budget) -> Result<NormalizedPi0, String> {
    let (pi0_iso, _) = is_pro_iso(&pro_pi0_map(f), budget).map_err(|e| e.to_string())?;
    if !pi0_iso.holds() {
        return Err(format!("π₀ is not a pro-isomorphism: {pi0_iso}"));
    }
    let x = &f.source;
    let y = &f.target;
    let n = x.index.len();

    // Levelwise fiber products.
    let mut fibers = Vec::new();
    let mut limits = Vec::new();
    let mut projections = Vec::new();
    let mut fprime = Vec::new();
    for s in 0..n {
        let proj_y = component_projection(&y.fibers[s]);
        let comps_x = pi0(&x.fibers[s]);
        let k_x = discrete(comps_x.count, x.fibers[s].dim_bound());
        // π₀X_s -> π₀Y_s as a map of discrete sets.
        let pi0f = crate::simplicial::pi0::pi0_map(f.component(s));
        let incl = SSetMap::new(
            k_x.clone(),
            proj_y.target.clone(),
            {
                let mut images = vec![Vec::new(); k_x.dim_bound() + 1];
                images[0] = pi0f
                    .iter()
                    .map(|&c| SimplexRef::nondegenerate(CellId { dim: 0, idx: c }))
                    .collect();
                images
            },
        )?;
        let pb = pullback(&proj_y, &incl, budget).map_err(|e| e.to_string())?;
        fibers.push(pb.object.clone());
        projections.push(pb.legs[0].clone());
        // f'_s : X_s -> Y'_s via (f_s, component projection of X_s).
        let proj_x = component_projection(&x.fibers[s]);
        let med = pb.mediator(&[
            f.component(s),
            &proj_x,
            &f.component(s).then(&proj_y),
        ])?;
        fprime.push(med);
        limits.push(pb);
    }

    // Structure maps of Y' by the universal property.
    let mut structure = std::collections::BTreeMap::new();
    for (t, s) in x.index.strict_pairs() {
        let leg_y = limits[t].legs[0].then(&y.structure_map(t, s));
        // Component-set map induced by the X-structure map.
        let pi0_phi = crate::simplicial::pi0::pi0_map(&x.structure_map(t, s));
        let k_map = SSetMap::new(
            limits[t].legs[1].target.clone(),
            limits[s].legs[1].target.clone(),
            {
                let kt = &limits[t].legs[1].target;
                let mut images = vec![Vec::new(); kt.dim_bound() + 1];
                images[0] = pi0_phi
                    .iter()
                    .map(|&c| SimplexRef::nondegenerate(CellId { dim: 0, idx: c }))
                    .collect();
                images
            },
        )?;
        let leg_k = limits[t].legs[1].then(&k_map);
        let leg_base = leg_y.then(&component_projection(&y.fibers[s]));
        let med = limits[s].mediator(&[&leg_y, &leg_k, &leg_base])?;
        structure.insert((t, s), med);
    }
    let yprime = ProObject::new(x.index.clone(), fibers, structure)?;
    let map = LevelMap::new(x.clone(), yprime.clone(), fprime)?;
    let witness = LevelMap::new(yprime, y.clone(), projections)?;
    // The projection is a pro-isomorphism whenever π₀(f) is.
    let (w, _) = is_pro_iso(&witness, budget).map_err(|e| e.to_string())?;
    if !w.holds() {
        return Err(format!("fiber-product replacement is not isomorphic: {w}"));
    }
    // π₀ of the normalized map is levelwise bijective.
    for (s, c) in map.components.iter().enumerate() {
        let p = crate::simplicial::pi0::pi0_map(c);
        let tgt = pi0(&map.target.fibers[s]).count;
        let mut seen = vec![false; tgt];
        let bij = p.len() == tgt && p.iter().all(|&v| {
            if seen[v] {
                false
            } else {
                seen[v] = true;
                true
            }
        });
        if !bij {
            return Err(format!("normalized π₀ is not bijective at level {s}"));
        }
    }
    let _ = RawProMap::identity(&x.clone());
    Ok(NormalizedPi0 { map, witness })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::boundary;

    fn budget() -> Budget {
        Budget::default_budget()
    }

    #[test]
    fn already_bijective_is_isomorphic() {
        let (b1, _) = boundary(1, 1).unwrap();
        let c: ProObject<SSetCat> = ProObject::constant(b1);
        let id = LevelMap::identity(&c);
        let out = normalize_pi0(&id, &budget()).unwrap();
        out.map.validate().unwrap();
        out.witness.validate().unwrap();
    }

    #[test]
    fn non_iso_pi0_is_rejected() {
        // Δ⁰ into Δ⁰ ⊔ Δ²: π₀ is 1 -> 2, not an isomorphism.
        let pt = crate::simplicial::TruncatedSSet::standard_simplex(0, 2).unwrap();
        let d2 = crate::simplicial::TruncatedSSet::standard_simplex(2, 2).unwrap();
        let both = crate::simplicial::colim::coproduct(vec![&pt, &d2]).unwrap();
        let f0 = both.legs[0].clone();
        let src: ProObject<SSetCat> = ProObject::constant(pt);
        let tgt: ProObject<SSetCat> = ProObject::constant(both.object.clone());
        let f = LevelMap::new(src, tgt, vec![f0]).unwrap();
        assert!(normalize_pi0(&f, &budget()).is_err());
    }

    #[test]
    fn component_projection_is_simplicial() {
        let (b2, _) = boundary(2, 3).unwrap();
        let p = component_projection(&b2);
        p.validate().unwrap();
        assert_eq!(p.target.cell_count(0), 1);
    }
}
