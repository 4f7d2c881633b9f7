//! Tensors, cotensors, and the simplicial function complex of pro-spaces.

use std::collections::BTreeMap;

use crate::budget::{Budget, BudgetError};
use crate::pro::{pro_hom, LevelMap, ProObject, RawProMap, SSetCat};
use crate::simplicial::exponential::{assemble_degreewise, exponential, standard_map, Exponential};
use crate::simplicial::lim::{product, Limit};
use crate::simplicial::operator::Monotone;
use crate::simplicial::sset::SimplexRef;
use crate::simplicial::{SSetMap, TruncatedSSet};

pub struct Tensor {
    pub object: ProObject<SSetCat>,
    limits: Vec<Limit>,
}

/// Levelwise product with a finite simplicial set.
pub fn tensor(
    x: &ProObject<SSetCat>,
    k: &TruncatedSSet,
    budget: &Budget,
) -> Result<Tensor, String> {
    let mut fibers = Vec::new();
    let mut limits = Vec::new();
    for f in &x.fibers {
        let p = product(f, k, f.dim_bound(), budget)?;
        fibers.push(p.object.clone());
        limits.push(p);
    }
    let mut structure = BTreeMap::new();
    for (t, s) in x.index.strict_pairs() {
        let legs = [
            limits[t].legs[0].then(&x.structure_map(t, s)),
            limits[t].legs[1].clone(),
        ];
        let med = limits[s].mediator(&[&legs[0], &legs[1]])?;
        structure.insert((t, s), med);
    }
    Ok(Tensor {
        object: ProObject::new(x.index.clone(), fibers, structure)?,
        limits,
    })
}

/// The connecting level map `X ⊗ K -> X ⊗ L` induced by `g : K -> L`.
pub fn tensor_map(from: &Tensor, to: &Tensor, g: &SSetMap) -> Result<LevelMap<SSetCat>, String> {
    let n = from.object.index.len();
    let mut components = Vec::new();
    for s in 0..n {
        let legs = [
            from.limits[s].legs[0].clone(),
            from.limits[s].legs[1].then(g),
        ];
        components.push(to.limits[s].mediator(&[&legs[0], &legs[1]])?);
    }
    LevelMap::new(from.object.clone(), to.object.clone(), components)
}

/// Levelwise function complex `Y^K`.
pub struct Cotensor {
    pub object: ProObject<SSetCat>,
    pub exponentials: Vec<Exponential>,
}

pub fn cotensor(
    y: &ProObject<SSetCat>,
    k: &TruncatedSSet,
    budget: &Budget,
) -> Result<Cotensor, BudgetError> {
    let mut exponentials = Vec::new();
    for f in &y.fibers {
        exponentials.push(exponential(f, k, f.dim_bound(), budget)?);
    }
    let mut structure = BTreeMap::new();
    for (t, s) in y.index.strict_pairs() {
        let m = exponential_post_compose(
            &exponentials[t],
            &exponentials[s],
            &y.structure_map(t, s),
        )
        .map_err(|e| BudgetError {
            what: e,
            limit: budget.limit(),
        })?;
        structure.insert((t, s), m);
    }
    let object = ProObject::new(
        y.index.clone(),
        exponentials.iter().map(|e| e.object.clone()).collect(),
        structure,
    )
    .map_err(|e| BudgetError {
        what: e,
        limit: budget.limit(),
    })?;
    Ok(Cotensor {
        object,
        exponentials,
    })
}

/// `Z^K -> W^K` induced by post-composition with `post : Z -> W`.
fn exponential_post_compose(
    from: &Exponential,
    to: &Exponential,
    post: &SSetMap,
) -> Result<SSetMap, String> {
    let dim_bound = from.object.dim_bound();
    let images: Vec<Vec<SimplexRef>> = (0..=dim_bound)
        .map(|m| {
            from.object
                .cell_ids(m)
                .map(|id| {
                    // The cell is some enumerated map; find it, compose,
                    // and take the normal form in the target complex.
                    let idx = from.maps[m]
                        .iter()
                        .enumerate()
                        .find(|(i, _)| {
                            from.simplex_of(m, *i).is_nondegenerate()
                                && from.simplex_of(m, *i).target == id
                        })
                        .map(|(i, _)| i)
                        .expect("every cell indexes an enumerated map");
                    let composed = from.maps[m][idx].then(post);
                    let j = to
                        .index_of(m, &composed)
                        .expect("composition stays enumerated");
                    to.simplex_of(m, j).clone()
                })
                .collect()
        })
        .collect();
    SSetMap::new(from.object.clone(), to.object.clone(), images)
}

/// The function complex of two pro-spaces, assembled as a truncated
/// simplicial set: degree `k` is `pro-Hom(X ⊗ Δ^k, Y)`.
pub struct MappingSpace {
    pub object: TruncatedSSet,
    /// Degree-k elements in enumeration order.
    pub elements: Vec<Vec<RawProMap<SSetCat>>>,
    norm: Vec<BTreeMap<usize, SimplexRef>>,
    pub tensors: Vec<Tensor>,
}

impl MappingSpace {
    pub fn simplex_count(&self, k: usize) -> usize {
        self.elements.get(k).map_or(0, Vec::len)
    }

    pub fn index_of(&self, k: usize, m: &RawProMap<SSetCat>) -> Option<usize> {
        self.elements[k].iter().position(|e| e.pro_eq(m))
    }

    pub fn simplex_of(&self, k: usize, i: usize) -> &SimplexRef {
        &self.norm[k][&i]
    }
}

pub fn mapping_space(
    x: &ProObject<SSetCat>,
    y: &ProObject<SSetCat>,
    k_max: usize,
    budget: &Budget,
) -> Result<MappingSpace, String> {
    // Prisms X ⊗ Δ^k.
    let mut tensors = Vec::new();
    let mut deltas = Vec::new();
    for k in 0..=k_max {
        let dk = TruncatedSSet::standard_simplex(k, k.max(k_max)).expect("simplex");
        tensors.push(tensor(x, &dk, budget)?);
        deltas.push(dk);
    }
    let mut elements: Vec<Vec<RawProMap<SSetCat>>> = Vec::new();
    for t in &tensors {
        elements.push(pro_hom(&t.object, y, budget).map_err(|e| e.to_string())?);
    }

    let connecting = |from_k: usize, phi: &Monotone| -> LevelMap<SSetCat> {
        let g = standard_map(phi, &deltas[from_k], &deltas[phi.target_rank()]);
        tensor_map(&tensors[from_k], &tensors[phi.target_rank()], &g)
            .expect("tensor connecting map")
    };

    let idx: Vec<Vec<usize>> = elements.iter().map(|lvl| (0..lvl.len()).collect()).collect();
    let face = |m: usize, &t: &usize, i: usize| -> usize {
        let conn = connecting(m - 1, &Monotone::coface(i, m));
        let composed = RawProMap::from_level(&conn).then(&elements[m][t]);
        elements[m - 1]
            .iter()
            .position(|e| e.pro_eq(&composed))
            .expect("face stays enumerated")
    };
    let degeneracy = |m: usize, &t: &usize, j: usize| -> usize {
        let conn = connecting(m + 1, &Monotone::codegeneracy(j, m));
        let composed = RawProMap::from_level(&conn).then(&elements[m][t]);
        elements[m + 1]
            .iter()
            .position(|e| e.pro_eq(&composed))
            .expect("degeneracy stays enumerated")
    };
    let (object, norm) = assemble_degreewise(k_max, &idx, face, degeneracy)?;
    Ok(MappingSpace {
        object,
        elements,
        norm,
        tensors,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn budget() -> Budget {
        Budget::new(200_000_000)
    }

    #[test]
    fn map_point_to_point() {
        let pt = TruncatedSSet::standard_simplex(0, 1).unwrap();
        let c: ProObject<SSetCat> = ProObject::constant(pt);
        let m = mapping_space(&c, &c, 1, &budget()).unwrap();
        // One simplex in each degree.
        assert_eq!(m.simplex_count(0), 1);
        assert_eq!(m.simplex_count(1), 1);
        m.object.validate().unwrap();
    }

    #[test]
    fn tensor_with_point_and_interval() {
        let pt = TruncatedSSet::standard_simplex(0, 1).unwrap();
        let d1 = TruncatedSSet::standard_simplex(1, 1).unwrap();
        let c: ProObject<SSetCat> = ProObject::constant(pt);
        let t = tensor(&c, &d1, &budget()).unwrap();
        // Δ⁰ × Δ¹ has the cells of Δ¹.
        assert_eq!(t.object.fibers[0].cell_count(0), 2);
        assert_eq!(t.object.fibers[0].cell_count(1), 1);
    }

    #[test]
    fn vertices_of_the_mapping_space_count_maps() {
        let (b1, _) = crate::simplicial::boundary(1, 1).unwrap();
        let c: ProObject<SSetCat> = ProObject::constant(b1);
        let m = mapping_space(&c, &c, 1, &budget()).unwrap();
        assert_eq!(m.simplex_count(0), 4);
    }

    #[test]
    fn cotensor_by_the_point() {
        let d1 = TruncatedSSet::standard_simplex(1, 1).unwrap();
        let c: ProObject<SSetCat> = ProObject::constant(d1);
        let pt = TruncatedSSet::standard_simplex(0, 1).unwrap();
        let e = cotensor(&c, &pt, &budget()).unwrap();
        e.object.validate().unwrap();
        assert_eq!(e.object.fibers[0].cell_count(0), 2);
        assert_eq!(e.object.fibers[0].cell_count(1), 1);
    }
}
