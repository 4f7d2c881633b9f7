//! Finite limits of truncated simplicial sets.
//!
//! A limit is computed degreewise: an `m`-simplex is a tuple of
//! `m`-simplices of the nodes, compatible with every arrow of the diagram.
//! Nondegenerate tuples and their faces are extracted through common
//! degeneracy factoring.

use std::collections::BTreeMap;

use crate::budget::{Budget, BudgetError};

use super::map::SSetMap;
use super::operator::{DegeneracyWord, Monotone};
use super::sset::{Cell, CellId, SimplexRef, TruncatedSSet};

/// A finite diagram: nodes and arrows `(src, dst, map)`.
pub struct Diagram<'a> {
    pub nodes: Vec<&'a TruncatedSSet>,
    pub arrows: Vec<(usize, usize, &'a SSetMap)>,
}

pub struct Limit {
    pub object: TruncatedSSet,
    /// Projection to each node.
    pub legs: Vec<SSetMap>,
    /// Compatible tuples per degree, indexing the limit's simplices.
    tuples: Vec<Vec<Vec<SimplexRef>>>,
    tuple_core: Vec<BTreeMap<Vec<SimplexRef>, SimplexRef>>,
    node_count: usize,
    dim_bound: usize,
}

impl Limit {
    /// Mediating map from `z` into the limit, given compatible legs
    /// `z -> nodes[i]`.  Fails when the legs are not compatible with the
    /// diagram (the tuple is then missing).
    pub fn mediator(&self, legs: &[&SSetMap]) -> Result<SSetMap, String> {
        assert_eq!(legs.len(), self.node_count);
        let z = legs[0].source.clone();
        for leg in legs {
            if leg.source != z {
                return Err("mediator legs must share a source".into());
            }
        }
        if z.dim_bound() > self.dim_bound {
            return Err(format!(
                "mediator source bound {} exceeds the limit bound {}",
                z.dim_bound(),
                self.dim_bound
            ));
        }
        let images: Vec<Vec<SimplexRef>> = (0..=z.dim_bound())
            .map(|m| {
                z.cell_ids(m)
                    .map(|id| {
                        let r = SimplexRef::nondegenerate(id);
                        let tuple: Vec<SimplexRef> =
                            legs.iter().map(|leg| leg.apply(&r)).collect();
                        self.tuple_core
                            .get(m)
                            .and_then(|lvl| lvl.get(&tuple))
                            .cloned()
                            .ok_or_else(|| format!("legs are incompatible at cell {id:?}"))
                    })
                    .collect::<Result<Vec<_>, String>>()
            })
            .collect::<Result<Vec<_>, String>>()?;
        SSetMap::new(z, self.object.clone(), images)
    }

    /// Number of degree-`m` simplices of the limit (for tests).
    pub fn simplex_count(&self, m: usize) -> usize {
        self.tuples.get(m).map_or(0, Vec::len)
    }

    pub fn dim_bound(&self) -> usize {
        self.dim_bound
    }
}

/// Compute the limit of a diagram.  The empty diagram yields the terminal
/// object (a point).
pub fn limit(diagram: &Diagram, dim_bound: usize, budget: &Budget) -> Result<Limit, BudgetError> {
    if diagram.nodes.is_empty() {
        let point = TruncatedSSet::standard_simplex(0, dim_bound).expect("point");
        // Represent the terminal object with empty tuples.
        let mut tuples = Vec::new();
        let mut tuple_core = Vec::new();
        for m in 0..=dim_bound {
            let tuple: Vec<SimplexRef> = Vec::new();
            let core = point_simplex(m);
            tuples.push(vec![tuple.clone()]);
            let mut map = BTreeMap::new();
            map.insert(tuple, core);
            tuple_core.push(map);
        }
        return Ok(Limit {
            object: point,
            legs: Vec::new(),
            tuples,
            tuple_core,
            node_count: 0,
            dim_bound,
        });
    }

    let n = diagram.nodes.len();
    // Degreewise compatible tuples.
    let mut tuples: Vec<Vec<Vec<SimplexRef>>> = Vec::new();
    for m in 0..=dim_bound {
        let pools: Vec<Vec<SimplexRef>> = diagram
            .nodes
            .iter()
            .map(|x| x.all_simplices(m))
            .collect();
        let mut level: Vec<Vec<SimplexRef>> = Vec::new();
        let mut partial: Vec<SimplexRef> = Vec::new();
        build_tuples(diagram, &pools, 0, &mut partial, &mut level, budget)?;
        tuples.push(level);
    }

    // Degeneracy detection: a tuple is in the image of sᵢ iff every
    // coordinate is.
    let is_degenerate_at = |tuple: &[SimplexRef], i: usize| -> bool {
        tuple.iter().enumerate().all(|(node, r)| {
            let x = diagram.nodes[node];
            r.dim() >= 1 && x.degeneracy(&x.face(r, i), i) == *r
        })
    };

    // Cells: nondegenerate tuples in enumeration order.
    let mut cell_index: Vec<BTreeMap<Vec<SimplexRef>, usize>> = Vec::new();
    for (m, level) in tuples.iter().enumerate() {
        let mut map = BTreeMap::new();
        let mut next = 0;
        for tuple in level {
            let degenerate = m >= 1 && (0..m).any(|i| is_degenerate_at(tuple, i));
            if !degenerate {
                map.insert(tuple.clone(), next);
                next += 1;
            }
        }
        cell_index.push(map);
    }

    // EZ core of each tuple: strip common degeneracies.
    let mut tuple_core: Vec<BTreeMap<Vec<SimplexRef>, SimplexRef>> =
        vec![BTreeMap::new(); dim_bound + 1];
    for m in 0..=dim_bound {
        for tuple in &tuples[m] {
            let core = core_of_tuple(diagram, &cell_index, tuple, m);
            tuple_core[m].insert(tuple.clone(), core);
        }
    }

    // Assemble the object.
    let mut cells: Vec<Vec<Cell>> = Vec::new();
    for m in 0..=dim_bound {
        let mut level: Vec<(usize, Cell)> = Vec::new();
        for (tuple, &idx) in &cell_index[m] {
            let faces = if m == 0 {
                Vec::new()
            } else {
                (0..=m)
                    .map(|i| {
                        let face_tuple: Vec<SimplexRef> = tuple
                            .iter()
                            .enumerate()
                            .map(|(node, r)| diagram.nodes[node].face(r, i))
                            .collect();
                        tuple_core[m - 1][&face_tuple].clone()
                    })
                    .collect()
            };
            level.push((idx, Cell { faces }));
        }
        level.sort_by_key(|(idx, _)| *idx);
        cells.push(level.into_iter().map(|(_, c)| c).collect());
    }
    let object = TruncatedSSet::new(dim_bound, cells).expect("limit assembles");

    // Projections.
    let mut legs = Vec::new();
    for node in 0..n {
        let images: Vec<Vec<SimplexRef>> = (0..=dim_bound)
            .map(|m| {
                let mut by_idx: Vec<(usize, SimplexRef)> = cell_index[m]
                    .iter()
                    .map(|(tuple, &idx)| (idx, tuple[node].clone()))
                    .collect();
                by_idx.sort_by_key(|(idx, _)| *idx);
                by_idx.into_iter().map(|(_, r)| r).collect()
            })
            .collect();
        legs.push(
            SSetMap::new(object.clone(), diagram.nodes[node].clone(), images)
                .expect("limit projection"),
        );
    }

    Ok(Limit {
        object,
        legs,
        tuples,
        tuple_core,
        node_count: n,
        dim_bound,
    })
}

fn point_simplex(m: usize) -> SimplexRef {
    let v = CellId { dim: 0, idx: 0 };
    if m == 0 {
        SimplexRef::nondegenerate(v)
    } else {
        let epi = Monotone::collapsing(&(0..m).collect::<Vec<_>>(), m);
        SimplexRef {
            word: DegeneracyWord::from_epi(&epi),
            target: v,
        }
    }
}

fn build_tuples(
    diagram: &Diagram,
    pools: &[Vec<SimplexRef>],
    node: usize,
    partial: &mut Vec<SimplexRef>,
    out: &mut Vec<Vec<SimplexRef>>,
    budget: &Budget,
) -> Result<(), BudgetError> {
    if node == pools.len() {
        out.push(partial.clone());
        return Ok(());
    }
    'cands: for cand in &pools[node] {
        budget.spend(1, "enumerating limit tuples")?;
        for &(src, dst, map) in &diagram.arrows {
            if src == node && dst < node && map.apply(cand) != partial[dst] {
                continue 'cands;
            }
            if dst == node && src < node && map.apply(&partial[src]) != *cand {
                continue 'cands;
            }
            if src == node && dst == node && map.apply(cand) != *cand {
                continue 'cands;
            }
        }
        partial.push(cand.clone());
        build_tuples(diagram, pools, node + 1, partial, out, budget)?;
        partial.pop();
    }
    Ok(())
}

fn core_of_tuple(
    diagram: &Diagram,
    cell_index: &[BTreeMap<Vec<SimplexRef>, usize>],
    tuple: &[SimplexRef],
    m: usize,
) -> SimplexRef {
    // Strip the lowest shared degeneracy until none remains.
    for i in 0..m {
        let degenerate = tuple.iter().enumerate().all(|(node, r)| {
            let x = diagram.nodes[node];
            r.dim() >= 1 && x.degeneracy(&x.face(r, i), i) == *r
        });
        if degenerate {
            let lower: Vec<SimplexRef> = tuple
                .iter()
                .enumerate()
                .map(|(node, r)| diagram.nodes[node].face(r, i))
                .collect();
            let inner = core_of_tuple(diagram, cell_index, &lower, m - 1);
            let total = Monotone::codegeneracy(i, m - 1).then(&inner.epi());
            return SimplexRef {
                word: DegeneracyWord::from_epi(&total),
                target: inner.target,
            };
        }
    }
    SimplexRef::nondegenerate(CellId {
        dim: m,
        idx: cell_index[m][tuple],
    })
}

/// Pullback of `B -f-> A <-g- C`, with the projections to `B` and `C`.
pub fn pullback(f: &SSetMap, g: &SSetMap, budget: &Budget) -> Result<Limit, String> {
    if f.target != g.target {
        return Err("pullback requires a shared target".into());
    }
    let dim_bound = f
        .source
        .dim_bound()
        .min(g.source.dim_bound())
        .min(f.target.dim_bound());
    for side in [&f.source, &g.source] {
        if let Some(top) = side.top_dim() {
            if top > dim_bound {
                return Err(format!(
                    "pullback input has a cell in dimension {top} above the common bound \
                     {dim_bound}; refusing to drop it"
                ));
            }
        }
    }
    // Nodes: 0 = B, 1 = C, 2 = A with both arrows into A.  The returned
    // legs are [to B, to C, to A]; a mediator needs all three, with the
    // A-leg equal to either composite.
    let diagram = Diagram {
        nodes: vec![&f.source, &g.source, &f.target],
        arrows: vec![(0, 2, f), (1, 2, g)],
    };
    limit(&diagram, dim_bound, budget).map_err(|e| e.to_string())
}

/// Binary product with projections, truncated at `dim_bound`.
pub fn product(
    x: &TruncatedSSet,
    y: &TruncatedSSet,
    dim_bound: usize,
    budget: &Budget,
) -> Result<Limit, String> {
    let diagram = Diagram {
        nodes: vec![x, y],
        arrows: Vec::new(),
    };
    limit(&diagram, dim_bound, budget).map_err(|e| e.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn budget() -> Budget {
        Budget::default_budget()
    }

    #[test]
    fn square_product_counts() {
        // Δ¹ × Δ¹ truncated at 2: 4 vertices, 5 edges, 2 two-cells.
        let d1 = TruncatedSSet::standard_simplex(1, 2).unwrap();
        let p = product(&d1, &d1, 2, &budget()).unwrap();
        p.object.validate().unwrap();
        assert_eq!(p.object.cell_count(0), 4);
        assert_eq!(p.object.cell_count(1), 5);
        assert_eq!(p.object.cell_count(2), 2);
        for leg in &p.legs {
            leg.validate().unwrap();
        }
    }

    #[test]
    fn pullback_of_points() {
        let d0 = TruncatedSSet::standard_simplex(0, 1).unwrap();
        let id = SSetMap::identity(&d0);
        let pb = pullback(&id, &id, &budget()).unwrap();
        assert_eq!(pb.object.cell_count(0), 1);
        assert_eq!(pb.object.cell_count(1), 0);
    }

    #[test]
    fn empty_diagram_is_a_point() {
        let lim = limit(
            &Diagram {
                nodes: vec![],
                arrows: vec![],
            },
            2,
            &budget(),
        )
        .unwrap();
        assert_eq!(lim.object.cell_count(0), 1);
        assert_eq!(lim.object.total_cells(), 1);
    }

    #[test]
    fn mediator_into_product_is_the_pairing() {
        let d1 = TruncatedSSet::standard_simplex(1, 2).unwrap();
        let p = product(&d1, &d1, 2, &budget()).unwrap();
        // Diagonal Δ¹ -> Δ¹ × Δ¹.
        let id = SSetMap::identity(&d1);
        let diag = p.mediator(&[&id, &id]).unwrap();
        diag.validate().unwrap();
        assert_eq!(diag.then(&p.legs[0]), id);
        assert_eq!(diag.then(&p.legs[1]), id);
    }
}
