//! Colimits of truncated simplicial sets.
//!
//! Colimits are computed degreewise in sets: all simplices of the pieces
//! (degenerate ones included) are identified along the given relations,
//! then the nondegenerate classes and their faces are read off through
//! Eilenberg–Zilber cores.

use std::collections::BTreeMap;

use super::map::SSetMap;
use super::operator::{DegeneracyWord, Monotone};
use super::sset::{Cell, CellId, SimplexRef, TruncatedSSet};

/// A simplex of a disjoint union: (piece index, simplex).
type Tagged = (usize, SimplexRef);

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }
    fn find(&mut self, i: usize) -> usize {
        if self.parent[i] != i {
            let root = self.find(self.parent[i]);
            self.parent[i] = root;
        }
        self.parent[i]
    }
    fn unite(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        // Keep the smaller index as representative for determinism.
        if ra < rb {
            self.parent[rb] = ra;
        } else {
            self.parent[ra] = rb;
        }
    }
}

/// Colimit of a finite diagram presented as pieces plus identifications.
///
/// The relation set must be closed under the simplicial operators — which
/// is automatic when the pairs are the images of all simplices of common
/// sources under simplicial maps.
pub struct ColimitBuilder<'a> {
    pub pieces: Vec<&'a TruncatedSSet>,
    pub dim_bound: usize,
}

pub struct Colimit {
    pub object: TruncatedSSet,
    /// For each piece, the induced map into the colimit.
    pub legs: Vec<SSetMap>,
    /// For each output cell: the canonical class member (piece, cell).
    pub origin: Vec<Vec<(usize, CellId)>>,
}

impl Colimit {
    /// Cocone mediator: the unique map out of the colimit agreeing with
    /// the given compatible legs.  Compatibility is certified by the final
    /// validation.
    pub fn mediator(&self, legs: &[&SSetMap]) -> Result<SSetMap, String> {
        assert_eq!(legs.len(), self.legs.len());
        let target = legs[0].target.clone();
        for leg in legs {
            if leg.target != target {
                return Err("cocone legs must share a target".into());
            }
        }
        let images = self
            .origin
            .iter()
            .map(|level| {
                level
                    .iter()
                    .map(|&(side, cell)| legs[side].image_of_cell(cell).clone())
                    .collect()
            })
            .collect();
        SSetMap::new(self.object.clone(), target, images)
    }
}

impl<'a> ColimitBuilder<'a> {
    pub fn new(pieces: Vec<&'a TruncatedSSet>) -> Result<Self, String> {
        assert!(!pieces.is_empty());
        let dim_bound = pieces.iter().map(|p| p.dim_bound()).min().unwrap();
        for p in &pieces {
            if let Some(top) = p.top_dim() {
                if top > dim_bound {
                    return Err(format!(
                        "piece has a nondegenerate cell in dimension {top}, above the \
                         common bound {dim_bound}; refusing to drop it"
                    ));
                }
            }
        }
        Ok(ColimitBuilder { pieces, dim_bound })
    }

    pub fn build(
        &self,
        relations: impl Fn(usize) -> Vec<(Tagged, Tagged)>,
    ) -> Result<Colimit, String> {
        let dim_bound = self.dim_bound;
        // Enumerate all simplices per degree with stable indices.
        let mut sx: Vec<Vec<Tagged>> = Vec::new();
        let mut index: Vec<BTreeMap<Tagged, usize>> = Vec::new();
        for m in 0..=dim_bound {
            let mut level = Vec::new();
            for (side, piece) in self.pieces.iter().enumerate() {
                for r in piece.all_simplices(m) {
                    level.push((side, r));
                }
            }
            let mut map = BTreeMap::new();
            for (i, t) in level.iter().enumerate() {
                map.insert(t.clone(), i);
            }
            sx.push(level);
            index.push(map);
        }

        // Union-find per degree.
        let mut uf: Vec<UnionFind> = sx.iter().map(|lvl| UnionFind::new(lvl.len())).collect();
        for (m, (level_index, u)) in index.iter().zip(uf.iter_mut()).enumerate() {
            for (a, b) in relations(m) {
                let ia = *level_index
                    .get(&a)
                    .ok_or_else(|| format!("relation references unknown simplex in degree {m}"))?;
                let ib = *level_index
                    .get(&b)
                    .ok_or_else(|| format!("relation references unknown simplex in degree {m}"))?;
                u.unite(ia, ib);
            }
        }

        // Canonical class numbering per degree (by minimal member index).
        let mut class_rep: Vec<BTreeMap<usize, usize>> = Vec::new();
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for (m, level) in sx.iter().enumerate() {
            let mut reps: BTreeMap<usize, usize> = BTreeMap::new();
            let mut list = Vec::new();
            for i in 0..level.len() {
                let root = uf[m].find(i);
                reps.entry(root).or_insert_with(|| {
                    list.push(root);
                    list.len() - 1
                });
            }
            class_rep.push(reps);
            classes.push(list);
        }

        let mut uf2 = uf;
        let mut class_of = |m: usize, t: &Tagged| -> usize {
            let i = *index[m].get(t).expect("simplex enumerated");
            let root = uf2[m].find(i);
            class_rep[m][&root]
        };

        // Degeneracy witnesses on classes.
        let mut witness: Vec<Vec<Option<(usize, usize)>>> = classes
            .iter()
            .map(|lvl| vec![None; lvl.len()])
            .collect();
        for m in 1..=dim_bound {
            for lower_class in 0..classes[m - 1].len() {
                let member = classes[m - 1][lower_class];
                let (side, r) = sx[m - 1][member].clone();
                for i in 0..m {
                    let s = self.pieces[side].degeneracy(&r, i);
                    let c = class_of(m, &(side, s));
                    if witness[m][c].is_none() {
                        witness[m][c] = Some((i, lower_class));
                    }
                }
            }
        }

        // Nondegenerate classes become cells.
        let mut cell_of_class: Vec<Vec<Option<usize>>> = classes
            .iter()
            .map(|lvl| vec![None; lvl.len()])
            .collect();
        for m in 0..=dim_bound {
            let mut next = 0;
            for c in 0..classes[m].len() {
                if witness[m][c].is_none() {
                    cell_of_class[m][c] = Some(next);
                    next += 1;
                }
            }
        }

        // EZ core of each class, bottom-up.
        let mut cores: Vec<Vec<SimplexRef>> = Vec::new();
        for m in 0..=dim_bound {
            let mut level = Vec::with_capacity(classes[m].len());
            for c in 0..classes[m].len() {
                let r = match witness[m][c] {
                    None => SimplexRef::nondegenerate(CellId {
                        dim: m,
                        idx: cell_of_class[m][c].unwrap(),
                    }),
                    Some((i, lower)) => {
                        let inner: &SimplexRef = &cores[m - 1][lower];
                        let total = Monotone::codegeneracy(i, m - 1).then(&inner.epi());
                        SimplexRef {
                            word: DegeneracyWord::from_epi(&total),
                            target: inner.target,
                        }
                    }
                };
                level.push(r);
            }
            cores.push(level);
        }

        // Assemble cells with faces.
        let mut cells: Vec<Vec<Cell>> = Vec::new();
        let mut origin: Vec<Vec<(usize, CellId)>> = Vec::new();
        for m in 0..=dim_bound {
            let mut level = Vec::new();
            let mut level_origin = Vec::new();
            for c in 0..classes[m].len() {
                if cell_of_class[m][c].is_none() {
                    continue;
                }
                let member = classes[m][c];
                let (side, r) = sx[m][member].clone();
                debug_assert!(r.is_nondegenerate());
                level_origin.push((side, r.target));
                let faces = if m == 0 {
                    Vec::new()
                } else {
                    (0..=m)
                        .map(|i| {
                            let f = self.pieces[side].face(&r, i);
                            let fc = class_of(m - 1, &(side, f));
                            cores[m - 1][fc].clone()
                        })
                        .collect()
                };
                level.push(Cell { faces });
            }
            cells.push(level);
            origin.push(level_origin);
        }
        let object = TruncatedSSet::new(dim_bound, cells)?;

        // Legs: piece cells to their class cores.
        let mut legs = Vec::new();
        for (side, piece) in self.pieces.iter().enumerate() {
            let images = (0..=piece.dim_bound())
                .map(|m| {
                    piece
                        .cell_ids(m)
                        .map(|id| {
                            let t = (side, SimplexRef::nondegenerate(id));
                            let c = class_of(m, &t);
                            cores[m][c].clone()
                        })
                        .collect()
                })
                .collect();
            legs.push(SSetMap::new((*piece).clone(), object.clone(), images)?);
        }
        Ok(Colimit {
            object,
            legs,
            origin,
        })
    }
}

/// Pushout of `B <-f- A -g-> C`, with the cocone maps from `B` and `C`.
pub fn pushout(f: &SSetMap, g: &SSetMap) -> Result<Colimit, String> {
    if f.source != g.source {
        return Err("pushout requires a shared source".into());
    }
    let builder = ColimitBuilder::new(vec![&f.target, &g.target])?;
    let a = f.source.clone();
    builder.build(move |m| {
        a.all_simplices(m)
            .into_iter()
            .map(|r| ((0, f.apply(&r)), (1, g.apply(&r))))
            .collect()
    })
}

/// Coequalizer of a parallel pair `f, g : A -> B`.
pub fn coequalizer(f: &SSetMap, g: &SSetMap) -> Result<Colimit, String> {
    if f.source != g.source || f.target != g.target {
        return Err("coequalizer requires a parallel pair".into());
    }
    let builder = ColimitBuilder::new(vec![&f.target])?;
    let a = f.source.clone();
    builder.build(move |m| {
        a.all_simplices(m)
            .into_iter()
            .map(|r| ((0, f.apply(&r)), (0, g.apply(&r))))
            .collect()
    })
}

/// Disjoint union of finitely many pieces.
pub fn coproduct(pieces: Vec<&TruncatedSSet>) -> Result<Colimit, String> {
    let builder = ColimitBuilder::new(pieces)?;
    builder.build(|_| Vec::new())
}
