//! Nerves of finite groupoids.
//!
//! A k-cell is a composable k-tuple of arrows; the nondegenerate ones are
//! the tuples without identity entries, which is exactly the
//! Eilenberg–Zilber normal form for nerves.

use std::collections::BTreeMap;

use crate::groups::FinGroup;

use super::operator::{DegeneracyWord, Monotone};
use super::sset::{Cell, CellId, SimplexRef, TruncatedSSet};

/// A finite groupoid given by explicit arrow data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroupoid {
    pub objects: usize,
    /// (source, target) per arrow.
    pub arrows: Vec<(usize, usize)>,
    /// Identity arrow per object.
    pub identity: Vec<usize>,
    /// `compose[f][g]`: the composite "f then g", defined when
    /// `target(f) = source(g)`.
    pub compose: Vec<Vec<Option<usize>>>,
}

impl FiniteGroupoid {
    pub fn from_group(g: &FinGroup) -> Self {
        let n = g.order();
        FiniteGroupoid {
            objects: 1,
            arrows: vec![(0, 0); n],
            identity: vec![0],
            compose: (0..n)
                .map(|a| (0..n).map(|b| Some(g.op(a, b))).collect())
                .collect(),
        }
    }

    /// Coproduct of groupoids (disjoint union of object sets).
    pub fn disjoint_union(&self, other: &FiniteGroupoid) -> Self {
        let shift_obj = self.objects;
        let shift_arr = self.arrows.len();
        let mut arrows = self.arrows.clone();
        arrows.extend(other.arrows.iter().map(|&(s, t)| (s + shift_obj, t + shift_obj)));
        let mut identity = self.identity.clone();
        identity.extend(other.identity.iter().map(|&a| a + shift_arr));
        let total = arrows.len();
        let mut compose = vec![vec![None; total]; total];
        for (f, row) in self.compose.iter().enumerate() {
            for (g, &c) in row.iter().enumerate() {
                compose[f][g] = c;
            }
        }
        for (f, row) in other.compose.iter().enumerate() {
            for (g, &c) in row.iter().enumerate() {
                compose[f + shift_arr][g + shift_arr] = c.map(|x| x + shift_arr);
            }
        }
        FiniteGroupoid {
            objects: self.objects + other.objects,
            arrows,
            identity,
            compose,
        }
    }

    pub fn is_identity(&self, arrow: usize) -> bool {
        self.identity.contains(&arrow)
    }

    pub fn validate(&self) -> Result<(), String> {
        if self.identity.len() != self.objects {
            return Err("one identity per object required".into());
        }
        for (o, &e) in self.identity.iter().enumerate() {
            if self.arrows[e] != (o, o) {
                return Err(format!("identity of object {o} has wrong endpoints"));
            }
        }
        for (f, &(sf, tf)) in self.arrows.iter().enumerate() {
            for (g, &(sg, tg)) in self.arrows.iter().enumerate() {
                match self.compose[f][g] {
                    Some(c) => {
                        if tf != sg || self.arrows[c] != (sf, tg) {
                            return Err(format!("composite {f};{g} ill-typed"));
                        }
                    }
                    None => {
                        if tf == sg {
                            return Err(format!("missing composite {f};{g}"));
                        }
                    }
                }
            }
        }
        // Associativity + identity laws.
        for f in 0..self.arrows.len() {
            let (s, t) = self.arrows[f];
            if self.compose[self.identity[s]][f] != Some(f)
                || self.compose[f][self.identity[t]] != Some(f)
            {
                return Err("identity law fails".into());
            }
            for g in 0..self.arrows.len() {
                for h in 0..self.arrows.len() {
                    if let (Some(fg), Some(gh)) = (self.compose[f][g], self.compose[g][h]) {
                        if self.compose[fg][h] != self.compose[f][gh] {
                            return Err("associativity fails".into());
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// The nerve of a groupoid, truncated at `dim_bound`, together with the
/// tuple carried by each nondegenerate cell.
pub struct Nerve {
    pub sset: TruncatedSSet,
    /// `tuples[k][idx]`: the identity-free composable tuple of cell `k#idx`
    /// (`tuples[0][o]` is empty; vertex `o` is the object `o`).
    pub tuples: Vec<Vec<Vec<usize>>>,
}

pub fn nerve(g: &FiniteGroupoid, dim_bound: usize, budget: u64) -> Result<Nerve, String> {
    let mut tuples: Vec<Vec<Vec<usize>>> = vec![(0..g.objects).map(|_| Vec::new()).collect()];
    let mut index: Vec<BTreeMap<Vec<usize>, usize>> = vec![BTreeMap::new()];
    let mut count = g.objects as u64;
    for k in 1..=dim_bound {
        let mut level: Vec<Vec<usize>> = Vec::new();
        let mut idx = BTreeMap::new();
        if k == 1 {
            for (a, _) in g.arrows.iter().enumerate() {
                if !g.is_identity(a) {
                    idx.insert(vec![a], level.len());
                    level.push(vec![a]);
                }
            }
        } else {
            for prev in &tuples[k - 1] {
                if prev.is_empty() {
                    continue;
                }
                let (_, t) = g.arrows[*prev.last().unwrap()];
                for (a, &(sa, _)) in g.arrows.iter().enumerate() {
                    if sa == t && !g.is_identity(a) {
                        let mut tup = prev.clone();
                        tup.push(a);
                        idx.insert(tup.clone(), level.len());
                        level.push(tup);
                    }
                }
            }
        }
        count += level.len() as u64;
        if count > budget {
            return Err(format!(
                "nerve exceeds the cell budget {budget} at dimension {k}"
            ));
        }
        tuples.push(level);
        index.push(idx);
    }

    // Normal form of an arbitrary composable tuple: strip identity entries.
    let tuple_to_ref = |tuple: &[usize], start_obj: usize| -> SimplexRef {
        let m = tuple.len();
        let core: Vec<usize> = tuple
            .iter()
            .copied()
            .filter(|&a| !g.is_identity(a))
            .collect();
        let steps: Vec<usize> = tuple
            .iter()
            .enumerate()
            .filter(|(_, &a)| g.is_identity(a))
            .map(|(p, _)| p)
            .collect();
        let target = if core.is_empty() {
            CellId {
                dim: 0,
                idx: start_obj,
            }
        } else {
            CellId {
                dim: core.len(),
                idx: index[core.len()][&core],
            }
        };
        if steps.is_empty() {
            SimplexRef::nondegenerate(target)
        } else {
            let epi = Monotone::collapsing(&steps, m);
            SimplexRef {
                word: DegeneracyWord::from_epi(&epi),
                target,
            }
        }
    };

    let mut cells: Vec<Vec<Cell>> = Vec::new();
    for (k, level) in tuples.iter().enumerate() {
        let mut out = Vec::new();
        for tup in level {
            let faces = if k == 0 {
                Vec::new()
            } else if k == 1 {
                let (s, t) = g.arrows[tup[0]];
                vec![
                    SimplexRef::nondegenerate(CellId { dim: 0, idx: t }),
                    SimplexRef::nondegenerate(CellId { dim: 0, idx: s }),
                ]
            } else {
                (0..=k)
                    .map(|i| {
                        if i == 0 {
                            tuple_to_ref(&tup[1..], g.arrows[tup[1]].0)
                        } else if i == k {
                            tuple_to_ref(&tup[..k - 1], g.arrows[tup[0]].0)
                        } else {
                            let mut face = Vec::with_capacity(k - 1);
                            face.extend_from_slice(&tup[..i - 1]);
                            let c = g.compose[tup[i - 1]][tup[i]]
                                .expect("consecutive arrows compose");
                            face.push(c);
                            face.extend_from_slice(&tup[i + 1..]);
                            tuple_to_ref(&face, g.arrows[tup[0]].0)
                        }
                    })
                    .collect()
            };
            out.push(Cell { faces });
        }
        cells.push(out);
    }
    let sset = TruncatedSSet::new(dim_bound, cells)?;
    Ok(Nerve { sset, tuples })
}

/// Nerve of a finite group (one-object groupoid).
pub fn nerve_of_group(g: &FinGroup, dim_bound: usize, budget: u64) -> Result<Nerve, String> {
    nerve(&FiniteGroupoid::from_group(g), dim_bound, budget)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_group_nerve_is_a_point() {
        let n = nerve_of_group(&FinGroup::trivial(), 3, 1000).unwrap();
        assert_eq!(n.sset.total_cells(), 1);
        n.sset.validate().unwrap();
    }

    #[test]
    fn z2_nerve_counts() {
        let n = nerve_of_group(&FinGroup::cyclic(2), 2, 1000).unwrap();
        assert_eq!(n.sset.cell_count(0), 1);
        assert_eq!(n.sset.cell_count(1), 1);
        assert_eq!(n.sset.cell_count(2), 1);
        n.sset.validate().unwrap();
    }

    #[test]
    fn z3_nerve_counts() {
        let n = nerve_of_group(&FinGroup::cyclic(3), 2, 1000).unwrap();
        assert_eq!(n.sset.cell_count(0), 1);
        assert_eq!(n.sset.cell_count(1), 2);
        assert_eq!(n.sset.cell_count(2), 4);
        n.sset.validate().unwrap();
    }

    #[test]
    fn nerve_fundamental_group_is_the_group() {
        use crate::groups::todd_coxeter;
        let n = nerve_of_group(&FinGroup::cyclic(2), 3, 10_000).unwrap();
        let epg = crate::simplicial::edge_path::edge_path_group(&n.sset, 0).unwrap();
        let fin = todd_coxeter(&epg.presentation, 100).unwrap().group;
        assert_eq!(fin.order(), 2);
        assert_eq!(
            epg.presentation.abelianization(),
            crate::arith::AbGroup::cyclic(2)
        );
    }

    #[test]
    fn groupoid_validation_and_union() {
        let g = FiniteGroupoid::from_group(&FinGroup::cyclic(3));
        g.validate().unwrap();
        let u = g.disjoint_union(&FiniteGroupoid::from_group(&FinGroup::trivial()));
        u.validate().unwrap();
        let n = nerve(&u, 2, 1000).unwrap();
        assert_eq!(n.sset.cell_count(0), 2);
        assert_eq!(n.sset.cell_count(1), 2);
    }
}
