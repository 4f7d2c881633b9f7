//! Local systems with finite abelian values, and twisted cohomology.
//!
//! A local system assigns one finite abelian group per π₀ component and an
//! automorphism per nondegenerate edge, subject to the 2-cell relations —
//! a functor on the edge-path groupoid.  Cochains on a simplex take values
//! in the system at the simplex's leading vertex; the differential
//! transports the 0th face back along the simplex's 0→1 edge.

use serde::{Deserialize, Serialize};

use crate::arith::{AbGroup, IntMat, Subquotient};

use super::map::SSetMap;
use super::pi0::{pi0, Pi0};
use super::sset::{CellId, SimplexRef, TruncatedSSet};

/// A finite abelian group presented as a product of cyclic groups.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FinAb {
    /// Cyclic moduli, each ≥ 1 (1 = trivial factor).
    pub moduli: Vec<i128>,
}

impl FinAb {
    pub fn new(moduli: Vec<i128>) -> Self {
        assert!(moduli.iter().all(|&m| m >= 1));
        FinAb { moduli }
    }

    pub fn trivial() -> Self {
        FinAb { moduli: vec![] }
    }

    pub fn cyclic(n: i128) -> Self {
        FinAb::new(vec![n])
    }

    pub fn rank(&self) -> usize {
        self.moduli.len()
    }

    pub fn order(&self) -> i128 {
        self.moduli.iter().product()
    }

    pub fn identity_hom(&self) -> FinAbHom {
        FinAbHom {
            matrix: IntMat::identity(self.rank()),
        }
    }
}

/// A homomorphism between products of cyclics, as an integer matrix
/// reduced against the target moduli.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinAbHom {
    pub matrix: IntMat,
}

impl FinAbHom {
    pub fn validate(&self, source: &FinAb, target: &FinAb) -> Result<(), String> {
        if self.matrix.nrows() != target.rank() || self.matrix.ncols() != source.rank() {
            return Err("hom matrix shape mismatch".into());
        }
        for j in 0..source.rank() {
            for i in 0..target.rank() {
                if (self.matrix[(i, j)] * source.moduli[j]) % target.moduli[i] != 0 {
                    return Err(format!("entry ({i},{j}) is not a well-defined hom"));
                }
            }
        }
        Ok(())
    }

    /// `other ∘ self`, entries reduced mod the final target moduli.
    pub fn then(&self, other: &FinAbHom, final_target: &FinAb) -> FinAbHom {
        let mut m = other.matrix.mul(&self.matrix);
        for i in 0..m.nrows() {
            for j in 0..m.ncols() {
                m[(i, j)] = m[(i, j)].rem_euclid(final_target.moduli[i]);
            }
        }
        FinAbHom { matrix: m }
    }

    /// Two-sided inverse automorphism, when one exists.
    pub fn inverse(&self, group: &FinAb) -> Option<FinAbHom> {
        let n = group.rank();
        // Solve A·X ≡ I (mod moduli) columnwise with multiplier variables.
        let mut cols = Vec::new();
        for k in 0..n {
            let mut stacked = IntMat::zero(n, n + n);
            for i in 0..n {
                for j in 0..n {
                    stacked[(i, j)] = self.matrix[(i, j)];
                }
                stacked[(i, n + i)] = group.moduli[i];
            }
            let mut e = vec![0i128; n];
            e[k] = 1;
            let sol = stacked.solve(&e)?;
            cols.push(sol[0..n].to_vec());
        }
        let mut m = IntMat::zero(n, n);
        for (k, col) in cols.iter().enumerate() {
            for i in 0..n {
                m[(i, k)] = col[i].rem_euclid(group.moduli[i].max(1));
            }
        }
        let inv = FinAbHom { matrix: m };
        // Check it is also a left inverse (finite group: automatic, but
        // verify to catch malformed inputs).
        let round = inv.then(self, group);
        let id = group.identity_hom();
        if hom_eq(&round, &id, group) {
            Some(inv)
        } else {
            None
        }
    }
}

/// Equality of homs modulo the target group.
pub fn hom_eq(a: &FinAbHom, b: &FinAbHom, target: &FinAb) -> bool {
    if a.matrix.nrows() != b.matrix.nrows() || a.matrix.ncols() != b.matrix.ncols() {
        return false;
    }
    for i in 0..a.matrix.nrows() {
        for j in 0..a.matrix.ncols() {
            if (a.matrix[(i, j)] - b.matrix[(i, j)]).rem_euclid(target.moduli[i]) != 0 {
                return false;
            }
        }
    }
    true
}

/// A local system on one truncated simplicial set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalSystem {
    /// One value group per π₀ component (componentwise constant).
    pub groups: Vec<FinAb>,
    /// One automorphism of the component's group per nondegenerate edge.
    pub edge_action: Vec<FinAbHom>,
}

impl LocalSystem {
    /// The constant system at `group`.
    pub fn constant(x: &TruncatedSSet, group: FinAb) -> LocalSystem {
        let comps = pi0(x);
        LocalSystem {
            groups: vec![group.clone(); comps.count],
            edge_action: vec![group.identity_hom(); x.cell_count(1)],
        }
    }

    pub fn component_group<'a>(&'a self, comps: &Pi0, vertex: usize) -> &'a FinAb {
        &self.groups[comps.component_of[vertex]]
    }

    /// Action along an edge simplex (identity on degenerate edges).
    pub fn action_of(&self, x: &TruncatedSSet, e: &SimplexRef, comps: &Pi0) -> FinAbHom {
        if e.is_nondegenerate() {
            self.edge_action[e.target.idx].clone()
        } else {
            let v = x.vertex(e, 0);
            self.component_group(comps, v).identity_hom()
        }
    }

    /// Functoriality on the edge-path groupoid: edge actions are
    /// automorphisms and every 2-cell relation closes.
    pub fn validate(&self, x: &TruncatedSSet) -> Result<(), String> {
        let comps = pi0(x);
        if self.groups.len() != comps.count {
            return Err("one value group per component required".into());
        }
        if self.edge_action.len() != x.cell_count(1) {
            return Err("one edge action per nondegenerate edge required".into());
        }
        for idx in 0..x.cell_count(1) {
            let e = SimplexRef::nondegenerate(CellId { dim: 1, idx });
            let (a, b) = (x.vertex(&e, 0), x.vertex(&e, 1));
            if comps.component_of[a] != comps.component_of[b] {
                return Err("edge endpoints disagree on components".into());
            }
            let g = self.component_group(&comps, a);
            self.edge_action[idx].validate(g, g)?;
            if self.edge_action[idx].inverse(g).is_none() {
                return Err(format!("edge {idx} action is not invertible"));
            }
        }
        for idx in 0..x.cell_count(2) {
            let t = SimplexRef::nondegenerate(CellId { dim: 2, idx });
            let g = self.component_group(&comps, x.vertex(&t, 0));
            // action(d₁) = action(d₀) ∘ action(d₂)
            let a01 = self.action_of(x, &x.face(&t, 2), &comps);
            let a12 = self.action_of(x, &x.face(&t, 0), &comps);
            let a02 = self.action_of(x, &x.face(&t, 1), &comps);
            let composite = a01.then(&a12, g);
            if !hom_eq(&composite, &a02, g) {
                return Err(format!("2-cell {idx} breaks functoriality"));
            }
        }
        Ok(())
    }

    /// Pullback along a simplicial map: precompose the groupoid functor.
    pub fn pullback(&self, f: &SSetMap) -> LocalSystem {
        let comps_src = pi0(&f.source);
        let comps_tgt = pi0(&f.target);
        let mut groups = Vec::new();
        for c in 0..comps_src.count {
            let v = (0..f.source.cell_count(0))
                .find(|&v| comps_src.component_of[v] == c)
                .expect("component inhabited");
            let img = f.image_of_cell(CellId { dim: 0, idx: v });
            groups.push(self.groups[comps_tgt.component_of[img.target.idx]].clone());
        }
        let edge_action = (0..f.source.cell_count(1))
            .map(|idx| {
                let img = f.apply(&SimplexRef::nondegenerate(CellId { dim: 1, idx }));
                self.action_of(&f.target, &img, &comps_tgt)
            })
            .collect();
        LocalSystem {
            groups,
            edge_action,
        }
    }

    /// Monodromy of an edge word (pairs of edge index and direction).
    pub fn monodromy(
        &self,
        x: &TruncatedSSet,
        word: &[(usize, i32)],
        group: &FinAb,
    ) -> Option<FinAbHom> {
        let mut acc = group.identity_hom();
        for &(edge, sign) in word {
            let act = &self.edge_action[edge];
            let step = if sign > 0 {
                act.clone()
            } else {
                act.inverse(group)?
            };
            acc = acc.then(&step, group);
        }
        let _ = x;
        Some(acc)
    }
}

/// Moduli of the twisted cochain group C^k: one block per nondegenerate
/// k-cell, the block being the system at the cell's leading vertex.
fn cochain_moduli(x: &TruncatedSSet, l: &LocalSystem, comps: &Pi0, k: usize) -> Vec<i128> {
    let mut moduli = Vec::new();
    for idx in 0..x.cell_count(k) {
        let r = SimplexRef::nondegenerate(CellId { dim: k, idx });
        let g = l.component_group(comps, x.vertex(&r, 0));
        moduli.extend_from_slice(&g.moduli);
    }
    moduli
}

fn block_offsets(x: &TruncatedSSet, l: &LocalSystem, comps: &Pi0, k: usize) -> Vec<usize> {
    let mut offsets = Vec::with_capacity(x.cell_count(k) + 1);
    let mut acc = 0;
    for idx in 0..x.cell_count(k) {
        offsets.push(acc);
        let r = SimplexRef::nondegenerate(CellId { dim: k, idx });
        acc += l.component_group(comps, x.vertex(&r, 0)).rank();
    }
    offsets.push(acc);
    offsets
}

/// The twisted differential `d : C^k -> C^{k+1}` as an integer matrix.
///
/// `(dφ)(τ) = ρ(e₀₁τ)⁻¹ φ(d₀τ) + Σᵢ₌₁ (−1)ⁱ φ(dᵢτ)`, with degenerate faces
/// contributing zero.
pub fn twisted_differential(
    x: &TruncatedSSet,
    l: &LocalSystem,
    comps: &Pi0,
    k: usize,
) -> IntMat {
    let src_offsets = block_offsets(x, l, comps, k);
    let dst_offsets = block_offsets(x, l, comps, k + 1);
    let mut m = IntMat::zero(
        *dst_offsets.last().unwrap(),
        *src_offsets.last().unwrap(),
    );
    for tau_idx in 0..x.cell_count(k + 1) {
        let tau = SimplexRef::nondegenerate(CellId {
            dim: k + 1,
            idx: tau_idx,
        });
        let g_tau = l.component_group(comps, x.vertex(&tau, 0));
        for i in 0..=k + 1 {
            let f = x.face(&tau, i);
            if !f.is_nondegenerate() {
                continue;
            }
            let col0 = src_offsets[f.target.idx];
            let row0 = dst_offsets[tau_idx];
            if i == 0 {
                // Transport along the 0→1 edge of τ, inverted.
                let e01 = x.restrict(&tau, &[0, 1]);
                let act = l.action_of(x, &e01, comps);
                let inv = act
                    .inverse(g_tau)
                    .expect("edge actions are invertible on validated systems");
                for r in 0..inv.matrix.nrows() {
                    for c in 0..inv.matrix.ncols() {
                        m[(row0 + r, col0 + c)] += inv.matrix[(r, c)];
                    }
                }
            } else {
                let sign = if i % 2 == 0 { 1 } else { -1 };
                for r in 0..g_tau.rank() {
                    m[(row0 + r, col0 + r)] += sign;
                }
            }
        }
    }
    m
}

/// Twisted cochain cohomology `H^i(X; L)`.
pub fn twisted_cohomology(x: &TruncatedSSet, l: &LocalSystem, i: usize) -> AbGroup {
    twisted_cohomology_subquotient(x, l, i).group().clone()
}

pub fn twisted_cohomology_subquotient(x: &TruncatedSSet, l: &LocalSystem, i: usize) -> Subquotient {
    let comps = pi0(x);
    let ambient = cochain_moduli(x, l, &comps, i);
    let d_i = twisted_differential(x, l, &comps, i);
    let upper = cochain_moduli(x, l, &comps, i + 1);
    let boundary = if i == 0 {
        IntMat::zero(ambient.len(), 0)
    } else {
        twisted_differential(x, l, &comps, i - 1)
    };
    Subquotient::new(ambient, Some((&d_i, &upper)), &boundary)
}

/// Relative twisted cohomology `H^i(X, A; L)` for an injective `j: A -> X`:
/// cochains vanishing on the image of `A`.
pub fn relative_twisted_cohomology(
    x: &TruncatedSSet,
    j: &SSetMap,
    l: &LocalSystem,
    i: usize,
) -> Result<AbGroup, String> {
    if !j.is_injective() {
        return Err("relative cohomology requires an injective map".into());
    }
    let comps = pi0(x);
    // Coordinates to keep per degree: blocks of cells not in the image.
    let keep = |k: usize| -> Vec<bool> {
        let mut in_image = vec![false; x.cell_count(k)];
        if k <= j.source.dim_bound() {
            for idx in 0..j.source.cell_count(k) {
                let img = j.image_of_cell(CellId { dim: k, idx });
                in_image[img.target.idx] = true;
            }
        }
        in_image.iter().map(|&b| !b).collect()
    };
    let restrict = |m: &IntMat, rows_keep: &[bool], cols_keep: &[bool]| -> IntMat {
        let rows: Vec<usize> = (0..m.nrows()).filter(|&r| rows_keep[r]).collect();
        let cols: Vec<usize> = (0..m.ncols()).filter(|&c| cols_keep[c]).collect();
        let mut out = IntMat::zero(rows.len(), cols.len());
        for (ri, &r) in rows.iter().enumerate() {
            for (ci, &c) in cols.iter().enumerate() {
                out[(ri, ci)] = m[(r, c)];
            }
        }
        out
    };
    let coord_keep = |k: usize| -> Vec<bool> {
        let cells = keep(k);
        let mut out = Vec::new();
        for idx in 0..x.cell_count(k) {
            let r = SimplexRef::nondegenerate(CellId { dim: k, idx });
            let rank = l.component_group(&comps, x.vertex(&r, 0)).rank();
            out.extend(std::iter::repeat_n(cells[idx], rank));
        }
        out
    };

    let amb_keep = coord_keep(i);
    let ambient: Vec<i128> = cochain_moduli(x, l, &comps, i)
        .into_iter()
        .zip(amb_keep.iter())
        .filter(|(_, &k)| k)
        .map(|(m, _)| m)
        .collect();
    let up_keep = coord_keep(i + 1);
    let upper: Vec<i128> = cochain_moduli(x, l, &comps, i + 1)
        .into_iter()
        .zip(up_keep.iter())
        .filter(|(_, &k)| k)
        .map(|(m, _)| m)
        .collect();
    let d_i = restrict(&twisted_differential(x, l, &comps, i), &up_keep, &amb_keep);
    let boundary = if i == 0 {
        IntMat::zero(ambient.len(), 0)
    } else {
        let low_keep = coord_keep(i - 1);
        restrict(&twisted_differential(x, l, &comps, i - 1), &amb_keep, &low_keep)
    };
    Ok(Subquotient::new(ambient, Some((&d_i, &upper)), &boundary)
        .group()
        .clone())
}

/// Pullback matrix on twisted cochains along `u : X' -> X` in degree `k`,
/// from `C^k(X; L)` to `C^k(X'; u*L)`.
pub fn cochain_pullback_matrix(u: &SSetMap, l_target: &LocalSystem, k: usize) -> IntMat {
    let x = &u.target;
    let xp = &u.source;
    let comps = pi0(x);
    let comps_p = pi0(xp);
    let l_src = l_target.pullback(u);
    let src_off = block_offsets(x, l_target, &comps, k);
    let dst_off = block_offsets(xp, &l_src, &comps_p, k);
    let mut m = IntMat::zero(*dst_off.last().unwrap(), *src_off.last().unwrap());
    for idx in 0..xp.cell_count(k) {
        let img = u.image_of_cell(CellId { dim: k, idx });
        if !img.is_nondegenerate() {
            continue;
        }
        let r = SimplexRef::nondegenerate(CellId { dim: k, idx });
        let rank = l_src.component_group(&comps_p, xp.vertex(&r, 0)).rank();
        for t in 0..rank {
            m[(dst_off[idx] + t, src_off[img.target.idx] + t)] = 1;
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::constructors::boundary;

    #[test]
    fn constant_coefficients_on_circle_and_disk() {
        let (s1, _) = boundary(2, 2).unwrap();
        let l2 = LocalSystem::constant(&s1, FinAb::cyclic(2));
        l2.validate(&s1).unwrap();
        assert_eq!(twisted_cohomology(&s1, &l2, 0), AbGroup::cyclic(2));
        assert_eq!(twisted_cohomology(&s1, &l2, 1), AbGroup::cyclic(2));

        let d2 = TruncatedSSet::standard_simplex(2, 2).unwrap();
        let l = LocalSystem::constant(&d2, FinAb::cyclic(2));
        assert_eq!(twisted_cohomology(&d2, &l, 0), AbGroup::cyclic(2));
        assert!(twisted_cohomology(&d2, &l, 1).is_trivial());
    }

    #[test]
    fn sign_action_kills_invariants() {
        // ℤ/3 on ∂Δ² with one edge acting by x ↦ -x: monodromy around the
        // circle is -1, so H⁰ (invariants) vanishes.
        let (s1, _) = boundary(2, 2).unwrap();
        let g = FinAb::cyclic(3);
        let mut actions = vec![g.identity_hom(); s1.cell_count(1)];
        actions[0] = FinAbHom {
            matrix: IntMat::from_rows(vec![vec![2]]),
        };
        let l = LocalSystem {
            groups: vec![g.clone()],
            edge_action: actions,
        };
        l.validate(&s1).unwrap();
        assert!(twisted_cohomology(&s1, &l, 0).is_trivial());
        // For a unit monodromy twist on the circle, H¹ vanishes too:
        // coker(ρ - 1) with ρ-1 = -2 ≡ 1 invertible mod 3.
        assert!(twisted_cohomology(&s1, &l, 1).is_trivial());
    }

    #[test]
    fn differential_squares_to_zero() {
        let d3 = TruncatedSSet::standard_simplex(3, 3).unwrap();
        let l = LocalSystem::constant(&d3, FinAb::cyclic(4));
        let comps = pi0(&d3);
        for k in 0..2 {
            let d1 = twisted_differential(&d3, &l, &comps, k);
            let d2 = twisted_differential(&d3, &l, &comps, k + 1);
            let sq = d2.mul(&d1);
            for i in 0..sq.nrows() {
                for j in 0..sq.ncols() {
                    assert_eq!(sq[(i, j)].rem_euclid(4), 0);
                }
            }
        }
    }

    #[test]
    fn relative_cohomology_of_pair() {
        // H*(Δ², ∂Δ²; ℤ/2): the pair is a relative 2-disk: H² = ℤ/2, else 0.
        let (_, incl) = boundary(2, 2).unwrap();
        let d2 = incl.target.clone();
        let l = LocalSystem::constant(&d2, FinAb::cyclic(2));
        assert!(relative_twisted_cohomology(&d2, &incl, &l, 0)
            .unwrap()
            .is_trivial());
        assert!(relative_twisted_cohomology(&d2, &incl, &l, 1)
            .unwrap()
            .is_trivial());
        assert_eq!(
            relative_twisted_cohomology(&d2, &incl, &l, 2).unwrap(),
            AbGroup::cyclic(2)
        );
    }
}
