//! Dimension-truncated simplicial sets.
//!
//! Only nondegenerate simplices are stored; every simplex is addressed by a
//! [`SimplexRef`] — a degeneracy word in Eilenberg–Zilber normal form over a
//! nondegenerate cell.  Faces of stored cells are `SimplexRef`s, so the face
//! of *any* simplex is computed exactly by composing monotone operators.

use serde::{Deserialize, Serialize};

use super::operator::{DegeneracyWord, Monotone};

/// Address of a nondegenerate cell: dimension and index within it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CellId {
    pub dim: usize,
    pub idx: usize,
}

/// A (possibly degenerate) simplex: a degeneracy word applied to a
/// nondegenerate cell.  The dimension is `target.dim + word.len()`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SimplexRef {
    pub word: DegeneracyWord,
    pub target: CellId,
}

impl SimplexRef {
    pub fn nondegenerate(target: CellId) -> Self {
        SimplexRef {
            word: DegeneracyWord::empty(),
            target,
        }
    }

    pub fn dim(&self) -> usize {
        self.target.dim + self.word.len()
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.word.is_empty()
    }

    /// The surjection `[dim] ->> [target.dim]` encoded by the word.
    pub fn epi(&self) -> Monotone {
        self.word.to_epi(self.target.dim)
    }
}

/// A nondegenerate cell: its `dim + 1` faces, each one dimension lower.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    pub faces: Vec<SimplexRef>,
}

/// A simplicial set with no nondegenerate cells above `dim_bound`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TruncatedSSet {
    dim_bound: usize,
    /// `cells[m]` lists the nondegenerate `m`-cells in insertion order.
    cells: Vec<Vec<Cell>>,
}

impl TruncatedSSet {
    pub fn new(dim_bound: usize, cells: Vec<Vec<Cell>>) -> Result<Self, String> {
        let mut padded = cells;
        if padded.len() > dim_bound + 1 {
            return Err(format!(
                "cells listed up to dimension {} but the bound is {}",
                padded.len() - 1,
                dim_bound
            ));
        }
        padded.resize(dim_bound + 1, Vec::new());
        let sset = TruncatedSSet {
            dim_bound,
            cells: padded,
        };
        sset.validate()?;
        Ok(sset)
    }

    pub fn empty(dim_bound: usize) -> Self {
        TruncatedSSet {
            dim_bound,
            cells: vec![Vec::new(); dim_bound + 1],
        }
    }

    pub fn dim_bound(&self) -> usize {
        self.dim_bound
    }

    pub fn cell_count(&self, dim: usize) -> usize {
        self.cells.get(dim).map_or(0, Vec::len)
    }

    pub fn total_cells(&self) -> usize {
        self.cells.iter().map(Vec::len).sum()
    }

    pub fn is_empty_sset(&self) -> bool {
        self.total_cells() == 0
    }

    /// Highest dimension carrying a nondegenerate cell, if any.
    pub fn top_dim(&self) -> Option<usize> {
        (0..=self.dim_bound).rev().find(|&m| self.cell_count(m) > 0)
    }

    pub fn cell(&self, id: CellId) -> &Cell {
        &self.cells[id.dim][id.idx]
    }

    pub fn cell_ids(&self, dim: usize) -> impl Iterator<Item = CellId> + '_ {
        (0..self.cell_count(dim)).map(move |idx| CellId { dim, idx })
    }

    pub fn all_cell_ids(&self) -> impl Iterator<Item = CellId> + '_ {
        (0..=self.dim_bound).flat_map(|dim| self.cell_ids(dim))
    }

    /// The `i`-th face of an arbitrary simplex, in normal form.
    pub fn face(&self, r: &SimplexRef, i: usize) -> SimplexRef {
        let m = r.dim();
        assert!(m >= 1 && i <= m, "face index out of range");
        if r.is_nondegenerate() {
            return self.cell(r.target).faces[i].clone();
        }
        let op = Monotone::coface(i, m).then(&r.epi());
        self.apply_operator(r.target, &op)
    }

    /// The `i`-th degeneracy of an arbitrary simplex, in normal form.
    pub fn degeneracy(&self, r: &SimplexRef, i: usize) -> SimplexRef {
        let m = r.dim();
        assert!(i <= m);
        let op = Monotone::codegeneracy(i, m).then(&r.epi());
        let word = DegeneracyWord::from_epi(&op);
        SimplexRef {
            word,
            target: r.target,
        }
    }

    /// `X(op)` applied to a nondegenerate cell, for any monotone
    /// `op : [n] -> [cell.dim]`.
    pub fn apply_operator(&self, cell: CellId, op: &Monotone) -> SimplexRef {
        assert_eq!(op.target_rank(), cell.dim);
        let (epi, mono) = op.epi_mono();
        let mut r = SimplexRef::nondegenerate(cell);
        // Outermost omitted value first.
        for v in mono.omitted_desc() {
            r = self.face(&r, v);
        }
        if epi.is_identity() {
            r
        } else {
            let total = epi.then(&r.epi());
            SimplexRef {
                word: DegeneracyWord::from_epi(&total),
                target: r.target,
            }
        }
    }

    /// `X(op)` applied to an arbitrary simplex.
    pub fn apply_operator_ref(&self, r: &SimplexRef, op: &Monotone) -> SimplexRef {
        let total = op.then(&r.epi());
        self.apply_operator(r.target, &total)
    }

    /// The vertex of `r` at position `j`, as an index into the 0-cells.
    pub fn vertex(&self, r: &SimplexRef, j: usize) -> usize {
        let op = Monotone::new(vec![j], r.dim());
        let v = self.apply_operator_ref(r, &op);
        debug_assert_eq!(v.dim(), 0);
        v.target.idx
    }

    /// Vertices of `r` in simplex order.
    pub fn vertices(&self, r: &SimplexRef) -> Vec<usize> {
        (0..=r.dim()).map(|j| self.vertex(r, j)).collect()
    }

    /// Restriction of `r` along the listed vertex positions (ascending).
    pub fn restrict(&self, r: &SimplexRef, positions: &[usize]) -> SimplexRef {
        let op = Monotone::new(positions.to_vec(), r.dim());
        self.apply_operator_ref(r, &op)
    }

    /// All simplices in degree `m`, nondegenerate or not, in a fixed order
    /// (by core dimension, then core index, then word).  Degrees above the
    /// truncation bound are allowed: they contain only degenerate simplices.
    pub fn all_simplices(&self, m: usize) -> Vec<SimplexRef> {
        let mut out = Vec::new();
        for k in 0..=m.min(self.dim_bound) {
            let epis = Monotone::surjections(m, k);
            for idx in 0..self.cell_count(k) {
                for epi in &epis {
                    out.push(SimplexRef {
                        word: DegeneracyWord::from_epi(epi),
                        target: CellId { dim: k, idx },
                    });
                }
            }
        }
        out
    }

    /// Structural checks: face targets exist at the right dimensions,
    /// degeneracy words are in normal form, and the simplicial identities
    /// `dᵢ dⱼ = dⱼ₋₁ dᵢ` (i < j) hold after normal-form reduction.
    pub fn validate(&self) -> Result<(), String> {
        if self.cells.len() != self.dim_bound + 1 {
            return Err("cell table does not match the dimension bound".into());
        }
        for m in 0..=self.dim_bound {
            for idx in 0..self.cell_count(m) {
                let id = CellId { dim: m, idx };
                let cell = self.cell(id);
                if cell.faces.len() != if m == 0 { 0 } else { m + 1 } {
                    return Err(format!("cell {id:?} has {} faces", cell.faces.len()));
                }
                for (i, f) in cell.faces.iter().enumerate() {
                    if f.dim() + 1 != m {
                        return Err(format!("face {i} of {id:?} has wrong dimension"));
                    }
                    if !f.word.is_valid_over(f.target.dim) {
                        return Err(format!("face {i} of {id:?} has a malformed word"));
                    }
                    if f.target.dim > self.dim_bound || f.target.idx >= self.cell_count(f.target.dim)
                    {
                        return Err(format!("face {i} of cell {id:?} points nowhere"));
                    }
                }
            }
        }
        for m in 2..=self.dim_bound {
            for idx in 0..self.cell_count(m) {
                let r = SimplexRef::nondegenerate(CellId { dim: m, idx });
                for j in 1..=m {
                    for i in 0..j {
                        let lhs = self.face(&self.face(&r, j), i);
                        let rhs = self.face(&self.face(&r, i), j - 1);
                        if lhs != rhs {
                            return Err(format!(
                                "simplicial identity d{i} d{j} fails on cell {m}#{idx}"
                            ));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// The standard simplex Δ^m: nondegenerate cells are the nonempty
    /// subsets of `{0..m}` in lexicographic order, faces by omission.
    pub fn standard_simplex(m: usize, dim_bound: usize) -> Result<Self, String> {
        if dim_bound < m {
            return Err(format!("dim bound {dim_bound} below simplex dimension {m}"));
        }
        let mut cells: Vec<Vec<Cell>> = Vec::new();
        let mut subsets_by_dim: Vec<Vec<Vec<usize>>> = Vec::new();
        for k in 0..=m {
            let subsets = super::operator::subsets_of_size(m + 1, k + 1);
            let mut level = Vec::new();
            for subset in &subsets {
                let faces = if k == 0 {
                    Vec::new()
                } else {
                    (0..=k)
                        .map(|i| {
                            let mut sub = subset.clone();
                            sub.remove(i);
                            let idx = subsets_by_dim[k - 1]
                                .iter()
                                .position(|s| *s == sub)
                                .unwrap();
                            SimplexRef::nondegenerate(CellId { dim: k - 1, idx })
                        })
                        .collect()
                };
                level.push(Cell { faces });
            }
            subsets_by_dim.push(subsets);
            cells.push(level);
        }
        TruncatedSSet::new(dim_bound, cells)
    }

    /// Index of the cell of Δ^m spanned by the given vertex subset.
    pub fn standard_cell_index(m: usize, subset: &[usize]) -> usize {
        super::operator::subsets_of_size(m + 1, subset.len())
            .iter()
            .position(|s| s == subset)
            .expect("subset of {0..m}")
    }

    /// Full subcomplex on the kept cells.  `keep[m][idx]` must be closed
    /// under faces.  Returns the subcomplex and the index mapping
    /// `new idx -> old idx` per dimension.
    pub fn sub_complex(&self, keep: &[Vec<bool>]) -> Result<(Self, Vec<Vec<usize>>), String> {
        assert_eq!(keep.len(), self.dim_bound + 1);
        let mut old_to_new: Vec<Vec<Option<usize>>> = Vec::new();
        let mut new_to_old: Vec<Vec<usize>> = Vec::new();
        for m in 0..=self.dim_bound {
            assert_eq!(keep[m].len(), self.cell_count(m));
            let mut o2n = vec![None; self.cell_count(m)];
            let mut n2o = Vec::new();
            for idx in 0..self.cell_count(m) {
                if keep[m][idx] {
                    o2n[idx] = Some(n2o.len());
                    n2o.push(idx);
                }
            }
            old_to_new.push(o2n);
            new_to_old.push(n2o);
        }
        let mut cells: Vec<Vec<Cell>> = Vec::new();
        for m in 0..=self.dim_bound {
            let mut level = Vec::new();
            for &old_idx in &new_to_old[m] {
                let cell = &self.cells[m][old_idx];
                let mut faces = Vec::new();
                for f in &cell.faces {
                    let new_target = old_to_new[f.target.dim][f.target.idx].ok_or_else(|| {
                        format!("kept cell {m}#{old_idx} has a dropped face")
                    })?;
                    faces.push(SimplexRef {
                        word: f.word.clone(),
                        target: CellId {
                            dim: f.target.dim,
                            idx: new_target,
                        },
                    });
                }
                level.push(Cell { faces });
            }
            cells.push(level);
        }
        Ok((TruncatedSSet::new(self.dim_bound, cells)?, new_to_old))
    }

    /// Change the truncation bound; cells above the new bound must not
    /// exist (use `skeleton` to drop them deliberately).
    pub fn with_dim_bound(&self, dim_bound: usize) -> Result<Self, String> {
        if let Some(top) = self.top_dim() {
            if top > dim_bound {
                return Err(format!(
                    "cells of dimension {top} exceed requested bound {dim_bound}"
                ));
            }
        }
        let mut cells = self.cells.clone();
        cells.resize(dim_bound + 1, Vec::new());
        cells.truncate(dim_bound + 1);
        TruncatedSSet::new(dim_bound, cells)
    }
}
