//! Connected components.

use super::map::SSetMap;
use super::sset::{CellId, SimplexRef, TruncatedSSet};

/// π₀: the quotient of the vertices by the edge-generated equivalence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pi0 {
    /// Component id of each vertex; components numbered by least vertex.
    pub component_of: Vec<usize>,
    pub count: usize,
}

pub fn pi0(x: &TruncatedSSet) -> Pi0 {
    let n = x.cell_count(0);
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, i: usize) -> usize {
        if parent[i] != i {
            let r = find(parent, parent[i]);
            parent[i] = r;
        }
        parent[i]
    }
    for idx in 0..x.cell_count(1) {
        let e = SimplexRef::nondegenerate(CellId { dim: 1, idx });
        let a = x.vertex(&e, 0);
        let b = x.vertex(&e, 1);
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            let (lo, hi) = (ra.min(rb), ra.max(rb));
            parent[hi] = lo;
        }
    }
    let mut label = vec![usize::MAX; n];
    let mut count = 0;
    for v in 0..n {
        let r = find(&mut parent, v);
        if label[r] == usize::MAX {
            label[r] = count;
            count += 1;
        }
        label[v] = label[r];
    }
    Pi0 {
        component_of: label,
        count,
    }
}

/// The map π₀(f) : π₀(X) -> π₀(Y) as a function on component ids.
pub fn pi0_map(f: &SSetMap) -> Vec<usize> {
    let px = pi0(&f.source);
    let py = pi0(&f.target);
    let mut out = vec![usize::MAX; px.count];
    for v in 0..f.source.cell_count(0) {
        let img = f.image_of_cell(CellId { dim: 0, idx: v });
        out[px.component_of[v]] = py.component_of[img.target.idx];
    }
    out
}
