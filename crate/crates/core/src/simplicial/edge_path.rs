//! Edge-path fundamental groups.
//!
//! A spanning tree is grown by breadth-first search from the least vertex
//! of each component; π₁ is presented by the non-tree edges with one
//! relator per 2-cell.  Degenerate edges contribute the identity.

use std::collections::BTreeMap;

use crate::groups::{GroupPresentation, Letter};

use super::map::SSetMap;
use super::sset::{CellId, SimplexRef, TruncatedSSet};

#[derive(Debug, Clone)]
pub struct EdgePathGroup {
    /// Component id (as numbered by `pi0`) this presentation describes.
    pub component: usize,
    pub basepoint: usize,
    /// Least vertex of the component, the BFS root.
    pub root: usize,
    /// For each vertex in the component (other than the root): the tree
    /// edge reaching it and whether the vertex is the edge's target.
    parent_edge: BTreeMap<usize, (usize, bool)>,
    /// Generator index of each non-tree edge inside the component.
    generator_of_edge: BTreeMap<usize, usize>,
    /// Underlying edge of each generator.
    pub edge_of_generator: Vec<usize>,
    pub presentation: GroupPresentation,
}

/// Endpoints of a nondegenerate edge: (source, target) = (vertex 0, vertex 1).
fn endpoints(x: &TruncatedSSet, edge: usize) -> (usize, usize) {
    let e = SimplexRef::nondegenerate(CellId { dim: 1, idx: edge });
    (x.vertex(&e, 0), x.vertex(&e, 1))
}

pub fn edge_path_group(x: &TruncatedSSet, v: usize) -> Result<EdgePathGroup, String> {
    if v >= x.cell_count(0) {
        return Err(format!("vertex {v} does not exist"));
    }
    let comps = super::pi0::pi0(x);
    let component = comps.component_of[v];
    let root = (0..x.cell_count(0))
        .find(|&w| comps.component_of[w] == component)
        .expect("component is inhabited");

    // BFS over nondegenerate edges in both directions.
    let mut adjacency: BTreeMap<usize, Vec<(usize, usize, bool)>> = BTreeMap::new();
    for edge in 0..x.cell_count(1) {
        let (a, b) = endpoints(x, edge);
        adjacency.entry(a).or_default().push((b, edge, true));
        adjacency.entry(b).or_default().push((a, edge, false));
    }
    let mut parent_edge: BTreeMap<usize, (usize, bool)> = BTreeMap::new();
    let mut tree_edges: Vec<bool> = vec![false; x.cell_count(1)];
    let mut visited: BTreeMap<usize, bool> = BTreeMap::new();
    visited.insert(root, true);
    let mut queue = std::collections::VecDeque::from([root]);
    while let Some(w) = queue.pop_front() {
        if let Some(nexts) = adjacency.get(&w) {
            for &(to, edge, forward) in nexts {
                if to == w || *visited.get(&to).unwrap_or(&false) {
                    continue;
                }
                visited.insert(to, true);
                parent_edge.insert(to, (edge, forward));
                tree_edges[edge] = true;
                queue.push_back(to);
            }
        }
    }

    // Generators: non-tree edges whose endpoints lie in the component.
    let mut generator_of_edge = BTreeMap::new();
    let mut edge_of_generator = Vec::new();
    let mut names = Vec::new();
    for edge in 0..x.cell_count(1) {
        let (a, _) = endpoints(x, edge);
        if comps.component_of[a] == component && !tree_edges[edge] {
            generator_of_edge.insert(edge, edge_of_generator.len());
            names.push(format!("e{edge}"));
            edge_of_generator.push(edge);
        }
    }

    let data = EdgePathGroup {
        component,
        basepoint: v,
        root,
        parent_edge,
        generator_of_edge,
        edge_of_generator,
        presentation: GroupPresentation {
            generators: names,
            relators: Vec::new(),
        },
    };

    // Relators from 2-cells with vertices in the component.
    let mut relators = Vec::new();
    for idx in 0..x.cell_count(2) {
        let t = SimplexRef::nondegenerate(CellId { dim: 2, idx });
        if comps.component_of[x.vertex(&t, 0)] != component {
            continue;
        }
        // Faces: d₂ = 0→1, d₀ = 1→2, d₁ = 0→2.
        let mut word: Vec<Letter> = Vec::new();
        word.extend(data.edge_word(x, &x.face(&t, 2), 1));
        word.extend(data.edge_word(x, &x.face(&t, 0), 1));
        word.extend(data.edge_word(x, &x.face(&t, 1), -1));
        let word = GroupPresentation::free_reduce(&word);
        if !word.is_empty() {
            relators.push(word);
        }
    }
    relators.sort();
    relators.dedup();

    let presentation = GroupPresentation {
        generators: data.presentation.generators.clone(),
        relators,
    };
    Ok(EdgePathGroup {
        presentation,
        ..data
    })
}

impl EdgePathGroup {
    /// The letter contributed by an edge simplex: empty for degenerate or
    /// tree edges, a single generator letter otherwise (with `sign` for
    /// traversal direction).
    pub fn edge_word(&self, _x: &TruncatedSSet, e: &SimplexRef, sign: i32) -> Vec<Letter> {
        if !e.is_nondegenerate() {
            return Vec::new();
        }
        match self.generator_of_edge.get(&e.target.idx) {
            None => Vec::new(),
            Some(&g) => vec![(g, sign)],
        }
    }

    /// The loop (as an edge sequence with orientations) representing a
    /// generator, based at the root: tree path to the edge's source, the
    /// edge itself, and the reverse tree path from its target.
    pub fn generator_loop(&self, x: &TruncatedSSet, gen: usize) -> Vec<(usize, i32)> {
        let edge = self.edge_of_generator[gen];
        let (a, b) = endpoints(x, edge);
        let mut out: Vec<(usize, i32)> = Vec::new();
        for (e, forward) in self.path_from_root(x, a) {
            out.push((e, if forward { 1 } else { -1 }));
        }
        out.push((edge, 1));
        for (e, forward) in self.path_from_root(x, b).into_iter().rev() {
            out.push((e, if forward { -1 } else { 1 }));
        }
        out
    }

    /// Tree path root → vertex as (edge, forward?) steps in walk order.
    pub fn path_from_root(&self, x: &TruncatedSSet, vertex: usize) -> Vec<(usize, bool)> {
        let mut rev = Vec::new();
        let mut cur = vertex;
        while cur != self.root {
            let &(edge, forward) = self
                .parent_edge
                .get(&cur)
                .expect("vertex lies in the presented component");
            rev.push((edge, forward));
            let (a, b) = endpoints(x, edge);
            cur = if forward { a } else { b };
        }
        rev.reverse();
        rev
    }

    /// Conjugating path between two basepoints of the same component,
    /// through the root.
    pub fn basepoint_conjugator(
        &self,
        x: &TruncatedSSet,
        from: usize,
        to: usize,
    ) -> Vec<(usize, i32)> {
        let mut out: Vec<(usize, i32)> = Vec::new();
        for (e, forward) in self.path_from_root(x, from).into_iter().rev() {
            out.push((e, if forward { -1 } else { 1 }));
        }
        for (e, forward) in self.path_from_root(x, to) {
            out.push((e, if forward { 1 } else { -1 }));
        }
        out
    }
}

/// The map π₁(X, base) → π₁(Y, f(base)) induced by `f`, given on each
/// generator of `source_group` as a word in `target_group`'s generators.
pub fn induced_pi1(
    f: &SSetMap,
    source_group: &EdgePathGroup,
    target_group: &EdgePathGroup,
) -> Vec<Vec<Letter>> {
    let x = &f.source;
    (0..source_group.edge_of_generator.len())
        .map(|gen| {
            let mut word: Vec<Letter> = Vec::new();
            for (edge, sign) in source_group.generator_loop(x, gen) {
                let img = f.apply(&SimplexRef::nondegenerate(CellId { dim: 1, idx: edge }));
                word.extend(target_group.edge_word(&f.target, &img, sign));
            }
            GroupPresentation::free_reduce(&word)
        })
        .collect()
}
