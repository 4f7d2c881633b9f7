//! Coset enumeration over the trivial subgroup.
//!
//! When the enumeration completes within the coset budget, the presented
//! group is finite and we recover its full multiplication table, which
//! turns the word problem into table lookups.

use super::fin_group::FinGroup;
use super::presentation::{GroupPresentation, Letter};

struct Enumerator {
    ngens: usize,
    parent: Vec<usize>,
    /// act[g][c] and act_inv[g][c]; entries may point at merged cosets and
    /// are normalized through `find` on read.
    act: Vec<Vec<Option<usize>>>,
    act_inv: Vec<Vec<Option<usize>>>,
    /// Defining word from coset 0.
    word: Vec<Vec<Letter>>,
}

impl Enumerator {
    fn new(ngens: usize) -> Self {
        Enumerator {
            ngens,
            parent: vec![0],
            act: vec![vec![None]; ngens],
            act_inv: vec![vec![None]; ngens],
            word: vec![Vec::new()],
        }
    }

    fn find(&mut self, i: usize) -> usize {
        if self.parent[i] != i {
            let r = self.find(self.parent[i]);
            self.parent[i] = r;
        }
        self.parent[i]
    }

    fn get(&mut self, c: usize, (g, e): Letter) -> Option<usize> {
        let entry = if e > 0 {
            self.act[g][c]
        } else {
            self.act_inv[g][c]
        };
        entry.map(|t| self.find(t))
    }

    /// Record `c · letter = d`, merging cosets on conflict.
    fn set(&mut self, c: usize, (g, e): Letter, d: usize, queue: &mut Vec<(usize, usize)>) {
        let table = if e > 0 {
            &mut self.act
        } else {
            &mut self.act_inv
        };
        match table[g][c] {
            None => table[g][c] = Some(d),
            Some(t) => queue.push((t, d)),
        }
        let back = if e > 0 {
            &mut self.act_inv
        } else {
            &mut self.act
        };
        match back[g][d] {
            None => back[g][d] = Some(c),
            Some(t) => queue.push((t, c)),
        }
    }

    fn process_coincidences(&mut self, queue: &mut Vec<(usize, usize)>) {
        while let Some((a, b)) = queue.pop() {
            let (ra, rb) = (self.find(a), self.find(b));
            if ra == rb {
                continue;
            }
            let (keep, drop) = (ra.min(rb), ra.max(rb));
            self.parent[drop] = keep;
            for g in 0..self.ngens {
                if let Some(t) = self.act[g][drop] {
                    match self.act[g][keep] {
                        None => self.act[g][keep] = Some(t),
                        Some(u) => queue.push((t, u)),
                    }
                }
                if let Some(t) = self.act_inv[g][drop] {
                    match self.act_inv[g][keep] {
                        None => self.act_inv[g][keep] = Some(t),
                        Some(u) => queue.push((t, u)),
                    }
                }
            }
        }
    }

    /// Scan one relator at one coset; returns whether anything changed.
    fn scan(&mut self, c: usize, rel: &[Letter], queue: &mut Vec<(usize, usize)>) -> bool {
        // Forward as far as possible.
        let mut fwd = self.find(c);
        let mut i = 0;
        while i < rel.len() {
            match self.get(fwd, rel[i]) {
                Some(next) => {
                    fwd = next;
                    i += 1;
                }
                None => break,
            }
        }
        if i == rel.len() {
            let root = self.find(c);
            if fwd != root {
                queue.push((fwd, root));
                self.process_coincidences(queue);
                return true;
            }
            return false;
        }
        // Backward from the end.
        let mut bwd = self.find(c);
        let mut j = rel.len();
        while j > i + 1 {
            let (g, e) = rel[j - 1];
            match self.get(bwd, (g, -e)) {
                Some(prev) => {
                    bwd = prev;
                    j -= 1;
                }
                None => break,
            }
        }
        if j == i + 1 {
            // Deduction: fwd · rel[i] = bwd.
            self.set(fwd, rel[i], bwd, queue);
            self.process_coincidences(queue);
            return true;
        }
        false
    }

    fn live(&mut self) -> Vec<usize> {
        (0..self.parent.len())
            .filter(|&i| self.find(i) == i)
            .collect()
    }

    fn first_gap(&mut self) -> Option<(usize, Letter)> {
        let live = self.live();
        for c in live {
            for g in 0..self.ngens {
                if self.get(c, (g, 1)).is_none() {
                    return Some((c, (g, 1)));
                }
                if self.get(c, (g, -1)).is_none() {
                    return Some((c, (g, -1)));
                }
            }
        }
        None
    }
}

/// The result of a completed coset enumeration: the multiplication table,
/// the element index of each presentation generator, and a defining word
/// (in the presentation's generators) for every element.
#[derive(Debug, Clone)]
pub struct EnumeratedGroup {
    pub group: FinGroup,
    pub generator_images: Vec<usize>,
    pub element_words: Vec<Vec<Letter>>,
}

/// Attempt to realize a presented group as a table group.
///
/// Returns `None` if the enumeration does not finish within `max_cosets`
/// live cosets (the group may be infinite or merely large).
pub fn todd_coxeter(pres: &GroupPresentation, max_cosets: usize) -> Option<EnumeratedGroup> {
    let ngens = pres.generators.len();
    if ngens == 0 {
        return Some(EnumeratedGroup {
            group: FinGroup::trivial(),
            generator_images: Vec::new(),
            element_words: vec![Vec::new()],
        });
    }
    let mut e = Enumerator::new(ngens);
    let mut queue: Vec<(usize, usize)> = Vec::new();
    loop {
        // Saturate deductions.
        let mut changed = true;
        while changed {
            changed = false;
            let live = e.live();
            for c in live {
                if e.find(c) != c {
                    continue;
                }
                for rel in &pres.relators {
                    if rel.is_empty() {
                        continue;
                    }
                    if e.scan(c, rel, &mut queue) {
                        changed = true;
                    }
                }
            }
        }
        match e.first_gap() {
            None => return assemble(pres, &mut e),
            Some((c, letter)) => {
                if e.live().len() >= max_cosets {
                    return None;
                }
                let new = e.parent.len();
                e.parent.push(new);
                let mut w = e.word[c].clone();
                w.push(letter);
                e.word.push(w);
                for g in 0..ngens {
                    e.act[g].push(None);
                    e.act_inv[g].push(None);
                }
                e.set(c, letter, new, &mut queue);
                e.process_coincidences(&mut queue);
            }
        }
    }
}

fn assemble(pres: &GroupPresentation, e: &mut Enumerator) -> Option<EnumeratedGroup> {
    let live = e.live();
    let rank: std::collections::BTreeMap<usize, usize> =
        live.iter().enumerate().map(|(k, &c)| (c, k)).collect();
    let n = live.len();
    let mut mul = vec![vec![0usize; n]; n];
    for (i, &ci) in live.iter().enumerate() {
        for (j, &cj) in live.iter().enumerate() {
            let mut cur = ci;
            for &letter in &e.word[cj].clone() {
                cur = e.get(cur, letter).expect("complete table");
            }
            mul[i][j] = rank[&e.find(cur)];
        }
    }
    let group = FinGroup::new(mul).ok()?;
    let zero = live[0];
    let generator_images = (0..pres.generators.len())
        .map(|g| {
            let t = e.get(zero, (g, 1)).expect("complete table");
            rank[&t]
        })
        .collect();
    let element_words = live.iter().map(|&c| e.word[c].clone()).collect();
    Some(EnumeratedGroup {
        group,
        generator_images,
        element_words,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::presentation::GroupPresentation;

    #[test]
    fn cyclic_two() {
        let p = GroupPresentation::new(vec!["g".into()], vec![vec![(0, 1), (0, 1)]]);
        let e = todd_coxeter(&p, 50).unwrap(); let (g, images) = (e.group, e.generator_images);
        assert_eq!(g.order(), 2);
        assert_ne!(images[0], 0);
    }

    #[test]
    fn cyclic_six_from_two_generators() {
        // a² = b³ = 1, ab = ba.
        let p = GroupPresentation::new(
            vec!["a".into(), "b".into()],
            vec![
                vec![(0, 1), (0, 1)],
                vec![(1, 1), (1, 1), (1, 1)],
                vec![(0, 1), (1, 1), (0, -1), (1, -1)],
            ],
        );
        let g = todd_coxeter(&p, 100).unwrap().group;
        assert_eq!(g.order(), 6);
    }

    #[test]
    fn s3_presentation() {
        // ⟨s, t | s², t², (st)³⟩
        let p = GroupPresentation::new(
            vec!["s".into(), "t".into()],
            vec![
                vec![(0, 1), (0, 1)],
                vec![(1, 1), (1, 1)],
                vec![(0, 1), (1, 1), (0, 1), (1, 1), (0, 1), (1, 1)],
            ],
        );
        let g = todd_coxeter(&p, 100).unwrap().group;
        assert_eq!(g.order(), 6);
        g.validate().unwrap();
    }

    #[test]
    fn free_group_does_not_complete() {
        let p = GroupPresentation::new(vec!["g".into()], vec![]);
        assert!(todd_coxeter(&p, 30).is_none());
    }

    #[test]
    fn trivial_from_relator() {
        let p = GroupPresentation::new(vec!["g".into()], vec![vec![(0, 1)]]);
        let e = todd_coxeter(&p, 30).unwrap(); let (g, images) = (e.group, e.generator_images);
        assert_eq!(g.order(), 1);
        assert_eq!(images[0], 0);
    }

    #[test]
    fn quaternion_group() {
        // ⟨i, j | i⁴, i²j⁻², ijij⁻¹... ⟩ Q8: i⁴ = 1, j² = i², j⁻¹ij = i⁻¹.
        let p = GroupPresentation::new(
            vec!["i".into(), "j".into()],
            vec![
                vec![(0, 1); 4],
                vec![(0, 1), (0, 1), (1, -1), (1, -1)],
                vec![(1, -1), (0, 1), (1, 1), (0, 1)],
            ],
        );
        let g = todd_coxeter(&p, 200).unwrap().group;
        assert_eq!(g.order(), 8);
    }
}
