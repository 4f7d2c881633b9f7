//! Finite groups as multiplication tables.

use serde::{Deserialize, Serialize};

/// A finite group on elements `0..n`, with `0` the identity.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FinGroup {
    /// `mul[a][b] = a * b`.
    pub mul: Vec<Vec<usize>>,
}

impl FinGroup {
    pub fn new(mul: Vec<Vec<usize>>) -> Result<Self, String> {
        let g = FinGroup { mul };
        g.validate()?;
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.mul.len()
    }

    pub fn op(&self, a: usize, b: usize) -> usize {
        self.mul[a][b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        (0..self.order())
            .find(|&b| self.op(a, b) == 0)
            .expect("group elements are invertible")
    }

    pub fn validate(&self) -> Result<(), String> {
        let n = self.order();
        if n == 0 {
            return Err("a group has at least the identity".into());
        }
        for (a, row) in self.mul.iter().enumerate() {
            if row.len() != n {
                return Err("multiplication table is not square".into());
            }
            if self.op(a, 0) != a || self.op(0, a) != a {
                return Err("0 is not an identity".into());
            }
            if !(0..n).any(|b| self.op(a, b) == 0) {
                return Err(format!("element {a} has no inverse"));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if self.op(self.op(a, b), c) != self.op(a, self.op(b, c)) {
                        return Err("multiplication is not associative".into());
                    }
                }
            }
        }
        Ok(())
    }

    pub fn trivial() -> Self {
        FinGroup {
            mul: vec![vec![0]],
        }
    }

    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1);
        FinGroup {
            mul: (0..n)
                .map(|a| (0..n).map(|b| (a + b) % n).collect())
                .collect(),
        }
    }

    pub fn klein_four() -> Self {
        // Elements as bit pairs: xor multiplication.
        FinGroup {
            mul: (0..4).map(|a| (0..4).map(|b| a ^ b).collect()).collect(),
        }
    }

    /// S₃ as permutations of {0,1,2}, numbered: e, (01), (02), (12), (012), (021).
    pub fn symmetric_3() -> Self {
        let perms: Vec<[usize; 3]> = vec![
            [0, 1, 2],
            [1, 0, 2],
            [2, 1, 0],
            [0, 2, 1],
            [1, 2, 0],
            [2, 0, 1],
        ];
        let compose = |p: &[usize; 3], q: &[usize; 3]| -> [usize; 3] {
            // p after q
            [p[q[0]], p[q[1]], p[q[2]]]
        };
        let mul = (0..6)
            .map(|a| {
                (0..6)
                    .map(|b| {
                        let c = compose(&perms[a], &perms[b]);
                        perms.iter().position(|p| *p == c).unwrap()
                    })
                    .collect()
            })
            .collect();
        FinGroup { mul }
    }

    pub fn direct_product(&self, other: &FinGroup) -> FinGroup {
        let (n, m) = (self.order(), other.order());
        let idx = |a: usize, b: usize| a * m + b;
        let mul = (0..n * m)
            .map(|x| {
                let (a1, b1) = (x / m, x % m);
                (0..n * m)
                    .map(|y| {
                        let (a2, b2) = (y / m, y % m);
                        idx(self.op(a1, a2), other.op(b1, b2))
                    })
                    .collect()
            })
            .collect();
        FinGroup { mul }
    }

    /// A small generating set, greedily extended.
    pub fn generating_set(&self) -> Vec<usize> {
        let n = self.order();
        let mut gens = Vec::new();
        let mut generated = self.closure(&gens);
        for a in 1..n {
            if generated.len() == n {
                break;
            }
            if !generated.contains(&a) {
                gens.push(a);
                generated = self.closure(&gens);
            }
        }
        gens
    }

    fn closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order()];
        seen[0] = true;
        let mut stack = vec![0usize];
        while let Some(x) = stack.pop() {
            for &g in gens {
                for y in [self.op(x, g), self.op(g, x)] {
                    if !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
        }
        (0..self.order()).filter(|&i| seen[i]).collect()
    }

    /// All homomorphisms `self -> target`, as full value tables.
    pub fn homs_to(&self, target: &FinGroup) -> Vec<GroupHom> {
        let gens = self.generating_set();
        let mut out = Vec::new();
        let mut images = vec![0usize; gens.len()];
        self.hom_search(target, &gens, 0, &mut images, &mut out);
        out
    }

    fn hom_search(
        &self,
        target: &FinGroup,
        gens: &[usize],
        pos: usize,
        images: &mut Vec<usize>,
        out: &mut Vec<GroupHom>,
    ) {
        if pos == gens.len() {
            if let Some(h) = self.extend_on_generators(target, gens, images) {
                out.push(h);
            }
            return;
        }
        for img in 0..target.order() {
            images[pos] = img;
            self.hom_search(target, gens, pos + 1, images, out);
        }
    }

    /// Extend generator images to a full homomorphism table by closing
    /// products; `None` when inconsistent.
    pub fn extend_on_generators(
        &self,
        target: &FinGroup,
        gens: &[usize],
        images: &[usize],
    ) -> Option<GroupHom> {
        let n = self.order();
        let mut table = vec![usize::MAX; n];
        table[0] = 0;
        let mut frontier = vec![0usize];
        while let Some(x) = frontier.pop() {
            for (&g, &img) in gens.iter().zip(images.iter()) {
                let y = self.op(x, g);
                let fy = target.op(table[x], img);
                if table[y] == usize::MAX {
                    table[y] = fy;
                    frontier.push(y);
                } else if table[y] != fy {
                    return None;
                }
            }
        }
        if table.iter().any(|&v| v == usize::MAX) {
            // Generators do not generate; reject rather than guess.
            return None;
        }
        // Full multiplicativity check.
        for a in 0..n {
            for b in 0..n {
                if table[self.op(a, b)] != target.op(table[a], table[b]) {
                    return None;
                }
            }
        }
        Some(GroupHom { table })
    }

    pub fn identity_hom(&self) -> GroupHom {
        GroupHom {
            table: (0..self.order()).collect(),
        }
    }
}

/// A homomorphism between table groups, as a full value table.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroupHom {
    pub table: Vec<usize>,
}

impl GroupHom {
    pub fn apply(&self, a: usize) -> usize {
        self.table[a]
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &GroupHom) -> GroupHom {
        GroupHom {
            table: self.table.iter().map(|&a| other.table[a]).collect(),
        }
    }

    pub fn is_bijective(&self, target_order: usize) -> bool {
        if self.table.len() != target_order {
            return false;
        }
        let mut seen = vec![false; target_order];
        for &v in &self.table {
            if seen[v] {
                return false;
            }
            seen[v] = true;
        }
        true
    }

    pub fn validate(&self, source: &FinGroup, target: &FinGroup) -> Result<(), String> {
        if self.table.len() != source.order() {
            return Err("hom table length mismatch".into());
        }
        if self.table[0] != 0 {
            return Err("hom does not preserve the identity".into());
        }
        for a in 0..source.order() {
            if self.table[a] >= target.order() {
                return Err("hom value out of range".into());
            }
            for b in 0..source.order() {
                if self.table[source.op(a, b)] != target.op(self.table[a], self.table[b]) {
                    return Err("hom is not multiplicative".into());
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_groups_validate() {
        FinGroup::trivial().validate().unwrap();
        FinGroup::cyclic(5).validate().unwrap();
        FinGroup::klein_four().validate().unwrap();
        FinGroup::symmetric_3().validate().unwrap();
        FinGroup::cyclic(2)
            .direct_product(&FinGroup::cyclic(3))
            .validate()
            .unwrap();
    }

    #[test]
    fn hom_counts() {
        let z2 = FinGroup::cyclic(2);
        let z4 = FinGroup::cyclic(4);
        let s3 = FinGroup::symmetric_3();
        // Hom(Z/2, Z/4) = 2 (0 and the element of order 2).
        assert_eq!(z2.homs_to(&z4).len(), 2);
        // Hom(Z/4, Z/2) = 2.
        assert_eq!(z4.homs_to(&z2).len(), 2);
        // Hom(Z/2, S3) = 1 + #involutions = 4.
        assert_eq!(z2.homs_to(&s3).len(), 4);
        for h in z2.homs_to(&s3) {
            h.validate(&z2, &s3).unwrap();
        }
    }

    #[test]
    fn s3_is_not_abelian() {
        let s3 = FinGroup::symmetric_3();
        assert!((0..6).any(|a| (0..6).any(|b| s3.op(a, b) != s3.op(b, a))));
        assert_eq!(s3.generating_set().len(), 2);
    }
}
