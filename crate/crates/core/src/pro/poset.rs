//! Finite cofinite directed posets.

use serde::{Deserialize, Serialize};

/// A finite directed poset.  Elements are `0..len`; `leq[a][b]` means
/// `a ≤ b`.  Every finite poset is trivially cofinite; directedness gives
/// a greatest element.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CofinitePoset {
    leq: Vec<Vec<bool>>,
}

impl CofinitePoset {
    pub fn new(leq: Vec<Vec<bool>>) -> Result<Self, String> {
        let p = CofinitePoset { leq };
        p.validate()?;
        Ok(p)
    }

    /// A single-element index.
    pub fn point() -> Self {
        CofinitePoset {
            leq: vec![vec![true]],
        }
    }

    /// The chain `0 < 1 < … < n-1` (higher index = deeper stage).
    pub fn chain(n: usize) -> Self {
        assert!(n >= 1);
        CofinitePoset {
            leq: (0..n).map(|a| (0..n).map(|b| a <= b).collect()).collect(),
        }
    }

    /// Componentwise order on pairs, encoded as `a * other.len() + b`.
    pub fn product(&self, other: &CofinitePoset) -> CofinitePoset {
        let (n, m) = (self.len(), other.len());
        let leq = (0..n * m)
            .map(|x| {
                let (a1, b1) = (x / m, x % m);
                (0..n * m)
                    .map(|y| {
                        let (a2, b2) = (y / m, y % m);
                        self.leq(a1, a2) && other.leq(b1, b2)
                    })
                    .collect()
            })
            .collect();
        CofinitePoset { leq }
    }

    pub fn len(&self) -> usize {
        self.leq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.leq.is_empty()
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a][b]
    }

    pub fn validate(&self) -> Result<(), String> {
        let n = self.len();
        if n == 0 {
            return Err("index posets are nonempty".into());
        }
        for a in 0..n {
            if self.leq[a].len() != n {
                return Err("order table is not square".into());
            }
            if !self.leq(a, a) {
                return Err("order is not reflexive".into());
            }
        }
        for a in 0..n {
            for b in 0..n {
                if a != b && self.leq(a, b) && self.leq(b, a) {
                    return Err(format!("antisymmetry fails on {a}, {b}"));
                }
                for c in 0..n {
                    if self.leq(a, b) && self.leq(b, c) && !self.leq(a, c) {
                        return Err(format!("transitivity fails on {a} ≤ {b} ≤ {c}"));
                    }
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                if !(0..n).any(|c| self.leq(a, c) && self.leq(b, c)) {
                    return Err(format!("no upper bound for {a}, {b}"));
                }
            }
        }
        Ok(())
    }

    /// Length of the longest strictly descending chain from each element.
    pub fn heights(&self) -> Vec<usize> {
        let n = self.len();
        let mut h = vec![0usize; n];
        // Process in a topological order (by number of predecessors).
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&a| (0..n).filter(|&b| self.leq(b, a)).count());
        for &a in &order {
            for b in 0..n {
                if b != a && self.leq(b, a) {
                    h[a] = h[a].max(h[b] + 1);
                }
            }
        }
        h
    }

    pub fn height(&self, a: usize) -> usize {
        self.heights()[a]
    }

    /// The greatest element (exists: the poset is finite and directed).
    pub fn top(&self) -> usize {
        (0..self.len())
            .find(|&t| (0..self.len()).all(|s| self.leq(s, t)))
            .expect("a finite directed poset has a greatest element")
    }

    /// Elements sorted by (height, id).
    pub fn by_height(&self) -> Vec<usize> {
        let h = self.heights();
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by_key(|&a| (h[a], a));
        order
    }

    /// The minimal element (by height, then id) satisfying a predicate.
    pub fn minimal_satisfying(&self, pred: impl Fn(usize) -> bool) -> Option<usize> {
        self.by_height().into_iter().find(|&a| pred(a))
    }

    /// Elements of a strictly descending maximal chain from the top,
    /// greedily following the highest predecessor (ties by id).  Any chain
    /// containing the top element is cofinal.
    pub fn greedy_chain(&self) -> Vec<usize> {
        let h = self.heights();
        let mut chain = vec![self.top()];
        loop {
            let cur = *chain.last().unwrap();
            let next = (0..self.len())
                .filter(|&s| s != cur && self.leq(s, cur))
                .max_by_key(|&s| (h[s], std::cmp::Reverse(s)));
            match next {
                Some(s) => chain.push(s),
                None => break,
            }
        }
        chain
    }

    /// Restriction to a subset (kept in the given order).
    pub fn restrict(&self, keep: &[usize]) -> CofinitePoset {
        CofinitePoset {
            leq: keep
                .iter()
                .map(|&a| keep.iter().map(|&b| self.leq(a, b)).collect())
                .collect(),
        }
    }

    /// Is the subset directed as a subposet?
    pub fn subset_directed(&self, keep: &[usize]) -> bool {
        keep.iter().all(|&a| {
            keep.iter()
                .all(|&b| keep.iter().any(|&c| self.leq(a, c) && self.leq(b, c)))
        })
    }

    /// Does every element lie below some element of the subset?
    pub fn subset_cofinal(&self, keep: &[usize]) -> bool {
        (0..self.len()).all(|s| keep.iter().any(|&t| self.leq(s, t)))
    }

    /// All related pairs `(t, s)` with `t ≥ s` and `t ≠ s`.
    pub fn strict_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for t in 0..self.len() {
            for s in 0..self.len() {
                if t != s && self.leq(s, t) {
                    out.push((t, s));
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_shape() {
        let c = CofinitePoset::chain(4);
        c.validate().unwrap();
        assert_eq!(c.heights(), vec![0, 1, 2, 3]);
        assert_eq!(c.top(), 3);
        assert_eq!(c.greedy_chain(), vec![3, 2, 1, 0]);
    }

    #[test]
    fn product_poset() {
        let p = CofinitePoset::chain(2).product(&CofinitePoset::chain(3));
        p.validate().unwrap();
        assert_eq!(p.len(), 6);
        assert_eq!(p.top(), 5);
        // Heights are coordinate sums.
        assert_eq!(p.heights(), vec![0, 1, 2, 1, 2, 3]);
    }

    #[test]
    fn cofinality_of_subsets() {
        let c = CofinitePoset::chain(2);
        // The top alone is cofinal; the bottom alone is not.
        assert!(c.subset_cofinal(&[1]));
        assert!(!c.subset_cofinal(&[0]));
        assert!(c.subset_cofinal(&[0, 1]));
    }

    #[test]
    fn rejects_non_directed() {
        // Two incomparable elements with no upper bound.
        let p = CofinitePoset::new(vec![vec![true, false], vec![false, true]]);
        assert!(p.is_err());
    }
}
