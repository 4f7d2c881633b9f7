//! The algebra of monotone maps between finite ordinals.
//!
//! Every simplicial operator (iterated faces and degeneracies) is a
//! monotone map `[n] -> [m]`, and every such map factors uniquely as a
//! surjection followed by an injection.  Working with the maps directly —
//! instead of rewriting words of `dᵢ`/`sⱼ` symbols — makes normal forms and
//! the simplicial identities a matter of composing functions.

use serde::{Deserialize, Serialize};

/// A monotone map `[n] -> [m]`, stored by its values; `vals.len() = n + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monotone {
    vals: Vec<usize>,
    target: usize,
}

impl Monotone {
    pub fn new(vals: Vec<usize>, target: usize) -> Self {
        assert!(!vals.is_empty(), "domain [n] has at least one element");
        assert!(vals.windows(2).all(|w| w[0] <= w[1]), "not monotone");
        assert!(*vals.last().unwrap() <= target);
        Monotone { vals, target }
    }

    pub fn identity(n: usize) -> Self {
        Monotone {
            vals: (0..=n).collect(),
            target: n,
        }
    }

    /// The coface `δᵢ : [n-1] -> [n]` omitting `i`.
    pub fn coface(i: usize, n: usize) -> Self {
        assert!(n >= 1 && i <= n);
        Monotone {
            vals: (0..n).map(|v| if v < i { v } else { v + 1 }).collect(),
            target: n,
        }
    }

    /// The codegeneracy `σᵢ : [n+1] -> [n]` repeating `i`.
    pub fn codegeneracy(i: usize, n: usize) -> Self {
        assert!(i <= n);
        Monotone {
            vals: (0..=n + 1).map(|v| if v <= i { v } else { v - 1 }).collect(),
            target: n,
        }
    }

    /// Domain rank `n` (the map is `[n] -> [m]`).
    pub fn source_rank(&self) -> usize {
        self.vals.len() - 1
    }

    pub fn target_rank(&self) -> usize {
        self.target
    }

    pub fn apply(&self, v: usize) -> usize {
        self.vals[v]
    }

    pub fn values(&self) -> &[usize] {
        &self.vals
    }

    pub fn is_identity(&self) -> bool {
        self.source_rank() == self.target && self.vals.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn is_surjective(&self) -> bool {
        // Monotone and onto [target]: hits 0, hits target, no jumps by 2.
        self.vals[0] == 0
            && *self.vals.last().unwrap() == self.target
            && self.vals.windows(2).all(|w| w[1] - w[0] <= 1)
    }

    pub fn is_injective(&self) -> bool {
        self.vals.windows(2).all(|w| w[0] < w[1])
    }

    /// `other ∘ self` (self first): `[n] -> [m] -> [k]`.
    pub fn then(&self, other: &Monotone) -> Monotone {
        assert_eq!(self.target, other.source_rank(), "composition mismatch");
        Monotone {
            vals: self.vals.iter().map(|&v| other.vals[v]).collect(),
            target: other.target,
        }
    }

    /// Unique epi-mono factorization `self = mono ∘ epi`.
    pub fn epi_mono(&self) -> (Monotone, Monotone) {
        let mut image: Vec<usize> = self.vals.clone();
        image.dedup();
        let rank = image.len() - 1;
        let epi_vals = self
            .vals
            .iter()
            .map(|&v| image.iter().position(|&w| w == v).unwrap())
            .collect();
        (
            Monotone {
                vals: epi_vals,
                target: rank,
            },
            Monotone {
                vals: image,
                target: self.target,
            },
        )
    }

    /// Values of `[m]` omitted by an injection, descending.
    pub fn omitted_desc(&self) -> Vec<usize> {
        assert!(self.is_injective());
        (0..=self.target)
            .rev()
            .filter(|v| !self.vals.contains(v))
            .collect()
    }

    /// For a surjection, the positions `i` with `f(i) = f(i+1)` — the
    /// collapsed steps, i.e. the degeneracy indices in ascending order.
    pub fn collapsed_steps(&self) -> Vec<usize> {
        assert!(self.is_surjective());
        (0..self.source_rank())
            .filter(|&i| self.vals[i] == self.vals[i + 1])
            .collect()
    }

    /// The surjection `[n] ->> [n - steps.len()]` collapsing exactly the
    /// given ascending step positions.
    pub fn collapsing(steps: &[usize], n: usize) -> Monotone {
        assert!(steps.windows(2).all(|w| w[0] < w[1]));
        let mut vals = Vec::with_capacity(n + 1);
        let mut cur = 0usize;
        for i in 0..=n {
            vals.push(cur);
            if i < n && !steps.contains(&i) {
                cur += 1;
            }
        }
        Monotone {
            vals,
            target: n - steps.len(),
        }
    }

    /// All surjections `[n] ->> [k]`, in lexicographic order of their
    /// collapsed-step sets.
    pub fn surjections(n: usize, k: usize) -> Vec<Monotone> {
        assert!(k <= n);
        subsets_of_size(n, n - k)
            .into_iter()
            .map(|steps| Monotone::collapsing(&steps, n))
            .collect()
    }
}

/// All ascending `size`-element subsets of `{0..n-1}`, lexicographic.
pub fn subsets_of_size(n: usize, size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(size);
    fn rec(n: usize, size: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            if n - v < size - cur.len() {
                break;
            }
            cur.push(v);
            rec(n, size, v + 1, cur, out);
            cur.pop();
        }
    }
    rec(n, size, 0, &mut cur, &mut out);
    out
}

/// A degeneracy word in Eilenberg–Zilber normal form: indices of
/// `s_{i₁} … s_{i_k}` with `i₁ > … > i_k`.  The empty word marks a
/// nondegenerate reference.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize, Default)]
pub struct DegeneracyWord(pub Vec<usize>);

impl DegeneracyWord {
    pub fn empty() -> Self {
        DegeneracyWord(Vec::new())
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Check strict decrease and index bounds over a core of dimension
    /// `core_dim`.
    pub fn is_valid_over(&self, core_dim: usize) -> bool {
        if !self.0.windows(2).all(|w| w[0] > w[1]) {
            return false;
        }
        // Innermost sᵢ acts on dimension core_dim, the next one higher, …
        self.0
            .iter()
            .rev()
            .enumerate()
            .all(|(pos, &i)| i <= core_dim + pos)
    }

    /// The surjection `[core_dim + len] ->> [core_dim]` this word encodes.
    pub fn to_epi(&self, core_dim: usize) -> Monotone {
        debug_assert!(self.is_valid_over(core_dim));
        let mut epi = Monotone::identity(core_dim);
        // Innermost degeneracy first.
        for (pos, &i) in self.0.iter().rev().enumerate() {
            let cod = Monotone::codegeneracy(i, core_dim + pos);
            epi = cod.then(&epi);
        }
        epi
    }

    /// Recover the word from a surjection.
    ///
    /// A surjection collapsing steps `p₁ < … < p_r` factors as
    /// `σ_{p₁} ∘ … ∘ σ_{p_r}` (rightmost applied first), which is the
    /// operator word `s_{p_r} … s_{p₁}` — the steps reversed.
    pub fn from_epi(epi: &Monotone) -> Self {
        assert!(epi.is_surjective());
        let mut word = epi.collapsed_steps();
        word.reverse();
        DegeneracyWord(word)
    }
}
