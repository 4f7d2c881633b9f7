//! Group presentations and the tiered word-problem pipeline.
//!
//! Presentations come out of the edge-path construction.  Isomorphism of
//! presented groups is undecidable, so comparisons run through a stack of
//! partial engines: free reduction, bounded coset enumeration, and
//! abelianization / homomorphism-count invariants.  A mismatch of
//! invariants certifies `fails`; full certification needs a completed
//! enumeration.

use serde::{Deserialize, Serialize};

use crate::arith::{AbGroup, IntMat, Subquotient};

use super::fin_group::FinGroup;
use super::todd_coxeter::todd_coxeter;

/// One letter of a word: (generator index, exponent ±1).
pub type Letter = (usize, i32);

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupPresentation {
    pub generators: Vec<String>,
    pub relators: Vec<Vec<Letter>>,
}

/// What we managed to learn about a presented group.
#[derive(Debug, Clone)]
pub enum WordEngine {
    /// No relators: free reduction decides everything.
    Free,
    /// Coset enumeration completed: the group is a known table group.
    Finite(super::todd_coxeter::EnumeratedGroup),
    /// Neither engine applies within budget.
    Inconclusive,
}

impl GroupPresentation {
    pub fn new(generators: Vec<String>, relators: Vec<Vec<Letter>>) -> Self {
        let p = GroupPresentation {
            generators,
            relators,
        };
        p.validate().expect("well-formed presentation");
        p
    }

    pub fn trivial() -> Self {
        GroupPresentation {
            generators: Vec::new(),
            relators: Vec::new(),
        }
    }

    pub fn validate(&self) -> Result<(), String> {
        for rel in &self.relators {
            for &(g, e) in rel {
                if g >= self.generators.len() {
                    return Err(format!("relator uses undeclared generator {g}"));
                }
                if e != 1 && e != -1 {
                    return Err("letters carry exponent ±1".into());
                }
            }
        }
        Ok(())
    }

    pub fn free_reduce(word: &[Letter]) -> Vec<Letter> {
        let mut out: Vec<Letter> = Vec::new();
        for &l in word {
            if let Some(&last) = out.last() {
                if last.0 == l.0 && last.1 == -l.1 {
                    out.pop();
                    continue;
                }
            }
            out.push(l);
        }
        out
    }

    fn cyclic_reduce(word: &[Letter]) -> Vec<Letter> {
        let mut w = Self::free_reduce(word);
        while w.len() >= 2 {
            let (first, last) = (w[0], *w.last().unwrap());
            if first.0 == last.0 && first.1 == -last.1 {
                w.remove(0);
                w.pop();
                w = Self::free_reduce(&w);
            } else {
                break;
            }
        }
        w
    }

    /// Light Tietze cleanup: reduce relators, drop trivial ones, remove
    /// generators forced to be the identity by a one-letter relator.
    pub fn simplified(&self) -> GroupPresentation {
        let mut relators: Vec<Vec<Letter>> = self
            .relators
            .iter()
            .map(|r| Self::cyclic_reduce(r))
            .filter(|r| !r.is_empty())
            .collect();
        relators.sort();
        relators.dedup();

        // Generators killed by a length-1 relator vanish everywhere.
        let mut dead = vec![false; self.generators.len()];
        let mut changed = true;
        while changed {
            changed = false;
            for r in &relators {
                if r.len() == 1 && !dead[r[0].0] {
                    dead[r[0].0] = true;
                    changed = true;
                }
            }
            relators = relators
                .into_iter()
                .map(|r| {
                    Self::cyclic_reduce(
                        &r.into_iter().filter(|&(g, _)| !dead[g]).collect::<Vec<_>>(),
                    )
                })
                .filter(|r| !r.is_empty())
                .collect();
            relators.sort();
            relators.dedup();
        }
        let kept: Vec<usize> = (0..self.generators.len()).filter(|&g| !dead[g]).collect();
        let renum: std::collections::BTreeMap<usize, usize> =
            kept.iter().enumerate().map(|(new, &old)| (old, new)).collect();
        GroupPresentation {
            generators: kept.iter().map(|&g| self.generators[g].clone()).collect(),
            relators: relators
                .into_iter()
                .map(|r| r.into_iter().map(|(g, e)| (renum[&g], e)).collect())
                .collect(),
        }
    }

    /// Invariant factors of the abelianization.
    pub fn abelianization(&self) -> AbGroup {
        let n = self.generators.len();
        let mut cols: Vec<Vec<i128>> = Vec::new();
        for rel in &self.relators {
            let mut col = vec![0i128; n];
            for &(g, e) in rel {
                col[g] += e as i128;
            }
            cols.push(col);
        }
        let rel_mat = if cols.is_empty() {
            IntMat::zero(n, 0)
        } else {
            IntMat::from_rows(
                (0..n)
                    .map(|i| cols.iter().map(|c| c[i]).collect())
                    .collect::<Vec<_>>(),
            )
        };
        Subquotient::new(vec![0; n], None, &rel_mat).group().clone()
    }

    /// Number of homomorphisms into a finite table group.
    pub fn count_homs(&self, target: &FinGroup) -> u64 {
        let mut count = 0u64;
        let k = self.generators.len();
        let n = target.order();
        let mut images = vec![0usize; k];
        loop {
            if self
                .relators
                .iter()
                .all(|r| self.eval_in(target, &images, r) == 0)
            {
                count += 1;
            }
            // Odometer.
            let mut pos = 0;
            loop {
                if pos == k {
                    return count;
                }
                images[pos] += 1;
                if images[pos] < n {
                    break;
                }
                images[pos] = 0;
                pos += 1;
            }
        }
    }

    /// Evaluate a word under generator images.
    pub fn eval_in(&self, target: &FinGroup, images: &[usize], word: &[Letter]) -> usize {
        let mut acc = 0usize;
        for &(g, e) in word {
            let x = if e > 0 {
                images[g]
            } else {
                target.inverse(images[g])
            };
            acc = target.op(acc, x);
        }
        acc
    }

    /// Run the engine stack.
    pub fn word_engine(&self, max_cosets: usize) -> WordEngine {
        let simplified = self.simplified();
        if simplified.relators.is_empty() && simplified.generators.len() == self.generators.len() {
            return WordEngine::Free;
        }
        match todd_coxeter(self, max_cosets) {
            Some(e) => WordEngine::Finite(e),
            None => {
                if self.relators.is_empty() {
                    WordEngine::Free
                } else {
                    WordEngine::Inconclusive
                }
            }
        }
    }

    /// Compare invariants of two presentations against a panel of small
    /// groups.  `false` certifies the groups are not isomorphic; `true`
    /// means the panel could not separate them.
    pub fn invariants_agree(&self, other: &GroupPresentation) -> bool {
        if self.abelianization() != other.abelianization() {
            return false;
        }
        for target in Self::hom_panel() {
            if self.count_homs(&target) != other.count_homs(&target) {
                return false;
            }
        }
        true
    }

    /// The default detection panel: small groups up to order 6.
    pub fn hom_panel() -> Vec<FinGroup> {
        vec![
            FinGroup::cyclic(2),
            FinGroup::cyclic(3),
            FinGroup::cyclic(4),
            FinGroup::cyclic(5),
            FinGroup::klein_four(),
            FinGroup::symmetric_3(),
        ]
    }
}
