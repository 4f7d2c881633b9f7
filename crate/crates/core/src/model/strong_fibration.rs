//! Strong fibration recognition, dual-routed.

use crate::budget::Budget;
use crate::lifting::{has_rlp, NThreshold};
use crate::pro::{LevelMap, SSetCat};
use crate::verdict::Verdict;

use super::matching::relative_matching_map;

/// A monotone degree assignment over an index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NFunction {
    pub values: Vec<i64>,
}

impl NFunction {
    pub fn new(
        index: &crate::pro::CofinitePoset,
        values: Vec<i64>,
    ) -> Result<Self, String> {
        if values.len() != index.len() {
            return Err("one degree per index element required".into());
        }
        for (t, s) in index.strict_pairs() {
            if values[t] < values[s] {
                return Err(format!("degree assignment not monotone on ({t}, {s})"));
            }
        }
        Ok(NFunction { values })
    }

    /// The height function, the minimal strictly increasing assignment.
    pub fn heights(index: &crate::pro::CofinitePoset) -> Self {
        NFunction {
            values: index.heights().iter().map(|&h| h as i64).collect(),
        }
    }

    pub fn is_strictly_increasing(&self, index: &crate::pro::CofinitePoset) -> bool {
        index
            .strict_pairs()
            .into_iter()
            .all(|(t, s)| self.values[t] > self.values[s])
    }
}

/// Definition route: every relative matching map has the bounded right
/// lifting property against `J_{n(t)}`.
pub fn is_strong_fibration(
    f: &LevelMap<SSetCat>,
    n: &NFunction,
    max_dim: usize,
    budget: &Budget,
) -> Verdict {
    if n.values.len() != f.source.index.len() {
        return Verdict::fails("degree assignment does not match the index".to_string());
    }
    for t in 0..f.source.index.len() {
        let rm = match relative_matching_map(f, t, budget) {
            Ok(rm) => rm,
            Err(e) => return Verdict::unknown(format!("matching map at {t}: {e}")),
        };
        let report = match has_rlp(&rm.map, NThreshold::Finite(n.values[t]), max_dim, budget) {
            Ok(r) => r,
            Err(e) => return Verdict::unknown(format!("lifting search at {t}: {e}")),
        };
        match report.verdict {
            Verdict::Holds => {}
            Verdict::Fails { witness } => {
                return Verdict::fails(format!("matching map at {t}: {witness}"))
            }
            v @ Verdict::Unknown { .. } => return v,
        }
    }
    Verdict::Holds
}

/// Recognition route: the relative matching maps need only fill horns,
/// while each component is a co-n(t)-equivalence (surrogate: the bounded
/// checks that are available on truncated data).
pub fn is_strong_fibration_recognition(
    f: &LevelMap<SSetCat>,
    n: &NFunction,
    max_dim: usize,
    budget: &Budget,
) -> Verdict {
    let mut verdict = Verdict::Holds;
    for t in 0..f.source.index.len() {
        let rm = match relative_matching_map(f, t, budget) {
            Ok(rm) => rm,
            Err(e) => return Verdict::unknown(format!("matching map at {t}: {e}")),
        };
        let report = match has_rlp(&rm.map, NThreshold::Infinity, max_dim, budget) {
            Ok(r) => r,
            Err(e) => return Verdict::unknown(format!("lifting search at {t}: {e}")),
        };
        match report.verdict {
            Verdict::Holds => {}
            Verdict::Fails { witness } => {
                return Verdict::fails(format!("horn filling at {t}: {witness}"))
            }
            v @ Verdict::Unknown { .. } => return v,
        }
        verdict = verdict.and(co_n_equivalence_surrogate(
            f.component(t),
            n.values[t],
            budget,
        ));
        if verdict.is_fails() {
            return verdict;
        }
    }
    verdict
}

/// Bounded co-n-equivalence surrogate for one component: isomorphisms
/// above `n` and injectivity at `n`, through the certifiable stack.
/// π₀ and π₁ clauses are exact; higher clauses need asphericity or
/// simple connectivity.
fn co_n_equivalence_surrogate(
    f: &crate::simplicial::SSetMap,
    n: i64,
    budget: &Budget,
) -> Verdict {
    use crate::simplicial::equivalence::{certified_aspherical, certified_simply_connected};
    if f.is_isomorphism() {
        return Verdict::Holds;
    }
    let mut verdict = Verdict::Holds;
    // π₀: isomorphism required above degree 0, injectivity at 0.
    let map = crate::simplicial::pi0::pi0_map(f);
    let tgt = crate::simplicial::pi0::pi0(&f.target).count;
    let mut seen = vec![false; tgt];
    let inj = map.iter().all(|&c| {
        if seen[c] {
            false
        } else {
            seen[c] = true;
            true
        }
    });
    let surj = seen.iter().all(|&b| b);
    if n < 0 && !(inj && surj) {
        return Verdict::fails("π₀ must be bijective above the threshold");
    }
    if n == 0 && !inj {
        return Verdict::fails("π₀ must be injective at the threshold");
    }
    // π₁ and above: aspherical levels settle everything ≥ 2 and reduce
    // degree 1 to the finite pipeline; otherwise report the gap.
    let aspherical =
        certified_aspherical(&f.source, budget) && certified_aspherical(&f.target, budget);
    if n >= 1 && aspherical {
        return verdict;
    }
    let simply_connected = matches!(
        (
            certified_simply_connected(&f.source),
            certified_simply_connected(&f.target),
        ),
        (Some(true), Some(true))
    );
    if simply_connected && n >= 1 {
        // Homology isomorphisms above n in the reliable range.
        let d_bound = f.source.dim_bound().min(f.target.dim_bound());
        for i in (n.max(1) as usize + 1)..d_bound {
            let hs = crate::simplicial::homology::homology_subquotient(&f.source, i);
            let ht = crate::simplicial::homology::homology_subquotient(&f.target, i);
            let chain = crate::simplicial::homology::chain_map_matrix(f, i);
            match hs.induced_map(&ht, &chain) {
                Some(t) => {
                    if !crate::arith::based_map_is_iso(&t, &hs.based_moduli(), &ht.based_moduli())
                    {
                        return Verdict::fails(format!("H_{i} is not an isomorphism"));
                    }
                }
                None => return Verdict::unknown("chain map does not preserve cycles"),
            }
        }
        verdict = verdict.and(Verdict::unknown(format!(
            "co-{n}-equivalence verified through degree {}",
            d_bound.saturating_sub(1)
        )));
        return verdict;
    }
    verdict.and(Verdict::unknown(
        "co-n-equivalence surrogate needs asphericity or simple connectivity",
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::FinGroup;
    use crate::pro::ProObject;
    use crate::simplicial::nerve::nerve_of_group;
    use crate::simplicial::TruncatedSSet;

    fn budget() -> Budget {
        Budget::new(200_000_000)
    }

    #[test]
    fn identity_is_a_strong_fibration() {
        let pt = TruncatedSSet::standard_simplex(0, 1).unwrap();
        let c: ProObject<SSetCat> = ProObject::constant(pt);
        let id = LevelMap::identity(&c);
        let n = NFunction::heights(&c.index);
        assert!(is_strong_fibration(&id, &n, 2, &budget()).holds());
    }

    #[test]
    fn nerve_over_point_is_a_strong_fibration() {
        let nerve = nerve_of_group(&FinGroup::cyclic(2), 2, 10_000).unwrap().sset;
        let pt = TruncatedSSet::standard_simplex(0, 2).unwrap();
        let p = crate::simplicial::enumerate_maps(&nerve, &pt, &budget())
            .unwrap()
            .pop()
            .unwrap();
        let src: ProObject<SSetCat> = ProObject::constant(nerve);
        let tgt: ProObject<SSetCat> = ProObject::constant(pt);
        let f = LevelMap::new(src, tgt, vec![p]).unwrap();
        let n = NFunction {
            values: vec![5],
        };
        // Horns fill in a nerve; boundaries above a large threshold are
        // not requested.
        assert!(is_strong_fibration(&f, &n, 2, &budget()).holds());
        // The recognition route agrees.
        let v = is_strong_fibration_recognition(&f, &n, 2, &budget());
        assert!(!v.is_fails(), "{v}");
    }

    #[test]
    fn two_points_over_point_fail() {
        let (b1, _) = crate::simplicial::boundary(1, 1).unwrap();
        let pt = TruncatedSSet::standard_simplex(0, 1).unwrap();
        let fold = crate::simplicial::enumerate_maps(&b1, &pt, &budget())
            .unwrap()
            .pop()
            .unwrap();
        let src: ProObject<SSetCat> = ProObject::constant(b1);
        let tgt: ProObject<SSetCat> = ProObject::constant(pt);
        let f = LevelMap::new(src, tgt, vec![fold]).unwrap();
        let n = NFunction {
            values: vec![-1],
        };
        // The matching map at height 0 is the fold itself, and the
        // dimension-1 boundary square has no filler.
        assert!(is_strong_fibration(&f, &n, 2, &budget()).is_fails());
    }
}
