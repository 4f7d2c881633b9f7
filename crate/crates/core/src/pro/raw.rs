//! Raw pro-morphisms: representative families with compatibility
//! witnesses, and the calculus of composing and comparing them.

use super::fiber::FiberCategory;
use super::object::{LevelMap, ProObject};

/// An element of `lim_s colim_t Hom(X_t, Y_s)` made explicit: one
/// representative per target index, with a dominating index witnessing
/// each compatibility.
pub struct RawProMap<C: FiberCategory> {
    pub source: ProObject<C>,
    pub target: ProObject<C>,
    /// `reps[s] = (t(s), f_s : X_{t(s)} -> Y_s)`.
    pub reps: Vec<(usize, C::Mor)>,
    /// For each strict pair `s ≥ s'` of the target index: an index `u`
    /// dominating `t(s)` and `t(s')` where the two composites agree.
    pub witnesses: std::collections::BTreeMap<(usize, usize), usize>,
}

impl<C: FiberCategory> Clone for RawProMap<C> {
    fn clone(&self) -> Self {
        RawProMap {
            source: self.source.clone(),
            target: self.target.clone(),
            reps: self.reps.clone(),
            witnesses: self.witnesses.clone(),
        }
    }
}

impl<C: FiberCategory> PartialEq for RawProMap<C> {
    fn eq(&self, other: &Self) -> bool {
        self.source == other.source
            && self.target == other.target
            && self.reps == other.reps
            && self.witnesses == other.witnesses
    }
}

impl<C: FiberCategory> Eq for RawProMap<C> {}

impl<C: FiberCategory> std::fmt::Debug for RawProMap<C> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("RawProMap")
            .field("reps", &self.reps)
            .finish_non_exhaustive()
    }
}

impl<C: FiberCategory> RawProMap<C> {
    /// Build from representatives, searching for witnesses in
    /// (height, id) order.  Fails when some compatibility never holds.
    pub fn from_reps(
        source: ProObject<C>,
        target: ProObject<C>,
        reps: Vec<(usize, C::Mor)>,
    ) -> Result<Self, String> {
        let mut witnesses = std::collections::BTreeMap::new();
        for (s, sp) in target.index.strict_pairs() {
            let (t_s, f_s) = &reps[s];
            let (t_sp, f_sp) = &reps[sp];
            let found = source.index.minimal_satisfying(|u| {
                if !source.index.leq(*t_s, u) || !source.index.leq(*t_sp, u) {
                    return false;
                }
                let lhs = C::compose(
                    &C::compose(&source.structure_map(u, *t_s), f_s),
                    &target.structure_map(s, sp),
                );
                let rhs = C::compose(&source.structure_map(u, *t_sp), f_sp);
                lhs == rhs
            });
            match found {
                Some(u) => {
                    witnesses.insert((s, sp), u);
                }
                None => {
                    return Err(format!(
                        "representatives at {s} and {sp} are incompatible at every index"
                    ))
                }
            }
        }
        let map = RawProMap {
            source,
            target,
            reps,
            witnesses,
        };
        map.validate()?;
        Ok(map)
    }

    pub fn from_level(f: &LevelMap<C>) -> Self {
        let reps = f
            .components
            .iter()
            .enumerate()
            .map(|(s, m)| (s, m.clone()))
            .collect();
        RawProMap::from_reps(f.source.clone(), f.target.clone(), reps)
            .expect("level maps are compatible on the nose")
    }

    pub fn identity(x: &ProObject<C>) -> Self {
        RawProMap::from_level(&LevelMap::identity(x))
    }

    pub fn validate(&self) -> Result<(), String> {
        if self.reps.len() != self.target.index.len() {
            return Err("one representative per target index required".into());
        }
        for (s, (t, f)) in self.reps.iter().enumerate() {
            if C::source(f) != self.source.fibers[*t] || C::target(f) != self.target.fibers[s] {
                return Err(format!("representative at {s} has wrong endpoints"));
            }
        }
        for (s, sp) in self.target.index.strict_pairs() {
            let &u = self
                .witnesses
                .get(&(s, sp))
                .ok_or_else(|| format!("missing witness for ({s}, {sp})"))?;
            let (t_s, f_s) = &self.reps[s];
            let (t_sp, f_sp) = &self.reps[sp];
            if !self.source.index.leq(*t_s, u) || !self.source.index.leq(*t_sp, u) {
                return Err(format!("witness for ({s}, {sp}) does not dominate"));
            }
            let lhs = C::compose(
                &C::compose(&self.source.structure_map(u, *t_s), f_s),
                &self.target.structure_map(s, sp),
            );
            let rhs = C::compose(&self.source.structure_map(u, *t_sp), f_sp);
            if lhs != rhs {
                return Err(format!("witness for ({s}, {sp}) fails to equalize"));
            }
        }
        Ok(())
    }

    /// `other ∘ self` (self: X -> Y first, then other: Y -> Z).
    pub fn then(&self, other: &RawProMap<C>) -> RawProMap<C> {
        assert_eq!(self.target, other.source, "raw maps do not compose");
        let reps = other
            .reps
            .iter()
            .map(|(t_g, g)| {
                let (t_f, f) = &self.reps[*t_g];
                (*t_f, C::compose(f, g))
            })
            .collect();
        RawProMap::from_reps(self.source.clone(), other.target.clone(), reps)
            .expect("composite of valid raw maps is compatible")
    }

    /// Equality as pro-morphisms: the representatives agree after
    /// refinement, at every target index.
    pub fn pro_eq(&self, other: &RawProMap<C>) -> bool {
        if self.source != other.source || self.target != other.target {
            return false;
        }
        for s in 0..self.target.index.len() {
            let (t_a, f_a) = &self.reps[s];
            let (t_b, f_b) = &other.reps[s];
            let found = self.source.index.minimal_satisfying(|u| {
                self.source.index.leq(*t_a, u)
                    && self.source.index.leq(*t_b, u)
                    && C::compose(&self.source.structure_map(u, *t_a), f_a)
                        == C::compose(&self.source.structure_map(u, *t_b), f_b)
            });
            if found.is_none() {
                return false;
            }
        }
        true
    }

    /// Is this the identity pro-morphism?
    pub fn is_pro_identity(&self) -> bool {
        self.source == self.target && self.pro_eq(&RawProMap::identity(&self.source))
    }
}
