//! Pro-objects and level maps.

use super::fiber::FiberCategory;
use super::poset::CofinitePoset;

/// A functor from a finite cofinite poset into the fiber category.
pub struct ProObject<C: FiberCategory> {
    pub index: CofinitePoset,
    /// One fiber per index element.
    pub fibers: Vec<C::Obj>,
    /// Structure maps `X_t -> X_s` for every strict pair `t > s`.
    pub structure: std::collections::BTreeMap<(usize, usize), C::Mor>,
}

impl<C: FiberCategory> Clone for ProObject<C> {
    fn clone(&self) -> Self {
        ProObject {
            index: self.index.clone(),
            fibers: self.fibers.clone(),
            structure: self.structure.clone(),
        }
    }
}

impl<C: FiberCategory> PartialEq for ProObject<C> {
    fn eq(&self, other: &Self) -> bool {
        self.index == other.index
            && self.fibers == other.fibers
            && self.structure == other.structure
    }
}

impl<C: FiberCategory> Eq for ProObject<C> {}

impl<C: FiberCategory> std::fmt::Debug for ProObject<C> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ProObject")
            .field("index", &self.index)
            .field("fibers", &self.fibers)
            .field("structure", &self.structure)
            .finish()
    }
}

impl<C: FiberCategory> ProObject<C> {
    pub fn new(
        index: CofinitePoset,
        fibers: Vec<C::Obj>,
        structure: std::collections::BTreeMap<(usize, usize), C::Mor>,
    ) -> Result<Self, String> {
        let x = ProObject {
            index,
            fibers,
            structure,
        };
        x.validate()?;
        Ok(x)
    }

    /// The constant pro-object at one fiber.
    pub fn constant(fiber: C::Obj) -> Self {
        ProObject {
            index: CofinitePoset::point(),
            fibers: vec![fiber],
            structure: std::collections::BTreeMap::new(),
        }
    }

    /// A tower over a chain: `fibers[0]` at the bottom, with
    /// `maps[k] : fibers[k+1] -> fibers[k]`.
    pub fn tower(fibers: Vec<C::Obj>, maps: Vec<C::Mor>) -> Result<Self, String> {
        assert_eq!(maps.len() + 1, fibers.len());
        let n = fibers.len();
        let index = CofinitePoset::chain(n);
        let mut structure = std::collections::BTreeMap::new();
        for t in 1..n {
            // Composite down to each lower stage.
            let mut acc: Option<C::Mor> = None;
            for k in (0..t).rev() {
                acc = Some(match acc {
                    None => maps[k].clone(),
                    Some(m) => C::compose(&m, &maps[k]),
                });
                structure.insert((t, k), acc.clone().unwrap());
            }
        }
        ProObject::new(index, fibers, structure)
    }

    pub fn fiber(&self, s: usize) -> &C::Obj {
        &self.fibers[s]
    }

    /// Structure map `X_t -> X_s` (identity when `t = s`).
    pub fn structure_map(&self, t: usize, s: usize) -> C::Mor {
        if t == s {
            C::identity(&self.fibers[t])
        } else {
            self.structure
                .get(&(t, s))
                .cloned()
                .expect("structure map for a related pair")
        }
    }

    pub fn validate(&self) -> Result<(), String> {
        if self.fibers.len() != self.index.len() {
            return Err("one fiber per index element required".into());
        }
        for (&(t, s), m) in &self.structure {
            if t == s || !self.index.leq(s, t) {
                return Err(format!("structure map stored for unrelated pair ({t}, {s})"));
            }
            if C::source(m) != self.fibers[t] || C::target(m) != self.fibers[s] {
                return Err(format!("structure map ({t}, {s}) has wrong endpoints"));
            }
        }
        for (t, s) in self.index.strict_pairs() {
            if !self.structure.contains_key(&(t, s)) {
                return Err(format!("missing structure map for ({t}, {s})"));
            }
        }
        // Functoriality over every commuting triangle.
        for (t, s) in self.index.strict_pairs() {
            for u in 0..self.index.len() {
                if u != t && u != s && self.index.leq(u, s) {
                    let via = C::compose(&self.structure_map(t, s), &self.structure_map(s, u));
                    if via != self.structure_map(t, u) {
                        return Err(format!("functoriality fails on {t} ≥ {s} ≥ {u}"));
                    }
                }
            }
        }
        Ok(())
    }

    /// Restriction to a subset of the index (validated directed).
    pub fn restrict(&self, keep: &[usize]) -> Result<ProObject<C>, String> {
        if !self.index.subset_directed(keep) {
            return Err("restriction subset is not directed".into());
        }
        let index = self.index.restrict(keep);
        let fibers = keep.iter().map(|&s| self.fibers[s].clone()).collect();
        let mut structure = std::collections::BTreeMap::new();
        for (new_t, &t) in keep.iter().enumerate() {
            for (new_s, &s) in keep.iter().enumerate() {
                if new_t != new_s && self.index.leq(s, t) {
                    structure.insert((new_t, new_s), self.structure_map(t, s));
                }
            }
        }
        ProObject::new(index, fibers, structure)
    }
}

/// A pro-morphism presented componentwise over a shared index.
pub struct LevelMap<C: FiberCategory> {
    pub source: ProObject<C>,
    pub target: ProObject<C>,
    pub components: Vec<C::Mor>,
}

impl<C: FiberCategory> Clone for LevelMap<C> {
    fn clone(&self) -> Self {
        LevelMap {
            source: self.source.clone(),
            target: self.target.clone(),
            components: self.components.clone(),
        }
    }
}

impl<C: FiberCategory> PartialEq for LevelMap<C> {
    fn eq(&self, other: &Self) -> bool {
        self.source == other.source
            && self.target == other.target
            && self.components == other.components
    }
}

impl<C: FiberCategory> Eq for LevelMap<C> {}

impl<C: FiberCategory> std::fmt::Debug for LevelMap<C> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("LevelMap")
            .field("components", &self.components)
            .finish_non_exhaustive()
    }
}

impl<C: FiberCategory> LevelMap<C> {
    pub fn new(
        source: ProObject<C>,
        target: ProObject<C>,
        components: Vec<C::Mor>,
    ) -> Result<Self, String> {
        let f = LevelMap {
            source,
            target,
            components,
        };
        f.validate()?;
        Ok(f)
    }

    pub fn identity(x: &ProObject<C>) -> Self {
        LevelMap {
            source: x.clone(),
            target: x.clone(),
            components: x.fibers.iter().map(|f| C::identity(f)).collect(),
        }
    }

    pub fn component(&self, s: usize) -> &C::Mor {
        &self.components[s]
    }

    /// Componentwise composition over the shared index.
    pub fn then(&self, other: &LevelMap<C>) -> LevelMap<C> {
        assert_eq!(self.target, other.source, "level maps do not compose");
        LevelMap {
            source: self.source.clone(),
            target: other.target.clone(),
            components: self
                .components
                .iter()
                .zip(other.components.iter())
                .map(|(f, g)| C::compose(f, g))
                .collect(),
        }
    }

    pub fn validate(&self) -> Result<(), String> {
        if self.source.index != self.target.index {
            return Err("level maps live over a shared index".into());
        }
        if self.components.len() != self.source.index.len() {
            return Err("one component per index element required".into());
        }
        for (s, m) in self.components.iter().enumerate() {
            if C::source(m) != self.source.fibers[s] || C::target(m) != self.target.fibers[s] {
                return Err(format!("component {s} has wrong endpoints"));
            }
        }
        for (t, s) in self.source.index.strict_pairs() {
            let lhs = C::compose(&self.components[t], &self.target.structure_map(t, s));
            let rhs = C::compose(&self.source.structure_map(t, s), &self.components[s]);
            if lhs != rhs {
                return Err(format!("naturality fails on the pair ({t}, {s})"));
            }
        }
        Ok(())
    }

    /// Restrict source and target to a directed subset.
    pub fn restrict(&self, keep: &[usize]) -> Result<LevelMap<C>, String> {
        let source = self.source.restrict(keep)?;
        let target = self.target.restrict(keep)?;
        let components = keep.iter().map(|&s| self.components[s].clone()).collect();
        LevelMap::new(source, target, components)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pro::fiber::{FinSetCat, FinSetMap};

    #[test]
    fn tower_builds_composites() {
        // Sets 3 <- 2 <- 1 with surjections.
        let x: ProObject<FinSetCat> = ProObject::tower(
            vec![3, 2, 1],
            vec![
                FinSetMap::new(2, 3, vec![0, 1]),
                FinSetMap::new(1, 2, vec![0]),
            ],
        )
        .unwrap();
        x.validate().unwrap();
        assert_eq!(x.structure_map(2, 0), FinSetMap::new(1, 3, vec![0]));
    }

    #[test]
    fn naturality_is_enforced() {
        let a: ProObject<FinSetCat> =
            ProObject::tower(vec![2, 2], vec![FinSetMap::new(2, 2, vec![0, 1])]).unwrap();
        let b = a.clone();
        // Swap on top, identity on bottom: not natural.
        let bad = LevelMap::new(
            a.clone(),
            b.clone(),
            vec![
                FinSetMap::new(2, 2, vec![0, 1]),
                FinSetMap::new(2, 2, vec![1, 0]),
            ],
        );
        assert!(bad.is_err());
        let good = LevelMap::identity(&a);
        good.validate().unwrap();
    }
}
