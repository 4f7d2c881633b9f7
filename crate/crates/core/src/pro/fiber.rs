//! Fiber categories: the value categories pro-objects take fibers in.

use crate::budget::{Budget, BudgetError};
use crate::groups::{FinGroup, GroupHom};
use crate::simplicial::{enumerate_maps, SSetMap, TruncatedSSet};

/// A category with enumerable hom-sets, for pro-object fibers.
pub trait FiberCategory {
    type Obj: Clone + Eq + Ord + std::fmt::Debug;
    type Mor: Clone + Eq + Ord + std::fmt::Debug;

    fn source(m: &Self::Mor) -> Self::Obj;
    fn target(m: &Self::Mor) -> Self::Obj;
    fn identity(x: &Self::Obj) -> Self::Mor;
    /// `g ∘ f` (f first).
    fn compose(f: &Self::Mor, g: &Self::Mor) -> Self::Mor;
    /// All morphisms `x -> y`, deterministically ordered.
    fn hom(x: &Self::Obj, y: &Self::Obj, budget: &Budget) -> Result<Vec<Self::Mor>, BudgetError>;

    fn is_identity(m: &Self::Mor) -> bool {
        *m == Self::identity(&Self::source(m))
    }
}

/// Truncated simplicial sets and simplicial maps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SSetCat;

impl FiberCategory for SSetCat {
    type Obj = TruncatedSSet;
    type Mor = SSetMap;

    fn source(m: &SSetMap) -> TruncatedSSet {
        m.source.clone()
    }
    fn target(m: &SSetMap) -> TruncatedSSet {
        m.target.clone()
    }
    fn identity(x: &TruncatedSSet) -> SSetMap {
        SSetMap::identity(x)
    }
    fn compose(f: &SSetMap, g: &SSetMap) -> SSetMap {
        f.then(g)
    }
    fn hom(
        x: &TruncatedSSet,
        y: &TruncatedSSet,
        budget: &Budget,
    ) -> Result<Vec<SSetMap>, BudgetError> {
        enumerate_maps(x, y, budget)
    }
}

/// Finite sets `{0..n}` and functions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FinSetCat;

/// A function between finite sets, with explicit endpoints.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, serde::Serialize, serde::Deserialize)]
pub struct FinSetMap {
    pub source: usize,
    pub target: usize,
    pub values: Vec<usize>,
}

impl FinSetMap {
    pub fn new(source: usize, target: usize, values: Vec<usize>) -> Self {
        assert_eq!(values.len(), source);
        assert!(values.iter().all(|&v| v < target || source == 0));
        FinSetMap {
            source,
            target,
            values,
        }
    }

    pub fn is_bijection(&self) -> bool {
        if self.source != self.target {
            return false;
        }
        let mut seen = vec![false; self.target];
        self.values.iter().all(|&v| {
            if seen[v] {
                false
            } else {
                seen[v] = true;
                true
            }
        })
    }
}

impl FiberCategory for FinSetCat {
    type Obj = usize;
    type Mor = FinSetMap;

    fn source(m: &FinSetMap) -> usize {
        m.source
    }
    fn target(m: &FinSetMap) -> usize {
        m.target
    }
    fn identity(x: &usize) -> FinSetMap {
        FinSetMap {
            source: *x,
            target: *x,
            values: (0..*x).collect(),
        }
    }
    fn compose(f: &FinSetMap, g: &FinSetMap) -> FinSetMap {
        assert_eq!(f.target, g.source);
        FinSetMap {
            source: f.source,
            target: g.target,
            values: f.values.iter().map(|&v| g.values[v]).collect(),
        }
    }
    fn hom(x: &usize, y: &usize, budget: &Budget) -> Result<Vec<FinSetMap>, BudgetError> {
        let count = (*y as u64).checked_pow(*x as u32).unwrap_or(u64::MAX);
        budget.spend(count, "enumerating finite-set maps")?;
        if *x == 0 {
            return Ok(vec![FinSetMap {
                source: 0,
                target: *y,
                values: vec![],
            }]);
        }
        if *y == 0 {
            return Ok(vec![]);
        }
        let mut out = Vec::new();
        let mut values = vec![0usize; *x];
        loop {
            out.push(FinSetMap {
                source: *x,
                target: *y,
                values: values.clone(),
            });
            let mut pos = 0;
            loop {
                if pos == *x {
                    return Ok(out);
                }
                values[pos] += 1;
                if values[pos] < *y {
                    break;
                }
                values[pos] = 0;
                pos += 1;
            }
        }
    }
}

/// Finite table groups and homomorphisms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FinGroupCat;

/// A group homomorphism with explicit endpoints.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, serde::Serialize, serde::Deserialize)]
pub struct FinGroupMor {
    pub source: FinGroup,
    pub target: FinGroup,
    pub map: GroupHom,
}

impl FiberCategory for FinGroupCat {
    type Obj = FinGroup;
    type Mor = FinGroupMor;

    fn source(m: &FinGroupMor) -> FinGroup {
        m.source.clone()
    }
    fn target(m: &FinGroupMor) -> FinGroup {
        m.target.clone()
    }
    fn identity(x: &FinGroup) -> FinGroupMor {
        FinGroupMor {
            source: x.clone(),
            target: x.clone(),
            map: x.identity_hom(),
        }
    }
    fn compose(f: &FinGroupMor, g: &FinGroupMor) -> FinGroupMor {
        assert_eq!(f.target, g.source);
        FinGroupMor {
            source: f.source.clone(),
            target: g.target.clone(),
            map: f.map.then(&g.map),
        }
    }
    fn hom(x: &FinGroup, y: &FinGroup, budget: &Budget) -> Result<Vec<FinGroupMor>, BudgetError> {
        budget.spend(
            (y.order() as u64).saturating_pow(x.generating_set().len() as u32),
            "enumerating group homomorphisms",
        )?;
        let mut out: Vec<FinGroupMor> = x
            .homs_to(y)
            .into_iter()
            .map(|map| FinGroupMor {
                source: x.clone(),
                target: y.clone(),
                map,
            })
            .collect();
        out.sort();
        Ok(out)
    }
}

/// The underlying-function view of a group morphism, for the forgetful
/// comparisons between pro-groups and pro-sets.
pub fn underlying_fin_set_map(m: &FinGroupMor) -> FinSetMap {
    FinSetMap {
        source: m.source.order(),
        target: m.target.order(),
        values: m.map.table.clone(),
    }
}
