//! The generator families: horns, plus boundaries above a threshold.

use serde::{Deserialize, Serialize};

use crate::simplicial::{boundary, horn, SSetMap, TruncatedSSet};

/// The threshold `n` of a family: horns in every dimension, boundary
/// inclusions `∂Δ^m -> Δ^m` for `m > n`.  `Infinity` keeps horns only
/// (trivial-cofibration generators); `Finite(-1)` adds every boundary
/// (cofibration generators).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum NThreshold {
    Finite(i64),
    Infinity,
}

impl NThreshold {
    pub fn includes_boundary(&self, m: usize) -> bool {
        match self {
            NThreshold::Infinity => false,
            NThreshold::Finite(n) => (m as i64) > *n,
        }
    }
}

impl std::fmt::Display for NThreshold {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            NThreshold::Infinity => write!(f, "inf"),
            NThreshold::Finite(n) => write!(f, "{n}"),
        }
    }
}

/// One generating inclusion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GeneratorSpec {
    Horn { m: usize, k: usize },
    Boundary { m: usize },
}

impl GeneratorSpec {
    pub fn dim(&self) -> usize {
        match self {
            GeneratorSpec::Horn { m, .. } | GeneratorSpec::Boundary { m } => *m,
        }
    }

    /// Realize the generator at a truncation: the source and the inclusion
    /// into the (possibly skeleton-truncated) m-simplex.
    pub fn realize(&self, dim_bound: usize) -> Result<(TruncatedSSet, SSetMap), String> {
        let incl = match *self {
            GeneratorSpec::Horn { m, k } => horn(m, k, dim_bound)?.1,
            GeneratorSpec::Boundary { m } => boundary(m, dim_bound)?.1,
        };
        let incl = truncate_inclusion(incl, dim_bound);
        Ok((incl.source.clone(), incl))
    }
}

impl std::fmt::Display for GeneratorSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GeneratorSpec::Horn { m, k } => write!(f, "Λ^{m}_{k} -> Δ^{m}"),
            GeneratorSpec::Boundary { m } => write!(f, "∂Δ^{m} -> Δ^{m}"),
        }
    }
}

/// When the generator dimension exceeds the truncation, the target is
/// replaced by its `dim_bound`-skeleton (the attachable part) and both
/// ends are re-bounded.
fn truncate_inclusion(incl: SSetMap, dim_bound: usize) -> SSetMap {
    if incl.target.dim_bound() <= dim_bound {
        return incl;
    }
    let (sk, _) = crate::simplicial::skeleton(&incl.target, dim_bound);
    let sk = sk.with_dim_bound(dim_bound).expect("skeleton fits the bound");
    let src = incl
        .source
        .with_dim_bound(dim_bound)
        .expect("generator source fits the bound");
    // The skeleton keeps cell order, so the stored images remain valid.
    let mut images = incl.images.clone();
    images.truncate(dim_bound + 1);
    SSetMap::new(src, sk, images).expect("generator source lies in the skeleton")
}

/// All generators of the family `J_n` with dimension ≤ `max_dim`, in a
/// fixed order: horns by (m, k), then boundaries by m.
pub fn generators(n: NThreshold, max_dim: usize) -> Vec<GeneratorSpec> {
    let mut out = Vec::new();
    for m in 1..=max_dim {
        for k in 0..=m {
            out.push(GeneratorSpec::Horn { m, k });
        }
    }
    for m in 0..=max_dim {
        if n.includes_boundary(m) {
            out.push(GeneratorSpec::Boundary { m });
        }
    }
    out
}
