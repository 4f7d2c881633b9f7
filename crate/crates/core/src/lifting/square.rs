//! Commuting lifting squares.

use crate::simplicial::SSetMap;

/// A commuting square: `p ∘ top = bottom ∘ i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftingSquare {
    /// Left leg `i : A -> B`.
    pub i: SSetMap,
    /// Right leg `p : X -> Y`.
    pub p: SSetMap,
    /// `top : A -> X`.
    pub top: SSetMap,
    /// `bottom : B -> Y`.
    pub bottom: SSetMap,
}

impl LiftingSquare {
    pub fn new(i: SSetMap, p: SSetMap, top: SSetMap, bottom: SSetMap) -> Result<Self, String> {
        let sq = LiftingSquare { i, p, top, bottom };
        sq.validate()?;
        Ok(sq)
    }

    pub fn validate(&self) -> Result<(), String> {
        if self.i.source != self.top.source {
            return Err("i and top must share a source".into());
        }
        if self.i.target != self.bottom.source {
            return Err("bottom must start at i's target".into());
        }
        if self.top.target != self.p.source {
            return Err("top must land in p's source".into());
        }
        if self.bottom.target != self.p.target {
            return Err("bottom must land in p's target".into());
        }
        if self.top.then(&self.p) != self.i.then(&self.bottom) {
            return Err("square does not commute".into());
        }
        Ok(())
    }

    /// Verify a proposed filler: `h ∘ i = top` and `p ∘ h = bottom`.
    pub fn is_filler(&self, h: &SSetMap) -> bool {
        h.source == self.i.target
            && h.target == self.p.source
            && self.i.then(h) == self.top
            && h.then(&self.p) == self.bottom
    }
}
