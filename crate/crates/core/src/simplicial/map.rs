//! Simplicial maps between truncated simplicial sets.

use serde::{Deserialize, Serialize};

use super::operator::DegeneracyWord;
use super::sset::{CellId, SimplexRef, TruncatedSSet};

/// A simplicial map, given on nondegenerate simplices.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SSetMap {
    pub source: TruncatedSSet,
    pub target: TruncatedSSet,
    /// `images[m][idx]` is the image of source cell `m#idx`, an
    /// equal-dimension simplex of the target.
    pub images: Vec<Vec<SimplexRef>>,
}

impl SSetMap {
    pub fn new(
        source: TruncatedSSet,
        target: TruncatedSSet,
        images: Vec<Vec<SimplexRef>>,
    ) -> Result<Self, String> {
        let map = SSetMap {
            source,
            target,
            images,
        };
        map.validate()?;
        Ok(map)
    }

    pub fn identity(x: &TruncatedSSet) -> Self {
        let images = (0..=x.dim_bound())
            .map(|m| {
                x.cell_ids(m)
                    .map(SimplexRef::nondegenerate)
                    .collect::<Vec<_>>()
            })
            .collect();
        SSetMap {
            source: x.clone(),
            target: x.clone(),
            images,
        }
    }

    /// The unique map from the empty simplicial set.
    pub fn from_empty(target: &TruncatedSSet, dim_bound: usize) -> Self {
        SSetMap {
            source: TruncatedSSet::empty(dim_bound),
            target: target.clone(),
            images: vec![Vec::new(); dim_bound + 1],
        }
    }

    pub fn image_of_cell(&self, id: CellId) -> &SimplexRef {
        &self.images[id.dim][id.idx]
    }

    /// Image of an arbitrary simplex, in normal form.
    pub fn apply(&self, r: &SimplexRef) -> SimplexRef {
        let img = self.image_of_cell(r.target);
        if r.is_nondegenerate() {
            return img.clone();
        }
        let total = r.epi().then(&img.epi());
        SimplexRef {
            word: DegeneracyWord::from_epi(&total),
            target: img.target,
        }
    }

    /// `other ∘ self` (self first).
    pub fn then(&self, other: &SSetMap) -> SSetMap {
        assert_eq!(
            self.target, other.source,
            "composition of incompatible maps"
        );
        let images = (0..=self.source.dim_bound())
            .map(|m| {
                self.source
                    .cell_ids(m)
                    .map(|id| other.apply(self.image_of_cell(id)))
                    .collect()
            })
            .collect();
        SSetMap {
            source: self.source.clone(),
            target: other.target.clone(),
            images,
        }
    }

    /// Commutation with all face maps, after normal-form reduction.
    pub fn validate(&self) -> Result<(), String> {
        if self.images.len() != self.source.dim_bound() + 1 {
            return Err("image table does not match the source bound".into());
        }
        for m in 0..=self.source.dim_bound() {
            if self.images[m].len() != self.source.cell_count(m) {
                return Err(format!("image table at dimension {m} has the wrong length"));
            }
            for idx in 0..self.source.cell_count(m) {
                let id = CellId { dim: m, idx };
                let img = self.image_of_cell(id);
                if img.dim() != m {
                    return Err(format!("image of {id:?} has dimension {}", img.dim()));
                }
                if !img.word.is_valid_over(img.target.dim) {
                    return Err(format!("image of {id:?} has a malformed word"));
                }
                if img.target.dim > self.target.dim_bound()
                    || img.target.idx >= self.target.cell_count(img.target.dim)
                {
                    return Err(format!("image of {id:?} points outside the target"));
                }
                let r = SimplexRef::nondegenerate(id);
                for i in 0..=m {
                    if m == 0 {
                        break;
                    }
                    let lhs = self.apply(&self.source.face(&r, i));
                    let rhs = self.target.face(img, i);
                    if lhs != rhs {
                        return Err(format!("map does not commute with d{i} at {id:?}"));
                    }
                }
            }
        }
        Ok(())
    }

    /// Whether the map is injective on all simplices.  Equivalent to:
    /// every nondegenerate cell maps to a nondegenerate simplex, with no
    /// two cells of equal dimension sharing an image.
    pub fn is_injective(&self) -> bool {
        for m in 0..=self.source.dim_bound() {
            let mut seen = std::collections::BTreeSet::new();
            for idx in 0..self.source.cell_count(m) {
                let img = self.image_of_cell(CellId { dim: m, idx });
                if !img.is_nondegenerate() || !seen.insert(img.target) {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_identity_like(&self) -> bool {
        self.source == self.target && *self == SSetMap::identity(&self.source)
    }

    /// Whether source and target agree and every cell maps to itself.
    pub fn is_isomorphism(&self) -> bool {
        self.is_injective()
            && (0..=self.target.dim_bound().min(self.source.dim_bound()))
                .all(|m| self.source.cell_count(m) == self.target.cell_count(m))
            && self.source.dim_bound() == self.target.dim_bound()
    }

    /// The inverse of an isomorphism.
    pub fn inverse(&self) -> Option<SSetMap> {
        if !self.is_isomorphism() {
            return None;
        }
        let images = (0..=self.target.dim_bound())
            .map(|m| {
                (0..self.target.cell_count(m))
                    .map(|j| {
                        let idx = (0..self.source.cell_count(m))
                            .find(|&i| {
                                self.image_of_cell(CellId { dim: m, idx: i }).target.idx == j
                            })
                            .expect("isomorphisms are surjective on cells");
                        SimplexRef::nondegenerate(CellId { dim: m, idx })
                    })
                    .collect()
            })
            .collect();
        SSetMap::new(self.target.clone(), self.source.clone(), images).ok()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_and_compose() {
        let d2 = TruncatedSSet::standard_simplex(2, 2).unwrap();
        let id = SSetMap::identity(&d2);
        id.validate().unwrap();
        assert!(id.is_injective());
        let comp = id.then(&id);
        assert_eq!(comp, id);
    }

    #[test]
    fn collapse_map_and_injectivity() {
        // Δ¹ -> Δ⁰ collapsing: edge maps to s0 of the point.
        let d1 = TruncatedSSet::standard_simplex(1, 1).unwrap();
        let d0 = TruncatedSSet::standard_simplex(0, 1).unwrap();
        let v = CellId { dim: 0, idx: 0 };
        let collapse = SSetMap::new(
            d1,
            d0,
            vec![
                vec![SimplexRef::nondegenerate(v), SimplexRef::nondegenerate(v)],
                vec![SimplexRef {
                    word: DegeneracyWord(vec![0]),
                    target: v,
                }],
            ],
        )
        .unwrap();
        assert!(!collapse.is_injective());
    }
}
