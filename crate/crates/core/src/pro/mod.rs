//! Pro-category calculus over finite cofinite posets.

pub mod cofinal;
pub mod fiber;
pub mod hom;
pub mod iso;
pub mod levelify;
pub mod limits;
pub mod object;
pub mod poset;
pub mod raw;
pub mod retract;
pub mod strict_compose;

pub use cofinal::{cofinal_restrict, is_cofinal};
pub use fiber::{FiberCategory, FinGroupCat, FinGroupMor, FinSetCat, FinSetMap, SSetCat};
pub use hom::{pro_hom, two_sided_inverse};
pub use iso::{is_pro_iso, ProIsoWitness};
pub use levelify::{levelify, Levelified};
pub use object::{LevelMap, ProObject};
pub use poset::CofinitePoset;
pub use raw::RawProMap;
pub use limits::{
    pro_coequalizer, pro_coproduct, pro_equalizer, pro_product, FiberLimits, ProCoequalizer,
    ProCoproduct, ProEqualizer, ProProduct,
};
pub use retract::{pad_tower, retract_normalize, RetractData, RetractOutcome};
pub use strict_compose::{compose_strict, StrictComposite};
