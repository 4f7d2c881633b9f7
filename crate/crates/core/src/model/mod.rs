//! The model-structure layer: matching objects, strong fibrations, the
//! factorization and pro-lifting algorithms, Postnikov stages, strictness
//! checks, mapping spaces, and the constant/limit adjunction.

pub mod adjunction;
pub mod factorization;
pub mod mapping_space;
pub mod matching;
pub mod postnikov;
pub mod pro_lifting;
pub mod strict;
pub mod strong_fibration;

pub use adjunction::{constant_pro, hom_into_constant, pro_limit, HomotopyClasses};
pub use factorization::{factor_cofib_trivfib, factor_we, FactorizationResult};
pub use mapping_space::{cotensor, mapping_space, tensor, MappingSpace};
pub use matching::{matching_cone, matching_object, relative_matching_map, MatchingObject};
pub use postnikov::{postnikov, postnikov_map, Postnikov};
pub use pro_lifting::solve_pro_lifting;
pub use strict::{is_strict_we, we_check_e};
pub use strong_fibration::{
    is_strong_fibration, is_strong_fibration_recognition, NFunction,
};
