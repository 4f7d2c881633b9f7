//! Pro-homotopy invariants, local systems on pro-spaces, and the
//! weak-equivalence checkers.

pub mod cohomology;
pub mod group_iso;
pub mod local_system;
pub mod normalize;
pub mod pro_pi0;
pub mod we_checks;

pub use cohomology::{twisted_pro_cohomology, ProCohomology};
pub use group_iso::{is_pro_group_iso, is_pro_set_iso};
pub use local_system::{
    ls_sequence_exact, pullback_local_system, transport_local_system, ProLocalSystem,
};
pub use normalize::normalize_pi0;
pub use pro_pi0::{pro_pi0, pro_pi0_map};
pub use we_checks::{pi1_pro_comparison, we_check_b, we_check_c, we_check_d, WeTrace};
