//! Lifting problems, bounded lifting-property reports, and the budgeted
//! small object argument for the generator families `J_n`.

mod cofibration;
mod family;
mod rlp;
mod small_object;
mod solve;
mod square;

pub use cofibration::verify_n_cofibration;
pub use family::{generators, GeneratorSpec, NThreshold};
pub use rlp::{has_rlp, squares_of_generator, RlpReport};
pub use small_object::{factor_small_object, Attachment, CellComplexCertificate, SmallObjectResult};
pub use solve::{count_lifts, solve_lift};
pub use square::LiftingSquare;
