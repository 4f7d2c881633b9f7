//! Exact integer linear algebra and finitely generated abelian groups.

mod abelian;
mod matrix;

pub use abelian::{based_map_is_iso, AbGroup, Subquotient};
pub use matrix::{IntMat, SmithForm};
