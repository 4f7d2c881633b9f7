//! Group presentations, finite group tables, and coset enumeration.

mod fin_group;
mod presentation;
mod todd_coxeter;

pub use fin_group::{FinGroup, GroupHom};
pub use presentation::{GroupPresentation, Letter, WordEngine};
pub use todd_coxeter::{todd_coxeter, EnumeratedGroup};
