//! Truncated simplicial sets and their exact combinatorics.

pub mod colim;
pub mod constructors;
pub mod coskeleton;
pub mod edge_path;
pub mod enumerate;
pub mod exponential;
pub mod homology;
pub mod lim;
pub mod local_system;
pub mod map;
pub mod nerve;
pub mod operator;
pub mod pi0;
pub mod equivalence;
pub mod sset;

pub use constructors::{boundary, horn, relative_skeleton, skeleton};
pub use enumerate::enumerate_maps;
pub use map::SSetMap;
pub use operator::{DegeneracyWord, Monotone};
pub use sset::{Cell, CellId, SimplexRef, TruncatedSSet};
