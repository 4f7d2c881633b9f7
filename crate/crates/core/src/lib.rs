//! Desk-scale combinatorics of dimension-truncated simplicial sets and of
//! pro-objects over finite directed posets.
//!
//! The crate is organized in layers:
//!
//! * [`arith`] — exact integer linear algebra (Smith normal form, lattice
//!   subquotients) and finitely generated abelian groups.
//! * [`simplicial`] — truncated simplicial sets in Eilenberg–Zilber normal
//!   form, their maps, limits and colimits, π₀, edge-path fundamental
//!   groups, homology, twisted cohomology, nerves, and coskeleta.
//! * [`groups`] — group presentations, finite group tables, and a budgeted
//!   Todd–Coxeter enumerator used by the π₁ comparison pipeline.
//! * [`lifting`] — lifting-problem search, bounded right-lifting-property
//!   reports for the generator families `J_n`, and the budgeted small
//!   object argument with replayable cell-attachment certificates.
//! * [`pro`] — finite cofinite posets, pro-objects, level and raw
//!   pro-morphisms, pro-Hom, levelification, pro-isomorphism detection,
//!   cofinality, (co)limits, retract normalization, and strict composition.
//! * [`homotopy`] — pro-homotopy invariants, local systems on pro-spaces,
//!   and the weak-equivalence checkers.
//! * [`model`] — matching objects, strong fibrations, the two factorization
//!   algorithms, pro-lifting, Postnikov stages, mapping spaces, and the
//!   constant/limit adjunction.
//!
//! Every operation is exact on the data it stores; checks that depend on
//! undecidable input (π₁ isomorphism, unbounded lifting) return a
//! three-valued [`Verdict`] instead of guessing.

pub mod arith;
pub mod budget;
pub mod groups;
pub mod homotopy;
pub mod lifting;
pub mod model;
pub mod pro;
pub mod simplicial;
pub mod verdict;

pub use budget::{Budget, BudgetError};
pub use verdict::Verdict;
