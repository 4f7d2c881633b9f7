//! Serialization schema, fixture generation, and the batch runner behind
//! the `prosset` binary.

pub mod corpus;
pub mod run;
pub mod schema;
