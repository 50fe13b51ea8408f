//! A small saturation prover for first-order clause logic whose passive
//! clause selection can be layered by how much theory reasoning went into
//! each clause.

pub mod kernel;
pub mod metrics;
pub mod passive;
pub mod problem_io;
pub mod theory;
pub mod engine;
pub mod bench;
