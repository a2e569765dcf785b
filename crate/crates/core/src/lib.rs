//! Exact Laurent-polynomial machinery for super-potentials of Lagrangian tori
//! in cyclic covers: periods, quotient lattices, mutations, tangency numbers
//! and numerical critical points.

pub mod catalog;
pub mod cli;
pub mod cover;
pub mod critical;
pub mod lattice;
pub mod laurent;
pub mod matrix;
pub mod mutation;
pub mod periods;
mod serde_util;
