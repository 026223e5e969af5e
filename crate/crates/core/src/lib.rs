//! Exact ℚ(i) computations for cocycles, Schürmann triples and low-degree
//! Hochschild cohomology of universal compact quantum group algebras.

pub mod algebra;
pub mod arith;
pub mod cocycle;
pub mod cohomology;
pub mod counterexamples;
pub mod error;
pub mod functional;
pub mod io;
pub mod par;
pub mod representation;
pub mod reproduce;
pub mod sampling;

pub use error::{Error, Result};

#[cfg(test)]
pub(crate) mod testutil;
