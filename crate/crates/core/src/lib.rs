//! Numerical verification of Poisson, Müntz, Möbius and Voronoi type
//! summation identities.

pub mod cli;
pub mod error;
pub mod identities;
pub mod mellin;
pub mod operators;
pub mod quad;
pub mod sieve;
pub mod special;
pub mod sum;

pub use error::{Error, Result};
