//! Generalized Petersen graphs: construction, exact odd girth through an
//! integer-program reduction, explicit homomorphisms and circular chromatic
//! number bounds, each cross-checked against an independent search.

pub mod bounds;
pub mod error;
pub mod graph;
pub mod hom;
pub mod odd_girth;
pub mod petersen;
pub mod rational;

pub use error::{Error, Result};
pub use graph::SimpleGraph;
pub use petersen::GPParams;
pub use rational::Rational;
