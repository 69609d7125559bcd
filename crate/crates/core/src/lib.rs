//! Computable pieces of the theory of GL-varieties: partition calculus,
//! Schur-functor numerics, the shift operation, exact Groebner machinery,
//! equivariant maps between symmetric-power spaces, and finite-level
//! geometry of GL-varieties.

pub mod equimap;
pub mod error;
pub mod glvariety;
pub mod partitions;
pub mod polyalg;
pub mod schur;
pub mod shift;

pub use error::{Error, ParseError, Result};
pub use partitions::{Magnitude, Partition, PartitionTuple};
pub use polyalg::{Budget, Ideal, MonomialOrder, Polynomial, Rational, Ring};
pub use schur::SchurExpansion;
