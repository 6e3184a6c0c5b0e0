//! Combinatorics of special nilpotent orbits in classical groups.
//!
//! Partitions and Lusztig symbols, generalized Springer parameters, the duality
//! between symplectic and orthogonal special partitions, Levi and endoscopic
//! induction, and the multiplicity formulas attached to a pair of symplectic
//! orbits with sign data.

pub mod classical;
pub mod cli;
pub mod duality;
pub mod error;
pub mod induction;
pub mod multiplicity;
pub mod partitions;
pub mod springer;
pub mod symbols;
pub mod verify;

pub use classical::{IntervalStructure, Kind, SignVector};
pub use error::{Error, Result};
pub use partitions::{IntSequence, Partition};
pub use symbols::Symbol;
