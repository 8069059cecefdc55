//! Reduction of `m`-regular set partitions.
//!
//! A partition of `[n]` is drawn as its linear representation, an arc
//! diagram joining consecutive elements of each block. Shortening every arc
//! by one and dropping the last vertex maps `m`-regular partitions of `[n]`
//! with `k` blocks bijectively onto `(m-1)`-regular partitions of `[n-1]`
//! with `k-1` blocks whenever `m >= 2`, and it keeps noncrossing partitions
//! noncrossing (and makes them poor). Applied to an ordinary noncrossing
//! partition the same step produces independent arcs and loops, which read
//! off as a 2-Motzkin path.
//!
//! Modules:
//! - [`partition`]: set partitions, canonical sequences, predicates.
//! - [`arc`]: arc diagrams (linear representations, with loops).
//! - [`reduction`]: the reduction and its inverse.
//! - [`motzkin`]: 2-Motzkin paths.
//! - [`enumeration`]: family generators and exact counting.
//! - [`identities`]: exhaustive identity sweeps with JSON-lines reports.

pub mod arc;
pub mod enumeration;
pub mod error;
pub mod identities;
pub mod motzkin;
pub mod partition;
pub mod reduction;

pub use arc::ArcDiagram;
pub use enumeration::{BigCount, FamilyFilter};
pub use error::{Error, Result};
pub use motzkin::{Step, TwoMotzkinPath};
pub use partition::{CanonicalSequence, Regularity, SetPartition};
