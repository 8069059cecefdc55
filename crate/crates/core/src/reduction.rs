//! The reduction algorithm and its inverse.
//!
//! Reducing shortens every arc `(i, j)` of a linear representation to
//! `(i, j - 1)` and then drops vertex `n`. On partitions with regularity at
//! least 2 this is a bijection `P(n, k, m) -> P(n - 1, k - 1, m - 1)`; on
//! noncrossing partitions of any regularity it lands on independent
//! noncrossing arc/loop diagrams.

use crate::arc::ArcDiagram;
use crate::error::{Error, Result};
use crate::partition::{Regularity, SetPartition};

/// Replaces each arc `(i, j)` by `(i, j - 1)` and deletes vertex `n`.
/// Arcs `(i, i + 1)` become loops.
pub fn reduce_arcs(d: &ArcDiagram) -> Result<ArcDiagram> {
    let n = d.n();
    if n == 0 {
        return Err(Error::EmptyGroundSet);
    }
    if let Some(v) = d.loops().next() {
        return Err(Error::LoopPresent(v));
    }
    let shortened: Vec<(usize, usize)> = d.arcs().iter().map(|&(i, j)| (i, j - 1)).collect();
    if let Some(&(i, j)) = shortened.iter().find(|&&(i, j)| i == n || j == n) {
        return Err(Error::LastVertexNotIsolated(if i == n { i } else { j }));
    }
    ArcDiagram::new(n - 1, shortened).map_err(|e| match e {
        Error::LoopConflict(v) | Error::InDegree(v) | Error::OutDegree(v) => Error::NotReducible(v),
        other => other,
    })
}

/// Appends vertex `n + 1` and lengthens every arc or loop `(i, j)` to
/// `(i, j + 1)`. The result never has loops.
pub fn expand_arcs(d: &ArcDiagram) -> Result<ArcDiagram> {
    let lengthened = d.arcs().iter().map(|&(i, j)| (i, j + 1)).collect();
    ArcDiagram::new(d.n() + 1, lengthened)
}

/// Reduction of a partition with regularity at least 2.
pub fn reduce_partition(p: &SetPartition) -> Result<SetPartition> {
    if p.n() == 0 {
        return Err(Error::EmptyGroundSet);
    }
    let regularity = p.regularity();
    if regularity < Regularity::Finite(2) {
        return Err(Error::NotTwoRegular(regularity));
    }
    reduce_arcs(&ArcDiagram::from_partition(p))?.to_partition()
}

/// Inverse of [`reduce_partition`]; defined on every partition.
pub fn expand_partition(q: &SetPartition) -> SetPartition {
    expand_arcs(&ArcDiagram::from_partition(q))
        .and_then(|d| d.to_partition())
        .expect("expanding a linear representation yields a linear representation")
}

/// Reduction of a noncrossing partition of any regularity to an
/// independent noncrossing arc/loop diagram with `n - k` arcs and loops.
pub fn reduce_noncrossing(p: &SetPartition) -> Result<ArcDiagram> {
    if !p.is_noncrossing() {
        return Err(Error::NotNoncrossing);
    }
    reduce_arcs(&ArcDiagram::from_partition(p))
}

/// Inverse of [`reduce_noncrossing`].
pub fn expand_independent(d: &ArcDiagram) -> Result<SetPartition> {
    d.check_independent_noncrossing()?;
    expand_arcs(d)?.to_partition()
}
