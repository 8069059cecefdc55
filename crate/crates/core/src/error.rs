use thiserror::Error;

use crate::partition::Regularity;

/// Everything that can go wrong while building, converting or reducing the
/// objects of this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty input")]
    EmptyInput,
    #[error("malformed block notation at byte {offset}: {reason}")]
    Syntax { offset: usize, reason: &'static str },
    #[error("element {0} appears more than once")]
    DuplicateElement(usize),
    #[error("element {element} is outside [1, {n}]")]
    ElementOutOfRange { element: usize, n: usize },
    #[error("blocks do not cover [1, {n}]: {missing} is missing")]
    NotCovering { n: usize, missing: usize },
    #[error("block {0} is empty")]
    EmptyBlock(usize),

    #[error("canonical sequence entry {index} has value {value}, violating the growth condition")]
    InvalidGrowth { index: usize, value: usize },
    #[error("malformed canonical sequence: {0}")]
    CanonicalSyntax(String),

    #[error("arc ({0}, {1}) has an endpoint outside the vertex range")]
    ArcOutOfRange(usize, usize),
    #[error("arc ({0}, {1}) is directed right-to-left")]
    BackwardArc(usize, usize),
    #[error("arc ({0}, {1}) is listed twice")]
    DuplicateArc(usize, usize),
    #[error("vertex {0} has more than one outgoing arc")]
    OutDegree(usize),
    #[error("vertex {0} has more than one incoming arc")]
    InDegree(usize),
    #[error("looped vertex {0} carries another arc")]
    LoopConflict(usize),
    #[error("diagram contains a loop at vertex {0}; it is not a linear representation")]
    LoopPresent(usize),

    #[error("the ground set is empty; nothing to reduce")]
    EmptyGroundSet,
    #[error("partition has regularity {0}; reduction needs regularity at least 2")]
    NotTwoRegular(Regularity),
    #[error("partition is not noncrossing")]
    NotNoncrossing,
    #[error("reduced diagram is invalid at vertex {0}")]
    NotReducible(usize),
    #[error("vertex {0} is not isolated after arc replacement")]
    LastVertexNotIsolated(usize),
    #[error("arcs share vertex {0}; diagram is not independent")]
    DependentArcs(usize),
    #[error("arcs ({0}, {1}) and ({2}, {3}) cross")]
    CrossingArcs(usize, usize, usize, usize),

    #[error("unknown step symbol {0:?}")]
    UnknownStep(char),
    #[error("step sequence is not a 2-Motzkin path")]
    InvalidPath,

    #[error("Narayana number N({n}, {k}) needs 1 <= k <= n")]
    NarayanaRange { n: usize, k: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
