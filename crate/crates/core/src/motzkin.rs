//! 2-Motzkin paths and their correspondence with noncrossing partitions.
//!
//! A noncrossing partition of `[n]` reduces to an independent noncrossing
//! diagram on `[n - 1]`; reading that diagram vertex by vertex gives a path:
//! a loop is a straight level step `L`, an isolated vertex a wavy level step
//! `W`, and an arc contributes `U` at its left end and `D` at its right end.

use std::fmt;
use std::str::FromStr;

use crate::arc::ArcDiagram;
use crate::error::{Error, Result};
use crate::partition::SetPartition;
use crate::reduction::{expand_independent, reduce_noncrossing};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    Up,
    Down,
    /// Straight level step.
    Level,
    /// Wavy level step.
    Wavy,
}

impl Step {
    pub const ALL: [Step; 4] = [Step::Up, Step::Down, Step::Level, Step::Wavy];

    pub fn symbol(self) -> char {
        match self {
            Step::Up => 'U',
            Step::Down => 'D',
            Step::Level => 'L',
            Step::Wavy => 'W',
        }
    }

    /// Accepts either case.
    pub fn from_symbol(c: char) -> Result<Self> {
        match c.to_ascii_uppercase() {
            'U' => Ok(Step::Up),
            'D' => Ok(Step::Down),
            'L' => Ok(Step::Level),
            'W' => Ok(Step::Wavy),
            _ => Err(Error::UnknownStep(c)),
        }
    }
}

/// True iff no prefix has more `D` than `U` and the totals agree.
pub fn validate_path(steps: &[Step]) -> bool {
    let mut height = 0usize;
    for step in steps {
        match step {
            Step::Up => height += 1,
            Step::Down => match height.checked_sub(1) {
                Some(h) => height = h,
                None => return false,
            },
            Step::Level | Step::Wavy => {}
        }
    }
    height == 0
}

/// A validated 2-Motzkin path.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TwoMotzkinPath(Vec<Step>);

impl TwoMotzkinPath {
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        if validate_path(&steps) {
            Ok(TwoMotzkinPath(steps))
        } else {
            Err(Error::InvalidPath)
        }
    }

    pub fn steps(&self) -> &[Step] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of steps that are `L` or `U`.
    pub fn level_or_up_count(&self) -> usize {
        self.0
            .iter()
            .filter(|s| matches!(s, Step::Level | Step::Up))
            .count()
    }

    /// Every valid path of the given length, in lexicographic step order.
    pub fn all(length: usize) -> Vec<TwoMotzkinPath> {
        fn extend(
            prefix: &mut Vec<Step>,
            height: usize,
            length: usize,
            out: &mut Vec<TwoMotzkinPath>,
        ) {
            let remaining = length - prefix.len();
            if remaining == 0 {
                out.push(TwoMotzkinPath(prefix.clone()));
                return;
            }
            for step in Step::ALL {
                let next = match step {
                    Step::Up if height < remaining - 1 => height + 1,
                    Step::Up => continue,
                    Step::Down if height > 0 => height - 1,
                    Step::Down => continue,
                    _ if height < remaining => height,
                    _ => continue,
                };
                prefix.push(step);
                extend(prefix, next, length, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        extend(&mut Vec::with_capacity(length), 0, length, &mut out);
        out
    }
}

impl fmt::Display for TwoMotzkinPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|s| write!(f, "{}", s.symbol()))
    }
}

impl FromStr for TwoMotzkinPath {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let steps = text
            .chars()
            .map(Step::from_symbol)
            .collect::<Result<Vec<_>>>()?;
        TwoMotzkinPath::new(steps)
    }
}

pub fn diagram_to_path(d: &ArcDiagram) -> Result<TwoMotzkinPath> {
    d.check_independent_noncrossing()?;
    let mut steps = vec![Step::Wavy; d.n()];
    for &(i, j) in d.arcs() {
        if i == j {
            steps[i - 1] = Step::Level;
        } else {
            steps[i - 1] = Step::Up;
            steps[j - 1] = Step::Down;
        }
    }
    Ok(TwoMotzkinPath(steps))
}

/// Matches each `D` with the most recent unmatched `U`.
pub fn path_to_diagram(path: &TwoMotzkinPath) -> ArcDiagram {
    let mut open = Vec::new();
    let mut arcs = Vec::new();
    for (idx, step) in path.steps().iter().enumerate() {
        let v = idx + 1;
        match step {
            Step::Up => open.push(v),
            Step::Down => arcs.push((open.pop().expect("validated path"), v)),
            Step::Level => arcs.push((v, v)),
            Step::Wavy => {}
        }
    }
    ArcDiagram::new(path.len(), arcs).expect("stack matching yields independent arcs")
}

/// Path of length `n - 1` with `n - k` steps in `{L, U}`.
pub fn partition_to_path(p: &SetPartition) -> Result<TwoMotzkinPath> {
    diagram_to_path(&reduce_noncrossing(p)?)
}

/// The noncrossing partition of `[len + 1]` mapping to `path`.
pub fn path_to_partition(path: &TwoMotzkinPath) -> SetPartition {
    expand_independent(&path_to_diagram(path))
        .expect("diagrams read off a path are independent and noncrossing")
}
