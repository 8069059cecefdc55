//! Set partitions of `[n] = {1, ..., n}`, their canonical sequential form
//! (restricted growth strings), and the structural predicates used by the
//! rest of the crate: regularity, poorness and the two equivalent noncrossing
//! tests.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A partition of `[n]` into nonempty blocks.
///
/// Blocks are stored in increasing order of their minimum element and each
/// block is strictly increasing, so two partitions are equal exactly when
/// their `blocks` vectors are equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawPartition")]
pub struct SetPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

#[derive(Deserialize)]
struct RawPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl TryFrom<RawPartition> for SetPartition {
    type Error = Error;

    fn try_from(raw: RawPartition) -> Result<Self> {
        SetPartition::new(raw.n, raw.blocks)
    }
}

impl SetPartition {
    /// Builds a partition of `[n]`, normalizing block and element order.
    pub fn new(n: usize, mut blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; n + 1];
        for (idx, block) in blocks.iter_mut().enumerate() {
            if block.is_empty() {
                return Err(Error::EmptyBlock(idx + 1));
            }
            for &x in block.iter() {
                if x == 0 || x > n {
                    return Err(Error::ElementOutOfRange { element: x, n });
                }
                if seen[x] {
                    return Err(Error::DuplicateElement(x));
                }
                seen[x] = true;
            }
            block.sort_unstable();
        }
        if let Some(missing) = (1..=n).find(|&x| !seen[x]) {
            return Err(Error::NotCovering { n, missing });
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        Ok(SetPartition { n, blocks })
    }

    /// Builds a partition whose ground set is inferred as `[max element]`.
    pub fn from_blocks(blocks: Vec<Vec<usize>>) -> Result<Self> {
        let n = blocks.iter().flatten().copied().max().unwrap_or(0);
        Self::new(n, blocks)
    }

    /// The partition of the empty set.
    pub fn empty() -> Self {
        SetPartition {
            n: 0,
            blocks: Vec::new(),
        }
    }

    /// The partition of `[n]` into singletons.
    pub fn singletons(n: usize) -> Self {
        SetPartition {
            n,
            blocks: (1..=n).map(|x| vec![x]).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Number of blocks, the `k` of `P(n, k, m)`.
    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn to_canonical(&self) -> CanonicalSequence {
        let mut entries = vec![0; self.n];
        for (idx, block) in self.blocks.iter().enumerate() {
            for &x in block {
                entries[x - 1] = idx + 1;
            }
        }
        CanonicalSequence(entries)
    }

    pub fn from_canonical(seq: &CanonicalSequence) -> Self {
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for (pos, &label) in seq.0.iter().enumerate() {
            if label > blocks.len() {
                blocks.push(Vec::new());
            }
            blocks[label - 1].push(pos + 1);
        }
        SetPartition {
            n: seq.0.len(),
            blocks,
        }
    }

    /// Smallest distance between two elements sharing a block.
    pub fn regularity(&self) -> Regularity {
        self.blocks
            .iter()
            .flat_map(|b| b.windows(2).map(|w| w[1] - w[0]))
            .min()
            .map_or(Regularity::Infinite, Regularity::Finite)
    }

    pub fn is_m_regular(&self, m: usize) -> bool {
        self.regularity() >= Regularity::Finite(m)
    }

    /// Every block has at most two elements.
    pub fn is_poor(&self) -> bool {
        self.blocks.iter().all(|b| b.len() <= 2)
    }

    /// No `x < u < y < v` with `x, y` in one block and `u, v` in another.
    ///
    /// Works block pair by block pair: the two blocks are merged into a
    /// two-letter word and scanned for an `abab` or `baba` subsequence.
    pub fn is_noncrossing(&self) -> bool {
        for (i, a) in self.blocks.iter().enumerate() {
            for b in &self.blocks[i + 1..] {
                if interleaves(a, b) {
                    return false;
                }
            }
        }
        true
    }
}

/// Does the merged word of two disjoint sorted blocks contain `abab` or `baba`?
fn interleaves(a: &[usize], b: &[usize]) -> bool {
    // Length of the longest alternating prefix of abab (resp. baba) matched so far.
    let (mut from_a, mut from_b) = (0u8, 0u8);
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j == b.len() || (i < a.len() && a[i] < b[j]);
        if take_a {
            i += 1;
            if from_a % 2 == 0 {
                from_a += 1;
            }
            if from_b % 2 == 1 {
                from_b += 1;
            }
        } else {
            j += 1;
            if from_a % 2 == 1 {
                from_a += 1;
            }
            if from_b % 2 == 0 {
                from_b += 1;
            }
        }
        if from_a >= 4 || from_b >= 4 {
            return true;
        }
    }
    false
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for block in &self.blocks {
            f.write_str("(")?;
            for (i, x) in block.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl FromStr for SetPartition {
    type Err = Error;

    /// Parses block notation such as `(1,4)(2,5,7)(3)(6)`.
    fn from_str(text: &str) -> Result<Self> {
        parse_partition(text)
    }
}

/// Parses `block+` where `block := "(" int ("," int)* ")"`; no whitespace,
/// no leading zeros. The ground set is `[max element]`.
pub fn parse_partition(text: &str) -> Result<SetPartition> {
    if text.is_empty() {
        return Err(Error::EmptyInput);
    }
    let bytes = text.as_bytes();
    let mut pos = 0;
    let mut blocks = Vec::new();
    let syntax = |offset, reason| Error::Syntax { offset, reason };
    while pos < bytes.len() {
        if bytes[pos] != b'(' {
            return Err(syntax(pos, "expected '('"));
        }
        pos += 1;
        let mut block = Vec::new();
        loop {
            let start = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            if start == pos {
                return Err(syntax(pos, "expected an integer"));
            }
            if bytes[start] == b'0' && pos - start > 1 {
                return Err(syntax(start, "leading zero"));
            }
            let value: usize = text[start..pos]
                .parse()
                .map_err(|_| syntax(start, "integer too large"))?;
            block.push(value);
            match bytes.get(pos) {
                Some(b',') => pos += 1,
                Some(b')') => {
                    pos += 1;
                    break;
                }
                Some(_) => return Err(syntax(pos, "expected ',' or ')'")),
                None => return Err(syntax(pos, "unterminated block")),
            }
        }
        blocks.push(block);
    }
    SetPartition::from_blocks(blocks)
}

/// Canonical sequential form `a_1 a_2 ... a_n` of a partition: `a_i` is the
/// 1-based index of the block holding `i`, blocks numbered by first
/// occurrence.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalSequence(Vec<usize>);

impl CanonicalSequence {
    /// Validates the restricted growth condition `a_1 = 1`,
    /// `a_i <= 1 + max(a_1..a_{i-1})`.
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        let mut max = 0;
        for (index, &value) in entries.iter().enumerate() {
            if value == 0 || value > max + 1 {
                return Err(Error::InvalidGrowth {
                    index: index + 1,
                    value,
                });
            }
            max = max.max(value);
        }
        Ok(CanonicalSequence(entries))
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of distinct values, i.e. the block count.
    pub fn block_count(&self) -> usize {
        self.0.iter().copied().max().unwrap_or(0)
    }

    /// True iff no subsequence of the form `a..b..a..b` with `a != b` exists.
    ///
    /// Single left-to-right scan with a stack of open labels, where a label
    /// is open between its first and last occurrence. Revisiting a label that
    /// is not on top of the stack means some label opened after it is still
    /// open, which is exactly an `abab` occurrence.
    pub fn is_abab_free(&self) -> bool {
        let k = self.block_count();
        let mut last = vec![0; k + 1];
        for (pos, &label) in self.0.iter().enumerate() {
            last[label] = pos;
        }
        let mut seen = vec![false; k + 1];
        let mut open: Vec<usize> = Vec::new();
        for (pos, &label) in self.0.iter().enumerate() {
            if !seen[label] {
                seen[label] = true;
                open.push(label);
            } else if open.last() != Some(&label) {
                return false;
            }
            if pos == last[label] {
                open.pop();
            }
        }
        true
    }
}

impl fmt::Display for CanonicalSequence {
    /// Digit string when every entry is at most 9, comma-separated otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let compact = self.0.iter().all(|&v| v <= 9);
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 && !compact {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl FromStr for CanonicalSequence {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let entries: std::result::Result<Vec<usize>, _> = if text.contains(',') {
            text.split(',')
                .map(|t| t.parse::<usize>().map_err(|_| format!("bad entry {t:?}")))
                .collect()
        } else {
            text.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| format!("bad digit {c:?}"))
                })
                .collect()
        };
        CanonicalSequence::new(entries.map_err(Error::CanonicalSyntax)?)
    }
}

impl From<&SetPartition> for CanonicalSequence {
    fn from(p: &SetPartition) -> Self {
        p.to_canonical()
    }
}

impl From<&CanonicalSequence> for SetPartition {
    fn from(s: &CanonicalSequence) -> Self {
        SetPartition::from_canonical(s)
    }
}

/// Regularity of a partition: a positive integer, or infinity for a
/// partition whose blocks are all singletons.
///
/// `Infinite` compares greater than every finite value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Regularity {
    Finite(usize),
    Infinite,
}

impl Regularity {
    /// `self + 1`, with infinity absorbing.
    pub fn succ(self) -> Self {
        match self {
            Regularity::Finite(m) => Regularity::Finite(m + 1),
            Regularity::Infinite => Regularity::Infinite,
        }
    }

    /// `self - 1` for finite values of at least 2.
    pub fn pred(self) -> Option<Self> {
        match self {
            Regularity::Finite(m) if m >= 2 => Some(Regularity::Finite(m - 1)),
            Regularity::Finite(_) => None,
            Regularity::Infinite => Some(Regularity::Infinite),
        }
    }
}

impl fmt::Display for Regularity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Regularity::Finite(m) => write!(f, "{m}"),
            Regularity::Infinite => f.write_str("inf"),
        }
    }
}

impl FromStr for Regularity {
    type Err = String;

    fn from_str(text: &str) -> std::result::Result<Self, String> {
        match text {
            "inf" | "infinity" | "∞" => Ok(Regularity::Infinite),
            _ => match text.parse::<usize>() {
                Ok(m) if m >= 1 => Ok(Regularity::Finite(m)),
                _ => Err(format!(
                    "regularity must be a positive integer or 'inf', got {text:?}"
                )),
            },
        }
    }
}
