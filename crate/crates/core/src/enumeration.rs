//! Exhaustive generation of partition families and exact counting.
//!
//! Partitions are generated as restricted growth strings by depth-first
//! search in lexicographic order. The search prunes on the block count, on
//! regularity (an element is never placed closer than `m` to the previous
//! element of its block), on poorness and on crossings, so every emitted
//! string already satisfies the filter.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partition::{CanonicalSequence, Regularity, SetPartition};

/// Arbitrary-precision nonnegative count.
pub type BigCount = BigUint;

/// Selects a family such as `P(n, k, m)`, `P(abab; n, k, m)` or
/// `P_2(abab; n, k, m)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FamilyFilter {
    pub k: Option<usize>,
    pub m: Regularity,
    pub noncrossing: bool,
    pub poor: bool,
}

impl Default for FamilyFilter {
    fn default() -> Self {
        FamilyFilter {
            k: None,
            m: Regularity::Finite(1),
            noncrossing: false,
            poor: false,
        }
    }
}

impl FamilyFilter {
    /// `P(n, k, m)`.
    pub fn regular(k: usize, m: usize) -> Self {
        FamilyFilter {
            k: Some(k),
            m: Regularity::Finite(m),
            ..Default::default()
        }
    }

    pub fn blocks(mut self, k: usize) -> Self {
        self.k = Some(k);
        self
    }

    pub fn min_gap(mut self, m: Regularity) -> Self {
        self.m = m;
        self
    }

    pub fn noncrossing(mut self) -> Self {
        self.noncrossing = true;
        self
    }

    pub fn poor(mut self) -> Self {
        self.poor = true;
        self
    }

    /// Post-hoc membership test, independent of the pruned search.
    pub fn accepts(&self, p: &SetPartition) -> bool {
        self.k.map_or(true, |k| p.block_count() == k)
            && p.regularity() >= self.m
            && (!self.noncrossing || p.is_noncrossing())
            && (!self.poor || p.is_poor())
    }
}

/// Depth-first iterator over the restricted growth strings of a family.
/// Labels are 0-based internally.
#[derive(Debug, Clone)]
pub struct RgsIter {
    n: usize,
    filter: FamilyFilter,
    labels: Vec<usize>,
    first: Vec<usize>,
    last: Vec<usize>,
    size: Vec<usize>,
    // previous `last` of the block extended at each position (None for a new block)
    undo: Vec<Option<usize>>,
    started: bool,
    done: bool,
}

impl RgsIter {
    pub fn new(n: usize, filter: FamilyFilter) -> Self {
        RgsIter {
            n,
            filter,
            labels: Vec::with_capacity(n),
            first: Vec::new(),
            last: Vec::new(),
            size: Vec::new(),
            undo: Vec::with_capacity(n),
            started: false,
            done: false,
        }
    }

    fn try_place(&mut self, label: usize) -> bool {
        let pos = self.labels.len();
        let blocks = self.size.len();
        let after = self.n - pos - 1;
        if label == blocks {
            if let Some(k) = self.filter.k {
                if blocks + 1 > k || blocks + 1 + after < k {
                    return false;
                }
            }
            self.first.push(pos);
            self.last.push(pos);
            self.size.push(1);
            self.undo.push(None);
        } else {
            if let Some(k) = self.filter.k {
                if blocks + after < k {
                    return false;
                }
            }
            if self.filter.poor && self.size[label] >= 2 {
                return false;
            }
            let prev = self.last[label];
            if Regularity::Finite(pos - prev) < self.filter.m {
                return false;
            }
            // With a noncrossing prefix, joining `label` creates a crossing iff some
            // element after its last occurrence belongs to a block that started before it.
            if self.filter.noncrossing
                && self.labels[prev + 1..]
                    .iter()
                    .any(|&other| self.first[other] < prev)
            {
                return false;
            }
            self.last[label] = pos;
            self.size[label] += 1;
            self.undo.push(Some(prev));
        }
        self.labels.push(label);
        true
    }

    fn unplace(&mut self) -> Option<usize> {
        let label = self.labels.pop()?;
        match self.undo.pop().flatten() {
            Some(prev) => {
                self.last[label] = prev;
                self.size[label] -= 1;
            }
            None => {
                self.first.pop();
                self.last.pop();
                self.size.pop();
            }
        }
        Some(label)
    }

    fn complete(&self) -> bool {
        self.filter.k.map_or(true, |k| k == self.size.len())
    }

    /// Runs the search from the current state, trying labels `>= from` at
    /// the next open position.
    fn advance(&mut self, mut from: usize) -> bool {
        loop {
            if self.labels.len() == self.n {
                if self.complete() {
                    return true;
                }
            } else {
                let blocks = self.size.len();
                if (from..=blocks).any(|label| self.try_place(label)) {
                    from = 0;
                    continue;
                }
            }
            match self.unplace() {
                Some(label) => from = label + 1,
                None => return false,
            }
        }
    }

    /// Current string with 0-based labels.
    fn current(&self) -> &[usize] {
        &self.labels
    }

    fn step(&mut self) -> bool {
        if self.done {
            return false;
        }
        let found = if self.started {
            match self.unplace() {
                Some(label) => self.advance(label + 1),
                None => false,
            }
        } else {
            self.started = true;
            self.advance(0)
        };
        self.done = !found;
        found
    }
}

impl Iterator for RgsIter {
    type Item = CanonicalSequence;

    fn next(&mut self) -> Option<CanonicalSequence> {
        if self.step() {
            let entries = self.current().iter().map(|&l| l + 1).collect();
            Some(CanonicalSequence::new(entries).expect("search emits restricted growth strings"))
        } else {
            None
        }
    }
}

/// Every partition of `[n]` accepted by `filter`, in lexicographic order of
/// canonical sequences.
pub fn generate(n: usize, filter: FamilyFilter) -> impl Iterator<Item = SetPartition> {
    RgsIter::new(n, filter).map(|s| SetPartition::from_canonical(&s))
}

/// Size of the family, counted by walking the same search without
/// materializing partitions.
pub fn count_family(n: usize, filter: FamilyFilter) -> BigCount {
    let mut iter = RgsIter::new(n, filter);
    let mut count = 0u64;
    while iter.step() {
        count += 1;
    }
    BigCount::from(count)
}

/// `C(n, r)`, zero outside `0 <= r <= n`, and zero for negative `n`.
pub fn binomial(n: i64, r: i64) -> BigCount {
    if n < 0 || r < 0 || r > n {
        return BigCount::zero();
    }
    let r = r.min(n - r);
    let mut acc = BigCount::one();
    for i in 0..r {
        // acc * (n - i) is divisible by i + 1 since acc = C(n, i).
        acc = acc * BigCount::from((n - i) as u64) / BigCount::from((i + 1) as u64);
    }
    acc
}

/// `C(2n, n) / (n + 1)`.
pub fn catalan(n: usize) -> BigCount {
    binomial(2 * n as i64, n as i64) / BigCount::from(n as u64 + 1)
}

/// Catalan numbers `C_0..=C_max` from `C_{n+1} = sum C_i C_{n-i}`; shares no
/// code with [`catalan`].
pub fn catalan_recurrence(max: usize) -> Vec<BigCount> {
    let mut table = vec![BigCount::one()];
    for n in 0..max {
        let next = (0..=n).map(|i| &table[i] * &table[n - i]).sum();
        table.push(next);
    }
    table
}

/// `C(n, k) C(n, k - 1) / n` for `1 <= k <= n`.
pub fn narayana(n: usize, k: usize) -> Result<BigCount> {
    if k == 0 || k > n {
        return Err(Error::NarayanaRange { n, k });
    }
    let (n_, k_) = (n as i64, k as i64);
    Ok(binomial(n_, k_) * binomial(n_, k_ - 1) / BigCount::from(n as u64))
}

/// Closed form for `p_2(abab; N, K, 1)`: choose the `2(N - K)` paired
/// positions, then a noncrossing perfect matching on them.
pub fn poor_noncrossing_closed(n: usize, k: usize) -> BigCount {
    if k > n || 2 * (n - k) > n {
        return BigCount::zero();
    }
    binomial(n as i64, 2 * (n - k) as i64) * catalan(n - k)
}

/// Stirling number of the second kind by `S(n, k) = k S(n-1, k) + S(n-1, k-1)`.
pub fn stirling2(n: usize, k: usize) -> BigCount {
    if k > n {
        return BigCount::zero();
    }
    // row[j] = S(i, j) for the current i
    let mut row = vec![BigCount::zero(); k + 1];
    row[0] = BigCount::one();
    for i in 1..=n {
        for j in (1..=k.min(i)).rev() {
            row[j] = &row[j] * BigCount::from(j as u64) + &row[j - 1];
        }
        row[0] = BigCount::zero();
    }
    row[k].clone()
}
