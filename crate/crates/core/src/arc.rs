//! Linear representations of partitions as arc diagrams on `[n]`.
//!
//! An arc `(i, j)` with `i < j` joins consecutive elements of a block; an arc
//! `(i, i)` is a loop. Loops only show up on the reduced side of a
//! noncrossing partition, where every arc and loop is vertex-disjoint.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::SetPartition;

/// Vertices `1..=n` with left-to-right arcs and loops.
///
/// Arcs are kept sorted lexicographically. Every vertex has at most one
/// outgoing and one incoming non-loop arc, and a looped vertex carries no
/// other arc.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawDiagram")]
pub struct ArcDiagram {
    n: usize,
    arcs: Vec<(usize, usize)>,
}

#[derive(Deserialize)]
struct RawDiagram {
    n: usize,
    arcs: Vec<(usize, usize)>,
}

impl TryFrom<RawDiagram> for ArcDiagram {
    type Error = Error;

    fn try_from(raw: RawDiagram) -> Result<Self> {
        ArcDiagram::new(raw.n, raw.arcs)
    }
}

impl ArcDiagram {
    pub fn new(n: usize, mut arcs: Vec<(usize, usize)>) -> Result<Self> {
        arcs.sort_unstable();
        let mut out = vec![false; n + 1];
        let mut inc = vec![false; n + 1];
        let mut looped = vec![false; n + 1];
        for (idx, &(i, j)) in arcs.iter().enumerate() {
            if i == 0 || j == 0 || i > n || j > n {
                return Err(Error::ArcOutOfRange(i, j));
            }
            if j < i {
                return Err(Error::BackwardArc(i, j));
            }
            if idx > 0 && arcs[idx - 1] == (i, j) {
                return Err(Error::DuplicateArc(i, j));
            }
            if i == j {
                looped[i] = true;
                continue;
            }
            if out[i] {
                return Err(Error::OutDegree(i));
            }
            if inc[j] {
                return Err(Error::InDegree(j));
            }
            out[i] = true;
            inc[j] = true;
        }
        if let Some(v) = (1..=n).find(|&v| looped[v] && (out[v] || inc[v])) {
            return Err(Error::LoopConflict(v));
        }
        Ok(ArcDiagram { n, arcs })
    }

    /// Linear representation: one arc per pair of consecutive block elements.
    pub fn from_partition(p: &SetPartition) -> Self {
        let mut arcs: Vec<(usize, usize)> = p
            .blocks()
            .iter()
            .flat_map(|b| b.windows(2).map(|w| (w[0], w[1])))
            .collect();
        arcs.sort_unstable();
        ArcDiagram { n: p.n(), arcs }
    }

    /// Reads the blocks back as the vertex sets of connected components.
    pub fn to_partition(&self) -> Result<SetPartition> {
        if let Some(&(i, _)) = self.arcs.iter().find(|(i, j)| i == j) {
            return Err(Error::LoopPresent(i));
        }
        let mut next = vec![0; self.n + 1];
        let mut has_pred = vec![false; self.n + 1];
        for &(i, j) in &self.arcs {
            next[i] = j;
            has_pred[j] = true;
        }
        let mut blocks = Vec::new();
        for start in (1..=self.n).filter(|&v| !has_pred[v]) {
            let mut block = vec![start];
            let mut v = start;
            while next[v] != 0 {
                v = next[v];
                block.push(v);
            }
            blocks.push(block);
        }
        // Path starts are visited in increasing order, so blocks are already normalized.
        SetPartition::new(self.n, blocks)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn loops(&self) -> impl Iterator<Item = usize> + '_ {
        self.arcs.iter().filter(|(i, j)| i == j).map(|&(i, _)| i)
    }

    pub fn loop_count(&self) -> usize {
        self.loops().count()
    }

    pub fn has_loops(&self) -> bool {
        self.loops().next().is_some()
    }

    /// Number of weakly connected components; a loop does not join anything.
    pub fn component_count(&self) -> usize {
        let proper = self.arcs.iter().filter(|(i, j)| i != j).count();
        self.n - proper
    }

    /// First pair of non-loop arcs `(i, j)`, `(u, v)` with `i < u < j < v`.
    pub fn first_crossing(&self) -> Option<((usize, usize), (usize, usize))> {
        let proper: Vec<_> = self.arcs.iter().copied().filter(|(i, j)| i != j).collect();
        for (a, &(i, j)) in proper.iter().enumerate() {
            for &(u, v) in &proper[a + 1..] {
                if i < u && u < j && j < v {
                    return Some(((i, j), (u, v)));
                }
            }
        }
        None
    }

    pub fn has_crossing(&self) -> bool {
        self.first_crossing().is_some()
    }

    /// First vertex touched by two different arcs or loops.
    pub fn shared_vertex(&self) -> Option<usize> {
        let mut used = vec![false; self.n + 1];
        for &(i, j) in &self.arcs {
            for v in if i == j { vec![i] } else { vec![i, j] } {
                if used[v] {
                    return Some(v);
                }
                used[v] = true;
            }
        }
        None
    }

    /// All arcs and loops pairwise vertex-disjoint.
    pub fn is_independent(&self) -> bool {
        self.shared_vertex().is_none()
    }

    /// Fails unless the diagram is independent and noncrossing.
    pub(crate) fn check_independent_noncrossing(&self) -> Result<()> {
        if let Some(v) = self.shared_vertex() {
            return Err(Error::DependentArcs(v));
        }
        if let Some(((i, j), (u, v))) = self.first_crossing() {
            return Err(Error::CrossingArcs(i, j, u, v));
        }
        Ok(())
    }

    /// Nesting level of each arc, in the order of `arcs()`.
    ///
    /// Loops and innermost arcs sit on level 1; an arc is one level above the
    /// highest arc or loop strictly inside its span.
    pub fn nesting_levels(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.arcs.len()).collect();
        order.sort_by_key(|&a| self.arcs[a].1 - self.arcs[a].0);
        let mut level = vec![0; self.arcs.len()];
        for &a in &order {
            let (i, j) = self.arcs[a];
            let inner = self
                .arcs
                .iter()
                .zip(&level)
                .filter(|&(&(u, v), _)| i < u && v < j)
                .map(|(_, &l)| l)
                .max()
                .unwrap_or(0);
            level[a] = inner + 1;
        }
        level
    }

    /// ASCII drawing: vertex labels on the bottom line, loops as `o` right
    /// above their vertex, and each arc as `/___\` on the row matching its
    /// nesting level with `|` legs down to the labels. Two arcs meeting at a
    /// vertex on the same row share a `+`.
    pub fn render_ascii(&self) -> String {
        let width = self.n.max(1).to_string().len() + 1;
        let cols = if self.n == 0 {
            0
        } else {
            (self.n - 1) * width + 1
        };
        let col = |v: usize| (v - 1) * width;
        let levels = self.nesting_levels();
        let height = levels.iter().copied().max().unwrap_or(0);
        // rows[0] is the row directly above the labels.
        let mut rows = vec![vec![b' '; cols]; height];
        let mut order: Vec<usize> = (0..self.arcs.len()).collect();
        order.sort_by_key(|&a| std::cmp::Reverse(levels[a]));
        for a in order {
            let (i, j) = self.arcs[a];
            let row = levels[a] - 1;
            if i == j {
                rows[row][col(i)] = b'o';
                continue;
            }
            for c in col(i) + 1..col(j) {
                rows[row][c] = b'_';
            }
            for (c, glyph) in [(col(i), b'/'), (col(j), b'\\')] {
                let cell = &mut rows[row][c];
                *cell = if matches!(*cell, b'/' | b'\\' | b'+') {
                    b'+'
                } else {
                    glyph
                };
                for below in rows.iter_mut().take(row) {
                    below[c] = b'|';
                }
            }
        }
        let mut out = String::new();
        for row in rows.iter().rev() {
            out.push_str(String::from_utf8_lossy(row).trim_end());
            out.push('\n');
        }
        let mut labels = String::new();
        for v in 1..=self.n {
            labels.push_str(&format!("{v:<width$}"));
        }
        out.push_str(labels.trim_end());
        out.push('\n');
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(text: &str) -> SetPartition {
        text.parse().unwrap()
    }

    fn d(n: usize, arcs: &[(usize, usize)]) -> ArcDiagram {
        ArcDiagram::new(n, arcs.to_vec()).unwrap()
    }

    #[test]
    fn linear_representation() {
        assert_eq!(
            ArcDiagram::from_partition(&p("(1,5)(2,4)(3)")),
            d(5, &[(1, 5), (2, 4)])
        );
        assert_eq!(ArcDiagram::from_partition(&p("(1)(2)(3)")), d(3, &[]));
        assert_eq!(
            ArcDiagram::from_partition(&p("(1,4)(2,5,7)(3)(6)")),
            d(7, &[(1, 4), (2, 5), (5, 7)])
        );
        assert_eq!(
            ArcDiagram::from_partition(&p("(1,4)(2,5,7)(3)(6)")).component_count(),
            4
        );
    }

    #[test]
    fn back_to_partition() {
        assert_eq!(
            d(4, &[(1, 4), (2, 3)]).to_partition().unwrap(),
            p("(1,4)(2,3)")
        );
        assert_eq!(d(3, &[]).to_partition().unwrap(), p("(1)(2)(3)"));
        assert_eq!(
            d(4, &[(1, 3), (3, 4)]).to_partition().unwrap(),
            p("(1,3,4)(2)")
        );
        assert_eq!(d(2, &[(1, 1)]).to_partition(), Err(Error::LoopPresent(1)));
    }

    #[test]
    fn constructor_rejects_invalid_diagrams() {
        assert_eq!(
            ArcDiagram::new(3, vec![(1, 4)]),
            Err(Error::ArcOutOfRange(1, 4))
        );
        assert_eq!(
            ArcDiagram::new(3, vec![(0, 2)]),
            Err(Error::ArcOutOfRange(0, 2))
        );
        assert_eq!(
            ArcDiagram::new(3, vec![(3, 1)]),
            Err(Error::BackwardArc(3, 1))
        );
        assert_eq!(
            ArcDiagram::new(3, vec![(1, 2), (1, 2)]),
            Err(Error::DuplicateArc(1, 2))
        );
        assert_eq!(
            ArcDiagram::new(3, vec![(1, 2), (1, 3)]),
            Err(Error::OutDegree(1))
        );
        assert_eq!(
            ArcDiagram::new(3, vec![(1, 3), (2, 3)]),
            Err(Error::InDegree(3))
        );
        assert_eq!(
            ArcDiagram::new(3, vec![(1, 1), (1, 3)]),
            Err(Error::LoopConflict(1))
        );
        assert_eq!(
            ArcDiagram::new(3, vec![(2, 2), (1, 2)]),
            Err(Error::LoopConflict(2))
        );
    }

    #[test]
    fn crossing() {
        assert!(d(5, &[(1, 4), (2, 5)]).has_crossing());
        assert!(!d(5, &[(1, 5), (2, 4)]).has_crossing());
        assert!(!d(5, &[(1, 1), (2, 5), (3, 3)]).has_crossing());
        // shared endpoint is not a crossing
        assert!(!d(5, &[(1, 3), (3, 5)]).has_crossing());
    }

    #[test]
    fn independence() {
        assert!(d(5, &[(1, 1), (2, 5), (3, 3)]).is_independent());
        assert!(!d(4, &[(1, 3), (3, 4)]).is_independent());
        assert!(d(1, &[]).is_independent());
    }

    #[test]
    fn nesting_levels_follow_containment() {
        let diagram = d(5, &[(1, 5), (2, 4)]);
        assert_eq!(diagram.nesting_levels(), vec![2, 1]);
        let diagram = d(5, &[(1, 1), (2, 5), (3, 3)]);
        assert_eq!(diagram.nesting_levels(), vec![1, 2, 1]);
    }

    #[test]
    fn render_single_arc() {
        let text = d(4, &[(2, 4)]).render_ascii();
        assert_eq!(text, "  /___\\\n1 2 3 4\n");
    }

    #[test]
    fn render_loop() {
        assert_eq!(d(1, &[(1, 1)]).render_ascii(), "o\n1\n");
    }

    #[test]
    fn render_nested_arcs() {
        let text = d(5, &[(1, 5), (2, 4)]).render_ascii();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines, vec!["/_______\\", "| /___\\ |", "1 2 3 4 5"]);
    }

    #[test]
    fn render_shared_endpoint_and_wide_labels() {
        assert_eq!(d(3, &[(1, 2), (2, 3)]).render_ascii(), "/_+_\\\n1 2 3\n");
        let text = d(10, &[(9, 10)]).render_ascii();
        assert_eq!(
            text.lines().last().unwrap(),
            "1  2  3  4  5  6  7  8  9  10"
        );
        assert_eq!(
            text.lines().next().unwrap(),
            "                        /__\\"
        );
        assert_eq!(d(0, &[]).render_ascii(), "\n");
    }

    #[test]
    fn json_round_trip() {
        let diagram = d(5, &[(3, 3), (1, 1), (2, 5)]);
        let text = serde_json::to_string(&diagram).unwrap();
        assert_eq!(text, r#"{"n":5,"arcs":[[1,1],[2,5],[3,3]]}"#);
        assert_eq!(serde_json::from_str::<ArcDiagram>(&text).unwrap(), diagram);
        assert!(serde_json::from_str::<ArcDiagram>(r#"{"n":2,"arcs":[[2,1]]}"#).is_err());
    }
}
