//! Exhaustive verification of the counting identities behind the reduction
//! bijections.
//!
//! Each sweep walks a grid of parameter cells, computes both sides of one
//! identity independently and, where a bijection is involved, pushes every
//! member of both families through the map and back. Cells are independent
//! and may run on several threads; reports always come back ordered by cell.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::arc::ArcDiagram;
use crate::enumeration::{
    binomial, catalan_recurrence, count_family, generate, narayana, poor_noncrossing_closed,
    BigCount, FamilyFilter,
};
use crate::motzkin::{partition_to_path, path_to_partition, TwoMotzkinPath};
use crate::partition::{Regularity, SetPartition};
use crate::reduction::{expand_partition, reduce_noncrossing, reduce_partition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Identity {
    /// `p(n, k, m) = p(n-1, k-1, m-1)` for `m >= 2`.
    Eq2,
    /// `p(abab; n, k, m) = p_2(abab; n-1, k-1, m-1)` for `m >= 2`.
    Eq3,
    /// Narayana numbers as a Catalan-weighted binomial sum.
    Narayana,
    /// Narayana numbers by loop count of the reduced diagram.
    Eq5,
    /// Noncrossing partitions versus 2-Motzkin paths.
    Motzkin,
    /// `p_2(abab; n, n-k, 2) = p(abab; n+1, n-k+1, 3)`.
    Rna,
}

impl Identity {
    pub const ALL: [Identity; 6] = [
        Identity::Eq2,
        Identity::Eq3,
        Identity::Narayana,
        Identity::Eq5,
        Identity::Motzkin,
        Identity::Rna,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Identity::Eq2 => "eq2",
            Identity::Eq3 => "eq3",
            Identity::Narayana => "narayana",
            Identity::Eq5 => "eq5",
            Identity::Motzkin => "motzkin",
            Identity::Rna => "rna",
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Identity {
    type Err = String;

    fn from_str(text: &str) -> Result<Self, String> {
        Identity::ALL
            .into_iter()
            .find(|id| id.as_str() == text)
            .ok_or_else(|| format!("unknown identity {text:?}"))
    }
}

/// Outcome of checking one identity on one parameter cell.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub identity: Identity,
    pub n: usize,
    pub k: Option<usize>,
    pub m: Option<usize>,
    pub lhs: BigCount,
    pub rhs: BigCount,
    /// Bijection or cross-check outcome; `true` where none applies.
    pub roundtrip: bool,
}

#[derive(Serialize)]
struct ReportLine<'a> {
    identity: &'a str,
    n: usize,
    k: Option<usize>,
    m: Option<usize>,
    lhs: String,
    rhs: String,
    roundtrip: bool,
    status: &'a str,
    empty: bool,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.lhs == self.rhs && self.roundtrip
    }

    /// Both sides count empty families; the identity holds vacuously.
    pub fn is_empty(&self) -> bool {
        self.lhs == BigCount::default() && self.rhs == BigCount::default()
    }

    pub fn status(&self) -> &'static str {
        if self.passed() {
            "pass"
        } else {
            "fail"
        }
    }

    /// One JSON object, no trailing newline. Absent `k`/`m` are `null`.
    pub fn to_json_line(&self) -> String {
        let line = ReportLine {
            identity: self.identity.as_str(),
            n: self.n,
            k: self.k,
            m: self.m,
            lhs: self.lhs.to_string(),
            rhs: self.rhs.to_string(),
            roundtrip: self.roundtrip,
            status: self.status(),
            empty: self.is_empty(),
        };
        serde_json::to_string(&line).expect("report serializes")
    }
}

/// Sweep bounds and parallelism shared by the `verify_*` entry points.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepOptions {
    pub max_n: usize,
    /// Largest `n` for enumeration-based cross-checks in the closed-form sweeps.
    pub brute_max: usize,
    /// Worker threads; 0 or 1 runs on the calling thread.
    pub jobs: usize,
}

impl SweepOptions {
    pub fn new(max_n: usize) -> Self {
        SweepOptions {
            max_n,
            brute_max: max_n,
            jobs: 1,
        }
    }

    pub fn brute_max(mut self, brute_max: usize) -> Self {
        self.brute_max = brute_max;
        self
    }

    pub fn jobs(mut self, jobs: usize) -> Self {
        self.jobs = jobs;
        self
    }
}

fn run_cells<C, F>(cells: Vec<C>, jobs: usize, check: F) -> Vec<VerificationReport>
where
    C: Send + Sync,
    F: Fn(&C) -> Vec<VerificationReport> + Send + Sync,
{
    if jobs <= 1 {
        return cells.iter().flat_map(check).collect();
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("thread pool");
    // Indexed parallel collect keeps cell order.
    let nested: Vec<Vec<VerificationReport>> =
        pool.install(|| cells.par_iter().map(&check).collect());
    nested.into_iter().flatten().collect()
}

fn regular_cells(max_n: usize) -> Vec<(usize, usize, usize)> {
    let mut cells = Vec::new();
    for n in 2..=max_n {
        for k in 1..=n {
            for m in 2..=n {
                cells.push((n, k, m));
            }
        }
    }
    cells
}

/// Checks that `reduce_partition` is a bijection from the `upper` family on
/// `[n]` onto the `lower` family on `[n - 1]`, with `expand_partition` as
/// inverse. Returns both family sizes and the round-trip verdict.
fn check_reduction_bijection(
    n: usize,
    upper: FamilyFilter,
    lower: FamilyFilter,
) -> (BigCount, BigCount, bool) {
    let upper_family: Vec<SetPartition> = generate(n, upper).collect();
    let lower_family: Vec<SetPartition> = generate(n - 1, lower).collect();
    let forward = upper_family.iter().all(|p| match reduce_partition(p) {
        Ok(q) => lower.accepts(&q) && expand_partition(&q) == *p,
        Err(_) => false,
    });
    let backward = lower_family.iter().all(|q| {
        let p = expand_partition(q);
        upper.accepts(&p) && reduce_partition(&p).as_ref() == Ok(q)
    });
    (
        BigCount::from(upper_family.len()),
        BigCount::from(lower_family.len()),
        forward && backward,
    )
}

/// `p(n, k, m) = p(n-1, k-1, m-1)` over `2 <= n <= max_n`, `1 <= k <= n`,
/// `2 <= m <= n`, with the reduction checked member by member.
pub fn verify_eq2(opts: SweepOptions) -> Vec<VerificationReport> {
    run_cells(regular_cells(opts.max_n), opts.jobs, |&(n, k, m)| {
        let (lhs, rhs, roundtrip) = check_reduction_bijection(
            n,
            FamilyFilter::regular(k, m),
            FamilyFilter::regular(k - 1, m - 1),
        );
        vec![VerificationReport {
            identity: Identity::Eq2,
            n,
            k: Some(k),
            m: Some(m),
            lhs,
            rhs,
            roundtrip,
        }]
    })
}

/// `p(abab; n, k, m) = p_2(abab; n-1, k-1, m-1)` on the same grid; every
/// reduced image must be poor and noncrossing.
pub fn verify_eq3(opts: SweepOptions) -> Vec<VerificationReport> {
    run_cells(regular_cells(opts.max_n), opts.jobs, |&(n, k, m)| {
        let (lhs, rhs, roundtrip) = check_reduction_bijection(
            n,
            FamilyFilter::regular(k, m).noncrossing(),
            FamilyFilter::regular(k - 1, m - 1).noncrossing().poor(),
        );
        vec![VerificationReport {
            identity: Identity::Eq3,
            n,
            k: Some(k),
            m: Some(m),
            lhs,
            rhs,
            roundtrip,
        }]
    })
}

fn nk_cells(max_n: usize) -> Vec<(usize, usize)> {
    (1..=max_n)
        .flat_map(|n| (1..=n).map(move |k| (n, k)))
        .collect()
}

/// `sum_{i=0}^{n-k} C(n-1, 2i) C(n-2i-1, n-i-k) C_i`.
pub fn narayana_catalan_sum(n: usize, k: usize) -> BigCount {
    let catalans = catalan_recurrence(n);
    let (n, k) = (n as i64, k as i64);
    (0..=n - k)
        .map(|i| {
            binomial(n - 1, 2 * i) * binomial(n - 2 * i - 1, n - i - k) * &catalans[i as usize]
        })
        .sum()
}

/// `sum_{i=0}^{n-k} C(n-1, i) p_2(abab; n-i-1, k-1, 1)`.
pub fn narayana_loop_sum(n: usize, k: usize) -> BigCount {
    (0..=n - k)
        .map(|i| binomial(n as i64 - 1, i as i64) * poor_noncrossing_closed(n - i - 1, k - 1))
        .sum()
}

/// Narayana numbers against the Catalan-weighted sum for all `n <= max_n`;
/// for `n <= brute_max` also against a noncrossing enumeration.
pub fn verify_narayana(opts: SweepOptions) -> Vec<VerificationReport> {
    run_cells(nk_cells(opts.max_n), opts.jobs, |&(n, k)| {
        let lhs = narayana(n, k).expect("1 <= k <= n");
        let rhs = narayana_catalan_sum(n, k);
        let roundtrip = n > opts.brute_max
            || count_family(n, FamilyFilter::default().blocks(k).noncrossing()) == lhs;
        vec![VerificationReport {
            identity: Identity::Narayana,
            n,
            k: Some(k),
            m: None,
            lhs,
            rhs,
            roundtrip,
        }]
    })
}

/// Removes the looped vertices of an independent diagram and relabels the
/// remaining ones in order.
pub fn strip_loops(d: &ArcDiagram) -> ArcDiagram {
    let mut new_label = vec![0; d.n() + 1];
    let mut next = 0;
    let looped: Vec<usize> = d.loops().collect();
    for v in 1..=d.n() {
        if !looped.contains(&v) {
            next += 1;
            new_label[v] = next;
        }
    }
    let arcs = d
        .arcs()
        .iter()
        .filter(|(i, j)| i != j)
        .map(|&(i, j)| (new_label[i], new_label[j]))
        .collect();
    ArcDiagram::new(next, arcs).expect("relabeling preserves validity")
}

/// Classifies the noncrossing partitions of `[n]` with `k` blocks by the
/// number `i` of loops in their reduced diagram and compares with
/// `C(n-1, i) p_2(abab; n-i-1, k-1, 1)`. Each loop-free remainder must be a
/// poor noncrossing partition of `[n-i-1]` with `k-1` blocks.
pub fn loop_census_matches(n: usize, k: usize) -> bool {
    let mut tally = vec![0u64; n];
    for p in generate(n, FamilyFilter::default().blocks(k).noncrossing()) {
        let Ok(reduced) = reduce_noncrossing(&p) else {
            return false;
        };
        let loops = reduced.loop_count();
        let remainder = match strip_loops(&reduced).to_partition() {
            Ok(q) => q,
            Err(_) => return false,
        };
        if remainder.n() != n - loops - 1
            || remainder.block_count() != k - 1
            || !remainder.is_poor()
            || !remainder.is_noncrossing()
        {
            return false;
        }
        tally[loops] += 1;
    }
    tally.iter().enumerate().all(|(i, &count)| {
        let expected = if i <= n - k {
            binomial(n as i64 - 1, i as i64) * poor_noncrossing_closed(n - i - 1, k - 1)
        } else {
            BigCount::default()
        };
        BigCount::from(count) == expected
    })
}

/// Narayana numbers against the loop-count sum for all `n <= max_n`; the
/// census itself is enumerated for `n <= brute_max`.
pub fn verify_eq5(opts: SweepOptions) -> Vec<VerificationReport> {
    run_cells(nk_cells(opts.max_n), opts.jobs, |&(n, k)| {
        let lhs = narayana(n, k).expect("1 <= k <= n");
        let rhs = narayana_loop_sum(n, k);
        let roundtrip = n > opts.brute_max || loop_census_matches(n, k);
        vec![VerificationReport {
            identity: Identity::Eq5,
            n,
            k: Some(k),
            m: None,
            lhs,
            rhs,
            roundtrip,
        }]
    })
}

/// For each `n`: one report per `k` comparing noncrossing partitions with
/// `k` blocks against paths of length `n-1` with `n-k` steps in `{L, U}`,
/// followed by a total report against Catalan numbers from the recurrence.
pub fn verify_motzkin(opts: SweepOptions) -> Vec<VerificationReport> {
    let catalans = catalan_recurrence(opts.max_n);
    let cells: Vec<usize> = (1..=opts.max_n).collect();
    run_cells(cells, opts.jobs, |&n| {
        let mut partitions_by_k = vec![0usize; n + 1];
        let mut paths_by_k = vec![0usize; n + 1];
        let mut ok_by_k = vec![true; n + 1];
        let mut partitions = 0usize;
        for p in generate(n, FamilyFilter::default().noncrossing()) {
            let k = p.block_count();
            partitions += 1;
            partitions_by_k[k] += 1;
            let ok = match partition_to_path(&p) {
                Ok(path) => {
                    path.len() == n - 1
                        && path.level_or_up_count() == n - k
                        && path_to_partition(&path) == p
                }
                Err(_) => false,
            };
            ok_by_k[k] &= ok;
        }
        let paths = TwoMotzkinPath::all(n - 1);
        for path in &paths {
            let k = n - path.level_or_up_count();
            paths_by_k[k] += 1;
            let q = path_to_partition(path);
            ok_by_k[k] &= q.n() == n
                && q.block_count() == k
                && q.is_noncrossing()
                && partition_to_path(&q).as_ref() == Ok(path);
        }
        let mut reports: Vec<VerificationReport> = (1..=n)
            .map(|k| VerificationReport {
                identity: Identity::Motzkin,
                n,
                k: Some(k),
                m: None,
                lhs: BigCount::from(partitions_by_k[k]),
                rhs: BigCount::from(paths_by_k[k]),
                roundtrip: ok_by_k[k],
            })
            .collect();
        reports.push(VerificationReport {
            identity: Identity::Motzkin,
            n,
            k: None,
            m: None,
            lhs: BigCount::from(partitions),
            rhs: catalans[n].clone(),
            roundtrip: paths.len() == partitions && ok_by_k.iter().all(|&ok| ok),
        });
        reports
    })
}

fn rna_filter(k_pairs: usize, n: usize) -> FamilyFilter {
    FamilyFilter::default()
        .blocks(n - k_pairs)
        .min_gap(Regularity::Finite(2))
        .noncrossing()
        .poor()
}

/// Number of secondary structures on `n` positions with `k` base pairs, for
/// `0 <= k <= n / 2`, counted as `p_2(abab; n, n-k, 2)`.
pub fn rna_table(n: usize) -> BTreeMap<usize, BigCount> {
    (0..=n / 2)
        .map(|k| (k, count_family(n, rna_filter(k, n))))
        .collect()
}

/// `p_2(abab; n, n-k, 2)` by direct enumeration against `p(abab; n+1,
/// n-k+1, 3)` by direct enumeration, for `1 <= n <= max_n`, `0 <= k <= n`.
/// The round-trip flag checks that reduction maps the second family onto
/// the first.
pub fn verify_rna(opts: SweepOptions) -> Vec<VerificationReport> {
    let cells: Vec<(usize, usize)> = (1..=opts.max_n)
        .flat_map(|n| (0..=n).map(move |k| (n, k)))
        .collect();
    run_cells(cells, opts.jobs, |&(n, k)| {
        let (lhs, rhs, roundtrip) = {
            let (upper_count, lower_count, ok) = check_reduction_bijection(
                n + 1,
                FamilyFilter::regular(n - k + 1, 3).noncrossing(),
                rna_filter(k, n),
            );
            (lower_count, upper_count, ok)
        };
        vec![VerificationReport {
            identity: Identity::Rna,
            n,
            k: Some(k),
            m: Some(2),
            lhs,
            rhs,
            roundtrip,
        }]
    })
}

/// Dispatches to the sweep for `identity`.
pub fn verify(identity: Identity, opts: SweepOptions) -> Vec<VerificationReport> {
    match identity {
        Identity::Eq2 => verify_eq2(opts),
        Identity::Eq3 => verify_eq3(opts),
        Identity::Narayana => verify_narayana(opts),
        Identity::Eq5 => verify_eq5(opts),
        Identity::Motzkin => verify_motzkin(opts),
        Identity::Rna => verify_rna(opts),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn find(
        reports: &[VerificationReport],
        n: usize,
        k: Option<usize>,
        m: Option<usize>,
    ) -> &VerificationReport {
        reports
            .iter()
            .find(|r| r.n == n && r.k == k && r.m == m)
            .unwrap()
    }

    fn big(v: u64) -> BigCount {
        BigCount::from(v)
    }

    #[test]
    fn eq2_cells() {
        let reports = verify_eq2(SweepOptions::new(6));
        let cell = find(&reports, 5, Some(3), Some(2));
        assert_eq!((cell.lhs.clone(), cell.rhs.clone()), (big(7), big(7)));
        assert!(cell.passed());
        let cell = find(&reports, 2, Some(1), Some(2));
        assert!(cell.passed() && cell.is_empty());
        let cell = find(&reports, 6, Some(3), Some(2));
        assert_eq!(cell.lhs, count_family(6, FamilyFilter::regular(3, 2)));
        assert!(reports.iter().all(VerificationReport::passed));
    }

    #[test]
    fn eq3_cells() {
        let reports = verify_eq3(SweepOptions::new(7));
        let cell = find(&reports, 5, Some(3), Some(2));
        assert_eq!((cell.lhs.clone(), cell.rhs.clone()), (big(2), big(2)));
        let cell = find(&reports, 2, Some(2), Some(2));
        assert_eq!((cell.lhs.clone(), cell.rhs.clone()), (big(1), big(1)));
        assert!(find(&reports, 7, Some(4), Some(3)).passed());
        assert!(reports.iter().all(VerificationReport::passed));
    }

    #[test]
    fn narayana_sum_terms() {
        // (4, 2): i = 0 gives C(3,0)C(3,2)C_0 = 3, i = 1 gives C(3,2)C(1,1)C_1 = 3, i = 2 gives 0.
        assert_eq!(narayana_catalan_sum(4, 2), big(6));
        assert_eq!(narayana_catalan_sum(9, 9), big(1));
        assert_eq!(narayana_catalan_sum(14, 7), narayana(14, 7).unwrap());
        let reports = verify_narayana(SweepOptions::new(8).brute_max(6));
        assert!(reports.iter().all(VerificationReport::passed));
    }

    #[test]
    fn eq5_census() {
        assert_eq!(narayana_loop_sum(5, 3), big(20));
        assert_eq!(narayana_loop_sum(5, 2), big(10));
        assert_eq!(narayana_loop_sum(6, 1), big(1));
        assert!(loop_census_matches(5, 3));
        assert!(loop_census_matches(6, 3));
        assert!(loop_census_matches(1, 1));
        assert!(verify_eq5(SweepOptions::new(7))
            .iter()
            .all(VerificationReport::passed));
    }

    #[test]
    fn strip_loops_relabels() {
        let d = ArcDiagram::new(5, vec![(1, 1), (2, 5), (3, 3)]).unwrap();
        assert_eq!(strip_loops(&d), ArcDiagram::new(3, vec![(1, 3)]).unwrap());
    }

    #[test]
    fn motzkin_reports() {
        let reports = verify_motzkin(SweepOptions::new(6));
        assert!(reports.iter().all(VerificationReport::passed));
        let total = find(&reports, 6, None, None);
        assert_eq!(total.lhs, big(132));
        let total = find(&reports, 1, None, None);
        assert_eq!(total.lhs, big(1));
    }

    #[test]
    fn rna_counts() {
        let table = rna_table(5);
        assert_eq!(table[&0], big(1));
        assert_eq!(table[&1], big(6));
        assert_eq!(
            table[&2],
            count_family(6, FamilyFilter::regular(4, 3).noncrossing())
        );
        let reports = verify_rna(SweepOptions::new(7));
        assert!(reports.iter().all(VerificationReport::passed));
    }

    #[test]
    fn parallel_sweeps_match_sequential() {
        let serial = verify_eq3(SweepOptions::new(7));
        let parallel = verify_eq3(SweepOptions::new(7).jobs(4));
        assert_eq!(serial, parallel);
    }

    #[test]
    fn report_json() {
        let report = VerificationReport {
            identity: Identity::Eq2,
            n: 5,
            k: Some(3),
            m: Some(2),
            lhs: big(7),
            rhs: big(7),
            roundtrip: true,
        };
        assert_eq!(
            report.to_json_line(),
            r#"{"identity":"eq2","n":5,"k":3,"m":2,"lhs":"7","rhs":"7","roundtrip":true,"status":"pass","empty":false}"#
        );
        let failing = VerificationReport {
            rhs: big(8),
            m: None,
            ..report
        };
        assert!(failing.to_json_line().contains(r#""m":null"#));
        assert!(failing.to_json_line().contains(r#""status":"fail""#));
    }

    #[test]
    fn identity_names() {
        for id in Identity::ALL {
            assert_eq!(id.as_str().parse::<Identity>(), Ok(id));
        }
        assert!("eq4".parse::<Identity>().is_err());
    }
}
