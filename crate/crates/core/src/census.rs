//! Exhaustive census of labeled tournaments of a fixed order.
//!
//! Labeled tournaments of order `m` are the integers `0 .. 2^(m(m-1)/2)`
//! read through [`Tournament::from_code`]. The census walks that range,
//! optionally split into contiguous shards processed on separate threads,
//! and keeps per shard only the `k` histogram and a count per canonical
//! form. Shard results are merged through ordered maps, so the outcome does
//! not depend on the shard count.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::ops::Range;

use serde::{Deserialize, Serialize};

use crate::criticality::{critical_in, CRITICAL_MIN_ORDER};
use crate::error::{Error, Result};
use crate::format::to_trn;
use crate::interval::is_indecomposable;
use crate::iso::{canonical_form, CanonicalForm};
use crate::tournament::{Permutation, Tournament};

/// Largest order accepted for a full census.
pub const CENSUS_LIMIT: usize = 8;

pub fn labeled_count(m: usize) -> u64 {
    1u64 << (m * m.saturating_sub(1) / 2)
}

fn check_order(m: usize) -> Result<()> {
    if m == 0 {
        return Err(Error::BadParams("census order must be at least 1".into()));
    }
    if m > CENSUS_LIMIT {
        return Err(Error::TooLarge { order: m, limit: CENSUS_LIMIT });
    }
    Ok(())
}

/// Splits the code range of order `m` into `shards` contiguous, disjoint
/// ranges covering it exactly. Empty ranges are dropped.
pub fn shard_ranges(m: usize, shards: usize) -> Vec<Range<u64>> {
    let total = labeled_count(m);
    let shards = shards.max(1) as u64;
    (0..shards).map(|s| total * s / shards..total * (s + 1) / shards).filter(|r| !r.is_empty()).collect()
}

/// Visits every labeled tournament of order `m` once, in code order.
pub fn enumerate_labeled(m: usize, visitor: impl FnMut(u64, &Tournament)) -> Result<()> {
    check_order(m)?;
    enumerate_range(m, 0..labeled_count(m), visitor)
}

/// Visits the labeled tournaments whose codes lie in `codes`.
pub fn enumerate_range(m: usize, codes: Range<u64>, mut visitor: impl FnMut(u64, &Tournament)) -> Result<()> {
    check_order(m)?;
    if codes.end > labeled_count(m) {
        return Err(Error::BadParams(format!("code range {codes:?} exceeds order {m}")));
    }
    for code in codes {
        visitor(code, &Tournament::from_code(m, code));
    }
    Ok(())
}

#[derive(Clone, Debug)]
pub struct CensusOptions {
    /// Number of shards, each run on its own thread. `1` runs inline.
    pub jobs: usize,
    /// Relabeling applied to every enumerated tournament before analysis.
    /// Results must not depend on it.
    pub relabel: Option<Permutation>,
}

impl Default for CensusOptions {
    fn default() -> Self {
        CensusOptions { jobs: 1, relabel: None }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
struct Tally {
    visited: u64,
    code_sum: u128,
    indecomposable: u64,
    by_k: BTreeMap<usize, BTreeMap<CanonicalForm, u64>>,
}

impl Tally {
    fn merge(&mut self, other: Tally) {
        self.visited += other.visited;
        self.code_sum += other.code_sum;
        self.indecomposable += other.indecomposable;
        for (k, classes) in other.by_k {
            let mine = self.by_k.entry(k).or_default();
            for (c, count) in classes {
                *mine.entry(c).or_default() += count;
            }
        }
    }
}

fn run_shard(m: usize, codes: Range<u64>, relabel: Option<&Permutation>) -> Result<Tally> {
    let mut tally = Tally::default();
    let mut failure = None;
    enumerate_range(m, codes, |code, t| {
        tally.visited += 1;
        tally.code_sum += code as u128;
        let relabeled;
        let t = match relabel {
            Some(p) => {
                relabeled = t.apply(p).expect("relabeling has the census order");
                &relabeled
            }
            None => t,
        };
        if !is_indecomposable(t) {
            return;
        }
        tally.indecomposable += 1;
        let k = m - critical_in(t, t.vertices()).len();
        match canonical_form(t) {
            Ok(c) => *tally.by_k.entry(k).or_default().entry(c).or_default() += 1,
            Err(e) => failure = Some(e),
        }
    })?;
    match failure {
        Some(e) => Err(e),
        None => Ok(tally),
    }
}

/// One isomorphism class found by the census.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassRecord {
    pub order: usize,
    pub k: usize,
    pub canonical: CanonicalForm,
    /// Labeled tournaments in the class.
    pub labeled: u64,
}

impl ClassRecord {
    pub fn representative(&self) -> Tournament {
        self.canonical.tournament()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusResult {
    pub order: usize,
    pub labeled: u64,
    /// Sum of the visited codes; equals `N(N-1)/2` for `N` labeled
    /// tournaments when every code was visited exactly once.
    pub code_sum: u128,
    pub indecomposable: u64,
    /// `k ↦` labeled indecomposable tournaments with exactly `k`
    /// non-critical vertices.
    pub histogram: BTreeMap<usize, u64>,
    /// `k ↦` isomorphism classes, ordered by canonical form.
    pub classes: BTreeMap<usize, Vec<ClassRecord>>,
    /// Order below 5: the `k` values rest on the small-order convention.
    pub below_critical_range: bool,
}

impl CensusResult {
    pub fn labeled_with_k(&self, k: usize) -> u64 {
        self.histogram.get(&k).copied().unwrap_or(0)
    }

    pub fn classes_with_k(&self, k: usize) -> &[ClassRecord] {
        self.classes.get(&k).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Whether the shards together visited every code exactly once, as far
    /// as count and code sum can tell.
    pub fn coverage_consistent(&self) -> bool {
        let total = labeled_count(self.order) as u128;
        self.labeled as u128 == total && self.code_sum == total * (total - 1) / 2
    }

    /// Line-oriented summary; identical for identical results.
    pub fn summary(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "order: {}", self.order);
        let _ = writeln!(s, "labeled: {}", self.labeled);
        let _ = writeln!(s, "indecomposable: {}", self.indecomposable);
        if self.below_critical_range {
            let _ = writeln!(s, "note: order below {CRITICAL_MIN_ORDER}, k values follow the small-order convention");
        }
        for (k, count) in &self.histogram {
            let _ = writeln!(s, "k={k} labeled: {count}");
            let _ = writeln!(s, "k={k} classes: {}", self.classes_with_k(*k).len());
        }
        s
    }

    /// Machine-readable document: totals plus one record per class with its
    /// canonical form in hex and a `.trn` payload of the representative.
    pub fn to_json(&self) -> serde_json::Value {
        let records: Vec<serde_json::Value> = self
            .classes
            .values()
            .flatten()
            .map(|c| {
                serde_json::json!({
                    "order": c.order,
                    "k": c.k,
                    "canonical": c.canonical.to_hex(),
                    "labeled": c.labeled,
                    "representative": to_trn(&c.representative()),
                })
            })
            .collect();
        let histogram: serde_json::Map<String, serde_json::Value> =
            self.histogram.iter().map(|(k, v)| (k.to_string(), (*v).into())).collect();
        serde_json::json!({
            "order": self.order,
            "labeled": self.labeled,
            "indecomposable": self.indecomposable,
            "histogram": histogram,
            "classes": records,
        })
    }
}

pub fn census(m: usize) -> Result<CensusResult> {
    census_with(m, &CensusOptions::default())
}

pub fn census_with(m: usize, opts: &CensusOptions) -> Result<CensusResult> {
    check_order(m)?;
    if let Some(p) = &opts.relabel {
        if p.len() != m {
            return Err(Error::NotABijection(m));
        }
    }
    let ranges = shard_ranges(m, opts.jobs);
    let relabel = opts.relabel.as_ref();
    let tallies: Vec<Result<Tally>> = if ranges.len() <= 1 {
        ranges.into_iter().map(|r| run_shard(m, r, relabel)).collect()
    } else {
        std::thread::scope(|scope| {
            let handles: Vec<_> = ranges.into_iter().map(|r| scope.spawn(move || run_shard(m, r, relabel))).collect();
            handles.into_iter().map(|h| h.join().expect("census shard panicked")).collect()
        })
    };
    let mut total = Tally::default();
    for t in tallies {
        total.merge(t?);
    }
    Ok(CensusResult {
        order: m,
        labeled: total.visited,
        code_sum: total.code_sum,
        indecomposable: total.indecomposable,
        histogram: total.by_k.iter().map(|(&k, classes)| (k, classes.values().sum())).collect(),
        classes: total
            .by_k
            .into_iter()
            .map(|(k, classes)| {
                let recs = classes
                    .into_iter()
                    .map(|(canonical, labeled)| ClassRecord { order: m, k, canonical, labeled })
                    .collect();
                (k, recs)
            })
            .collect(),
        below_critical_range: m < CRITICAL_MIN_ORDER,
    })
}
