//! Order-by-order generation of the unlabeled minimal strong digraphs.
//!
//! Each parent of order `n − 1` is expanded by (a) every internal expansion,
//! (b) every loop-type external expansion `e_uu`, and (c) every external
//! expansion `e_uw` over a non-arc that keeps the digraph minimal. Children
//! are canonicalized and deduplicated globally for the order.

mod store;

use std::collections::{BTreeMap, HashSet};
use std::fmt::Write as _;
use std::path::PathBuf;

use itertools::Itertools;
use rayon::prelude::*;

use crate::canon::{canonical_form, CanonicalCode};
use crate::digraph::{Bits, Digraph};
use crate::error::{Error, Result};
use crate::xform::{external_expansion, internal_expansion, ExternalExpansionTester};
use store::DedupStore;

/// Counts keyed by `(order, arc count)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CountTable {
    rows: BTreeMap<(usize, usize), u64>,
}

impl CountTable {
    pub fn increment(&mut self, n: usize, m: usize) {
        *self.rows.entry((n, m)).or_default() += 1;
    }

    pub fn set(&mut self, n: usize, m: usize, count: u64) {
        self.rows.insert((n, m), count);
    }

    pub fn get(&self, n: usize, m: usize) -> u64 {
        self.rows.get(&(n, m)).copied().unwrap_or(0)
    }

    /// Column sum for order `n`.
    pub fn total(&self, n: usize) -> u64 {
        self.row(n).map(|(_, c)| c).sum()
    }

    /// Nonzero `(m, count)` cells of order `n`, ascending in `m`.
    pub fn row(&self, n: usize) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.rows
            .range((n, 0)..=(n, usize::MAX))
            .filter(|(_, &c)| c > 0)
            .map(|(&(_, m), &c)| (m, c))
    }

    pub fn orders(&self) -> Vec<usize> {
        self.rows.keys().map(|&(n, _)| n).dedup().collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), u64)> + '_ {
        self.rows.iter().map(|(&k, &v)| (k, v))
    }

    pub fn merge(&mut self, other: &CountTable) {
        for (k, v) in other.iter() {
            *self.rows.entry(k).or_default() += v;
        }
    }

    /// `m=<m>:<count> … total=<sum>` for order `n`.
    pub fn format_order(&self, n: usize) -> String {
        let mut s = String::new();
        for (m, c) in self.row(n) {
            let _ = write!(s, "m={m}:{c} ");
        }
        let _ = write!(s, "total={}", self.total(n));
        s
    }
}

/// Number of arcs in a digraph6 record, read straight off the bits.
fn code_size(code: &CanonicalCode) -> usize {
    code.as_bytes()[2..]
        .iter()
        .map(|b| (b - 63).count_ones() as usize)
        .sum()
}

/// The complete, deduplicated list of unlabeled minimal strong digraphs of
/// one order, as sorted canonical codes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Catalog {
    order: usize,
    entries: Vec<CanonicalCode>,
    counts: CountTable,
}

impl Catalog {
    /// Order 1: the single vertex.
    pub fn seed() -> Self {
        Catalog::from_sorted_codes(1, vec![canonical_form(&Digraph::single_vertex())])
            .expect("seed catalog is valid")
    }

    /// Builds a catalog from codes that are strictly ascending and all of
    /// the given order.
    pub fn from_sorted_codes(order: usize, entries: Vec<CanonicalCode>) -> Result<Self> {
        if let Some(bad) = entries.iter().find(|c| c.order() != order) {
            return Err(Error::InvalidCatalog(format!(
                "entry {bad} has order {}, expected {order}",
                bad.order()
            )));
        }
        if entries.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidCatalog(
                "entries are not strictly ascending".into(),
            ));
        }
        let mut counts = CountTable::default();
        for c in &entries {
            counts.increment(order, code_size(c));
        }
        Ok(Catalog {
            order,
            entries,
            counts,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn entries(&self) -> &[CanonicalCode] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn counts(&self) -> &CountTable {
        &self.counts
    }

    pub fn contains(&self, code: &CanonicalCode) -> bool {
        self.entries.binary_search(code).is_ok()
    }

    /// Entries with exactly `m` arcs.
    pub fn with_size(&self, m: usize) -> impl Iterator<Item = &CanonicalCode> + '_ {
        self.entries.iter().filter(move |c| code_size(c) == m)
    }

    pub fn digraphs(&self) -> impl Iterator<Item = Digraph> + '_ {
        self.entries.iter().map(|c| c.to_digraph())
    }
}

/// Knobs for [`expand_catalog`].
#[derive(Clone, Debug)]
pub struct GenConfig {
    /// Worker threads; `0` lets rayon decide.
    pub jobs: usize,
    /// Distinct codes held in memory before a sorted run is spilled.
    pub memory_budget: usize,
    /// Directory for spill files; the system temp directory when `None`.
    pub scratch_dir: Option<PathBuf>,
    /// Parents handed to the workers per batch.
    pub batch_size: usize,
}

impl Default for GenConfig {
    fn default() -> Self {
        GenConfig {
            jobs: 0,
            memory_budget: 4_000_000,
            scratch_dir: None,
            batch_size: 2048,
        }
    }
}

/// All children of one parent under steps (a), (b) and (c), before
/// isomorph rejection.
pub fn expansions(parent: &Digraph) -> Vec<Digraph> {
    let n = parent.order();
    let mut out = Vec::new();
    for (u, w) in parent.arcs() {
        out.push(internal_expansion(parent, u, w).expect("arc exists"));
    }
    for u in 0..n {
        out.push(external_expansion(parent, u, u).expect("vertex exists"));
    }
    if n >= 2 {
        let tester = ExternalExpansionTester::new(parent);
        for u in 0..n {
            let candidates = !parent.out_mask(u) & parent.vertex_mask() & !(1u64 << u);
            for w in Bits::new(candidates) {
                if tester.preserves(u, w) {
                    out.push(external_expansion(parent, u, w).expect("vertices exist"));
                }
            }
        }
    }
    out
}

fn child_codes(parent: &CanonicalCode) -> Vec<CanonicalCode> {
    let mut codes: Vec<CanonicalCode> = expansions(&parent.to_digraph())
        .iter()
        .map(canonical_form)
        .collect();
    codes.sort_unstable();
    codes.dedup();
    codes
}

fn check_catalog(prev: &Catalog) -> Result<()> {
    if prev.is_empty() {
        return Err(Error::InvalidCatalog("empty catalog".into()));
    }
    let total: u64 = prev.counts.total(prev.order);
    if total != prev.len() as u64 {
        return Err(Error::InvalidCatalog(format!(
            "count table sums to {total} but catalog holds {}",
            prev.len()
        )));
    }
    Ok(())
}

fn build_pool(jobs: usize) -> Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::Io(std::io::Error::other(e.to_string())))
}

/// Produces the catalog of order `n` from the complete catalog of order
/// `n − 1`.
pub fn expand_catalog(prev: &Catalog, cfg: &GenConfig) -> Result<Catalog> {
    check_catalog(prev)?;
    let pool = build_pool(cfg.jobs)?;
    expand_in(prev, cfg, &pool)
}

fn expand_in(prev: &Catalog, cfg: &GenConfig, pool: &rayon::ThreadPool) -> Result<Catalog> {
    let order = prev.order + 1;
    let exhausted = |source| Error::Exhausted {
        last_completed: prev.order,
        failed_order: order,
        source,
    };
    let scratch = cfg.scratch_dir.clone().unwrap_or_else(std::env::temp_dir);
    let mut store = DedupStore::new(cfg.memory_budget, scratch);
    for batch in prev.entries.chunks(cfg.batch_size.max(1)) {
        let children: Vec<Vec<CanonicalCode>> =
            pool.install(|| batch.par_iter().map(child_codes).collect());
        for code in children.into_iter().flatten() {
            store.insert(code).map_err(exhausted)?;
        }
    }
    let entries = store.finish().map_err(exhausted)?;
    Catalog::from_sorted_codes(order, entries)
}

/// Catalogs of orders `1..=n_max`, each expanded from its predecessor.
pub fn enumerate_to(n_max: usize, cfg: &GenConfig) -> Result<Vec<Catalog>> {
    let mut all = Vec::with_capacity(n_max);
    enumerate_with(n_max, cfg, |c| all.push(c.clone()))?;
    Ok(all)
}

/// The catalog of order `n`, keeping only the current and previous order in
/// memory.
pub fn catalog_of_order(n: usize, cfg: &GenConfig) -> Result<Catalog> {
    let mut last = None;
    enumerate_with(n, cfg, |c| {
        if c.order() == n {
            last = Some(c.clone());
        }
    })?;
    last.ok_or(Error::OrderOutOfRange(n))
}

/// Runs the generation up to `n_max`, calling `visit` on every completed
/// catalog in increasing order.
pub fn enumerate_with(
    n_max: usize,
    cfg: &GenConfig,
    mut visit: impl FnMut(&Catalog),
) -> Result<()> {
    if n_max == 0 || n_max > crate::MAX_ORDER {
        return Err(Error::OrderOutOfRange(n_max));
    }
    let pool = build_pool(cfg.jobs)?;
    let mut cur = Catalog::seed();
    visit(&cur);
    while cur.order() < n_max {
        cur = expand_in(&cur, cfg, &pool)?;
        visit(&cur);
    }
    Ok(())
}

/// `(n, count at m = 2n − 2)` for every catalog of order ≥ 2.
pub fn directed_tree_counts(catalogs: &[Catalog]) -> Vec<(usize, u64)> {
    catalogs
        .iter()
        .filter(|c| c.order() >= 2)
        .map(|c| (c.order(), c.counts().get(c.order(), 2 * c.order() - 2)))
        .collect()
}

/// Counts unlabeled minimal strong digraphs of order `n ≤ 5` by scanning all
/// labeled loop-free digraphs and merging relabelings by trying every
/// permutation. Independent of the expansion and canonical-form code.
pub fn brute_force_msd_count(n: usize) -> Result<CountTable> {
    if !(2..=5).contains(&n) {
        return Err(Error::OracleRange(n));
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (0..n).filter(move |&w| w != u).map(move |w| (u, w)))
        .collect();
    let perms: Vec<Vec<usize>> = (0..n).permutations(n).collect();
    let mut seen: HashSet<Vec<u64>> = HashSet::new();
    let mut counts = CountTable::default();
    for mask in 0u64..(1u64 << pairs.len()) {
        let mut rows = vec![0u64; n];
        for (i, &(u, w)) in pairs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                rows[u] |= 1 << w;
            }
        }
        let d = Digraph::from_out_masks(rows.clone())?;
        if !d.is_minimal_strong() {
            continue;
        }
        let key = perms
            .iter()
            .map(|p| {
                let mut relabelled = vec![0u64; n];
                for (u, &row) in rows.iter().enumerate() {
                    relabelled[p[u]] = Bits::new(row).fold(0, |r, w| r | 1 << p[w]);
                }
                relabelled
            })
            .min()
            .expect("at least one permutation");
        if seen.insert(key) {
            counts.increment(n, mask.count_ones() as usize);
        }
    }
    Ok(counts)
}
