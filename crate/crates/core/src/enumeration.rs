//! Exhaustive enumeration of square tilings of a `q x q` grid.
//!
//! The search repeatedly takes the first uncovered cell in row-major order
//! (rows counted from the bottom) and branches on every square size that
//! fits there, smallest first. Each partition of the grid is produced
//! exactly once. The covered region is always a skyline, so the state is a
//! column height vector and the first uncovered cell is the leftmost lowest
//! column.
//!
//! Results are complete only for tilings whose coordinates are multiples of
//! `1/q` for the resolutions searched; nothing is claimed about tilings with
//! larger denominators.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};

use num_integer::Integer;

use crate::rational::{ratio, Rational};
use crate::symmetry::{canonical_form, D4};
use crate::tiling::{Tile, Tiling};
use crate::{Error, Result};

pub const MAX_Q: u32 = 64;
pub const DEFAULT_NODE_BUDGET: u64 = 1_000_000_000;

/// Depth of the shared prefix tree handed out to workers.
const SPLIT_DEPTH: usize = 4;
/// Leaves between flushes of a worker's node count to the shared counter.
const FLUSH_EVERY: u32 = 1 << 10;

/// A square on the grid: lower-left cell `(col, row)` and side `size`.
/// Orders by `(row, col, size)`, matching the tile serialization order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Placement {
    pub row: u8,
    pub col: u8,
    pub size: u8,
}

impl Placement {
    pub fn new(col: u8, row: u8, size: u8) -> Self {
        Placement { row, col, size }
    }
}

/// A partition of the `q x q` grid into squares, placements sorted by
/// `(row, col)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GridTiling {
    q: u32,
    cells: Vec<Placement>,
}

impl GridTiling {
    /// Checks that `cells` partition the grid exactly.
    pub fn new(q: u32, mut cells: Vec<Placement>) -> Result<Self> {
        if q == 0 || q > MAX_Q {
            return Err(Error::BadParameter(format!(
                "resolution {q} outside 1..={MAX_Q}"
            )));
        }
        let q_us = q as usize;
        let mut covered = vec![false; q_us * q_us];
        for p in &cells {
            let (c, r, s) = (p.col as usize, p.row as usize, p.size as usize);
            if s == 0 || c + s > q_us || r + s > q_us {
                return Err(Error::BadParameter(format!(
                    "placement {p:?} leaves the grid"
                )));
            }
            for row in r..r + s {
                for col in c..c + s {
                    if std::mem::replace(&mut covered[row * q_us + col], true) {
                        return Err(Error::BadParameter(format!(
                            "cell ({col}, {row}) covered twice"
                        )));
                    }
                }
            }
        }
        if covered.contains(&false) {
            return Err(Error::BadParameter("grid not fully covered".into()));
        }
        cells.sort();
        Ok(GridTiling { q, cells })
    }

    fn from_sorted(q: u32, cells: Vec<Placement>) -> Self {
        debug_assert!(cells.windows(2).all(|w| w[0] < w[1]));
        GridTiling { q, cells }
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn cells(&self) -> &[Placement] {
        &self.cells
    }

    pub fn tile_count(&self) -> usize {
        self.cells.len()
    }

    pub fn size_sum(&self) -> u32 {
        size_sum(&self.cells)
    }

    pub fn sigma(&self) -> Rational {
        ratio(i64::from(self.size_sum()), i64::from(self.q))
    }

    /// Common divisor of all sizes (and hence of `q` and every coordinate).
    pub fn scale(&self) -> u32 {
        scale(&self.cells)
    }

    pub fn is_primitive(&self) -> bool {
        self.scale() == 1
    }

    /// The same geometric tiling at the smallest resolution.
    pub fn primitive(&self) -> GridTiling {
        let g = self.scale() as u8;
        GridTiling {
            q: self.q / u32::from(g),
            cells: self
                .cells
                .iter()
                .map(|p| Placement::new(p.col / g, p.row / g, p.size / g))
                .collect(),
        }
    }

    pub fn image(&self, g: D4) -> GridTiling {
        GridTiling::from_sorted(self.q, image_cells(self.q, &self.cells, g))
    }

    pub fn canonical(&self) -> GridTiling {
        GridTiling::from_sorted(self.q, canonical_cells(self.q, &self.cells))
    }

    pub fn is_canonical(&self) -> bool {
        is_canonical_cells(self.q, &self.cells)
    }

    pub fn to_tiling(&self) -> Tiling {
        let q = i64::from(self.q);
        let tiles = self
            .cells
            .iter()
            .map(|p| {
                Tile::new(
                    ratio(i64::from(p.col), q),
                    ratio(i64::from(p.row), q),
                    ratio(i64::from(p.size), q),
                )
            })
            .collect();
        Tiling::from_valid(tiles)
    }
}

fn size_sum(cells: &[Placement]) -> u32 {
    cells.iter().map(|p| u32::from(p.size)).sum()
}

fn scale(cells: &[Placement]) -> u32 {
    cells.iter().fold(0u32, |g, p| g.gcd(&u32::from(p.size)))
}

fn image_cells(q: u32, cells: &[Placement], g: D4) -> Vec<Placement> {
    let mut out: Vec<Placement> = cells
        .iter()
        .map(|p| {
            let (c, r, s) = g.apply_cell(q, p.col.into(), p.row.into(), p.size.into());
            Placement::new(c as u8, r as u8, s as u8)
        })
        .collect();
    out.sort_unstable();
    out
}

fn canonical_cells(q: u32, cells: &[Placement]) -> Vec<Placement> {
    D4::ALL
        .into_iter()
        .map(|g| image_cells(q, cells, g))
        .min()
        .expect("D4 is non-empty")
}

/// `cells` must be sorted.
fn is_canonical_cells(q: u32, cells: &[Placement]) -> bool {
    D4::ALL[1..]
        .iter()
        .all(|&g| cells <= image_cells(q, cells, g).as_slice())
}

/// Depth-first search over grid partitions with an explicit stack, so that
/// it can be resumed leaf by leaf and started from any prefix.
struct Search {
    q: u8,
    heights: Vec<u8>,
    stack: Vec<Placement>,
    floor: usize,
    depth_limit: Option<usize>,
    descend: bool,
    done: bool,
    nodes: u64,
}

impl Search {
    fn new(q: u32) -> Self {
        Search {
            q: q as u8,
            heights: vec![0; q as usize],
            stack: Vec::with_capacity((q * q) as usize),
            floor: 0,
            depth_limit: None,
            descend: true,
            done: false,
            nodes: 0,
        }
    }

    /// Search below a fixed prefix produced by the same search order.
    fn from_prefix(q: u32, prefix: &[Placement]) -> Self {
        let mut search = Search::new(q);
        for &p in prefix {
            search.place(p);
        }
        search.floor = prefix.len();
        search
    }

    fn place(&mut self, p: Placement) {
        let top = p.row + p.size;
        for h in &mut self.heights[p.col as usize..(p.col + p.size) as usize] {
            *h = top;
        }
        self.stack.push(p);
    }

    fn next_leaf(&mut self) -> Option<&[Placement]> {
        loop {
            if self.done {
                return None;
            }
            if self.descend {
                if self.depth_limit == Some(self.stack.len()) {
                    self.descend = false;
                    return Some(&self.stack);
                }
                let (col, row) = self
                    .heights
                    .iter()
                    .enumerate()
                    .min_by_key(|&(_, &h)| h)
                    .map(|(c, &h)| (c as u8, h))
                    .expect("q >= 1");
                if row == self.q {
                    self.descend = false;
                    return Some(&self.stack);
                }
                self.place(Placement::new(col, row, 1));
                self.nodes += 1;
            } else {
                if self.stack.len() == self.floor {
                    self.done = true;
                    return None;
                }
                let p = self.stack.pop().expect("stack above floor");
                for h in &mut self.heights[p.col as usize..(p.col + p.size) as usize] {
                    *h = p.row;
                }
                let size = p.size + 1;
                let last = (p.col + size - 1) as usize;
                if p.row + size <= self.q && last < self.q as usize && self.heights[last] == p.row {
                    self.place(Placement::new(p.col, p.row, size));
                    self.nodes += 1;
                    self.descend = true;
                }
            }
        }
    }
}

fn check_q(q: u32) -> Result<()> {
    if q == 0 || q > MAX_Q {
        return Err(Error::BadParameter(format!(
            "resolution {q} outside 1..={MAX_Q}"
        )));
    }
    Ok(())
}

/// Streams every partition of the `q x q` grid in search order. Yields a
/// single [`Error::ResourceLimit`] and stops once more than `node_budget`
/// placements have been tried.
pub struct GridEnumerator {
    search: Search,
    budget: u64,
    failed: bool,
}

impl Iterator for GridEnumerator {
    type Item = Result<GridTiling>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.failed {
            return None;
        }
        let q = u32::from(self.search.q);
        let leaf = self
            .search
            .next_leaf()
            .map(|cells| GridTiling::from_sorted(q, cells.to_vec()));
        if self.search.nodes > self.budget {
            self.failed = true;
            return Some(Err(Error::ResourceLimit {
                budget: self.budget,
            }));
        }
        leaf.map(Ok)
    }
}

pub fn enumerate_grid(q: u32) -> Result<GridEnumerator> {
    enumerate_grid_with_budget(q, DEFAULT_NODE_BUDGET)
}

pub fn enumerate_grid_with_budget(q: u32, node_budget: u64) -> Result<GridEnumerator> {
    check_q(q)?;
    Ok(GridEnumerator {
        search: Search::new(q),
        budget: node_budget,
        failed: false,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepConfig {
    pub workers: usize,
    pub node_budget: u64,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            workers: std::thread::available_parallelism().map_or(1, |n| n.get()),
            node_budget: DEFAULT_NODE_BUDGET,
        }
    }
}

impl SweepConfig {
    pub fn with_workers(workers: usize) -> Self {
        SweepConfig {
            workers,
            ..SweepConfig::default()
        }
    }
}

/// Visits every partition of the `q x q` grid on `config.workers` threads.
///
/// Each worker folds the leaves it sees into its own state created by
/// `init`; the states are returned for the caller to merge. Which leaves a
/// worker sees depends on scheduling, so the merge must be commutative.
pub fn sweep<S, I, F>(q: u32, config: &SweepConfig, init: I, visit: F) -> Result<Vec<S>>
where
    S: Send,
    I: Fn() -> S + Sync,
    F: Fn(&mut S, &[Placement]) + Sync,
{
    check_q(q)?;
    let budget = config.node_budget;
    let mut frontier_search = Search::new(q);
    frontier_search.depth_limit = Some(SPLIT_DEPTH);
    let mut frontier: Vec<Vec<Placement>> = Vec::new();
    while let Some(prefix) = frontier_search.next_leaf() {
        frontier.push(prefix.to_vec());
    }
    let nodes = AtomicU64::new(frontier_search.nodes);
    if frontier_search.nodes > budget {
        return Err(Error::ResourceLimit { budget });
    }
    let next_task = AtomicUsize::new(0);
    let aborted = AtomicBool::new(false);

    let work = || {
        let mut state = init();
        let mut pending = 0u64;
        let mut leaves = 0u32;
        'tasks: while let Some(prefix) = frontier.get(next_task.fetch_add(1, Ordering::Relaxed)) {
            let mut search = Search::from_prefix(q, prefix);
            let mut seen = 0u64;
            while let Some(cells) = search.next_leaf() {
                visit(&mut state, cells);
                leaves += 1;
                if leaves == FLUSH_EVERY {
                    leaves = 0;
                    pending += search.nodes - seen;
                    seen = search.nodes;
                    let total = nodes.fetch_add(pending, Ordering::Relaxed) + pending;
                    pending = 0;
                    if total > budget {
                        aborted.store(true, Ordering::Relaxed);
                    }
                    if aborted.load(Ordering::Relaxed) {
                        break 'tasks;
                    }
                }
            }
            pending += search.nodes - seen;
        }
        if nodes.fetch_add(pending, Ordering::Relaxed) + pending > budget {
            aborted.store(true, Ordering::Relaxed);
        }
        state
    };

    let workers = config.workers.max(1);
    let states = if workers == 1 {
        vec![work()]
    } else {
        std::thread::scope(|scope| {
            let handles: Vec<_> = (0..workers).map(|_| scope.spawn(work)).collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("enumeration worker panicked"))
                .collect()
        })
    };
    if aborted.load(Ordering::Relaxed) {
        return Err(Error::ResourceLimit { budget });
    }
    Ok(states)
}

/// Which tile counts collect minimum-length witnesses.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub enum Witnesses {
    #[default]
    None,
    All,
    Only(BTreeSet<usize>),
}

impl Witnesses {
    fn wants(&self, n: usize) -> bool {
        match self {
            Witnesses::None => false,
            Witnesses::All => true,
            Witnesses::Only(ns) => ns.contains(&n),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ReportOptions {
    /// Count symmetry classes as well as raw tilings.
    pub canonical_counts: bool,
    pub witnesses: Witnesses,
}

/// Statistics for one tile count at one resolution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountReport {
    pub count_raw: u64,
    pub count_canonical: Option<u64>,
    pub min_sigma: Rational,
    /// Canonical forms of the primitive tilings attaining `min_sigma`.
    pub witnesses: Vec<GridTiling>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationReport {
    pub q: u32,
    pub per_n: BTreeMap<usize, CountReport>,
}

impl EnumerationReport {
    pub fn total(&self) -> u64 {
        self.per_n.values().map(|r| r.count_raw).sum()
    }
}

#[derive(Clone)]
struct Accumulator {
    raw: u64,
    canonical: u64,
    min_sum: u32,
    witnesses: BTreeSet<Vec<Placement>>,
}

impl Default for Accumulator {
    fn default() -> Self {
        Accumulator {
            raw: 0,
            canonical: 0,
            min_sum: u32::MAX,
            witnesses: BTreeSet::new(),
        }
    }
}

impl Accumulator {
    fn merge(&mut self, other: Accumulator) {
        self.raw += other.raw;
        self.canonical += other.canonical;
        match other.min_sum.cmp(&self.min_sum) {
            std::cmp::Ordering::Less => {
                self.min_sum = other.min_sum;
                self.witnesses = other.witnesses;
            }
            std::cmp::Ordering::Equal => self.witnesses.extend(other.witnesses),
            std::cmp::Ordering::Greater => {}
        }
    }
}

/// Per-tile-count statistics for one resolution.
pub fn enumerate_report(
    q: u32,
    options: &ReportOptions,
    config: &SweepConfig,
) -> Result<EnumerationReport> {
    let slots = (q * q) as usize + 1;
    let states = sweep(
        q,
        config,
        || vec![Accumulator::default(); slots],
        |accs, cells| {
            let n = cells.len();
            let sum = size_sum(cells);
            let acc = &mut accs[n];
            acc.raw += 1;
            if options.canonical_counts && is_canonical_cells(q, cells) {
                acc.canonical += 1;
            }
            if sum < acc.min_sum {
                acc.min_sum = sum;
                acc.witnesses.clear();
            }
            if sum == acc.min_sum && options.witnesses.wants(n) && scale(cells) == 1 {
                acc.witnesses.insert(canonical_cells(q, cells));
            }
        },
    )?;
    let mut merged = vec![Accumulator::default(); slots];
    for state in states {
        for (total, acc) in merged.iter_mut().zip(state) {
            total.merge(acc);
        }
    }
    let per_n = merged
        .into_iter()
        .enumerate()
        .filter(|(_, acc)| acc.raw > 0)
        .map(|(n, acc)| {
            let report = CountReport {
                count_raw: acc.raw,
                count_canonical: options.canonical_counts.then_some(acc.canonical),
                min_sigma: ratio(i64::from(acc.min_sum), i64::from(q)),
                witnesses: acc
                    .witnesses
                    .into_iter()
                    .map(|cells| GridTiling::from_sorted(q, cells))
                    .collect(),
            };
            (n, report)
        })
        .collect();
    Ok(EnumerationReport { q, per_n })
}

/// Raw number of grid partitions per tile count.
pub fn count_by_n(q: u32, config: &SweepConfig) -> Result<BTreeMap<usize, u64>> {
    let report = enumerate_report(q, &ReportOptions::default(), config)?;
    Ok(report
        .per_n
        .into_iter()
        .map(|(n, r)| (n, r.count_raw))
        .collect())
}

/// Minimum total side length over tilings found at resolutions up to
/// `q_max`, with every symmetry class attaining it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    pub min_sigma: Rational,
    /// Canonical forms, sorted.
    pub witnesses: Vec<Tiling>,
}

/// Runs [`min_sigma_oracle`] for several tile counts with one sweep per
/// resolution. Counts with no tiling at any resolution are absent.
pub fn oracle_table(
    ns: &BTreeSet<usize>,
    q_max: u32,
    config: &SweepConfig,
) -> Result<BTreeMap<usize, OracleResult>> {
    check_q(q_max)?;
    let options = ReportOptions {
        canonical_counts: false,
        witnesses: Witnesses::Only(ns.clone()),
    };
    let mut best: BTreeMap<usize, (Rational, BTreeSet<Tiling>)> = BTreeMap::new();
    for q in 1..=q_max {
        let report = enumerate_report(q, &options, config)?;
        for (&n, stats) in report.per_n.iter().filter(|(n, _)| ns.contains(n)) {
            let witnesses = stats
                .witnesses
                .iter()
                .map(|w| canonical_form(&w.to_tiling()));
            match best.get_mut(&n) {
                Some((min, set)) if stats.min_sigma == *min => set.extend(witnesses),
                Some((min, _)) if stats.min_sigma > *min => {}
                _ => {
                    best.insert(n, (stats.min_sigma.clone(), witnesses.collect()));
                }
            }
        }
    }
    Ok(best
        .into_iter()
        .map(|(n, (min_sigma, set))| {
            let witnesses = set.into_iter().collect();
            (
                n,
                OracleResult {
                    min_sigma,
                    witnesses,
                },
            )
        })
        .collect())
}

/// Exact minimum of the total side length over all `n`-tile tilings whose
/// coordinates are multiples of `1/q` for some `q <= q_max`.
pub fn min_sigma_oracle(n: usize, q_max: u32, config: &SweepConfig) -> Result<OracleResult> {
    let ns = BTreeSet::from([n]);
    oracle_table(&ns, q_max, config)?
        .remove(&n)
        .ok_or(Error::NoTilingFound { n, q_max })
}

/// Every tiling primitive at some `q <= q_max` with at most `n_max` tiles,
/// each geometric tiling once, in enumeration order.
pub fn corpus(q_max: u32, n_max: usize) -> Result<Vec<Tiling>> {
    let mut out = Vec::new();
    for q in 1..=q_max {
        for grid in enumerate_grid(q)? {
            let grid = grid?;
            if grid.tile_count() <= n_max && grid.is_primitive() {
                out.push(grid.to_tiling());
            }
        }
    }
    Ok(out)
}
