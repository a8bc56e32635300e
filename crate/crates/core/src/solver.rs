//! Exact anti-Ramsey numbers `ar(G, θ) = rb(G, θ) - 1` by complete search.
//!
//! A rainbow-free coloring is a partition of the edges in which every copy of
//! the pattern has two edges in one class. Starting from the all-distinct
//! partition, the search deepens on the number of merges `M`: it picks the
//! first uncovered copy and branches over every pair of its edges, joining the
//! two classes. Any rainbow-free partition puts two edges of that copy together,
//! so some branch is consistent with it, and the first feasible `M` gives
//! `ar = |E| - M`.

use std::collections::HashMap;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::{Duration, Instant};

use itertools::Itertools;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::coloring::{find_rainbow_in, Color, EdgeColoring};
use crate::enumeration::{CopyIndex, CopyScope};
use crate::error::{Error, Result};
use crate::extremal::{
    construct_rim_grouped, construct_spoke_grouped, rim_grouped_coloring, rim_grouped_targets, spoke_grouped_coloring,
};
use crate::formulas::rb_formula;
use crate::graph::WheelGraph;
use crate::patterns::ThetaPattern;

/// Largest host the search accepts; class sets are `u128` bitmasks.
pub const MAX_EDGES: usize = 128;

/// Memo entries kept per root branch and depth before the memo stops growing.
const MEMO_LIMIT: usize = 4_000_000;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Budget {
    pub max_merges: Option<usize>,
    #[serde(skip)]
    pub timeout: Option<Duration>,
    pub node_limit: Option<u64>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget::default()
    }

    pub fn with_timeout(timeout: Duration) -> Self {
        Budget { timeout: Some(timeout), ..Budget::default() }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SolveOptions {
    pub budget: Budget,
    /// Memoize partitions up to rotations, reflections and hub permutations.
    /// Values are unaffected; witnesses may differ from the plain search.
    pub orbit_pruning: bool,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct SearchStats {
    pub copies: usize,
    /// Nodes expanded; varies between parallel runs, so not serialized.
    #[serde(skip)]
    pub nodes: u64,
    /// First depth searched.
    pub start_depth: usize,
    /// Deepest depth whose search was started.
    pub depth_reached: usize,
    /// Depths proven infeasible by exhausted search, `start_depth..depth_reached`.
    pub exhausted_depths: Vec<usize>,
    /// Not serialized, so reruns are byte-identical.
    #[serde(skip)]
    pub wall_time: Duration,
}

#[derive(Clone, Debug, Serialize)]
pub struct SolverResult {
    pub ar_value: usize,
    pub rb_value: usize,
    pub witness: EdgeColoring,
    /// False when the search started above depth 0 and the depth just below
    /// the answer was taken from a proven ceiling instead of being searched.
    pub certified_by_search: bool,
    pub stats: SearchStats,
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum SolveOutcome {
    Exact(SolverResult),
    /// Budget ran out; `rb` is certified to lie in `[rb_lower, rb_upper]`.
    Unknown { rb_lower: usize, rb_upper: usize, reason: String, stats: SearchStats },
}

impl SolveOutcome {
    pub fn exact(&self) -> Option<&SolverResult> {
        match self {
            SolveOutcome::Exact(r) => Some(r),
            SolveOutcome::Unknown { .. } => None,
        }
    }

    /// `(lo, hi)` bounds on `rb`; equal for exact outcomes.
    pub fn rb_interval(&self) -> (usize, usize) {
        match self {
            SolveOutcome::Exact(r) => (r.rb_value, r.rb_value),
            SolveOutcome::Unknown { rb_lower, rb_upper, .. } => (*rb_lower, *rb_upper),
        }
    }

    pub fn stats(&self) -> &SearchStats {
        match self {
            SolveOutcome::Exact(r) => &r.stats,
            SolveOutcome::Unknown { stats, .. } => stats,
        }
    }
}

/// `colors_used + 1` of the best construction verified against `p` on `g`.
pub fn lower_bound_from_construction(g: &WheelGraph, p: &ThetaPattern) -> Result<usize> {
    let (d, s, t) = (g.d(), g.s(), p.t());
    let mut best = None;
    if s == 1 && p.is_fan() && t >= 4 && d + 1 >= t {
        best = Some(construct_spoke_grouped(d, t)?.rb_lower_bound());
    }
    if t >= 5 && d + 1 >= t && rim_grouped_targets(s, t).contains(p) {
        let rim = construct_rim_grouped(d, s, t)?.rb_lower_bound();
        best = Some(best.map_or(rim, |b: usize| b.max(rim)));
    }
    best.ok_or_else(|| Error::Domain(format!("no construction is known to defeat {p} on {g}")))
}

/// Exact `ar` and `rb` of `p` in `g`, or a certified interval if the budget runs out.
pub fn solve_exact(g: &WheelGraph, p: &ThetaPattern, options: SolveOptions) -> Result<SolveOutcome> {
    solve_from(g, p, options, 0)
}

/// Search seeded with the known ceiling on `rb` for `p` in `g`. Depths more
/// than one below the ceiling's depth are skipped; the one just below is still
/// searched so that an exact answer is certified by the search itself.
pub fn probe_open_value(g: &WheelGraph, p: &ThetaPattern, options: SolveOptions) -> Result<SolveOutcome> {
    let Some(ceiling) = rb_formula(g.d(), g.s(), p).map(|f| f.value as usize) else {
        return solve_from(g, p, options, 0);
    };
    let start = g.edge_count().saturating_sub(ceiling - 1).saturating_sub(1);
    let outcome = solve_from(g, p, options, start)?;
    if let SolveOutcome::Exact(r) = &outcome {
        if r.rb_value > ceiling {
            return Err(Error::Invariant(format!("{p} on {g}: search found rb = {} above ceiling {ceiling}", r.rb_value)));
        }
    }
    Ok(outcome)
}

fn solve_from(g: &WheelGraph, p: &ThetaPattern, options: SolveOptions, start: usize) -> Result<SolveOutcome> {
    let m = g.edge_count();
    if m > MAX_EDGES {
        return Err(Error::Domain(format!("{g} has {m} edges, the solver handles at most {MAX_EDGES}")));
    }
    let started = Instant::now();
    let index = CopyIndex::build(g, p, CopyScope::All);
    let construction = lower_bound_from_construction(g, p).ok();
    let ceiling = rb_formula(g.d(), g.s(), p).map(|f| f.value as usize);
    let mut stats = SearchStats { copies: index.len(), start_depth: start, ..SearchStats::default() };

    let search = Search::new(g, &index, options);
    let max_depth = options.budget.max_merges.map_or(m - 1, |x| x.min(m - 1));
    let deadline = options.budget.timeout.map(|t| started + t);
    let mut depth = start;
    let outcome = loop {
        stats.depth_reached = depth;
        if depth > max_depth {
            break None;
        }
        match search.run(depth, deadline, options.budget.node_limit) {
            Run::Found(labels) => break Some(labels),
            Run::Exhausted => stats.exhausted_depths.push(depth),
            Run::Aborted => break None,
        }
        depth += 1;
    };
    stats.nodes = search.nodes.load(Ordering::Relaxed);
    stats.wall_time = started.elapsed();

    let Some(labels) = outcome else {
        let searched_upper = stats.exhausted_depths.last().map(|&dep| m - dep);
        let rb_upper = [searched_upper, ceiling].into_iter().flatten().min().unwrap_or(m + 1);
        let rb_lower = construction.unwrap_or(0).max(checked_lower_bound(g, &index));
        let reason = if depth > max_depth {
            format!("merge limit {max_depth} reached")
        } else {
            format!("budget exhausted during depth {depth}")
        };
        return Ok(SolveOutcome::Unknown { rb_lower, rb_upper, reason, stats });
    };

    let witness = coloring_from_labels(g, &labels)?;
    let ar_value = witness.color_count();
    if ar_value != m - depth {
        return Err(Error::Invariant(format!("witness has {ar_value} colors at depth {depth} on {m} edges")));
    }
    if let Some(copy) = find_rainbow_in(&witness, &index) {
        return Err(Error::Invariant(format!("solver witness has a rainbow copy {:?}", copy.embedding.edges.ids())));
    }
    let rb_value = ar_value + 1;
    if let Some(lo) = construction {
        if rb_value < lo {
            return Err(Error::Invariant(format!("solver rb {rb_value} is below construction bound {lo}")));
        }
    }
    Ok(SolveOutcome::Exact(SolverResult {
        ar_value,
        rb_value,
        witness,
        certified_by_search: depth == 0 || stats.exhausted_depths.contains(&(depth - 1)),
        stats,
    }))
}

/// `colors + 1` of the best grouped coloring that has no rainbow copy in
/// `index`, whether or not a theorem covers it; 2 when nothing better is found
/// (one color class defeats every copy), 1 without copies.
fn checked_lower_bound(g: &WheelGraph, index: &CopyIndex) -> usize {
    if index.is_empty() {
        return 1;
    }
    let (d, s) = (g.d(), g.s());
    let mut candidates = Vec::new();
    for width in 4..=d + 1 {
        if s == 1 {
            candidates.extend(spoke_grouped_coloring(d, width));
        }
        candidates.extend(rim_grouped_coloring(d, s, width + 1));
    }
    candidates
        .iter()
        .filter(|c| find_rainbow_in(c, index).is_none())
        .map(|c| c.color_count() + 1)
        .max()
        .unwrap_or(2)
}

/// Colors numbered by classes in order of their smallest edge.
fn coloring_from_labels(g: &WheelGraph, labels: &[u8]) -> Result<EdgeColoring> {
    let mut rank: HashMap<u8, Color> = HashMap::new();
    let colors = labels
        .iter()
        .map(|l| {
            let next = rank.len() as Color + 1;
            *rank.entry(*l).or_insert(next)
        })
        .collect();
    EdgeColoring::new(*g, colors)
}

enum Run {
    Found(Vec<u8>),
    Exhausted,
    Aborted,
}

struct Search {
    edges: usize,
    /// 0-based edge ids of each copy, in canonical copy order.
    copies: Vec<Vec<u8>>,
    /// Edge permutations of the automorphism group, when orbit pruning is on.
    automorphisms: Vec<Vec<u8>>,
    nodes: AtomicU64,
}

struct Branch<'a> {
    search: &'a Search,
    deadline: Option<Instant>,
    node_limit: Option<u64>,
    abort: &'a AtomicBool,
    memo: HashMap<Vec<u8>, ()>,
}

impl Search {
    fn new(g: &WheelGraph, index: &CopyIndex, options: SolveOptions) -> Self {
        let copies = index.copies.iter().map(|c| c.edges.ids().iter().map(|&id| (id - 1) as u8).collect()).collect();
        let automorphisms = if options.orbit_pruning { edge_automorphisms(g) } else { Vec::new() };
        Search { edges: g.edge_count(), copies, automorphisms, nodes: AtomicU64::new(0) }
    }

    fn run(&self, depth: usize, deadline: Option<Instant>, node_limit: Option<u64>) -> Run {
        let labels: Vec<u8> = (0..self.edges as u8).collect();
        let Some(first) = self.first_uncovered(&labels, 0) else {
            return Run::Found(labels);
        };
        if depth == 0 {
            return Run::Exhausted;
        }
        let abort = AtomicBool::new(false);
        let pairs = pairs_of(&self.copies[first]);
        let found = pairs.par_iter().find_map_first(|&(a, b)| {
            let mut branch =
                Branch { search: self, deadline, node_limit, abort: &abort, memo: HashMap::new() };
            let mut next = labels.clone();
            merge(&mut next, a, b);
            branch.descend(&next, depth - 1, first + 1)
        });
        match found {
            Some(labels) => Run::Found(labels),
            None if abort.load(Ordering::Relaxed) => Run::Aborted,
            None => Run::Exhausted,
        }
    }

    fn covered(copy: &[u8], labels: &[u8]) -> bool {
        let mut seen = 0u128;
        for &e in copy {
            let bit = 1u128 << labels[e as usize];
            if seen & bit != 0 {
                return true;
            }
            seen |= bit;
        }
        false
    }

    fn first_uncovered(&self, labels: &[u8], from: usize) -> Option<usize> {
        (from..self.copies.len()).find(|&i| !Self::covered(&self.copies[i], labels))
    }

    /// Uncovered copies from `from` on with pairwise disjoint class sets; each
    /// needs its own merge, so more than `limit` of them means failure.
    fn packing_exceeds(&self, labels: &[u8], from: usize, limit: usize) -> bool {
        let mut used = 0u128;
        let mut count = 0;
        for copy in &self.copies[from..] {
            let mut mask = 0u128;
            let mut covered = false;
            for &e in copy {
                let bit = 1u128 << labels[e as usize];
                if mask & bit != 0 {
                    covered = true;
                    break;
                }
                mask |= bit;
            }
            if !covered && mask & used == 0 {
                used |= mask;
                count += 1;
                if count > limit {
                    return true;
                }
            }
        }
        false
    }

    fn memo_key(&self, labels: &[u8]) -> Vec<u8> {
        let mut best = labels.to_vec();
        let mut image = vec![0u8; labels.len()];
        let mut class_min = vec![u8::MAX; labels.len()];
        for perm in &self.automorphisms {
            class_min.fill(u8::MAX);
            for (e, &l) in labels.iter().enumerate() {
                let slot = &mut class_min[l as usize];
                *slot = (*slot).min(perm[e]);
            }
            for (e, &l) in labels.iter().enumerate() {
                image[perm[e] as usize] = class_min[l as usize];
            }
            if image < best {
                best.copy_from_slice(&image);
            }
        }
        best
    }
}

impl Branch<'_> {
    fn out_of_budget(&self) -> bool {
        if self.abort.load(Ordering::Relaxed) {
            return true;
        }
        let n = self.search.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        let over = self.node_limit.is_some_and(|limit| n > limit)
            || (n.is_multiple_of(1024) && self.deadline.is_some_and(|d| Instant::now() >= d));
        if over {
            self.abort.store(true, Ordering::Relaxed);
        }
        over
    }

    fn descend(&mut self, labels: &[u8], left: usize, from: usize) -> Option<Vec<u8>> {
        if self.out_of_budget() {
            return None;
        }
        let search = self.search;
        let Some(i) = search.first_uncovered(labels, from) else {
            return Some(labels.to_vec());
        };
        if left == 0 || search.packing_exceeds(labels, i, left) {
            return None;
        }
        let key = search.memo_key(labels);
        if self.memo.contains_key(&key) {
            return None;
        }
        for (a, b) in pairs_of(&search.copies[i]) {
            let mut next = labels.to_vec();
            merge(&mut next, a, b);
            if let Some(found) = self.descend(&next, left - 1, i + 1) {
                return Some(found);
            }
            if self.abort.load(Ordering::Relaxed) {
                return None;
            }
        }
        if self.memo.len() < MEMO_LIMIT {
            self.memo.insert(key, ());
        }
        None
    }
}

fn pairs_of(copy: &[u8]) -> Vec<(u8, u8)> {
    let mut pairs = Vec::with_capacity(copy.len() * (copy.len() - 1) / 2);
    for (k, &a) in copy.iter().enumerate() {
        for &b in &copy[k + 1..] {
            pairs.push((a, b));
        }
    }
    pairs
}

/// Joins the classes of edges `a` and `b`; labels stay the smallest edge of each class.
fn merge(labels: &mut [u8], a: u8, b: u8) {
    let (la, lb) = (labels[a as usize], labels[b as usize]);
    let (keep, drop) = if la < lb { (la, lb) } else { (lb, la) };
    for l in labels.iter_mut() {
        if *l == drop {
            *l = keep;
        }
    }
}

fn edge_automorphisms(g: &WheelGraph) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    for hub_perm in (1..=g.s()).permutations(g.s()) {
        for shift in 0..g.d() {
            for reflect in [false, true] {
                let perm = g
                    .edges()
                    .map(|e| (g.linearize(g.map_edge(e, shift, reflect, &hub_perm)) - 1) as u8)
                    .collect();
                out.push(perm);
            }
        }
    }
    out
}
