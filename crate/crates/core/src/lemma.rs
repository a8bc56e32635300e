//! Exhaustive checks of the counting bounds on copies that share edges.
//!
//! For a fixed edge set `S`, the quantity checked is the number of copies
//! containing at least two edges of `S`. The pair, triple and `i`-subset
//! sweeps bound it over every `S` of that size; the color-class check bounds
//! `p(c)` for every color class of a concrete coloring. Counts range over the
//! copies selected by a [`CopyScope`]; the lemma bounds use single-hub copies.
//!
//! A verifier distinguishes unmet hypotheses ([`Error::HypothesesUnmet`], the
//! check is skipped) from a violated bound (a report whose `holds()` is false).

use std::collections::HashMap;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::coloring::{p_statistic_in, Color, EdgeColoring};
use crate::enumeration::{CopyIndex, CopyScope};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, WheelGraph};
use crate::patterns::ThetaPattern;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LemmaKind {
    Pair,
    Triple,
    Multi,
    ColorBound,
}

impl fmt::Display for LemmaKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LemmaKind::Pair => "pair",
            LemmaKind::Triple => "triple",
            LemmaKind::Multi => "multi",
            LemmaKind::ColorBound => "colorbound",
        })
    }
}

/// Which branch of a bound applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PatternClass {
    Fan,
    SymmetricNonFan,
    Asymmetric,
}

impl PatternClass {
    pub fn of(p: &ThetaPattern) -> Self {
        if p.is_fan() {
            PatternClass::Fan
        } else if p.is_symmetric() {
            PatternClass::SymmetricNonFan
        } else {
            PatternClass::Asymmetric
        }
    }

    /// 1 for symmetric patterns, 2 for asymmetric ones.
    pub fn beta(self) -> u64 {
        match self {
            PatternClass::Asymmetric => 2,
            _ => 1,
        }
    }
}

/// A non-negative multiple of one half, stored doubled.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Bound {
    twice: u64,
}

impl Bound {
    pub fn integer(v: u64) -> Self {
        Bound { twice: 2 * v }
    }

    /// `num / 2`.
    pub fn halves(num: u64) -> Self {
        Bound { twice: num }
    }

    pub fn admits(self, observed: usize) -> bool {
        2 * observed as u64 <= self.twice
    }

    pub fn as_f64(self) -> f64 {
        self.twice as f64 / 2.0
    }
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.twice.is_multiple_of(2) {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}.5", self.twice / 2)
        }
    }
}

impl Serialize for Bound {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        if self.twice.is_multiple_of(2) {
            serializer.serialize_u64(self.twice / 2)
        } else {
            serializer.serialize_f64(self.as_f64())
        }
    }
}

/// How the `i`-subsets of a multi-edge sweep are covered.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SubsetCoverage {
    /// Exhaustive when there are few subsets, symmetry-reduced otherwise.
    Auto,
    /// Every `i`-subset.
    Exhaustive,
    /// One subset per orbit at least, under boundary rotations and hub relabelings.
    SymmetryReduced,
}

/// Subsets above this count are swept up to symmetry under [`SubsetCoverage::Auto`].
pub const EXHAUSTIVE_SUBSET_LIMIT: u64 = 2_000_000;

/// Outcome of one sweep.
#[derive(Clone, Debug, Serialize)]
pub struct LemmaReport {
    pub lemma: LemmaKind,
    pub d: usize,
    pub s: usize,
    pub pattern: String,
    pub class: PatternClass,
    pub subset_size: usize,
    pub scope: CopyScope,
    pub coverage: SubsetCoverage,
    pub bound: Bound,
    pub max_observed: usize,
    /// Linear edge ids of a subset attaining `max_observed`.
    pub witness: Vec<usize>,
    pub subsets_checked: u64,
}

impl LemmaReport {
    pub fn holds(&self) -> bool {
        self.bound.admits(self.max_observed)
    }

    pub fn line(&self) -> String {
        format!(
            "{} {} on W_{}({}) i={}: max {} <= {} [{}]",
            self.lemma,
            self.pattern,
            self.d,
            self.s,
            self.subset_size,
            self.max_observed,
            self.bound,
            if self.holds() { "ok" } else { "VIOLATED" }
        )
    }
}

fn check_pattern_lower(p: &ThetaPattern) -> Result<()> {
    if p.t() < 4 {
        return Err(Error::HypothesesUnmet(format!("{p}: needs t >= max(4, ell + 3)")));
    }
    Ok(())
}

fn check_d(d: usize, min: usize, what: &str) -> Result<()> {
    if d < min {
        return Err(Error::HypothesesUnmet(format!("d = {d} below {what} = {min}")));
    }
    Ok(())
}

/// Bound on copies through a fixed pair of edges.
pub fn pair_bound(s: usize, p: &ThetaPattern) -> Bound {
    let (s, t) = (s as u64, p.t() as u64);
    Bound::integer(match PatternClass::of(p) {
        PatternClass::Fan => (s * (t - 3)).max(t - 2),
        PatternClass::SymmetricNonFan => s * (t - 3),
        PatternClass::Asymmetric => 2 * s * (t - 3),
    })
}

/// Bound on copies through at least two of three fixed edges.
pub fn triple_bound(s: usize, p: &ThetaPattern) -> Bound {
    let (s, t) = (s as u64, p.t() as u64);
    let base = (s * (t - 2)).max(t - 1);
    Bound::integer(PatternClass::of(p).beta() * base)
}

/// Bound on copies through at least two of `i >= 4` fixed edges.
pub fn multi_bound(s: usize, p: &ThetaPattern, i: usize) -> Bound {
    let (s, t, i) = (s as u64, p.t() as u64, i as u64);
    match PatternClass::of(p) {
        PatternClass::Fan if s == 1 => Bound::halves((t - 1) * i),
        PatternClass::Asymmetric => Bound::integer(s * (t - 2) * i),
        _ => Bound::halves(s * (t - 2) * i),
    }
}

/// Bound on `p(c)` for a color on exactly `i >= 2` edges, when one is known.
pub fn color_class_bound(s: usize, p: &ThetaPattern, i: usize) -> Option<Bound> {
    let (su, t, iu) = (s as u64, p.t() as u64, i as u64);
    let class = PatternClass::of(p);
    let bound = if s == 1 && class == PatternClass::Fan {
        match i {
            2 => Bound::integer(t - 2),
            3 => Bound::integer(t - 1),
            _ => Bound::halves((t - 1) * iu),
        }
    } else if s == 1 {
        let beta = class.beta();
        match i {
            2 => Bound::integer(beta * (t - 3)),
            3 => Bound::integer(beta * (t - 1)),
            _ => Bound::halves(beta * (t - 2) * iu),
        }
    } else if class == PatternClass::Fan && ((s == 2 && t >= 6) || (s >= 3 && t >= 7)) {
        match i {
            2 => Bound::integer(su * (t - 3)),
            3 => Bound::integer(su * (t - 2)),
            _ => Bound::halves(su * (t - 2) * iu),
        }
    } else {
        return None;
    };
    (i >= 2).then_some(bound)
}

fn report(
    lemma: LemmaKind,
    idx: &CopyIndex,
    subset_size: usize,
    coverage: SubsetCoverage,
    bound: Bound,
    (max_observed, witness, subsets_checked): (usize, Vec<usize>, u64),
) -> LemmaReport {
    LemmaReport {
        lemma,
        d: idx.graph.d(),
        s: idx.graph.s(),
        pattern: idx.pattern.to_string(),
        class: PatternClass::of(&idx.pattern),
        subset_size,
        scope: idx.scope,
        coverage,
        bound,
        max_observed,
        witness,
        subsets_checked,
    }
}

/// `counts[a][b]` (`a < b`, 0-based ids): copies containing both edges.
fn pair_counts(idx: &CopyIndex) -> Vec<Vec<u32>> {
    let m = idx.graph.edge_count();
    let mut counts = vec![vec![0u32; m]; m];
    for c in &idx.copies {
        let ids = c.edges.ids();
        for (k, &a) in ids.iter().enumerate() {
            for &b in &ids[k + 1..] {
                counts[a - 1][b - 1] += 1;
            }
        }
    }
    counts
}

/// Maximum over all unordered edge pairs of the copies containing both.
pub fn max_pair_cover(idx: &CopyIndex) -> (usize, Vec<usize>, u64) {
    let m = idx.graph.edge_count();
    let counts = pair_counts(idx);
    let mut best = (0, vec![1, 2]);
    for (a, row) in counts.iter().enumerate() {
        for (b, &n) in row.iter().enumerate().skip(a + 1) {
            if n as usize > best.0 {
                best = (n as usize, vec![a + 1, b + 1]);
            }
        }
    }
    (best.0, best.1, (m * (m - 1) / 2) as u64)
}

/// Maximum over all edge triples of the copies containing at least two of them.
pub fn max_triple_cover(idx: &CopyIndex) -> (usize, Vec<usize>, u64) {
    let m = idx.graph.edge_count();
    let pairs = pair_counts(idx);
    let mut triples: HashMap<(usize, usize, usize), u32> = HashMap::new();
    for c in &idx.copies {
        let ids = c.edges.ids();
        for x in 0..ids.len() {
            for y in x + 1..ids.len() {
                for z in y + 1..ids.len() {
                    *triples.entry((ids[x] - 1, ids[y] - 1, ids[z] - 1)).or_insert(0) += 1;
                }
            }
        }
    }
    let mut best = (0usize, vec![1, 2, 3]);
    let mut checked = 0u64;
    for a in 0..m {
        for b in a + 1..m {
            for c in b + 1..m {
                checked += 1;
                let all = triples.get(&(a, b, c)).copied().unwrap_or(0);
                let n = (pairs[a][b] + pairs[a][c] + pairs[b][c] - 2 * all) as usize;
                if n > best.0 {
                    best = (n, vec![a + 1, b + 1, c + 1]);
                }
            }
        }
    }
    (best.0, best.1, checked)
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1u64, |acc, j| acc.saturating_mul(n - j) / (j + 1))
}

struct SubsetSweep<'a> {
    idx: &'a CopyIndex,
    /// Linear ids in sweep order.
    order: Vec<usize>,
    /// Hub of each entry of `order`, 0 for rim edges.
    hub_of: Vec<usize>,
    size: usize,
    reduce_hubs: bool,
    hits: Vec<u8>,
    covered: usize,
    chosen: Vec<usize>,
    best: usize,
    witness: Vec<usize>,
    checked: u64,
}

impl SubsetSweep<'_> {
    fn add(&mut self, id: usize) {
        for &c in &self.idx.by_edge[id - 1] {
            self.hits[c] += 1;
            if self.hits[c] == 2 {
                self.covered += 1;
            }
        }
        self.chosen.push(id);
    }

    fn remove(&mut self, id: usize) {
        for &c in &self.idx.by_edge[id - 1] {
            if self.hits[c] == 2 {
                self.covered -= 1;
            }
            self.hits[c] -= 1;
        }
        self.chosen.pop();
    }

    fn descend(&mut self, from: usize, max_hub: usize) {
        if self.chosen.len() == self.size {
            self.checked += 1;
            if self.covered > self.best || self.witness.is_empty() {
                self.best = self.covered;
                self.witness = self.chosen.clone();
                self.witness.sort_unstable();
            }
            return;
        }
        let left = self.size - self.chosen.len();
        for k in from..self.order.len() {
            if self.order.len() - k < left {
                break;
            }
            let hub = self.hub_of[k];
            if self.reduce_hubs && hub > max_hub + 1 {
                continue;
            }
            let id = self.order[k];
            self.add(id);
            self.descend(k + 1, max_hub.max(hub));
            self.remove(id);
        }
    }
}

/// Maximum over `size`-subsets of edges of the copies containing at least two
/// of them. Returns `(max, witness, subsets_checked, coverage_used)`.
///
/// The symmetry-reduced sweep only visits subsets whose first edge, in the order
/// (position, rim before spokes, hub), sits at position 1 and whose hubs first
/// appear in the order 1, 2, …. Every subset is carried onto such a subset by a
/// boundary rotation followed by a hub relabeling, both automorphisms of `W_d(s)`.
pub fn max_subset_cover(idx: &CopyIndex, size: usize, coverage: SubsetCoverage) -> (usize, Vec<usize>, u64, SubsetCoverage) {
    let g = &idx.graph;
    let m = g.edge_count() as u64;
    let coverage = match coverage {
        SubsetCoverage::Auto if binomial(m, size as u64) <= EXHAUSTIVE_SUBSET_LIMIT => SubsetCoverage::Exhaustive,
        SubsetCoverage::Auto => SubsetCoverage::SymmetryReduced,
        other => other,
    };
    let mut order = Vec::with_capacity(g.edge_count());
    let mut hub_of = Vec::with_capacity(g.edge_count());
    for pos in 1..=g.d() {
        order.push(g.linearize(EdgeId::Rim(pos)));
        hub_of.push(0);
        for hub in 1..=g.s() {
            order.push(g.linearize(EdgeId::Spoke { hub, pos }));
            hub_of.push(hub);
        }
    }
    let mut sweep = SubsetSweep {
        idx,
        order,
        hub_of,
        size,
        reduce_hubs: coverage == SubsetCoverage::SymmetryReduced,
        hits: vec![0; idx.len()],
        covered: 0,
        chosen: Vec::with_capacity(size),
        best: 0,
        witness: Vec::new(),
        checked: 0,
    };
    if size == 0 {
        return (0, Vec::new(), 1, coverage);
    }
    match coverage {
        SubsetCoverage::SymmetryReduced => {
            // The position-1 block is the first s + 1 entries of the order.
            for k in 0..=g.s() {
                let hub = sweep.hub_of[k];
                if hub > 1 {
                    continue;
                }
                let id = sweep.order[k];
                sweep.add(id);
                sweep.descend(k + 1, hub);
                sweep.remove(id);
            }
        }
        _ => sweep.descend(0, g.s()),
    }
    (sweep.best, sweep.witness, sweep.checked, coverage)
}

fn single_hub_index(d: usize, s: usize, p: &ThetaPattern) -> Result<CopyIndex> {
    let g = WheelGraph::new(d, s)?;
    Ok(CopyIndex::build(&g, p, CopyScope::SingleHub))
}

/// Every unordered pair of edges lies in at most the pair bound of single-hub
/// copies. Needs `d >= 2t - 3`, `t >= max(4, ℓ + 3)`.
pub fn verify_pair_lemma(d: usize, s: usize, p: &ThetaPattern) -> Result<LemmaReport> {
    check_pattern_lower(p)?;
    check_d(d, 2 * p.t() - 3, "2t - 3")?;
    let idx = single_hub_index(d, s, p)?;
    Ok(report(LemmaKind::Pair, &idx, 2, SubsetCoverage::Exhaustive, pair_bound(s, p), max_pair_cover(&idx)))
}

/// Every edge triple has at most the triple bound of single-hub copies through
/// two of its edges. Needs `d >= 3t - 5`, `t >= max(4, ℓ + 3)`.
pub fn verify_triple_lemma(d: usize, s: usize, p: &ThetaPattern) -> Result<LemmaReport> {
    check_pattern_lower(p)?;
    check_d(d, 3 * p.t() - 5, "3t - 5")?;
    let idx = single_hub_index(d, s, p)?;
    Ok(report(LemmaKind::Triple, &idx, 3, SubsetCoverage::Exhaustive, triple_bound(s, p), max_triple_cover(&idx)))
}

/// Every `i`-subset (`i >= 4`) has at most the multi bound of single-hub copies
/// through two of its edges. Needs `d >= t - 1`.
pub fn verify_multi_lemma(d: usize, s: usize, p: &ThetaPattern, i: usize, coverage: SubsetCoverage) -> Result<LemmaReport> {
    if i < 4 {
        return Err(Error::HypothesesUnmet(format!("subset size i = {i} must be at least 4")));
    }
    check_d(d, p.t() - 1, "t - 1")?;
    let idx = single_hub_index(d, s, p)?;
    let (max, witness, checked, used) = max_subset_cover(&idx, i, coverage);
    Ok(report(LemmaKind::Multi, &idx, i, used, multi_bound(s, p, i), (max, witness, checked)))
}

#[derive(Clone, Debug, Serialize)]
pub struct ColorBoundEntry {
    pub color: Color,
    pub class_size: usize,
    pub p: usize,
    pub bound: Bound,
}

impl ColorBoundEntry {
    pub fn holds(&self) -> bool {
        self.bound.admits(self.p)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ColorBoundReport {
    pub d: usize,
    pub s: usize,
    pub pattern: String,
    pub class: PatternClass,
    pub entries: Vec<ColorBoundEntry>,
}

impl ColorBoundReport {
    pub fn holds(&self) -> bool {
        self.entries.iter().all(ColorBoundEntry::holds)
    }

    pub fn violations(&self) -> impl Iterator<Item = &ColorBoundEntry> {
        self.entries.iter().filter(|e| !e.holds())
    }
}

/// For every color on at least two edges, `p(c)` over single-hub copies is at
/// most the class bound. Needs `d >= 3t - 5`, `t >= max(4, ℓ + 3)`, and for
/// `s >= 2` a fan with `(s = 2, t >= 6)` or `(s >= 3, t >= 7)`.
pub fn verify_color_bounds(c: &EdgeColoring, p: &ThetaPattern) -> Result<ColorBoundReport> {
    let g = *c.graph();
    check_pattern_lower(p)?;
    check_d(g.d(), 3 * p.t() - 5, "3t - 5")?;
    if color_class_bound(g.s(), p, 2).is_none() {
        return Err(Error::HypothesesUnmet(format!("no class bound for {p} on {g}")));
    }
    let idx = CopyIndex::build(&g, p, CopyScope::SingleHub);
    let mut entries = Vec::new();
    for (color, size) in c.class_sizes() {
        if size < 2 {
            continue;
        }
        let stat = p_statistic_in(c, &idx, color)?;
        let bound = color_class_bound(g.s(), p, size).expect("checked above");
        entries.push(ColorBoundEntry { color, class_size: size, p: stat.p, bound });
    }
    Ok(ColorBoundReport { d: g.d(), s: g.s(), pattern: p.to_string(), class: PatternClass::of(p), entries })
}

/// Exact counts behind the two-hub `F_5` and three-hub `F_6` ceilings, over all
/// copies, maximized over every placement of the run.
#[derive(Clone, Debug, Serialize)]
pub struct ConfigurationCounts {
    pub d: usize,
    /// `F_5` in `W_d(2)`: copies through two consecutive spokes `u_a v_i, u_a v_{i+1}`.
    pub two_spokes_min: usize,
    pub two_spokes_max: usize,
    /// `F_5` in `W_d(2)`: copies through at least two of three consecutive spokes.
    pub three_spokes_max: usize,
    /// `F_6` in `W_d(3)`: copies through two consecutive rim edges.
    pub two_rims_max: usize,
    /// `F_6` in `W_d(3)`: copies through at least two of three consecutive rim edges.
    pub three_rims_max: usize,
}

pub fn configuration_counts(d: usize) -> Result<ConfigurationCounts> {
    let g2 = WheelGraph::new(d, 2)?;
    let g3 = WheelGraph::new(d, 3)?;
    let f5 = CopyIndex::build(&g2, &ThetaPattern::fan(5)?, CopyScope::All);
    let f6 = CopyIndex::build(&g3, &ThetaPattern::fan(6)?, CopyScope::All);
    let spokes = |hub: usize, start: usize, len: usize| -> Vec<usize> {
        (0..len).map(|k| g2.linearize(EdgeId::Spoke { hub, pos: g2.wrap((start + k) as i64) })).collect()
    };
    let rims = |start: usize, len: usize| -> Vec<usize> {
        (0..len).map(|k| g3.linearize(EdgeId::Rim(g3.wrap((start + k) as i64)))).collect()
    };
    let two_spokes: Vec<usize> =
        (1..=2).flat_map(|hub| (1..=d).map(move |i| (hub, i))).map(|(h, i)| f5.cover_count(&spokes(h, i, 2))).collect();
    let three_spokes =
        (1..=2).flat_map(|hub| (1..=d).map(move |i| (hub, i))).map(|(h, i)| f5.cover_count(&spokes(h, i, 3))).max();
    Ok(ConfigurationCounts {
        d,
        two_spokes_min: two_spokes.iter().copied().min().unwrap_or(0),
        two_spokes_max: two_spokes.iter().copied().max().unwrap_or(0),
        three_spokes_max: three_spokes.unwrap_or(0),
        two_rims_max: (1..=d).map(|i| f6.cover_count(&rims(i, 2))).max().unwrap_or(0),
        three_rims_max: (1..=d).map(|i| f6.cover_count(&rims(i, 3))).max().unwrap_or(0),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumeration::enumerate_oracle;

    fn theta(t: usize, chords: &[usize]) -> ThetaPattern {
        ThetaPattern::new(t, chords.to_vec()).unwrap()
    }

    #[test]
    fn documented_bounds() {
        let f4 = ThetaPattern::fan(4).unwrap();
        assert_eq!(pair_bound(1, &f4), Bound::integer(2));
        assert_eq!(pair_bound(2, &theta(6, &[4])), Bound::integer(6));
        assert_eq!(pair_bound(1, &theta(5, &[3])), Bound::integer(4));
        assert_eq!(triple_bound(1, &f4), Bound::integer(3));
        assert_eq!(triple_bound(1, &ThetaPattern::cycle(5).unwrap()), Bound::integer(4));
        assert_eq!(triple_bound(2, &ThetaPattern::fan(6).unwrap()), Bound::integer(8));
        assert_eq!(multi_bound(1, &f4, 4), Bound::integer(6));
        assert_eq!(multi_bound(1, &theta(5, &[3]), 4), Bound::integer(12));
        assert_eq!(multi_bound(2, &theta(6, &[4]), 4), Bound::integer(16));
        assert_eq!(multi_bound(1, &ThetaPattern::fan(6).unwrap(), 5), Bound::halves(25));
        assert_eq!(color_class_bound(1, &f4, 2), Some(Bound::integer(2)));
        assert_eq!(color_class_bound(1, &theta(5, &[3]), 3), Some(Bound::integer(8)));
        assert_eq!(color_class_bound(2, &ThetaPattern::fan(6).unwrap(), 2), Some(Bound::integer(6)));
        assert_eq!(color_class_bound(2, &ThetaPattern::fan(5).unwrap(), 2), None);
        assert_eq!(color_class_bound(2, &ThetaPattern::cycle(6).unwrap(), 2), None);
    }

    #[test]
    fn bound_display() {
        assert_eq!(Bound::halves(25).to_string(), "12.5");
        assert_eq!(serde_json::to_string(&Bound::halves(25)).unwrap(), "12.5");
        assert_eq!(serde_json::to_string(&Bound::integer(6)).unwrap(), "6");
        assert!(Bound::halves(25).admits(12));
        assert!(!Bound::halves(25).admits(13));
    }

    #[test]
    fn hypotheses_unmet_is_not_a_failure() {
        assert!(matches!(verify_pair_lemma(6, 1, &ThetaPattern::fan(5).unwrap()), Err(Error::HypothesesUnmet(_))));
        assert!(matches!(verify_triple_lemma(9, 1, &ThetaPattern::fan(5).unwrap()), Err(Error::HypothesesUnmet(_))));
        assert!(matches!(
            verify_multi_lemma(9, 1, &ThetaPattern::fan(5).unwrap(), 3, SubsetCoverage::Auto),
            Err(Error::HypothesesUnmet(_))
        ));
        assert!(matches!(verify_pair_lemma(9, 1, &ThetaPattern::cycle(3).unwrap()), Err(Error::HypothesesUnmet(_))));
    }

    #[test]
    fn pair_examples() {
        let r = verify_pair_lemma(5, 1, &ThetaPattern::fan(4).unwrap()).unwrap();
        assert!(r.holds(), "{}", r.line());
        assert_eq!(r.max_observed, 2);
        let r = verify_pair_lemma(9, 2, &theta(6, &[4])).unwrap();
        assert!(r.holds(), "{}", r.line());
        let r = verify_pair_lemma(7, 1, &theta(5, &[3])).unwrap();
        assert!(r.holds(), "{}", r.line());
    }

    /// Brute-force count over explicit subsets, independent of the incremental sweep.
    fn brute_cover(idx: &CopyIndex, subset: &[usize]) -> usize {
        idx.copies.iter().filter(|c| subset.iter().filter(|&&e| c.edges.contains(e)).count() >= 2).count()
    }

    #[test]
    fn triple_sweep_matches_brute_force() {
        let g = WheelGraph::new(7, 2).unwrap();
        let idx = CopyIndex::build(&g, &theta(5, &[3]), CopyScope::SingleHub);
        let m = g.edge_count();
        let mut best = 0;
        for a in 1..=m {
            for b in a + 1..=m {
                for c in b + 1..=m {
                    best = best.max(brute_cover(&idx, &[a, b, c]));
                }
            }
        }
        let (max, witness, checked) = max_triple_cover(&idx);
        assert_eq!(max, best);
        assert_eq!(brute_cover(&idx, &witness), best);
        assert_eq!(checked, binomial(m as u64, 3));
    }

    #[test]
    fn reduced_sweep_matches_exhaustive() {
        for (d, s, p) in [(6, 2, ThetaPattern::fan(4).unwrap()), (7, 3, theta(5, &[3])), (8, 2, ThetaPattern::cycle(5).unwrap())] {
            let g = WheelGraph::new(d, s).unwrap();
            let idx = CopyIndex::build(&g, &p, CopyScope::SingleHub);
            for size in [4, 5] {
                let full = max_subset_cover(&idx, size, SubsetCoverage::Exhaustive);
                let reduced = max_subset_cover(&idx, size, SubsetCoverage::SymmetryReduced);
                assert_eq!(full.0, reduced.0, "{p} on W_{d}({s}), i = {size}");
                assert!(reduced.2 < full.2);
                assert_eq!(brute_cover(&idx, &reduced.1), reduced.0);
            }
        }
    }

    #[test]
    fn configuration_examples() {
        let counts = configuration_counts(8).unwrap();
        assert_eq!((counts.two_spokes_min, counts.two_spokes_max), (9, 9));
        assert!(counts.three_spokes_max <= 15);
        assert!(counts.two_rims_max <= 15);
        assert!(counts.three_rims_max <= 27);
    }

    #[test]
    fn color_bounds_on_rainbow_coloring() {
        let g = WheelGraph::wheel(7).unwrap();
        let f4 = ThetaPattern::fan(4).unwrap();
        let mut colors: Vec<Color> = (1..=14).collect();
        colors[1] = colors[0];
        let c = EdgeColoring::new(g, colors).unwrap();
        let r = verify_color_bounds(&c, &f4).unwrap();
        assert_eq!(r.entries.len(), 1);
        assert!(r.holds());
        assert_eq!(r.entries[0].p, 2);
        assert!(!enumerate_oracle(&g, &f4).is_empty());
    }
}
