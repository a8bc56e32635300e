//! Copies of a chorded cycle inside `W_d(s)`.
//!
//! Two independent routes are provided. [`enumerate_hub_centered`] writes the
//! copies down directly: pattern vertex `w_1` on a hub `u_a` and the rest of the
//! boundary cycle on a consecutive arc `v_q … v_{q+t-2}`. [`enumerate_oracle`]
//! makes no placement assumption and backtracks over every injective map of the
//! pattern's boundary cycle into the host. A copy is identified by its edge set.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Vertex, WheelGraph};
use crate::patterns::ThetaPattern;

/// Sorted linear edge ids of a subgraph.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EdgeSet(Vec<usize>);

impl EdgeSet {
    pub fn from_ids(mut ids: Vec<usize>) -> Self {
        ids.sort_unstable();
        ids.dedup();
        EdgeSet(ids)
    }

    pub fn ids(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, id: usize) -> bool {
        self.0.binary_search(&id).is_ok()
    }

    pub fn edges<'a>(&'a self, g: &'a WheelGraph) -> impl Iterator<Item = EdgeId> + 'a {
        self.0.iter().map(move |&id| g.unlinearize(id).expect("edge id from this graph"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Orientation {
    Forward,
    Reversed,
}

/// How an embedding was produced. Not part of its identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Provenance {
    HubCentered { hub: usize, start: usize, orientation: Orientation },
    OracleFound,
}

/// One copy of a pattern in the host.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Embedding {
    pub edges: EdgeSet,
    pub provenance: Provenance,
}

impl PartialEq for Embedding {
    fn eq(&self, other: &Self) -> bool {
        self.edges == other.edges
    }
}

impl Eq for Embedding {}

impl PartialOrd for Embedding {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Embedding {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.edges.cmp(&other.edges)
    }
}

impl std::hash::Hash for Embedding {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.edges.hash(state);
    }
}

impl Embedding {
    /// Distinct hubs touched by the copy.
    pub fn hub_count(&self, g: &WheelGraph) -> usize {
        let hubs: BTreeSet<usize> = self
            .edges
            .edges(g)
            .filter_map(|e| match e {
                EdgeId::Spoke { hub, .. } => Some(hub),
                EdgeId::Rim(_) => None,
            })
            .collect();
        hubs.len()
    }

    pub fn vertices(&self, g: &WheelGraph) -> BTreeSet<Vertex> {
        self.edges
            .edges(g)
            .flat_map(|e| {
                let (a, b) = g.endpoints(e);
                [a, b]
            })
            .collect()
    }
}

/// Every copy with `w_1` on a hub and the remaining cycle on a boundary arc.
/// Asymmetric patterns contribute both orientations, so the result has exactly
/// `s·d·multiplicity(p)` elements, sorted by edge list.
pub fn enumerate_hub_centered(g: &WheelGraph, p: &ThetaPattern) -> Result<Vec<Embedding>> {
    let (t, d) = (p.t(), g.d());
    if t > d {
        return Err(Error::InfeasibleArc { t, d });
    }
    let x = p.chord_vector();
    let forward: Vec<usize> = x.iter().map(|&i| i - 2).collect();
    let reversed: Vec<usize> = x.iter().map(|&i| t - i).collect();
    let mut orientations = vec![(Orientation::Forward, forward)];
    if p.multiplicity() == 2 {
        orientations.push((Orientation::Reversed, reversed));
    }

    let mut out = Vec::with_capacity(g.s() * d * orientations.len());
    for hub in 1..=g.s() {
        for start in 1..=d {
            for (orientation, offsets) in &orientations {
                let mut ids: Vec<usize> = offsets
                    .iter()
                    .map(|&off| g.linearize(EdgeId::Spoke { hub, pos: g.wrap((start + off) as i64) }))
                    .collect();
                ids.extend((0..t - 2).map(|k| g.linearize(EdgeId::Rim(g.wrap((start + k) as i64)))));
                out.push(Embedding {
                    edges: EdgeSet::from_ids(ids),
                    provenance: Provenance::HubCentered { hub, start, orientation: *orientation },
                });
            }
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// Every copy of `p` in `g`, found by brute-force backtracking and deduplicated
/// by edge set. Sorted by edge list.
pub fn enumerate_oracle(g: &WheelGraph, p: &ThetaPattern) -> Vec<Embedding> {
    let n = g.vertex_count();
    let t = p.t();
    if t > n {
        return Vec::new();
    }
    let mut adjacent = vec![false; n * n];
    let mut neighbors: Vec<Vec<usize>> = vec![Vec::new(); n];
    for e in g.edges() {
        let (a, b) = g.endpoints(e);
        let (a, b) = (g.vertex_index(a), g.vertex_index(b));
        adjacent[a * n + b] = true;
        adjacent[b * n + a] = true;
        neighbors[a].push(b);
        neighbors[b].push(a);
    }
    // must_touch_first[k]: pattern vertex w_k is joined to w_1 (closing edge or chord).
    let mut must_touch_first = vec![false; t + 1];
    must_touch_first[t] = true;
    for &i in p.chords() {
        must_touch_first[i] = true;
    }
    let pattern_edges = p.edges();

    struct Search<'a> {
        n: usize,
        t: usize,
        adjacent: &'a [bool],
        neighbors: &'a [Vec<usize>],
        must_touch_first: &'a [bool],
        image: Vec<usize>,
        used: Vec<bool>,
        found: Vec<Vec<usize>>,
    }

    impl Search<'_> {
        fn extend(&mut self, k: usize) {
            if k > self.t {
                self.found.push(self.image.clone());
                return;
            }
            let prev = self.image[k - 2];
            let first = self.image[0];
            for idx in 0..self.neighbors[prev].len() {
                let cand = self.neighbors[prev][idx];
                if self.used[cand] {
                    continue;
                }
                if self.must_touch_first[k] && !self.adjacent[first * self.n + cand] {
                    continue;
                }
                self.used[cand] = true;
                self.image.push(cand);
                self.extend(k + 1);
                self.image.pop();
                self.used[cand] = false;
            }
        }
    }

    let maps: Vec<Vec<usize>> = (0..n)
        .into_par_iter()
        .flat_map_iter(|start| {
            let mut search = Search {
                n,
                t,
                adjacent: &adjacent,
                neighbors: &neighbors,
                must_touch_first: &must_touch_first,
                image: vec![start],
                used: vec![false; n],
                found: Vec::new(),
            };
            search.used[start] = true;
            search.extend(2);
            search.found
        })
        .collect();

    let mut sets = BTreeSet::new();
    for image in maps {
        let ids = pattern_edges
            .iter()
            .map(|&(a, b)| {
                let e = g
                    .edge_between(g.vertex_at(image[a - 1]), g.vertex_at(image[b - 1]))
                    .expect("backtracking only places adjacent vertices");
                g.linearize(e)
            })
            .collect();
        sets.insert(EdgeSet::from_ids(ids));
    }
    sets.into_iter().map(|edges| Embedding { edges, provenance: Provenance::OracleFound }).collect()
}

/// Which copies a count ranges over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CopyScope {
    /// Every copy in the host.
    All,
    /// Copies containing exactly one hub vertex.
    SingleHub,
}

/// Copies of a pattern together with a per-edge incidence index.
#[derive(Clone, Debug)]
pub struct CopyIndex {
    pub graph: WheelGraph,
    pub pattern: ThetaPattern,
    pub scope: CopyScope,
    pub copies: Vec<Embedding>,
    /// `by_edge[id - 1]`: positions in `copies` of the copies containing edge `id`.
    pub by_edge: Vec<Vec<usize>>,
}

impl CopyIndex {
    pub fn build(g: &WheelGraph, p: &ThetaPattern, scope: CopyScope) -> Self {
        let mut copies = enumerate_oracle(g, p);
        if scope == CopyScope::SingleHub {
            copies.retain(|c| c.hub_count(g) == 1);
        }
        Self::from_copies(g, p, scope, copies)
    }

    pub fn from_copies(g: &WheelGraph, p: &ThetaPattern, scope: CopyScope, copies: Vec<Embedding>) -> Self {
        let mut by_edge = vec![Vec::new(); g.edge_count()];
        for (k, c) in copies.iter().enumerate() {
            for &id in c.edges.ids() {
                by_edge[id - 1].push(k);
            }
        }
        CopyIndex { graph: *g, pattern: p.clone(), scope, copies, by_edge }
    }

    pub fn len(&self) -> usize {
        self.copies.len()
    }

    pub fn is_empty(&self) -> bool {
        self.copies.is_empty()
    }

    pub fn incidence(&self, e: EdgeId) -> Result<usize> {
        if !self.graph.contains_edge(e) {
            return Err(Error::Lookup(format!("{e} is not an edge of {}", self.graph)));
        }
        Ok(self.by_edge[self.graph.linearize(e) - 1].len())
    }

    /// Number of copies containing at least two of `edges` (given as linear ids).
    pub fn cover_count(&self, edges: &[usize]) -> usize {
        let mut hits = vec![0u8; self.copies.len()];
        let mut covered = 0;
        for &id in edges {
            for &c in &self.by_edge[id - 1] {
                hits[c] += 1;
                if hits[c] == 2 {
                    covered += 1;
                }
            }
        }
        covered
    }
}

/// Number of copies (all copies, via the oracle) containing `e`.
pub fn incidence_count(g: &WheelGraph, p: &ThetaPattern, e: EdgeId) -> Result<usize> {
    if !g.contains_edge(e) {
        return Err(Error::Lookup(format!("{e} is not an edge of {g}")));
    }
    let id = g.linearize(e);
    Ok(enumerate_oracle(g, p).iter().filter(|c| c.edges.contains(id)).count())
}

/// Whether every copy of the fan `p` in `g` meets exactly one hub.
pub fn check_single_hub(g: &WheelGraph, p: &ThetaPattern) -> Result<bool> {
    if !p.is_fan() {
        return Err(Error::Domain(format!("{p} is not a fan")));
    }
    Ok(enumerate_oracle(g, p).iter().all(|c| c.hub_count(g) == 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn theta(t: usize, chords: &[usize]) -> ThetaPattern {
        ThetaPattern::new(t, chords.to_vec()).unwrap()
    }

    #[test]
    fn hub_centered_examples() {
        let w8 = WheelGraph::wheel(8).unwrap();
        assert_eq!(enumerate_hub_centered(&w8, &ThetaPattern::fan(5).unwrap()).unwrap().len(), 8);
        let w13_2 = WheelGraph::new(13, 2).unwrap();
        assert_eq!(enumerate_hub_centered(&w13_2, &theta(6, &[4])).unwrap().len(), 26);
        let w10 = WheelGraph::wheel(10).unwrap();
        assert_eq!(enumerate_hub_centered(&w10, &theta(5, &[3])).unwrap().len(), 20);
    }

    #[test]
    fn hub_centered_rejects_long_pattern() {
        let w5 = WheelGraph::wheel(5).unwrap();
        assert!(matches!(
            enumerate_hub_centered(&w5, &ThetaPattern::cycle(6).unwrap()),
            Err(Error::InfeasibleArc { t: 6, d: 5 })
        ));
    }

    #[test]
    fn oracle_examples() {
        let w8_2 = WheelGraph::new(8, 2).unwrap();
        assert_eq!(enumerate_oracle(&w8_2, &ThetaPattern::fan(5).unwrap()).len(), 48);
        let f6 = ThetaPattern::fan(6).unwrap();
        let oracle = enumerate_oracle(&w8_2, &f6);
        assert_eq!(oracle, enumerate_hub_centered(&w8_2, &f6).unwrap());
        assert_eq!(oracle.len(), 16);
        let w5 = WheelGraph::wheel(5).unwrap();
        assert_eq!(enumerate_oracle(&w5, &ThetaPattern::cycle(3).unwrap()).len(), 5);
    }

    #[test]
    fn oracle_empty_when_pattern_too_large() {
        let w3 = WheelGraph::wheel(3).unwrap();
        assert!(enumerate_oracle(&w3, &ThetaPattern::cycle(5).unwrap()).is_empty());
    }

    #[test]
    fn incidence_examples() {
        let w10_2 = WheelGraph::new(10, 2).unwrap();
        let f5 = ThetaPattern::fan(5).unwrap();
        assert_eq!(incidence_count(&w10_2, &f5, EdgeId::Spoke { hub: 2, pos: 7 }).unwrap(), 14);
        let w10 = WheelGraph::wheel(10).unwrap();
        assert_eq!(incidence_count(&w10, &theta(6, &[4]), EdgeId::Rim(3)).unwrap(), 4);
        assert!(matches!(incidence_count(&w10, &f5, EdgeId::Rim(11)), Err(Error::Lookup(_))));
    }

    #[test]
    fn single_hub_examples() {
        let w8_2 = WheelGraph::new(8, 2).unwrap();
        assert!(!check_single_hub(&w8_2, &ThetaPattern::fan(5).unwrap()).unwrap());
        let w13_2 = WheelGraph::new(13, 2).unwrap();
        assert!(check_single_hub(&w13_2, &ThetaPattern::fan(6).unwrap()).unwrap());
        assert!(check_single_hub(&w13_2, &ThetaPattern::cycle(6).unwrap()).is_err());
    }

    #[test]
    fn cover_count_counts_pairs() {
        let g = WheelGraph::new(9, 2).unwrap();
        let idx = CopyIndex::build(&g, &ThetaPattern::fan(5).unwrap(), CopyScope::All);
        let a = g.linearize(EdgeId::Spoke { hub: 1, pos: 4 });
        let b = g.linearize(EdgeId::Spoke { hub: 1, pos: 5 });
        assert_eq!(idx.cover_count(&[a, b]), 9);
        assert_eq!(idx.cover_count(&[a]), 0);
    }
}
