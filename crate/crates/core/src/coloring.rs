//! Edge colorings of `W_d(s)`, their color-class histogram and rainbow checks.
//!
//! Colors are positive integers and need not be contiguous. `A_i` is the set of
//! colors used on exactly `i` edges; `p_j(c)` counts copies with exactly `j`
//! edges of color `c`, and `p(c) = Σ_{j≥2} p_j(c)`.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::enumeration::{CopyIndex, CopyScope, Embedding};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, WheelGraph};
use crate::patterns::ThetaPattern;

pub type Color = u32;

/// Current version of the coloring file format.
pub const FORMAT_VERSION: u32 = 1;

/// A total color assignment on the edges of a host.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EdgeColoring {
    graph: WheelGraph,
    /// Indexed by linear edge id minus one.
    colors: Vec<Color>,
}

impl EdgeColoring {
    /// `colors[k]` colors the edge with linear id `k + 1`.
    pub fn new(graph: WheelGraph, colors: Vec<Color>) -> Result<Self> {
        if colors.len() != graph.edge_count() {
            return Err(Error::Domain(format!(
                "{} colors given for {} edges of {graph}",
                colors.len(),
                graph.edge_count()
            )));
        }
        if let Some(k) = colors.iter().position(|&c| c == 0) {
            return Err(Error::Domain(format!("edge id {} has color 0; colors are positive", k + 1)));
        }
        Ok(EdgeColoring { graph, colors })
    }

    pub fn from_fn(graph: WheelGraph, mut f: impl FnMut(EdgeId) -> Color) -> Result<Self> {
        let colors = graph.edges().map(&mut f).collect();
        Self::new(graph, colors)
    }

    /// Every edge gets its own color.
    pub fn rainbow(graph: WheelGraph) -> Self {
        EdgeColoring { graph, colors: (1..=graph.edge_count() as Color).collect() }
    }

    pub fn monochromatic(graph: WheelGraph) -> Self {
        EdgeColoring { graph, colors: vec![1; graph.edge_count()] }
    }

    pub fn graph(&self) -> &WheelGraph {
        &self.graph
    }

    pub fn color(&self, e: EdgeId) -> Color {
        self.colors[self.graph.linearize(e) - 1]
    }

    pub fn color_of_id(&self, id: usize) -> Color {
        self.colors[id - 1]
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    /// Number of distinct colors used.
    pub fn color_count(&self) -> usize {
        self.colors.iter().collect::<BTreeSet<_>>().len()
    }

    /// Linear ids of the edges carrying `color`.
    pub fn class(&self, color: Color) -> Vec<usize> {
        (1..=self.colors.len()).filter(|&id| self.colors[id - 1] == color).collect()
    }

    /// Class size of every used color.
    pub fn class_sizes(&self) -> BTreeMap<Color, usize> {
        let mut sizes = BTreeMap::new();
        for &c in &self.colors {
            *sizes.entry(c).or_insert(0) += 1;
        }
        sizes
    }

    /// `A_i` for every `i` with `A_i` non-empty.
    pub fn histogram(&self) -> BTreeMap<usize, BTreeSet<Color>> {
        let mut out: BTreeMap<usize, BTreeSet<Color>> = BTreeMap::new();
        for (color, size) in self.class_sizes() {
            out.entry(size).or_default().insert(color);
        }
        out
    }

    /// Whether all edges of `emb` carry pairwise distinct colors.
    pub fn is_rainbow(&self, emb: &Embedding) -> bool {
        let mut seen = BTreeSet::new();
        emb.edges.ids().iter().all(|&id| seen.insert(self.colors[id - 1]))
    }

    pub fn to_file(&self) -> ColoringFile {
        let (d, s) = (self.graph.d(), self.graph.s());
        ColoringFile {
            format: Some(FORMAT_VERSION),
            d,
            s,
            rim: (1..=d).map(|i| self.color(EdgeId::Rim(i)) as u64).collect(),
            spokes: (1..=s)
                .map(|hub| (1..=d).map(|pos| self.color(EdgeId::Spoke { hub, pos }) as u64).collect())
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_file()).expect("coloring serializes")
    }

    /// Parses the JSON coloring format; errors carry the byte offset of the problem.
    pub fn from_json(text: &str) -> Result<Self> {
        let file: ColoringFile = serde_json::from_str(text).map_err(|e| Error::Schema {
            offset: byte_offset(text, e.line(), e.column()),
            message: e.to_string(),
        })?;
        let at = |key: &str| text.find(&format!("\"{key}\"")).unwrap_or(0);
        if let Some(v) = file.format {
            if v != FORMAT_VERSION {
                return Err(Error::Schema { offset: at("format"), message: format!("unsupported format version {v}") });
            }
        }
        let graph = WheelGraph::new(file.d, file.s)
            .map_err(|e| Error::Schema { offset: at("d"), message: e.to_string() })?;
        if file.rim.len() != file.d {
            return Err(Error::Schema {
                offset: at("rim"),
                message: format!("rim has {} entries, expected d = {}", file.rim.len(), file.d),
            });
        }
        if file.spokes.len() != file.s || file.spokes.iter().any(|row| row.len() != file.d) {
            return Err(Error::Schema {
                offset: at("spokes"),
                message: format!("spokes must be {} rows of {} colors", file.s, file.d),
            });
        }
        let all = file.spokes.iter().flatten().chain(file.rim.iter());
        let mut colors = Vec::with_capacity(graph.edge_count());
        for &c in all {
            if c == 0 || c > Color::MAX as u64 {
                let key = if colors.len() < file.s * file.d { "spokes" } else { "rim" };
                return Err(Error::Schema { offset: at(key), message: format!("color {c} is not a positive 32-bit integer") });
            }
            colors.push(c as Color);
        }
        EdgeColoring::new(graph, colors)
    }
}

impl Serialize for EdgeColoring {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_file().serialize(serializer)
    }
}

/// On-disk coloring: `rim[i-1]` colors `v_i v_{i+1}` and `spokes[a-1][i-1]`
/// colors `u_a v_i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ColoringFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub format: Option<u32>,
    pub d: usize,
    pub s: usize,
    pub rim: Vec<u64>,
    pub spokes: Vec<Vec<u64>>,
}

fn byte_offset(text: &str, line: usize, column: usize) -> usize {
    if line == 0 {
        return 0;
    }
    let line_start: usize = text.split_inclusive('\n').take(line - 1).map(str::len).sum();
    (line_start + column.saturating_sub(1)).min(text.len())
}

/// A copy whose edges carry pairwise distinct colors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RainbowWitness {
    pub embedding: Embedding,
    pub distinct_colors: usize,
}

/// First rainbow copy of `p` in canonical order, over all copies.
pub fn find_rainbow(c: &EdgeColoring, p: &ThetaPattern) -> Option<RainbowWitness> {
    find_rainbow_in(c, &CopyIndex::build(c.graph(), p, CopyScope::All))
}

pub fn find_rainbow_in(c: &EdgeColoring, copies: &CopyIndex) -> Option<RainbowWitness> {
    copies.copies.iter().find(|emb| c.is_rainbow(emb)).map(|emb| RainbowWitness {
        embedding: emb.clone(),
        distinct_colors: emb.edges.len(),
    })
}

/// `p_j(color)` for every `j >= 1` with a non-zero count, and their sum over `j >= 2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PStatistic {
    pub color: Color,
    pub class_size: usize,
    pub by_j: BTreeMap<usize, usize>,
    pub p: usize,
}

impl PStatistic {
    /// `Σ_j j·p_j`.
    pub fn weighted_sum(&self) -> usize {
        self.by_j.iter().map(|(j, n)| j * n).sum()
    }
}

pub fn p_statistic(c: &EdgeColoring, p: &ThetaPattern, color: Color, scope: CopyScope) -> Result<PStatistic> {
    p_statistic_in(c, &CopyIndex::build(c.graph(), p, scope), color)
}

pub fn p_statistic_in(c: &EdgeColoring, copies: &CopyIndex, color: Color) -> Result<PStatistic> {
    let class = c.class(color);
    if class.is_empty() {
        return Err(Error::Lookup(format!("color {color} is not used by the coloring")));
    }
    let mut hits = vec![0usize; copies.len()];
    for &id in &class {
        for &k in &copies.by_edge[id - 1] {
            hits[k] += 1;
        }
    }
    let mut by_j = BTreeMap::new();
    for &h in hits.iter().filter(|&&h| h > 0) {
        *by_j.entry(h).or_insert(0) += 1;
    }
    let p = by_j.iter().filter(|(&j, _)| j >= 2).map(|(_, &n)| n).sum();
    Ok(PStatistic { color, class_size: class.len(), by_j, p })
}
