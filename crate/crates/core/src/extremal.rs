//! The two grouped colorings that certify lower bounds on rainbow numbers.
//!
//! Both split a run of edges (spokes of `W_d`, or rim edges of `W_d(s)`) into
//! consecutive groups of a fixed width. Inside a group the first two edges
//! share a fresh color and each later edge gets the next color; a trailing
//! group of one edge reuses the color of the edge before it. Every window of
//! `width + 1` consecutive edges, wrapping around, then repeats a color, which
//! defeats every copy of the target pattern. The remaining edges all get
//! distinct colors.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::coloring::{find_rainbow, Color, EdgeColoring};
use crate::error::{Error, Result};
use crate::formulas::floor_ratio;
use crate::graph::{EdgeId, WheelGraph};
use crate::patterns::ThetaPattern;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ConstructionKind {
    /// Spokes of `W_d` grouped by `t - 2`; rim edge `v_i v_{i+1}` gets color `i`.
    SpokeGrouped,
    /// Rim edges of `W_d(s)` grouped by `t - 3`; spoke `u_a v_i` gets `(a-1)d + i`.
    RimGrouped,
}

impl fmt::Display for ConstructionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ConstructionKind::SpokeGrouped => "spoke",
            ConstructionKind::RimGrouped => "rim",
        })
    }
}

#[derive(Clone, Debug)]
pub struct ConstructionReport {
    pub kind: ConstructionKind,
    pub t: usize,
    pub coloring: EdgeColoring,
    pub colors_used: usize,
    /// The floor formula the color count must match.
    pub formula_value: usize,
    /// Group width: `t - 2` for spokes, `t - 3` for rim edges.
    pub width: usize,
    /// Number of groups `q = ⌈d / width⌉`.
    pub groups: usize,
    /// Size of the last group, `1 <= p <= width`.
    pub last_group_size: usize,
    /// Patterns the coloring was checked to have no rainbow copy of.
    pub verified_against: Vec<ThetaPattern>,
}

impl ConstructionReport {
    /// Whether the last group is full, i.e. `width` divides `d`.
    pub fn exact_division(&self) -> bool {
        self.last_group_size == self.width
    }

    /// Lower bound `colors_used + 1` on the rainbow number of each verified pattern.
    pub fn rb_lower_bound(&self) -> usize {
        self.colors_used + 1
    }

    pub fn summary(&self) -> String {
        let branch = if self.exact_division() { "width divides d" } else { "short last group" };
        let verified: Vec<String> = self.verified_against.iter().map(|p| p.to_string()).collect();
        format!(
            "{} construction on {} (t = {}): width {}, q = {}, p = {} ({branch}); {} colors, formula {}; no rainbow copy of [{}]",
            self.kind,
            self.coloring.graph(),
            self.t,
            self.width,
            self.groups,
            self.last_group_size,
            self.colors_used,
            self.formula_value,
            verified.join(", ")
        )
    }
}

/// Colors of `len` consecutive edges grouped by `width`, numbered from `base + 1`.
fn grouped_colors(len: usize, width: usize, base: usize) -> Vec<Color> {
    debug_assert!(width >= 2 && len > width);
    let last = len - 1;
    (0..len)
        .map(|k| {
            let (m, i) = (k / width, k % width);
            let c = if k == last && i == 0 {
                // A trailing group of one edge repeats the previous color.
                base + m * (width - 1)
            } else {
                base + m * (width - 1) + i.max(1)
            };
            c as Color
        })
        .collect()
}

fn group_shape(d: usize, width: usize) -> (usize, usize) {
    let q = d.div_ceil(width);
    (q, d - (q - 1) * width)
}

/// The spoke-grouped coloring of `W_d` without verification.
pub fn spoke_grouped_coloring(d: usize, t: usize) -> Result<EdgeColoring> {
    if t < 4 || d + 1 < t {
        return Err(Error::Domain(format!("spoke construction needs t >= 4 and d >= t - 1, got d = {d}, t = {t}")));
    }
    let g = WheelGraph::wheel(d)?;
    let spokes = grouped_colors(d, t - 2, d);
    EdgeColoring::from_fn(g, |e| match e {
        EdgeId::Rim(i) => i as Color,
        EdgeId::Spoke { pos, .. } => spokes[pos - 1],
    })
}

/// The rim-grouped coloring of `W_d(s)` without verification.
pub fn rim_grouped_coloring(d: usize, s: usize, t: usize) -> Result<EdgeColoring> {
    if t < 5 || d + 1 < t || s < 1 {
        return Err(Error::Domain(format!(
            "rim construction needs t >= 5, d >= t - 1 and s >= 1, got d = {d}, s = {s}, t = {t}"
        )));
    }
    let g = WheelGraph::new(d, s)?;
    let rims = grouped_colors(d, t - 3, s * d);
    EdgeColoring::from_fn(g, |e| match e {
        EdgeId::Rim(i) => rims[i - 1],
        EdgeId::Spoke { hub, pos } => ((hub - 1) * d + pos) as Color,
    })
}

/// Patterns the rim-grouped coloring of `W_d(s)` defeats: every `θ_{t,ℓ}` with
/// `ℓ <= t - 4` when `s = 1`, the fan when `(s = 2, t >= 6)` or `(s >= 3, t >= 7)`,
/// nothing otherwise.
pub fn rim_grouped_targets(s: usize, t: usize) -> Vec<ThetaPattern> {
    if s == 1 {
        (0..=t.saturating_sub(4)).flat_map(|ell| ThetaPattern::all_with(t, ell)).collect()
    } else if (s == 2 && t >= 6) || (s >= 3 && t >= 7) {
        vec![ThetaPattern::fan(t).expect("t >= 6")]
    } else {
        Vec::new()
    }
}

fn verify(coloring: &EdgeColoring, targets: &[ThetaPattern]) -> Result<()> {
    for p in targets {
        if let Some(w) = find_rainbow(coloring, p) {
            return Err(Error::Invariant(format!(
                "construction on {} has a rainbow {p}: edges {:?}",
                coloring.graph(),
                w.embedding.edges.ids()
            )));
        }
    }
    Ok(())
}

/// Spoke-grouped coloring of `W_d` with `2d - ⌈d/(t-2)⌉ = ⌊(2t-5)d/(t-2)⌋`
/// colors and no rainbow `F_t`. Requires `t >= 4`, `d >= t - 1`.
pub fn construct_spoke_grouped(d: usize, t: usize) -> Result<ConstructionReport> {
    let coloring = spoke_grouped_coloring(d, t)?;
    let width = t - 2;
    let (groups, last_group_size) = group_shape(d, width);
    let formula_value = floor_ratio(2 * t as u64 - 5, width as u64, d as u64) as usize;
    finish(ConstructionKind::SpokeGrouped, t, coloring, formula_value, width, groups, last_group_size, vec![
        ThetaPattern::fan(t)?,
    ])
}

/// Rim-grouped coloring of `W_d(s)` with `(s+1)d - ⌈d/(t-3)⌉` colors. Requires
/// `t >= 5`, `d >= t - 1`; checked rainbow-free against [`rim_grouped_targets`].
pub fn construct_rim_grouped(d: usize, s: usize, t: usize) -> Result<ConstructionReport> {
    let coloring = rim_grouped_coloring(d, s, t)?;
    let width = t - 3;
    let (groups, last_group_size) = group_shape(d, width);
    let num = ((s + 1) * t - (3 * s + 4)) as u64;
    let formula_value = floor_ratio(num, width as u64, d as u64) as usize;
    let targets = rim_grouped_targets(s, t);
    finish(ConstructionKind::RimGrouped, t, coloring, formula_value, width, groups, last_group_size, targets)
}

#[allow(clippy::too_many_arguments)]
fn finish(
    kind: ConstructionKind,
    t: usize,
    coloring: EdgeColoring,
    formula_value: usize,
    width: usize,
    groups: usize,
    last_group_size: usize,
    targets: Vec<ThetaPattern>,
) -> Result<ConstructionReport> {
    let colors_used = coloring.color_count();
    if colors_used != formula_value {
        return Err(Error::Invariant(format!(
            "{kind} construction on {} uses {colors_used} colors, formula gives {formula_value}",
            coloring.graph()
        )));
    }
    verify(&coloring, &targets)?;
    Ok(ConstructionReport {
        kind,
        t,
        coloring,
        colors_used,
        formula_value,
        width,
        groups,
        last_group_size,
        verified_against: targets,
    })
}
