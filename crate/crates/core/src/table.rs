//! Formula, construction and solver values side by side over a parameter grid.

use std::io::Write;

use serde::Serialize;

use crate::cache::{CacheKey, SolveCache};
use crate::error::Result;
use crate::formulas::{rb_formula, ValueKind};
use crate::graph::WheelGraph;
use crate::patterns::ThetaPattern;
use crate::solver::{lower_bound_from_construction, solve_exact, SolveOptions, SolveOutcome};

/// Column order of the CSV output.
pub const CSV_COLUMNS: [&str; 9] = ["d", "s", "t", "chords", "formula", "kind", "construction_lb", "solver", "agree"];

/// Patterns of a grid row, resolved against each `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PatternSpec {
    Fan,
    Cycle,
    Chords(Vec<usize>),
}

impl PatternSpec {
    /// `None` when the chords do not fit in a `t`-cycle.
    pub fn resolve(&self, t: usize) -> Option<ThetaPattern> {
        match self {
            PatternSpec::Fan => ThetaPattern::fan(t).ok(),
            PatternSpec::Cycle => ThetaPattern::cycle(t).ok(),
            PatternSpec::Chords(c) => ThetaPattern::new(t, c.clone()).ok(),
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct TableGrid {
    pub d: Vec<usize>,
    pub s: Vec<usize>,
    pub t: Vec<usize>,
    pub patterns: Vec<PatternSpec>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub d: usize,
    pub s: usize,
    pub t: usize,
    /// Chord positions separated by spaces; empty for cycles.
    pub chords: String,
    pub formula: Option<u64>,
    /// `exact`, `upper_bound`, `lower_bound` or `out_of_domain`.
    pub kind: String,
    pub construction_lb: Option<usize>,
    /// `rb` as a number, or `lo..=hi` when the budget ran out.
    pub solver: Option<String>,
    /// Whether every available value is consistent; empty with nothing to compare.
    pub agree: Option<bool>,
}

fn agreement(formula: Option<(u64, ValueKind)>, lb: Option<usize>, solved: Option<(usize, usize)>) -> Option<bool> {
    let mut checks = Vec::new();
    if let (Some(lb), Some((f, kind))) = (lb, formula) {
        if kind != ValueKind::LowerBound {
            checks.push(lb as u64 <= f);
        }
    }
    if let Some((lo, hi)) = solved {
        if let Some(lb) = lb {
            checks.push(lb <= hi);
        }
        if let Some((f, kind)) = formula {
            let (lo, hi) = (lo as u64, hi as u64);
            checks.push(match kind {
                ValueKind::Exact => lo <= f && f <= hi && (lo != hi || lo == f),
                ValueKind::UpperBound => lo <= f,
                ValueKind::LowerBound => f <= hi,
            });
        }
    }
    (!checks.is_empty()).then(|| checks.into_iter().all(|c| c))
}

/// One row per `(d, s, t, pattern)` in the grid, in that nesting order. Rows
/// whose pattern does not fit `t`, or whose host is degenerate, are left out.
/// With `solve` set, each row is also solved exactly (through `cache` if given).
pub fn emit_table(
    grid: &TableGrid,
    solve: Option<SolveOptions>,
    mut cache: Option<&mut SolveCache>,
) -> Result<Vec<TableRow>> {
    let mut rows = Vec::new();
    for &d in &grid.d {
        for &s in &grid.s {
            let Ok(g) = WheelGraph::new(d, s) else { continue };
            for &t in &grid.t {
                for spec in &grid.patterns {
                    let Some(p) = spec.resolve(t) else { continue };
                    let formula = rb_formula(d, s, &p).map(|f| (f.value, f.kind));
                    let lb = lower_bound_from_construction(&g, &p).ok();
                    let solved = match solve {
                        Some(options) => Some(solve_row(&g, &p, options, cache.as_deref_mut())?),
                        None => None,
                    };
                    rows.push(TableRow {
                        d,
                        s,
                        t,
                        chords: p.chords().iter().map(usize::to_string).collect::<Vec<_>>().join(" "),
                        formula: formula.map(|f| f.0),
                        kind: formula.map_or("out_of_domain".to_string(), |f| f.1.to_string()),
                        construction_lb: lb,
                        solver: solved.map(|(lo, hi)| if lo == hi { lo.to_string() } else { format!("{lo}..={hi}") }),
                        agree: agreement(formula, lb, solved),
                    });
                }
            }
        }
    }
    Ok(rows)
}

fn solve_row(
    g: &WheelGraph,
    p: &ThetaPattern,
    options: SolveOptions,
    cache: Option<&mut SolveCache>,
) -> Result<(usize, usize)> {
    let key = CacheKey::new(g.d(), g.s(), p, "exact");
    if let Some(hit) = cache.as_ref().and_then(|c| c.get(&key)) {
        return Ok((hit.rb_value, hit.rb_value));
    }
    let outcome = solve_exact(g, p, options)?;
    if let (SolveOutcome::Exact(r), Some(cache)) = (&outcome, cache) {
        cache.insert(key, r)?;
    }
    Ok(outcome.rb_interval())
}

pub fn write_csv<W: Write>(rows: &[TableRow], out: W) -> Result<()> {
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(out);
    w.write_record(CSV_COLUMNS).map_err(csv_error)?;
    for r in rows {
        w.serialize(r).map_err(csv_error)?;
    }
    w.flush()?;
    Ok(())
}

fn csv_error(e: csv::Error) -> crate::error::Error {
    std::io::Error::other(e).into()
}
