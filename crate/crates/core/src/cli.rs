//! Argument types and dispatch for the `rainbow-wheels` binary.
//!
//! Exit codes: 0 when every asserted property held, 1 when one was violated,
//! 2 for parameters outside a domain, 3 for unreadable or malformed input,
//! 4 when the solver budget ran out before an exact answer.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::cache::{CacheKey, SolveCache};
use crate::coloring::{find_rainbow, EdgeColoring};
use crate::enumeration::{enumerate_hub_centered, CopyIndex, CopyScope};
use crate::error::{Error, Result};
use crate::extremal::{construct_rim_grouped, construct_spoke_grouped, ConstructionReport};
use crate::graph::WheelGraph;
use crate::lemma::{
    verify_color_bounds, verify_multi_lemma, verify_pair_lemma, verify_triple_lemma, ColorBoundReport, LemmaReport,
    SubsetCoverage,
};
use crate::patterns::ThetaPattern;
use crate::solver::{probe_open_value, solve_exact, Budget, SolveOptions, SolveOutcome};
use crate::table::{emit_table, write_csv, PatternSpec, TableGrid};

#[derive(Debug, Parser)]
#[command(name = "rainbow-wheels", version, about = "Rainbow numbers of chorded cycles in multi-hubbed wheels")]
pub struct Cli {
    /// More log output on stderr (-v info, -vv debug).
    #[arg(short, long, action = clap::ArgAction::Count, global = true)]
    pub verbose: u8,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Vertex and edge data of W_d(s).
    Wheel(WheelArgs),
    /// Copies of a pattern, as lists of linear edge ids.
    Enumerate(EnumerateArgs),
    /// Sweep a counting bound over a parameter grid.
    Lemma(LemmaArgs),
    /// Build a grouped extremal coloring.
    Extremal(ExtremalArgs),
    /// Check a coloring file for rainbow copies.
    Verify(VerifyArgs),
    /// Exact rainbow number by complete search.
    Solve(SolveArgs),
    /// Formula, construction and solver values over a grid.
    Table(TableArgs),
}

#[derive(Debug, Clone, Args)]
pub struct HostArgs {
    #[arg(long)]
    pub d: usize,
    /// Number of hubs.
    #[arg(long, default_value_t = 1)]
    pub s: usize,
}

impl HostArgs {
    pub fn graph(&self) -> Result<WheelGraph> {
        WheelGraph::new(self.d, self.s)
    }
}

#[derive(Debug, Clone, Args)]
#[command(group(ArgGroup::new("shape").required(true).args(["chords", "fan", "cycle"])))]
pub struct PatternArgs {
    /// Cycle length.
    #[arg(long)]
    pub t: usize,
    /// Chord endpoints, e.g. `3,5`.
    #[arg(long, value_delimiter = ',')]
    pub chords: Vec<usize>,
    /// All chords `3..t-1`.
    #[arg(long)]
    pub fan: bool,
    /// No chords.
    #[arg(long)]
    pub cycle: bool,
}

impl PatternArgs {
    pub fn pattern(&self) -> Result<ThetaPattern> {
        if self.fan {
            ThetaPattern::fan(self.t)
        } else if self.cycle {
            ThetaPattern::cycle(self.t)
        } else {
            ThetaPattern::new(self.t, self.chords.clone())
        }
    }
}

/// A list of values written as `4,7`, `3..=6`, `3..7` or a mix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Grid(pub Vec<usize>);

pub fn parse_grid(text: &str) -> std::result::Result<Grid, String> {
    let mut values = Vec::new();
    for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let num = |s: &str| s.trim().parse::<usize>().map_err(|e| format!("`{s}`: {e}"));
        if let Some((a, b)) = part.split_once("..=") {
            values.extend(num(a)?..=num(b)?);
        } else if let Some((a, b)) = part.split_once("..") {
            values.extend(num(a)?..num(b)?);
        } else {
            values.push(num(part)?);
        }
    }
    Ok(Grid(values))
}

/// A pattern family for grid commands: `fan`, `cycle`, `all`, or chords like `3,5`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PatternChoice {
    Spec(PatternSpec),
    All,
}

pub fn parse_pattern_choice(text: &str) -> std::result::Result<PatternChoice, String> {
    match text.trim() {
        "fan" => Ok(PatternChoice::Spec(PatternSpec::Fan)),
        "cycle" => Ok(PatternChoice::Spec(PatternSpec::Cycle)),
        "all" => Ok(PatternChoice::All),
        other => parse_grid(other).map(|g| PatternChoice::Spec(PatternSpec::Chords(g.0))),
    }
}

impl PatternChoice {
    fn expand(&self, t: usize) -> Vec<ThetaPattern> {
        match self {
            PatternChoice::Spec(spec) => spec.resolve(t).into_iter().collect(),
            PatternChoice::All => (0..=t.saturating_sub(3)).flat_map(|ell| ThetaPattern::all_with(t, ell)).collect(),
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    /// Write the result here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct WheelArgs {
    #[command(flatten)]
    pub host: HostArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// Backtracking over the whole host.
    Oracle,
    /// Closed-form single-hub placements.
    HubCentered,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ScopeArg {
    All,
    SingleHub,
}

impl From<ScopeArg> for CopyScope {
    fn from(s: ScopeArg) -> Self {
        match s {
            ScopeArg::All => CopyScope::All,
            ScopeArg::SingleHub => CopyScope::SingleHub,
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct EnumerateArgs {
    #[command(flatten)]
    pub host: HostArgs,
    #[command(flatten)]
    pub pattern: PatternArgs,
    #[arg(long, value_enum, default_value_t = Method::Oracle)]
    pub method: Method,
    /// Copies kept by the oracle.
    #[arg(long, value_enum, default_value_t = ScopeArg::All)]
    pub scope: ScopeArg,
    /// Also assert that the hub-centered copies are exactly the single-hub oracle copies.
    #[arg(long)]
    pub check: bool,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum LemmaArg {
    Pair,
    Triple,
    Multi,
    Colorbound,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CoverageArg {
    Auto,
    Exhaustive,
    Reduced,
}

impl From<CoverageArg> for SubsetCoverage {
    fn from(c: CoverageArg) -> Self {
        match c {
            CoverageArg::Auto => SubsetCoverage::Auto,
            CoverageArg::Exhaustive => SubsetCoverage::Exhaustive,
            CoverageArg::Reduced => SubsetCoverage::SymmetryReduced,
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct LemmaArgs {
    #[arg(long, value_enum)]
    pub lemma: LemmaArg,
    /// Rim lengths; defaults to `3t-5,3t-2` for each `t`.
    #[arg(long, value_parser = parse_grid)]
    pub d: Option<Grid>,
    #[arg(long, value_parser = parse_grid, default_value = "1")]
    pub s: Grid,
    #[arg(long, value_parser = parse_grid)]
    pub t: Grid,
    /// Pattern family, repeatable: `fan`, `cycle`, `all` or chords such as `3,5`.
    #[arg(long = "pattern", value_parser = parse_pattern_choice, default_value = "all")]
    pub patterns: Vec<PatternChoice>,
    /// Subset sizes for `multi`.
    #[arg(long, value_parser = parse_grid, default_value = "4,5")]
    pub i: Grid,
    #[arg(long, value_enum, default_value_t = CoverageArg::Auto)]
    pub coverage: CoverageArg,
    /// Coloring file for `colorbound`; its host replaces `--d` and `--s`.
    #[arg(long)]
    pub coloring: Option<PathBuf>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    /// Group the spokes of W_d.
    Spoke,
    /// Group the rim edges of W_d(s).
    Rim,
}

#[derive(Debug, Clone, Args)]
pub struct ExtremalArgs {
    #[arg(long, value_enum)]
    pub mode: ModeArg,
    #[command(flatten)]
    pub host: HostArgs,
    #[arg(long)]
    pub t: usize,
    /// Coloring file to write; without it the coloring goes to stdout and the report to stderr.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Expectation {
    Rainbow,
    RainbowFree,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub coloring: PathBuf,
    #[command(flatten)]
    pub pattern: PatternArgs,
    /// Fail unless the coloring has (or avoids) a rainbow copy.
    #[arg(long, value_enum)]
    pub expect: Option<Expectation>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct BudgetArgs {
    #[arg(long)]
    pub max_merges: Option<usize>,
    #[arg(long)]
    pub timeout_secs: Option<u64>,
    #[arg(long)]
    pub node_limit: Option<u64>,
    /// Memoize search states up to symmetry of the host.
    #[arg(long)]
    pub orbit_pruning: bool,
}

impl BudgetArgs {
    pub fn options(&self) -> SolveOptions {
        SolveOptions {
            budget: Budget {
                max_merges: self.max_merges,
                timeout: self.timeout_secs.map(Duration::from_secs),
                node_limit: self.node_limit,
            },
            orbit_pruning: self.orbit_pruning,
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct CacheArgs {
    /// Solver cache file; defaults to `$RAINBOW_WHEELS_CACHE_DIR/solve-cache.ndjson`.
    #[arg(long)]
    pub cache: Option<PathBuf>,
    #[arg(long, conflicts_with = "cache")]
    pub no_cache: bool,
}

impl CacheArgs {
    fn open(&self) -> Result<Option<SolveCache>> {
        if self.no_cache {
            return Ok(None);
        }
        self.cache.clone().or_else(SolveCache::default_path).map(SolveCache::open).transpose()
    }
}

#[derive(Debug, Clone, Args)]
pub struct SolveArgs {
    #[command(flatten)]
    pub host: HostArgs,
    #[command(flatten)]
    pub pattern: PatternArgs,
    #[command(flatten)]
    pub budget: BudgetArgs,
    /// Start from the known ceiling on `rb` instead of depth 0.
    #[arg(long)]
    pub probe: bool,
    /// Write the rainbow-free witness coloring here.
    #[arg(long)]
    pub emit_witness: Option<PathBuf>,
    /// Print the full outcome as JSON.
    #[arg(long)]
    pub json: bool,
    #[command(flatten)]
    pub cache: CacheArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Csv,
    Json,
}

#[derive(Debug, Clone, Args)]
pub struct TableArgs {
    #[arg(long, value_parser = parse_grid)]
    pub d: Grid,
    #[arg(long, value_parser = parse_grid, default_value = "1")]
    pub s: Grid,
    #[arg(long, value_parser = parse_grid)]
    pub t: Grid,
    /// Pattern, repeatable: `fan`, `cycle` or chords such as `3,5`.
    #[arg(long = "pattern", value_parser = parse_pattern_choice, default_value = "fan")]
    pub patterns: Vec<PatternChoice>,
    /// Also run the exact solver on every row.
    #[arg(long)]
    pub solve: bool,
    #[command(flatten)]
    pub budget: BudgetArgs,
    #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
    pub format: TableFormat,
    #[command(flatten)]
    pub output: OutputArgs,
    #[command(flatten)]
    pub cache: CacheArgs,
}

/// What a successful run established.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Status {
    Success,
    Violated(String),
    Inconclusive(String),
}

impl Status {
    pub fn exit_code(&self) -> u8 {
        match self {
            Status::Success => 0,
            Status::Violated(_) => 1,
            Status::Inconclusive(_) => 4,
        }
    }

    /// Machine-readable record for stderr, `None` on success.
    pub fn record(&self) -> Option<serde_json::Value> {
        match self {
            Status::Success => None,
            Status::Violated(m) => Some(json!({"status": "violated", "message": m})),
            Status::Inconclusive(m) => Some(json!({"status": "inconclusive", "message": m})),
        }
    }
}

pub fn error_exit_code(e: &Error) -> u8 {
    match e {
        Error::Invariant(_) => 1,
        Error::Domain(_) | Error::Lookup(_) | Error::InfeasibleArc { .. } | Error::HypothesesUnmet(_) => 2,
        Error::Schema { .. } | Error::Io(_) => 3,
    }
}

pub fn error_record(e: &Error) -> serde_json::Value {
    let kind = match e {
        Error::Domain(_) => "domain",
        Error::Lookup(_) => "lookup",
        Error::InfeasibleArc { .. } => "infeasible_arc",
        Error::HypothesesUnmet(_) => "hypotheses_unmet",
        Error::Schema { .. } => "schema",
        Error::Invariant(_) => "invariant",
        Error::Io(_) => "io",
    };
    let mut record = json!({"status": "error", "kind": kind, "message": e.to_string()});
    if let Error::Schema { offset, .. } = e {
        record["offset"] = json!(offset);
    }
    record
}

/// Runs one subcommand, writing its primary output to `stdout` (or `--out`).
pub fn run(cli: &Cli, stdout: &mut dyn Write) -> Result<Status> {
    match &cli.command {
        Command::Wheel(a) => wheel(a, stdout),
        Command::Enumerate(a) => enumerate(a, stdout),
        Command::Lemma(a) => lemma(a, stdout),
        Command::Extremal(a) => extremal(a, stdout),
        Command::Verify(a) => verify(a, stdout),
        Command::Solve(a) => solve(a, stdout),
        Command::Table(a) => table(a, stdout),
    }
}

fn emit(text: &str, out: Option<&Path>, stdout: &mut dyn Write) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text)?,
        None => stdout.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn emit_json<T: Serialize>(value: &T, out: Option<&Path>, stdout: &mut dyn Write) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value).expect("output serializes");
    text.push('\n');
    emit(&text, out, stdout)
}

fn read_coloring(path: &Path) -> Result<EdgeColoring> {
    EdgeColoring::from_json(&fs::read_to_string(path)?)
}

fn wheel(a: &WheelArgs, stdout: &mut dyn Write) -> Result<Status> {
    let g = a.host.graph()?;
    let edges: Vec<_> = g
        .edges()
        .map(|e| {
            let (x, y) = g.endpoints(e);
            json!({"id": g.linearize(e), "edge": e.to_string(), "ends": [x.to_string(), y.to_string()]})
        })
        .collect();
    let value = json!({
        "graph": g.to_string(),
        "d": g.d(),
        "s": g.s(),
        "vertex_count": g.vertex_count(),
        "edge_count": g.edge_count(),
        "edges": edges,
    });
    emit_json(&value, a.output.out.as_deref(), stdout)?;
    Ok(Status::Success)
}

fn enumerate(a: &EnumerateArgs, stdout: &mut dyn Write) -> Result<Status> {
    let g = a.host.graph()?;
    let p = a.pattern.pattern()?;
    let (copies, scope) = match a.method {
        Method::Oracle => {
            let idx = CopyIndex::build(&g, &p, a.scope.into());
            (idx.copies, idx.scope)
        }
        Method::HubCentered => (enumerate_hub_centered(&g, &p)?, CopyScope::SingleHub),
    };
    let ids: Vec<&[usize]> = copies.iter().map(|c| c.edges.ids()).collect();
    let mut status = Status::Success;
    if a.check {
        let mut hub: Vec<_> = enumerate_hub_centered(&g, &p)?.into_iter().map(|c| c.edges).collect();
        let mut oracle: Vec<_> = CopyIndex::build(&g, &p, CopyScope::SingleHub).copies.into_iter().map(|c| c.edges).collect();
        hub.sort();
        oracle.sort();
        if hub != oracle {
            status = Status::Violated(format!(
                "{p} on {g}: {} hub-centered copies, {} single-hub oracle copies",
                hub.len(),
                oracle.len()
            ));
        }
    }
    let value = json!({
        "graph": g.to_string(),
        "pattern": p.to_string(),
        "chord_vector": p.chord_vector(),
        "method": format!("{:?}", a.method).to_lowercase(),
        "scope": scope,
        "count": ids.len(),
        "copies": ids,
    });
    emit_json(&value, a.output.out.as_deref(), stdout)?;
    Ok(status)
}

#[derive(Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
enum LemmaEntry {
    Held(LemmaReport),
    Violated(LemmaReport),
    ColorBoundsHeld(ColorBoundReport),
    ColorBoundsViolated(ColorBoundReport),
    Skipped { d: usize, s: usize, pattern: String, reason: String },
}

fn lemma(a: &LemmaArgs, stdout: &mut dyn Write) -> Result<Status> {
    let mut entries = Vec::new();
    let skip = |d, s, p: &ThetaPattern, e: Error| -> Result<LemmaEntry> {
        match e {
            Error::HypothesesUnmet(reason) => Ok(LemmaEntry::Skipped { d, s, pattern: p.to_string(), reason }),
            other => Err(other),
        }
    };
    if a.lemma == LemmaArg::Colorbound {
        let path = a.coloring.as_ref().ok_or_else(|| Error::Domain("colorbound needs --coloring".into()))?;
        let c = read_coloring(path)?;
        let (d, s) = (c.graph().d(), c.graph().s());
        for &t in &a.t.0 {
            for p in a.patterns.iter().flat_map(|pc| pc.expand(t)) {
                entries.push(match verify_color_bounds(&c, &p) {
                    Ok(r) if r.holds() => LemmaEntry::ColorBoundsHeld(r),
                    Ok(r) => LemmaEntry::ColorBoundsViolated(r),
                    Err(e) => skip(d, s, &p, e)?,
                });
            }
        }
    } else {
        for &t in &a.t.0 {
            let ds = a.d.as_ref().map_or_else(|| vec![(3 * t).saturating_sub(5), 3 * t - 2], |g| g.0.clone());
            for &s in &a.s.0 {
                for &d in &ds {
                    for p in a.patterns.iter().flat_map(|pc| pc.expand(t)) {
                        let sizes: Vec<usize> = if a.lemma == LemmaArg::Multi { a.i.0.clone() } else { vec![0] };
                        for &i in &sizes {
                            let result = match a.lemma {
                                LemmaArg::Pair => verify_pair_lemma(d, s, &p),
                                LemmaArg::Triple => verify_triple_lemma(d, s, &p),
                                _ => verify_multi_lemma(d, s, &p, i, a.coverage.into()),
                            };
                            entries.push(match result {
                                Ok(r) if r.holds() => LemmaEntry::Held(r),
                                Ok(r) => LemmaEntry::Violated(r),
                                Err(e) => skip(d, s, &p, e)?,
                            });
                        }
                    }
                }
            }
        }
    }
    let violated = entries
        .iter()
        .filter(|e| matches!(e, LemmaEntry::Violated(_) | LemmaEntry::ColorBoundsViolated(_)))
        .count();
    let held = entries.iter().filter(|e| matches!(e, LemmaEntry::Held(_) | LemmaEntry::ColorBoundsHeld(_))).count();
    log::info!("{held} held, {violated} violated, {} skipped", entries.len() - held - violated);
    emit_json(&entries, a.output.out.as_deref(), stdout)?;
    Ok(if violated > 0 { Status::Violated(format!("{violated} bound(s) violated")) } else { Status::Success })
}

fn extremal_report(r: &ConstructionReport) -> String {
    let targets: Vec<String> = r.verified_against.iter().map(ToString::to_string).collect();
    format!(
        "{} coloring of {}, t = {}\ngroups q = {}, last group p = {}, width {}\ncolors used {} = formula {} ({})\nrb lower bound {}\nrainbow-free for: {}\n",
        r.kind,
        r.coloring.graph(),
        r.t,
        r.groups,
        r.last_group_size,
        r.width,
        r.colors_used,
        r.formula_value,
        if r.exact_division() { "exact division" } else { "remainder branch" },
        r.rb_lower_bound(),
        if targets.is_empty() { "(no guaranteed target)".to_string() } else { targets.join(", ") },
    )
}

fn extremal(a: &ExtremalArgs, stdout: &mut dyn Write) -> Result<Status> {
    let r = match a.mode {
        ModeArg::Spoke if a.host.s != 1 => {
            return Err(Error::Domain("the spoke construction is defined on W_d only (s = 1)".into()))
        }
        ModeArg::Spoke => construct_spoke_grouped(a.host.d, a.t)?,
        ModeArg::Rim => construct_rim_grouped(a.host.d, a.host.s, a.t)?,
    };
    let mut coloring = r.coloring.to_json();
    coloring.push('\n');
    let report = extremal_report(&r);
    match &a.out {
        Some(path) => {
            fs::write(path, coloring)?;
            stdout.write_all(report.as_bytes())?;
        }
        None => {
            stdout.write_all(coloring.as_bytes())?;
            eprint!("{report}");
        }
    }
    Ok(Status::Success)
}

fn verify(a: &VerifyArgs, stdout: &mut dyn Write) -> Result<Status> {
    let c = read_coloring(&a.coloring)?;
    let g = *c.graph();
    let p = a.pattern.pattern()?;
    let witness = find_rainbow(&c, &p);
    let histogram: serde_json::Map<String, serde_json::Value> =
        c.histogram().into_iter().map(|(i, colors)| (i.to_string(), json!(colors))).collect();
    let (bounds, bounds_ok) = match verify_color_bounds(&c, &p) {
        Ok(r) => {
            let ok = r.holds();
            (json!({"status": if ok { "held" } else { "violated" }, "report": r}), ok)
        }
        Err(Error::HypothesesUnmet(reason)) => (json!({"status": "skipped", "reason": reason}), true),
        Err(e) => return Err(e),
    };
    let value = json!({
        "graph": g.to_string(),
        "pattern": p.to_string(),
        "color_count": c.color_count(),
        "rainbow": witness.is_some(),
        "witness": witness.as_ref().map(|w| json!({
            "edges": w.embedding.edges.ids(),
            "labels": w.embedding.edges.edges(&g).map(|e| e.to_string()).collect::<Vec<_>>(),
        })),
        "histogram": histogram,
        "color_bounds": bounds,
    });
    emit_json(&value, a.output.out.as_deref(), stdout)?;
    let rainbow = witness.is_some();
    Ok(match a.expect {
        Some(Expectation::Rainbow) if !rainbow => Status::Violated(format!("no rainbow {p} in the coloring")),
        Some(Expectation::RainbowFree) if rainbow => Status::Violated(format!("the coloring has a rainbow {p}")),
        _ if !bounds_ok => Status::Violated("a color class exceeds its bound".into()),
        _ => Status::Success,
    })
}

fn solve(a: &SolveArgs, stdout: &mut dyn Write) -> Result<Status> {
    let g = a.host.graph()?;
    let p = a.pattern.pattern()?;
    let mut cache = a.cache.open()?;
    let mode = if a.probe { "probe" } else { "exact" };
    let key = CacheKey::new(g.d(), g.s(), &p, mode);
    let outcome = match cache.as_ref().and_then(|c| c.get(&key)) {
        Some(hit) => {
            log::info!("cache hit for {p} on {g}");
            SolveOutcome::Exact(hit)
        }
        None => {
            let outcome =
                if a.probe { probe_open_value(&g, &p, a.budget.options())? } else { solve_exact(&g, &p, a.budget.options())? };
            log::info!("{} nodes in {:?}", outcome.stats().nodes, outcome.stats().wall_time);
            if let (SolveOutcome::Exact(r), Some(cache)) = (&outcome, cache.as_mut()) {
                cache.insert(key, r)?;
            }
            outcome
        }
    };
    if let (Some(path), SolveOutcome::Exact(r)) = (&a.emit_witness, &outcome) {
        let mut text = r.witness.to_json();
        text.push('\n');
        fs::write(path, text)?;
    }
    if a.json {
        emit_json(&json!({"graph": g.to_string(), "pattern": p.to_string(), "outcome": outcome}), None, stdout)?;
    } else {
        let line = match &outcome {
            SolveOutcome::Exact(r) => format!(
                "rb({g}, {p}) = {} (ar = {}, {} copies, first feasible depth {})\n",
                r.rb_value, r.ar_value, r.stats.copies, r.stats.depth_reached
            ),
            SolveOutcome::Unknown { rb_lower, rb_upper, reason, .. } => {
                format!("rb({g}, {p}) in [{rb_lower}, {rb_upper}] ({reason})\n")
            }
        };
        stdout.write_all(line.as_bytes())?;
    }
    Ok(match outcome {
        SolveOutcome::Exact(_) => Status::Success,
        SolveOutcome::Unknown { rb_lower, rb_upper, reason, .. } => {
            Status::Inconclusive(format!("rb in [{rb_lower}, {rb_upper}]: {reason}"))
        }
    })
}

fn table(a: &TableArgs, stdout: &mut dyn Write) -> Result<Status> {
    let mut patterns = Vec::new();
    for choice in &a.patterns {
        match choice {
            PatternChoice::Spec(spec) => patterns.push(spec.clone()),
            PatternChoice::All => return Err(Error::Domain("table takes explicit patterns, not `all`".into())),
        }
    }
    let grid = TableGrid { d: a.d.0.clone(), s: a.s.0.clone(), t: a.t.0.clone(), patterns };
    let mut cache = if a.solve { a.cache.open()? } else { None };
    let rows = emit_table(&grid, a.solve.then(|| a.budget.options()), cache.as_mut())?;
    match a.format {
        TableFormat::Json => emit_json(&rows, a.output.out.as_deref(), stdout)?,
        TableFormat::Csv => {
            let mut buf = Vec::new();
            write_csv(&rows, &mut buf)?;
            emit(&String::from_utf8(buf).expect("csv is utf-8"), a.output.out.as_deref(), stdout)?;
        }
    }
    let disagree = rows.iter().filter(|r| r.agree == Some(false)).count();
    Ok(if disagree > 0 { Status::Violated(format!("{disagree} row(s) disagree")) } else { Status::Success })
}
