//! Acceptance gate: one PASS/FAIL line per criterion. Criteria 1 to 5 gate the
//! suite; criterion 6 is reported only.
//!
//! ```text
//! cargo test --test acceptance
//! ```

use std::io::Write;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use rainbow_wheels::coloring::find_rainbow;
use rainbow_wheels::enumeration::{enumerate_hub_centered, enumerate_oracle, CopyIndex, CopyScope};
use rainbow_wheels::error::Error;
use rainbow_wheels::extremal::{construct_rim_grouped, construct_spoke_grouped, rim_grouped_targets};
use rainbow_wheels::formulas::{rb_formula, ValueKind};
use rainbow_wheels::graph::{EdgeId, WheelGraph};
use rainbow_wheels::lemma::{
    configuration_counts, verify_multi_lemma, verify_pair_lemma, verify_triple_lemma, LemmaReport, SubsetCoverage,
};
use rainbow_wheels::patterns::ThetaPattern;
use rainbow_wheels::solver::{
    lower_bound_from_construction, probe_open_value, solve_exact, Budget, SolveOptions, SolveOutcome,
};

/// Failures found while checking one criterion.
#[derive(Default)]
struct Check {
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Check {
    fn expect(&mut self, ok: bool, what: impl Into<String>) {
        if !ok {
            self.failures.push(what.into());
        }
    }

    fn eq<T: PartialEq + std::fmt::Debug>(&mut self, got: T, want: T, what: &str) {
        if got != want {
            self.failures.push(format!("{what}: got {got:?}, want {want:?}"));
        }
    }

    fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn report(n: usize, title: &str, gating: bool, check: &Check, elapsed: Duration) -> bool {
    let verdict = if check.passed() { "PASS" } else { "FAIL" };
    let tag = if gating { "" } else { " (stretch, not gating)" };
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "criterion {n}{tag}: {verdict} {title} [{elapsed:.1?}]");
    for note in &check.notes {
        let _ = writeln!(out, "    {note}");
    }
    for f in check.failures.iter().take(20) {
        let _ = writeln!(out, "    failure: {f}");
    }
    check.passed() || !gating
}

fn fan(t: usize) -> ThetaPattern {
    ThetaPattern::fan(t).unwrap()
}

fn theta(t: usize, chords: &[usize]) -> ThetaPattern {
    ThetaPattern::new(t, chords.to_vec()).unwrap()
}

fn copy_counts() -> Check {
    let mut c = Check::default();
    for (t, d) in [(4, 7), (5, 8), (6, 10)] {
        let g = WheelGraph::wheel(d).unwrap();
        c.eq(enumerate_oracle(&g, &fan(t)).len(), d, &format!("F_{t} copies in W_{d}"));
    }
    let samples = [
        (13, 2, theta(6, &[4]), 26),
        (10, 2, theta(5, &[3]), 40),
        (9, 3, theta(7, &[3, 6]), 27),
        (9, 1, theta(6, &[3, 5]), 9),
        (11, 3, theta(7, &[4]), 66),
        (8, 2, ThetaPattern::cycle(5).unwrap(), 16),
    ];
    for (d, s, p, want) in samples {
        let g = WheelGraph::new(d, s).unwrap();
        let hub = enumerate_hub_centered(&g, &p).unwrap();
        c.eq(hub.len(), s * d * p.multiplicity(), &format!("{p} in {g}: s*d*multiplicity"));
        c.eq(hub.len(), want, &format!("{p} in {g}: documented count"));
        let mut oracle: Vec<_> = CopyIndex::build(&g, &p, CopyScope::SingleHub).copies.into_iter().map(|e| e.edges).collect();
        let mut centered: Vec<_> = hub.into_iter().map(|e| e.edges).collect();
        oracle.sort();
        centered.sort();
        c.expect(oracle == centered, format!("{p} in {g}: hub-centered copies differ from single-hub oracle copies"));
    }
    for (d, s, t) in [(8, 2, 5), (10, 3, 6)] {
        let g = WheelGraph::new(d, s).unwrap();
        let m = t;
        c.eq(enumerate_oracle(&g, &fan(t)).len(), (3 * m - 9) * d, &format!("F_{t} copies in {g}"));
    }
    c
}

fn incidence_constants() -> Check {
    let mut c = Check::default();
    for (s, t, spoke, rim) in [(2, 5, 14, 14), (3, 6, 19, 24)] {
        let g = WheelGraph::new(10, s).unwrap();
        let idx = CopyIndex::build(&g, &fan(t), CopyScope::All);
        for e in g.edges() {
            let want = if e.is_spoke() { spoke } else { rim };
            c.eq(idx.incidence(e).unwrap(), want, &format!("F_{t} copies through {e} in {g}"));
        }
    }
    c
}

/// `C_t`, one asymmetric θ, one symmetric non-fan θ and `F_t`, where they exist.
fn lemma_patterns(t: usize) -> Vec<ThetaPattern> {
    let mut out = vec![ThetaPattern::cycle(t).unwrap()];
    let others: Vec<_> = (1..=t - 3).flat_map(|ell| ThetaPattern::all_with(t, ell)).filter(|p| !p.is_fan()).collect();
    out.extend(others.iter().find(|p| !p.is_symmetric()).cloned());
    out.extend(others.iter().find(|p| p.is_symmetric()).cloned());
    out.push(fan(t));
    out
}

fn lemma_sweeps() -> Check {
    let mut c = Check::default();
    let mut jobs = Vec::new();
    for s in 1..=3 {
        for t in 4..=7 {
            for d in [3 * t - 5, 3 * t - 2] {
                for p in lemma_patterns(t) {
                    for kind in 0..4 {
                        jobs.push((s, t, d, p.clone(), kind));
                    }
                }
            }
        }
    }
    let results: Vec<Result<LemmaReport, Error>> = jobs
        .par_iter()
        .map(|(s, _, d, p, kind)| match kind {
            0 => verify_pair_lemma(*d, *s, p),
            1 => verify_triple_lemma(*d, *s, p),
            2 => verify_multi_lemma(*d, *s, p, 4, SubsetCoverage::SymmetryReduced),
            _ => verify_multi_lemma(*d, *s, p, 5, SubsetCoverage::SymmetryReduced),
        })
        .collect();
    let (mut held, mut skipped, mut subsets) = (0, 0, 0u64);
    for ((s, _, d, p, _), r) in jobs.iter().zip(results) {
        match r {
            Ok(r) => {
                subsets += r.subsets_checked;
                if r.holds() {
                    held += 1;
                } else {
                    c.failures.push(r.line());
                }
            }
            Err(Error::HypothesesUnmet(_)) => skipped += 1,
            Err(e) => c.failures.push(format!("{p} on W_{d}({s}): {e}")),
        }
    }
    c.notes.push(format!("{held} sweeps held, {skipped} skipped by hypotheses, {subsets} subsets examined"));
    for d in 5..=14 {
        let counts = configuration_counts(d).unwrap();
        c.eq((counts.two_spokes_min, counts.two_spokes_max), (9, 9), &format!("two consecutive spokes in W_{d}(2)"));
        c.expect(counts.three_spokes_max <= 15, format!("three consecutive spokes in W_{d}(2): {}", counts.three_spokes_max));
        c.expect(counts.two_rims_max <= 15, format!("two consecutive rim edges in W_{d}(3): {}", counts.two_rims_max));
        c.expect(counts.three_rims_max <= 27, format!("three consecutive rim edges in W_{d}(3): {}", counts.three_rims_max));
    }
    c
}

fn extremal_constructions() -> Check {
    let mut c = Check::default();
    let mut jobs = Vec::new();
    for t in 4..=9 {
        for d in t - 1..=4 * t {
            jobs.push((0, 1, t, d));
            if t >= 5 {
                for s in 1..=4 {
                    jobs.push((1, s, t, d));
                }
            }
        }
    }
    let results: Vec<_> = jobs
        .par_iter()
        .map(|&(mode, s, t, d)| if mode == 0 { construct_spoke_grouped(d, t) } else { construct_rim_grouped(d, s, t) })
        .collect();
    let mut verified = 0;
    for (&(mode, s, t, d), r) in jobs.iter().zip(results) {
        match r {
            Ok(r) => {
                let num = if mode == 0 { 2 * t - 5 } else { (s + 1) * t - (3 * s + 4) };
                let den = if mode == 0 { t - 2 } else { t - 3 };
                c.eq(r.colors_used, num * d / den, &format!("colors of construction {mode} on W_{d}({s}), t = {t}"));
                verified += r.verified_against.len();
            }
            Err(e) => c.failures.push(format!("construction {mode} on W_{d}({s}), t = {t}: {e}")),
        }
    }
    c.notes.push(format!("{} colorings, {verified} pattern checks against the oracle", jobs.len()));

    let a = construct_spoke_grouped(8, 5).unwrap();
    let spokes: Vec<u32> = (1..=8).map(|pos| a.coloring.color(EdgeId::Spoke { hub: 1, pos })).collect();
    c.eq(spokes, vec![9, 9, 10, 11, 11, 12, 13, 13], "W_8 spoke colors");
    c.eq(a.colors_used, 13, "W_8 colors");
    c.expect(find_rainbow(&a.coloring, &fan(5)).is_none(), "W_8 coloring has a rainbow F_5");
    let b = construct_rim_grouped(8, 2, 6).unwrap();
    let rim: Vec<u32> = (1..=8).map(|i| b.coloring.color(EdgeId::Rim(i))).collect();
    c.eq(rim, vec![17, 17, 18, 19, 19, 20, 21, 21], "W_8(2) rim colors");
    c.eq(b.colors_used, 21, "W_8(2) colors");
    c.expect(find_rainbow(&b.coloring, &fan(6)).is_none(), "W_8(2) coloring has a rainbow F_6");
    c.expect(find_rainbow(&b.coloring, &fan(5)).is_some(), "W_8(2) coloring has no rainbow F_5");
    c.eq(rim_grouped_targets(2, 6), vec![fan(6)], "W_d(2) rim targets");
    c
}

fn exact_solver() -> Check {
    let mut c = Check::default();
    let cases = [
        (5, ThetaPattern::cycle(3).unwrap(), 7),
        (6, ThetaPattern::cycle(3).unwrap(), 8),
        (6, ThetaPattern::cycle(4).unwrap(), 9),
        (7, fan(4), 11),
        (8, fan(5), 14),
        (10, ThetaPattern::cycle(5).unwrap(), 16),
        (10, theta(5, &[3]), 16),
        (10, theta(5, &[4]), 16),
    ];
    let mut previous: Option<(ThetaPattern, usize)> = None;
    for (d, p, want) in cases {
        let g = WheelGraph::wheel(d).unwrap();
        let started = Instant::now();
        let options = SolveOptions { budget: Budget::with_timeout(Duration::from_secs(60)), orbit_pruning: false };
        let outcome = solve_exact(&g, &p, options).unwrap();
        let elapsed = started.elapsed();
        c.expect(elapsed <= Duration::from_secs(60), format!("{p} on {g} took {elapsed:?}"));
        let SolveOutcome::Exact(r) = outcome else {
            c.failures.push(format!("{p} on {g}: no exact value within budget"));
            continue;
        };
        c.eq(r.rb_value, want, &format!("rb({g}, {p})"));
        c.expect(find_rainbow(&r.witness, &p).is_none(), format!("{p} on {g}: witness has a rainbow copy"));
        c.eq(r.witness.color_count(), r.ar_value, &format!("{p} on {g}: witness colors"));
        if let Ok(lb) = lower_bound_from_construction(&g, &p) {
            c.expect(lb <= r.rb_value, format!("{p} on {g}: construction bound {lb} above rb {}", r.rb_value));
        }
        if let Some(f) = rb_formula(d, 1, &p) {
            match f.kind {
                ValueKind::Exact => c.eq(r.rb_value as u64, f.value, &format!("{p} on {g}: closed form")),
                ValueKind::UpperBound => c.expect(r.rb_value as u64 <= f.value, format!("{p} on {g}: above ceiling")),
                ValueKind::LowerBound => c.expect(r.rb_value as u64 >= f.value, format!("{p} on {g}: below floor")),
            }
        }
        let again = solve_exact(&g, &p, SolveOptions::default()).unwrap();
        c.expect(again.exact().is_some_and(|x| x.witness == r.witness), format!("{p} on {g}: rerun differs"));
        if let Some((q, ar)) = &previous {
            if *q == p {
                c.expect(*ar <= r.ar_value, format!("ar of {p} decreased from W_{} to {g}", d - 1));
            }
        }
        previous = Some((p.clone(), r.ar_value));
    }
    c
}

fn open_value_probe() -> Check {
    let mut c = Check::default();
    let g = WheelGraph::new(8, 2).unwrap();
    let p = fan(5);
    let options = SolveOptions { budget: Budget::with_timeout(Duration::from_secs(30 * 60)), orbit_pruning: true };
    match probe_open_value(&g, &p, options) {
        Ok(outcome) => {
            let (lo, hi) = outcome.rb_interval();
            let certified = outcome.exact().is_some_and(|r| r.certified_by_search);
            c.notes.push(format!("rb(W_8(2), F_5) in [{lo}, {hi}], certified by search: {certified}"));
            c.expect(hi <= 19, format!("upper end {hi} exceeds the ceiling 19"));
            c.expect(lo >= 2, "lower end below the trivial bound");
        }
        Err(e) => c.failures.push(e.to_string()),
    }
    c
}

type Criterion = (&'static str, bool, fn() -> Check);

#[test]
fn acceptance() {
    let criteria: [Criterion; 6] = [
        ("copy counts", true, copy_counts),
        ("incidence constants", true, incidence_constants),
        ("lemma sweeps", true, lemma_sweeps),
        ("extremal constructions", true, extremal_constructions),
        ("exact solver against closed forms", true, exact_solver),
        ("open value probe for F_5 in W_8(2)", false, open_value_probe),
    ];
    let mut gate = true;
    for (n, (title, gating, run)) in criteria.into_iter().enumerate() {
        let started = Instant::now();
        let check = run();
        gate &= report(n + 1, title, gating, &check, started.elapsed());
    }
    assert!(gate, "a gating acceptance criterion failed");
}
