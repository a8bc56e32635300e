//! Exact values for F_5 in W_d(2) and F_6 in W_d(3) on small rims, compared
//! with the known ceilings. Pass a per-instance time limit in seconds.
//!
//! ```text
//! cargo run --release --example open_value_probe -- 60
//! ```

use std::time::Duration;

use rainbow_wheels::formulas::rb_formula;
use rainbow_wheels::graph::WheelGraph;
use rainbow_wheels::patterns::ThetaPattern;
use rainbow_wheels::solver::{probe_open_value, Budget, SolveOptions, SolveOutcome};

fn main() -> rainbow_wheels::error::Result<()> {
    let secs = std::env::args().nth(1).map_or(30, |a| a.parse().expect("seconds"));
    let options = SolveOptions { budget: Budget::with_timeout(Duration::from_secs(secs)), orbit_pruning: true };
    let cases = (5..=10).map(|d| (d, 2, 5)).chain((5..=8).map(|d| (d, 3, 6)));
    for (d, s, t) in cases {
        let g = WheelGraph::new(d, s)?;
        let p = ThetaPattern::fan(t)?;
        let ceiling = rb_formula(d, s, &p).map(|f| f.value).expect("ceiling applies for d >= 5");
        let outcome = probe_open_value(&g, &p, options)?;
        let stats = outcome.stats();
        let found = match &outcome {
            SolveOutcome::Exact(r) => format!("rb = {}", r.rb_value),
            SolveOutcome::Unknown { rb_lower, rb_upper, .. } => format!("rb in [{rb_lower}, {rb_upper}]"),
        };
        println!(
            "F_{t} in {g:<7} ceiling {ceiling:>3}   {found:<16} {:>10} nodes {:>8.1?}",
            stats.nodes, stats.wall_time
        );
    }
    Ok(())
}
