//! Exact rainbow numbers on small wheels, next to the closed forms and the
//! construction lower bounds.

use std::time::Instant;

use rainbow_wheels::coloring::find_rainbow;
use rainbow_wheels::formulas::rb_formula;
use rainbow_wheels::graph::WheelGraph;
use rainbow_wheels::patterns::ThetaPattern;
use rainbow_wheels::solver::{lower_bound_from_construction, solve_exact, SolveOptions, SolveOutcome};

fn main() -> rainbow_wheels::error::Result<()> {
    let cases = [
        (5, ThetaPattern::cycle(3)?),
        (6, ThetaPattern::cycle(3)?),
        (6, ThetaPattern::cycle(4)?),
        (7, ThetaPattern::fan(4)?),
        (8, ThetaPattern::fan(5)?),
        (10, ThetaPattern::cycle(5)?),
        (10, ThetaPattern::new(5, vec![3])?),
        (10, ThetaPattern::new(5, vec![4])?),
    ];
    println!("{:<6} {:<16} {:>7} {:>12} {:>4} {:>10}", "host", "pattern", "formula", "construction", "rb", "time");
    for (d, p) in cases {
        let g = WheelGraph::wheel(d)?;
        let started = Instant::now();
        let SolveOutcome::Exact(r) = solve_exact(&g, &p, SolveOptions::default())? else {
            unreachable!("no budget was set")
        };
        assert!(find_rainbow(&r.witness, &p).is_none());
        let formula = rb_formula(d, 1, &p).map_or("-".to_string(), |f| f.value.to_string());
        let lb = lower_bound_from_construction(&g, &p).map_or("-".to_string(), |v| v.to_string());
        println!(
            "{:<6} {:<16} {:>7} {:>12} {:>4} {:>10.1?}",
            g.to_string(),
            p.to_string(),
            formula,
            lb,
            r.rb_value,
            started.elapsed()
        );
    }

    let g = WheelGraph::wheel(7)?;
    let SolveOutcome::Exact(r) = solve_exact(&g, &ThetaPattern::fan(4)?, SolveOptions::default())? else {
        unreachable!()
    };
    println!("\nrainbow-free witness with {} colors on {g}:\n{}", r.ar_value, r.witness.to_json());
    Ok(())
}
