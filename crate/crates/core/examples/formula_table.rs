//! Closed forms, construction bounds and solver values as CSV.
//!
//! ```text
//! cargo run --example formula_table > table.csv
//! ```

use rainbow_wheels::solver::SolveOptions;
use rainbow_wheels::table::{emit_table, write_csv, PatternSpec, TableGrid};

fn main() -> rainbow_wheels::error::Result<()> {
    let small = TableGrid {
        d: (5..=10).collect(),
        s: vec![1],
        t: vec![3, 4, 5],
        patterns: vec![PatternSpec::Cycle, PatternSpec::Fan, PatternSpec::Chords(vec![3])],
    };
    let mut rows = emit_table(&small, Some(SolveOptions::default()), None)?;

    let large = TableGrid {
        d: vec![13, 16, 20],
        s: vec![1, 2, 3],
        t: vec![5, 6, 7],
        patterns: vec![PatternSpec::Fan, PatternSpec::Cycle],
    };
    rows.extend(emit_table(&large, None, None)?);
    write_csv(&rows, std::io::stdout().lock())
}
