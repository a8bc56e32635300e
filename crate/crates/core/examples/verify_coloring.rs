//! Loads a coloring file (or builds one), then reports rainbow copies, the
//! color-class histogram and `p(c)` for every repeated color.
//!
//! ```text
//! cargo run --example verify_coloring -- fig2a.json 5
//! ```

use rainbow_wheels::coloring::{find_rainbow, p_statistic, EdgeColoring};
use rainbow_wheels::enumeration::CopyScope;
use rainbow_wheels::extremal::spoke_grouped_coloring;
use rainbow_wheels::patterns::ThetaPattern;

fn main() -> rainbow_wheels::error::Result<()> {
    let mut args = std::env::args().skip(1);
    let coloring = match args.next() {
        Some(path) => EdgeColoring::from_json(&std::fs::read_to_string(path)?)?,
        None => spoke_grouped_coloring(13, 6)?,
    };
    let t = args.next().map_or(6, |a| a.parse().expect("t"));
    let p = ThetaPattern::fan(t)?;
    let g = *coloring.graph();

    println!("{g} with {} colors", coloring.color_count());
    for (i, colors) in coloring.histogram() {
        println!("  A_{i}: {colors:?}");
    }
    match find_rainbow(&coloring, &p) {
        Some(w) => println!("rainbow {p}: {:?}", w.embedding.edges.ids()),
        None => println!("no rainbow {p}"),
    }
    for (color, size) in coloring.class_sizes() {
        if size >= 2 {
            let stat = p_statistic(&coloring, &p, color, CopyScope::All)?;
            println!("  color {color} on {size} edges: p = {}, by j {:?}", stat.p, stat.by_j);
        }
    }
    Ok(())
}
