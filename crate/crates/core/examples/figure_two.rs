//! The two grouped colorings on W_8 and W_8(2), written as JSON and checked.
//!
//! ```text
//! cargo run --example figure_two -- /tmp/out
//! ```

use std::path::PathBuf;

use rainbow_wheels::coloring::find_rainbow;
use rainbow_wheels::extremal::{construct_rim_grouped, construct_spoke_grouped, ConstructionReport};
use rainbow_wheels::graph::EdgeId;
use rainbow_wheels::patterns::ThetaPattern;

fn show(r: &ConstructionReport) {
    let g = *r.coloring.graph();
    println!("{}", r.summary());
    let spokes: Vec<_> = (1..=g.s())
        .map(|hub| (1..=g.d()).map(|pos| r.coloring.color(EdgeId::Spoke { hub, pos })).collect::<Vec<_>>())
        .collect();
    let rim: Vec<_> = (1..=g.d()).map(|i| r.coloring.color(EdgeId::Rim(i))).collect();
    println!("  spokes {spokes:?}\n  rim    {rim:?}");
}

fn main() -> rainbow_wheels::error::Result<()> {
    let dir = std::env::args().nth(1).map(PathBuf::from);

    let a = construct_spoke_grouped(8, 5)?;
    show(&a);
    let b = construct_rim_grouped(8, 2, 6)?;
    show(&b);

    let f5 = ThetaPattern::fan(5)?;
    match find_rainbow(&b.coloring, &f5) {
        Some(w) => {
            let edges: Vec<String> = w.embedding.edges.edges(b.coloring.graph()).map(|e| e.to_string()).collect();
            println!("the W_8(2) coloring still has a rainbow F_5: {}", edges.join(" "));
        }
        None => println!("no rainbow F_5 in the W_8(2) coloring"),
    }

    if let Some(dir) = dir {
        std::fs::create_dir_all(&dir)?;
        for (name, r) in [("fig2a.json", &a), ("fig2b.json", &b)] {
            let path = dir.join(name);
            std::fs::write(&path, r.coloring.to_json() + "\n")?;
            println!("wrote {}", path.display());
        }
    }
    Ok(())
}
