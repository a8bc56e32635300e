//! Vertices, edges and linear edge ids of a multi-hubbed wheel.
//!
//! ```text
//! cargo run --example wheel_basics -- 8 3
//! ```

use rainbow_wheels::graph::{EdgeId, Vertex, WheelGraph};

fn main() -> rainbow_wheels::error::Result<()> {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<usize>().expect("numeric argument"));
    let d = args.next().unwrap_or(8);
    let s = args.next().unwrap_or(3);
    let g = WheelGraph::new(d, s)?;

    println!("{g}: {} vertices, {} edges", g.vertex_count(), g.edge_count());
    for v in [Vertex::Hub(1), Vertex::Boundary(1)] {
        let edges: Vec<String> = g.incident_edges(v)?.iter().map(ToString::to_string).collect();
        println!("  {v} has degree {}: {}", g.degree(v)?, edges.join(" "));
    }

    println!("linear ids:");
    for e in [EdgeId::Spoke { hub: 1, pos: 1 }, EdgeId::Spoke { hub: s, pos: d }, EdgeId::Rim(1), EdgeId::Rim(d)] {
        let (a, b) = g.endpoints(e);
        println!("  {e:<12} {a}{b:<5} id {}", g.linearize(e));
    }

    let rotated = g.map_edge(EdgeId::Rim(1), 2, false, &(1..=s).collect::<Vec<_>>());
    let reflected = g.map_edge(EdgeId::Rim(1), 0, true, &(1..=s).collect::<Vec<_>>());
    println!("rotating by 2 sends rim(1) to {rotated}; reflecting sends it to {reflected}");
    Ok(())
}
