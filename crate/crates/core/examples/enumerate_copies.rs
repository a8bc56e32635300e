//! Counting copies of fans, cycles and chorded cycles.
//!
//! Single-hub copies come in `s·d·m` where `m` is 1 for symmetric chord
//! vectors and 2 otherwise. The oracle finds every copy, including those
//! through several hubs.

use rainbow_wheels::enumeration::{enumerate_hub_centered, enumerate_oracle, CopyIndex, CopyScope};
use rainbow_wheels::graph::{EdgeId, WheelGraph};
use rainbow_wheels::patterns::ThetaPattern;

fn main() -> rainbow_wheels::error::Result<()> {
    let samples = [
        (7, 1, ThetaPattern::fan(4)?),
        (8, 1, ThetaPattern::fan(5)?),
        (10, 2, ThetaPattern::new(5, vec![3])?),
        (13, 2, ThetaPattern::new(6, vec![4])?),
        (9, 3, ThetaPattern::new(7, vec![3, 6])?),
    ];
    println!("{:<8} {:<20} {:>5} {:>4} {:>12} {:>10}", "host", "pattern", "X", "m", "hub-centered", "all copies");
    for (d, s, p) in samples {
        let g = WheelGraph::new(d, s)?;
        let hub = enumerate_hub_centered(&g, &p)?.len();
        let all = enumerate_oracle(&g, &p).len();
        let x: Vec<String> = p.chord_vector().iter().map(ToString::to_string).collect();
        println!("{:<8} {:<20} {:>5} {:>4} {:>12} {:>10}", g.to_string(), p.to_string(), x.join(","), p.multiplicity(), hub, all);
    }

    println!();
    for (d, s, t) in [(10, 2, 5), (10, 3, 6)] {
        let g = WheelGraph::new(d, s)?;
        let idx = CopyIndex::build(&g, &ThetaPattern::fan(t)?, CopyScope::All);
        let spoke = idx.incidence(EdgeId::Spoke { hub: 1, pos: 1 })?;
        let rim = idx.incidence(EdgeId::Rim(1))?;
        println!("F_{t} in {g}: {} copies; each spoke lies in {spoke}, each rim edge in {rim}", idx.len());
    }

    let g = WheelGraph::wheel(5)?;
    let one = enumerate_oracle(&g, &ThetaPattern::fan(4)?).into_iter().next().expect("W_5 has an F_4");
    let edges: Vec<String> = one.edges.edges(&g).map(|e| e.to_string()).collect();
    println!("\nfirst F_4 in W_5: ids {:?} = {}", one.edges.ids(), edges.join(" "));
    Ok(())
}
