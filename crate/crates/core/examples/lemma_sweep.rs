//! Pair, triple and subset bounds on copies sharing edges, swept over small hosts.

use rainbow_wheels::error::Error;
use rainbow_wheels::lemma::{
    configuration_counts, verify_multi_lemma, verify_pair_lemma, verify_triple_lemma, LemmaReport, SubsetCoverage,
};
use rainbow_wheels::patterns::ThetaPattern;

fn print(result: Result<LemmaReport, Error>) {
    match result {
        Ok(r) => println!("{}  witness {:?}", r.line(), r.witness),
        Err(Error::HypothesesUnmet(why)) => println!("skipped: {why}"),
        Err(e) => panic!("{e}"),
    }
}

fn main() -> rainbow_wheels::error::Result<()> {
    for t in [4, 5] {
        let d = 3 * t - 5;
        let mut patterns = vec![ThetaPattern::cycle(t)?, ThetaPattern::fan(t)?];
        if t == 5 {
            patterns.push(ThetaPattern::new(5, vec![3])?);
        }
        for s in 1..=2 {
            for p in &patterns {
                print(verify_pair_lemma(d, s, p));
                print(verify_triple_lemma(d, s, p));
                print(verify_multi_lemma(d, s, p, 4, SubsetCoverage::SymmetryReduced));
            }
        }
    }

    let c = configuration_counts(9)?;
    println!("\nF_5 in W_9(2): two consecutive spokes lie together in {} copies", c.two_spokes_max);
    println!("F_5 in W_9(2): three consecutive spokes, at most {} copies through two of them", c.three_spokes_max);
    println!("F_6 in W_9(3): two consecutive rim edges, at most {} copies", c.two_rims_max);
    println!("F_6 in W_9(3): three consecutive rim edges, at most {} copies through two", c.three_rims_max);
    Ok(())
}
