//! Counts minimum dominating and total dominating sets of a few small trees.

use domcount::forest::{path, star};
use domcount::{count_min_dominating, count_min_total_dominating, Forest};

fn main() -> domcount::Result<()> {
    let spider = Forest::from_edges(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)])?;
    for (name, f) in [("P7", path(7)), ("K_{1,5}", star(5)), ("spider", spider)] {
        let d = count_min_dominating(&f);
        let t = count_min_total_dominating(&f)?;
        println!(
            "{name:8} gamma={} count={}  gamma_t={} count={}",
            d.size, d.count, t.size, t.count
        );
    }

    // a path on 100 000 vertices is fine, the DP is iterative
    let long = path(100_000);
    let d = count_min_dominating(&long);
    println!("P100000  gamma={} count={}", d.size, d.count);
    Ok(())
}
