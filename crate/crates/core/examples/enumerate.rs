//! Lists the minimum dominating sets of P5 and the minimum total dominating
//! sets of K_{1,4}, then checks each against the brute-force oracle.

use domcount::dp::{enumerate_min_dominating, enumerate_min_total_dominating};
use domcount::forest::{path, star};
use domcount::oracle::{oracle_min_dominating, oracle_min_total_dominating};

fn main() -> domcount::Result<()> {
    let p5 = path(5);
    let sets = enumerate_min_dominating(&p5, 100)?;
    for s in &sets {
        println!("P5 {s:?}");
    }
    assert_eq!(sets, oracle_min_dominating(&p5)?.sets);

    let k14 = star(4);
    let sets = enumerate_min_total_dominating(&k14, 100)?;
    for s in &sets {
        println!("K_(1,4) {s:?}");
    }
    assert_eq!(sets, oracle_min_total_dominating(&k14)?.sets);

    // asking for fewer than exist is an error rather than a truncated list
    match enumerate_min_dominating(&path(7), 5) {
        Err(e) => println!("P7 with limit 5: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
