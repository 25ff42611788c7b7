//! Exhaustive checks over all trees up to a small order.
//!
//! `cargo run --release --example verify -- 14` sets the sqrt5 range.

use domcount::verify::{verify_henning, verify_sqrt5};

fn main() -> domcount::Result<()> {
    let max_n = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(12);
    let threads = std::thread::available_parallelism().map_or(1, |n| n.get());

    let table = verify_sqrt5(max_n, threads, false)?;
    println!(
        "{} trees, violations: {}",
        table.trees_checked,
        table.violations.len()
    );
    for row in &table.rows {
        println!(
            "gamma={:2} max={:6} classes={}",
            row.gamma,
            row.max_count,
            row.classes()
        );
    }

    let henning = verify_henning(max_n.min(12), threads, false)?;
    println!(
        "total domination: {} trees, all bounds hold: {}",
        henning.trees_checked,
        henning.all_pass()
    );
    Ok(())
}
