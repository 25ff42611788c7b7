//! λ over G(k,l,m) for small k and m, printing the best few rows.

use domcount::verify::lambda_sweep;

fn main() -> domcount::Result<()> {
    let report = lambda_sweep(1..=4, 1..=32, 1..=4, 1)?;
    println!(
        "{} parameter triples, any above 1: {}",
        report.rows.len(),
        report.any_exceeds_one
    );
    for r in report.rows.iter().take(8) {
        println!(
            "G({},{},{}) n={} gamma_t={} lambda={:.8}",
            r.k,
            r.l,
            r.m,
            r.n,
            r.gamma_t,
            r.lambda()
        );
    }
    Ok(())
}
