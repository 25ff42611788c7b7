//! Terminal levels, support vertices, branches and the claims audit.

use domcount::audit::audit_claims;
use domcount::families::{generate, FamilySpec};
use domcount::structure::{branch_depths, structural_report};

fn main() -> domcount::Result<()> {
    let g2 = generate(FamilySpec::Gk { k: 2 })?;
    let r = structural_report(&g2);
    for v in 0..g2.vertex_count() {
        println!(
            "v={v:2} deg={} level={} support={} strong={}",
            r.degree[v], r.terminal_level[v], r.is_support[v], r.is_strong_support[v]
        );
    }
    println!("branches at s: {:?}", branch_depths(&g2, 1));

    for finding in audit_claims(&g2)? {
        println!(
            "{} at {}: {}",
            finding.claim, finding.vertex, finding.satisfied
        );
    }
    Ok(())
}
