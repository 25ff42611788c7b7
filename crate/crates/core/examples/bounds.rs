//! Bound reports for G_3 and for G(3,16,3), whose λ exceeds 1.

use domcount::bounds::{alvarado_root, bound_report, lambda};
use domcount::families::{generate, FamilySpec};
use domcount::Mode;

fn main() -> domcount::Result<()> {
    println!("alvarado root = {:.10}", alvarado_root());

    let g3 = generate(FamilySpec::Gk { k: 3 })?;
    let gklm = generate(FamilySpec::Gklm { k: 3, l: 16, m: 3 })?;
    for (f, mode) in [(&g3, Mode::Domination), (&gklm, Mode::Total)] {
        let report = bound_report(f, mode)?;
        println!(
            "n={} size={} count={}",
            report.n, report.size, report.actual
        );
        for b in &report.bounds {
            println!(
                "  {:24} ln={:12.6} {}",
                b.name.as_str(),
                b.ln_value,
                b.verdict
            );
        }
    }

    let chained = generate(FamilySpec::Chain { copies: 2 })?;
    println!("lambda G(3,16,3) = {:.12}", lambda(&gklm)?);
    println!("lambda chain(2)  = {:.12}", lambda(&chained)?);
    Ok(())
}
