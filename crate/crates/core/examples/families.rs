//! Builds the extremal families and compares the DP with the closed forms.

use domcount::dp::count;
use domcount::families::{closed_form_count, generate, FamilySpec};

fn main() -> domcount::Result<()> {
    let specs = (0..=4)
        .flat_map(|k| [FamilySpec::Gk { k }, FamilySpec::Hk { k }])
        .chain([
            FamilySpec::Gklm { k: 2, l: 3, m: 2 },
            FamilySpec::Gklm { k: 3, l: 16, m: 3 },
            FamilySpec::Chain { copies: 2 },
        ]);
    for spec in specs {
        let tree = generate(spec)?;
        let dp = count(&tree, spec.mode())?;
        let cf = closed_form_count(spec)?;
        assert_eq!((dp.size, &dp.count), (cf.size, &cf.count));
        println!(
            "{spec:10} n={:3} size={:3} count={}",
            tree.vertex_count(),
            dp.size,
            dp.count
        );
    }
    Ok(())
}
