use domcount::bounds::{bound_report, judge, lambda, BoundName, Verdict};
use domcount::dp::count;
use domcount::families::{closed_form_count, generate, FamilySpec};
use domcount::treegen::enumerate_trees;
use domcount::Mode;
use num_bigint::BigUint;

#[test]
fn small_families_match_closed_forms() {
    for k in 0..=10 {
        for spec in [FamilySpec::Gk { k }, FamilySpec::Hk { k }] {
            let cf = closed_form_count(spec).unwrap();
            let dp = count(&generate(spec).unwrap(), Mode::Domination).unwrap();
            assert_eq!((dp.size, dp.count), (cf.size, cf.count), "{spec}");
        }
    }
    for k in 1..=4 {
        for l in 1..=4 {
            for m in 1..=4 {
                let spec = FamilySpec::Gklm { k, l, m };
                let cf = closed_form_count(spec).unwrap();
                let dp = count(&generate(spec).unwrap(), Mode::Total).unwrap();
                assert_eq!((dp.size, dp.count), (cf.size, cf.count), "{spec}");
            }
        }
    }
}

#[test]
fn chains_multiply() {
    let block = closed_form_count(FamilySpec::Gklm { k: 3, l: 16, m: 3 }).unwrap();
    for copies in [1, 2] {
        let c = count(
            &generate(FamilySpec::Chain { copies }).unwrap(),
            Mode::Total,
        )
        .unwrap();
        assert_eq!(c.size, 97 * copies);
        assert_eq!(c.count, block.count.pow(copies as u32));
    }
}

#[test]
fn gk_sits_between_the_sqrt5_bounds() {
    for k in 0..=40 {
        let cf = closed_form_count(FamilySpec::Gk { k }).unwrap();
        let g = cf.size;
        assert_eq!(g, 2 * k + 1);
        let sq = &cf.count * &cf.count;
        let five = BigUint::from(5u32).pow(g as u32);
        assert!(&sq * 25u32 > &five * 4u32, "k={k}");
        assert!(sq <= five, "k={k}");
        let n = FamilySpec::Gk { k }.vertex_count();
        assert_eq!(
            judge(BoundName::Sqrt5, n, g, &cf.count).unwrap().verdict,
            Verdict::Pass
        );
        assert_eq!(
            judge(BoundName::TwoFifthsSqrt5, n, g, &cf.count)
                .unwrap()
                .verdict,
            Verdict::Pass
        );
    }
}

#[test]
fn disproof_instance() {
    let g = generate(FamilySpec::Gklm { k: 3, l: 16, m: 3 }).unwrap();
    let report = bound_report(&g, Mode::Total).unwrap();
    assert_eq!(report.verdict(BoundName::Conjecture2), Some(Verdict::Fail));
    assert!(report.theorems_hold());
    assert!(lambda(&g).unwrap() > 1.0);
}

#[test]
fn lambda_stays_below_eight_root_e() {
    let cap = 8.0 * 0.5f64.exp();
    for n in 2..=13 {
        for t in enumerate_trees(n).unwrap() {
            assert!(lambda(&t).unwrap() <= cap);
        }
    }
    for k in 1..=4 {
        for m in 1..=4 {
            let g = generate(FamilySpec::Gklm { k, l: 5, m }).unwrap();
            assert!(lambda(&g).unwrap() <= cap);
        }
    }
}
