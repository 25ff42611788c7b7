mod common;

use domcount::dp::{count_min_dominating, count_min_total_dominating, enumerate};
use domcount::oracle::{oracle_min_dominating, oracle_min_total_dominating};
use domcount::treegen::enumerate_trees;
use domcount::{Error, Forest, Mode};
use num_bigint::BigUint;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn compare(f: &Forest) {
    let dp = count_min_dominating(f);
    let or = oracle_min_dominating(f).unwrap();
    assert_eq!(
        (dp.size, dp.count.clone()),
        (or.gamma, BigUint::from(or.sets.len())),
        "domination on {:?}",
        f.edges().collect::<Vec<_>>()
    );
    match (
        count_min_total_dominating(f),
        oracle_min_total_dominating(f),
    ) {
        (Ok(dp), Ok(or)) => assert_eq!(
            (dp.size, dp.count),
            (or.gamma, BigUint::from(or.sets.len())),
            "total domination on {:?}",
            f.edges().collect::<Vec<_>>()
        ),
        (Err(Error::IsolatedVertex(a)), Err(Error::IsolatedVertex(b))) => assert_eq!(a, b),
        (a, b) => panic!("disagreement: {a:?} vs {b:?}"),
    }
}

#[test]
fn all_trees_up_to_twelve() {
    let mut checked = 0;
    for n in 1..=12 {
        for t in enumerate_trees(n).unwrap() {
            compare(&t);
            checked += 1;
        }
    }
    assert_eq!(checked, 987);
}

#[test]
fn thousand_random_forests() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..1000 {
        compare(&common::random_forest(&mut rng, 18));
    }
}

#[test]
fn enumeration_matches_oracle_sets() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..200 {
        let f = common::random_forest(&mut rng, 14);
        let or = oracle_min_dominating(&f).unwrap();
        assert_eq!(
            enumerate(&f, Mode::Domination, usize::MAX).unwrap(),
            or.sets
        );
        if let Ok(or) = oracle_min_total_dominating(&f) {
            assert_eq!(enumerate(&f, Mode::Total, usize::MAX).unwrap(), or.sets);
        }
    }
}
