//! Min-cost semiring with multiplicities.
//!
//! An element is an optimal cost together with the number of ways to reach
//! it. `plus` keeps the cheaper side (adding counts on a tie) and `times`
//! adds costs and multiplies counts, so a single fold yields both a minimum
//! and the number of optimal solutions.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MinCount {
    /// `None` is +∞.
    cost: Option<u64>,
    count: BigUint,
}

impl MinCount {
    /// The infeasible element: cost +∞, count 0. Identity for `plus`.
    pub fn infeasible() -> Self {
        MinCount {
            cost: None,
            count: BigUint::zero(),
        }
    }

    /// Cost 0, count 1. Identity for `times`.
    pub fn unit() -> Self {
        Self::single(0)
    }

    /// One way of paying `cost`.
    pub fn single(cost: u64) -> Self {
        MinCount {
            cost: Some(cost),
            count: BigUint::one(),
        }
    }

    pub fn new(cost: u64, count: BigUint) -> Self {
        if count.is_zero() {
            Self::infeasible()
        } else {
            MinCount {
                cost: Some(cost),
                count,
            }
        }
    }

    pub fn cost(&self) -> Option<u64> {
        self.cost
    }

    pub fn count(&self) -> &BigUint {
        &self.count
    }

    pub fn is_feasible(&self) -> bool {
        self.cost.is_some()
    }

    pub fn plus(&self, other: &MinCount) -> MinCount {
        match (self.cost, other.cost) {
            (None, _) => other.clone(),
            (_, None) => self.clone(),
            (Some(a), Some(b)) if a < b => self.clone(),
            (Some(a), Some(b)) if a > b => other.clone(),
            (Some(a), Some(_)) => MinCount {
                cost: Some(a),
                count: &self.count + &other.count,
            },
        }
    }

    pub fn times(&self, other: &MinCount) -> MinCount {
        match (self.cost, other.cost) {
            (Some(a), Some(b)) => MinCount {
                cost: Some(a + b),
                count: &self.count * &other.count,
            },
            _ => MinCount::infeasible(),
        }
    }

    /// Shifts the cost by `extra` without changing the count.
    pub fn add_cost(&self, extra: u64) -> MinCount {
        MinCount {
            cost: self.cost.map(|c| c + extra),
            count: self.count.clone(),
        }
    }
}

impl fmt::Debug for MinCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.cost {
            None => write!(f, "(inf, 0)"),
            Some(c) => write!(f, "({c}, {})", self.count),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn arb() -> impl Strategy<Value = MinCount> {
        prop_oneof![
            Just(MinCount::infeasible()),
            (0u64..6, 1u64..50).prop_map(|(c, n)| MinCount::new(c, BigUint::from(n))),
        ]
    }

    #[test]
    fn basic_ops() {
        let a = MinCount::new(2, 3u32.into());
        let b = MinCount::new(2, 4u32.into());
        let c = MinCount::new(1, 5u32.into());
        assert_eq!(a.plus(&b), MinCount::new(2, 7u32.into()));
        assert_eq!(a.plus(&c), c);
        assert_eq!(a.times(&c), MinCount::new(3, 15u32.into()));
        assert_eq!(a.times(&MinCount::infeasible()), MinCount::infeasible());
        assert_eq!(MinCount::new(4, 0u32.into()), MinCount::infeasible());
    }

    proptest! {
        #[test]
        fn semiring_laws(a in arb(), b in arb(), c in arb()) {
            prop_assert_eq!(a.plus(&b), b.plus(&a));
            prop_assert_eq!(a.times(&b), b.times(&a));
            prop_assert_eq!(a.plus(&b).plus(&c), a.plus(&b.plus(&c)));
            prop_assert_eq!(a.times(&b).times(&c), a.times(&b.times(&c)));
            prop_assert_eq!(a.times(&b.plus(&c)), a.times(&b).plus(&a.times(&c)));
            prop_assert_eq!(a.plus(&MinCount::infeasible()), a.clone());
            prop_assert_eq!(a.times(&MinCount::unit()), a.clone());
            prop_assert_eq!(a.is_feasible(), !a.count().is_zero());
        }
    }
}
