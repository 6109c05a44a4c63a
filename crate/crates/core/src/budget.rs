use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};

/// Default cap on the number of items any single enumeration may materialize.
pub const DEFAULT_BUDGET: u64 = 1 << 24;

/// Upper bound on enumerated items for operations that walk a finite
/// truncation of an infinite object (tree levels, path sets, submatrices).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Budget(u64);

impl Budget {
    /// Returns `None` for a zero budget.
    pub fn new(limit: u64) -> Option<Self> {
        (limit > 0).then_some(Budget(limit))
    }

    pub fn limit(self) -> u64 {
        self.0
    }

    pub fn check(self, items: &BigUint) -> Result<()> {
        if *items > BigUint::from(self.0) {
            Err(Error::DepthLimit {
                requested: items.clone(),
                budget: self.0,
            })
        } else {
            Ok(())
        }
    }

    pub fn check_count(self, items: u64) -> Result<()> {
        self.check(&BigUint::from(items))
    }

    /// Checks a request for `2^exponent` items.
    pub fn check_pow2(self, exponent: u64) -> Result<()> {
        if exponent >= 64 {
            return Err(Error::DepthLimit {
                requested: BigUint::one() << exponent,
                budget: self.0,
            });
        }
        self.check_count(1u64 << exponent)
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget(DEFAULT_BUDGET)
    }
}
