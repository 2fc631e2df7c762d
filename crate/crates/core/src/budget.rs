//! Resource limits for exhaustive enumerations.

use crate::{Error, Result};

/// Upper bounds checked before any exhaustive enumeration starts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// Largest group order `n! k^n` that may be enumerated element by element.
    pub max_group_order: u128,
    /// Largest cyclotomic order `k`.
    pub max_order: u32,
    /// Largest truncation degree for graded series.
    pub max_degree: u32,
    /// Largest number of decorated tableaux the involution lab may build.
    pub max_objects: u128,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_group_order: 1_000_000,
            max_order: 12,
            max_degree: 40,
            max_objects: 5_000_000,
        }
    }
}

impl Budget {
    pub fn check_group(&self, n: usize, k: u32) -> Result<()> {
        let order = group_order(n, k);
        if order > self.max_group_order {
            return Err(Error::Budget {
                what: "group enumeration",
                needed: order,
                limit: self.max_group_order,
            });
        }
        Ok(())
    }

    pub fn check_order(&self, k: u32) -> Result<()> {
        if k == 0 {
            return Err(Error::Invalid("k must be at least 1".into()));
        }
        if k > self.max_order {
            return Err(Error::Budget {
                what: "cyclotomic order",
                needed: k as u128,
                limit: self.max_order as u128,
            });
        }
        Ok(())
    }

    pub fn check_degree(&self, d: u32) -> Result<()> {
        if d > self.max_degree {
            return Err(Error::Budget {
                what: "truncation degree",
                needed: d as u128,
                limit: self.max_degree as u128,
            });
        }
        Ok(())
    }
}

/// `n! k^n`, saturating.
pub fn group_order(n: usize, k: u32) -> u128 {
    let mut acc: u128 = 1;
    for i in 1..=n as u128 {
        acc = acc.saturating_mul(i).saturating_mul(k as u128);
    }
    acc
}
