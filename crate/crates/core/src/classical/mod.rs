//! Classical GL(r) data: weights, Weyl dimensions, Littlewood-Richardson
//! coefficients and the small fusion tables used for principal parts.

mod lr;
mod oracle;
mod tables;

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

pub use lr::{lr_coefficients, lr_partitions};
pub use oracle::schur_product_oracle;
pub use tables::{
    group_fusion, FusionLabel, FusionTable, GroupFamily, LabelKind, PrincipalFusionSpec,
    Realization,
};

use crate::error::{validation, Result};

/// Dominant weight of GL(r), weakly decreasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ClassicalWeight(pub Vec<i64>);

impl ClassicalWeight {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        if let Some(i) = (1..entries.len()).find(|&i| entries[i - 1] < entries[i]) {
            return validation(format!("classical weight not decreasing at position {}", i + 1));
        }
        Ok(ClassicalWeight(entries))
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn size(&self) -> i64 {
        self.0.iter().sum()
    }

    pub(crate) fn shifted(&self, k: i64) -> ClassicalWeight {
        ClassicalWeight(self.0.iter().map(|a| a + k).collect())
    }
}

impl fmt::Display for ClassicalWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// Weyl dimension formula `∏_{i<j} (λ_i - λ_j + j - i) / (j - i)`.
pub fn weyl_dim(l: &ClassicalWeight) -> BigUint {
    let v = &l.0;
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            num *= BigUint::from((v[i] - v[j] + (j - i) as i64) as u64);
            den *= BigUint::from((j - i) as u64);
        }
    }
    num / den
}

/// Exponent `e` with `det L(λ) = det^e`, namely `|λ| · dim / r`.
pub fn det_exponent(l: &ClassicalWeight) -> BigInt {
    if l.rank() == 0 {
        return BigInt::zero();
    }
    BigInt::from(l.size()) * BigInt::from(weyl_dim(l)) / BigInt::from(l.rank())
}

/// Whether `S_μ(V)` is maximal atypical for GL(m|n) with `r = m - n`, that is `μ_{r+1} = 0`.
pub fn is_covariant_max_atypical(mu: &[i64], r: usize) -> bool {
    mu.get(r).is_none_or(|&x| x == 0)
}
