use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{serde_exact, Q};

/// Positive index weights `tau_i` (i >= 1) summing to one.
///
/// Every sum in the crate is reduced to three exact queries: a single
/// weight, the mass of a tail `{i > n}`, and the mass of an arithmetic
/// progression `{start, start + step, ...}`. A new scheme only has to
/// answer those.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum WeightScheme {
    /// `tau_i = (1 - r) r^(i-1)`; `r = 1/2` gives `tau_i = 2^-i`.
    Geometric {
        #[serde(with = "serde_exact")]
        ratio: Q,
    },
}

impl WeightScheme {
    pub fn geometric(ratio: Q) -> Result<Self> {
        if ratio <= Q::zero() || ratio >= Q::one() {
            return Err(Error::BadRatio(ratio));
        }
        Ok(WeightScheme::Geometric { ratio })
    }

    /// The dyadic scheme `tau_i = 2^-i`.
    pub fn dyadic() -> Self {
        WeightScheme::Geometric { ratio: crate::rational::q(1, 2) }
    }

    pub fn weight(&self, i: usize) -> Q {
        assert!(i >= 1, "weights are indexed from 1");
        match self {
            WeightScheme::Geometric { ratio } => (Q::one() - ratio) * num_traits::pow(ratio.clone(), i - 1),
        }
    }

    /// `sum_{i > n} tau_i`.
    pub fn tail_mass(&self, n: usize) -> Q {
        match self {
            WeightScheme::Geometric { ratio } => num_traits::pow(ratio.clone(), n),
        }
    }

    /// `sum_{k >= 0} tau_{start + k * step}`.
    pub fn progression_mass(&self, start: usize, step: usize) -> Q {
        assert!(start >= 1 && step >= 1);
        match self {
            WeightScheme::Geometric { ratio } => {
                let first = self.weight(start);
                first / (Q::one() - num_traits::pow(ratio.clone(), step))
            }
        }
    }
}
