//! Exact sums `sum_{i in A} tau_i t(i)` for eventually periodic terms.

use num_traits::Zero;

use super::{IndexSet, WeightScheme};
use crate::rational::Q;

/// Shape of an eventually periodic term sequence: arbitrary up to
/// `horizon`, then periodic with `period`.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Shape {
    pub horizon: usize,
    pub period: usize,
}

impl Shape {
    pub fn constant_after(horizon: usize) -> Self {
        Shape { horizon, period: 1 }
    }
}

fn finite_sum(scheme: &WeightScheme, indices: impl Iterator<Item = usize>, term: &impl Fn(usize) -> Q) -> Q {
    let mut acc = Q::zero();
    for i in indices {
        let t = term(i);
        if !t.is_zero() {
            acc += scheme.weight(i) * t;
        }
    }
    acc
}

/// Sum over all of `N`: the head directly, then one progression per phase
/// of the periodic part.
fn full_sum(scheme: &WeightScheme, shape: Shape, term: &impl Fn(usize) -> Q) -> Q {
    let mut acc = finite_sum(scheme, 1..=shape.horizon, term);
    for phase in 0..shape.period {
        let i = shape.horizon + 1 + phase;
        let t = term(i);
        if !t.is_zero() {
            acc += scheme.progression_mass(i, shape.period) * t;
        }
    }
    acc
}

pub(crate) fn weighted_sum(scheme: &WeightScheme, set: &IndexSet, shape: Shape, term: impl Fn(usize) -> Q) -> Q {
    match set {
        IndexSet::Finite(members) => finite_sum(scheme, members.iter().copied(), &term),
        IndexSet::Cofinite(excluded) => {
            full_sum(scheme, shape, &term) - finite_sum(scheme, excluded.iter().copied(), &term)
        }
    }
}
