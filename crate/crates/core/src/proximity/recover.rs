//! Recovering the coefficients `s_i` of a canonical proximity from its
//! values on singletons: `s_i = P({i}) / (tau_i |phi(w1(i)) - phi(w2(i))|)`.

use std::collections::HashMap;

use num_traits::{Signed, Zero};

use super::{ProximityModel, WeightSequence};
use crate::error::{Error, Result};
use crate::evaluation::Evaluation;
use crate::rational::Q;
use crate::walk::{IndexSet, VertexSeq, WeightScheme};

/// Source of singleton proximities `P(w1, w2, {i})`.
pub trait SingletonProximity {
    fn singleton(&self, w1: &VertexSeq, w2: &VertexSeq, i: usize) -> Q;
}

impl SingletonProximity for ProximityModel<'_> {
    fn singleton(&self, w1: &VertexSeq, w2: &VertexSeq, i: usize) -> Q {
        let set = IndexSet::singleton(i).expect("singleton indices start at 1");
        self.proximity(w1, w2, &set)
    }
}

/// Observed singleton proximities; unlisted entries read as zero.
#[derive(Debug, Clone, Default)]
pub struct SingletonTable {
    entries: HashMap<(VertexSeq, VertexSeq, usize), Q>,
}

impl SingletonTable {
    pub fn new() -> Self {
        SingletonTable::default()
    }

    /// Records `P(w1, w2, {i}) = value` (and the symmetric entry).
    pub fn insert(&mut self, w1: &VertexSeq, w2: &VertexSeq, i: usize, value: Q) {
        self.entries.insert((w2.clone(), w1.clone(), i), value.clone());
        self.entries.insert((w1.clone(), w2.clone(), i), value);
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

impl SingletonProximity for SingletonTable {
    fn singleton(&self, w1: &VertexSeq, w2: &VertexSeq, i: usize) -> Q {
        self.entries.get(&(w1.clone(), w2.clone(), i)).cloned().unwrap_or_else(Q::zero)
    }
}

/// One coefficient; `None` where `phi` does not separate the walks at `i`
/// (the observed value must then be zero).
pub(crate) fn recover_entry(
    observed: &Q,
    phi: &Evaluation<'_>,
    scheme: &WeightScheme,
    w1: &VertexSeq,
    w2: &VertexSeq,
    i: usize,
) -> Result<Option<Q>> {
    if observed.is_negative() {
        return Err(Error::NegativeProximity { index: i, value: observed.clone() });
    }
    let gap = (phi.value(w1.at(i)) - phi.value(w2.at(i))).abs();
    if gap.is_zero() {
        if !observed.is_zero() {
            return Err(Error::InconsistentProximity { index: i, value: observed.clone() });
        }
        return Ok(None);
    }
    Ok(Some(observed / (scheme.weight(i) * gap)))
}

/// Coefficients `s_1..s_n` from the singleton values `P({1})..P({n})`,
/// with `s_i = 0` wherever `phi(w1(i)) = phi(w2(i))`.
pub fn recover_weights(
    singletons: &[Q],
    phi: &Evaluation<'_>,
    scheme: &WeightScheme,
    w1: &VertexSeq,
    w2: &VertexSeq,
    tail_value: Option<Q>,
) -> Result<WeightSequence> {
    let prefix = singletons
        .iter()
        .enumerate()
        .map(|(k, p)| Ok(recover_entry(p, phi, scheme, w1, w2, k + 1)?.unwrap_or_else(Q::zero)))
        .collect::<Result<Vec<_>>>()?;
    WeightSequence::new(prefix, tail_value.unwrap_or_else(Q::zero))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::rational::{q, qi};
    use crate::walk::Walk;

    fn setup(g: &Graph) -> (Evaluation<'_>, Walk, Walk) {
        let phi = Evaluation::distance_to_target(g, g.vertex("v1").unwrap(), g.vertex("v10").unwrap());
        let w1 = Walk::from_labels(g, &["v1", "v2", "v5", "v9", "v10"]).unwrap();
        let w2 = Walk::from_labels(g, &["v1", "v3", "v4", "v9", "v10"]).unwrap();
        (phi, w1, w2)
    }

    #[test]
    fn round_trip_from_forward_model() {
        let g = Graph::parse(include_str!("../../data/example_graph.txt")).unwrap();
        let (phi, w1, w2) = setup(&g);
        let scheme = WeightScheme::geometric(q(1, 3)).unwrap();
        let s = WeightSequence::new(vec![qi(5), q(2, 7), qi(3), q(1, 9)], qi(2)).unwrap();
        let model = ProximityModel::tight(scheme.clone(), phi.clone(), s.clone());
        let observed: Vec<Q> = (1..=6).map(|i| model.singleton(&w1, &w2, i)).collect();
        let back = recover_weights(&observed, &phi, &scheme, &w1, &w2, None).unwrap();
        for i in 1..=6 {
            let gap = phi.value(w1.at(i)) - phi.value(w2.at(i));
            if gap.is_zero() {
                assert_eq!(back.at(i), &qi(0));
            } else {
                assert_eq!(back.at(i), s.at(i));
            }
        }
        // only index 2 separates these walks (phi(v2) = 0, phi(v3) = -1)
        assert_eq!(back.prefix[1], q(2, 7));
    }

    #[test]
    fn zero_convention_and_inconsistency() {
        let g = Graph::parse(include_str!("../../data/example_graph.txt")).unwrap();
        let (phi, w1, w2) = setup(&g);
        let s = WeightScheme::dyadic();
        let ok = recover_weights(&[qi(0)], &phi, &s, &w1, &w2, None).unwrap();
        assert_eq!(ok.prefix, vec![qi(0)]);
        let err = recover_weights(&[qi(1)], &phi, &s, &w1, &w2, None).unwrap_err();
        assert_eq!(err, Error::InconsistentProximity { index: 1, value: qi(1) });
        let err = recover_weights(&[qi(0), qi(-1)], &phi, &s, &w1, &w2, None).unwrap_err();
        assert!(matches!(err, Error::NegativeProximity { index: 2, .. }));
    }

    #[test]
    fn table_is_symmetric_and_defaults_to_zero() {
        let g = Graph::parse(include_str!("../../data/example_graph.txt")).unwrap();
        let (_, w1, w2) = setup(&g);
        let mut t = SingletonTable::new();
        t.insert(&w1, &w2, 2, q(1, 4));
        assert_eq!(t.singleton(&w2, &w1, 2), q(1, 4));
        assert_eq!(t.singleton(&w1, &w2, 3), qi(0));
    }
}
