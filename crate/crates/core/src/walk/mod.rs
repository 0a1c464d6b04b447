//! Walks, weight schemes, index sets and the weighted walk metric
//! `d_tau(w, u) = sum_i tau_i d(w(i), u(i))`.

mod index_set;
mod scheme;
mod sequence;
pub(crate) mod series;

pub use index_set::IndexSet;
pub use scheme::WeightScheme;
pub use sequence::{PeriodicSeq, RestrictedWalk, VertexSeq, Walk};

use crate::graph::{Graph, Vertex};
use crate::rational::{qi, Q};
use series::{weighted_sum, Shape};

/// Weighted distance between two (possibly restricted) walks.
pub fn d_tau(scheme: &WeightScheme, g: &Graph, w: &VertexSeq, u: &VertexSeq) -> Q {
    d_tau_restricted(scheme, g, w, u, &IndexSet::all())
}

/// `sum_{i in A} tau_i d(w(i), u(i))`.
pub fn d_tau_restricted(scheme: &WeightScheme, g: &Graph, w: &VertexSeq, u: &VertexSeq, set: &IndexSet) -> Q {
    let shape = Shape::constant_after(w.horizon().max(u.horizon()));
    weighted_sum(scheme, set, shape, |i| qi(g.distance(w.at(i), u.at(i)) as i64))
}

/// Weighted distance between eventually periodic sequences, restricted to
/// `set`. Both sides become periodic with the least common period once past
/// the longer prefix.
pub fn d_tau_periodic(scheme: &WeightScheme, g: &Graph, a: &PeriodicSeq, b: &PeriodicSeq, set: &IndexSet) -> Q {
    let period = num_integer::lcm(a.period(), b.period());
    let shape = Shape { horizon: a.horizon().max(b.horizon()), period };
    weighted_sum(scheme, set, shape, |i| qi(g.distance(a.at(i), b.at(i)) as i64))
}

/// `w(A)`: equal to `w` on `A` and to `base` elsewhere.
pub fn restrict(w: &VertexSeq, set: &IndexSet, base: Vertex) -> RestrictedWalk {
    match set {
        IndexSet::Finite(members) => {
            let len = members.iter().next_back().copied().unwrap_or(0);
            let prefix = (1..=len).map(|i| if members.contains(&i) { w.at(i) } else { base }).collect();
            VertexSeq::new(prefix, base)
        }
        IndexSet::Cofinite(excluded) => {
            let len = w.horizon().max(set.max_listed());
            let prefix = (1..=len).map(|i| if excluded.contains(&i) { base } else { w.at(i) }).collect();
            VertexSeq::new(prefix, w.tail())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn example() -> Graph {
        Graph::parse(include_str!("../../data/example_graph.txt")).unwrap()
    }

    fn walk(g: &Graph, labels: &[&str]) -> Walk {
        Walk::from_labels(g, labels).unwrap()
    }

    #[test]
    fn zero_on_identical_walks() {
        let g = example();
        let w1 = walk(&g, &["v1", "v2", "v5", "v9", "v10"]);
        assert_eq!(d_tau(&WeightScheme::dyadic(), &g, &w1, &w1), qi(0));
    }

    #[test]
    fn adjacent_constants_are_at_distance_one() {
        let g = example();
        let a = walk(&g, &["v1"]);
        let b = walk(&g, &["v2"]);
        for r in [q(1, 2), q(1, 3), q(3, 4)] {
            let s = WeightScheme::geometric(r).unwrap();
            assert_eq!(d_tau(&s, &g, &a, &b), qi(1));
        }
    }

    #[test]
    fn w1_to_w2() {
        // i = 2: d(v2, v3) = 2 weighted 1/4; i = 3: d(v5, v4) = 2 weighted 1/8
        let g = example();
        let w1 = walk(&g, &["v1", "v2", "v5", "v9", "v10"]);
        let w2 = walk(&g, &["v1", "v3", "v4", "v9", "v10"]);
        assert_eq!(d_tau(&WeightScheme::dyadic(), &g, &w1, &w2), q(3, 4));
    }

    #[test]
    fn restricted_distance_edge_cases() {
        let g = example();
        let s = WeightScheme::dyadic();
        let w1 = walk(&g, &["v1", "v2", "v5", "v9", "v10"]);
        let w2 = walk(&g, &["v1", "v3", "v4", "v9", "v10"]);
        assert_eq!(d_tau_restricted(&s, &g, &w1, &w2, &IndexSet::empty()), qi(0));
        let single = IndexSet::singleton(3).unwrap();
        assert_eq!(d_tau_restricted(&s, &g, &w1, &w2, &single), q(2, 8));
        let a = IndexSet::finite([1, 2]).unwrap();
        let b = IndexSet::cofinite([1, 2]).unwrap();
        assert_eq!(
            d_tau_restricted(&s, &g, &w1, &w2, &a.union(&b)),
            d_tau_restricted(&s, &g, &w1, &w2, &a) + d_tau_restricted(&s, &g, &w1, &w2, &b)
        );
    }

    #[test]
    fn restriction() {
        let g = example();
        let v1 = g.vertex("v1").unwrap();
        let w1 = walk(&g, &["v1", "v2", "v5", "v9", "v10"]);
        assert_eq!(&restrict(&w1, &IndexSet::all(), v1), w1.as_seq());
        assert_eq!(restrict(&w1, &IndexSet::empty(), v1), VertexSeq::constant(v1));
        let r = restrict(&w1, &IndexSet::finite([1, 2, 3]).unwrap(), v1);
        let labels: Vec<_> = r.prefix().iter().map(|&v| g.label(v)).collect();
        assert_eq!(labels, ["v1", "v2", "v5"]);
        assert_eq!(r.tail(), v1);
        let r = restrict(&w1, &IndexSet::cofinite([2, 7]).unwrap(), v1);
        assert_eq!(g.label(r.at(2)), "v1");
        assert_eq!(g.label(r.at(7)), "v1");
        assert_eq!(g.label(r.at(8)), "v10");
    }

    #[test]
    fn restricted_distance_matches_distance_of_restrictions() {
        let g = example();
        let s = WeightScheme::dyadic();
        let w1 = walk(&g, &["v1", "v2", "v5", "v9", "v10"]);
        let w4 = walk(&g, &["v1", "v2", "v5", "v7", "v9", "v10"]);
        for set in ["{}", "{4}", "{1,4,5}", "~{4}", "all", "~{1,2,3,9}"] {
            let set: IndexSet = set.parse().unwrap();
            for base in g.vertices() {
                let lhs = d_tau_restricted(&s, &g, &w1, &w4, &set);
                let rhs = d_tau(&s, &g, &restrict(&w1, &set, base), &restrict(&w4, &set, base));
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn periodic_matches_eventually_constant() {
        let g = example();
        let s = WeightScheme::geometric(q(1, 3)).unwrap();
        let w1 = walk(&g, &["v1", "v2", "v5", "v9", "v10"]);
        let w4 = walk(&g, &["v1", "v2", "v5", "v7", "v9", "v10"]);
        let set = IndexSet::cofinite([2]).unwrap();
        assert_eq!(
            d_tau_periodic(&s, &g, &w1.as_seq().into(), &w4.as_seq().into(), &set),
            d_tau_restricted(&s, &g, &w1, &w4, &set)
        );
    }
}
