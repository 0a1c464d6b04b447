//! Evaluations of a graph: real Lipschitz functions on the vertices that
//! vanish at a fixed base vertex, and their pairings with walks.

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::rational::{qi, Q};
use crate::walk::series::{weighted_sum, Shape};
use crate::walk::{IndexSet, VertexSeq, Walk, WeightScheme};

#[derive(Debug, Clone)]
pub struct Evaluation<'g> {
    graph: &'g Graph,
    base: Vertex,
    values: Vec<Q>,
}

/// A walk and two positions on it whose difference quotient attains the
/// Lipschitz norm of an evaluation.
#[derive(Debug, Clone)]
pub struct NormWitness {
    pub walk: Walk,
    pub i: usize,
    pub j: usize,
    pub value: Q,
}

impl PartialEq for Evaluation<'_> {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.graph, other.graph) && self.base == other.base && self.values == other.values
    }
}

impl<'g> Evaluation<'g> {
    pub fn new(graph: &'g Graph, base: Vertex, values: Vec<Q>) -> Result<Self> {
        if !graph.contains(base) {
            return Err(Error::UnknownVertex(base.to_string()));
        }
        if values.len() != graph.vertex_count() {
            let missing = graph.vertices().nth(values.len()).map(|v| graph.label(v).to_owned());
            return Err(Error::MissingValue(missing.unwrap_or_default()));
        }
        if !values[base.index()].is_zero() {
            return Err(Error::NonZeroBase {
                vertex: graph.label(base).to_owned(),
                value: values[base.index()].clone(),
            });
        }
        Ok(Evaluation { graph, base, values })
    }

    pub fn from_fn(graph: &'g Graph, base: Vertex, f: impl Fn(Vertex) -> Q) -> Result<Self> {
        Evaluation::new(graph, base, graph.vertices().map(f).collect())
    }

    pub fn zero(graph: &'g Graph, base: Vertex) -> Self {
        Evaluation { graph, base, values: vec![Q::zero(); graph.vertex_count()] }
    }

    /// `v -> d(v, target) - d(base, target)`: the progress-to-target
    /// evaluation, of norm one whenever the graph has an edge.
    pub fn distance_to_target(graph: &'g Graph, base: Vertex, target: Vertex) -> Self {
        let offset = graph.distance(base, target) as i64;
        let values = graph.vertices().map(|v| qi(graph.distance(v, target) as i64 - offset)).collect();
        Evaluation { graph, base, values }
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    pub fn base(&self) -> Vertex {
        self.base
    }

    pub fn value(&self, v: Vertex) -> &Q {
        &self.values[v.index()]
    }

    pub fn values(&self) -> &[Q] {
        &self.values
    }

    /// Largest jump across a single edge. For the hop metric this is the
    /// Lipschitz norm: any pair is joined by a geodesic of unit steps.
    pub fn lipschitz_norm(&self) -> Q {
        self.steepest_edge().map(|(_, _, jump)| jump).unwrap_or_else(Q::zero)
    }

    fn steepest_edge(&self) -> Option<(Vertex, Vertex, Q)> {
        self.graph
            .edges()
            .iter()
            .map(|&(u, v)| (u, v, (self.value(u) - self.value(v)).abs()))
            .max_by(|a, b| a.2.cmp(&b.2))
    }

    /// Lipschitz norm of the real sequence `i -> phi(w(i))`.
    pub fn composed_lipschitz(&self, w: &VertexSeq) -> Q {
        (1..=w.horizon())
            .map(|i| (self.value(w.at(i)) - self.value(w.at(i + 1))).abs())
            .max()
            .unwrap_or_else(Q::zero)
    }

    /// `<w, phi>(A) = sum_{i in A} tau_i phi(w(i))`.
    pub fn pairing(&self, scheme: &WeightScheme, w: &VertexSeq, set: &IndexSet) -> Q {
        weighted_sum(scheme, set, Shape::constant_after(w.horizon()), |i| self.value(w.at(i)).clone())
    }

    /// `<w1 - w2, phi>(A)`.
    pub fn pairing_diff(&self, scheme: &WeightScheme, w1: &VertexSeq, w2: &VertexSeq, set: &IndexSet) -> Q {
        let shape = Shape::constant_after(w1.horizon().max(w2.horizon()));
        weighted_sum(scheme, set, shape, |i| self.value(w1.at(i)) - self.value(w2.at(i)))
    }

    /// `sum_{i in A} tau_i |phi(w1(i)) - phi(w2(i))|`, a measure in `A`.
    pub fn abs_pairing(&self, scheme: &WeightScheme, w1: &VertexSeq, w2: &VertexSeq, set: &IndexSet) -> Q {
        let shape = Shape::constant_after(w1.horizon().max(w2.horizon()));
        weighted_sum(scheme, set, shape, |i| (self.value(w1.at(i)) - self.value(w2.at(i))).abs())
    }

    /// A walk on which `phi o w` attains the norm of `phi`: a geodesic from
    /// the base vertex to one end of the steepest edge, then across it.
    /// A constant evaluation yields the constant walk at the base vertex.
    pub fn lipnorm_witness(&self) -> NormWitness {
        match self.steepest_edge() {
            Some((u, v, jump)) if !jump.is_zero() => {
                let mut path = self.graph.shortest_path(self.base, u);
                let i = path.len();
                path.push(v);
                let walk = Walk::through(self.graph, &path).expect("geodesic followed by an edge is a walk");
                NormWitness { walk, i, j: i + 1, value: jump }
            }
            _ => NormWitness { walk: Walk::constant(self.base), i: 1, j: 2, value: Q::zero() },
        }
    }
}

impl NormWitness {
    /// Recomputes `|phi(w(i)) - phi(w(j))| / |i - j|` from the walk itself.
    pub fn ratio(&self, phi: &Evaluation<'_>) -> Q {
        let span = qi(self.i.abs_diff(self.j) as i64);
        (phi.value(self.walk.at(self.i)) - phi.value(self.walk.at(self.j))).abs() / span
    }
}
