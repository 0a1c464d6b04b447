use std::ops::Deref;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// An eventually constant vertex sequence `(s(1), s(2), ...)`.
///
/// Stored as a finite prefix followed by a tail vertex repeated forever, in
/// canonical form: the prefix never ends with the tail vertex. No adjacency
/// is required, so restrictions `w(A)` of walks live here.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VertexSeq {
    prefix: Vec<Vertex>,
    tail: Vertex,
}

/// Restriction of a walk to an index set; not a walk in general.
pub type RestrictedWalk = VertexSeq;

impl VertexSeq {
    pub fn new(mut prefix: Vec<Vertex>, tail: Vertex) -> Self {
        while prefix.last() == Some(&tail) {
            prefix.pop();
        }
        VertexSeq { prefix, tail }
    }

    pub fn constant(v: Vertex) -> Self {
        VertexSeq { prefix: Vec::new(), tail: v }
    }

    /// Value at 1-based position `i`.
    pub fn at(&self, i: usize) -> Vertex {
        assert!(i >= 1, "sequences are indexed from 1");
        self.prefix.get(i - 1).copied().unwrap_or(self.tail)
    }

    pub fn prefix(&self) -> &[Vertex] {
        &self.prefix
    }

    pub fn tail(&self) -> Vertex {
        self.tail
    }

    /// Last position that may differ from the tail.
    pub fn horizon(&self) -> usize {
        self.prefix.len()
    }

    pub fn is_constant(&self) -> bool {
        self.prefix.is_empty()
    }

    pub fn start(&self) -> Vertex {
        self.at(1)
    }

    /// Every vertex the sequence visits, in order of first visit.
    pub fn visited(&self) -> Vec<Vertex> {
        let mut out: Vec<Vertex> = Vec::new();
        for &v in self.prefix.iter().chain(std::iter::once(&self.tail)) {
            if !out.contains(&v) {
                out.push(v);
            }
        }
        out
    }

    /// Lipschitz constant of `i -> s(i)` from `(N, |.|)` into the graph;
    /// consecutive steps suffice because `N` is geodesic.
    pub fn lipschitz_constant(&self, g: &Graph) -> u32 {
        (1..=self.horizon()).map(|i| g.distance(self.at(i), self.at(i + 1))).max().unwrap_or(0)
    }
}

/// A walk on a graph: an eventually constant sequence whose consecutive
/// entries are adjacent or equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Walk(VertexSeq);

impl Walk {
    pub fn new(g: &Graph, prefix: Vec<Vertex>, tail: Vertex) -> Result<Self> {
        for &v in prefix.iter().chain(std::iter::once(&tail)) {
            if !g.contains(v) {
                return Err(Error::UnknownVertex(v.to_string()));
            }
        }
        let seq = VertexSeq::new(prefix, tail);
        if let Some(i) = (1..=seq.horizon()).find(|&i| !g.adjacent(seq.at(i), seq.at(i + 1))) {
            return Err(Error::NotAWalk { index: i });
        }
        Ok(Walk(seq))
    }

    /// Walk through the listed vertices, staying at the last one forever.
    pub fn through(g: &Graph, vertices: &[Vertex]) -> Result<Self> {
        let (&tail, prefix) = vertices.split_last().ok_or(Error::EmptyInput("walk"))?;
        Walk::new(g, prefix.to_vec(), tail)
    }

    /// Same as [`Walk::through`], by vertex label.
    pub fn from_labels<S: AsRef<str>>(g: &Graph, labels: &[S]) -> Result<Self> {
        let vertices = labels.iter().map(|l| g.vertex(l.as_ref())).collect::<Result<Vec<_>>>()?;
        Walk::through(g, &vertices)
    }

    pub fn constant(v: Vertex) -> Self {
        Walk(VertexSeq::constant(v))
    }

    /// Either 0 (constant walk) or 1: walks are exactly the norm-one
    /// Lipschitz sequences together with the constants.
    pub fn lipschitz_constant(&self, g: &Graph) -> u32 {
        self.0.lipschitz_constant(g)
    }

    pub fn as_seq(&self) -> &VertexSeq {
        &self.0
    }

    pub fn into_seq(self) -> VertexSeq {
        self.0
    }

    pub fn labels<'g>(&self, g: &'g Graph) -> Vec<&'g str> {
        self.0.prefix.iter().chain(std::iter::once(&self.0.tail)).map(|&v| g.label(v)).collect()
    }
}

impl Deref for Walk {
    type Target = VertexSeq;

    fn deref(&self) -> &VertexSeq {
        &self.0
    }
}

impl AsRef<VertexSeq> for Walk {
    fn as_ref(&self) -> &VertexSeq {
        &self.0
    }
}

impl AsRef<VertexSeq> for VertexSeq {
    fn as_ref(&self) -> &VertexSeq {
        self
    }
}

/// An eventually periodic vertex sequence: a prefix followed by a cycle
/// repeated forever. Used to compare walks against limits such as the
/// alternating sequence `(v1, v2, v1, v2, ...)`, which is not itself
/// eventually constant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeriodicSeq {
    prefix: Vec<Vertex>,
    cycle: Vec<Vertex>,
}

impl PeriodicSeq {
    pub fn new(prefix: Vec<Vertex>, cycle: Vec<Vertex>) -> Result<Self> {
        if cycle.is_empty() {
            return Err(Error::EmptyInput("cycle"));
        }
        Ok(PeriodicSeq { prefix, cycle })
    }

    pub fn at(&self, i: usize) -> Vertex {
        assert!(i >= 1, "sequences are indexed from 1");
        match self.prefix.get(i - 1) {
            Some(&v) => v,
            None => self.cycle[(i - 1 - self.prefix.len()) % self.cycle.len()],
        }
    }

    pub fn horizon(&self) -> usize {
        self.prefix.len()
    }

    pub fn period(&self) -> usize {
        self.cycle.len()
    }
}

impl From<&VertexSeq> for PeriodicSeq {
    fn from(seq: &VertexSeq) -> Self {
        PeriodicSeq { prefix: seq.prefix.clone(), cycle: vec![seq.tail] }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example() -> Graph {
        Graph::parse(include_str!("../../data/example_graph.txt")).unwrap()
    }

    #[test]
    fn example_walk() {
        let g = example();
        let w1 = Walk::from_labels(&g, &["v1", "v2", "v5", "v9", "v10"]).unwrap();
        assert_eq!(w1.horizon(), 4);
        assert_eq!(g.label(w1.at(5)), "v10");
        assert_eq!(g.label(w1.at(500)), "v10");
        assert_eq!(w1.lipschitz_constant(&g), 1);
    }

    #[test]
    fn constant_and_canonical() {
        let g = example();
        let v1 = g.vertex("v1").unwrap();
        assert_eq!(Walk::constant(v1).lipschitz_constant(&g), 0);
        let w = Walk::new(&g, vec![v1, v1], v1).unwrap();
        assert!(w.is_constant());
        assert_eq!(w, Walk::constant(v1));
        assert_eq!(w.lipschitz_constant(&g), 0);
    }

    #[test]
    fn rejects_jumps() {
        let g = example();
        let err = Walk::from_labels(&g, &["v1", "v10"]).unwrap_err();
        assert_eq!(err, Error::NotAWalk { index: 1 });
        let err = Walk::from_labels(&g, &["v1", "v2", "v2", "v9"]).unwrap_err();
        assert_eq!(err, Error::NotAWalk { index: 3 });
        assert!(matches!(Walk::from_labels(&g, &["v1", "nope"]), Err(Error::UnknownVertex(_))));
    }

    #[test]
    fn periodic_indexing() {
        let g = example();
        let (a, b) = (g.vertex("v1").unwrap(), g.vertex("v2").unwrap());
        let alt = PeriodicSeq::new(vec![], vec![a, b]).unwrap();
        assert_eq!(alt.at(1), a);
        assert_eq!(alt.at(2), b);
        assert_eq!(alt.at(101), a);
        let w = Walk::through(&g, &[b, a]).unwrap();
        let p = PeriodicSeq::from(w.as_seq());
        assert_eq!((p.at(1), p.at(2), p.at(9)), (b, a, a));
    }
}
