//! Finite, undirected, connected graphs with the shortest-path (hop) metric.
//!
//! Every vertex is implicitly adjacent to itself, so `d(v, v) = 0` and a
//! walk may stay put; self-loops are therefore never stored.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};

/// Dense vertex handle, valid only for the graph that issued it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vertex(pub(crate) usize);

impl Vertex {
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

#[derive(Debug)]
pub struct Graph {
    labels: Vec<String>,
    index: HashMap<String, Vertex>,
    adjacency: Vec<Vec<usize>>,
    edges: Vec<(Vertex, Vertex)>,
    all_pairs: OnceLock<Vec<Vec<u32>>>,
}

impl Graph {
    /// Builds a graph from vertex labels and index pairs, validating that it
    /// is connected and free of duplicate edges and self-loops.
    pub fn new(labels: Vec<String>, edges: &[(usize, usize)]) -> Result<Self> {
        if labels.is_empty() {
            return Err(Error::EmptyGraph);
        }
        let mut index = HashMap::with_capacity(labels.len());
        for (i, label) in labels.iter().enumerate() {
            if index.insert(label.clone(), Vertex(i)).is_some() {
                return Err(Error::parse(0, format!("duplicate vertex label `{label}`")));
            }
        }
        let mut adjacency = vec![Vec::new(); labels.len()];
        let mut seen = HashSet::new();
        let mut edge_list = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if u >= labels.len() || v >= labels.len() {
                return Err(Error::UnknownVertex(format!("#{}", u.max(v))));
            }
            if u == v {
                return Err(Error::SelfLoop(labels[u].clone()));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::DuplicateEdge(labels[u].clone(), labels[v].clone()));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
            edge_list.push((Vertex(u), Vertex(v)));
        }
        let graph = Graph { labels, index, adjacency, edges: edge_list, all_pairs: OnceLock::new() };
        let reach = graph.distances_from(Vertex(0));
        if let Some(lost) = reach.iter().position(|d| d.is_none()) {
            return Err(Error::Disconnected(graph.labels[lost].clone(), graph.labels[0].clone()));
        }
        Ok(graph)
    }

    /// Builds a graph from labelled edges; vertex order is first appearance.
    pub fn from_labeled_edges<S: AsRef<str>>(edges: &[(S, S)]) -> Result<Self> {
        let mut labels: Vec<String> = Vec::new();
        let mut index: HashMap<String, usize> = HashMap::new();
        let mut intern = |s: &str| -> usize {
            *index.entry(s.to_owned()).or_insert_with(|| {
                labels.push(s.to_owned());
                labels.len() - 1
            })
        };
        let pairs: Vec<(usize, usize)> = edges
            .iter()
            .map(|(u, v)| (intern(u.as_ref()), intern(v.as_ref())))
            .collect();
        Graph::new(labels, &pairs)
    }

    /// Parses the edge-list format: one `<u> <v>` pair per line, `#` starts a
    /// comment, blank lines are ignored.
    pub fn parse(text: &str) -> Result<Self> {
        let mut edges = Vec::new();
        for (n, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            match fields.as_slice() {
                [u, v] if u == v => return Err(Error::SelfLoop((*u).to_owned())),
                [u, v] => edges.push((*u, *v)),
                _ => {
                    return Err(Error::parse(
                        n + 1,
                        format!("expected `<u> <v>`, found {} field(s)", fields.len()),
                    ))
                }
            }
        }
        if edges.is_empty() {
            return Err(Error::EmptyGraph);
        }
        Graph::from_labeled_edges(&edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        (0..self.labels.len()).map(Vertex)
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.adjacency[v.0].iter().map(|&u| Vertex(u))
    }

    pub fn vertex(&self, label: &str) -> Result<Vertex> {
        self.index.get(label).copied().ok_or_else(|| Error::UnknownVertex(label.to_owned()))
    }

    pub fn label(&self, v: Vertex) -> &str {
        &self.labels[v.0]
    }

    pub fn contains(&self, v: Vertex) -> bool {
        v.0 < self.labels.len()
    }

    /// Adjacent in the reflexive sense: equal vertices count as adjacent.
    pub fn adjacent(&self, u: Vertex, v: Vertex) -> bool {
        u == v || self.adjacency[u.0].contains(&v.0)
    }

    /// Fresh breadth-first search from `source`; `None` marks unreachable
    /// vertices (only possible during construction).
    pub fn distances_from(&self, source: Vertex) -> Vec<Option<u32>> {
        let mut dist = vec![None; self.labels.len()];
        let mut queue = VecDeque::new();
        dist[source.0] = Some(0);
        queue.push_back(source.0);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap_or(0);
            for &w in &self.adjacency[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// All-pairs hop distances, computed once and cached.
    pub fn all_pairs(&self) -> &[Vec<u32>] {
        self.all_pairs.get_or_init(|| {
            self.vertices()
                .map(|s| self.distances_from(s).into_iter().map(|d| d.unwrap_or(u32::MAX)).collect())
                .collect()
        })
    }

    pub fn distance(&self, u: Vertex, v: Vertex) -> u32 {
        self.all_pairs()[u.0][v.0]
    }

    pub fn distance_by_label(&self, u: &str, v: &str) -> Result<u32> {
        Ok(self.distance(self.vertex(u)?, self.vertex(v)?))
    }

    pub fn diameter(&self) -> u32 {
        self.all_pairs().iter().flat_map(|row| row.iter().copied()).max().unwrap_or(0)
    }

    /// One shortest path from `u` to `v`, both endpoints included.
    pub fn shortest_path(&self, u: Vertex, v: Vertex) -> Vec<Vertex> {
        let mut path = vec![u];
        let mut here = u;
        while here != v {
            let d = self.distance(here, v);
            here = self
                .neighbors(here)
                .find(|&n| self.distance(n, v) + 1 == d)
                .expect("connected graph has a descending neighbour");
            path.push(here);
        }
        path
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const EXAMPLE: &str = include_str!("../data/example_graph.txt");

    #[test]
    fn parses_example_graph() {
        let g = Graph::parse(EXAMPLE).unwrap();
        assert_eq!(g.vertex_count(), 10);
        assert_eq!(g.edge_count(), 15);
        assert_eq!(g.label(Vertex(0)), "v1");
        assert_eq!(g.distance_by_label("v1", "v10").unwrap(), 3);
        assert_eq!(g.distance_by_label("v5", "v6").unwrap(), 3);
        assert_eq!(g.distance_by_label("v7", "v7").unwrap(), 0);
        assert_eq!(g.diameter(), 3);
    }

    #[test]
    fn smallest_graph() {
        let g = Graph::parse("1 2").unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.diameter(), 1);
    }

    #[test]
    fn rejects_disconnected() {
        assert!(matches!(Graph::parse("1 2\n3 4"), Err(Error::Disconnected(..))));
    }

    #[test]
    fn rejects_duplicates_and_loops() {
        assert!(matches!(Graph::parse("a b\nb a"), Err(Error::DuplicateEdge(..))));
        assert!(matches!(Graph::parse("a a"), Err(Error::SelfLoop(_))));
        assert!(matches!(Graph::parse("a b c"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(Graph::parse("# nothing\n"), Err(Error::EmptyGraph)));
    }

    #[test]
    fn comments_and_blank_lines() {
        let g = Graph::parse("# header\n\na b # trailing\n b c\n").unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.distance_by_label("a", "c").unwrap(), 2);
    }

    #[test]
    fn unknown_vertex() {
        let g = Graph::parse(EXAMPLE).unwrap();
        assert_eq!(g.distance_by_label("v1", "v11"), Err(Error::UnknownVertex("v11".into())));
    }

    #[test]
    fn small_diameters() {
        let k4 = Graph::parse("a b\na c\na d\nb c\nb d\nc d").unwrap();
        assert_eq!(k4.diameter(), 1);
        let path = Graph::parse("v1 v2\nv2 v3").unwrap();
        assert_eq!(path.diameter(), 2);
    }

    #[test]
    fn shortest_path_is_geodesic() {
        let g = Graph::parse(EXAMPLE).unwrap();
        let (a, b) = (g.vertex("v7").unwrap(), g.vertex("v3").unwrap());
        let p = g.shortest_path(a, b);
        assert_eq!(p.len() as u32, g.distance(a, b) + 1);
        assert!(p.windows(2).all(|w| g.adjacent(w[0], w[1])));
    }
}
