use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::walk::Walk;

/// Up to `max_count` distinct simple paths from `from` to `to` with at most
/// `max_len` edges, each continued constantly at `to`. When more exist, a
/// seeded subset is drawn; the output keeps enumeration order.
pub fn sample_paths(
    g: &Graph,
    from: Vertex,
    to: Vertex,
    max_len: usize,
    max_count: usize,
    seed: u64,
) -> Result<Vec<Walk>> {
    if (g.distance(from, to) as usize) > max_len {
        return Err(Error::NoPathWithinLength {
            from: g.label(from).to_owned(),
            to: g.label(to).to_owned(),
            max_len,
        });
    }
    let all = enumerate_simple_paths(g, from, to, max_len);
    let chosen: Vec<Vec<Vertex>> = if all.len() <= max_count {
        all
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut picks = sample(&mut rng, all.len(), max_count).into_vec();
        picks.sort_unstable();
        picks.into_iter().map(|k| all[k].clone()).collect()
    };
    chosen.iter().map(|p| Walk::through(g, p)).collect()
}

/// Every simple path from `from` to `to` with at most `max_len` edges, in
/// depth-first order over neighbour lists.
pub fn enumerate_simple_paths(g: &Graph, from: Vertex, to: Vertex, max_len: usize) -> Vec<Vec<Vertex>> {
    let mut out = Vec::new();
    let mut path = vec![from];
    let mut on_path = vec![false; g.vertex_count()];
    on_path[from.index()] = true;
    extend_paths(g, to, max_len, &mut path, &mut on_path, &mut out);
    out
}

fn extend_paths(
    g: &Graph,
    to: Vertex,
    max_len: usize,
    path: &mut Vec<Vertex>,
    on_path: &mut [bool],
    out: &mut Vec<Vec<Vertex>>,
) {
    let here = *path.last().expect("path is never empty");
    if here == to {
        out.push(path.clone());
        return;
    }
    let used = path.len() - 1;
    for next in g.neighbors(here) {
        if on_path[next.index()] || used + 1 + g.distance(next, to) as usize > max_len {
            continue;
        }
        on_path[next.index()] = true;
        path.push(next);
        extend_paths(g, to, max_len, path, on_path, out);
        path.pop();
        on_path[next.index()] = false;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example() -> Graph {
        Graph::parse(include_str!("../../data/example_graph.txt")).unwrap()
    }

    #[test]
    fn includes_explored_walks() {
        let g = example();
        let (v1, v10) = (g.vertex("v1").unwrap(), g.vertex("v10").unwrap());
        let walks = sample_paths(&g, v1, v10, 5, 1000, 7).unwrap();
        for labels in [
            &["v1", "v2", "v5", "v9", "v10"][..],
            &["v1", "v3", "v4", "v9", "v10"],
            &["v1", "v3", "v8", "v10"],
            &["v1", "v2", "v5", "v7", "v9", "v10"],
        ] {
            let w = Walk::from_labels(&g, labels).unwrap();
            assert!(walks.contains(&w), "{labels:?}");
        }
        assert!(walks.iter().all(|w| w.horizon() <= 5 && w.tail() == v10));
    }

    #[test]
    fn seeded_subsets_are_reproducible() {
        let g = example();
        let (v1, v10) = (g.vertex("v1").unwrap(), g.vertex("v10").unwrap());
        let a = sample_paths(&g, v1, v10, 6, 4, 42).unwrap();
        let b = sample_paths(&g, v1, v10, 6, 4, 42).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.len(), 4);
    }

    #[test]
    fn trivial_and_impossible() {
        let g = example();
        let v1 = g.vertex("v1").unwrap();
        assert_eq!(sample_paths(&g, v1, v1, 0, 3, 0).unwrap(), vec![Walk::constant(v1)]);
        let v10 = g.vertex("v10").unwrap();
        assert!(matches!(sample_paths(&g, v1, v10, 2, 3, 0), Err(Error::NoPathWithinLength { .. })));
    }
}
