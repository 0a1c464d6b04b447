//! Random instances and brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use num_traits::{One, Signed, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use walkprox::rational::{q, qi};
use walkprox::{Evaluation, Graph, IndexSet, Vertex, VertexSeq, Walk, WeightScheme, Q};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Connected graph on `2..=max_n` vertices: a random spanning tree plus a
/// few extra edges.
pub fn random_graph(rng: &mut ChaCha8Rng, max_n: usize) -> Graph {
    let n = rng.gen_range(2..=max_n);
    let labels: Vec<String> = (0..n).map(|i| format!("u{i}")).collect();
    let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    let extra = rng.gen_range(0..=n);
    for _ in 0..extra {
        let (a, b) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if a != b && !edges.iter().any(|&(x, y)| (x, y) == (a, b) || (x, y) == (b, a)) {
            edges.push((a, b));
        }
    }
    Graph::new(labels, &edges).expect("spanning tree keeps the graph connected")
}

pub fn random_vertex(rng: &mut ChaCha8Rng, g: &Graph) -> Vertex {
    g.vertices().nth(rng.gen_range(0..g.vertex_count())).unwrap()
}

/// Random walk with at most `max_prefix` steps before it settles.
pub fn random_walk(rng: &mut ChaCha8Rng, g: &Graph, max_prefix: usize) -> Walk {
    let len = rng.gen_range(0..=max_prefix);
    let mut here = random_vertex(rng, g);
    let mut seq = vec![here];
    for _ in 0..len {
        if rng.gen_bool(0.25) {
            seq.push(here);
            continue;
        }
        let nbrs: Vec<Vertex> = g.neighbors(here).collect();
        here = *nbrs.choose(rng).unwrap();
        seq.push(here);
    }
    Walk::through(g, &seq).unwrap()
}

pub fn random_ratio(rng: &mut ChaCha8Rng) -> WeightScheme {
    let r = [q(1, 2), q(1, 3), q(3, 4)].choose(rng).unwrap().clone();
    WeightScheme::geometric(r).unwrap()
}

pub fn random_rational(rng: &mut ChaCha8Rng, span: i64) -> Q {
    q(rng.gen_range(-span..=span), rng.gen_range(1..=3))
}

pub fn random_evaluation<'g>(rng: &mut ChaCha8Rng, g: &'g Graph) -> Evaluation<'g> {
    let base = random_vertex(rng, g);
    let values = g.vertices().map(|v| if v == base { qi(0) } else { random_rational(rng, 6) }).collect();
    Evaluation::new(g, base, values).unwrap()
}

pub fn random_index_set(rng: &mut ChaCha8Rng, max_index: usize) -> IndexSet {
    let picks: Vec<usize> = (1..=max_index).filter(|_| rng.gen_bool(0.4)).collect();
    match rng.gen_range(0..4) {
        0 => IndexSet::all(),
        1 => IndexSet::cofinite(picks).unwrap(),
        _ => IndexSet::finite(picks).unwrap(),
    }
}

/// Floyd–Warshall over the edge list, independent of the library's search.
pub fn floyd_warshall(g: &Graph) -> Vec<Vec<u32>> {
    let n = g.vertex_count();
    let inf = u32::MAX / 4;
    let mut d = vec![vec![inf; n]; n];
    for (i, row) in d.iter_mut().enumerate() {
        row[i] = 0;
    }
    for &(u, v) in g.edges() {
        d[u.index()][v.index()] = 1;
        d[v.index()][u.index()] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let via = d[i][k] + d[k][j];
                if via < d[i][j] {
                    d[i][j] = via;
                }
            }
        }
    }
    d
}

/// `max_{u != v} |phi(u) - phi(v)| / d(u, v)` over every vertex pair.
pub fn brute_lipschitz(g: &Graph, phi: &Evaluation<'_>) -> Q {
    let dist = floyd_warshall(g);
    let mut best = Q::zero();
    for u in g.vertices() {
        for v in g.vertices() {
            if u != v {
                let r = (phi.value(u) - phi.value(v)).abs() / qi(dist[u.index()][v.index()] as i64);
                if r > best {
                    best = r;
                }
            }
        }
    }
    best
}

/// Sup over index pairs `i < j` up to a horizon past both prefixes of
/// `d(w(i), w(j)) / (j - i)`.
pub fn brute_sequence_lipschitz(g: &Graph, w: &VertexSeq) -> Q {
    let dist = floyd_warshall(g);
    let h = w.horizon() + 2;
    let mut best = Q::zero();
    for i in 1..=h {
        for j in i + 1..=h {
            let r = qi(dist[w.at(i).index()][w.at(j).index()] as i64) / qi((j - i) as i64);
            if r > best {
                best = r;
            }
        }
    }
    best
}

/// `sum_{i in A} tau_i t(i)` by explicit summation up to `cut` plus the
/// constant tail `t(cut + 1)` over the remaining members, for terms that
/// are constant beyond `cut`.
pub fn brute_series(scheme: &WeightScheme, set: &IndexSet, cut: usize, term: impl Fn(usize) -> Q) -> Q {
    let WeightScheme::Geometric { ratio } = scheme;
    let tau = |i: usize| (Q::one() - ratio) * num_traits::pow(ratio.clone(), i - 1);
    let listed = set.max_listed().max(cut);
    let mut acc = Q::zero();
    for i in 1..=listed {
        if set.contains(i) {
            acc += tau(i) * term(i);
        }
    }
    if set.contains(listed + 1) {
        // sum_{i > listed} tau_i = r^listed
        acc += num_traits::pow(ratio.clone(), listed) * term(listed + 1);
    }
    acc
}

pub fn brute_d_tau(scheme: &WeightScheme, g: &Graph, w: &VertexSeq, u: &VertexSeq, set: &IndexSet) -> Q {
    let dist = floyd_warshall(g);
    let cut = w.horizon().max(u.horizon());
    brute_series(scheme, set, cut, |i| qi(dist[w.at(i).index()][u.at(i).index()] as i64))
}
