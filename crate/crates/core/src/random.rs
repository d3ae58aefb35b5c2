//! Seedable random instances.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::{is_strong, Digraph, Graph};

/// Each ordered pair of distinct vertices is an arc with probability `p`.
pub fn random_digraph<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Digraph {
    let mut d = Digraph::new(n);
    for u in 0..n {
        for v in 0..n {
            if u != v && rng.gen_bool(p) {
                d.add_arc(u, v).expect("distinct vertices");
            }
        }
    }
    d
}

/// Each unordered pair is an edge with probability `p`.
pub fn random_graph<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v).expect("distinct vertices");
            }
        }
    }
    g
}

/// Strong digraph by rejection sampling: up to `attempts` draws of
/// [`random_digraph`]. If none is strong, the last draw gets a directed
/// cycle through all vertices in random order.
pub fn random_strong_digraph<R: Rng + ?Sized>(n: usize, p: f64, attempts: usize, rng: &mut R) -> Digraph {
    let mut d = Digraph::new(n);
    for _ in 0..attempts {
        d = random_digraph(n, p, rng);
        if is_strong(&d) {
            return d;
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    if n >= 2 {
        for i in 0..n {
            d.add_arc(order[i], order[(i + 1) % n]).expect("distinct vertices");
        }
    }
    d
}

/// [`random_graph`] topped up until every vertex has degree at least `k`
/// (requires `k < n`): a deficient vertex gains edges to random
/// non-neighbours.
pub fn random_graph_min_degree<R: Rng + ?Sized>(n: usize, p: f64, k: usize, rng: &mut R) -> Graph {
    assert!(k < n.max(1), "minimum degree {k} impossible on {n} vertices");
    let mut g = random_graph(n, p, rng);
    for v in 0..n {
        while g.degree(v) < k {
            let candidates: Vec<usize> = (0..n).filter(|&u| u != v && !g.has_edge(u, v)).collect();
            let &u = candidates.choose(rng).expect("k < n leaves a non-neighbour");
            g.add_edge(u, v).expect("distinct vertices");
        }
    }
    g
}
