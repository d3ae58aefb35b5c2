use std::collections::VecDeque;

use super::{Digraph, Graph, Vertex};
use crate::error::{Error, Result};

/// Unit-capacity residual network, augmented by breadth-first search.
struct FlowNetwork {
    head: Vec<usize>,
    cap: Vec<i32>,
    adj: Vec<Vec<usize>>,
}

impl FlowNetwork {
    fn new(n: usize) -> Self {
        FlowNetwork {
            head: Vec::new(),
            cap: Vec::new(),
            adj: vec![Vec::new(); n],
        }
    }

    fn add_edge(&mut self, u: usize, v: usize, cap: i32) {
        self.adj[u].push(self.head.len());
        self.head.push(v);
        self.cap.push(cap);
        self.adj[v].push(self.head.len());
        self.head.push(u);
        self.cap.push(0);
    }

    /// Max flow from `s` to `t`, stopping early once `limit` is reached.
    fn max_flow(&mut self, s: usize, t: usize, limit: usize) -> usize {
        let n = self.adj.len();
        let mut flow = 0;
        let mut via = vec![usize::MAX; n];
        while flow < limit {
            via.iter_mut().for_each(|e| *e = usize::MAX);
            let mut queue = VecDeque::from([s]);
            let mut reached = false;
            'bfs: while let Some(u) = queue.pop_front() {
                for &e in &self.adj[u] {
                    let v = self.head[e];
                    if self.cap[e] > 0 && v != s && via[v] == usize::MAX {
                        via[v] = e;
                        if v == t {
                            reached = true;
                            break 'bfs;
                        }
                        queue.push_back(v);
                    }
                }
            }
            if !reached {
                break;
            }
            let mut v = t;
            while v != s {
                let e = via[v];
                self.cap[e] -= 1;
                self.cap[e ^ 1] += 1;
                v = self.head[e ^ 1];
            }
            flow += 1;
        }
        flow
    }
}

/// Edge-connectivity λ(G): minimum cut between vertex 0 and every other
/// vertex. A disconnected graph has λ = 0.
pub fn edge_connectivity(g: &Graph) -> Result<usize> {
    let n = g.order();
    if n < 2 {
        return Err(Error::invalid("edge connectivity needs at least 2 vertices"));
    }
    let mut best = usize::MAX;
    for t in 1..n {
        let mut net = FlowNetwork::new(n);
        for (u, v) in g.edges() {
            net.add_edge(u, v, 1);
            net.add_edge(v, u, 1);
        }
        best = best.min(net.max_flow(0, t, best));
        if best == 0 {
            break;
        }
    }
    Ok(best)
}

/// Strongly connected (vacuously true for at most one vertex).
pub fn is_strong(d: &Digraph) -> bool {
    let n = d.order();
    if n <= 1 {
        return true;
    }
    [true, false]
        .iter()
        .all(|&forward| reachable_from(d, 0, forward).into_iter().all(|r| r))
}

/// Whether every ordered pair `(u, v)` with no arc `u -> v` is joined by at
/// least `k` internally disjoint `(u, v)`-paths.
pub fn vertex_connectivity_at_least(d: &Digraph, k: usize) -> bool {
    let n = d.order();
    // vertex v splits into v_in = 2v and v_out = 2v + 1
    for s in 0..n {
        for t in 0..n {
            if s == t || d.has_arc(s, t) {
                continue;
            }
            let mut net = FlowNetwork::new(2 * n);
            for v in 0..n {
                let c = if v == s || v == t { k as i32 } else { 1 };
                net.add_edge(2 * v, 2 * v + 1, c);
            }
            for (u, v) in d.arcs() {
                net.add_edge(2 * u + 1, 2 * v, 1);
            }
            if net.max_flow(2 * s + 1, 2 * t, k) < k {
                return false;
            }
        }
    }
    true
}

/// `D - S` is strong for every vertex set `S` with `|S| < k`.
///
/// Decided through Menger's theorem with vertex-split flows. Digraphs on at
/// most `k` vertices are never `k`-strong.
pub fn is_k_strong(d: &Digraph, k: usize) -> bool {
    if k == 0 {
        return true;
    }
    if d.order() <= k {
        return false;
    }
    is_strong(d) && vertex_connectivity_at_least(d, k)
}

/// `d⁺(v) = d⁻(v)` everywhere and the underlying graph is connected.
pub fn is_eulerian(d: &Digraph) -> bool {
    d.vertices().all(|v| d.out_degree(v) == d.in_degree(v)) && d.is_connected()
}

pub(crate) fn reachable_from(d: &Digraph, root: Vertex, forward: bool) -> Vec<bool> {
    let mut seen = vec![false; d.order()];
    seen[root] = true;
    let mut stack = vec![root];
    while let Some(u) = stack.pop() {
        let next = if forward { d.out_neighbors(u) } else { d.in_neighbors(u) };
        for &v in next {
            if !seen[v] {
                seen[v] = true;
                stack.push(v);
            }
        }
    }
    seen
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Digraph {
        Digraph::from_arcs(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn complete(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
    }

    #[test]
    fn edge_connectivity_small_cases() {
        assert_eq!(edge_connectivity(&complete(2)).unwrap(), 1);
        assert_eq!(edge_connectivity(&cycle(5).underlying()).unwrap(), 2);
        assert_eq!(edge_connectivity(&complete(4)).unwrap(), 3);
        assert_eq!(edge_connectivity(&Graph::new(3)).unwrap(), 0);
        assert!(edge_connectivity(&Graph::new(1)).is_err());
    }

    #[test]
    fn k_strong_small_cases() {
        assert!(is_k_strong(&cycle(2), 1));
        assert!(!is_k_strong(&cycle(3), 2));
        assert!(is_k_strong(&cycle(3), 1));
        // two vertices can never be 2-strong
        assert!(!is_k_strong(&cycle(2), 2));
        assert!(!is_k_strong(&Digraph::from_arcs(2, [(0, 1)]).unwrap(), 1));
    }

    #[test]
    fn eulerian_small_cases() {
        assert!(is_eulerian(&cycle(2)));
        assert!(!is_eulerian(&Digraph::from_arcs(2, [(0, 1)]).unwrap()));
        assert!(is_eulerian(&Digraph::new(1)));
        // balanced but disconnected
        assert!(!is_eulerian(&Digraph::new(2)));
    }
}
