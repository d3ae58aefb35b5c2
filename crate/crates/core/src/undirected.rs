//! Partitions of undirected graphs.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{Graph, Part, TwoPartition, Vertex};
use crate::oracle::{budget_from_env, exact_decide, Certificate, NoReason, SpecKind};

/// Largest order [`max_cut_partition`] accepts.
pub const MAX_CUT_BOUND: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HalfDegree {
    pub partition: TwoPartition,
    /// Number of single-vertex moves performed.
    pub flips: usize,
}

fn crossing_degree(g: &Graph, p: &TwoPartition, v: Vertex) -> usize {
    g.neighbors(v).iter().filter(|&&u| p.part(u) != p.part(v)).count()
}

fn cut_size(g: &Graph, p: &TwoPartition) -> usize {
    g.edges().filter(|&(u, v)| p.part(u) != p.part(v)).count()
}

/// Local search: starting from everything in part one, move the lowest
/// vertex with more neighbours inside its part than across, until none is
/// left. Every move raises the cut, so at most `|E|` moves happen, and the
/// result has `d_B(v) >= ceil(d(v) / 2)` everywhere.
pub fn half_degree_partition(g: &Graph) -> HalfDegree {
    let mut p = TwoPartition::uniform(g.order(), Part::One);
    let mut flips = 0;
    while let Some(v) = g.vertices().find(|&v| 2 * crossing_degree(g, &p, v) < g.degree(v)) {
        p.set(v, p.part(v).other());
        flips += 1;
    }
    HalfDegree { partition: p, flips }
}

/// Exact maximum cut by branch and bound, seeded with the local-search
/// cut. Vertex 0 stays in part one; the incumbent is only replaced by a
/// strictly larger cut.
pub fn max_cut_partition(g: &Graph) -> Result<TwoPartition> {
    let n = g.order();
    if n > MAX_CUT_BOUND {
        return Err(Error::ResourceExceeded(format!(
            "max cut search is limited to {MAX_CUT_BOUND} vertices, got {n}"
        )));
    }
    if n == 0 {
        return Ok(TwoPartition::new(Vec::new()));
    }
    let start = half_degree_partition(g).partition;
    let start = if start.part(0) == Part::Two {
        start.swapped()
    } else {
        start
    };
    let mut best = (cut_size(g, &start), start.parts().to_vec());
    let mut colors = vec![Part::One; n];
    branch(g, 1, 0, &mut colors, &mut best);
    Ok(TwoPartition::new(best.1))
}

fn branch(g: &Graph, v: Vertex, cut: usize, colors: &mut Vec<Part>, best: &mut (usize, Vec<Part>)) {
    let n = g.order();
    if v == n {
        if cut > best.0 {
            *best = (cut, colors.clone());
        }
        return;
    }
    // optimistic: each open vertex takes its better side against the
    // assigned ones, and every open-open edge is cut
    let mut bound = cut;
    for u in v..n {
        let (mut one, mut two, mut open) = (0, 0, 0);
        for &w in g.neighbors(u) {
            if w < v {
                match colors[w] {
                    Part::One => one += 1,
                    Part::Two => two += 1,
                }
            } else if w > u {
                open += 1;
            }
        }
        bound += one.max(two) + open;
    }
    if bound <= best.0 {
        return;
    }
    for part in [Part::One, Part::Two] {
        colors[v] = part;
        let gain = g.neighbors(v).iter().filter(|&&w| w < v && colors[w] != part).count();
        branch(g, v + 1, cut + gain, colors, best);
    }
}

/// Greedy maximal stable set, scanning ids upwards.
pub fn maximal_stable_set(g: &Graph, within: &[Vertex]) -> Vec<Vertex> {
    let mut blocked = vec![false; g.order()];
    let mut set = Vec::new();
    for &v in within {
        if !blocked[v] {
            set.push(v);
            blocked[v] = true;
            for &u in g.neighbors(v) {
                blocked[u] = true;
            }
        }
    }
    set
}

fn first_isolated(g: &Graph) -> Option<Vertex> {
    g.vertices().find(|&v| g.degree(v) == 0)
}

/// Partition where part-one vertices have a neighbour across and part-two
/// vertices have `k` neighbours across.
///
/// With `δ(G) >= k` part two is a greedy maximal stable set. Below that
/// threshold there is no characterisation and the exact oracle decides.
pub fn delta_1k_partition(g: &Graph, k: usize) -> Result<Certificate> {
    if k == 0 {
        return Err(Error::invalid("k must be positive"));
    }
    if let Some(v) = first_isolated(g) {
        return Ok(Certificate::no(NoReason::IsolatedVertex(v)));
    }
    if g.min_degree() >= k {
        let all: Vec<Vertex> = g.vertices().collect();
        let stable = maximal_stable_set(g, &all);
        return Ok(Certificate::yes(TwoPartition::from_second_part(g.order(), &stable))
            .with_trace(vec![format!("maximal stable set {stable:?}")]));
    }
    exact_decide(g, &SpecKind::Und(1, k).into(), budget_from_env())
}

/// Decides the `(1, 2)` undirected problem and builds a witness.
///
/// Graphs without degree-one vertices go through [`delta_1k_partition`].
/// Otherwise the degree-one set `S1` must be stable and each neighbour of
/// `S1` needs two neighbours in `S1` or one beyond `S1 ∪ N(S1)`. The witness
/// colours breadth-first layers from `S1` by parity, then repeatedly moves
/// the lowest part-two vertex with a single part-one neighbour into part
/// one. Each such move is logged in the trace as `recolour v`.
pub fn delta_12_decide(g: &Graph) -> Result<Certificate> {
    let n = g.order();
    if let Some(v) = first_isolated(g) {
        return Ok(Certificate::no(NoReason::IsolatedVertex(v)));
    }
    let s1: Vec<Vertex> = g.vertices().filter(|&v| g.degree(v) == 1).collect();
    if s1.is_empty() {
        return delta_1k_partition(g, 2);
    }
    let mut layer = vec![usize::MAX; n];
    for &v in &s1 {
        layer[v] = 1;
    }
    if let Some(&v) = s1.iter().find(|&&v| layer[g.neighbors(v)[0]] == 1) {
        return Ok(Certificate::no(NoReason::CharacterizationViolated(format!(
            "degree-one vertices {v} and {} are adjacent",
            g.neighbors(v)[0]
        ))));
    }
    let mut queue: VecDeque<Vertex> = s1.iter().copied().collect();
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if layer[w] == usize::MAX {
                layer[w] = layer[u] + 1;
                queue.push_back(w);
            }
        }
    }
    for v in g.vertices().filter(|&v| layer[v] == 2) {
        let in_s1 = g.neighbors(v).iter().filter(|&&u| layer[u] == 1).count();
        let beyond = g.neighbors(v).iter().any(|&u| layer[u] >= 3);
        if in_s1 < 2 && !beyond {
            return Ok(Certificate::no(NoReason::CharacterizationViolated(format!(
                "vertex {v} next to a degree-one vertex has one such neighbour and nothing further out"
            ))));
        }
    }

    let mut colors: Vec<Part> = layer
        .iter()
        .map(|&l| if l % 2 == 1 { Part::One } else { Part::Two })
        .collect();
    // components without degree-one vertices were never reached; δ >= 2
    // holds there, so a maximal stable set does the job
    let unreached: Vec<Vertex> = g.vertices().filter(|&v| layer[v] == usize::MAX).collect();
    let mut trace = Vec::new();
    if !unreached.is_empty() {
        for &v in &unreached {
            colors[v] = Part::One;
        }
        let stable = maximal_stable_set(g, &unreached);
        for &v in &stable {
            colors[v] = Part::Two;
        }
        trace.push(format!(
            "stable set {stable:?} on components without degree-one vertices"
        ));
    }
    let reached = |v: Vertex| layer[v] != usize::MAX;
    while let Some(w) = g.vertices().find(|&w| {
        reached(w) && colors[w] == Part::Two && g.neighbors(w).iter().filter(|&&u| colors[u] == Part::One).count() == 1
    }) {
        colors[w] = Part::One;
        trace.push(format!("recolour {w}"));
    }
    Ok(Certificate::yes(TwoPartition::new(colors)).with_trace(trace))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::edge_connectivity;
    use crate::oracle::check_partition;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn complete(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
    }

    fn und_valid(g: &Graph, k1: usize, k2: usize, p: &TwoPartition) -> bool {
        check_partition(g, &SpecKind::Und(k1, k2).into(), p).unwrap().is_valid()
    }

    #[test]
    fn half_degree_examples() {
        let k2 = complete(2);
        let h = half_degree_partition(&k2);
        assert_eq!(h.partition, TwoPartition::from_second_part(2, &[0]));
        let c4 = half_degree_partition(&cycle(4)).partition;
        assert!(cycle(4).vertices().all(|v| crossing_degree(&cycle(4), &c4, v) == 2));
        let k3 = complete(3);
        let h = half_degree_partition(&k3);
        assert!(k3.vertices().all(|v| crossing_degree(&k3, &h.partition, v) >= 1));
        assert!(h.flips <= 3);
    }

    #[test]
    fn max_cut_examples() {
        let c5 = max_cut_partition(&cycle(5)).unwrap();
        assert_eq!(cut_size(&cycle(5), &c5), 4);
        let k4 = max_cut_partition(&complete(4)).unwrap();
        assert_eq!(cut_size(&complete(4), &k4), 4);
        let c6 = max_cut_partition(&cycle(6)).unwrap();
        assert_eq!(cut_size(&cycle(6), &c6), 6);
        assert!(max_cut_partition(&Graph::new(21)).is_err());
    }

    #[test]
    fn max_cut_matches_enumeration() {
        let g = Graph::from_edges(
            7,
            [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 3), (1, 5)],
        )
        .unwrap();
        let best = (0u64..1 << 7)
            .map(|m| cut_size(&g, &TwoPartition::from_mask(7, m)))
            .max()
            .unwrap();
        let p = max_cut_partition(&g).unwrap();
        assert_eq!(cut_size(&g, &p), best);
        let b = crate::graph::bipartite_subgraph(&g, &p);
        assert!(edge_connectivity(&b).unwrap() >= edge_connectivity(&g).unwrap() / 2);
    }

    #[test]
    fn delta_1k_examples() {
        let c4 = delta_1k_partition(&cycle(4), 2).unwrap();
        assert_eq!(c4.witness, Some(TwoPartition::from_second_part(4, &[0, 2])));
        let k2 = delta_1k_partition(&complete(2), 1).unwrap();
        assert!(und_valid(&complete(2), 1, 1, k2.witness.as_ref().unwrap()));
        let iso = Graph::from_edges(3, [(0, 1)]).unwrap();
        assert_eq!(
            delta_1k_partition(&iso, 1).unwrap().reason,
            Some(NoReason::IsolatedVertex(2))
        );
    }

    #[test]
    fn delta_12_examples() {
        let p3 = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let cert = delta_12_decide(&p3).unwrap();
        assert_eq!(cert.witness, Some(TwoPartition::from_second_part(3, &[1])));
        assert!(!delta_12_decide(&complete(2)).unwrap().is_yes());
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(
            delta_12_decide(&star).unwrap().witness,
            Some(TwoPartition::from_second_part(4, &[0]))
        );
    }

    #[test]
    fn delta_12_handles_mixed_components() {
        // a 3-vertex path next to a triangle
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (3, 4), (4, 5), (5, 3)]).unwrap();
        let cert = delta_12_decide(&g).unwrap();
        assert!(und_valid(&g, 1, 2, cert.witness.as_ref().unwrap()));
    }

    #[test]
    fn recolouring_is_needed_sometimes() {
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (1, 3), (2, 4), (3, 4), (4, 5), (5, 2), (5, 3)]).unwrap();
        let cert = delta_12_decide(&g).unwrap();
        assert!(cert.is_yes());
        assert!(und_valid(&g, 1, 2, cert.witness.as_ref().unwrap()));
    }
}
