use std::collections::VecDeque;

use super::{is_strong, Digraph, Vertex};
use crate::error::{Error, Result};

/// A directed walk `(entry, interior.., exit)` whose interior vertices are
/// distinct and lie outside the subdigraph built so far. `entry == exit`
/// makes it a cycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Handle {
    pub entry: Vertex,
    pub interior: Vec<Vertex>,
    pub exit: Vertex,
}

impl Handle {
    /// Number of arcs.
    pub fn len(&self) -> usize {
        self.interior.len() + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Trivial handles are single arcs.
    pub fn is_trivial(&self) -> bool {
        self.interior.is_empty()
    }

    pub fn walk(&self) -> Vec<Vertex> {
        let mut w = Vec::with_capacity(self.interior.len() + 2);
        w.push(self.entry);
        w.extend(&self.interior);
        w.push(self.exit);
        w
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HandleDecomposition {
    /// A shortest cycle of the digraph, listed from its smallest vertex.
    pub initial_cycle: Vec<Vertex>,
    /// Each entry is a shortest non-trivial handle for the union of the
    /// cycle and all earlier handles.
    pub handles: Vec<Handle>,
}

/// Shortest-cycle-then-shortest-handle decomposition of a strong digraph.
///
/// Ties are broken towards the smallest entry vertex and then the
/// lexicographically smallest interior sequence.
pub fn handle_decomposition(d: &Digraph) -> Result<HandleDecomposition> {
    let n = d.order();
    if d.arc_count() == 0 {
        return Err(Error::invalid("handle decomposition needs at least one arc"));
    }
    if !is_strong(d) {
        return Err(Error::invalid("handle decomposition needs a strong digraph"));
    }

    let initial_cycle = shortest_cycle(d);
    let mut inside = vec![false; n];
    for &v in &initial_cycle {
        inside[v] = true;
    }
    let mut covered = initial_cycle.len();
    let mut handles = Vec::new();
    while covered < n {
        let h = shortest_handle(d, &inside).expect("strong digraphs always admit a handle");
        for &v in &h.interior {
            inside[v] = true;
        }
        covered += h.interior.len();
        handles.push(h);
    }
    Ok(HandleDecomposition { initial_cycle, handles })
}

/// Distance from each vertex to the target set, walking arcs forward, never
/// leaving `through` (targets themselves need not be in `through`).
fn distance_to(d: &Digraph, targets: &[Vertex], through: &dyn Fn(Vertex) -> bool) -> Vec<usize> {
    let mut dist = vec![usize::MAX; d.order()];
    let mut queue = VecDeque::new();
    for &t in targets {
        dist[t] = 0;
        queue.push_back(t);
    }
    while let Some(u) = queue.pop_front() {
        for &w in d.in_neighbors(u) {
            if dist[w] == usize::MAX && through(w) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

fn shortest_cycle(d: &Digraph) -> Vec<Vertex> {
    let mut best: Option<(usize, Vertex, Vec<usize>)> = None;
    for s in d.vertices() {
        let dist = distance_to(d, &[s], &|_| true);
        let len = d
            .out_neighbors(s)
            .iter()
            .filter(|&&w| dist[w] != usize::MAX)
            .map(|&w| dist[w] + 1)
            .min();
        if let Some(len) = len {
            if best.as_ref().is_none_or(|(b, _, _)| len < *b) {
                best = Some((len, s, dist));
            }
        }
    }
    let (len, s, dist) = best.expect("strong digraph with an arc has a cycle");
    let mut cycle = vec![s];
    let mut cur = s;
    for remaining in (1..len).rev() {
        cur = *d
            .out_neighbors(cur)
            .iter()
            .find(|&&w| w != s && dist[w] == remaining)
            .expect("shortest path continues");
        cycle.push(cur);
    }
    cycle
}

fn shortest_handle(d: &Digraph, inside: &[bool]) -> Option<Handle> {
    let outside = |v: Vertex| !inside[v];
    // exits: outside vertices with an arc back into the current subdigraph
    let exits: Vec<Vertex> = d
        .vertices()
        .filter(|&v| outside(v) && d.out_neighbors(v).iter().any(|&w| inside[w]))
        .collect();
    let dist = distance_to(d, &exits, &outside);

    let mut best: Option<(usize, Vertex)> = None;
    for s in d.vertices().filter(|&s| inside[s]) {
        let reach = d
            .out_neighbors(s)
            .iter()
            .filter(|&&w| outside(w) && dist[w] != usize::MAX)
            .map(|&w| dist[w])
            .min();
        if let Some(r) = reach {
            if best.is_none_or(|(b, _)| r < b) {
                best = Some((r, s));
            }
        }
    }
    let (steps, entry) = best?;
    let mut interior = Vec::with_capacity(steps + 1);
    let mut cur = *d
        .out_neighbors(entry)
        .iter()
        .find(|&&w| outside(w) && dist[w] == steps)
        .expect("entry has a shortest continuation");
    interior.push(cur);
    for remaining in (0..steps).rev() {
        cur = *d
            .out_neighbors(cur)
            .iter()
            .find(|&&w| outside(w) && dist[w] == remaining)
            .expect("path continues");
        interior.push(cur);
    }
    let exit = *d
        .out_neighbors(cur)
        .iter()
        .find(|&&w| inside[w])
        .expect("last interior vertex is an exit");
    Some(Handle { entry, interior, exit })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn four_cycle_has_no_handles() {
        let d = Digraph::from_arcs(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let hd = handle_decomposition(&d).unwrap();
        assert_eq!(hd.initial_cycle, vec![0, 1, 2, 3]);
        assert!(hd.handles.is_empty());
    }

    #[test]
    fn two_cycle_plus_ear() {
        // u=0, v=1, w=2: u<->v, v->w, w->u
        let d = Digraph::from_arcs(3, [(0, 1), (1, 0), (1, 2), (2, 0)]).unwrap();
        let hd = handle_decomposition(&d).unwrap();
        assert_eq!(hd.initial_cycle, vec![0, 1]);
        assert_eq!(
            hd.handles,
            vec![Handle {
                entry: 1,
                interior: vec![2],
                exit: 0
            }]
        );
        assert_eq!(hd.handles[0].len(), 2);
    }

    #[test]
    fn complete_digraph_on_three_vertices() {
        let d = Digraph::from_arcs(3, [(0, 1), (1, 0), (0, 2), (2, 0), (1, 2), (2, 1)]).unwrap();
        let hd = handle_decomposition(&d).unwrap();
        assert_eq!(hd.initial_cycle.len(), 2);
        assert_eq!(hd.handles.len(), 1);
        assert_eq!(hd.handles[0].len(), 2);
    }

    #[test]
    fn rejects_non_strong_and_arcless_input() {
        assert!(handle_decomposition(&Digraph::from_arcs(2, [(0, 1)]).unwrap()).is_err());
        assert!(handle_decomposition(&Digraph::new(1)).is_err());
    }
}
