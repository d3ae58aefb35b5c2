use crate::error::{Error, Result};
use crate::graph::{strong_components, Digraph, Part, TwoPartition};

/// Out-total `(1, 1)` partition of a digraph without isolated vertices.
///
/// Layer 1 holds the lowest vertex of every terminal strong component; each
/// next layer holds the unplaced vertices with an arc into the previous one.
/// Odd layers go to part two, even layers to part one.
pub fn out_total_partition(d: &Digraph) -> Result<TwoPartition> {
    if let Some(v) = d.vertices().find(|&v| d.neighbor_count(v) == 0) {
        return Err(Error::invalid(format!("vertex {v} is isolated")));
    }
    let sc = strong_components(d);
    let mut layer = vec![0usize; d.order()];
    let mut current: Vec<usize> = sc.terminal().map(|c| sc.components[c][0]).collect();
    current.sort_unstable();
    for &v in &current {
        layer[v] = 1;
    }
    let mut depth = 1;
    while !current.is_empty() {
        depth += 1;
        let mut next = Vec::new();
        for &w in &current {
            for &u in d.in_neighbors(w) {
                if layer[u] == 0 {
                    layer[u] = depth;
                    next.push(u);
                }
            }
        }
        current = next;
    }
    let parts = layer
        .iter()
        .map(|&l| {
            debug_assert!(l > 0, "every vertex reaches a terminal component");
            if l % 2 == 1 {
                Part::Two
            } else {
                Part::One
            }
        })
        .collect();
    Ok(TwoPartition::new(parts))
}
