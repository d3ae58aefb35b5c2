use crate::error::{Error, Result};
use crate::graph::{Digraph, Orientation, Part, Star, TwoPartition, Vertex};
use crate::oracle::{check_partition, SpecKind};

/// Vertex-disjoint non-trivial out- and in-stars.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Nebula {
    pub stars: Vec<Star>,
}

impl Nebula {
    pub fn new(stars: Vec<Star>) -> Self {
        Nebula { stars }
    }

    /// Checks that every star is non-trivial and present in `host`, that the
    /// stars are disjoint, and that together they cover `host`.
    pub fn validate_spanning(&self, host: &Digraph) -> Result<()> {
        let mut seen = vec![false; host.order()];
        for (i, s) in self.stars.iter().enumerate() {
            if s.vertices().any(|v| v >= host.order()) {
                return Err(Error::invalid(format!("star {i} mentions a missing vertex")));
            }
            if !s.is_valid_in(host) {
                return Err(Error::invalid(format!("star {i} is trivial or uses a missing arc")));
            }
            for v in s.vertices() {
                if std::mem::replace(&mut seen[v], true) {
                    return Err(Error::invalid(format!("vertex {v} lies in two stars")));
                }
            }
        }
        if let Some(v) = seen.iter().position(|&s| !s) {
            return Err(Error::invalid(format!("vertex {v} is not covered by the nebula")));
        }
        Ok(())
    }
}

/// Out-star centres and in-star leaves go to part one, the rest to part two.
pub fn nebula_to_partition(d: &Digraph, nebula: &Nebula) -> Result<TwoPartition> {
    nebula.validate_spanning(d)?;
    let mut p = TwoPartition::uniform(d.order(), Part::One);
    for s in &nebula.stars {
        let (center, leaves) = match s.orientation {
            Orientation::Out => (Part::One, Part::Two),
            Orientation::In => (Part::Two, Part::One),
        };
        p.set(s.center, center);
        for &l in &s.leaves {
            p.set(l, leaves);
        }
    }
    Ok(p)
}

/// Spanning nebula whose star arcs all run from part one to part two.
///
/// Works on the arcs from `V1` to `V2`. Each round takes the lowest such arc
/// `v1 v2` among live vertices, and the sets `V2'` of live part-two vertices
/// whose only live in-neighbour is `v1` and `V1'` of live part-one vertices
/// whose only live out-neighbour is `v2`. If neither set reaches beyond
/// `{v1}`, `{v2}`, the single arc is a star. Otherwise `v1` with `V2'` forms
/// an out-star, or failing that `v2` with `V1'` an in-star. The star is
/// removed and the rest is still valid.
pub fn partition_to_nebula(d: &Digraph, p: &TwoPartition) -> Result<Nebula> {
    let report = check_partition(d, &SpecKind::OutIn(1, 1).into(), p)?;
    if !report.is_valid() {
        return Err(Error::invalid(format!(
            "partition is not valid for out-in 1 1: {}",
            report.violations[0]
        )));
    }
    let n = d.order();
    let crossing = |u: Vertex, v: Vertex| p.part(u) == Part::One && p.part(v) == Part::Two;
    let mut alive = vec![true; n];
    let mut stars = Vec::new();
    loop {
        let Some((v1, v2)) = d.arcs().find(|&(u, v)| alive[u] && alive[v] && crossing(u, v)) else {
            break;
        };
        let only_in = |w: Vertex, alive: &[bool]| {
            let mut ins = d.in_neighbors(w).iter().filter(|&&u| alive[u] && crossing(u, w));
            ins.next() == Some(&v1) && ins.next().is_none()
        };
        let only_out = |w: Vertex, alive: &[bool]| {
            let mut outs = d.out_neighbors(w).iter().filter(|&&u| alive[u] && crossing(w, u));
            outs.next() == Some(&v2) && outs.next().is_none()
        };
        let dep2: Vec<Vertex> = d
            .out_neighbors(v1)
            .iter()
            .copied()
            .filter(|&w| alive[w] && crossing(v1, w) && only_in(w, &alive))
            .collect();
        let dep1: Vec<Vertex> = d
            .in_neighbors(v2)
            .iter()
            .copied()
            .filter(|&w| alive[w] && crossing(w, v2) && only_out(w, &alive))
            .collect();
        let star = if dep2.iter().any(|&w| w != v2) {
            Star::out(v1, dep2)
        } else if dep1.iter().any(|&w| w != v1) {
            Star::inward(v2, dep1)
        } else {
            Star::out(v1, vec![v2])
        };
        for v in star.vertices() {
            alive[v] = false;
        }
        stars.push(star);
    }
    debug_assert!(alive.iter().all(|&a| !a), "valid partitions are fully peeled");
    Ok(Nebula { stars })
}
