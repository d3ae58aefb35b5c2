use std::collections::VecDeque;

use super::{Digraph, Vertex};
use crate::error::{Error, Result};

/// Which way a branching points.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    /// Every vertex is reachable from the root.
    Out,
    /// The root is reachable from every vertex.
    In,
}

/// Orientation of a star: an out-star centre dominates its leaves, an
/// in-star centre is dominated by them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Orientation {
    Out,
    In,
}

/// A non-trivial star (at least one leaf).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Star {
    pub center: Vertex,
    pub leaves: Vec<Vertex>,
    pub orientation: Orientation,
}

impl Star {
    pub fn out(center: Vertex, leaves: Vec<Vertex>) -> Self {
        Star {
            center,
            leaves,
            orientation: Orientation::Out,
        }
    }

    pub fn inward(center: Vertex, leaves: Vec<Vertex>) -> Self {
        Star {
            center,
            leaves,
            orientation: Orientation::In,
        }
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        std::iter::once(self.center).chain(self.leaves.iter().copied())
    }

    /// Star arcs, oriented as in the host.
    pub fn arcs(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.leaves.iter().map(move |&l| match self.orientation {
            Orientation::Out => (self.center, l),
            Orientation::In => (l, self.center),
        })
    }

    /// Non-trivial and every star arc present in `host`.
    pub fn is_valid_in(&self, host: &Digraph) -> bool {
        !self.leaves.is_empty() && self.arcs().all(|(u, v)| host.has_arc(u, v))
    }
}

/// A spanning out- or in-tree of the host, stored as a parent map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Branching {
    pub root: Vertex,
    pub direction: Direction,
    /// `parent[v]` is `None` only for the root.
    pub parent: Vec<Option<Vertex>>,
    /// Breadth-first depth of each vertex.
    pub depth: Vec<usize>,
}

impl Branching {
    /// Breadth-first branching, neighbours scanned in ascending id order.
    pub fn breadth_first(host: &Digraph, root: Vertex, direction: Direction) -> Result<Self> {
        let n = host.order();
        if root >= n {
            return Err(Error::invalid(format!("root {root} out of range")));
        }
        let mut parent = vec![None; n];
        let mut depth = vec![usize::MAX; n];
        depth[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            let next = match direction {
                Direction::Out => host.out_neighbors(u),
                Direction::In => host.in_neighbors(u),
            };
            for &v in next {
                if depth[v] == usize::MAX {
                    depth[v] = depth[u] + 1;
                    parent[v] = Some(u);
                    queue.push_back(v);
                }
            }
        }
        if let Some(v) = depth.iter().position(|&d| d == usize::MAX) {
            let rel = match direction {
                Direction::Out => "reachable from",
                Direction::In => "able to reach",
            };
            return Err(Error::invalid(format!("vertex {v} is not {rel} root {root}")));
        }
        Ok(Branching {
            root,
            direction,
            parent,
            depth,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    /// The peeling consumed every vertex.
    Winning,
    /// Only the root was left over.
    Losing,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BranchingGalaxy {
    pub branching: Branching,
    pub outcome: Outcome,
    /// Vertex-disjoint non-trivial stars of the branching's orientation,
    /// covering every vertex (winning) or every vertex but the root (losing).
    pub galaxy: Vec<Star>,
}

/// Builds a breadth-first branching from `root` and peels it into stars.
///
/// Repeatedly takes a deepest remaining vertex (smallest id among ties); its
/// parent together with all of the parent's remaining children is a star,
/// which is removed. The process stops when nothing, or only the root, is
/// left.
pub fn branching_galaxy(host: &Digraph, root: Vertex, direction: Direction) -> Result<BranchingGalaxy> {
    let branching = Branching::breadth_first(host, root, direction)?;
    let n = host.order();
    let mut children: Vec<Vec<Vertex>> = vec![Vec::new(); n];
    for v in 0..n {
        if let Some(p) = branching.parent[v] {
            children[p].push(v);
        }
    }
    let mut order: Vec<Vertex> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(branching.depth[v]), v));

    let orientation = match direction {
        Direction::Out => Orientation::Out,
        Direction::In => Orientation::In,
    };
    let mut removed = vec![false; n];
    let mut galaxy = Vec::new();
    for &v in &order {
        if removed[v] || v == root {
            continue;
        }
        let p = branching.parent[v].expect("non-root has a parent");
        let leaves: Vec<Vertex> = children[p].iter().copied().filter(|&c| !removed[c]).collect();
        removed[p] = true;
        for &l in &leaves {
            removed[l] = true;
        }
        galaxy.push(Star {
            center: p,
            leaves,
            orientation,
        });
    }
    let outcome = if removed[root] {
        Outcome::Winning
    } else {
        Outcome::Losing
    };
    Ok(BranchingGalaxy {
        branching,
        outcome,
        galaxy,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn covered(g: &BranchingGalaxy) -> Vec<Vertex> {
        let mut all: Vec<Vertex> = g.galaxy.iter().flat_map(|s| s.vertices()).collect();
        all.sort_unstable();
        all
    }

    #[test]
    fn single_arc_is_winning() {
        let d = Digraph::from_arcs(2, [(0, 1)]).unwrap();
        let g = branching_galaxy(&d, 0, Direction::Out).unwrap();
        assert_eq!(g.outcome, Outcome::Winning);
        assert_eq!(g.galaxy, vec![Star::out(0, vec![1])]);
    }

    #[test]
    fn path_of_three_is_losing() {
        let d = Digraph::from_arcs(3, [(0, 1), (1, 2)]).unwrap();
        let g = branching_galaxy(&d, 0, Direction::Out).unwrap();
        assert_eq!(g.outcome, Outcome::Losing);
        assert_eq!(g.galaxy, vec![Star::out(1, vec![2])]);
    }

    #[test]
    fn star_is_its_own_galaxy() {
        let d = Digraph::from_arcs(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let g = branching_galaxy(&d, 0, Direction::Out).unwrap();
        assert_eq!(g.outcome, Outcome::Winning);
        assert_eq!(g.galaxy, vec![Star::out(0, vec![1, 2, 3])]);
    }

    #[test]
    fn in_branching_uses_in_stars() {
        // 1 -> 0 <- 2, 3 -> 2
        let d = Digraph::from_arcs(4, [(1, 0), (2, 0), (3, 2)]).unwrap();
        let g = branching_galaxy(&d, 0, Direction::In).unwrap();
        assert_eq!(g.outcome, Outcome::Winning);
        assert_eq!(covered(&g), vec![0, 1, 2, 3]);
        for s in &g.galaxy {
            assert!(s.is_valid_in(&d));
            assert_eq!(s.orientation, Orientation::In);
        }
        // 2 -> 1 -> 0 leaves the root alone
        let p = Digraph::from_arcs(3, [(2, 1), (1, 0)]).unwrap();
        let g = branching_galaxy(&p, 0, Direction::In).unwrap();
        assert_eq!(g.outcome, Outcome::Losing);
        assert_eq!(g.galaxy, vec![Star::inward(1, vec![2])]);
    }

    #[test]
    fn unreachable_vertex_is_rejected() {
        let d = Digraph::from_arcs(3, [(0, 1)]).unwrap();
        assert!(branching_galaxy(&d, 0, Direction::Out).is_err());
    }
}
