//! Instance generators for the hardness reductions.
//!
//! Every generator numbers vertices in a fixed documented order, so equal
//! inputs give identical outputs, and names each vertex by its role.

mod eulerian;
mod inout;
mod strong;
mod undirected;

use std::collections::BTreeMap;

use crate::graph::{Digraph, Graph, Part, Vertex};
use crate::oracle::{PartitionSpec, SpecKind};

pub use eulerian::{euler_coloring, eulerian_counterexample, gadget_gr, hypergraph_instance};
pub use inout::{acyclic_inout_instance, pattern_instance, w_instance, w_prime_instance};
pub use strong::{lift_k1k2, strong_22_instance, strong_22_instance_verbatim, strong_outin_k1_instance};
pub use undirected::{und_1k_instance, und_nae_instance};

/// Role names of generated vertices, in vertex order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Labels {
    entries: Vec<(String, Vertex)>,
}

impl Labels {
    pub fn push(&mut self, name: impl Into<String>, v: Vertex) {
        self.entries.push((name.into(), v));
    }

    pub fn get(&self, name: &str) -> Option<Vertex> {
        self.entries.iter().find(|(n, _)| n == name).map(|&(_, v)| v)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, Vertex)> + '_ {
        self.entries.iter().map(|(n, v)| (n.as_str(), *v))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// A generated instance with its labels and any colours the reduction
/// fixes in advance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gadget<G> {
    pub instance: G,
    pub labels: Labels,
    pub pins: BTreeMap<Vertex, Part>,
}

impl<G> Gadget<G> {
    /// `kind` together with this gadget's pins.
    pub fn spec(&self, kind: SpecKind) -> PartitionSpec {
        PartitionSpec {
            kind,
            pins: self.pins.clone(),
        }
    }

    pub fn vertex(&self, name: &str) -> Vertex {
        self.labels
            .get(name)
            .unwrap_or_else(|| panic!("no vertex labelled `{name}`"))
    }
}

pub(crate) struct DiBuilder {
    d: Digraph,
    labels: Labels,
}

impl DiBuilder {
    pub(crate) fn new() -> Self {
        DiBuilder {
            d: Digraph::new(0),
            labels: Labels::default(),
        }
    }

    pub(crate) fn from_host(host: &Digraph, name: impl Fn(Vertex) -> String) -> Self {
        let mut labels = Labels::default();
        for v in host.vertices() {
            labels.push(name(v), v);
        }
        DiBuilder {
            d: host.clone(),
            labels,
        }
    }

    pub(crate) fn vertex(&mut self, name: impl Into<String>) -> Vertex {
        let v = self.d.add_vertex();
        self.labels.push(name, v);
        v
    }

    pub(crate) fn vertices(&mut self, count: usize, name: impl Fn(usize) -> String) -> Vec<Vertex> {
        (0..count).map(|i| self.vertex(name(i))).collect()
    }

    pub(crate) fn arc(&mut self, u: Vertex, v: Vertex) {
        self.d
            .add_arc(u, v)
            .expect("generated arcs join distinct existing vertices");
    }

    pub(crate) fn all_arcs(&mut self, from: &[Vertex], to: &[Vertex]) {
        for &u in from {
            for &v in to {
                self.arc(u, v);
            }
        }
    }

    pub(crate) fn finish(self) -> Gadget<Digraph> {
        Gadget {
            instance: self.d,
            labels: self.labels,
            pins: BTreeMap::new(),
        }
    }
}

pub(crate) struct GraphBuilder {
    g: Graph,
    labels: Labels,
}

impl GraphBuilder {
    pub(crate) fn new() -> Self {
        GraphBuilder {
            g: Graph::new(0),
            labels: Labels::default(),
        }
    }

    pub(crate) fn vertex(&mut self, name: impl Into<String>) -> Vertex {
        let v = self.g.add_vertex();
        self.labels.push(name, v);
        v
    }

    pub(crate) fn vertices(&mut self, count: usize, name: impl Fn(usize) -> String) -> Vec<Vertex> {
        (0..count).map(|i| self.vertex(name(i))).collect()
    }

    pub(crate) fn edge(&mut self, u: Vertex, v: Vertex) {
        self.g
            .add_edge(u, v)
            .expect("generated edges join distinct existing vertices");
    }

    pub(crate) fn all_edges(&mut self, a: &[Vertex], b: &[Vertex]) {
        for &u in a {
            for &v in b {
                self.edge(u, v);
            }
        }
    }

    pub(crate) fn order(&self) -> usize {
        self.g.order()
    }

    pub(crate) fn finish(self) -> Gadget<Graph> {
        Gadget {
            instance: self.g,
            labels: self.labels,
            pins: BTreeMap::new(),
        }
    }
}

/// All `r`-subsets of `0..n` in lexicographic order.
pub(crate) fn combinations(n: usize, r: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, r: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < r - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, r, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, r, &mut Vec::new(), &mut out);
    out
}

/// Label for a literal: `x3` or `~x3` (1-based).
pub(crate) fn literal_name(var: usize, negated: bool) -> String {
    if negated {
        format!("~x{}", var + 1)
    } else {
        format!("x{}", var + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn combinations_are_lexicographic() {
        assert_eq!(combinations(3, 2), vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert_eq!(combinations(5, 3).len(), 10);
        assert_eq!(combinations(2, 0), vec![Vec::<usize>::new()]);
    }
}
