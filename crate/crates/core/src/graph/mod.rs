//! Simple graphs and digraphs over the vertex ids `0..n`, 2-partitions, and
//! the structural routines the solvers are built on.

mod branching;
mod connectivity;
mod cycles;
mod handles;
mod matching;
mod scc;

pub use branching::{branching_galaxy, Branching, BranchingGalaxy, Direction, Orientation, Outcome, Star};
pub use connectivity::{edge_connectivity, is_eulerian, is_k_strong, is_strong, vertex_connectivity_at_least};
pub use cycles::{find_even_cycle, DEFAULT_CYCLE_BUDGET};
pub use handles::{handle_decomposition, Handle, HandleDecomposition};
pub use matching::has_cycle_factor;
pub use scc::{strong_components, StrongComponents};

use std::fmt;

use crate::error::{Error, Result};

pub type Vertex = usize;

/// A simple digraph: no loops, no parallel arcs, 2-cycles allowed.
///
/// Neighbourhood lists are kept sorted so every traversal visits vertices in
/// ascending id order.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Digraph {
    out: Vec<Vec<Vertex>>,
    inn: Vec<Vec<Vertex>>,
    arc_count: usize,
}

impl Digraph {
    pub fn new(n: usize) -> Self {
        Digraph {
            out: vec![Vec::new(); n],
            inn: vec![Vec::new(); n],
            arc_count: 0,
        }
    }

    /// Builds a digraph from an arc list. Duplicate arcs collapse; loops and
    /// out-of-range endpoints are rejected.
    pub fn from_arcs<I>(n: usize, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut d = Digraph::new(n);
        for (u, v) in arcs {
            d.add_arc(u, v)?;
        }
        Ok(d)
    }

    /// Inserts `u -> v`. Returns `false` if the arc was already present.
    pub fn add_arc(&mut self, u: Vertex, v: Vertex) -> Result<bool> {
        let n = self.order();
        if u >= n || v >= n {
            return Err(Error::invalid(format!("arc ({u},{v}) out of range for {n} vertices")));
        }
        if u == v {
            return Err(Error::invalid(format!("loop at vertex {u}")));
        }
        match self.out[u].binary_search(&v) {
            Ok(_) => Ok(false),
            Err(pos) => {
                self.out[u].insert(pos, v);
                let pos = self.inn[v].binary_search(&u).unwrap_err();
                self.inn[v].insert(pos, u);
                self.arc_count += 1;
                Ok(true)
            }
        }
    }

    /// Appends a fresh isolated vertex and returns its id.
    pub fn add_vertex(&mut self) -> Vertex {
        self.out.push(Vec::new());
        self.inn.push(Vec::new());
        self.out.len() - 1
    }

    pub fn order(&self) -> usize {
        self.out.len()
    }

    pub fn arc_count(&self) -> usize {
        self.arc_count
    }

    pub fn out_neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.out[v]
    }

    pub fn in_neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.inn[v]
    }

    pub fn out_degree(&self, v: Vertex) -> usize {
        self.out[v].len()
    }

    pub fn in_degree(&self, v: Vertex) -> usize {
        self.inn[v].len()
    }

    /// Number of distinct vertices adjacent to `v` in either direction.
    pub fn neighbor_count(&self, v: Vertex) -> usize {
        self.neighbors(v).len()
    }

    /// Sorted union of in- and out-neighbours.
    pub fn neighbors(&self, v: Vertex) -> Vec<Vertex> {
        let mut all: Vec<Vertex> = self.out[v].iter().chain(&self.inn[v]).copied().collect();
        all.sort_unstable();
        all.dedup();
        all
    }

    pub fn has_arc(&self, u: Vertex, v: Vertex) -> bool {
        u < self.order() && self.out[u].binary_search(&v).is_ok()
    }

    /// All arcs in ascending `(tail, head)` order.
    pub fn arcs(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(u, heads)| heads.iter().map(move |&v| (u, v)))
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.order()
    }

    pub fn min_out_degree(&self) -> usize {
        self.vertices().map(|v| self.out_degree(v)).min().unwrap_or(0)
    }

    pub fn min_in_degree(&self) -> usize {
        self.vertices().map(|v| self.in_degree(v)).min().unwrap_or(0)
    }

    /// Minimum semi-degree `min(δ⁺, δ⁻)`.
    pub fn min_semi_degree(&self) -> usize {
        self.min_out_degree().min(self.min_in_degree())
    }

    /// The digraph with every arc reversed.
    pub fn converse(&self) -> Digraph {
        Digraph {
            out: self.inn.clone(),
            inn: self.out.clone(),
            arc_count: self.arc_count,
        }
    }

    /// Subdigraph induced by `keep`, relabelled `0..keep.len()` in the given
    /// order. Returns the subdigraph and the map new id -> old id.
    pub fn induced(&self, keep: &[Vertex]) -> (Digraph, Vec<Vertex>) {
        let mut index = vec![usize::MAX; self.order()];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let mut d = Digraph::new(keep.len());
        for (i, &u) in keep.iter().enumerate() {
            for &v in &self.out[u] {
                if index[v] != usize::MAX {
                    d.add_arc(i, index[v]).expect("induced arcs are valid");
                }
            }
        }
        (d, keep.to_vec())
    }

    /// Removes the vertices in `remove` and relabels the rest in ascending order.
    pub fn delete_vertices(&self, remove: &[Vertex]) -> (Digraph, Vec<Vertex>) {
        let mut gone = vec![false; self.order()];
        for &v in remove {
            gone[v] = true;
        }
        let keep: Vec<Vertex> = self.vertices().filter(|&v| !gone[v]).collect();
        self.induced(&keep)
    }

    /// Underlying undirected graph; 2-cycles become a single edge.
    pub fn underlying(&self) -> Graph {
        let mut g = Graph::new(self.order());
        for (u, v) in self.arcs() {
            g.add_edge(u, v).expect("arcs are valid edges");
        }
        g
    }

    /// True when the underlying graph is connected (vacuously for n <= 1).
    pub fn is_connected(&self) -> bool {
        self.underlying().is_connected()
    }
}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Digraph({}; ", self.order())?;
        f.debug_list().entries(self.arcs()).finish()?;
        write!(f, ")")
    }
}

/// A simple undirected graph.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    edge_count: usize,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            edge_count: 0,
        }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<bool> {
        let n = self.order();
        if u >= n || v >= n {
            return Err(Error::invalid(format!(
                "edge {{{u},{v}}} out of range for {n} vertices"
            )));
        }
        if u == v {
            return Err(Error::invalid(format!("loop at vertex {u}")));
        }
        match self.adj[u].binary_search(&v) {
            Ok(_) => Ok(false),
            Err(pos) => {
                self.adj[u].insert(pos, v);
                let pos = self.adj[v].binary_search(&u).unwrap_err();
                self.adj[v].insert(pos, u);
                self.edge_count += 1;
                Ok(true)
            }
        }
    }

    pub fn add_vertex(&mut self) -> Vertex {
        self.adj.push(Vec::new());
        self.adj.len() - 1
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.order() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Every edge once as `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nbrs)| nbrs.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.order()
    }

    /// Minimum degree δ(G); 0 for the empty graph.
    pub fn min_degree(&self) -> usize {
        self.vertices().map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// Connected components, each sorted, listed by smallest member.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for &v in &self.adj[u] {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        stack.push(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Each undirected edge as a 2-cycle.
    pub fn symmetric_digraph(&self) -> Digraph {
        let mut d = Digraph::new(self.order());
        for (u, v) in self.edges() {
            d.add_arc(u, v).expect("valid");
            d.add_arc(v, u).expect("valid");
        }
        d
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({}; ", self.order())?;
        f.debug_list().entries(self.edges()).finish()?;
        write!(f, ")")
    }
}

/// One side of a 2-partition, written `1` and `2` in files and output.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Part {
    One,
    Two,
}

impl Part {
    pub fn other(self) -> Part {
        match self {
            Part::One => Part::Two,
            Part::Two => Part::One,
        }
    }

    pub fn index(self) -> u8 {
        match self {
            Part::One => 1,
            Part::Two => 2,
        }
    }

    pub fn from_index(i: u8) -> Option<Part> {
        match i {
            1 => Some(Part::One),
            2 => Some(Part::Two),
            _ => None,
        }
    }
}

impl fmt::Display for Part {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.index())
    }
}

/// A total assignment of vertices to parts. Either part may be empty.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TwoPartition {
    parts: Vec<Part>,
}

impl TwoPartition {
    pub fn new(parts: Vec<Part>) -> Self {
        TwoPartition { parts }
    }

    /// Every vertex in `part`.
    pub fn uniform(n: usize, part: Part) -> Self {
        TwoPartition { parts: vec![part; n] }
    }

    /// `(V \ second, second)`.
    pub fn from_second_part(n: usize, second: &[Vertex]) -> Self {
        let mut parts = vec![Part::One; n];
        for &v in second {
            parts[v] = Part::Two;
        }
        TwoPartition { parts }
    }

    /// Decodes bit `v` of `mask` as vertex `v` being in part two.
    pub fn from_mask(n: usize, mask: u64) -> Self {
        TwoPartition {
            parts: (0..n)
                .map(|v| if mask >> v & 1 == 1 { Part::Two } else { Part::One })
                .collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn part(&self, v: Vertex) -> Part {
        self.parts[v]
    }

    pub fn set(&mut self, v: Vertex, p: Part) {
        self.parts[v] = p;
    }

    pub fn parts(&self) -> &[Part] {
        &self.parts
    }

    pub fn members(&self, p: Part) -> Vec<Vertex> {
        (0..self.parts.len()).filter(|&v| self.parts[v] == p).collect()
    }

    /// Same vertex sets with the part labels exchanged.
    pub fn swapped(&self) -> Self {
        TwoPartition {
            parts: self.parts.iter().map(|p| p.other()).collect(),
        }
    }
}

/// Either kind of input instance, borrowed.
#[derive(Debug, Clone, Copy)]
pub enum InstanceRef<'a> {
    Graph(&'a Graph),
    Digraph(&'a Digraph),
}

impl InstanceRef<'_> {
    pub fn order(&self) -> usize {
        match self {
            InstanceRef::Graph(g) => g.order(),
            InstanceRef::Digraph(d) => d.order(),
        }
    }

    pub fn kind_name(&self) -> &'static str {
        match self {
            InstanceRef::Graph(_) => "graph",
            InstanceRef::Digraph(_) => "digraph",
        }
    }
}

impl<'a> From<&'a Graph> for InstanceRef<'a> {
    fn from(g: &'a Graph) -> Self {
        InstanceRef::Graph(g)
    }
}

impl<'a> From<&'a Digraph> for InstanceRef<'a> {
    fn from(d: &'a Digraph) -> Self {
        InstanceRef::Digraph(d)
    }
}

/// Owned counterpart of [`InstanceRef`], produced by the file readers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Instance {
    Graph(Graph),
    Digraph(Digraph),
}

impl Instance {
    pub fn as_ref(&self) -> InstanceRef<'_> {
        match self {
            Instance::Graph(g) => InstanceRef::Graph(g),
            Instance::Digraph(d) => InstanceRef::Digraph(d),
        }
    }

    pub fn order(&self) -> usize {
        self.as_ref().order()
    }
}

impl<'a> From<&'a Instance> for InstanceRef<'a> {
    fn from(i: &'a Instance) -> Self {
        i.as_ref()
    }
}

/// The spanning bipartite subdigraph `B_D(V1, V2)`: exactly the arcs whose
/// ends lie in different parts.
pub fn bipartite_subdigraph(d: &Digraph, p: &TwoPartition) -> Digraph {
    assert_eq!(d.order(), p.len(), "partition must cover the digraph");
    let mut b = Digraph::new(d.order());
    for (u, v) in d.arcs() {
        if p.part(u) != p.part(v) {
            b.add_arc(u, v).expect("valid");
        }
    }
    b
}

/// Undirected counterpart of [`bipartite_subdigraph`].
pub fn bipartite_subgraph(g: &Graph, p: &TwoPartition) -> Graph {
    assert_eq!(g.order(), p.len(), "partition must cover the graph");
    let mut b = Graph::new(g.order());
    for (u, v) in g.edges() {
        if p.part(u) != p.part(v) {
            b.add_edge(u, v).expect("valid");
        }
    }
    b
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn duplicate_arcs_collapse_and_loops_are_rejected() {
        let d = Digraph::from_arcs(3, [(0, 1), (0, 1), (1, 2)]).unwrap();
        assert_eq!(d.arc_count(), 2);
        assert!(Digraph::from_arcs(2, [(1, 1)]).is_err());
        assert!(Digraph::from_arcs(2, [(0, 2)]).is_err());
    }

    #[test]
    fn views_are_consistent() {
        let d = Digraph::from_arcs(4, [(2, 0), (0, 1), (1, 0), (3, 0)]).unwrap();
        assert_eq!(d.out_neighbors(0), &[1]);
        assert_eq!(d.in_neighbors(0), &[1, 2, 3]);
        assert_eq!(d.neighbors(0), vec![1, 2, 3]);
        for (u, v) in d.arcs() {
            assert!(d.in_neighbors(v).contains(&u));
        }
        assert_eq!(d.underlying().edge_count(), 3);
    }

    #[test]
    fn bipartite_subdigraph_of_two_cycle() {
        let d = Digraph::from_arcs(2, [(0, 1), (1, 0)]).unwrap();
        let split = TwoPartition::from_second_part(2, &[1]);
        assert_eq!(bipartite_subdigraph(&d, &split).arc_count(), 2);
        let lumped = TwoPartition::uniform(2, Part::One);
        assert_eq!(bipartite_subdigraph(&d, &lumped).arc_count(), 0);
    }

    #[test]
    fn bipartite_subdigraph_of_four_cycle_keeps_every_arc() {
        let d = Digraph::from_arcs(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let p = TwoPartition::from_second_part(4, &[1, 3]);
        assert_eq!(bipartite_subdigraph(&d, &p), d);
    }

    #[test]
    fn induced_relabels_in_given_order() {
        let d = Digraph::from_arcs(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let (sub, map) = d.induced(&[3, 0, 1]);
        assert_eq!(map, vec![3, 0, 1]);
        assert!(sub.has_arc(0, 1) && sub.has_arc(1, 2));
        assert_eq!(sub.arc_count(), 2);
    }
}
