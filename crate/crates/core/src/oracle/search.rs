use super::certificate::{Certificate, NoReason};
use super::check::check_partition;
use super::spec::{requirements, Neighborhood, PartitionSpec, Requirement, SpecKind};
use crate::error::{Error, Result};
use crate::graph::{has_cycle_factor, is_strong, Digraph, InstanceRef, Part, TwoPartition, Vertex};

/// Default node limit for [`exact_decide`].
pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// Node budget from `BIPART_BUDGET`, falling back to [`DEFAULT_BUDGET`].
pub fn budget_from_env() -> u64 {
    std::env::var("BIPART_BUDGET")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_BUDGET)
}

// colour codes in the search state
const FREE: u8 = 0;

fn code(p: Part) -> u8 {
    p.index()
}

struct Search<'a> {
    instance: InstanceRef<'a>,
    spec: &'a PartitionSpec,
    n: usize,
    out: Vec<Vec<Vertex>>,
    inn: Vec<Vec<Vertex>>,
    any: Vec<Vec<Vertex>>,
    reqs: [Vec<Requirement>; 2],
    nodes: u64,
    budget: u64,
}

impl<'a> Search<'a> {
    fn new(instance: InstanceRef<'a>, spec: &'a PartitionSpec, budget: u64) -> Self {
        let n = instance.order();
        let (out, inn, any) = match instance {
            InstanceRef::Graph(g) => {
                let adj: Vec<Vec<Vertex>> = g.vertices().map(|v| g.neighbors(v).to_vec()).collect();
                (adj.clone(), adj.clone(), adj)
            }
            InstanceRef::Digraph(d) => (
                d.vertices().map(|v| d.out_neighbors(v).to_vec()).collect(),
                d.vertices().map(|v| d.in_neighbors(v).to_vec()).collect(),
                d.vertices().map(|v| d.neighbors(v)).collect(),
            ),
        };
        Search {
            instance,
            spec,
            n,
            out,
            inn,
            any,
            reqs: [
                requirements(spec.kind, Part::One, n),
                requirements(spec.kind, Part::Two, n),
            ],
            nodes: 0,
            budget,
        }
    }

    fn nbrs(&self, v: Vertex, nb: Neighborhood) -> &[Vertex] {
        match nb {
            Neighborhood::Out => &self.out[v],
            Neighborhood::In => &self.inn[v],
            Neighborhood::Any => &self.any[v],
        }
    }

    /// (neighbours already coloured `target`, uncoloured neighbours)
    fn tally(&self, colors: &[u8], list: &[Vertex], target: u8) -> (usize, usize) {
        let mut fixed = 0;
        let mut free = 0;
        for &u in list {
            if colors[u] == target {
                fixed += 1;
            } else if colors[u] == FREE {
                free += 1;
            }
        }
        (fixed, free)
    }

    /// Whether giving `v` colour `c` can still be completed locally.
    fn color_ok(&self, colors: &[u8], v: Vertex, c: u8) -> bool {
        let part = Part::from_index(c).expect("colour code");
        for r in &self.reqs[c as usize - 1] {
            let (fixed, free) = self.tally(colors, self.nbrs(v, r.neighborhood), code(r.target(part)));
            if fixed + free < r.need {
                return false;
            }
        }
        if self.spec.kind == SpecKind::EulerBSemi1 {
            // the crossing out- and in-degree ranges must overlap
            let o = self.tally(colors, &self.out[v], 3 - c);
            let i = self.tally(colors, &self.inn[v], 3 - c);
            if o.0 > i.0 + i.1 || i.0 > o.0 + o.1 {
                return false;
            }
        }
        true
    }

    /// Fixes forced colours until nothing changes. Returns false on conflict.
    fn propagate(&self, colors: &mut [u8]) -> bool {
        loop {
            let mut changed = false;
            for v in 0..self.n {
                if colors[v] == FREE {
                    match (self.color_ok(colors, v, 1), self.color_ok(colors, v, 2)) {
                        (false, false) => return false,
                        (true, false) => colors[v] = 1,
                        (false, true) => colors[v] = 2,
                        (true, true) => continue,
                    }
                    changed = true;
                    continue;
                }
                let c = colors[v];
                if !self.color_ok(colors, v, c) {
                    return false;
                }
                let part = Part::from_index(c).expect("colour code");
                for r in &self.reqs[c as usize - 1] {
                    let target = code(r.target(part));
                    let list = self.nbrs(v, r.neighborhood);
                    let (fixed, free) = self.tally(colors, list, target);
                    if free > 0 && fixed + free == r.need {
                        for &u in list {
                            if colors[u] == FREE {
                                colors[u] = target;
                            }
                        }
                        changed = true;
                    }
                }
            }
            if !changed {
                return self.global_ok(colors);
            }
        }
    }

    /// Arcs that may still end up crossing.
    fn potential_crossing(&self, d: &Digraph, colors: &[u8]) -> Digraph {
        let arcs = d
            .arcs()
            .filter(|&(u, v)| colors[u] == FREE || colors[v] == FREE || colors[u] != colors[v]);
        Digraph::from_arcs(self.n, arcs).expect("sub-arcs of a valid digraph")
    }

    fn global_ok(&self, colors: &[u8]) -> bool {
        let InstanceRef::Digraph(d) = self.instance else {
            return true;
        };
        match self.spec.kind {
            SpecKind::StrongB if self.n >= 2 => is_strong(&self.potential_crossing(d, colors)),
            SpecKind::CycleFactorB => has_cycle_factor(&self.potential_crossing(d, colors)),
            SpecKind::EulerBSemi1 => self.potential_crossing(d, colors).is_connected(),
            _ => true,
        }
    }

    fn is_solution(&self, colors: &[u8]) -> bool {
        let p = to_partition(colors);
        check_partition(self.instance, self.spec, &p)
            .map(|r| r.is_valid())
            .unwrap_or(false)
    }

    fn dfs(&mut self, mut colors: Vec<u8>) -> Result<Option<Vec<u8>>> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::ResourceExceeded(format!(
                "exact search exceeded its budget of {} nodes",
                self.budget
            )));
        }
        if !self.propagate(&mut colors) {
            return Ok(None);
        }
        let Some(v) = colors.iter().position(|&c| c == FREE) else {
            return Ok(self.is_solution(&colors).then_some(colors));
        };
        for c in [1, 2] {
            let mut next = colors.clone();
            next[v] = c;
            if let Some(found) = self.dfs(next)? {
                return Ok(Some(found));
            }
        }
        Ok(None)
    }
}

fn to_partition(colors: &[u8]) -> TwoPartition {
    TwoPartition::new(
        colors
            .iter()
            .map(|&c| Part::from_index(c).expect("complete colouring"))
            .collect(),
    )
}

/// Complete backtracking decision for any spec, with colour propagation.
///
/// Branches on the lowest uncoloured vertex, part one first. A positive
/// answer always carries a witness accepted by [`check_partition`];
/// running past `budget` search nodes is an error rather than a guess.
pub fn exact_decide<'a>(
    instance: impl Into<InstanceRef<'a>>,
    spec: &PartitionSpec,
    budget: u64,
) -> Result<Certificate> {
    let instance = instance.into();
    spec.validate_for(instance)?;
    let mut search = Search::new(instance, spec, budget);
    let mut colors = vec![FREE; search.n];
    for (&v, &p) in &spec.pins {
        colors[v] = code(p);
    }
    let found = search.dfs(colors)?;
    let trace = vec![format!("search nodes: {}", search.nodes)];
    Ok(match found {
        Some(colors) => Certificate::yes(to_partition(&colors)),
        None => Certificate::no(NoReason::ExhaustedSearch { nodes: search.nodes }),
    }
    .with_trace(trace))
}

/// Plain enumeration of all `2^n` colourings, no pruning. Only meant as a
/// reference for small instances.
pub fn naive_decide<'a>(instance: impl Into<InstanceRef<'a>>, spec: &PartitionSpec) -> Result<Option<TwoPartition>> {
    let instance = instance.into();
    spec.validate_for(instance)?;
    let n = instance.order();
    if n > 24 {
        return Err(Error::ResourceExceeded(format!(
            "naive enumeration refuses n = {n} > 24"
        )));
    }
    for mask in 0..(1u64 << n) {
        let p = TwoPartition::from_mask(n, mask);
        if check_partition(instance, spec, &p)?.is_valid() {
            return Ok(Some(p));
        }
    }
    Ok(None)
}
