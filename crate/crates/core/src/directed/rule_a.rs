use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{is_strong, Digraph, Part, TwoPartition, Vertex};
use crate::oracle::{budget_from_env, exact_decide, Certificate, NoReason, SpecKind};

/// One application of the reduction: the arc `x y` with `d+(x) = d-(y) = 1`
/// was contracted away, and `shortcuts` were added from `N-(x)` to `N+(y)`.
///
/// The recorded neighbourhoods exclude `x` and `y` themselves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionStep {
    pub x: Vertex,
    pub y: Vertex,
    pub in_x: Vec<Vertex>,
    pub out_y: Vec<Vertex>,
    pub shortcuts: Vec<(Vertex, Vertex)>,
}

/// Steps in the order they were applied. Vertex ids are those of the
/// original digraph throughout.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ReductionTrace {
    pub steps: Vec<ReductionStep>,
}

impl ReductionTrace {
    /// Every intermediate digraph, starting with `d` and ending with the
    /// fully reduced one, each with its map to original ids.
    pub fn replay(&self, d: &Digraph) -> Result<Vec<(Digraph, Vec<Vertex>)>> {
        let mut work = Work::new(d);
        let mut out = vec![work.snapshot()];
        for (i, s) in self.steps.iter().enumerate() {
            if !work.reducible(s.x, s.y) {
                return Err(Error::invalid(format!("step {i} reduces an arc that does not qualify")));
            }
            work.reduce(s.x, s.y);
            out.push(work.snapshot());
        }
        Ok(out)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduced {
    /// The digraph after the last step, relabelled `0..`.
    pub digraph: Digraph,
    /// Original id of each vertex of `digraph`.
    pub kept: Vec<Vertex>,
    pub trace: ReductionTrace,
}

struct Work {
    alive: Vec<bool>,
    out: Vec<BTreeSet<Vertex>>,
    inn: Vec<BTreeSet<Vertex>>,
}

impl Work {
    fn new(d: &Digraph) -> Self {
        Work {
            alive: vec![true; d.order()],
            out: d
                .vertices()
                .map(|v| d.out_neighbors(v).iter().copied().collect())
                .collect(),
            inn: d
                .vertices()
                .map(|v| d.in_neighbors(v).iter().copied().collect())
                .collect(),
        }
    }

    fn reducible(&self, x: Vertex, y: Vertex) -> bool {
        self.alive[x]
            && self.alive[y]
            && self.out[x].len() == 1
            && self.inn[y].len() == 1
            && self.out[x].contains(&y)
            && !self.out[y].contains(&x)
    }

    fn next_arc(&self) -> Option<(Vertex, Vertex)> {
        (0..self.alive.len())
            .filter(|&x| self.alive[x] && self.out[x].len() == 1)
            .map(|x| (x, *self.out[x].first().expect("one out-neighbour")))
            .find(|&(x, y)| self.reducible(x, y))
    }

    fn reduce(&mut self, x: Vertex, y: Vertex) -> ReductionStep {
        let in_x: Vec<Vertex> = self.inn[x].iter().copied().filter(|&u| u != y).collect();
        let out_y: Vec<Vertex> = self.out[y].iter().copied().filter(|&v| v != x).collect();
        for v in [x, y] {
            for u in std::mem::take(&mut self.out[v]) {
                self.inn[u].remove(&v);
            }
            for u in std::mem::take(&mut self.inn[v]) {
                self.out[u].remove(&v);
            }
            self.alive[v] = false;
        }
        let mut shortcuts = Vec::new();
        for &u in &in_x {
            for &v in &out_y {
                if u != v && self.out[u].insert(v) {
                    self.inn[v].insert(u);
                    shortcuts.push((u, v));
                }
            }
        }
        ReductionStep {
            x,
            y,
            in_x,
            out_y,
            shortcuts,
        }
    }

    fn snapshot(&self) -> (Digraph, Vec<Vertex>) {
        let kept: Vec<Vertex> = (0..self.alive.len()).filter(|&v| self.alive[v]).collect();
        let mut index = vec![usize::MAX; self.alive.len()];
        for (i, &v) in kept.iter().enumerate() {
            index[v] = i;
        }
        let arcs = kept
            .iter()
            .flat_map(|&u| self.out[u].iter().map(move |&v| (u, v)))
            .map(|(u, v)| (index[u], index[v]));
        (Digraph::from_arcs(kept.len(), arcs).expect("live arcs are valid"), kept)
    }
}

/// Applies the reduction until no arc qualifies, always picking the arc
/// with the lowest `(x, y)`. Loops and repeated arcs are never added.
///
/// An arc `x y` whose reverse `y x` is also present is never reduced. Such
/// a pair can satisfy itself (`x` in part two, `y` in part one) while other
/// in-neighbours of `x` in part one depend on `x`; contracting it can then
/// destroy every partition. The smallest case is the strong digraph
/// `0 1, 0 2, 1 2, 2 0`, which has the partition `({0}, {1, 2})` but would
/// reduce through `2 0` to a single vertex.
pub fn rule_a_reduce(d: &Digraph) -> Reduced {
    let mut work = Work::new(d);
    let mut trace = ReductionTrace::default();
    while let Some((x, y)) = work.next_arc() {
        trace.steps.push(work.reduce(x, y));
    }
    let (digraph, kept) = work.snapshot();
    Reduced { digraph, kept, trace }
}

/// Colours `x` and `y` of a step given colours for everything that survived
/// it: `x = 2, y = 1` when some recorded in-neighbour of `x` has colour 1
/// and some recorded out-neighbour of `y` colour 2, otherwise `x = 1, y = 2`.
pub fn lift_coloring(step: &ReductionStep, colors: &mut [Option<Part>]) -> Result<()> {
    let color = |v: Vertex| colors[v].ok_or_else(|| Error::invalid(format!("vertex {v} is uncoloured")));
    if colors[step.x].is_some() || colors[step.y].is_some() {
        return Err(Error::invalid("reduced vertices are already coloured"));
    }
    let mut one_before = false;
    for &u in &step.in_x {
        one_before |= color(u)? == Part::One;
    }
    let mut two_after = false;
    for &v in &step.out_y {
        two_after |= color(v)? == Part::Two;
    }
    let (cx, cy) = if one_before && two_after {
        (Part::Two, Part::One)
    } else {
        (Part::One, Part::Two)
    };
    colors[step.x] = Some(cx);
    colors[step.y] = Some(cy);
    Ok(())
}

/// Out-in `(1, 1)` for strong digraphs: reduce fully; the answer is no
/// exactly when a single vertex remains.
///
/// For a witness the residue is coloured by exact search and the colouring
/// is lifted back through the trace. If that search runs out of budget the
/// answer stands without a witness.
pub fn inout11_strong_decide(d: &Digraph) -> Result<Certificate> {
    if d.order() > 0 && !is_strong(d) {
        return Err(Error::invalid("digraph is not strong"));
    }
    let reduced = rule_a_reduce(d);
    let log: Vec<String> = reduced
        .trace
        .steps
        .iter()
        .map(|s| format!("reduce {} {}", s.x, s.y))
        .collect();
    if reduced.digraph.order() == 1 {
        return Ok(Certificate::no(NoReason::ReducedToSingleVertex {
            vertex: reduced.kept[0],
            steps: reduced.trace.steps.len(),
        })
        .with_trace(log));
    }
    let residue = match exact_decide(&reduced.digraph, &SpecKind::OutIn(1, 1).into(), budget_from_env()) {
        Ok(cert) => cert
            .witness
            .ok_or_else(|| Error::invalid("irreducible strong digraph without a partition; input was not strong"))?,
        Err(Error::ResourceExceeded(msg)) => {
            return Ok(Certificate::yes_without_witness(format!("witness omitted: {msg}")).with_trace(log));
        }
        Err(e) => return Err(e),
    };
    let mut colors = vec![None; d.order()];
    for (i, &v) in reduced.kept.iter().enumerate() {
        colors[v] = Some(residue.part(i));
    }
    for step in reduced.trace.steps.iter().rev() {
        lift_coloring(step, &mut colors)?;
    }
    let parts = colors.into_iter().map(|c| c.expect("every vertex lifted")).collect();
    Ok(Certificate::yes(TwoPartition::new(parts)).with_trace(log))
}
