use std::fmt;

use super::spec::{requirements, Neighborhood, PartitionSpec, Relation, SpecKind};
use crate::error::{Error, Result};
use crate::graph::{
    bipartite_subdigraph, has_cycle_factor, is_strong, Digraph, InstanceRef, Part, TwoPartition, Vertex,
};

/// One reason a partition fails a spec.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    Pin {
        vertex: Vertex,
        required: Part,
        actual: Part,
    },
    Shortfall {
        vertex: Vertex,
        part: Part,
        neighborhood: Neighborhood,
        relation: Relation,
        have: usize,
        need: usize,
    },
    NotStrong,
    Unbalanced {
        vertex: Vertex,
        out: usize,
        inn: usize,
    },
    Disconnected,
    NoCycleFactor,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Pin {
                vertex,
                required,
                actual,
            } => {
                write!(
                    f,
                    "vertex {vertex} pinned to part {required} but placed in part {actual}"
                )
            }
            Violation::Shortfall {
                vertex,
                part,
                neighborhood,
                relation,
                have,
                need,
            } => {
                let nb = match neighborhood {
                    Neighborhood::Out => "out-neighbours",
                    Neighborhood::In => "in-neighbours",
                    Neighborhood::Any => "neighbours",
                };
                let rel = match relation {
                    Relation::Across => "in the other part",
                    Relation::Inside => "in its own part",
                };
                write!(f, "vertex {vertex} (part {part}) has {have} {nb} {rel}, needs {need}")
            }
            Violation::NotStrong => write!(f, "crossing subdigraph is not strong"),
            Violation::Unbalanced { vertex, out, inn } => {
                write!(f, "vertex {vertex} has crossing out-degree {out} but in-degree {inn}")
            }
            Violation::Disconnected => write!(f, "crossing subdigraph is disconnected"),
            Violation::NoCycleFactor => write!(f, "crossing subdigraph has no cycle factor"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CheckReport {
    pub violations: Vec<Violation>,
}

impl CheckReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Neighbour list of `v` under `nb`, abstracting over graphs and digraphs.
pub(crate) fn neighborhood(instance: InstanceRef<'_>, v: Vertex, nb: Neighborhood) -> Vec<Vertex> {
    match instance {
        InstanceRef::Graph(g) => g.neighbors(v).to_vec(),
        InstanceRef::Digraph(d) => match nb {
            Neighborhood::Out => d.out_neighbors(v).to_vec(),
            Neighborhood::In => d.in_neighbors(v).to_vec(),
            Neighborhood::Any => d.neighbors(v),
        },
    }
}

/// Audits `p` against every constraint of `spec`.
///
/// Errors only on malformed input (kind mismatch, wrong partition length);
/// every unmet constraint, including pins, is a violation.
pub fn check_partition<'a>(
    instance: impl Into<InstanceRef<'a>>,
    spec: &PartitionSpec,
    p: &TwoPartition,
) -> Result<CheckReport> {
    let instance = instance.into();
    spec.validate_for(instance)?;
    let n = instance.order();
    if p.len() != n {
        return Err(Error::invalid(format!(
            "partition covers {} vertices, instance has {n}",
            p.len()
        )));
    }
    let mut violations = Vec::new();
    for (&vertex, &required) in &spec.pins {
        let actual = p.part(vertex);
        if actual != required {
            violations.push(Violation::Pin {
                vertex,
                required,
                actual,
            });
        }
    }
    let reqs = [
        requirements(spec.kind, Part::One, n),
        requirements(spec.kind, Part::Two, n),
    ];
    for v in 0..n {
        let part = p.part(v);
        for r in &reqs[part.index() as usize - 1] {
            let target = r.target(part);
            let have = neighborhood(instance, v, r.neighborhood)
                .into_iter()
                .filter(|&u| p.part(u) == target)
                .count();
            if have < r.need {
                violations.push(Violation::Shortfall {
                    vertex: v,
                    part,
                    neighborhood: r.neighborhood,
                    relation: r.relation,
                    have,
                    need: r.need,
                });
            }
        }
    }
    if let InstanceRef::Digraph(d) = instance {
        violations.extend(global_violations(d, spec.kind, p));
    }
    Ok(CheckReport { violations })
}

fn global_violations(d: &Digraph, kind: SpecKind, p: &TwoPartition) -> Vec<Violation> {
    let mut out = Vec::new();
    match kind {
        SpecKind::StrongB if !is_strong(&bipartite_subdigraph(d, p)) => out.push(Violation::NotStrong),
        SpecKind::EulerBSemi1 => {
            let b = bipartite_subdigraph(d, p);
            for v in b.vertices() {
                let (o, i) = (b.out_degree(v), b.in_degree(v));
                if o != i {
                    out.push(Violation::Unbalanced {
                        vertex: v,
                        out: o,
                        inn: i,
                    });
                }
            }
            if !b.is_connected() {
                out.push(Violation::Disconnected);
            }
        }
        SpecKind::CycleFactorB if !has_cycle_factor(&bipartite_subdigraph(d, p)) => out.push(Violation::NoCycleFactor),
        _ => {}
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn valid(d: &Digraph, kind: SpecKind, second: &[Vertex]) -> bool {
        let p = TwoPartition::from_second_part(d.order(), second);
        check_partition(d, &kind.into(), &p).unwrap().is_valid()
    }

    #[test]
    fn alternating_four_cycle() {
        let c4 = Digraph::from_arcs(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert!(valid(&c4, SpecKind::OutOut(1, 1), &[1, 3]));
        assert!(valid(&c4, SpecKind::StrongB, &[1, 3]));
        assert!(!valid(&c4, SpecKind::StrongB, &[1]));
    }

    #[test]
    fn empty_part_imposes_nothing() {
        let d = Digraph::from_arcs(3, [(0, 1), (1, 2)]).unwrap();
        // the zero demand sits on the non-empty part
        assert!(valid(&d, SpecKind::OutOut(0, 3), &[]));
        assert!(valid(&d, SpecKind::OutOut(3, 0), &[0, 1, 2]));
        assert!(!valid(&d, SpecKind::OutOut(3, 0), &[]));
    }

    #[test]
    fn single_arc_out_in() {
        let d = Digraph::from_arcs(2, [(0, 1)]).unwrap();
        assert!(valid(&d, SpecKind::OutIn(1, 1), &[1]));
        assert!(!valid(&d, SpecKind::OutIn(1, 1), &[0]));
    }

    #[test]
    fn pins_are_reported() {
        let d = Digraph::from_arcs(2, [(0, 1), (1, 0)]).unwrap();
        let spec = PartitionSpec::new(SpecKind::StrongB).pin(0, Part::Two);
        let rep = check_partition(&d, &spec, &TwoPartition::from_second_part(2, &[1])).unwrap();
        assert_eq!(
            rep.violations,
            vec![Violation::Pin {
                vertex: 0,
                required: Part::Two,
                actual: Part::One
            }]
        );
    }

    #[test]
    fn kind_mismatch_is_an_error() {
        let g = Graph::from_edges(2, [(0, 1)]).unwrap();
        let p = TwoPartition::from_second_part(2, &[1]);
        assert!(check_partition(&g, &SpecKind::StrongB.into(), &p).is_err());
        let d = Digraph::from_arcs(2, [(0, 1)]).unwrap();
        assert!(check_partition(&d, &SpecKind::Und(1, 1).into(), &p).is_err());
    }

    #[test]
    fn euler_needs_balance_and_connectivity() {
        // two disjoint 2-cycles: balanced, but the crossing digraph is disconnected
        let d = Digraph::from_arcs(4, [(0, 1), (1, 0), (2, 3), (3, 2)]).unwrap();
        assert!(!valid(&d, SpecKind::EulerBSemi1, &[1, 3]));
        assert!(valid(&d, SpecKind::CycleFactorB, &[1, 3]));
        let c4 = Digraph::from_arcs(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert!(valid(&c4, SpecKind::EulerBSemi1, &[1, 3]));
    }

    #[test]
    fn totaldom_needs_both_sides() {
        let k3 = Digraph::from_arcs(3, [(0, 1), (1, 0), (0, 2), (2, 0), (1, 2), (2, 1)]).unwrap();
        // lone vertex in part two has no inside out-neighbour
        assert!(!valid(&k3, SpecKind::TotalDom, &[2]));
        let k4 = Digraph::from_arcs(
            4,
            (0..4).flat_map(|u| (0..4).filter(move |&v| v != u).map(move |v| (u, v))),
        )
        .unwrap();
        assert!(valid(&k4, SpecKind::TotalDom, &[2, 3]));
    }
}
