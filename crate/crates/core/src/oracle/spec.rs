use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{InstanceRef, Part, Vertex};

/// The constraint family a 2-partition is tested against.
///
/// Degree kinds carry `(k1, k2)`: the demand on vertices of part one and
/// part two respectively. Every demand counts distinct neighbours in the
/// crossing subgraph `B(V1, V2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SpecKind {
    /// Undirected: `v ∈ Vi` has at least `ki` neighbours across.
    Und(usize, usize),
    /// `v ∈ Vi` has at least `ki` out-neighbours across.
    OutOut(usize, usize),
    /// `V1` vertices need `k1` out-neighbours in `V2`, `V2` vertices need
    /// `k2` in-neighbours in `V1`.
    OutIn(usize, usize),
    /// `V1` vertices need `k1` out-neighbours in `V2`, `V2` vertices need
    /// `k2` neighbours (either direction) in `V1`.
    OutTotal(usize, usize),
    /// `B_D(V1, V2)` is strong.
    StrongB,
    /// `B_D(V1, V2)` is eulerian with minimum semi-degree at least one.
    EulerBSemi1,
    /// `B_D(V1, V2)` has a cycle factor.
    CycleFactorB,
    /// Every vertex has an out-neighbour in its own part and one across.
    TotalDom,
}

impl SpecKind {
    pub fn for_graphs(&self) -> bool {
        matches!(self, SpecKind::Und(..))
    }

    /// The `(k1, k2)` pair of a degree kind.
    pub fn demands(&self) -> Option<(usize, usize)> {
        match *self {
            SpecKind::Und(a, b) | SpecKind::OutOut(a, b) | SpecKind::OutIn(a, b) | SpecKind::OutTotal(a, b) => {
                Some((a, b))
            }
            _ => None,
        }
    }
}

impl fmt::Display for SpecKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpecKind::Und(a, b) => write!(f, "und {a} {b}"),
            SpecKind::OutOut(a, b) => write!(f, "out-out {a} {b}"),
            SpecKind::OutIn(a, b) => write!(f, "out-in {a} {b}"),
            SpecKind::OutTotal(a, b) => write!(f, "out-total {a} {b}"),
            SpecKind::StrongB => write!(f, "strong-b"),
            SpecKind::EulerBSemi1 => write!(f, "euler-b-semi1"),
            SpecKind::CycleFactorB => write!(f, "cyclefactor-b"),
            SpecKind::TotalDom => write!(f, "totaldom"),
        }
    }
}

impl FromStr for SpecKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let words: Vec<&str> = s.split_whitespace().collect();
        let bad = || Error::parse(1, format!("unrecognised spec `{s}`"));
        let pair = |rest: &[&str]| -> Result<(usize, usize)> {
            match rest {
                [a, b] => Ok((a.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?)),
                _ => Err(bad()),
            }
        };
        let (head, rest) = words.split_first().ok_or_else(bad)?;
        let kind = match (head.to_ascii_lowercase().as_str(), rest.len()) {
            ("und", _) => pair(rest).map(|(a, b)| SpecKind::Und(a, b))?,
            ("out-out", _) => pair(rest).map(|(a, b)| SpecKind::OutOut(a, b))?,
            ("out-in", _) => pair(rest).map(|(a, b)| SpecKind::OutIn(a, b))?,
            ("out-total", _) => pair(rest).map(|(a, b)| SpecKind::OutTotal(a, b))?,
            ("strong-b", 0) => SpecKind::StrongB,
            ("euler-b-semi1", 0) => SpecKind::EulerBSemi1,
            ("cyclefactor-b", 0) => SpecKind::CycleFactorB,
            ("totaldom", 0) => SpecKind::TotalDom,
            _ => return Err(bad()),
        };
        Ok(kind)
    }
}

/// A constraint kind plus optional fixed colours for some vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionSpec {
    pub kind: SpecKind,
    pub pins: BTreeMap<Vertex, Part>,
}

impl PartitionSpec {
    pub fn new(kind: SpecKind) -> Self {
        PartitionSpec {
            kind,
            pins: BTreeMap::new(),
        }
    }

    pub fn pin(mut self, v: Vertex, part: Part) -> Self {
        self.pins.insert(v, part);
        self
    }

    /// Rejects graph kinds on digraphs (and vice versa) and pins that name
    /// missing vertices.
    pub fn validate_for(&self, instance: InstanceRef<'_>) -> Result<()> {
        let graph_instance = matches!(instance, InstanceRef::Graph(_));
        if self.kind.for_graphs() != graph_instance {
            return Err(Error::Incompatible {
                spec: self.kind.to_string(),
                instance: instance.kind_name(),
            });
        }
        if let Some((&v, _)) = self.pins.iter().find(|(&v, _)| v >= instance.order()) {
            return Err(Error::invalid(format!("pin on missing vertex {v}")));
        }
        Ok(())
    }
}

impl From<SpecKind> for PartitionSpec {
    fn from(kind: SpecKind) -> Self {
        PartitionSpec::new(kind)
    }
}

/// Whose neighbours a requirement counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Neighborhood {
    Out,
    In,
    /// In- or out-neighbours, each counted once.
    Any,
}

/// Whether counted neighbours must sit in the other part or the same part.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Relation {
    Across,
    Inside,
}

/// A per-vertex counting constraint: at least `need` neighbours of the
/// given kind in the given relative part.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Requirement {
    pub neighborhood: Neighborhood,
    pub relation: Relation,
    pub need: usize,
}

impl Requirement {
    const fn new(neighborhood: Neighborhood, relation: Relation, need: usize) -> Self {
        Requirement {
            neighborhood,
            relation,
            need,
        }
    }

    /// Part a counted neighbour must be in, given the vertex's own part.
    pub fn target(&self, own: Part) -> Part {
        match self.relation {
            Relation::Across => own.other(),
            Relation::Inside => own,
        }
    }
}

/// The local counting constraints every vertex of `part` must satisfy on an
/// instance of order `n`. Global conditions (strongness, balance, cycle
/// factors) are checked separately.
pub fn requirements(kind: SpecKind, part: Part, n: usize) -> Vec<Requirement> {
    use Neighborhood::*;
    use Relation::*;
    let pick = |a: usize, b: usize| if part == Part::One { a } else { b };
    let both_ways = vec![Requirement::new(Out, Across, 1), Requirement::new(In, Across, 1)];
    let reqs = match kind {
        SpecKind::Und(a, b) => vec![Requirement::new(Any, Across, pick(a, b))],
        SpecKind::OutOut(a, b) => vec![Requirement::new(Out, Across, pick(a, b))],
        SpecKind::OutIn(a, b) => match part {
            Part::One => vec![Requirement::new(Out, Across, a)],
            Part::Two => vec![Requirement::new(In, Across, b)],
        },
        SpecKind::OutTotal(a, b) => match part {
            Part::One => vec![Requirement::new(Out, Across, a)],
            Part::Two => vec![Requirement::new(Any, Across, b)],
        },
        // a lone vertex is strong on its own
        SpecKind::StrongB if n < 2 => vec![],
        SpecKind::StrongB | SpecKind::EulerBSemi1 | SpecKind::CycleFactorB => both_ways,
        SpecKind::TotalDom => vec![Requirement::new(Out, Inside, 1), Requirement::new(Out, Across, 1)],
    };
    reqs.into_iter().filter(|r| r.need > 0).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grammar_round_trips() {
        for s in [
            "und 1 2",
            "out-out 1 0",
            "out-in 2 2",
            "out-total 1 1",
            "strong-b",
            "euler-b-semi1",
            "cyclefactor-b",
            "totaldom",
        ] {
            let k: SpecKind = s.parse().unwrap();
            assert_eq!(k.to_string(), s);
        }
        assert!("out-in 1".parse::<SpecKind>().is_err());
        assert!("strong-b 1".parse::<SpecKind>().is_err());
        assert!("nope".parse::<SpecKind>().is_err());
        assert!("und a b".parse::<SpecKind>().is_err());
    }

    #[test]
    fn zero_demands_vanish() {
        assert!(requirements(SpecKind::OutOut(3, 0), Part::Two, 4).is_empty());
        assert_eq!(requirements(SpecKind::OutOut(3, 0), Part::One, 4).len(), 1);
    }
}
