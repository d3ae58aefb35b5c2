use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Graph, Part, Vertex};

/// Brute-force solvers refuse inputs with more variables than this.
pub const DEFAULT_BRUTE_BOUND: usize = 24;

/// A possibly negated variable, 0-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Literal {
    pub var: usize,
    pub negated: bool,
}

impl Literal {
    pub fn pos(var: usize) -> Self {
        Literal { var, negated: false }
    }

    pub fn neg(var: usize) -> Self {
        Literal { var, negated: true }
    }

    pub fn eval(&self, assignment: &[bool]) -> bool {
        assignment[self.var] != self.negated
    }

    /// DIMACS form: 1-based, negative when negated.
    pub fn to_dimacs(&self) -> i64 {
        let v = self.var as i64 + 1;
        if self.negated {
            -v
        } else {
            v
        }
    }

    pub fn from_dimacs(x: i64) -> Option<Self> {
        match x {
            0 => None,
            x if x > 0 => Some(Literal::pos(x as usize - 1)),
            x => Some(Literal::neg((-x) as usize - 1)),
        }
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negated {
            write!(f, "~x{}", self.var + 1)
        } else {
            write!(f, "x{}", self.var + 1)
        }
    }
}

pub type Clause = [Literal; 3];

/// A CNF formula with exactly three literal slots per clause.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CnfFormula {
    num_vars: usize,
    clauses: Vec<Clause>,
}

impl CnfFormula {
    pub fn new(num_vars: usize, clauses: Vec<Clause>) -> Result<Self> {
        for (j, c) in clauses.iter().enumerate() {
            if let Some(l) = c.iter().find(|l| l.var >= num_vars) {
                return Err(Error::invalid(format!(
                    "clause {j} mentions variable {} but the formula has {num_vars}",
                    l.var + 1
                )));
            }
        }
        Ok(CnfFormula { num_vars, clauses })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn clauses(&self) -> &[Clause] {
        &self.clauses
    }

    pub fn satisfied_by(&self, a: &[bool]) -> bool {
        self.clauses.iter().all(|c| c.iter().any(|l| l.eval(a)))
    }

    pub fn nae_satisfied_by(&self, a: &[bool]) -> bool {
        self.clauses
            .iter()
            .all(|c| c.iter().any(|l| l.eval(a)) && c.iter().any(|l| !l.eval(a)))
    }

    /// Adds `(x ∨ ¬x ∨ ¬x)` for every variable missing one polarity, so
    /// that every variable occurs both ways. The added clauses are always
    /// true.
    pub fn padded_both_polarities(&self) -> CnfFormula {
        let mut clauses = self.clauses.clone();
        for v in 0..self.num_vars {
            let pos = self.clauses.iter().flatten().any(|l| *l == Literal::pos(v));
            let neg = self.clauses.iter().flatten().any(|l| *l == Literal::neg(v));
            if !(pos && neg) {
                clauses.push([Literal::pos(v), Literal::neg(v), Literal::neg(v)]);
            }
        }
        CnfFormula {
            num_vars: self.num_vars,
            clauses,
        }
    }
}

impl fmt::Display for CnfFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .clauses
            .iter()
            .map(|c| format!("({} | {} | {})", c[0], c[1], c[2]))
            .collect();
        f.write_str(&parts.join(" & "))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SatMode {
    /// Some literal of every clause is true.
    Sat,
    /// Every clause has a true and a false literal.
    Nae,
}

/// Exhaustive search over all assignments, in binary counting order with
/// variable 0 as the lowest bit.
pub fn sat_brute(f: &CnfFormula, mode: SatMode, bound: usize) -> Result<Option<Vec<bool>>> {
    let n = f.num_vars();
    if n > bound {
        return Err(Error::ResourceExceeded(format!(
            "{n} variables exceed the brute-force bound {bound}"
        )));
    }
    for mask in 0u64..(1u64 << n) {
        let a: Vec<bool> = (0..n).map(|i| mask >> i & 1 == 1).collect();
        let ok = match mode {
            SatMode::Sat => f.satisfied_by(&a),
            SatMode::Nae => f.nae_satisfied_by(&a),
        };
        if ok {
            return Ok(Some(a));
        }
    }
    Ok(None)
}

/// An r-uniform hypergraph over ground set `0..ground`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    ground: usize,
    rank: usize,
    edges: Vec<Vec<Vertex>>,
}

impl Hypergraph {
    pub fn new(ground: usize, rank: usize, edges: Vec<Vec<Vertex>>) -> Result<Self> {
        if rank < 2 {
            return Err(Error::invalid(format!(
                "hyperedges need at least 2 vertices, got rank {rank}"
            )));
        }
        for (i, e) in edges.iter().enumerate() {
            if e.len() != rank {
                return Err(Error::invalid(format!(
                    "hyperedge {i} has {} vertices, expected {rank}",
                    e.len()
                )));
            }
            if let Some(&v) = e.iter().find(|&&v| v >= ground) {
                return Err(Error::invalid(format!(
                    "hyperedge {i} mentions vertex {v} outside the ground set"
                )));
            }
            let mut s = e.clone();
            s.sort_unstable();
            s.dedup();
            if s.len() != rank {
                return Err(Error::invalid(format!("hyperedge {i} repeats a vertex")));
            }
        }
        Ok(Hypergraph { ground, rank, edges })
    }

    pub fn ground(&self) -> usize {
        self.ground
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn edges(&self) -> &[Vec<Vertex>] {
        &self.edges
    }

    /// Connected as a hypergraph: every pair of ground vertices is linked
    /// through a chain of hyperedges.
    pub fn is_connected(&self) -> bool {
        let mut g = Graph::new(self.ground);
        for e in &self.edges {
            for w in e.windows(2) {
                g.add_edge(w[0], w[1]).expect("validated members");
            }
        }
        g.is_connected()
    }

    pub fn is_proper_coloring(&self, colors: &[Part]) -> bool {
        self.edges.iter().all(|e| e.iter().any(|&v| colors[v] != colors[e[0]]))
    }
}

/// Exhaustive 2-colouring search; vertex 0 is coloured `Part::One` first.
pub fn hyper2color_brute(h: &Hypergraph, bound: usize) -> Result<Option<Vec<Part>>> {
    let n = h.ground();
    if n > bound {
        return Err(Error::ResourceExceeded(format!(
            "{n} ground vertices exceed the brute-force bound {bound}"
        )));
    }
    for mask in 0u64..(1u64 << n) {
        let colors: Vec<Part> = (0..n)
            .map(|i| if mask >> i & 1 == 1 { Part::Two } else { Part::One })
            .collect();
        if h.is_proper_coloring(&colors) {
            return Ok(Some(colors));
        }
    }
    Ok(None)
}
