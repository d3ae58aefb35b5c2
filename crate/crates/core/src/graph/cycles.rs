use super::{strong_components, Digraph, Vertex};
use crate::error::{Error, Result};

/// Default number of search steps allowed to [`find_even_cycle`].
pub const DEFAULT_CYCLE_BUDGET: u64 = 10_000_000;

/// Returns a simple directed cycle of even length, if one exists.
///
/// Enumerates elementary circuits with Johnson's algorithm (start vertices
/// ascending, neighbours ascending) and stops at the first even one. Each
/// recursive step costs one unit of `budget`; running out is reported as
/// [`Error::ResourceExceeded`] rather than as "no cycle".
pub fn find_even_cycle(d: &Digraph, budget: u64) -> Result<Option<Vec<Vertex>>> {
    let n = d.order();
    let mut search = Johnson {
        blocked: vec![false; n],
        blocked_by: vec![Vec::new(); n],
        path: Vec::new(),
        steps: 0,
        budget,
    };
    for start in 0..n {
        // strong component of `start` inside D[start..n]
        let keep: Vec<Vertex> = (start..n).collect();
        let (sub, _) = d.induced(&keep);
        let sc = strong_components(&sub);
        let comp = sc.component_of[0];
        if sc.components[comp].len() < 2 {
            continue;
        }
        let mut allowed = vec![false; n];
        for &v in &sc.components[comp] {
            allowed[v + start] = true;
        }
        for &v in &sc.components[comp] {
            let v = v + start;
            search.blocked[v] = false;
            search.blocked_by[v].clear();
        }
        if let Some(cycle) = search.circuit(d, start, start, &allowed)?.found {
            return Ok(Some(cycle));
        }
    }
    Ok(None)
}

struct Johnson {
    blocked: Vec<bool>,
    blocked_by: Vec<Vec<Vertex>>,
    path: Vec<Vertex>,
    steps: u64,
    budget: u64,
}

struct Step {
    closed: bool,
    found: Option<Vec<Vertex>>,
}

impl Johnson {
    fn unblock(&mut self, u: Vertex) {
        let mut stack = vec![u];
        while let Some(w) = stack.pop() {
            if !self.blocked[w] {
                continue;
            }
            self.blocked[w] = false;
            stack.append(&mut self.blocked_by[w]);
        }
    }

    fn circuit(&mut self, d: &Digraph, v: Vertex, start: Vertex, allowed: &[bool]) -> Result<Step> {
        self.steps += 1;
        if self.steps > self.budget {
            return Err(Error::ResourceExceeded(format!(
                "even-cycle search exceeded {} steps",
                self.budget
            )));
        }
        let mut closed = false;
        self.path.push(v);
        self.blocked[v] = true;
        for &w in d.out_neighbors(v) {
            if !allowed[w] {
                continue;
            }
            if w == start {
                if self.path.len().is_multiple_of(2) {
                    return Ok(Step {
                        closed: true,
                        found: Some(self.path.clone()),
                    });
                }
                closed = true;
            } else if !self.blocked[w] {
                let step = self.circuit(d, w, start, allowed)?;
                if step.found.is_some() {
                    return Ok(step);
                }
                closed |= step.closed;
            }
        }
        if closed {
            self.unblock(v);
        } else {
            for &w in d.out_neighbors(v) {
                if allowed[w] && !self.blocked_by[w].contains(&v) {
                    self.blocked_by[w].push(v);
                }
            }
        }
        self.path.pop();
        Ok(Step { closed, found: None })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_simple_cycles(d: &Digraph) -> Vec<Vec<Vertex>> {
        // brute force: every cycle rooted at its minimum vertex
        fn extend(d: &Digraph, path: &mut Vec<Vertex>, out: &mut Vec<Vec<Vertex>>) {
            let (start, last) = (path[0], *path.last().unwrap());
            for &w in d.out_neighbors(last) {
                if w == start {
                    out.push(path.clone());
                } else if w > start && !path.contains(&w) {
                    path.push(w);
                    extend(d, path, out);
                    path.pop();
                }
            }
        }
        let mut out = Vec::new();
        for s in d.vertices() {
            extend(d, &mut vec![s], &mut out);
        }
        out
    }

    #[test]
    fn two_cycle_is_even() {
        let d = Digraph::from_arcs(2, [(0, 1), (1, 0)]).unwrap();
        assert_eq!(find_even_cycle(&d, 100).unwrap(), Some(vec![0, 1]));
    }

    #[test]
    fn triangle_has_no_even_cycle() {
        let d = Digraph::from_arcs(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(find_even_cycle(&d, 100).unwrap(), None);
    }

    #[test]
    fn triangle_with_back_chord_yields_the_two_cycle() {
        let d = Digraph::from_arcs(3, [(0, 1), (1, 2), (2, 0), (1, 0)]).unwrap();
        assert_eq!(find_even_cycle(&d, 100).unwrap(), Some(vec![0, 1]));
    }

    #[test]
    fn budget_exhaustion_is_an_error() {
        let d = Digraph::from_arcs(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(matches!(find_even_cycle(&d, 1), Err(Error::ResourceExceeded(_))));
    }

    #[test]
    fn agrees_with_brute_force_on_small_digraphs() {
        // every digraph on 4 vertices
        let pairs: Vec<(usize, usize)> = (0..4)
            .flat_map(|u| (0..4).filter(move |&v| v != u).map(move |v| (u, v)))
            .collect();
        for mask in 0u32..(1 << pairs.len()) {
            let d = Digraph::from_arcs(
                4,
                pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &a)| a),
            )
            .unwrap();
            let expected = all_simple_cycles(&d).iter().any(|c| c.len() % 2 == 0);
            let got = find_even_cycle(&d, DEFAULT_CYCLE_BUDGET).unwrap();
            assert_eq!(got.is_some(), expected, "{d:?}");
            if let Some(c) = got {
                assert_eq!(c.len() % 2, 0);
                for i in 0..c.len() {
                    assert!(d.has_arc(c[i], c[(i + 1) % c.len()]));
                }
            }
        }
    }
}
