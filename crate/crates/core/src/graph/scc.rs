use super::{Digraph, Vertex};

/// Strong components of a digraph together with its strong component
/// digraph (the condensation).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrongComponents {
    /// Sorted vertex sets in reverse topological order of the condensation:
    /// whenever the condensation has an arc `i -> j`, `j < i`.
    pub components: Vec<Vec<Vertex>>,
    pub component_of: Vec<usize>,
    /// Acyclic and simple, one vertex per component.
    pub condensation: Digraph,
}

impl StrongComponents {
    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    /// Components with no arc leaving them.
    pub fn terminal(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(|&c| self.condensation.out_degree(c) == 0)
    }

    /// Components with no arc entering them.
    pub fn initial(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(|&c| self.condensation.in_degree(c) == 0)
    }
}

/// Tarjan's algorithm, iterative, roots and neighbours scanned in ascending
/// id order.
pub fn strong_components(d: &Digraph) -> StrongComponents {
    const UNVISITED: usize = usize::MAX;
    let n = d.order();
    let mut index = vec![UNVISITED; n];
    let mut low = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut stack: Vec<Vertex> = Vec::new();
    let mut component_of = vec![UNVISITED; n];
    let mut components: Vec<Vec<Vertex>> = Vec::new();
    let mut counter = 0;

    // (vertex, position in its out-list)
    let mut call: Vec<(Vertex, usize)> = Vec::new();
    for root in 0..n {
        if index[root] != UNVISITED {
            continue;
        }
        call.push((root, 0));
        index[root] = counter;
        low[root] = counter;
        counter += 1;
        stack.push(root);
        on_stack[root] = true;

        while let Some(&mut (v, ref mut pos)) = call.last_mut() {
            let succ = d.out_neighbors(v);
            if *pos < succ.len() {
                let w = succ[*pos];
                *pos += 1;
                if index[w] == UNVISITED {
                    index[w] = counter;
                    low[w] = counter;
                    counter += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
                continue;
            }
            call.pop();
            if let Some(&(parent, _)) = call.last() {
                low[parent] = low[parent].min(low[v]);
            }
            if low[v] == index[v] {
                let id = components.len();
                let mut comp = Vec::new();
                loop {
                    let w = stack.pop().expect("tarjan stack");
                    on_stack[w] = false;
                    component_of[w] = id;
                    comp.push(w);
                    if w == v {
                        break;
                    }
                }
                comp.sort_unstable();
                components.push(comp);
            }
        }
    }

    let mut condensation = Digraph::new(components.len());
    for (u, v) in d.arcs() {
        let (cu, cv) = (component_of[u], component_of[v]);
        if cu != cv {
            condensation.add_arc(cu, cv).expect("component ids in range");
        }
    }
    StrongComponents {
        components,
        component_of,
        condensation,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_vertex() {
        let sc = strong_components(&Digraph::new(1));
        assert_eq!(sc.components, vec![vec![0]]);
        assert_eq!(sc.condensation.order(), 1);
        assert_eq!(sc.condensation.arc_count(), 0);
    }

    #[test]
    fn two_cycle_is_one_component() {
        let d = Digraph::from_arcs(2, [(0, 1), (1, 0)]).unwrap();
        let sc = strong_components(&d);
        assert_eq!(sc.components, vec![vec![0, 1]]);
    }

    #[test]
    fn path_condenses_to_path() {
        let d = Digraph::from_arcs(3, [(0, 1), (1, 2)]).unwrap();
        let sc = strong_components(&d);
        assert_eq!(sc.len(), 3);
        assert_eq!(sc.condensation.arc_count(), 2);
        // sinks come first
        assert_eq!(sc.components[0], vec![2]);
        for (i, j) in sc.condensation.arcs() {
            assert!(j < i);
        }
    }

    #[test]
    fn parallel_component_arcs_collapse() {
        // {0,1} strong, both vertices point into {2,3}
        let d = Digraph::from_arcs(4, [(0, 1), (1, 0), (0, 2), (1, 3), (2, 3), (3, 2)]).unwrap();
        let sc = strong_components(&d);
        assert_eq!(sc.len(), 2);
        assert_eq!(sc.condensation.arc_count(), 1);
        assert_eq!(sc.terminal().count(), 1);
        assert_eq!(sc.initial().count(), 1);
    }
}
