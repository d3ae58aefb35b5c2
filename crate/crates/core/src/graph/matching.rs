use super::{Digraph, Vertex};

/// Whether the vertices can be covered by vertex-disjoint directed cycles.
///
/// Equivalent to a perfect matching between out-copies and in-copies of the
/// vertices, where `u_out` may match `v_in` whenever `u -> v` is an arc.
/// Found with augmenting paths (Kuhn's algorithm).
pub fn has_cycle_factor(d: &Digraph) -> bool {
    let n = d.order();
    let mut matched_in: Vec<Option<Vertex>> = vec![None; n];
    let mut visited = vec![false; n];
    for u in 0..n {
        visited.iter_mut().for_each(|x| *x = false);
        if !augment(d, u, &mut matched_in, &mut visited) {
            return false;
        }
    }
    true
}

fn augment(d: &Digraph, u: Vertex, matched_in: &mut [Option<Vertex>], visited: &mut [bool]) -> bool {
    for &v in d.out_neighbors(u) {
        if visited[v] {
            continue;
        }
        visited[v] = true;
        match matched_in[v] {
            None => {
                matched_in[v] = Some(u);
                return true;
            }
            Some(w) => {
                if augment(d, w, matched_in, visited) {
                    matched_in[v] = Some(u);
                    return true;
                }
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        assert!(has_cycle_factor(&Digraph::from_arcs(2, [(0, 1), (1, 0)]).unwrap()));
        assert!(!has_cycle_factor(&Digraph::from_arcs(2, [(0, 1)]).unwrap()));
        let c4_plus_2 = Digraph::from_arcs(6, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 4)]).unwrap();
        assert!(has_cycle_factor(&c4_plus_2));
        // two 2-cycles sharing vertex 1 cannot both be used
        assert!(!has_cycle_factor(
            &Digraph::from_arcs(3, [(0, 1), (1, 0), (1, 2), (2, 1)]).unwrap()
        ));
    }

    #[test]
    fn agrees_with_permutation_search_up_to_five_vertices() {
        fn brute(d: &Digraph) -> bool {
            // search for a successor permutation using only arcs
            fn go(d: &Digraph, u: usize, used: &mut Vec<bool>) -> bool {
                if u == d.order() {
                    return true;
                }
                for &v in d.out_neighbors(u) {
                    if !used[v] {
                        used[v] = true;
                        if go(d, u + 1, used) {
                            return true;
                        }
                        used[v] = false;
                    }
                }
                false
            }
            go(d, 0, &mut vec![false; d.order()])
        }
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..3000 {
            let n = rng.gen_range(1..=5);
            let mut d = Digraph::new(n);
            for u in 0..n {
                for v in 0..n {
                    if u != v && rng.gen_bool(0.35) {
                        d.add_arc(u, v).unwrap();
                    }
                }
            }
            assert_eq!(has_cycle_factor(&d), brute(&d), "{d:?}");
        }
    }
}
