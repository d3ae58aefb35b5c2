use crate::error::Result;
use crate::graph::{find_even_cycle, strong_components, Digraph, Part, TwoPartition, DEFAULT_CYCLE_BUDGET};
use crate::oracle::{Certificate, NoReason};

/// Out-out `(1, 1)`: every vertex needs an out-neighbour across.
///
/// A sink makes this impossible. Otherwise the answer is yes exactly when
/// every terminal strong component holds an even cycle. The witness colours
/// one even cycle per terminal component alternately, then repeatedly gives
/// the lowest uncoloured vertex with a coloured out-neighbour the opposite
/// colour of its lowest such out-neighbour.
pub fn outdeg11_decide(d: &Digraph) -> Result<Certificate> {
    if let Some(v) = d.vertices().find(|&v| d.out_degree(v) == 0) {
        return Ok(Certificate::no(NoReason::SinkExists(v)));
    }
    let sc = strong_components(d);
    let mut colors: Vec<Option<Part>> = vec![None; d.order()];
    let mut trace = Vec::new();
    let mut terminal: Vec<usize> = sc.terminal().collect();
    terminal.sort_by_key(|&c| sc.components[c][0]);
    for c in terminal {
        let comp = &sc.components[c];
        let (sub, map) = d.induced(comp);
        let Some(cycle) = find_even_cycle(&sub, DEFAULT_CYCLE_BUDGET)? else {
            return Ok(Certificate::no(NoReason::NoEvenCycle {
                component: comp.clone(),
            }));
        };
        let cycle: Vec<usize> = cycle.into_iter().map(|v| map[v]).collect();
        for (i, &v) in cycle.iter().enumerate() {
            colors[v] = Some(if i % 2 == 0 { Part::One } else { Part::Two });
        }
        trace.push(format!("even cycle {cycle:?}"));
    }
    while let Some((v, c)) = d.vertices().filter(|&v| colors[v].is_none()).find_map(|v| {
        d.out_neighbors(v)
            .iter()
            .find_map(|&u| colors[u])
            .map(|c| (v, c.other()))
    }) {
        colors[v] = Some(c);
    }
    let parts = colors
        .into_iter()
        .map(|c| c.expect("every vertex reaches a terminal component"))
        .collect();
    Ok(Certificate::yes(TwoPartition::new(parts)).with_trace(trace))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{check_partition, SpecKind};

    #[test]
    fn examples() {
        let two = Digraph::from_arcs(2, [(0, 1), (1, 0)]).unwrap();
        assert_eq!(
            outdeg11_decide(&two).unwrap().witness,
            Some(TwoPartition::from_second_part(2, &[1]))
        );
        let c3 = Digraph::from_arcs(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(matches!(
            outdeg11_decide(&c3).unwrap().reason,
            Some(NoReason::NoEvenCycle { .. })
        ));
        let arc = Digraph::from_arcs(2, [(0, 1)]).unwrap();
        assert_eq!(outdeg11_decide(&arc).unwrap().reason, Some(NoReason::SinkExists(1)));
    }

    #[test]
    fn tail_into_even_cycle() {
        let d = Digraph::from_arcs(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 3), (0, 2)]).unwrap();
        let cert = outdeg11_decide(&d).unwrap();
        let spec = SpecKind::OutOut(1, 1).into();
        assert!(check_partition(&d, &spec, cert.witness.as_ref().unwrap())
            .unwrap()
            .is_valid());
    }
}
