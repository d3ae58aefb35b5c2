use super::{combinations, DiBuilder, Gadget};
use crate::error::{Error, Result};
use crate::graph::{Digraph, Part, TwoPartition, Vertex};
use crate::oracle::Hypergraph;

fn add_gr(b: &mut DiBuilder, x: &[Vertex], tag: &str) {
    let r = x.len();
    let y = b.vertices(r, |i| format!("{tag}Y[{i}]"));
    let z = b.vertices(r, |i| format!("{tag}Z[{i}]"));
    b.all_arcs(x, &y);
    b.all_arcs(&y, &z);
    b.all_arcs(&z, x);
}

/// Attaches to `host` new vertices `Y` then `Z`, `|Y| = |Z| = |x|`, with
/// every arc from `x` to `Y`, from `Y` to `Z` and from `Z` to `x`.
pub fn gadget_gr(host: &Digraph, x: &[Vertex]) -> Result<Gadget<Digraph>> {
    if x.is_empty() {
        return Err(Error::invalid("attachment set is empty"));
    }
    let mut seen = vec![false; host.order()];
    for &v in x {
        if v >= host.order() || std::mem::replace(&mut seen[v], true) {
            return Err(Error::invalid(format!(
                "attachment vertex {v} is out of range or repeated"
            )));
        }
    }
    let mut b = DiBuilder::from_host(host, |v| format!("v{v}"));
    add_gr(&mut b, x, "");
    Ok(b.finish())
}

/// Eulerian digraph without a partition whose crossing digraph is eulerian
/// with minimum semi-degree at least one, for `r >= 2`.
///
/// Starts from `u` (default: `2r - 1` vertices and no arcs) and attaches a
/// gadget to every `r`-subset, in lexicographic order. A supplied `u` must
/// have `2r - 1` vertices and be balanced.
pub fn eulerian_counterexample(r: usize, u: Option<&Digraph>) -> Result<Gadget<Digraph>> {
    if r < 2 {
        return Err(Error::invalid(format!("need r >= 2, got {r}")));
    }
    let base = match u {
        Some(u) => {
            if u.order() != 2 * r - 1 {
                return Err(Error::invalid(format!("base digraph must have {} vertices", 2 * r - 1)));
            }
            if let Some(v) = u.vertices().find(|&v| u.out_degree(v) != u.in_degree(v)) {
                return Err(Error::invalid(format!("base digraph is unbalanced at {v}")));
            }
            u.clone()
        }
        None => Digraph::new(2 * r - 1),
    };
    let mut b = DiBuilder::from_host(&base, |v| format!("u{v}"));
    for (i, subset) in combinations(2 * r - 1, r).into_iter().enumerate() {
        add_gr(&mut b, &subset, &format!("G{}.", i + 1));
    }
    Ok(b.finish())
}

/// Eulerian digraph with a partition as above exactly when the connected
/// hypergraph `h` is properly 2-colourable. Ground vertices come first,
/// then one gadget per hyperedge.
pub fn hypergraph_instance(h: &Hypergraph) -> Result<Gadget<Digraph>> {
    if !h.is_connected() {
        return Err(Error::invalid("hypergraph must be connected"));
    }
    let mut b = DiBuilder::from_host(&Digraph::new(h.ground()), |v| format!("u{v}"));
    for (i, e) in h.edges().iter().enumerate() {
        add_gr(&mut b, e, &format!("E{}.", i + 1));
    }
    Ok(b.finish())
}

/// Extends a proper colouring of `h` to the vertices of
/// [`hypergraph_instance`]: in a gadget whose hyperedge has `p` vertices in
/// part one, the first `p` vertices of both `Y` and `Z` join part one.
pub fn euler_coloring(h: &Hypergraph, colors: &[Part]) -> Result<TwoPartition> {
    if colors.len() != h.ground() {
        return Err(Error::invalid("colouring length differs from the ground set"));
    }
    let mut parts = colors.to_vec();
    for e in h.edges() {
        let p = e.iter().filter(|&&v| colors[v] == Part::One).count();
        for _ in 0..2 {
            parts.extend((0..e.len()).map(|i| if i < p { Part::One } else { Part::Two }));
        }
    }
    Ok(TwoPartition::new(parts))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::is_eulerian;
    use crate::oracle::{check_partition, SpecKind};

    #[test]
    fn gr_counts() {
        let g = gadget_gr(&Digraph::new(3), &[0, 1, 2]).unwrap().instance;
        assert_eq!((g.order(), g.arc_count()), (9, 27));
        assert!(gadget_gr(&Digraph::new(2), &[0, 0]).is_err());
    }

    #[test]
    fn counterexample_orders() {
        let g = eulerian_counterexample(2, None).unwrap().instance;
        assert_eq!(g.order(), 15);
        assert!(is_eulerian(&g));
        assert_eq!(eulerian_counterexample(3, None).unwrap().instance.order(), 65);
        let unbalanced = Digraph::from_arcs(3, [(0, 1)]).unwrap();
        assert!(eulerian_counterexample(2, Some(&unbalanced)).is_err());
    }

    #[test]
    fn coloring_extends_to_eulerian_crossing() {
        let h = Hypergraph::new(3, 2, vec![vec![0, 1], vec![1, 2]]).unwrap();
        let g = hypergraph_instance(&h).unwrap();
        let p = euler_coloring(&h, &[Part::One, Part::Two, Part::One]).unwrap();
        let spec = SpecKind::EulerBSemi1.into();
        assert!(check_partition(&g.instance, &spec, &p).unwrap().is_valid());
    }
}
