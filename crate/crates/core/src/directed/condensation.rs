use super::Nebula;
use crate::error::{Error, Result};
use crate::graph::{branching_galaxy, strong_components, Digraph, Direction, Orientation, Part, TwoPartition, Vertex};

/// Out-in `(1, 1)` partition of `d` from a spanning nebula of its
/// condensation (component ids as numbered by `strong_components`).
///
/// Each star is handled on its own cluster of components; in-stars are
/// handled on the converse with colours swapped afterwards. For an out-star
/// with root component `R`, take the lowest arc `u v` from `R` into a leaf
/// component `S1`. The cluster minus `S1 - v`, with `v`'s out-arcs ignored,
/// has a breadth-first out-branching from `u` in which `v` is a leaf next to
/// the root, so its peeling wins. The in-branching of `S1` at `v` is peeled
/// too, and the union of both galaxies colours the cluster.
pub fn condensation_extend(d: &Digraph, nebula: &Nebula) -> Result<TwoPartition> {
    let sc = strong_components(d);
    nebula.validate_spanning(&sc.condensation)?;
    let converse = d.converse();
    let mut parts = vec![Part::One; d.order()];
    for star in &nebula.stars {
        let root = &sc.components[star.center];
        let leaves: Vec<&[Vertex]> = star.leaves.iter().map(|&c| sc.components[c].as_slice()).collect();
        let (host, swap) = match star.orientation {
            Orientation::Out => (d, false),
            Orientation::In => (&converse, true),
        };
        for (v, p) in extend_out_star(host, root, &leaves)? {
            parts[v] = if swap { p.other() } else { p };
        }
    }
    Ok(TwoPartition::new(parts))
}

fn extend_out_star(d: &Digraph, root: &[Vertex], leaves: &[&[Vertex]]) -> Result<Vec<(Vertex, Part)>> {
    let mut comp = vec![usize::MAX; d.order()];
    for (i, c) in leaves.iter().enumerate() {
        for &v in c.iter() {
            comp[v] = i;
        }
    }
    let (u, v) = root
        .iter()
        .flat_map(|&u| d.out_neighbors(u).iter().map(move |&v| (u, v)))
        .filter(|&(_, v)| comp[v] != usize::MAX)
        .min()
        .ok_or_else(|| Error::invalid("star arc missing between components"))?;
    let s1 = leaves[comp[v]];

    // the cluster without S1 - v
    let mut keep: Vec<Vertex> = root.to_vec();
    keep.push(v);
    for c in leaves.iter().filter(|c| !std::ptr::eq(**c, s1)) {
        keep.extend_from_slice(c);
    }
    keep.sort_unstable();
    let (sub, map) = d.induced(&keep);
    let local = |x: Vertex| map.iter().position(|&y| y == x).expect("kept vertex");
    let (lu, lv) = (local(u), local(v));
    let trimmed = Digraph::from_arcs(sub.order(), sub.arcs().filter(|&(a, _)| a != lv))?;
    let outer = branching_galaxy(&trimmed, lu, Direction::Out)?;

    let mut colors = Vec::new();
    for s in &outer.galaxy {
        colors.push((map[s.center], Part::One));
        colors.extend(s.leaves.iter().map(|&l| (map[l], Part::Two)));
    }
    let (inner_d, inner_map) = d.induced(s1);
    let root_inner = inner_map.iter().position(|&y| y == v).expect("v lies in S1");
    let inner = branching_galaxy(&inner_d, root_inner, Direction::In)?;
    for s in &inner.galaxy {
        let c = inner_map[s.center];
        if c != v {
            colors.push((c, Part::Two));
        }
        colors.extend(s.leaves.iter().map(|&l| (inner_map[l], Part::One)));
    }
    Ok(colors)
}
