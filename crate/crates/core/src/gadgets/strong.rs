use super::{literal_name, DiBuilder, Gadget};
use crate::error::{Error, Result};
use crate::graph::{Digraph, Vertex};
use crate::oracle::CnfFormula;

fn close_cycle(b: &mut DiBuilder, cycle: &[Vertex]) {
    if cycle.len() >= 2 {
        for (i, &u) in cycle.iter().enumerate() {
            b.arc(u, cycle[(i + 1) % cycle.len()]);
        }
    }
}

fn add_clauses(b: &mut DiBuilder, f: &CnfFormula, lit: &[(Vertex, Vertex)], hub: Vertex) -> Vec<Vertex> {
    let mut out = Vec::with_capacity(f.clauses().len());
    for (j, clause) in f.clauses().iter().enumerate() {
        let c = b.vertex(format!("c{}", j + 1));
        b.arc(c, hub);
        for l in clause {
            b.arc(if l.negated { lit[l.var].1 } else { lit[l.var].0 }, c);
        }
        out.push(c);
    }
    out
}

/// Strong digraph with an out-in `(k1, 1)` partition exactly when `f` is
/// satisfiable, for `k1 >= 2`.
///
/// `f` is first padded so that every variable occurs in both polarities.
/// Per variable, in order: `y, x, ~x`, then `k1 - 1` vertices `W` and
/// `k1 - 1` vertices `Z`; arcs `y x`, `y ~x`, `y w`, `w y`, `x z`, `~x z`,
/// `z y`. A directed cycle runs through all `Z` vertices in order when
/// there are at least two. Clause vertices come last, each entered from its
/// literals and with an arc to the first `y`.
pub fn strong_outin_k1_instance(f: &CnfFormula, k1: usize) -> Result<Gadget<Digraph>> {
    if k1 < 2 {
        return Err(Error::invalid(format!("need k1 >= 2, got {k1}")));
    }
    if f.num_vars() == 0 {
        return Err(Error::invalid("formula has no variables"));
    }
    let f = f.padded_both_polarities();
    let mut b = DiBuilder::new();
    let mut lit = Vec::new();
    let mut ys = Vec::new();
    let mut zs = Vec::new();
    for i in 0..f.num_vars() {
        let t = i + 1;
        let y = b.vertex(format!("y{t}"));
        let x = b.vertex(literal_name(i, false));
        let xb = b.vertex(literal_name(i, true));
        let w = b.vertices(k1 - 1, |s| format!("w{t}[{s}]"));
        let z = b.vertices(k1 - 1, |s| format!("z{t}[{s}]"));
        b.all_arcs(&[y], &[x, xb]);
        b.all_arcs(&[y], &w);
        b.all_arcs(&w, &[y]);
        b.all_arcs(&[x, xb], &z);
        b.all_arcs(&z, &[y]);
        lit.push((x, xb));
        ys.push(y);
        zs.extend(z);
    }
    close_cycle(&mut b, &zs);
    add_clauses(&mut b, &f, &lit, ys[0]);
    Ok(b.finish())
}

/// Strong digraph with an out-in `(2, 2)` partition exactly when `f` is
/// satisfiable.
///
/// This is [`strong_22_instance_verbatim`] plus an arc from `y1'` to every
/// clause vertex. Clause vertices always land in part two and need two
/// in-neighbours in part one; `y1'` is always in part one, so with the
/// extra arcs one true literal per clause suffices. Without them a clause
/// with a single true literal (every padding clause, for one) blocks the
/// partition.
pub fn strong_22_instance(f: &CnfFormula) -> Result<Gadget<Digraph>> {
    let (mut b, clauses) = build_22(f)?;
    let hub = b.labels.get("y1'").expect("at least one variable");
    for c in clauses {
        b.arc(hub, c);
    }
    Ok(b.finish())
}

/// The unrepaired `(2, 2)` construction.
///
/// `f` is padded as in [`strong_outin_k1_instance`]. Per variable, in
/// order: `w, y, y', x, ~x, z` with arcs `y' y`, `y w`, `y' w`, `w y'`,
/// `y x`, `y ~x`, `y' x`, `y' ~x`, `y' z`, `z y`, `x z`, `~x z`. The `z`
/// vertices form a cycle when there are at least two; clause vertices come
/// last, entered from their literals and with an arc to the first `y`.
/// Satisfiability is necessary for a partition but not sufficient; see
/// [`strong_22_instance`].
pub fn strong_22_instance_verbatim(f: &CnfFormula) -> Result<Gadget<Digraph>> {
    Ok(build_22(f)?.0.finish())
}

fn build_22(f: &CnfFormula) -> Result<(DiBuilder, Vec<Vertex>)> {
    if f.num_vars() == 0 {
        return Err(Error::invalid("formula has no variables"));
    }
    let f = f.padded_both_polarities();
    let mut b = DiBuilder::new();
    let mut lit = Vec::new();
    let mut ys = Vec::new();
    let mut zs = Vec::new();
    for i in 0..f.num_vars() {
        let t = i + 1;
        let w = b.vertex(format!("w{t}"));
        let y = b.vertex(format!("y{t}"));
        let y2 = b.vertex(format!("y{t}'"));
        let x = b.vertex(literal_name(i, false));
        let xb = b.vertex(literal_name(i, true));
        let z = b.vertex(format!("z{t}"));
        for (u, v) in [
            (y2, y),
            (y, w),
            (y2, w),
            (w, y2),
            (y, x),
            (y, xb),
            (y2, x),
            (y2, xb),
            (y2, z),
            (z, y),
            (x, z),
            (xb, z),
        ] {
            b.arc(u, v);
        }
        lit.push((x, xb));
        ys.push(y);
        zs.push(z);
    }
    close_cycle(&mut b, &zs);
    let clauses = add_clauses(&mut b, &f, &lit, ys[0]);
    Ok((b, clauses))
}

/// Adds `x1 = n` and `x2 = n + 1` with arcs `v x2` and `x1 v` for every
/// original vertex `v`, plus `x1 x2` and `x2 x1`.
///
/// `d` has an out-in `(k1, k2)` partition exactly when the result has a
/// `(k1 + 1, k2 + 1)` one, and strong connectivity is preserved.
pub fn lift_k1k2(d: &Digraph) -> Gadget<Digraph> {
    let mut b = DiBuilder::from_host(d, |v| format!("v{v}"));
    let n = d.order();
    let x1 = b.vertex("x1");
    let x2 = b.vertex("x2");
    for v in 0..n {
        b.arc(v, x2);
        b.arc(x1, v);
    }
    b.arc(x1, x2);
    b.arc(x2, x1);
    b.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::is_strong;
    use crate::oracle::Literal;

    fn sample() -> CnfFormula {
        CnfFormula::new(2, vec![[Literal::pos(0), Literal::neg(1), Literal::pos(1)]]).unwrap()
    }

    #[test]
    fn q_is_strong_with_expected_size() {
        for k1 in 2..=4 {
            let g = strong_outin_k1_instance(&sample(), k1).unwrap();
            assert!(is_strong(&g.instance), "k1 = {k1}");
            // x1 gets a padding clause
            assert_eq!(g.instance.order(), 2 * (2 * (k1 - 1) + 3) + 2);
        }
        assert!(strong_outin_k1_instance(&sample(), 1).is_err());
    }

    #[test]
    fn q_prime_is_strong() {
        let g = strong_22_instance(&sample()).unwrap();
        assert!(is_strong(&g.instance));
        assert_eq!(g.instance.order(), 6 * 2 + 2);
        // y1' reaches w1, y1, x1, ~x1, z1 and the two clause vertices
        assert_eq!(g.instance.out_degree(g.vertex("y1'")), 7);
        let plain = strong_22_instance_verbatim(&sample()).unwrap().instance;
        assert_eq!(plain.arc_count() + 2, g.instance.arc_count());
    }

    #[test]
    fn lift_single_vertex() {
        let g = lift_k1k2(&Digraph::new(1)).instance;
        assert_eq!((g.order(), g.arc_count()), (3, 4));
        assert_eq!((g.out_degree(2), g.in_degree(1)), (1, 1));
    }
}
