use super::{literal_name, Gadget, GraphBuilder};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::oracle::CnfFormula;

/// Adds one copy of the variable gadget without the `x ~x` edge and returns
/// `(x, ~x)`. Vertex order: `v, z, x, ~x`, then `X1, X2, X3, X4` with sizes
/// `k1-1, k2-1, k2-1, k1-1`.
fn x_prime(b: &mut GraphBuilder, tag: &str, k1: usize, k2: usize) -> (Vertex, Vertex) {
    let v = b.vertex(format!("{tag}.v"));
    let z = b.vertex(format!("{tag}.z"));
    let x = b.vertex(format!("{tag}.x"));
    let xb = b.vertex(format!("{tag}.~x"));
    let x1 = b.vertices(k1 - 1, |i| format!("{tag}.X1[{i}]"));
    let x2 = b.vertices(k2 - 1, |i| format!("{tag}.X2[{i}]"));
    let x3 = b.vertices(k2 - 1, |i| format!("{tag}.X3[{i}]"));
    let x4 = b.vertices(k1 - 1, |i| format!("{tag}.X4[{i}]"));
    b.all_edges(&[v], &x1);
    b.all_edges(&x1, &x2);
    b.all_edges(&x2, &[x, xb]);
    b.all_edges(&[x, xb], &x4);
    b.all_edges(&x4, &x3);
    b.all_edges(&x3, &[z]);
    b.edge(v, z);
    (x, xb)
}

/// Graph with a `(k1, k2)` partition exactly when `f` has a
/// not-all-equal assignment.
///
/// Variables come first, one gadget each (labels `Xi.v`, `Xi.x`, `Xi.~x`,
/// ...), with `Xi.x` also labelled by its literal `xi`. Each clause `j` then
/// gets a copy `Yj` of the gadget minus the `x ~x` edge, whose `x` and `~x`
/// are joined to the vertices of the clause's literals.
pub fn und_nae_instance(f: &CnfFormula, k1: usize, k2: usize) -> Result<Gadget<Graph>> {
    if k1 < 2 || k1 > k2 {
        return Err(Error::invalid(format!("need 2 <= k1 <= k2, got k1 = {k1}, k2 = {k2}")));
    }
    let mut b = GraphBuilder::new();
    let mut lit = Vec::with_capacity(f.num_vars());
    for i in 0..f.num_vars() {
        let (x, xb) = x_prime(&mut b, &format!("X{}", i + 1), k1, k2);
        b.edge(x, xb);
        b.labels.push(literal_name(i, false), x);
        b.labels.push(literal_name(i, true), xb);
        lit.push((x, xb));
    }
    for (j, clause) in f.clauses().iter().enumerate() {
        let (x, xb) = x_prime(&mut b, &format!("Y{}", j + 1), k1, k2);
        for l in clause {
            let u = if l.negated { lit[l.var].1 } else { lit[l.var].0 };
            b.edge(u, x);
            b.edge(u, xb);
        }
    }
    Ok(b.finish())
}

/// Graph with a `(1, k)` partition exactly when `f` is satisfiable; its
/// minimum degree is `k - 1`.
///
/// Per variable, in order: `a1, a2, x, ~x, y1, y2, b1, b2`, with all edges
/// `A-X`, `X-Y`, `Y-B`. Per clause: a triangle `y, y', y''` and edges from
/// `y` to the clause's literal vertices. For `k >= 4`, `k - 3` cliques of
/// order `k` follow, each with its first vertex joined to a new vertex that
/// is adjacent to every vertex of the `k = 3` graph.
pub fn und_1k_instance(f: &CnfFormula, k: usize) -> Result<Gadget<Graph>> {
    if k < 3 {
        return Err(Error::invalid(format!("need k >= 3, got {k}")));
    }
    let mut b = GraphBuilder::new();
    let mut lit = Vec::with_capacity(f.num_vars());
    for i in 0..f.num_vars() {
        let t = i + 1;
        let a = b.vertices(2, |s| format!("a{}_{t}", s + 1));
        let x = b.vertex(literal_name(i, false));
        let xb = b.vertex(literal_name(i, true));
        let y = b.vertices(2, |s| format!("y{}_{t}", s + 1));
        let bb = b.vertices(2, |s| format!("b{}_{t}", s + 1));
        b.all_edges(&a, &[x, xb]);
        b.all_edges(&[x, xb], &y);
        b.all_edges(&y, &bb);
        lit.push((x, xb));
    }
    for (j, clause) in f.clauses().iter().enumerate() {
        let t = j + 1;
        let y = b.vertex(format!("c{t}"));
        let y1 = b.vertex(format!("c{t}'"));
        let y2 = b.vertex(format!("c{t}''"));
        b.edge(y, y1);
        b.edge(y1, y2);
        b.edge(y2, y);
        for l in clause {
            b.edge(y, if l.negated { lit[l.var].1 } else { lit[l.var].0 });
        }
    }
    let base = b.order();
    for t in 1..=k.saturating_sub(3) {
        let clique = b.vertices(k, |s| format!("K{t}[{s}]"));
        for (i, &u) in clique.iter().enumerate() {
            for &v in &clique[i + 1..] {
                b.edge(u, v);
            }
        }
        let y = b.vertex(format!("hub{t}"));
        b.edge(clique[0], y);
        for v in 0..base {
            b.edge(y, v);
        }
    }
    Ok(b.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::Literal;

    fn unit(l: Literal) -> [Literal; 3] {
        [l, l, l]
    }

    #[test]
    fn nae_sizes() {
        let f = CnfFormula::new(1, vec![unit(Literal::pos(0))]).unwrap();
        let g = und_nae_instance(&f, 2, 2).unwrap();
        assert_eq!(g.instance.order(), 16);
        let g = und_nae_instance(&f, 2, 3).unwrap();
        assert_eq!(g.instance.order(), 2 * (4 + 2 + 4));
        assert!(und_nae_instance(&f, 3, 2).is_err());
        assert!(und_nae_instance(&f, 1, 2).is_err());
    }

    #[test]
    fn one_k_shape() {
        let empty = CnfFormula::new(1, vec![]).unwrap();
        let g = und_1k_instance(&empty, 3).unwrap().instance;
        assert_eq!((g.order(), g.edge_count()), (8, 12));
        let f = CnfFormula::new(2, vec![[Literal::pos(0), Literal::neg(1), Literal::pos(1)]]).unwrap();
        for k in 3..=5 {
            let g = und_1k_instance(&f, k).unwrap().instance;
            assert_eq!(g.min_degree(), k - 1, "k = {k}");
        }
    }
}
