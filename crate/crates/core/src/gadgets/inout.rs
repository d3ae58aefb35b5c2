use super::{literal_name, DiBuilder, Gadget};
use crate::error::{Error, Result};
use crate::graph::{strong_components, Digraph, Part, Vertex};
use crate::oracle::{exact_decide, CnfFormula, SpecKind, DEFAULT_BUDGET};

/// Acyclic digraph with an out-in `(1, 1)` partition exactly when `f` is
/// satisfiable.
///
/// Per variable, in order: `x, ~x, y, z` with arcs `y x`, `y ~x`, `x z`,
/// `~x z`. Then one vertex `cj` per clause, entered from its literals.
pub fn acyclic_inout_instance(f: &CnfFormula) -> Gadget<Digraph> {
    let mut b = DiBuilder::new();
    let mut lit = Vec::with_capacity(f.num_vars());
    for i in 0..f.num_vars() {
        let x = b.vertex(literal_name(i, false));
        let xb = b.vertex(literal_name(i, true));
        let y = b.vertex(format!("y{}", i + 1));
        let z = b.vertex(format!("z{}", i + 1));
        b.all_arcs(&[y], &[x, xb]);
        b.all_arcs(&[x, xb], &[z]);
        lit.push((x, xb));
    }
    for (j, clause) in f.clauses().iter().enumerate() {
        let c = b.vertex(format!("c{}", j + 1));
        for l in clause {
            let u = if l.negated { lit[l.var].1 } else { lit[l.var].0 };
            b.arc(u, c);
        }
    }
    b.finish()
}

fn require_mixed(f: &CnfFormula) -> Result<()> {
    let n = f.num_vars();
    if f.satisfied_by(&vec![true; n]) || f.satisfied_by(&vec![false; n]) {
        return Err(Error::invalid(
            "formula must not be satisfied by the all-true or the all-false assignment",
        ));
    }
    Ok(())
}

/// Appends the strong gadget for `f` and returns `(a, b)`.
fn add_w(b: &mut DiBuilder, f: &CnfFormula, prefix: &str) -> (Vertex, Vertex) {
    let a = b.vertex(format!("{prefix}a"));
    let bb = b.vertex(format!("{prefix}b"));
    let c = b.vertices(f.clauses().len(), |j| format!("{prefix}c{}", j + 1));
    let v = b.vertices(f.num_vars(), |i| format!("{prefix}{}", literal_name(i, false)));
    b.all_arcs(&[a], &c);
    b.all_arcs(&c, &[bb]);
    b.all_arcs(&[bb], &v);
    b.all_arcs(&v, &[a]);
    for (j, clause) in f.clauses().iter().enumerate() {
        for l in clause {
            if l.negated {
                b.arc(v[l.var], c[j]);
            } else {
                b.arc(c[j], v[l.var]);
            }
        }
    }
    (a, bb)
}

/// Strong digraph used to force colours.
///
/// Vertex order: `a, b`, clause vertices `c1..cm`, variable vertices
/// `x1..xn`. Arcs `a cj`, `cj b`, `b xi`, `xi a`, plus `cj xi` when `xi` is
/// a literal of clause `j` and `xi cj` when `~xi` is. Comes with the pins
/// `a -> 2`, `b -> 1`; under them an out-in `(1, 1)` partition exists
/// exactly when `f` is satisfiable, with `xi` in part one meaning true.
///
/// Rejects formulas satisfied by the all-true or all-false assignment.
pub fn w_instance(f: &CnfFormula) -> Result<Gadget<Digraph>> {
    require_mixed(f)?;
    let mut b = DiBuilder::new();
    let (a, bb) = add_w(&mut b, f, "");
    let mut g = b.finish();
    g.pins.insert(a, Part::Two);
    g.pins.insert(bb, Part::One);
    Ok(g)
}

/// The gadget of [`w_instance`] plus vertices `c, d` (last) and arcs
/// `b c`, `c d`, `d a`, with the single pin `c -> 2`.
pub fn w_prime_instance(f: &CnfFormula) -> Result<Gadget<Digraph>> {
    require_mixed(f)?;
    let mut b = DiBuilder::new();
    let (a, bb) = add_w(&mut b, f, "");
    let c = b.vertex("c");
    let d = b.vertex("d");
    b.arc(bb, c);
    b.arc(c, d);
    b.arc(d, a);
    let mut g = b.finish();
    g.pins.insert(c, Part::Two);
    Ok(g)
}

fn has_inout11(d: &Digraph) -> Result<bool> {
    Ok(exact_decide(d, &SpecKind::OutIn(1, 1).into(), DEFAULT_BUDGET)?.is_yes())
}

/// Digraph whose condensation is `h` and which has an out-in `(1, 1)`
/// partition exactly when `f` is satisfiable.
///
/// `h` must be connected and acyclic with no out-in `(1, 1)` partition.
/// A vertex set `H'` is grown from the sinks and their in-neighbours by
/// adding single vertices, lowest first, while `h[H']` still has a
/// partition. Let `x` be the lowest vertex outside `H'` with an
/// out-neighbour in `H'` and `y` the lowest such out-neighbour. Every other
/// vertex `u` outside `H'` is put on a private 4-cycle; `y` is replaced by
/// the gadget of [`w_instance`], with arcs into `y` entering `a` and arcs
/// out of `y` leaving `b`.
///
/// Vertex order: the vertices of `h` except `y` (labels `h<v>`), the cycle
/// vertices (`u<v>.1..3`), then the gadget (labels prefixed `W.`).
pub fn pattern_instance(h: &Digraph, f: &CnfFormula) -> Result<Gadget<Digraph>> {
    require_mixed(f)?;
    if h.order() < 2 || !h.is_connected() {
        return Err(Error::invalid("pattern must be connected with at least two vertices"));
    }
    let sc = strong_components(h);
    if sc.len() != h.order() {
        return Err(Error::invalid("pattern must be acyclic"));
    }
    if has_inout11(h)? {
        return Err(Error::invalid("pattern must not have an out-in (1,1) partition"));
    }

    let mut inside = vec![false; h.order()];
    for s in h.vertices().filter(|&v| h.out_degree(v) == 0) {
        inside[s] = true;
        for &u in h.in_neighbors(s) {
            inside[u] = true;
        }
    }
    'grow: loop {
        for v in h.vertices() {
            if inside[v] {
                continue;
            }
            inside[v] = true;
            let keep: Vec<Vertex> = h.vertices().filter(|&u| inside[u]).collect();
            if has_inout11(&h.induced(&keep).0)? {
                continue 'grow;
            }
            inside[v] = false;
        }
        break;
    }
    let (x, y) = h
        .vertices()
        .filter(|&v| !inside[v])
        .find_map(|v| {
            h.out_neighbors(v)
                .iter()
                .copied()
                .filter(|&w| inside[w])
                .min()
                .map(|w| (v, w))
        })
        .ok_or_else(|| Error::invalid("no arc leaves the complement of the grown set"))?;

    let mut b = DiBuilder::new();
    let mut image = vec![usize::MAX; h.order()];
    for v in h.vertices().filter(|&v| v != y) {
        image[v] = b.vertex(format!("h{v}"));
    }
    for u in h.vertices().filter(|&u| !inside[u] && u != x) {
        let c = b.vertices(3, |i| format!("u{u}.{}", i + 1));
        b.arc(image[u], c[0]);
        b.arc(c[0], c[1]);
        b.arc(c[1], c[2]);
        b.arc(c[2], image[u]);
    }
    let (a, bb) = add_w(&mut b, f, "W.");
    image[y] = a;
    for (u, v) in h.arcs() {
        let from = if u == y { bb } else { image[u] };
        b.arc(from, image[v]);
    }
    let g = b.finish();
    verify_condensation(&g.instance, h, &image)?;
    Ok(g)
}

/// Checks that mapping each vertex of `h` to the component of its image is
/// an isomorphism onto the condensation of `d`.
fn verify_condensation(d: &Digraph, h: &Digraph, image: &[Vertex]) -> Result<()> {
    let sc = strong_components(d);
    let comp: Vec<usize> = image.iter().map(|&v| sc.component_of[v]).collect();
    let mut sorted = comp.clone();
    sorted.sort_unstable();
    sorted.dedup();
    let ok = sc.len() == h.order()
        && sorted.len() == h.order()
        && sc.condensation.arc_count() == h.arc_count()
        && h.arcs().all(|(u, v)| sc.condensation.has_arc(comp[u], comp[v]));
    if ok {
        Ok(())
    } else {
        Err(Error::invalid("generated digraph does not condense to the pattern"))
    }
}
