//! Plain-text file formats.
//!
//! * Instances: a header `digraph N` or `graph N`, then one `u v` pair per
//!   line (0-based). Writers emit pairs in ascending order.
//! * Certificates: `answer yes|no`, then `v 1|2` lines for the witness.
//!   Reasons and notes are written as `#` comments.
//! * CNF: DIMACS. Clauses shorter than three literals are padded by
//!   repeating their last literal; longer or empty ones are rejected.
//! * Hypergraphs: `hypergraph N r`, then one hyperedge of `r` ids per line.
//! * Labels: `name id` lines.
//!
//! Every reader ignores blank lines and anything after `#`.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::gadgets::Labels;
use crate::graph::{Digraph, Graph, Instance, Part, TwoPartition, Vertex};
use crate::oracle::{Answer, Certificate, Clause, CnfFormula, Hypergraph, Literal};

/// Non-empty lines with comments stripped, numbered from 1.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let body = line.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = body.split_whitespace().collect();
        (!tokens.is_empty()).then_some((i + 1, tokens))
    })
}

fn number<T: std::str::FromStr>(line: usize, token: &str) -> Result<T> {
    token
        .parse()
        .map_err(|_| Error::parse(line, format!("expected a number, found `{token}`")))
}

pub fn write_digraph(d: &Digraph) -> String {
    let mut arcs: Vec<_> = d.arcs().collect();
    arcs.sort_unstable();
    let mut out = format!("digraph {}\n", d.order());
    for (u, v) in arcs {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn write_graph(g: &Graph) -> String {
    let mut edges: Vec<_> = g.edges().map(|(u, v)| (u.min(v), u.max(v))).collect();
    edges.sort_unstable();
    let mut out = format!("graph {}\n", g.order());
    for (u, v) in edges {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn write_instance(i: &Instance) -> String {
    match i {
        Instance::Graph(g) => write_graph(g),
        Instance::Digraph(d) => write_digraph(d),
    }
}

pub fn parse_instance(text: &str) -> Result<Instance> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or_else(|| Error::parse(1, "empty instance file"))?;
    if header.len() != 2 {
        return Err(Error::parse(hl, "header must be `digraph N` or `graph N`"));
    }
    let n: usize = number(hl, header[1])?;
    let directed = match header[0] {
        "digraph" => true,
        "graph" => false,
        other => return Err(Error::parse(hl, format!("unknown instance kind `{other}`"))),
    };
    let mut d = Digraph::new(if directed { n } else { 0 });
    let mut g = Graph::new(if directed { 0 } else { n });
    for (ln, tokens) in lines {
        if tokens.len() != 2 {
            return Err(Error::parse(ln, "expected a pair `u v`"));
        }
        let (u, v): (Vertex, Vertex) = (number(ln, tokens[0])?, number(ln, tokens[1])?);
        if u >= n || v >= n {
            return Err(Error::parse(ln, format!("vertex out of range 0..{n}")));
        }
        let added = if directed { d.add_arc(u, v) } else { g.add_edge(u, v) };
        added.map_err(|e| Error::parse(ln, e.to_string()))?;
    }
    Ok(if directed {
        Instance::Digraph(d)
    } else {
        Instance::Graph(g)
    })
}

pub fn write_partition(answer: Answer, p: Option<&TwoPartition>) -> String {
    let mut out = format!("answer {answer}\n");
    if let Some(p) = p {
        for (v, part) in p.parts().iter().enumerate() {
            let _ = writeln!(out, "{v} {}", part.index());
        }
    }
    out
}

pub fn write_certificate(c: &Certificate) -> String {
    let mut out = write_partition(c.answer, c.witness.as_ref());
    if let Some(r) = &c.reason {
        let _ = writeln!(out, "# reason: {r}");
    }
    if let Some(n) = &c.note {
        let _ = writeln!(out, "# note: {n}");
    }
    for t in &c.trace {
        let _ = writeln!(out, "# {t}");
    }
    out
}

/// Reads a certificate or a bare `v 1|2` mapping (answer defaults to yes).
/// When vertices are listed, every id in `0..n` must appear exactly once.
pub fn parse_partition(text: &str, n: usize) -> Result<(Answer, Option<TwoPartition>)> {
    let mut answer = None;
    let mut parts: Vec<Option<Part>> = vec![None; n];
    let mut any = false;
    for (ln, tokens) in content_lines(text) {
        if tokens[0] == "answer" {
            if answer.is_some() || any || tokens.len() != 2 {
                return Err(Error::parse(ln, "misplaced or malformed `answer` line"));
            }
            answer = Some(match tokens[1] {
                "yes" => Answer::Yes,
                "no" => Answer::No,
                other => return Err(Error::parse(ln, format!("unknown answer `{other}`"))),
            });
            continue;
        }
        if tokens.len() != 2 {
            return Err(Error::parse(ln, "expected `v 1|2`"));
        }
        let v: Vertex = number(ln, tokens[0])?;
        let part = number::<u8>(ln, tokens[1])
            .ok()
            .and_then(Part::from_index)
            .ok_or_else(|| Error::parse(ln, format!("part must be 1 or 2, found `{}`", tokens[1])))?;
        let slot = parts
            .get_mut(v)
            .ok_or_else(|| Error::parse(ln, format!("vertex {v} out of range 0..{n}")))?;
        if slot.replace(part).is_some() {
            return Err(Error::parse(ln, format!("vertex {v} listed twice")));
        }
        any = true;
    }
    let answer = answer.unwrap_or(Answer::Yes);
    if !any {
        return Ok((answer, None));
    }
    let parts = parts
        .into_iter()
        .enumerate()
        .map(|(v, p)| p.ok_or_else(|| Error::invalid(format!("vertex {v} has no part"))))
        .collect::<Result<Vec<_>>>()?;
    Ok((answer, Some(TwoPartition::new(parts))))
}

pub fn parse_dimacs(text: &str) -> Result<CnfFormula> {
    let mut header: Option<(usize, usize)> = None;
    let mut clauses: Vec<Clause> = Vec::new();
    let mut pending: Vec<Literal> = Vec::new();
    let mut last_line = 1;
    for (ln, line) in text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())) {
        last_line = ln;
        if line.is_empty() || line.starts_with('c') || line.starts_with('%') {
            continue;
        }
        if line.starts_with('p') {
            let t: Vec<&str> = line.split_whitespace().collect();
            if header.is_some() || t.len() != 4 || t[1] != "cnf" {
                return Err(Error::parse(ln, "expected a single `p cnf VARS CLAUSES` header"));
            }
            header = Some((number(ln, t[2])?, number(ln, t[3])?));
            continue;
        }
        let (vars, _) = header.ok_or_else(|| Error::parse(ln, "clause before the `p cnf` header"))?;
        for tok in line.split_whitespace() {
            let x: i64 = number(ln, tok)?;
            match Literal::from_dimacs(x) {
                Some(l) if l.var >= vars => {
                    return Err(Error::parse(ln, format!("literal {x} exceeds {vars} variables")));
                }
                Some(l) => pending.push(l),
                None => {
                    clauses.push(to_clause(ln, &pending)?);
                    pending.clear();
                }
            }
        }
    }
    if !pending.is_empty() {
        clauses.push(to_clause(last_line, &pending)?);
    }
    let (vars, count) = header.ok_or_else(|| Error::parse(1, "missing `p cnf` header"))?;
    if count != clauses.len() {
        return Err(Error::parse(
            last_line,
            format!("header announces {count} clauses, found {}", clauses.len()),
        ));
    }
    CnfFormula::new(vars, clauses)
}

fn to_clause(line: usize, lits: &[Literal]) -> Result<Clause> {
    match lits {
        [] => Err(Error::parse(line, "empty clause")),
        [a] => Ok([*a; 3]),
        [a, b] => Ok([*a, *b, *b]),
        [a, b, c] => Ok([*a, *b, *c]),
        _ => Err(Error::parse(
            line,
            format!("clause has {} literals, at most 3 allowed", lits.len()),
        )),
    }
}

pub fn write_dimacs(f: &CnfFormula) -> String {
    let mut out = format!("p cnf {} {}\n", f.num_vars(), f.clauses().len());
    for c in f.clauses() {
        let _ = writeln!(out, "{} {} {} 0", c[0].to_dimacs(), c[1].to_dimacs(), c[2].to_dimacs());
    }
    out
}

pub fn parse_hypergraph(text: &str) -> Result<Hypergraph> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or_else(|| Error::parse(1, "empty hypergraph file"))?;
    if header.len() != 3 || header[0] != "hypergraph" {
        return Err(Error::parse(hl, "header must be `hypergraph N r`"));
    }
    let (n, r): (usize, usize) = (number(hl, header[1])?, number(hl, header[2])?);
    let mut edges = Vec::new();
    for (ln, tokens) in lines {
        if tokens.len() != r {
            return Err(Error::parse(ln, format!("hyperedge must list {r} vertices")));
        }
        edges.push(tokens.iter().map(|t| number(ln, t)).collect::<Result<Vec<Vertex>>>()?);
    }
    Hypergraph::new(n, r, edges)
}

pub fn write_hypergraph(h: &Hypergraph) -> String {
    let mut out = format!("hypergraph {} {}\n", h.ground(), h.rank());
    for e in h.edges() {
        let ids: Vec<String> = e.iter().map(|v| v.to_string()).collect();
        let _ = writeln!(out, "{}", ids.join(" "));
    }
    out
}

pub fn write_labels(labels: &Labels) -> String {
    let mut out = String::new();
    for (name, v) in labels.iter() {
        let _ = writeln!(out, "{name} {v}");
    }
    out
}

pub fn parse_labels(text: &str) -> Result<Labels> {
    let mut labels = Labels::default();
    for (ln, tokens) in content_lines(text) {
        if tokens.len() != 2 {
            return Err(Error::parse(ln, "expected `name id`"));
        }
        labels.push(tokens[0], number(ln, tokens[1])?);
    }
    Ok(labels)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn instance_round_trip_is_sorted() {
        let text = "# sample\ndigraph 3\n2 0\n0 1\n\n";
        let i = parse_instance(text).unwrap();
        assert_eq!(write_instance(&i), "digraph 3\n0 1\n2 0\n");
        let g = parse_instance("graph 3\n2 1 # edge\n").unwrap();
        assert_eq!(write_instance(&g), "graph 3\n1 2\n");
    }

    #[test]
    fn instance_errors_carry_lines() {
        assert!(matches!(
            parse_instance("digraph 2\n0 5\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_instance("digraph 2\n1 1\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(parse_instance("tree 3\n").is_err());
        assert!(parse_instance("").is_err());
    }

    #[test]
    fn certificate_round_trip() {
        let p = TwoPartition::from_second_part(3, &[1]);
        let c = Certificate::yes(p.clone()).with_trace(vec!["search nodes: 4".into()]);
        let text = write_certificate(&c);
        assert!(text.starts_with("answer yes\n0 1\n1 2\n2 1\n"));
        assert_eq!(parse_partition(&text, 3).unwrap(), (Answer::Yes, Some(p)));
        assert!(parse_partition("0 1\n", 2).is_err());
        assert!(parse_partition("0 1\n0 2\n", 1).is_err());
        assert_eq!(parse_partition("answer no\n", 4).unwrap(), (Answer::No, None));
    }

    #[test]
    fn dimacs_padding_and_rejection() {
        let f = parse_dimacs("c hi\np cnf 2 2\n1 -2 0\n2\n0\n").unwrap();
        assert_eq!(f.clauses()[0], [Literal::pos(0), Literal::neg(1), Literal::neg(1)]);
        assert_eq!(f.clauses()[1], [Literal::pos(1); 3]);
        assert_eq!(parse_dimacs(&write_dimacs(&f)).unwrap(), f);
        assert!(parse_dimacs("p cnf 4 1\n1 2 3 4 0\n").is_err());
        assert!(parse_dimacs("p cnf 1 1\n0\n").is_err());
        assert!(parse_dimacs("p cnf 1 1\n2 0\n").is_err());
    }

    #[test]
    fn hypergraph_and_labels() {
        let h = parse_hypergraph("hypergraph 4 3\n0 1 2\n1 2 3\n").unwrap();
        assert_eq!(parse_hypergraph(&write_hypergraph(&h)).unwrap(), h);
        assert!(parse_hypergraph("hypergraph 4 3\n0 1\n").is_err());
        let mut l = Labels::default();
        l.push("x1", 0);
        l.push("~x1", 1);
        assert_eq!(parse_labels(&write_labels(&l)).unwrap(), l);
    }
}
