//! Dispatch to the polynomial deciders.

use anyhow::{bail, Result};
use bipart::directed::{inout11_strong_decide, out_total_partition, outdeg11_decide};
use bipart::graph::{is_strong, Instance, Part, TwoPartition};
use bipart::oracle::{Certificate, NoReason, PartitionSpec, SpecKind};
use bipart::undirected::{delta_12_decide, delta_1k_partition};

/// Why a spec has no polynomial route, or `None` if it has one for at
/// least some inputs. `strong` is the caller's promise that inputs are
/// strong digraphs.
pub fn unsupported(spec: &PartitionSpec, strong: bool) -> Option<String> {
    if !spec.pins.is_empty() {
        return Some("poly mode does not take pins".into());
    }
    match spec.kind {
        k if trivial(k).is_some() => None,
        SpecKind::Und(1, _) | SpecKind::Und(_, 1) | SpecKind::OutOut(1, 1) | SpecKind::OutTotal(1, 1) => None,
        SpecKind::OutIn(1, 1) if strong => None,
        SpecKind::OutIn(1, 1) => Some("out-in 1 1 is only polynomial on strong digraphs; pass --strong".into()),
        k => Some(format!("no polynomial algorithm for `{k}`")),
    }
}

/// A zero demand on one side is met by putting every vertex there.
fn trivial(kind: SpecKind) -> Option<Part> {
    match kind.demands()? {
        (_, 0) => Some(Part::Two),
        (0, _) => Some(Part::One),
        _ => None,
    }
}

pub fn decide(instance: &Instance, spec: &PartitionSpec, strong: bool) -> Result<Certificate> {
    if let Some(why) = unsupported(spec, strong) {
        bail!(why);
    }
    spec.validate_for(instance.as_ref())?;
    let n = instance.order();
    if let Some(part) = trivial(spec.kind) {
        return Ok(Certificate::yes(TwoPartition::uniform(n, part)));
    }
    Ok(match (instance, spec.kind) {
        (Instance::Graph(g), SpecKind::Und(1, 2)) => delta_12_decide(g)?,
        (Instance::Graph(g), SpecKind::Und(2, 1)) => swapped(delta_12_decide(g)?),
        (Instance::Graph(g), SpecKind::Und(a, b)) => {
            let k = a.max(b);
            if g.min_degree() < k && g.min_degree() > 0 {
                bail!("und 1 {k} is only polynomial when the minimum degree is at least {k}");
            }
            let cert = delta_1k_partition(g, k)?;
            if a == 1 {
                cert
            } else {
                swapped(cert)
            }
        }
        (Instance::Digraph(d), SpecKind::OutOut(1, 1)) => outdeg11_decide(d)?,
        (Instance::Digraph(d), SpecKind::OutIn(1, 1)) => {
            if !is_strong(d) {
                bail!("input digraph is not strong");
            }
            inout11_strong_decide(d)?
        }
        (Instance::Digraph(d), SpecKind::OutTotal(1, 1)) => match d.vertices().find(|&v| d.neighbor_count(v) == 0) {
            Some(v) => Certificate::no(NoReason::IsolatedVertex(v)),
            None => Certificate::yes(out_total_partition(d)?),
        },
        _ => unreachable!("validated above"),
    })
}

fn swapped(mut cert: Certificate) -> Certificate {
    cert.witness = cert.witness.map(|p| p.swapped());
    cert
}

#[cfg(test)]
mod tests {
    use super::*;
    use bipart::graph::{Digraph, Graph};
    use bipart::oracle::check_partition;

    #[test]
    fn zero_demand_is_trivial() {
        let d = Instance::Digraph(Digraph::from_arcs(3, [(0, 1)]).unwrap());
        let spec = PartitionSpec::new(SpecKind::OutOut(1, 0));
        let cert = decide(&d, &spec, false).unwrap();
        assert_eq!(cert.witness, Some(TwoPartition::uniform(3, Part::Two)));
    }

    #[test]
    fn mirrored_undirected_specs_swap_witness() {
        let g = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let spec = PartitionSpec::new(SpecKind::Und(2, 1));
        let cert = decide(&Instance::Graph(g.clone()), &spec, false).unwrap();
        let w = cert.witness.expect("a path has a (2,1) partition");
        assert!(check_partition(&g, &spec, &w).unwrap().is_valid());
    }

    #[test]
    fn refusals() {
        let spec = PartitionSpec::new(SpecKind::OutIn(1, 1));
        assert!(unsupported(&spec, false).is_some());
        assert!(unsupported(&spec, true).is_none());
        assert!(unsupported(&PartitionSpec::new(SpecKind::StrongB), true).is_some());
        assert!(unsupported(&PartitionSpec::new(SpecKind::OutOut(1, 1)).pin(0, Part::One), false).is_some());
        let triangle_plus = Graph::from_edges(4, [(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap();
        assert!(decide(
            &Instance::Graph(triangle_plus),
            &PartitionSpec::new(SpecKind::Und(1, 3)),
            false
        )
        .is_err());
    }
}
