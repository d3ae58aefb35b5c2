//! Seeded poly-versus-exact cross-checks.

use std::fmt::Write as _;
use std::ops::RangeInclusive;

use anyhow::{bail, Result};
use bipart::graph::Instance;
use bipart::oracle::{check_partition, exact_decide, PartitionSpec, SpecKind};
use bipart::random::{random_digraph, random_graph, random_graph_min_degree, random_strong_digraph};
use bipart::Error;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::poly;

const DENSITIES: [f64; 2] = [0.2, 0.4];

pub struct Campaign {
    pub spec: PartitionSpec,
    pub sizes: RangeInclusive<usize>,
    pub trials: usize,
    pub seed: u64,
    pub strong: bool,
    pub budget: u64,
}

pub struct Report {
    pub text: String,
    /// The first disagreeing instance, if any.
    pub counterexample: Option<Instance>,
}

/// `a..b` (inclusive) or a single size.
pub fn parse_range(s: &str) -> Result<RangeInclusive<usize>> {
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (a.trim().parse()?, b.trim().trim_start_matches('=').parse()?),
        None => {
            let n = s.trim().parse()?;
            (n, n)
        }
    };
    if lo > hi {
        bail!("empty size range `{s}`");
    }
    Ok(lo..=hi)
}

fn draw(c: &Campaign, rng: &mut ChaCha8Rng) -> Instance {
    let n = rng.gen_range(c.sizes.clone());
    let p = *DENSITIES.choose(rng).expect("non-empty");
    match c.spec.kind {
        SpecKind::Und(a, b) => {
            // (1,k) with k != 2 is only polynomial above minimum degree k
            let k = a.max(b);
            if a.min(b) == 1 && k != 2 && k < n {
                Instance::Graph(random_graph_min_degree(n, p, k, rng))
            } else {
                Instance::Graph(random_graph(n, p, rng))
            }
        }
        _ if c.strong => Instance::Digraph(random_strong_digraph(n, p, 20, rng)),
        _ => Instance::Digraph(random_digraph(n, p, rng)),
    }
}

pub fn run(c: &Campaign) -> Result<Report> {
    if let Some(why) = poly::unsupported(&c.spec, c.strong) {
        bail!(why);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(c.seed);
    let (mut agree, mut overruns, mut skipped) = (0, 0, 0);
    let mut text = String::new();
    let mut counterexample = None;
    for trial in 0..c.trials {
        let instance = draw(c, &mut rng);
        let fast = match poly::decide(&instance, &c.spec, c.strong) {
            Ok(cert) => cert,
            Err(e)
                if e.downcast_ref::<Error>()
                    .is_some_and(|e| matches!(e, Error::ResourceExceeded(_))) =>
            {
                overruns += 1;
                continue;
            }
            Err(_) => {
                // outside the polynomial regime, e.g. a small graph below the degree bound
                skipped += 1;
                continue;
            }
        };
        let slow = match exact_decide(instance.as_ref(), &c.spec, c.budget) {
            Ok(cert) => cert,
            Err(Error::ResourceExceeded(_)) => {
                overruns += 1;
                continue;
            }
            Err(e) => return Err(e.into()),
        };
        let witness_ok = match &fast.witness {
            Some(w) => check_partition(instance.as_ref(), &c.spec, w)?.is_valid(),
            None => true,
        };
        if fast.answer == slow.answer && witness_ok {
            agree += 1;
            continue;
        }
        let _ = writeln!(
            text,
            "disagreement on trial {trial}: poly says {}{}, exact says {}",
            fast.answer,
            if witness_ok { "" } else { " with an invalid witness" },
            slow.answer
        );
        counterexample = Some(instance);
        break;
    }
    let compared = agree + usize::from(counterexample.is_some());
    let _ = writeln!(text, "spec: {}", c.spec.kind);
    let _ = writeln!(text, "seed: {}", c.seed);
    let _ = writeln!(text, "sizes: {}..{}", c.sizes.start(), c.sizes.end());
    let _ = writeln!(text, "resource overruns: {overruns}");
    let _ = writeln!(text, "outside poly regime: {skipped}");
    let _ = writeln!(text, "{agree}/{compared} agree");
    Ok(Report { text, counterexample })
}
