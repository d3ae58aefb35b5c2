//! `gadget` subcommand: builds a reduction instance and its label map.

use std::collections::BTreeMap;
use std::path::PathBuf;

use anyhow::{anyhow, bail, Context, Result};
use bipart::gadgets::{
    acyclic_inout_instance, eulerian_counterexample, gadget_gr, hypergraph_instance, lift_k1k2, pattern_instance,
    strong_22_instance, strong_22_instance_verbatim, strong_outin_k1_instance, und_1k_instance, und_nae_instance,
    w_instance, w_prime_instance, Labels,
};
use bipart::graph::{Digraph, Instance, Part, Vertex};
use bipart::io::{parse_dimacs, parse_hypergraph, parse_instance};
use bipart::oracle::{CnfFormula, Hypergraph};
use clap::{Args, ValueEnum};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Generator {
    /// Acyclic out-in (1,1) instance from a CNF formula.
    MOfF,
    /// Undirected (k1,k2) instance from a NAE-3-SAT formula.
    UndNae,
    /// Undirected (1,k) instance from a 3-SAT formula.
    #[value(name = "und-1k")]
    Und1k,
    /// Pinned acyclic instance (pins a=2, b=1).
    W,
    /// Acyclic instance with the single pin c=2.
    WPrime,
    /// Instance whose condensation is a given pattern digraph.
    Pattern,
    /// Strong out-in (k1,1) instance.
    Q,
    /// Strong out-in (2,2) instance.
    Q22,
    /// Raises both out-in demands by one.
    Lift,
    /// The r-strong host gadget G_r over a digraph and vertex set.
    Gr,
    /// Eulerian r-strong digraph without a strong crossing subdigraph.
    EulerCounterexample,
    /// Eulerian instance from a hypergraph 2-colouring problem.
    Hypergraph,
}

#[derive(Debug, Args)]
pub struct GadgetArgs {
    #[arg(value_enum)]
    pub generator: Generator,
    /// DIMACS CNF source formula.
    #[arg(long)]
    pub cnf: Option<PathBuf>,
    /// Source (di)graph in edge-list format.
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Source hypergraph.
    #[arg(long)]
    pub hypergraph: Option<PathBuf>,
    #[arg(long)]
    pub k1: Option<usize>,
    #[arg(long)]
    pub k2: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub r: Option<usize>,
    /// Comma-separated vertex set for `gr`.
    #[arg(long, value_delimiter = ',')]
    pub x: Vec<Vertex>,
    /// Build the unrepaired `q22` construction.
    #[arg(long)]
    pub verbatim: bool,
    /// Instance output file.
    #[arg(long)]
    pub out: PathBuf,
    /// Label map output file (default: `<out>.labels`).
    #[arg(long)]
    pub labels: Option<PathBuf>,
}

pub struct Built {
    pub instance: Instance,
    pub labels: Labels,
    pub pins: BTreeMap<Vertex, Part>,
}

fn read(path: &Option<PathBuf>, flag: &str) -> Result<String> {
    let path = path.as_ref().ok_or_else(|| anyhow!("this generator needs --{flag}"))?;
    std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn cnf(a: &GadgetArgs) -> Result<CnfFormula> {
    Ok(parse_dimacs(&read(&a.cnf, "cnf")?)?)
}

fn hyper(a: &GadgetArgs) -> Result<Hypergraph> {
    Ok(parse_hypergraph(&read(&a.hypergraph, "hypergraph")?)?)
}

fn digraph(a: &GadgetArgs) -> Result<Digraph> {
    match parse_instance(&read(&a.input, "input")?)? {
        Instance::Digraph(d) => Ok(d),
        Instance::Graph(_) => bail!("--input must be a digraph"),
    }
}

pub fn build(a: &GadgetArgs) -> Result<Built> {
    macro_rules! wrap {
        ($g:expr, $variant:ident) => {{
            let g = $g;
            Built {
                instance: Instance::$variant(g.instance),
                labels: g.labels,
                pins: g.pins,
            }
        }};
    }
    Ok(match a.generator {
        Generator::MOfF => wrap!(acyclic_inout_instance(&cnf(a)?), Digraph),
        Generator::UndNae => wrap!(und_nae_instance(&cnf(a)?, a.k1.unwrap_or(2), a.k2.unwrap_or(2))?, Graph),
        Generator::Und1k => wrap!(und_1k_instance(&cnf(a)?, a.k.unwrap_or(3))?, Graph),
        Generator::W => wrap!(w_instance(&cnf(a)?)?, Digraph),
        Generator::WPrime => wrap!(w_prime_instance(&cnf(a)?)?, Digraph),
        Generator::Pattern => wrap!(pattern_instance(&digraph(a)?, &cnf(a)?)?, Digraph),
        Generator::Q => wrap!(strong_outin_k1_instance(&cnf(a)?, a.k1.unwrap_or(2))?, Digraph),
        Generator::Q22 if a.verbatim => wrap!(strong_22_instance_verbatim(&cnf(a)?)?, Digraph),
        Generator::Q22 => wrap!(strong_22_instance(&cnf(a)?)?, Digraph),
        Generator::Lift => wrap!(lift_k1k2(&digraph(a)?), Digraph),
        Generator::Gr => wrap!(gadget_gr(&digraph(a)?, &a.x)?, Digraph),
        Generator::EulerCounterexample => {
            let r = a.r.ok_or_else(|| anyhow!("this generator needs --r"))?;
            let u = a.input.as_ref().map(|_| digraph(a)).transpose()?;
            wrap!(eulerian_counterexample(r, u.as_ref())?, Digraph)
        }
        Generator::Hypergraph => wrap!(hypergraph_instance(&hyper(a)?)?, Digraph),
    })
}
