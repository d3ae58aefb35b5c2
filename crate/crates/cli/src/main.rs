//! `bipart`: decide, generate, verify and fuzz vertex 2-partition problems.
//!
//! Exit codes: 0 for yes / valid / agreement, 1 for no / violations /
//! disagreement, 2 for any error.

mod fuzz;
mod gadget;
mod poly;

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use bipart::graph::{is_strong, Instance, Part, Vertex};
use bipart::io::{parse_instance, parse_partition, write_certificate, write_instance, write_labels};
use bipart::oracle::{budget_from_env, check_partition, exact_decide, Answer, PartitionSpec, SpecKind};
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "bipart", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide whether an instance has a partition meeting a spec.
    Decide {
        /// Instance file in edge-list format.
        input: PathBuf,
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long, value_enum, default_value_t = Mode::Exact)]
        mode: Mode,
    },
    /// Generate a reduction instance.
    Gadget(gadget::GadgetArgs),
    /// Check a partition file against a spec.
    Verify {
        input: PathBuf,
        partition: PathBuf,
        #[command(flatten)]
        spec: SpecArgs,
    },
    /// Compare the polynomial decider with exact search on random instances.
    Fuzz {
        #[command(flatten)]
        spec: SpecArgs,
        /// Vertex counts, `a..b` inclusive.
        #[arg(long, default_value = "4..8")]
        n: String,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write the first disagreeing instance here as well as to stdout.
        #[arg(long)]
        dump: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Poly,
    Exact,
}

#[derive(Debug, clap::Args)]
struct SpecArgs {
    /// e.g. "out-in 1 1", "und 1 2", "strong-b".
    #[arg(long)]
    spec: String,
    /// Fix a vertex's part, `v=1` or `v=2`; repeatable.
    #[arg(long = "pin", value_parser = parse_pin)]
    pins: Vec<(Vertex, Part)>,
    /// Require (and, for fuzzing, generate) strong digraphs.
    #[arg(long)]
    strong: bool,
}

impl SpecArgs {
    fn spec(&self) -> Result<PartitionSpec> {
        let kind: SpecKind = self.spec.parse()?;
        Ok(self
            .pins
            .iter()
            .fold(PartitionSpec::new(kind), |s, &(v, p)| s.pin(v, p)))
    }
}

fn parse_pin(s: &str) -> std::result::Result<(Vertex, Part), String> {
    let (v, p) = s.split_once('=').ok_or("expected v=1 or v=2")?;
    let v = v.trim().parse().map_err(|_| format!("bad vertex `{v}`"))?;
    let p = p
        .trim()
        .parse()
        .ok()
        .and_then(Part::from_index)
        .ok_or(format!("bad part `{p}`"))?;
    Ok((v, p))
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn write(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

fn load(path: &Path, strong: bool) -> Result<Instance> {
    let instance = parse_instance(&read(path)?).with_context(|| format!("parsing {}", path.display()))?;
    if strong {
        match &instance {
            Instance::Digraph(d) if is_strong(d) => {}
            Instance::Digraph(_) => bail!("{} is not strong", path.display()),
            Instance::Graph(_) => bail!("--strong applies to digraphs only"),
        }
    }
    Ok(instance)
}

fn decide(input: &Path, args: &SpecArgs, mode: Mode) -> Result<ExitCode> {
    let spec = args.spec()?;
    let instance = load(input, args.strong)?;
    let cert = match mode {
        Mode::Poly => poly::decide(&instance, &spec, args.strong || is_strong_digraph(&instance))?,
        Mode::Exact => exact_decide(instance.as_ref(), &spec, budget_from_env())?,
    };
    print!("{}", write_certificate(&cert));
    Ok(if cert.is_yes() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn is_strong_digraph(i: &Instance) -> bool {
    matches!(i, Instance::Digraph(d) if is_strong(d))
}

fn make_gadget(args: &gadget::GadgetArgs) -> Result<ExitCode> {
    let built = gadget::build(args)?;
    let labels_path = args.labels.clone().unwrap_or_else(|| {
        let mut p = args.out.clone().into_os_string();
        p.push(".labels");
        p.into()
    });
    write(&args.out, &write_instance(&built.instance))?;
    write(&labels_path, &write_labels(&built.labels))?;
    let (kind, size) = match &built.instance {
        Instance::Digraph(d) => ("digraph", format!("{} arcs", d.arc_count())),
        Instance::Graph(g) => ("graph", format!("{} edges", g.edge_count())),
    };
    let mut msg = format!("{kind} with {} vertices and {size}", built.instance.order());
    if !built.pins.is_empty() {
        msg.push_str("; decide with");
        for (v, p) in &built.pins {
            let _ = write!(msg, " --pin {v}={p}");
        }
    }
    println!("{msg}");
    Ok(ExitCode::SUCCESS)
}

fn verify(input: &Path, partition: &Path, args: &SpecArgs) -> Result<ExitCode> {
    let spec = args.spec()?;
    let instance = load(input, args.strong)?;
    let (answer, witness) = parse_partition(&read(partition)?, instance.order())?;
    let p = match (answer, witness) {
        (_, Some(p)) => p,
        (Answer::No, None) => bail!("certificate answers no and carries no partition to check"),
        (Answer::Yes, None) => bail!("partition file lists no vertices"),
    };
    let report = check_partition(instance.as_ref(), &spec, &p)?;
    if report.is_valid() {
        println!("ok");
        return Ok(ExitCode::SUCCESS);
    }
    for v in &report.violations {
        println!("violation: {v}");
    }
    Ok(ExitCode::from(1))
}

fn run_fuzz(args: &SpecArgs, n: &str, trials: usize, seed: u64, dump: Option<&Path>) -> Result<ExitCode> {
    let campaign = fuzz::Campaign {
        spec: args.spec()?,
        sizes: fuzz::parse_range(n).map_err(|e| anyhow!("bad --n `{n}`: {e}"))?,
        trials,
        seed,
        strong: args.strong,
        budget: budget_from_env(),
    };
    let report = fuzz::run(&campaign)?;
    print!("{}", report.text);
    match report.counterexample {
        None => Ok(ExitCode::SUCCESS),
        Some(instance) => {
            let text = write_instance(&instance);
            print!("{text}");
            if let Some(path) = dump {
                write(path, &text)?;
            }
            Ok(ExitCode::from(1))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let result = match &cli.command {
        Command::Decide { input, spec, mode } => decide(input, spec, *mode),
        Command::Gadget(args) => make_gadget(args),
        Command::Verify { input, partition, spec } => verify(input, partition, spec),
        Command::Fuzz {
            spec,
            n,
            trials,
            seed,
            dump,
        } => run_fuzz(spec, n, *trials, *seed, dump.as_deref()),
    };
    result.unwrap_or_else(|e| {
        eprintln!("error: {e:#}");
        ExitCode::from(2)
    })
}
